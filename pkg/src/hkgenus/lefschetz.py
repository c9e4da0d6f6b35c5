"""The sl(2) decomposition of hyper-Kahler cohomology, at multiplicity level.

Cup product with the holomorphic 2-form raises p by 2 within each column q of
the Hodge diamond; together with the contraction it generates an sl(2) action
whose decomposition theorem splits every column into irreducible strings.  The
primitive (highest weight) subspace sitting at (p, q), 0 <= p <= n, generates
the (n-p+1)-dimensional irreducible, and a straightforward count gives its
multiplicity:

    prim(p, q) = h^{p,q} - h^{p-2,q}    (with h^{p,q} = 0 for p < 0).

Negative values mean the table cannot come from a hyper-Kahler manifold.

The graded trace of an SL(2) element U on the decomposed cohomology, with
grading (-1)^{p+q}, is a polynomial S(t) in the trace t of U.  This module
computes S two independent ways (the primitive form and a telescoped rewrite
over the diamond itself), insists they agree, and verifies exactly that

    S(y + 1/y) = chi_{-y} / y^n

as Laurent polynomials, which proves the identity for every U simultaneously
because both sides depend on U only through its trace.  Specializing U to an
integer matrix gives the mapping-torus invariant of Rozansky-Witten type.

Only multiplicities are represented here; the raising and lowering operators
themselves, and the form spaces they act on, are out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import (
    InputError,
    InternalInconsistencyError,
    NegativePrimitiveError,
    ValidationError,
)
from .hodge import HodgeDiamond, ValidationLevel
from .laurent import LaurentPolynomial, substitute_y_plus_yinv
from .sl2 import SL2Element, character


@dataclass(frozen=True)
class PrimitiveTable:
    """Multiplicities prim(p, q) of highest-weight vectors, 0 <= p <= n.

    Row p lists, across the 2n+1 columns q, how many copies of the
    (n-p+1)-dimensional irreducible start at (p, q).
    """

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if self.n < 1:
            raise InputError(f"n must be positive, got {self.n}")
        if len(rows) != self.n + 1:
            raise InputError(f"expected {self.n + 1} rows, got {len(rows)}")
        for p, row in enumerate(rows):
            if len(row) != 2 * self.n + 1:
                raise InputError(
                    f"row {p} has length {len(row)}, expected {2 * self.n + 1}")
            for q, value in enumerate(row):
                if not isinstance(value, int) or isinstance(value, bool):
                    raise InputError(f"entry ({p}, {q}) is not an integer: {value!r}")
                if value < 0:
                    raise NegativePrimitiveError(p, q, value)

    def multiplicity(self, p: int, q: int) -> int:
        return self.rows[p][q]

    def representation_dimension(self, p: int) -> int:
        """Dimension of the irreducible generated at row p."""
        return self.n - p + 1


def negative_primitive_cells(d: HodgeDiamond) -> Iterator[tuple[int, int, int]]:
    """Yield (p, q, value) for every negative h^{p,q} - h^{p-2,q}, p <= n."""
    for p in range(d.n + 1):
        for q in range(d.side):
            value = d.rows[p][q] - (d.rows[p - 2][q] if p >= 2 else 0)
            if value < 0:
                yield (p, q, value)


def primitive_multiplicities(d: HodgeDiamond) -> PrimitiveTable:
    """The table prim(p, q) = h^{p,q} - h^{p-2,q} for 0 <= p <= n.

    Requires the symmetry invariants to hold; raises NegativePrimitiveError
    when any entry comes out negative (the input then lies outside the
    hyper-Kahler domain, a hard-Lefschetz violation for the 2-form).
    """
    symmetry = d.symmetry_violations()
    if symmetry:
        raise ValidationError(
            "primitive multiplicities need a symmetric, nonnegative table:\n"
            + "\n".join(f"  {v}" for v in symmetry))
    for p, q, value in negative_primitive_cells(d):
        raise NegativePrimitiveError(p, q, value)
    rows = tuple(
        tuple(d.rows[p][q] - (d.rows[p - 2][q] if p >= 2 else 0)
              for q in range(d.side))
        for p in range(d.n + 1)
    )
    return PrimitiveTable(d.n, rows)


def reconstruct_diamond(pt: PrimitiveTable) -> HodgeDiamond:
    """Rebuild the Hodge table from primitive multiplicities.

    For p <= n each irreducible string starting at (p - 2j, q) contributes one
    dimension, so h^{p,q} = sum_j prim(p-2j, q); rows past the middle are read
    through the column symmetry h^{p,q} = h^{2n-p,q}.  Exact inverse of
    :func:`primitive_multiplicities` on every valid input.
    """
    n = pt.n
    side = 2 * n + 1
    rows = [[0] * side for _ in range(side)]
    for p in range(n + 1):
        for q in range(side):
            rows[p][q] = sum(pt.rows[p - 2 * j][q] for j in range(p // 2 + 1))
    for p in range(n + 1, side):
        rows[p] = list(rows[2 * n - p])
    return HodgeDiamond(tuple(tuple(r) for r in rows))


def supertrace_via_primitives(d: HodgeDiamond) -> LaurentPolynomial:
    """S(t) = sum_{q} sum_{p=0}^{n} (-1)^{p+q} t_{n-p+1} prim(p, q)."""
    pt = primitive_multiplicities(d)
    n = pt.n
    total = LaurentPolynomial.zero()
    for p in range(n + 1):
        weight = sum((-1) ** (p + q) * pt.rows[p][q] for q in range(2 * n + 1))
        total = total + character(n - p + 1) * weight
    return total


def supertrace_via_rewrite(d: HodgeDiamond) -> LaurentPolynomial:
    """S(t) = sum_{q} sum_{p=0}^{n} (-1)^{p+q} h^{p,q} (t_{n-p+1} - t_{n-p-1}).

    The telescoped form over the diamond itself, with t_r = 0 for r <= 0.
    Note the p = n term carries the sign (-1)^{n+q}; this convention is forced
    by the telescoping (and by the K3 case, whose middle term must contribute
    +20, not -20).
    """
    n = d.n
    total = LaurentPolynomial.zero()
    for p in range(n + 1):
        weight = sum((-1) ** (p + q) * d.rows[p][q] for q in range(2 * n + 1))
        total = total + (character(n - p + 1) - character(n - p - 1)) * weight
    return total


def supertrace_polynomial(d: HodgeDiamond) -> LaurentPolynomial:
    """S(t), computed by both routes and checked for exact agreement.

    Disagreement between the primitive form and the rewrite cannot be caused
    by input data and raises InternalInconsistencyError.
    """
    primitive_form = supertrace_via_primitives(d)
    rewritten_form = supertrace_via_rewrite(d)
    if primitive_form != rewritten_form:
        raise InternalInconsistencyError(
            "supertrace forms disagree: "
            f"primitive {primitive_form.to_string('t')} vs "
            f"rewrite {rewritten_form.to_string('t')}")
    return primitive_form


@dataclass(frozen=True)
class IdentityReport:
    """Both sides of the supertrace identity, compared exactly."""

    passed: bool
    supertrace: LaurentPolynomial  # S(t), polynomial in the trace variable
    lhs: LaurentPolynomial         # S(y + 1/y)
    rhs: LaurentPolynomial         # chi_{-y} / y^n
    name: str | None = None


def verify_supertrace_identity(d: HodgeDiamond) -> IdentityReport:
    """Check S(y + 1/y) = chi_{-y} / y^n as exact Laurent polynomials.

    A pass certifies the graded-trace identity for every SL(2) element at
    once, since both sides depend on the element only through its trace.
    """
    d.require_valid(ValidationLevel.STRUCTURAL)
    s_t = supertrace_polynomial(d)
    lhs = substitute_y_plus_yinv(s_t)
    rhs = d.normalized_genus()
    return IdentityReport(lhs == rhs, s_t, lhs, rhs, d.name)


def supertrace_value(d: HodgeDiamond, u: SL2Element) -> int:
    """The graded trace of u: S(trace(u)), always an integer."""
    return int(supertrace_polynomial(d).evaluate(u.trace))


@dataclass(frozen=True)
class RozanskyWittenResult:
    """The mapping-torus invariant for monodromy u, plus S(t) symbolically.

    The invariant depends on u only through its trace, hence is constant on
    conjugacy classes; the polynomial lets callers tabulate over them.
    """

    value: int
    supertrace: LaurentPolynomial
    trace: int


def rozansky_witten_invariant(d: HodgeDiamond, u: SL2Element) -> RozanskyWittenResult:
    """The mapping-torus invariant of the integer monodromy u.

    Requires STRICT validity: the invariant is only defined for irreducible
    compact hyper-Kahler Hodge structures.
    """
    d.require_valid(ValidationLevel.STRICT)
    s_t = supertrace_polynomial(d)
    return RozanskyWittenResult(int(s_t.evaluate(u.trace)), s_t, u.trace)
