"""Hodge diamonds of compact hyper-Kahler 2n-folds and the chi_y genus.

The diamond is the full table h^{p,q} = dim H^q(X, Omega_X^p) of a compact
complex manifold of complex dimension 2n (real dimension 4n).  Only this
dimension data is modeled, never the manifold, its metric or its 2-form.

A diamond coming from a compact hyper-Kahler X obeys three exact symmetries:

* Serre duality            h^{p,q} = h^{2n-p,2n-q}
* conjugation (Kahler)     h^{p,q} = h^{q,p}
* column symmetry          h^{p,q} = h^{2n-p,q}

The last one is special to the holomorphic symplectic situation: cup product
with the 2-form moves p by 2 while fixing q, and the resulting sl(2) action
reflects every column about its middle.  Validation comes in two levels:
STRUCTURAL checks the symmetries plus nonnegativity of the induced primitive
multiplicities, STRICT additionally pins the corner values that irreducibility
forces (h^{0,0} = 1, h^{1,0} = 0, h^{2,0} = 1).

The chi_y genus is the polynomial sum_{p,q} (-1)^q h^{p,q} y^p.  Its values at
y = -1, 0, 1 are the Euler characteristic, the Todd genus and the signature.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import DimensionMismatchError, ValidationError
from .laurent import LaurentPolynomial


class ValidationLevel(enum.Enum):
    STRUCTURAL = "structural"
    STRICT = "strict"


@dataclass(frozen=True)
class Violation:
    """One violated invariant, located at table entry (p, q)."""

    kind: str
    p: int
    q: int
    message: str

    def __str__(self) -> str:
        return f"[{self.kind}] at (p={self.p}, q={self.q}): {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    level: ValidationLevel
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        if self.ok:
            return f"pass ({self.level.value})"
        lines = [f"fail ({self.level.value}), {len(self.violations)} violation(s):"]
        lines.extend(f"  {v}" for v in self.violations)
        return "\n".join(lines)


class ClassicalValues(NamedTuple):
    euler: int
    todd_genus: int
    signature: int


@dataclass(frozen=True)
class HodgeDiamond:
    """The (2n+1) x (2n+1) table h^{p,q}, rows indexed by p, columns by q.

    Construction enforces only the shape (square, odd side >= 3, integer
    entries); the symmetry and positivity invariants are checked explicitly
    through :meth:`validate` so that deliberately broken tables can be built
    and reported on.
    """

    rows: tuple[tuple[int, ...], ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        side = len(rows)
        if side < 3 or side % 2 == 0:
            raise DimensionMismatchError(
                f"table side must be odd and at least 3 (real dimension 4n, n >= 1); got {side}"
            )
        for p, row in enumerate(rows):
            if len(row) != side:
                raise DimensionMismatchError(
                    f"row {p} has length {len(row)}, expected {side}"
                )
            for q, value in enumerate(row):
                if not isinstance(value, int) or isinstance(value, bool):
                    raise DimensionMismatchError(
                        f"entry ({p}, {q}) is not an integer: {value!r}"
                    )

    @property
    def n(self) -> int:
        """Half the complex dimension (the manifold has real dimension 4n)."""
        return (len(self.rows) - 1) // 2

    @property
    def side(self) -> int:
        return len(self.rows)

    def entry(self, p: int, q: int) -> int:
        if not (0 <= p < self.side and 0 <= q < self.side):
            raise IndexError(f"(p, q) = ({p}, {q}) outside 0..{self.side - 1}")
        return self.rows[p][q]

    def with_name(self, name: str | None) -> "HodgeDiamond":
        return HodgeDiamond(self.rows, name)

    def __str__(self) -> str:
        # Classic diamond rendering: antidiagonals p+q = const, top is (0,0).
        side = self.side
        cells = [[str(self.rows[p][d - p]) for p in range(max(0, d - side + 1), min(d, side - 1) + 1)]
                 for d in range(2 * side - 1)]
        width = max(len(s) for row in cells for s in row)
        lines = []
        for row in cells:
            pad = " " * ((side - len(row)) * (width + 1) // 2)
            lines.append(pad + " ".join(s.rjust(width) for s in row))
        return "\n".join(lines)

    # -- validation ----------------------------------------------------------

    def symmetry_violations(self) -> tuple[Violation, ...]:
        """Nonnegativity plus the three symmetries; no primitive check."""
        n, rows = self.n, self.rows
        side = self.side
        found: list[Violation] = []
        for p in range(side):
            for q in range(side):
                if rows[p][q] < 0:
                    found.append(Violation(
                        "negative_entry", p, q,
                        f"h^{{{p},{q}}} = {rows[p][q]} is negative"))
        for p in range(side):
            for q in range(side):
                if rows[p][q] != rows[2 * n - p][2 * n - q]:
                    found.append(Violation(
                        "serre", p, q,
                        f"h^{{{p},{q}}} = {rows[p][q]} != {rows[2*n-p][2*n-q]} = h^{{{2*n-p},{2*n-q}}}"))
                if rows[p][q] != rows[q][p]:
                    found.append(Violation(
                        "conjugation", p, q,
                        f"h^{{{p},{q}}} = {rows[p][q]} != {rows[q][p]} = h^{{{q},{p}}}"))
                if rows[p][q] != rows[2 * n - p][q]:
                    found.append(Violation(
                        "column_symmetry", p, q,
                        f"h^{{{p},{q}}} = {rows[p][q]} != {rows[2*n-p][q]} = h^{{{2*n-p},{q}}}"))
        return tuple(found)

    def validate(self, level: ValidationLevel = ValidationLevel.STRUCTURAL) -> ValidationReport:
        """Check the invariants the stated level requires.

        STRUCTURAL: nonnegative entries, the three symmetries, and (when the
        symmetries hold) nonnegativity of every primitive multiplicity.
        STRICT: STRUCTURAL plus the irreducibility corner values.
        """
        found = list(self.symmetry_violations())
        if not found:
            # Deferred import: the primitive count lives with the sl(2)
            # decomposition machinery.
            from .lefschetz import negative_primitive_cells

            for p, q, value in negative_primitive_cells(self):
                found.append(Violation(
                    "negative_primitive", p, q,
                    f"h^{{{p},{q}}} - h^{{{p-2},{q}}} = {value} is negative"))
        if level is ValidationLevel.STRICT:
            for (p, q, want) in ((0, 0, 1), (1, 0, 0), (2, 0, 1)):
                if self.rows[p][q] != want:
                    found.append(Violation(
                        "irreducibility", p, q,
                        f"h^{{{p},{q}}} = {self.rows[p][q]}, irreducibility forces {want}"))
        return ValidationReport(level, tuple(found))

    def require_valid(self, level: ValidationLevel = ValidationLevel.STRUCTURAL):
        report = self.validate(level)
        if not report.ok:
            raise ValidationError(report.summary(), report=report)

    # -- genus ---------------------------------------------------------------

    def chi_y(self) -> LaurentPolynomial:
        """The chi_y genus: coefficient of y^p is sum_q (-1)^q h^{p,q}.

        Requires STRUCTURAL validity; the result has degree at most 2n and
        equal leading and trailing coefficients (column symmetry).
        """
        self.require_valid(ValidationLevel.STRUCTURAL)
        coeffs = {
            p: sum((-1) ** q * c for q, c in enumerate(row))
            for p, row in enumerate(self.rows)
        }
        return LaurentPolynomial(coeffs)

    def classical_values(self) -> ClassicalValues:
        """(Euler characteristic, Todd genus, signature) = chi_y at -1, 0, 1."""
        genus = self.chi_y()
        return ClassicalValues(
            euler=int(genus.evaluate(-1)),
            todd_genus=genus.coefficient(0),
            signature=int(genus.evaluate(1)),
        )

    def normalized_genus(self) -> LaurentPolynomial:
        """chi_{-y} / y^n, a palindromic Laurent polynomial in y.

        Palindromicity (invariance under y -> 1/y) is exactly the column
        symmetry h^{p,q} = h^{2n-p,q} read through the genus.
        """
        return self.chi_y().negate_variable().shifted(-self.n)
