"""Integer SL(2) elements, their traces, and irreducible characters.

The graded trace machinery never extracts eigenvalues as numbers: for trace t
with |t| <= 1 they are complex, for |t| >= 3 quadratic irrationals.  Instead
everything is expressed through the character polynomials t_r (the trace of an
element in the r-dimensional irreducible representation), which satisfy the
Chebyshev-style recursion

    t_1 = 1,  t_2 = t,  t_{r+1} = t * t_r - t_{r-1},

with the convention t_r = 0 for r <= 0.  The bridge to eigenvalues is the
exact substitution t = y + 1/y (equivalently t*y = y^2 + 1, the characteristic
polynomial), under which t_{r+1} - t_{r-1} = y^r + y^-r.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .errors import InputError
from .laurent import LaurentPolynomial, substitute_y_plus_yinv


@dataclass(frozen=True)
class SL2Element:
    """An integer 2x2 matrix (a b; c d) with determinant one."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for field_name in ("a", "b", "c", "d"):
            value = getattr(self, field_name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise InputError(f"matrix entry {field_name} must be an integer, got {value!r}")
        det = self.a * self.d - self.b * self.c
        if det != 1:
            raise InputError(f"determinant must be 1, got {det}")

    @classmethod
    def identity(cls) -> "SL2Element":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_string(cls, text: str) -> "SL2Element":
        """Parse the row-major syntax "a,b;c,d" (integers only)."""
        rows = text.strip().split(";")
        if len(rows) != 2:
            raise InputError(f'matrix must have two rows "a,b;c,d", got {text!r}')
        entries: list[int] = []
        for row in rows:
            parts = row.split(",")
            if len(parts) != 2:
                raise InputError(f'each matrix row needs two entries, got {row!r}')
            for part in parts:
                try:
                    entries.append(int(part.strip()))
                except ValueError:
                    raise InputError(f"matrix entry {part.strip()!r} is not an integer") from None
        return cls(*entries)

    def to_string(self) -> str:
        return f"{self.a},{self.b};{self.c},{self.d}"

    @property
    def trace(self) -> int:
        return self.a + self.d

    def __matmul__(self, other: "SL2Element") -> "SL2Element":
        return SL2Element(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "SL2Element":
        return SL2Element(self.d, -self.b, -self.c, self.a)

    def conjugate_by(self, g: "SL2Element") -> "SL2Element":
        """Return g @ self @ g^-1."""
        return g @ self @ g.inverse()


def eigenvalue_polynomial(u: SL2Element) -> LaurentPolynomial:
    """The characteristic polynomial y^2 - t*y + 1, t = trace(u).

    Both eigenvalues are roots; their product is the determinant, 1, which is
    why the constant term is always 1.
    """
    return LaurentPolynomial({2: 1, 1: -u.trace, 0: 1})


# Character table in the trace variable, grown on demand.  Write-once cache
# with deterministic contents, guarded for concurrent first use.
_CHAR_LOCK = threading.Lock()
_CHAR_TABLE: list[LaurentPolynomial] = [
    LaurentPolynomial.zero(),   # r = 0
    LaurentPolynomial.one(),    # r = 1
    LaurentPolynomial.variable(),  # r = 2, the trace itself
]


def character(r: int) -> LaurentPolynomial:
    """The character t_r of the r-dimensional irreducible, as a polynomial in t.

    t_r = 0 for r <= 0; for r >= 1 the degree of t_r is r - 1.
    """
    if not isinstance(r, int) or isinstance(r, bool):
        raise InputError(f"representation dimension must be an integer, got {r!r}")
    if r <= 0:
        return LaurentPolynomial.zero()
    if r < len(_CHAR_TABLE):
        return _CHAR_TABLE[r]
    t = LaurentPolynomial.variable()
    with _CHAR_LOCK:
        while len(_CHAR_TABLE) <= r:
            _CHAR_TABLE.append(t * _CHAR_TABLE[-1] - _CHAR_TABLE[-2])
    return _CHAR_TABLE[r]


def verify_character_identity(r: int) -> bool:
    """Check t_{r+1} - t_{r-1} = y^r + y^-r exactly, for r >= 1.

    The comparison happens at the Laurent-polynomial level after substituting
    t = y + 1/y, so it certifies the identity for every element at once.
    """
    if not isinstance(r, int) or isinstance(r, bool) or r < 1:
        raise InputError(f"r must be a positive integer, got {r!r}")
    lhs = substitute_y_plus_yinv(character(r + 1) - character(r - 1))
    rhs = LaurentPolynomial({r: 1, -r: 1})
    return lhs == rhs
