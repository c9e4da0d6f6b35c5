"""Exact univariate Laurent polynomials over Python's big integers.

A Laurent polynomial is a finite sum of terms c * v^k where the exponent k may
be any integer, positive or negative.  Coefficients are plain ``int`` (so
arbitrary precision comes for free) and no floating point is used anywhere.

Values are immutable and canonical: zero coefficients are never stored, the
zero polynomial has an empty coefficient map, and equality is coefficient-map
equality.  That makes every identity check in this package an exact,
zero-tolerance comparison.

The variable is anonymous; rendering picks a letter (``y`` by default; trace
polynomials pass ``t`` to ``to_string``).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterator, Mapping, Union

Coefficients = Mapping[int, int]


def _check_int(value) -> int:
    # bool is an int subclass; reject it so True never masquerades as 1.
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeError(f"expected an integer, got {value!r}")
    return value


class LaurentPolynomial:
    """An integer-coefficient polynomial in one variable and its inverse.

    >>> y = LaurentPolynomial.variable()
    >>> (y + y**-1) * (y - y**-1) == y**2 - y**-2
    True
    >>> print((3*y**2 + 42*y + 234 + 42*y**-1 + 3*y**-2).to_string("y"))
    3y^2+42y+234+42y^-1+3y^-2
    """

    __slots__ = ("_terms", "_key")

    def __init__(self, terms: Coefficients = ()):
        cleaned: dict[int, int] = {}
        for exponent, coefficient in dict(terms).items():
            _check_int(exponent)
            _check_int(coefficient)
            if coefficient != 0:
                cleaned[exponent] = coefficient
        object.__setattr__(self, "_terms", cleaned)
        object.__setattr__(self, "_key", tuple(sorted(cleaned.items())))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPolynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    @classmethod
    def constant(cls, c: int) -> "LaurentPolynomial":
        return cls({0: c})

    @classmethod
    def monomial(cls, coefficient: int, exponent: int) -> "LaurentPolynomial":
        return cls({exponent: coefficient})

    @classmethod
    def variable(cls) -> "LaurentPolynomial":
        return cls({1: 1})

    # -- inspection --------------------------------------------------------

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def terms(self) -> Iterator[tuple[int, int]]:
        """Yield (exponent, coefficient) pairs in ascending exponent order."""
        return iter(self._key)

    def support(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self._key)

    def degree(self) -> int | None:
        """Highest exponent, or None for the zero polynomial."""
        return self._key[-1][0] if self._key else None

    def valuation(self) -> int | None:
        """Lowest exponent, or None for the zero polynomial."""
        return self._key[0][0] if self._key else None

    def is_palindromic(self) -> bool:
        """True when coefficient(k) == coefficient(-k) for every k."""
        return all(c == self._terms.get(-e, 0) for e, c in self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({dict(self._key)!r})"

    def __str__(self) -> str:
        return self.to_string("y")

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(value) -> "LaurentPolynomial":
        if isinstance(value, LaurentPolynomial):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return LaurentPolynomial.constant(value)
        return NotImplemented

    def __add__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPolynomial":
        _check_int(exponent)
        if exponent < 0:
            # Only monomials are invertible in the Laurent ring.
            if len(self._terms) == 1:
                ((e, c),) = self._terms.items()
                if c in (1, -1):
                    inv = LaurentPolynomial({-e: c})
                    return inv ** (-exponent)
            raise ValueError("negative powers only defined for unit monomials")
        result = LaurentPolynomial.one()
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- substitutions -----------------------------------------------------

    def negate_variable(self) -> "LaurentPolynomial":
        """Substitute v -> -v, flipping the sign of odd-exponent terms."""
        return LaurentPolynomial(
            {e: c if e % 2 == 0 else -c for e, c in self._terms.items()}
        )

    def invert_variable(self) -> "LaurentPolynomial":
        """Substitute v -> 1/v (negate every exponent)."""
        return LaurentPolynomial({-e: c for e, c in self._terms.items()})

    def shifted(self, k: int) -> "LaurentPolynomial":
        """Multiply by v^k."""
        _check_int(k)
        return LaurentPolynomial({e + k: c for e, c in self._terms.items()})

    def compose(self, inner: "LaurentPolynomial") -> "LaurentPolynomial":
        """Substitute the variable by ``inner``.

        Requires all exponents of self to be nonnegative (composition with a
        general Laurent polynomial is otherwise undefined over this ring).
        """
        if self._key and self._key[0][0] < 0:
            raise ValueError("compose requires nonnegative exponents")
        result = LaurentPolynomial.zero()
        power = LaurentPolynomial.one()
        current = 0
        for e, c in self._key:
            power = power * inner ** (e - current) if e != current else power
            current = e
            result = result + power * c
        return result

    def evaluate(self, value: int) -> Union[int, Fraction]:
        """Evaluate at an integer point, exactly.

        Negative exponents produce exact Fractions; the result collapses to an
        int whenever it is integral (always the case at value = +-1).
        """
        _check_int(value)
        total = Fraction(0)
        for e, c in self._terms.items():
            if e >= 0:
                total += c * value**e
            else:
                if value == 0:
                    raise ZeroDivisionError(
                        "cannot evaluate a negative exponent at 0"
                    )
                total += Fraction(c, value**-e)
        if total.denominator == 1:
            return int(total)
        return total

    # -- rendering and parsing ---------------------------------------------

    def to_string(self, var: str = "y") -> str:
        """Render as explicit monomials in descending exponent order.

        The format is golden-file friendly: no whitespace, explicit ``^`` for
        exponents other than 0 and 1, e.g. ``3y^2+42y+234+42y^-1+3y^-2``.
        """
        if not self._key:
            return "0"
        pieces: list[str] = []
        for e, c in reversed(self._key):
            sign = "-" if c < 0 else ("+" if pieces else "")
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else str(mag)
                body = f"{head}{var}" if e == 1 else f"{head}{var}^{e}"
            pieces.append(f"{sign}{body}")
        return "".join(pieces)

    @classmethod
    def parse(cls, text: str, var: str = "y") -> "LaurentPolynomial":
        """Parse the ``to_string`` format back into a polynomial."""
        text = text.replace(" ", "")
        if not text:
            raise ValueError("empty polynomial string")
        if text == "0":
            return cls.zero()
        token = re.compile(
            rf"([+-]?)(\d+)?(?:({re.escape(var)})(?:\^(-?\d+))?)?"
        )
        terms: dict[int, int] = {}
        pos = 0
        while pos < len(text):
            m = token.match(text, pos)
            if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
                raise ValueError(f"cannot parse {text!r} at position {pos}")
            sign = -1 if m.group(1) == "-" else 1
            coeff = int(m.group(2)) if m.group(2) is not None else 1
            if m.group(3) is None:
                exponent = 0
            elif m.group(4) is None:
                exponent = 1
            else:
                exponent = int(m.group(4))
            terms[exponent] = terms.get(exponent, 0) + sign * coeff
            pos = m.end()
        return cls(terms)


#: The Laurent polynomial y + y^-1, the image of the trace variable under the
#: eigenvalue substitution t*y = y^2 + 1.
Y_PLUS_YINV = LaurentPolynomial({1: 1, -1: 1})


def substitute_y_plus_yinv(p: LaurentPolynomial) -> LaurentPolynomial:
    """Replace the variable of ``p`` by y + y^-1 and expand exactly.

    ``p`` must be an ordinary polynomial (no negative exponents); the result
    is always palindromic because y + y^-1 is invariant under y -> 1/y.
    """
    if p.valuation() is not None and p.valuation() < 0:
        raise ValueError("substitution requires a polynomial with nonnegative exponents")
    return p.compose(Y_PLUS_YINV)
