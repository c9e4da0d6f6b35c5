"""Unit tests for Hodge diamonds, validation levels and the chi_y genus."""

import pytest

from hkgenus.catalog import builtin
from hkgenus.errors import DimensionMismatchError, ValidationError
from hkgenus.hodge import HodgeDiamond, ValidationLevel
from hkgenus.laurent import LaurentPolynomial

K3_ROWS = ((1, 0, 1), (0, 20, 0), (1, 0, 1))

# The flat 4-torus table h^{p,q} = C(2,p) C(2,q): symmetric but reducible.
TORUS_ROWS = ((1, 2, 1), (2, 4, 2), (1, 2, 1))


def test_k3_strict_pass():
    report = HodgeDiamond(K3_ROWS).validate(ValidationLevel.STRICT)
    assert report.ok
    assert report.summary().startswith("pass")


def test_symmetric_perturbation_is_not_detected():
    # h^{1,1} 20 -> 19 keeps every symmetry intact, so validation passes:
    # the symmetry checks alone do not pin the diamond.
    perturbed = HodgeDiamond(((1, 0, 1), (0, 19, 0), (1, 0, 1)))
    assert perturbed.validate(ValidationLevel.STRUCTURAL).ok


def test_strict_rejects_doubled_corner():
    doubled = HodgeDiamond(tuple(tuple(2 * v for v in row) for row in K3_ROWS))
    report = doubled.validate(ValidationLevel.STRICT)
    assert not report.ok
    assert any(v.kind == "irreducibility" and (v.p, v.q) == (0, 0)
               for v in report.violations)
    # STRUCTURAL does not care about the corner normalization.
    assert doubled.validate(ValidationLevel.STRUCTURAL).ok


def test_degenerate_diagonal_table_fails_structural():
    # Nonzero only at (0,0) and (2n,2n): column symmetry forces h^{2n,0} = h^{0,0}.
    rows = ((1, 0, 0), (0, 0, 0), (0, 0, 1))
    report = HodgeDiamond(rows).validate(ValidationLevel.STRUCTURAL)
    assert not report.ok
    assert any(v.kind in ("column_symmetry", "serre") for v in report.violations)
    with pytest.raises(ValidationError):
        HodgeDiamond(rows).chi_y()


def test_torus_structural_only():
    torus = HodgeDiamond(TORUS_ROWS)
    assert torus.validate(ValidationLevel.STRUCTURAL).ok
    strict = torus.validate(ValidationLevel.STRICT)
    assert not strict.ok
    assert any(v.kind == "irreducibility" and (v.p, v.q) == (1, 0)
               for v in strict.violations)
    assert torus.chi_y() == LaurentPolynomial.zero()
    assert torus.classical_values() == (0, 0, 0)


def test_chi_y_k3():
    genus = HodgeDiamond(K3_ROWS).chi_y()
    assert genus == LaurentPolynomial({0: 2, 1: -20, 2: 2})
    assert genus.to_string("y") == "2y^2-20y+2"


def test_chi_y_k3_2():
    genus = builtin("K3[2]").diamond.chi_y()
    assert genus == LaurentPolynomial({0: 3, 1: -42, 2: 234, 3: -42, 4: 3})


def test_classical_values():
    assert HodgeDiamond(K3_ROWS).classical_values() == (24, 2, -16)
    assert builtin("K3[2]").diamond.classical_values() == (324, 3, 156)


def test_euler_is_alternating_betti_sum():
    for name in ("K3", "K3[3]"):
        d = builtin(name).diamond
        expected = sum(
            (-1) ** (p + q) * d.rows[p][q]
            for p in range(d.side) for q in range(d.side))
        assert d.classical_values().euler == expected


def test_chi_y_end_coefficients_equal():
    for name in ("K3", "K3[2]", "K3[4]"):
        genus = builtin(name).diamond.chi_y()
        n = builtin(name).diamond.n
        assert genus.coefficient(0) == genus.coefficient(2 * n)


def test_normalized_genus_k3():
    d = HodgeDiamond(K3_ROWS)
    assert d.normalized_genus() == LaurentPolynomial({1: 2, 0: 20, -1: 2})


def test_normalized_genus_k3_2():
    d = builtin("K3[2]").diamond
    assert d.normalized_genus() == LaurentPolynomial(
        {2: 3, 1: 42, 0: 234, -1: 42, -2: 3})


def test_normalized_genus_palindromic_and_euler_at_one():
    for name in ("K3", "K3[2]", "K3[3]", "K3[4]", "K3[5]"):
        d = builtin(name).diamond
        normalized = d.normalized_genus()
        assert normalized.is_palindromic()
        assert normalized.evaluate(1) == d.classical_values().euler


def test_dimension_errors_are_hard_errors():
    with pytest.raises(DimensionMismatchError):
        HodgeDiamond(((1, 0), (0, 1)))  # even side
    with pytest.raises(DimensionMismatchError):
        HodgeDiamond(((1,),))  # n = 0 is rejected
    with pytest.raises(DimensionMismatchError):
        HodgeDiamond(((1, 0, 1), (0, 20), (1, 0, 1)))  # ragged row
    with pytest.raises(DimensionMismatchError):
        HodgeDiamond(((1, 0, 1), (0, 20.0, 0), (1, 0, 1)))  # float entry


def test_negative_entry_reported_with_location():
    rows = ((1, 0, 1), (0, -20, 0), (1, 0, 1))
    report = HodgeDiamond(rows).validate(ValidationLevel.STRUCTURAL)
    assert any(v.kind == "negative_entry" and (v.p, v.q) == (1, 1)
               for v in report.violations)


def test_entry_accessor_bounds():
    d = HodgeDiamond(K3_ROWS)
    assert d.entry(1, 1) == 20
    with pytest.raises(IndexError):
        d.entry(3, 0)
    with pytest.raises(IndexError):
        d.entry(0, -1)


def test_name_is_a_label_not_content():
    named = HodgeDiamond(K3_ROWS, name="K3")
    anonymous = HodgeDiamond(K3_ROWS)
    assert named == anonymous
    assert hash(named) == hash(anonymous)
    assert named.with_name(None) == anonymous


def test_pretty_print_shape():
    text = str(HodgeDiamond(K3_ROWS))
    lines = text.splitlines()
    assert len(lines) == 5  # antidiagonals of a 3x3 table
    assert lines[0].strip() == "1"
    assert lines[2].split() == ["1", "20", "1"]
