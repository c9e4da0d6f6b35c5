"""Unit tests for the built-in catalog, the product expansion and JSON io."""

import pytest

from hkgenus.catalog import (
    ManifoldRecord,
    builtin,
    builtin_names,
    goettsche_expand,
    load_manifold,
    record_to_json_dict,
    save_manifold,
)
from hkgenus.errors import (
    DimensionMismatchError,
    InputError,
    UnknownManifoldError,
    ValidationError,
)
from hkgenus.hodge import HodgeDiamond, ValidationLevel
from hkgenus.series import TruncatedSeries, binomial_expand


def test_builtin_names_in_catalog_order():
    assert builtin_names() == ("K3", "K3[2]", "K3[3]", "K3[4]", "K3[5]")


def test_k3_seed_values():
    record = builtin("K3")
    assert record.diamond.rows == ((1, 0, 1), (0, 20, 0), (1, 0, 1))
    assert record.diamond.classical_values() == (24, 2, -16)
    assert record.chern is not None and record.chern.value("c2") == 24
    # Noether consistency: Todd genus = c2 / 12.
    assert record.diamond.classical_values().todd_genus == record.chern.value("c2") // 12


def test_k3_2_expected_entries():
    d = builtin("K3[2]").diamond
    assert d.entry(1, 1) == 21
    assert d.entry(2, 2) == 232
    assert d.classical_values().euler == 324


def test_unknown_names_rejected():
    with pytest.raises(UnknownManifoldError):
        builtin("K3[1]")  # alias of K3 is deliberately not registered
    with pytest.raises(UnknownManifoldError):
        builtin("Kum2")


def test_first_coefficient_reproduces_the_surface():
    k3 = builtin("K3").diamond
    expanded = goettsche_expand(k3, 2)
    assert expanded[0] == k3


def test_all_expansions_strict_valid():
    expanded = goettsche_expand(builtin("K3").diamond, 5)
    assert len(expanded) == 5
    for diamond in expanded:
        assert diamond.validate(ValidationLevel.STRICT).ok


def dense_euler_expansion(euler: int, order: int) -> list[int]:
    """Independent oracle: prod_k (1 - z^k)^{-euler} as a dense list."""
    series = [0] * (order + 1)
    series[0] = 1
    for k in range(1, order + 1):
        # Multiply by (1 - z^k)^{-euler} one binomial factor at a time.
        factor = [0] * (order + 1)
        from math import comb
        for j in range(0, order // k + 1):
            factor[j * k] = comb(euler + j - 1, j)
        series = [
            sum(series[i] * factor[m - i] for i in range(m + 1))
            for m in range(order + 1)
        ]
    return series


def test_euler_specialization_matches_one_variable_expansion():
    # Specializing x = y = -1 in the three-variable product reproduces the
    # one-variable Euler expansion term by term.
    k3 = builtin("K3").diamond
    n_max = 5
    variables = ("x", "y", "z")
    limits = (2 * n_max, 2 * n_max, n_max)
    product = TruncatedSeries.one(variables, limits)
    for k in range(1, n_max + 1):
        for p in range(3):
            for q in range(3):
                h = k3.rows[p][q]
                if h == 0:
                    continue
                sign = (-1) ** (p + q)
                base = TruncatedSeries(
                    variables, limits,
                    {(0, 0, 0): 1, (p + k - 1, q + k - 1, k): -sign})
                product = product * binomial_expand(base, -sign * h)
    one_variable = product.substitute_int("x", -1).substitute_int("y", -1)
    expected = dense_euler_expansion(24, n_max)
    for m in range(n_max + 1):
        assert one_variable.coefficient((m,)) == expected[m]
    assert expected[2] == 324


def test_builtin_eulers_match_one_variable_expansion():
    expected = dense_euler_expansion(24, 5)
    for m in range(1, 6):
        name = "K3" if m == 1 else f"K3[{m}]"
        assert builtin(name).diamond.classical_values().euler == expected[m]


def test_expand_argument_validation():
    k3 = builtin("K3").diamond
    with pytest.raises(InputError):
        goettsche_expand(builtin("K3[2]").diamond, 2)  # base must be a surface
    with pytest.raises(InputError):
        goettsche_expand(k3, 0)
    with pytest.raises(InputError):
        goettsche_expand(k3, 6)  # truncation order above the supported scale


def test_save_load_round_trip(tmp_path):
    for name in builtin_names():
        record = builtin(name)
        path = tmp_path / f"{name.replace('[', '_').replace(']', '')}.hodge.json"
        save_manifold(record, path)
        loaded = load_manifold(path)
        assert loaded == record
        # Bit-exact canonical serialization.
        again = tmp_path / "again.hodge.json"
        save_manifold(loaded, again)
        assert path.read_bytes() == again.read_bytes()


def test_serialization_is_canonical():
    obj = record_to_json_dict(builtin("K3"))
    assert obj["name"] == "K3"
    assert obj["n"] == 1
    assert obj["hodge"] == [[1, 0, 1], [0, 20, 0], [1, 0, 1]]
    assert obj["chern"] == {"c2": 24}


def test_load_rejects_negative_entry(tmp_path):
    path = tmp_path / "bad.hodge.json"
    path.write_text(
        '{"name": "bad", "n": 1, "hodge": [[1, 0, 1], [0, -20, 0], [1, 0, 1]]}',
        encoding="utf-8")
    with pytest.raises(ValidationError) as info:
        load_manifold(path)
    assert "(p=1, q=1)" in str(info.value)


def test_load_rejects_even_side_table(tmp_path):
    path = tmp_path / "even.hodge.json"
    path.write_text(
        '{"name": "even", "n": 1, "hodge": [[1, 0], [0, 1]]}', encoding="utf-8")
    with pytest.raises(DimensionMismatchError):
        load_manifold(path)


def test_load_rejects_n_mismatch(tmp_path):
    path = tmp_path / "mismatch.hodge.json"
    path.write_text(
        '{"name": "m", "n": 2, "hodge": [[1, 0, 1], [0, 20, 0], [1, 0, 1]]}',
        encoding="utf-8")
    with pytest.raises(InputError, match="implies n = 1"):
        load_manifold(path)


def test_load_reports_parse_position(tmp_path):
    path = tmp_path / "syntax.hodge.json"
    path.write_text('{"name": "x",\n "n": 1,\n "hodge": [[1,0,1],]}', encoding="utf-8")
    with pytest.raises(InputError, match=r"line 3"):
        load_manifold(path)


def test_load_missing_keys(tmp_path):
    path = tmp_path / "missing.hodge.json"
    path.write_text('{"name": "x", "n": 1}', encoding="utf-8")
    with pytest.raises(InputError, match='"hodge"'):
        load_manifold(path)


def test_strict_level_gate_on_load(tmp_path):
    torus = ManifoldRecord(
        name="torus4", diamond=HodgeDiamond(((1, 2, 1), (2, 4, 2), (1, 2, 1))))
    path = tmp_path / "torus.hodge.json"
    save_manifold(torus, path)
    assert load_manifold(path).name == "torus4"
    with pytest.raises(ValidationError):
        load_manifold(path, ValidationLevel.STRICT)


def test_big_integers_round_trip(tmp_path):
    scale = 10**30
    rows = tuple(tuple(scale * v for v in row)
                 for row in ((1, 0, 1), (0, 20, 0), (1, 0, 1)))
    record = ManifoldRecord(name="huge", diamond=HodgeDiamond(rows))
    path = tmp_path / "huge.hodge.json"
    save_manifold(record, path)
    loaded = load_manifold(path)
    assert loaded.diamond.entry(1, 1) == 20 * scale


def test_float_entries_rejected(tmp_path):
    path = tmp_path / "float.hodge.json"
    path.write_text(
        '{"name": "f", "n": 1, "hodge": [[1, 0, 1], [0, 20.0, 0], [1, 0, 1]]}',
        encoding="utf-8")
    with pytest.raises(InputError):
        load_manifold(path)


def test_provenance_round_trips(tmp_path):
    record = builtin("K3[3]")
    assert record.provenance
    path = tmp_path / "k3_3.hodge.json"
    save_manifold(record, path)
    assert load_manifold(path).provenance == record.provenance
