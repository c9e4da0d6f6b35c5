"""Built-in test manifolds and JSON persistence for Hodge diamonds.

The catalog is derived, not transcribed: the K3 table is pinned by the
irreducibility corner values plus one classical input (c2 = 24, equivalently
Noether's chi(O) = c2/12 with chi(O) = 2 and c1 = 0, which forces Euler
number 24 and hence h^{1,1} = 20), and the Hilbert schemes K3[m] are produced
by expanding Goettsche's product formula

    prod_{k>=1} prod_{p,q} (1 - (-1)^{p+q} x^{p+k-1} y^{q+k-1} z^k)^{-(-1)^{p+q} h^{p,q}}

as a truncated three-variable series; the coefficient of z^m is the diamond
of the m-th Hilbert scheme of points.  Every number downstream of the seed is
therefore reproducible in-repo from series arithmetic alone.

File format (.hodge.json recommended): a JSON object

    {"name": str, "n": int, "hodge": [[int, ...], ...]}

with "hodge" a (2n+1) x (2n+1) row-major array (rows indexed by p, columns by
q), an optional "chern" object of Chern monomial keys, and an optional
"provenance" string.  Canonical output uses two-space indentation and sorted
keys; integers are arbitrary precision and must round-trip exactly.
"""

from __future__ import annotations

import functools
import json
import threading
from dataclasses import dataclass

from .errors import InputError, InternalInconsistencyError, UnknownManifoldError
from .hodge import HodgeDiamond, ValidationLevel
from .riemann_roch import ChernData
from .series import TruncatedSeries, binomial_expand

MAX_HILBERT_POINTS = 5


@dataclass(frozen=True)
class ManifoldRecord:
    """A named diamond with optional Chern numbers and a provenance note."""

    name: str
    diamond: HodgeDiamond
    chern: ChernData | None = None
    provenance: str = ""


# -- the K3 seed -------------------------------------------------------------

_K3_CHI_O = 2                 # h^{0,0} - h^{1,0} + h^{2,0} = 1 - 0 + 1
_K3_C2 = 12 * _K3_CHI_O       # Noether with c1 = 0: chi(O) = c2 / 12
_K3_H11 = _K3_C2 - 4          # Euler = c2 = 4 + h^{1,1} for the corner-forced table


def _k3_diamond() -> HodgeDiamond:
    return HodgeDiamond(
        ((1, 0, 1), (0, _K3_H11, 0), (1, 0, 1)),
        name="K3",
    )


# -- Goettsche expansion ------------------------------------------------------

@functools.lru_cache(maxsize=None)
def goettsche_expand(base: HodgeDiamond, n_max: int) -> tuple[HodgeDiamond, ...]:
    """Hodge diamonds of the Hilbert schemes of 1..n_max points on a surface.

    ``base`` must be a 3x3 surface table and n_max at most 5 (the catalog's
    desk scale).  Each emitted diamond is validated at STRICT level; a failure
    there signals a fault in the formula or the series engine, never bad data,
    so it raises InternalInconsistencyError.  Results are cached per
    (base, n_max) content, which is safe because the expansion is
    deterministic.
    """
    if base.n != 1:
        raise InputError(f"base must be a surface (3x3 table), got n = {base.n}")
    if not 1 <= n_max <= MAX_HILBERT_POINTS:
        raise InputError(
            f"n_max must be between 1 and {MAX_HILBERT_POINTS}, got {n_max}")
    variables = ("x", "y", "z")
    limits = (2 * n_max, 2 * n_max, n_max)
    product = TruncatedSeries.one(variables, limits)
    for k in range(1, n_max + 1):
        for p in range(3):
            for q in range(3):
                h = base.rows[p][q]
                if h == 0:
                    continue
                sign = (-1) ** (p + q)
                factor = TruncatedSeries(
                    variables, limits,
                    {(0, 0, 0): 1, (p + k - 1, q + k - 1, k): -sign})
                product = product * binomial_expand(factor, -sign * h)
    diamonds = []
    for m in range(1, n_max + 1):
        slice_m = product.extract("z", m)
        side = 2 * m + 1
        rows = tuple(
            tuple(slice_m.coefficient((p, q)) for q in range(side))
            for p in range(side)
        )
        stray = [e for e, _ in slice_m.terms() if e[0] >= side or e[1] >= side]
        if stray:
            raise InternalInconsistencyError(
                f"z^{m} coefficient has terms beyond degree {side - 1}: {stray}")
        diamond = HodgeDiamond(rows, name=f"{base.name or 'surface'}[{m}]")
        report = diamond.validate(ValidationLevel.STRICT)
        if not report.ok:
            raise InternalInconsistencyError(
                f"expansion emitted an invalid diamond at z^{m}:\n{report.summary()}")
        diamonds.append(diamond)
    return tuple(diamonds)


# -- built-in registry --------------------------------------------------------

#: Chern numbers of the fourfold K3[2]: c4 is its Euler number (the z^2
#: coefficient of the one-variable expansion of the same product formula);
#: c2^2 is the regression constant obtained by solving the symbolic
#: Riemann-Roch output against the Hodge-side genus (see tests and demo 05).
_K3_2_CHERN = {"c2^2": 828, "c4": 324}

_BUILTIN_LOCK = threading.Lock()
_BUILTIN_CACHE: dict[str, ManifoldRecord] | None = None


def _build_catalog() -> dict[str, ManifoldRecord]:
    k3 = _k3_diamond()
    records = {
        "K3": ManifoldRecord(
            name="K3",
            diamond=k3,
            chern=ChernData(1, {"c2": _K3_C2}),
            provenance=(
                "seed surface: corners forced by irreducibility, "
                "h^{1,1} = 20 from Euler = c2 = 24 (Noether, chi(O) = 2)"),
        )
    }
    hilbert = goettsche_expand(k3, MAX_HILBERT_POINTS)
    for m, diamond in enumerate(hilbert, start=1):
        if m == 1:
            continue  # K3[1] is K3 itself and is not registered separately
        records[f"K3[{m}]"] = ManifoldRecord(
            name=f"K3[{m}]",
            diamond=diamond,
            chern=ChernData(2, _K3_2_CHERN) if m == 2 else None,
            provenance=f"Hilbert scheme of {m} points: Goettsche expansion of the K3 seed",
        )
    return records


def _catalog() -> dict[str, ManifoldRecord]:
    global _BUILTIN_CACHE
    if _BUILTIN_CACHE is None:
        with _BUILTIN_LOCK:
            if _BUILTIN_CACHE is None:
                _BUILTIN_CACHE = _build_catalog()
    return _BUILTIN_CACHE


def builtin_names() -> tuple[str, ...]:
    """Catalog order: K3 first, then the Hilbert schemes by point count."""
    return tuple(_catalog().keys())


def builtin(name: str) -> ManifoldRecord:
    records = _catalog()
    if name not in records:
        known = ", ".join(records)
        raise UnknownManifoldError(f"unknown built-in {name!r}; known: {known}")
    return records[name]


# -- JSON persistence ----------------------------------------------------------

def record_to_json_dict(record: ManifoldRecord) -> dict:
    obj: dict = {
        "name": record.name,
        "n": record.diamond.n,
        "hodge": [list(row) for row in record.diamond.rows],
    }
    if record.chern is not None:
        obj["chern"] = {k: record.chern.values[k] for k in sorted(record.chern.values)}
    if record.provenance:
        obj["provenance"] = record.provenance
    return obj


def record_from_json_dict(obj, level: ValidationLevel = ValidationLevel.STRUCTURAL) -> ManifoldRecord:
    if not isinstance(obj, dict):
        raise InputError("manifold file must contain a JSON object")
    for key in ("name", "n", "hodge"):
        if key not in obj:
            raise InputError(f'missing required key "{key}"')
    name = obj["name"]
    if not isinstance(name, str):
        raise InputError('"name" must be a string')
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError('"n" must be a positive integer')
    hodge = obj["hodge"]
    if not isinstance(hodge, list) or not all(isinstance(r, list) for r in hodge):
        raise InputError('"hodge" must be a row-major array of arrays')
    diamond = HodgeDiamond(tuple(tuple(r) for r in hodge), name=name)
    if diamond.n != n:
        raise InputError(
            f'"n" is {n} but the table side {diamond.side} implies n = {diamond.n}')
    diamond.require_valid(level)
    chern = None
    if "chern" in obj and obj["chern"] is not None:
        if not isinstance(obj["chern"], dict):
            raise InputError('"chern" must be an object of monomial keys')
        chern = ChernData(n, obj["chern"])
    provenance = obj.get("provenance", "")
    if not isinstance(provenance, str):
        raise InputError('"provenance" must be a string')
    return ManifoldRecord(name=name, diamond=diamond, chern=chern, provenance=provenance)


def save_manifold(record: ManifoldRecord, path) -> None:
    """Write the canonical serialization: sorted keys, two-space indent."""
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(record_to_json_dict(record), handle, indent=2, sort_keys=True)
        handle.write("\n")


def load_manifold(path, level: ValidationLevel = ValidationLevel.STRUCTURAL) -> ManifoldRecord:
    """Load and validate a manifold file; see the module docstring for the schema."""
    with open(path, "r", encoding="utf-8") as handle:
        try:
            obj = json.load(handle)
        except json.JSONDecodeError as exc:
            raise InputError(
                f"{path}: parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
            ) from None
    return record_from_json_dict(obj, level)
