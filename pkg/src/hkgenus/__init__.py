"""Exact chi_y genus and SL(2) graded-trace toolkit for hyper-Kahler Hodge structures.

The package computes, in exact arbitrary-precision arithmetic with no
floating point anywhere:

* the chi_y genus of a Hodge diamond and its classical specializations
  (Euler characteristic, Todd genus, signature);
* the decomposition of cohomology under the sl(2) action attached to the
  holomorphic 2-form, at the level of primitive multiplicities;
* the graded-trace polynomial S(t) of an SL(2) element and the exact identity
  S(y + 1/y) = chi_{-y} / y^n, verified as Laurent-polynomial equality;
* mapping-torus invariants of integer monodromies (Rozansky-Witten type);
* the same genus and trace polynomials from formal Chern roots via a
  symbolic Riemann-Roch pipeline, for n = 1, 2;
* a derived catalog (K3 and Hilbert schemes K3[2..5]) plus JSON persistence.

See the demos/ directory for narrative walkthroughs of each capability and
the ``hkgenus`` command line for batch use.
"""

from .errors import (
    DimensionMismatchError,
    InputError,
    InternalInconsistencyError,
    NegativePrimitiveError,
    UnknownManifoldError,
    ValidationError,
)
from .laurent import LaurentPolynomial, substitute_y_plus_yinv
from .series import TruncatedSeries, binomial_expand
from .hodge import (
    ClassicalValues,
    HodgeDiamond,
    ValidationLevel,
    ValidationReport,
    Violation,
)
from .sl2 import SL2Element, character, eigenvalue_polynomial, verify_character_identity
from .lefschetz import (
    PrimitiveTable,
    RozanskyWittenResult,
    IdentityReport,
    primitive_multiplicities,
    reconstruct_diamond,
    rozansky_witten_invariant,
    supertrace_polynomial,
    supertrace_value,
    supertrace_via_primitives,
    supertrace_via_rewrite,
    verify_supertrace_identity,
)
from .riemann_roch import (
    ChernData,
    RootSeries,
    chi_minus_y_chern_coefficients,
    chi_minus_y_from_chern,
    load_chern_data,
    save_chern_data,
    supertrace_chern_coefficients,
    supertrace_from_chern,
    todd_series,
)
from .catalog import (
    ManifoldRecord,
    builtin,
    builtin_names,
    goettsche_expand,
    load_manifold,
    save_manifold,
)
from .sampling import random_primitive_table, random_sl2, random_structural_diamond

__version__ = "0.1.0"

__all__ = [
    "ChernData",
    "ClassicalValues",
    "DimensionMismatchError",
    "HodgeDiamond",
    "InputError",
    "InternalInconsistencyError",
    "LaurentPolynomial",
    "ManifoldRecord",
    "NegativePrimitiveError",
    "PrimitiveTable",
    "RootSeries",
    "RozanskyWittenResult",
    "SL2Element",
    "IdentityReport",
    "TruncatedSeries",
    "UnknownManifoldError",
    "ValidationError",
    "ValidationLevel",
    "ValidationReport",
    "Violation",
    "binomial_expand",
    "builtin",
    "builtin_names",
    "character",
    "chi_minus_y_chern_coefficients",
    "chi_minus_y_from_chern",
    "eigenvalue_polynomial",
    "goettsche_expand",
    "load_chern_data",
    "load_manifold",
    "primitive_multiplicities",
    "random_primitive_table",
    "random_sl2",
    "random_structural_diamond",
    "reconstruct_diamond",
    "rozansky_witten_invariant",
    "save_chern_data",
    "save_manifold",
    "substitute_y_plus_yinv",
    "supertrace_chern_coefficients",
    "supertrace_from_chern",
    "supertrace_polynomial",
    "supertrace_value",
    "supertrace_via_primitives",
    "supertrace_via_rewrite",
    "todd_series",
    "verify_character_identity",
    "verify_supertrace_identity",
]
