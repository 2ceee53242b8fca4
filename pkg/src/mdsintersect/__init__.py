"""MDS code intersection pairs over finite fields and the pure MDS AEAQECCs built from them."""

from .code import INF, GrsSpec, LinearCode, dual, grs_encode, grs_infty_encode, is_mds, mds_weight_distribution
from .construct import FeasibilityVerdict, IntersectionPair, PairRequest, Status, construct_pair, feasibility
from .field import FieldContext, FieldElement, field_of_order, make_field
from .matrix import Matrix, kernel, rank, rref
from .poly import Polynomial, count_irreducibles, is_irreducible, pick_irreducible
from .quantum import EMPTY, AeaqeccParams, build_pure_mds_aeaqecc, derive_params

__all__ = [
    "INF", "GrsSpec", "LinearCode", "dual", "grs_encode", "grs_infty_encode", "is_mds",
    "mds_weight_distribution", "FeasibilityVerdict", "IntersectionPair", "PairRequest", "Status",
    "construct_pair", "feasibility", "FieldContext", "FieldElement", "field_of_order", "make_field",
    "Matrix", "kernel", "rank", "rref", "Polynomial", "count_irreducibles", "is_irreducible",
    "pick_irreducible", "EMPTY", "AeaqeccParams", "build_pure_mds_aeaqecc", "derive_params",
]
__version__ = "0.1.0"
