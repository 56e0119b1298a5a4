"""Rank census and exact verifier for n-times persymmetric matrices over GF(2)."""

from persym.gf2 import BitMatrix, rank
from persym.model import FamilyShape, ParamTuple, build_matrix, param_from_index, param_to_index
from persym.census import RankHistogram, census, census_partial
from persym.formulas import (
    FormulaValue,
    gamma10_product,
    gamma_general,
    gamma_n4,
    gamma_n5,
)
from persym.moments import (
    MomentReport,
    check_n5_moments,
    check_q1,
    check_q2_general,
    moment,
    predict_R,
)
from persym.polysys import count_solutions, exp_sum
from persym.derive import CoefficientTable, assemble_gamma, derive_theorem

__all__ = [
    "BitMatrix",
    "rank",
    "FamilyShape",
    "ParamTuple",
    "build_matrix",
    "param_from_index",
    "param_to_index",
    "RankHistogram",
    "census",
    "census_partial",
    "FormulaValue",
    "gamma10_product",
    "gamma_general",
    "gamma_n4",
    "gamma_n5",
    "MomentReport",
    "check_n5_moments",
    "check_q1",
    "check_q2_general",
    "moment",
    "predict_R",
    "count_solutions",
    "exp_sum",
    "CoefficientTable",
    "assemble_gamma",
    "derive_theorem",
]
