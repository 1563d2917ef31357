"""
Existence decisions for moduli of stable sheaves and the Fourier-Mukai action.
"""
from src.moduli.existence import (
    DimensionBounds,
    decide,
    decide_existence,
    decide_rank0,
    decide_spherical_rank2,
    dimension_bounds,
)
from src.moduli.fourier_mukai import (
    FMAction,
    check_consistency,
    fm_closed,
    fm_determinant,
    fm_ktheory,
)
from src.moduli.verdict import Procedure, Verdict, VerdictCase
