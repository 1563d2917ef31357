"""
Mukai vectors, the Mukai pairing, Euler characteristics and divisibility.
"""
from src.mukai.divisibility import Divisibility, congruent_mod2, gcd_divisibility, is_primitive
from src.mukai.vector import (
    CANONICAL_SHEAF,
    POINT,
    STRUCTURE_SHEAF,
    V0,
    KClassDecomposition,
    MukaiVector,
    chi,
    mukai_pair,
    self_pairing,
    twist,
)
