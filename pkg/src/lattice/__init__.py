"""
Exact arithmetic in the Enriques lattice U + E8(-1) with 2-torsion K_X.
"""
from src.lattice.classes import CANONICAL, E, F, ZERO, NSClass, e8_root, pair, square
from src.lattice.enumeration import enumerate_by_norm, enumerate_isotropic
from src.lattice.form import GramForm, enriques_form
from src.lattice.reflection import Reflection, reflect
