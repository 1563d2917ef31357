"""
Enriques moduli toolkit: existence of stable sheaves via U+E8 lattice arithmetic.
"""
__version__ = "0.1.0"
