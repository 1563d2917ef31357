"""
Divisibility and mod-2 tests on Mukai vectors.
"""
from math import gcd
from typing import NamedTuple

from src.lattice.classes import NSClass
from src.mukai.vector import MukaiVector


class Divisibility(NamedTuple):
    """gcd(r, L, s) and gcd(r, L, (r+s)/2)."""

    g_rs: int
    g_primitive: int


def gcd_divisibility(v: MukaiVector) -> Divisibility:
    """
    Compute gcd(r, L, s) and gcd(r, L, (r+s)/2).

    L contributes the gcd of its free coordinates; a numerically trivial L
    (0 or K_X) contributes 0, i.e. it is divisible by everything.
    """
    v.check_parity()
    if v.is_zero:
        raise ValueError("divisibility of the zero Mukai vector is undefined")
    div_l = v.c1.divisibility
    return Divisibility(
        g_rs=gcd(v.rank, div_l, v.a2),
        g_primitive=gcd(v.rank, div_l, (v.rank + v.a2) // 2),
    )


def is_primitive(v: MukaiVector) -> bool:
    return gcd_divisibility(v).g_primitive == 1


def congruent_mod2(x: NSClass, y: NSClass, classical: bool = True) -> bool:
    """
    x = y modulo 2 NS(X).

    2 NS(X) has no torsion part, so on a classical surface the torsion bits
    must agree; with K_X = 0 only the free parts matter.
    """
    if any((a - b) % 2 for a, b in zip(x.free, y.free)):
        return False
    return not classical or x.torsion == y.torsion
