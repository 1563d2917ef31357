"""
Divisor classes in NS(X) = Z^10 (+) Z/2 K_X.
"""
from dataclasses import dataclass
from functools import reduce
from math import gcd

from src.lattice.form import RANK, enriques_form


@dataclass(frozen=True, order=True, slots=True)
class NSClass:
    """
    A class in the Neron-Severi group of an Enriques surface.

    ``free`` holds the ten coordinates in the fixed U + E8(-1) basis and
    ``torsion`` the coefficient (0 or 1) of the 2-torsion canonical class.
    Ordering is lexicographic on (free, torsion).
    """

    free: tuple[int, ...]
    torsion: int = 0

    def __post_init__(self) -> None:
        if len(self.free) != RANK:
            raise ValueError(f"NS class needs {RANK} coordinates, got {len(self.free)}")
        if self.torsion not in (0, 1):
            raise ValueError(f"torsion bit must be 0 or 1, got {self.torsion}")

    @classmethod
    def of(cls, *coords: int, torsion: int = 0) -> "NSClass":
        """Build a class from leading coordinates, zero-padded to rank 10."""
        padded = tuple(coords) + (0,) * (RANK - len(coords))
        return cls(tuple(int(c) for c in padded), torsion % 2)

    @classmethod
    def basis(cls, index: int) -> "NSClass":
        """The index-th basis vector (0 = e, 1 = f, 2..9 = E8 simple roots)."""
        coords = [0] * RANK
        coords[index] = 1
        return cls(tuple(coords))

    def __add__(self, other: "NSClass") -> "NSClass":
        return NSClass(
            tuple(a + b for a, b in zip(self.free, other.free)),
            self.torsion ^ other.torsion,
        )

    def __neg__(self) -> "NSClass":
        # K_X is 2-torsion, so -K_X = K_X.
        return NSClass(tuple(-a for a in self.free), self.torsion)

    def __sub__(self, other: "NSClass") -> "NSClass":
        return self + (-other)

    def __mul__(self, n: int) -> "NSClass":
        return NSClass(tuple(n * a for a in self.free), (n * self.torsion) % 2)

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return self.torsion == 0 and not any(self.free)

    @property
    def is_free_zero(self) -> bool:
        """Numerically trivial: zero free part (0 or K_X)."""
        return not any(self.free)

    @property
    def height(self) -> int:
        """Maximal absolute coordinate of the free part."""
        return max(abs(a) for a in self.free)

    @property
    def divisibility(self) -> int:
        """
        gcd of the free coordinates; 0 for a numerically trivial class.

        The torsion bit does not contribute; mod-2 conditions involving K_X
        go through congruent_mod2.
        """
        return reduce(gcd, self.free, 0)

    def without_torsion(self) -> "NSClass":
        return NSClass(self.free, 0)

    def __str__(self) -> str:
        return "[" + ",".join(str(a) for a in self.free) + f";{self.torsion}]"


ZERO = NSClass((0,) * RANK, 0)
CANONICAL = NSClass((0,) * RANK, 1)
E = NSClass.basis(0)
F = NSClass.basis(1)


def pair(a: NSClass, b: NSClass) -> int:
    """
    Intersection number (a, b).

    Torsion is numerically trivial, so only the free parts contribute.
    """
    return enriques_form().evaluate(a.free, b.free)


def square(a: NSClass) -> int:
    """Self-intersection (a^2)."""
    return pair(a, a)


def e8_root(index: int) -> NSClass:
    """The simple root a_index of E8 (Bourbaki numbering, 1..8)."""
    if not 1 <= index <= 8:
        raise ValueError(f"E8 simple roots are numbered 1..8, got {index}")
    return NSClass.basis(index + 1)
