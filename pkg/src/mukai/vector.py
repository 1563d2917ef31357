"""
Mukai vectors v = (r, L, a) on an Enriques surface, stored with a doubled.
"""
from dataclasses import dataclass
from fractions import Fraction

from src.errors import ParityViolation
from src.lattice.classes import CANONICAL, ZERO, NSClass, pair


@dataclass(frozen=True, slots=True)
class MukaiVector:
    """
    Mukai vector (r, L, a2/2).

    ``a2`` is twice the third component, i.e. the integer s of (r, L, s/2).
    A vector of an actual sheaf has a = chi - r/2 with chi integral, which is
    the parity condition a2 = r (mod 2).
    """

    rank: int
    c1: NSClass
    a2: int

    @property
    def s(self) -> int:
        return self.a2

    @property
    def has_valid_parity(self) -> bool:
        return (self.a2 - self.rank) % 2 == 0

    def check_parity(self) -> "MukaiVector":
        if not self.has_valid_parity:
            raise ParityViolation(
                f"Mukai vector {self} violates r + s even (r={self.rank}, s={self.a2})"
            )
        return self

    @property
    def is_zero(self) -> bool:
        return self.rank == 0 and self.a2 == 0 and self.c1.is_zero

    def __add__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector(self.rank + other.rank, self.c1 + other.c1, self.a2 + other.a2)

    def __neg__(self) -> "MukaiVector":
        return MukaiVector(-self.rank, -self.c1, -self.a2)

    def __sub__(self, other: "MukaiVector") -> "MukaiVector":
        return self + (-other)

    def __mul__(self, n: int) -> "MukaiVector":
        return MukaiVector(n * self.rank, n * self.c1, n * self.a2)

    __rmul__ = __mul__

    def collapse_torsion(self) -> "MukaiVector":
        """The same vector on a surface with K_X = 0."""
        return MukaiVector(self.rank, self.c1.without_torsion(), self.a2)

    def __str__(self) -> str:
        return f"({self.rank},{self.c1},{self.a2})"


def mukai_pair(v: MukaiVector, w: MukaiVector) -> int:
    """
    Mukai pairing <v, w> = (L, L') - r a' - r' a.

    Raises:
        ParityViolation: If either vector breaks the parity invariant
    """
    v.check_parity()
    w.check_parity()
    return pair(v.c1, w.c1) - (v.rank * w.a2 + w.rank * v.a2) // 2


def self_pairing(v: MukaiVector) -> int:
    """<v^2> = (L^2) - r s."""
    return mukai_pair(v, v)


def chi(v: MukaiVector) -> Fraction:
    """Euler characteristic chi = a + r/2 = (a2 + r)/2."""
    return Fraction(v.a2 + v.rank, 2)


def twist(v: MukaiVector, d: NSClass) -> MukaiVector:
    """
    Mukai vector of E (x) O(D).

    Multiplying the Chern character by e^D gives
    (r, L + rD, a2 + 2(L, D) + r (D^2)).
    """
    v.check_parity()
    return MukaiVector(
        v.rank,
        v.c1 + v.rank * d,
        v.a2 + 2 * pair(v.c1, d) + v.rank * pair(d, d),
    )


# Standard classes: v(O_X), v(O_X(K_X)), v(k_x) and v_0 = v(O + O(K) - k_x).
STRUCTURE_SHEAF = MukaiVector(1, ZERO, 1)
CANONICAL_SHEAF = MukaiVector(1, CANONICAL, 1)
POINT = MukaiVector(0, ZERO, 2)
V0 = STRUCTURE_SHEAF + CANONICAL_SHEAF - POINT


@dataclass(frozen=True)
class KClassDecomposition:
    """A class in K(X) written against the standard sheaves O_X, O_X(K_X) and k_x."""

    chi: int
    structure_sheaf: MukaiVector = STRUCTURE_SHEAF
    canonical_sheaf: MukaiVector = CANONICAL_SHEAF
    point: MukaiVector = POINT

    @property
    def v0(self) -> MukaiVector:
        return self.structure_sheaf + self.canonical_sheaf - self.point

    @property
    def fm_kernel_class(self) -> MukaiVector:
        """chi (v(O_X) + v(O_X(K_X))), the term subtracted from in the K-theory transform."""
        return self.chi * (self.structure_sheaf + self.canonical_sheaf)
