"""
The intersection form of an Enriques surface modulo torsion: U + E8(-1).

Coordinates are fixed once for the whole toolkit:

    index 0, 1  -> e, f        hyperbolic plane U, (e,f) = 1, (e,e) = (f,f) = 0
    index 2..9  -> a1..a8      simple roots of E8 in Bourbaki numbering

The E8 block carries the negated Cartan matrix, so every simple root has
self-pairing -2 and adjacent simple roots pair to +1. In this basis the roots
of E8 have coefficients of absolute value at most 6 (the highest root is
2a1 + 3a2 + 4a3 + 6a4 + 5a5 + 4a6 + 3a7 + 2a8).
"""
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from src.errors import LatticeError

RANK = 10
E8_SLICE = slice(2, 10)

# Bourbaki E8 Dynkin diagram: 1-3-4-5-6-7-8 with 2 attached to 4.
E8_EDGES: tuple[tuple[int, int], ...] = ((1, 3), (3, 4), (2, 4), (4, 5), (5, 6), (6, 7), (7, 8))
E8_HIGHEST_ROOT: tuple[int, ...] = (2, 3, 4, 6, 5, 4, 3, 2)
E8_ROOT_HEIGHT = max(E8_HIGHEST_ROOT)


def e8_cartan() -> np.ndarray:
    """Return the (positive definite) Cartan matrix of E8 in Bourbaki numbering."""
    cartan = 2 * np.eye(8, dtype=np.int64)
    for i, j in E8_EDGES:
        cartan[i - 1, j - 1] = cartan[j - 1, i - 1] = -1
    return cartan


@dataclass(frozen=True, eq=False)
class GramForm:
    """
    The fixed even unimodular form of signature (1, 9).

    ``matrix`` is the 10x10 numpy Gram matrix; ``entries`` is the same data as
    a sparse tuple of (i, j, value) used for exact integer pairing.
    """

    matrix: np.ndarray = field(repr=False)
    entries: tuple[tuple[int, int, int], ...] = field(repr=False)

    @classmethod
    def enriques(cls) -> "GramForm":
        """Build U + E8(-1)."""
        gram = np.zeros((RANK, RANK), dtype=np.int64)
        gram[0, 1] = gram[1, 0] = 1
        gram[E8_SLICE, E8_SLICE] = -e8_cartan()
        entries = tuple(
            (i, j, int(gram[i, j])) for i in range(RANK) for j in range(RANK) if gram[i, j]
        )
        return cls(matrix=gram, entries=entries)

    @property
    def determinant(self) -> int:
        return int(round(np.linalg.det(self.matrix.astype(float))))

    @property
    def signature(self) -> tuple[int, int]:
        """Number of positive and negative eigenvalues."""
        eigenvalues = np.linalg.eigvalsh(self.matrix.astype(float))
        return int((eigenvalues > 0).sum()), int((eigenvalues < 0).sum())

    @property
    def is_even(self) -> bool:
        return bool(np.all(np.diag(self.matrix) % 2 == 0))

    @property
    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.matrix, self.matrix.T))

    def check(self) -> None:
        """Verify symmetry, evenness, unimodularity and signature (1, 9)."""
        problems = []
        if not self.is_symmetric:
            problems.append("Gram matrix is not symmetric")
        if not self.is_even:
            problems.append("Gram matrix has an odd diagonal entry")
        if self.determinant != -1:
            problems.append(f"determinant is {self.determinant}, expected -1")
        if self.signature != (1, RANK - 1):
            problems.append(f"signature is {self.signature}, expected (1, 9)")
        if problems:
            raise LatticeError("; ".join(problems))

    def evaluate(self, x: tuple[int, ...], y: tuple[int, ...]) -> int:
        """Exact x^T G y over Python integers."""
        return sum(value * x[i] * y[j] for i, j, value in self.entries)


@lru_cache(maxsize=1)
def enriques_form() -> GramForm:
    """The verified Gram form; built and checked once per process."""
    form = GramForm.enriques()
    form.check()
    return form
