"""
Bounded enumeration of lattice vectors.

The form U + E8(-1) is indefinite, so searches are organised around positive
definite forms: the E8 block (negated) for norm searches inside a height box,
and the majorant 2(D,x)^2 - (D^2)(x,x) for isotropic searches around a class D
of positive square. Both are handed to fplll as exact integer Gram matrices;
the height box and the exact value checks are applied to what it returns.
"""
from collections.abc import Iterator, Sequence
from functools import lru_cache
from typing import Literal

import structlog
from fpylll import GSO, Enumeration, EnumerationError, EvaluatorStrategy, IntegerMatrix

from src.config.settings import settings
from src.errors import BoundTooLarge, LatticeError
from src.lattice.classes import NSClass, pair, square
from src.lattice.form import RANK, e8_cartan, enriques_form

logger = structlog.get_logger("enriques.lattice")

Block = Literal["full", "u", "e8"]


class SearchBudget:
    """Counts visited candidates and aborts once the safety limit is passed."""

    def __init__(self, limit: int | None = None, label: str = "enumeration"):
        self.limit = limit if limit is not None else settings.search_limit
        self.label = label
        self.spent = 0

    @property
    def remaining(self) -> int:
        return max(self.limit - self.spent, 0)

    def spend(self, count: int = 1) -> None:
        self.spent += count
        if self.spent > self.limit:
            raise BoundTooLarge(
                f"{self.label} exceeded the search limit of {self.limit} candidates",
                limit=self.limit,
            )


class QuadraticForm:
    """Exact positive definite integer form with an fplll Gram-Schmidt object."""

    def __init__(self, gram: Sequence[Sequence[int]]):
        self.gram = tuple(tuple(int(v) for v in row) for row in gram)
        self.rank = len(self.gram)
        self._entries = [
            (i, j, v) for i, row in enumerate(self.gram) for j, v in enumerate(row) if v
        ]
        self._gso = GSO.Mat(
            IntegerMatrix.from_matrix([list(row) for row in self.gram]), flags=GSO.INT_GRAM, gram=True
        )
        self._gso.update_gso()
        if any(self._gso.get_r(i, i) <= 0 for i in range(self.rank)):
            raise LatticeError("quadratic form is not positive definite")

    def value(self, x: tuple[int, ...]) -> int:
        return sum(v * x[i] * x[j] for i, j, v in self._entries)

    def points(
        self, bound: int, box: int | None = None, budget: SearchBudget | None = None
    ) -> Iterator[tuple[int, ...]]:
        """
        Yield integer vectors with x^T G x <= bound (a superset within float slack).

        The zero vector comes first; fplll returns one of each pair +-x and both
        are yielded.

        Args:
            bound: Upper bound on the form value
            box: Optional bound on every |x_i|
            budget: Candidate counter shared with the caller
        """
        if bound < 0:
            return
        budget = budget or SearchBudget()
        budget.spend()
        yield (0,) * self.rank

        enumeration = Enumeration(
            self._gso,
            nr_solutions=budget.remaining + 1,
            strategy=EvaluatorStrategy.BEST_N_SOLUTIONS,
        )
        radius = bound + 0.5 + 1e-9 * bound
        try:
            solutions = enumeration.enumerate(0, self.rank, radius, 0)
        except EnumerationError:
            return
        budget.spend(len(solutions))

        for _, coefficients in solutions:
            x = tuple(int(round(c)) for c in coefficients)
            for point in (x, tuple(-c for c in x)):
                if box is None or max(abs(c) for c in point) <= box:
                    yield point


@lru_cache(maxsize=1)
def _e8_form() -> QuadraticForm:
    return QuadraticForm(e8_cartan().tolist())


def _check_height(height_bound: int) -> None:
    if height_bound < 0:
        raise ValueError(f"height_bound must be non-negative, got {height_bound}")


def enumerate_by_norm(
    norm: int,
    height_bound: int,
    block: Block = "full",
    limit: int | None = None,
) -> list[NSClass]:
    """
    All nonzero torsion-free classes of the given norm inside a height box.

    Args:
        norm: Required self-pairing
        height_bound: Bound on the absolute value of every coordinate
        block: Restrict to the U block, the E8 block, or search the full lattice
        limit: Override of the configured search limit

    Returns:
        Deduplicated classes in lexicographic order

    Raises:
        BoundTooLarge: If the search visits more candidates than the limit
    """
    _check_height(height_bound)
    budget = SearchBudget(limit, label=f"norm {norm} enumeration")
    found: set[tuple[int, ...]] = set()
    box = range(-height_bound, height_bound + 1)

    if block == "u":
        for m in box:
            for n in box:
                budget.spend()
                if 2 * m * n == norm and (m, n) != (0, 0):
                    found.add((m, n) + (0,) * 8)
    elif block == "e8":
        target = -norm
        if target > 0:
            e8 = _e8_form()
            for y in e8.points(target, box=height_bound, budget=budget):
                if e8.value(y) == target:
                    found.add((0, 0) + y)
    elif block == "full":
        e8 = _e8_form()
        for m in box:
            for n in box:
                budget.spend()
                target = 2 * m * n - norm
                for y in e8.points(target, box=height_bound, budget=budget):
                    if e8.value(y) == target and (m, n, *y) != (0,) * 10:
                        found.add((m, n) + y)
    else:
        raise ValueError(f"unknown block {block!r}")

    logger.debug(
        "Enumerated classes by norm",
        norm=norm,
        height_bound=height_bound,
        block=block,
        count=len(found),
        candidates=budget.spent,
    )
    return [NSClass(free) for free in sorted(found)]


def majorant_form(d: NSClass) -> QuadraticForm:
    """
    The positive definite form x -> 2(D,x)^2 - (D^2)(x,x) for (D^2) > 0.

    An isotropic x with |(D,x)| = k has majorant value exactly 2k^2.
    """
    d2 = square(d)
    if d2 <= 0:
        raise ValueError(f"majorant needs a class of positive square, got {d2}")
    entries = enriques_form().entries
    gd = [0] * RANK
    for i, j, value in entries:
        gd[i] += value * d.free[j]
    gram = [[2 * gd[i] * gd[j] for j in range(RANK)] for i in range(RANK)]
    for i, j, value in entries:
        gram[i][j] -= d2 * value
    return QuadraticForm(gram)


def enumerate_isotropic(
    pair_with: NSClass,
    pair_bound: int,
    height_bound: int,
    limit: int | None = None,
) -> list[NSClass]:
    """
    Nonzero torsion-free isotropic classes x with 0 < (pair_with, x) <= pair_bound.

    For ``pair_with`` of positive square the search runs inside the majorant
    ellipsoid, which is finite regardless of height; otherwise the height box
    drives the search.

    Returns:
        Classes with every coordinate bounded by ``height_bound``, in
        lexicographic order

    Raises:
        BoundTooLarge: If the search visits more candidates than the limit
    """
    if pair_bound < 1:
        raise ValueError(f"pair_bound must be at least 1, got {pair_bound}")
    _check_height(height_bound)

    if square(pair_with) > 0:
        budget = SearchBudget(limit, label="isotropic enumeration")
        form = majorant_form(pair_with)
        candidates = (
            NSClass(x)
            for x in form.points(2 * pair_bound * pair_bound, box=height_bound, budget=budget)
            if any(x)
        )
    else:
        candidates = iter(enumerate_by_norm(0, height_bound, limit=limit))

    found = {
        x
        for x in candidates
        if square(x) == 0 and 0 < pair(pair_with, x) <= pair_bound
    }
    return sorted(found)
