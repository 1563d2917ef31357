"""
Nodal cycles: effective (-2)-classes all of whose two-part splittings have
negative-square parts.
"""
import itertools
from collections.abc import Iterator

import structlog

from src.errors import SearchBoundExceeded
from src.lattice.classes import NSClass, square
from src.lattice.enumeration import SearchBudget
from src.mukai.divisibility import congruent_mod2
from src.surface.effectivity import root_representations
from src.surface.model import SurfaceModel

logger = structlog.get_logger("enriques.surface.nodal")


def _proper_parts(coefficients: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Every c with 0 <= c <= coefficients, c != 0 and c != coefficients."""
    for part in itertools.product(*(range(a + 1) for a in coefficients)):
        if any(part) and part != coefficients:
            yield part


def is_nodal_cycle(model: SurfaceModel, d: NSClass) -> bool:
    """
    Combinatorial nodal-cycle test.

    D is nodal when (D^2) = -2, D is a non-negative combination of nodal roots
    and every splitting D = C + C' into non-zero non-negative root
    combinations has (C^2) < 0 (both orders are enumerated, so C' as well).

    Raises:
        SearchBoundExceeded: If membership in the root span cannot be decided
    """
    d = model.collapse(d)
    if d.torsion or square(d) != -2:
        return False
    search = root_representations(model, d)
    search.require_decided(d, model.coeff_bound)
    if not search.found:
        return False
    return all(
        model.combination_square(part) < 0
        for representation in search.representations
        for part in _proper_parts(representation)
    )


def find_nodal_cycle_mod2(
    model: SurfaceModel, target: NSClass, limit: int | None = None
) -> NSClass | None:
    """
    Find a nodal cycle D with D = target modulo 2.

    Coefficient vectors up to ``coeff_bound`` are scanned in lexicographic
    order and the first nodal one is returned, so the witness is
    deterministic. Only the parity pattern of a coefficient vector decides the
    congruence, which filters most candidates before any pairing is computed.

    Returns:
        The witness, or None if no nodal cycle within the bound matches

    Raises:
        SearchBoundExceeded: If the coefficient box is larger than the search limit
    """
    target = model.collapse(target)
    roots = model.nodal_roots
    if not roots or (model.classical and target.torsion):
        return None

    budget = SearchBudget(limit, label="nodal cycle search")
    patterns = set()
    for pattern in itertools.product((0, 1), repeat=len(roots)):
        budget.spend()
        if congruent_mod2(model.combination(pattern), target, classical=model.classical):
            patterns.add(pattern)
    if not patterns:
        return None

    volume = (model.coeff_bound + 1) ** len(roots)
    if volume > budget.limit:
        raise SearchBoundExceeded(
            f"nodal cycle search over {volume} coefficient vectors exceeds the "
            f"search limit of {budget.limit}"
        )

    for coefficients in itertools.product(range(model.coeff_bound + 1), repeat=len(roots)):
        if tuple(a & 1 for a in coefficients) not in patterns or not any(coefficients):
            continue
        if model.combination_square(coefficients) != -2:
            continue
        candidate = model.combination(coefficients)
        if is_nodal_cycle(model, candidate):
            logger.debug(
                "Found nodal cycle", target=str(target), witness=str(candidate),
                coefficients=coefficients,
            )
            return candidate
    return None
