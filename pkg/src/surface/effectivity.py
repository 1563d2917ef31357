"""
Effectivity of divisor classes.

Classes of non-negative square are decided by Riemann-Roch: on an Enriques
surface chi(O(D)) = (D^2)/2 + 1 > 0, so D or K_X - D is effective, and the
sign of (D, H) picks which. Classes of negative square are only recognised
inside the non-negative span of the nodal roots.
"""
from dataclasses import dataclass

import structlog

from src.errors import InvalidSurface, SearchBoundExceeded
from src.lattice.classes import NSClass, pair, square
from src.lattice.enumeration import SearchBudget
from src.surface.model import SurfaceModel, validate
from src.surface.reduction import weyl_reduce

logger = structlog.get_logger("enriques.surface.effectivity")


@dataclass(frozen=True)
class RootSpanSearch:
    """Outcome of writing a class as a non-negative combination of nodal roots."""

    representations: tuple[tuple[int, ...], ...]
    truncated: bool

    @property
    def found(self) -> bool:
        return bool(self.representations)

    def require_decided(self, target: NSClass, bound: int) -> None:
        if not self.found and self.truncated:
            raise SearchBoundExceeded(
                f"could not decide whether {target} lies in the nodal root span "
                f"with coefficients <= {bound}"
            )


def root_representations(
    model: SurfaceModel, target: NSClass, limit: int | None = None
) -> RootSpanSearch:
    """
    All coefficient vectors a >= 0 with sum(a_i delta_i) = target, a_i <= coeff_bound.

    Every root has positive degree, so a_i <= (target, H) / (delta_i, H); the
    search is truncated (and reported so) only when coeff_bound is the
    tighter of the two caps.

    Raises:
        InvalidSurface: If a root has non-positive degree on the polarization
    """
    roots = model.nodal_roots
    degrees = model.root_degrees
    bound = model.coeff_bound
    if target.torsion or not roots:
        return RootSpanSearch(representations=(), truncated=False)
    if any(d <= 0 for d in degrees):
        raise InvalidSurface(validate(model))

    budget = SearchBudget(limit, label="root span search")
    found: list[tuple[int, ...]] = []
    truncated = False
    coefficients = [0] * len(roots)

    def descend(i: int, remaining: tuple[int, ...], degree: int) -> None:
        nonlocal truncated
        budget.spend()
        if degree == 0 or i == len(roots):
            if not any(remaining):
                found.append(tuple(coefficients))
            return
        by_degree = degree // degrees[i]
        if by_degree > bound:
            truncated = True
        root = roots[i].free
        for a in range(min(by_degree, bound) + 1):
            coefficients[i] = a
            descend(
                i + 1,
                tuple(x - a * y for x, y in zip(remaining, root)),
                degree - a * degrees[i],
            )
        coefficients[i] = 0

    degree = pair(target, model.ample)
    if degree >= 0:
        descend(0, target.free, degree)
    return RootSpanSearch(representations=tuple(found), truncated=truncated)


def is_effective(model: SurfaceModel, d: NSClass) -> bool:
    """
    Decide whether ``d`` is the class of an effective divisor.

    For negative square, False only means d is not a non-negative combination
    of the listed nodal roots: delta + 2f is effective but reads False here.

    Raises:
        InvalidSurface: If a root has non-positive degree on the polarization
        SearchBoundExceeded: If a negative-square class could not be decided
            within the coefficient bound
    """
    d = model.collapse(d)
    if d.is_free_zero:
        # 0 is not an effective divisor and K_X has no sections.
        return False

    if square(d) >= 0:
        # The future light cone is stable under the Weyl group.
        if pair(d, model.ample) <= 0:
            return False
        return pair(weyl_reduce(model, d).final, model.ample) > 0

    search = root_representations(model, d)
    search.require_decided(d, model.coeff_bound)
    logger.debug("Root span membership", target=str(d), found=search.found)
    return search.found
