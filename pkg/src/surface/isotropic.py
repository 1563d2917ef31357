"""
Effective isotropic companions: for an effective D with (D^2) > 0, an
effective isotropic f with 0 < (D, f) <= sqrt((D^2)).
"""
from math import isqrt

import structlog

from src.errors import NotFoundWithinBound, SurfaceError
from src.lattice.classes import NSClass, pair, square
from src.lattice.enumeration import enumerate_isotropic
from src.surface.effectivity import is_effective
from src.surface.model import SurfaceModel
from src.surface.reduction import weyl_reduce

logger = structlog.get_logger("enriques.surface.isotropic")


def isotropic_companion(model: SurfaceModel, d: NSClass) -> NSClass:
    """
    Find an effective isotropic f with 0 < (D, f) <= floor(sqrt((D^2))).

    D is first moved into the nef chamber by Weyl reduction; there every
    isotropic class meeting it positively is effective. The candidate with the
    smallest pairing (then smallest height, then lexicographically first) is
    mapped back through the inverse reflections.

    Raises:
        ValueError: If D is not effective with positive square
        NotFoundWithinBound: If no candidate lies inside the height bound
    """
    d = model.collapse(d)
    d2 = square(d)
    if d2 <= 0:
        raise ValueError(f"isotropic companion needs (D^2) > 0, got {d2} for {d}")
    if not is_effective(model, d):
        raise ValueError(f"isotropic companion needs an effective class, {d} is not")

    trace = weyl_reduce(model, d)
    nef = trace.final
    bound = isqrt(d2)
    candidates = enumerate_isotropic(nef.without_torsion(), bound, model.height_bound)
    if not candidates:
        raise NotFoundWithinBound(
            f"no isotropic class meets {nef} in (0, {bound}] within height {model.height_bound}; "
            "raise height_bound"
        )

    best = min(candidates, key=lambda f: (pair(nef, f), f.height, f))
    companion = trace.pull_back(best)

    pairing = pair(d, companion)
    if square(companion) != 0 or not 0 < pairing <= bound or not is_effective(model, companion):
        raise SurfaceError(f"isotropic companion {companion} of {d} failed its postcondition")

    logger.debug(
        "Isotropic companion",
        d=str(d),
        companion=str(companion),
        pairing=pairing,
        reduction_steps=len(trace.steps),
    )
    return companion
