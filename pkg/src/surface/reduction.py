"""
Weyl reduction into the nef chamber of the nodal roots.
"""
from dataclasses import dataclass

import structlog

from src.config.settings import settings
from src.errors import NonTermination
from src.lattice.classes import NSClass, pair
from src.lattice.reflection import reflect
from src.surface.model import SurfaceModel

logger = structlog.get_logger("enriques.surface.reduction")


@dataclass(frozen=True)
class ReductionStep:
    """One reflection: the root used and the class it produced."""

    root: NSClass
    result: NSClass


@dataclass(frozen=True)
class ReductionTrace:
    """Witness w(D) of a Weyl reduction: the steps taken and the final class."""

    start: NSClass
    steps: tuple[ReductionStep, ...]
    final: NSClass

    def pull_back(self, x: NSClass) -> NSClass:
        """
        Map a class from the reduced side back: (final, x) = (start, pull_back(x)).

        Reflections are involutions, so w^-1 applies the same roots in reverse.
        """
        for step in reversed(self.steps):
            x = reflect(step.root, x)
        return x


def weyl_reduce(model: SurfaceModel, d: NSClass, max_steps: int | None = None) -> ReductionTrace:
    """
    Reflect ``d`` in nodal roots it meets negatively until it meets none negatively.

    The first root in model order with negative pairing is used at each step,
    so (current, H) drops by |(current, delta)| (delta, H) per step.

    Raises:
        NonTermination: If the iteration cap is reached
    """
    cap = max_steps if max_steps is not None else settings.reduction_max_steps
    current = d
    steps: list[ReductionStep] = []

    while True:
        root = next((r for r in model.nodal_roots if pair(current, r) < 0), None)
        if root is None:
            break
        if len(steps) >= cap:
            raise NonTermination(
                f"Weyl reduction of {d} did not reach the nef chamber in {cap} steps"
            )
        current = reflect(root, current)
        steps.append(ReductionStep(root=root, result=current))

    if steps:
        logger.debug("Weyl reduction", start=str(d), final=str(current), steps=len(steps))
    return ReductionTrace(start=d, steps=tuple(steps), final=current)


def is_nef(model: SurfaceModel, d: NSClass) -> bool:
    """Non-negative on every nodal root and on the polarization."""
    return pair(d, model.ample) >= 0 and all(pair(d, r) >= 0 for r in model.nodal_roots)
