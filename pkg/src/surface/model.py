"""
Surface models: a nodal root configuration together with a polarization.
"""
from dataclasses import dataclass, field, replace
from functools import cached_property

from src.config.settings import settings
from src.errors import InvalidSurface
from src.lattice.classes import CANONICAL, ZERO, NSClass, pair, square
from src.mukai.vector import MukaiVector


@dataclass(frozen=True)
class SurfaceModel:
    """
    One chamber of one Enriques surface.

    ``nodal_roots`` are the classes of the irreducible smooth rational curves
    that matter for the question at hand; an empty tuple models an unnodal
    surface. ``classical`` is False for a surface with K_X = 0.
    """

    classical: bool
    nodal_roots: tuple[NSClass, ...]
    ample: NSClass
    coeff_bound: int = field(default_factory=lambda: settings.default_coeff_bound)
    height_bound: int = field(default_factory=lambda: settings.default_height_bound)

    @property
    def canonical(self) -> NSClass:
        """K_X: the torsion class on a classical surface, zero otherwise."""
        return CANONICAL if self.classical else ZERO

    def collapse(self, x: NSClass) -> NSClass:
        """Read a class on this surface (drops the torsion bit when K_X = 0)."""
        return x if self.classical else x.without_torsion()

    def collapse_vector(self, v: MukaiVector) -> MukaiVector:
        return v if self.classical else v.collapse_torsion()

    def twin(self) -> "SurfaceModel":
        """The same configuration and polarization with the other type of K_X."""
        return replace(
            self,
            classical=not self.classical,
            ample=self.ample.without_torsion(),
        )

    def with_bounds(
        self, coeff_bound: int | None = None, height_bound: int | None = None
    ) -> "SurfaceModel":
        return replace(
            self,
            coeff_bound=self.coeff_bound if coeff_bound is None else coeff_bound,
            height_bound=self.height_bound if height_bound is None else height_bound,
        )

    @cached_property
    def root_degrees(self) -> tuple[int, ...]:
        """(delta, H) for every nodal root."""
        return tuple(pair(root, self.ample) for root in self.nodal_roots)

    @cached_property
    def root_gram(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(pair(a, b) for b in self.nodal_roots) for a in self.nodal_roots)

    def combination(self, coefficients: tuple[int, ...]) -> NSClass:
        """The class sum(a_i delta_i)."""
        total = ZERO
        for a, root in zip(coefficients, self.nodal_roots):
            if a:
                total = total + a * root
        return total

    def combination_square(self, coefficients: tuple[int, ...]) -> int:
        """(sum a_i delta_i)^2 computed from the root Gram matrix."""
        gram = self.root_gram
        return sum(
            a * b * gram[i][j]
            for i, a in enumerate(coefficients)
            if a
            for j, b in enumerate(coefficients)
            if b
        )

    def validate(self) -> list[str]:
        return validate(self)

    def validated(self) -> "SurfaceModel":
        """Return self, or raise InvalidSurface listing every violation."""
        violations = validate(self)
        if violations:
            raise InvalidSurface(violations)
        return self


def validate(model: SurfaceModel) -> list[str]:
    """
    Check the model invariants.

    Returns:
        Empty list for a valid model, otherwise one description per violation
    """
    violations: list[str] = []
    h = model.ample

    if square(h) <= 0:
        violations.append(f"ample class {h} has non-positive square {square(h)}")
    if not model.classical and h.torsion:
        violations.append(f"ample class {h} has a torsion bit on a non-classical surface")
    if model.coeff_bound < 0:
        violations.append(f"coeff_bound must be non-negative, got {model.coeff_bound}")
    if model.height_bound < 0:
        violations.append(f"height_bound must be non-negative, got {model.height_bound}")

    for i, root in enumerate(model.nodal_roots):
        label = f"root {i + 1} {root}"
        if root.torsion:
            violations.append(f"{label} has a torsion bit")
        norm = square(root)
        if norm != -2:
            violations.append(f"{label} has self-pairing {norm}, expected -2")
        if pair(h, root) <= 0:
            violations.append(f"ample class not positive on root: {label} has degree {pair(h, root)}")

    for i, a in enumerate(model.nodal_roots):
        for j in range(i + 1, len(model.nodal_roots)):
            b = model.nodal_roots[j]
            if a.free == b.free:
                violations.append(f"roots {i + 1} and {j + 1} coincide")
            elif pair(a, b) < 0:
                violations.append(
                    f"roots pair negatively: roots {i + 1} and {j + 1} meet with {pair(a, b)}"
                )

    return violations
