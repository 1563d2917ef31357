"""
Reflections in (-2)-classes, the generators of the Weyl group of nodal roots.
"""
from dataclasses import dataclass

from src.errors import NotARoot
from src.lattice.classes import NSClass, pair, square


@dataclass(frozen=True, slots=True)
class Reflection:
    """Reflection x -> x + (x, root) root in a torsion-free class of square -2."""

    root: NSClass

    def __post_init__(self) -> None:
        if self.root.torsion != 0:
            raise NotARoot(f"root {self.root} carries a torsion bit")
        norm = square(self.root)
        if norm != -2:
            raise NotARoot(f"class {self.root} has self-pairing {norm}, expected -2")

    def __call__(self, x: NSClass) -> NSClass:
        return x + pair(x, self.root) * self.root


def reflect(root: NSClass, x: NSClass) -> NSClass:
    """
    Reflect ``x`` in ``root``.

    The torsion bit of ``x`` is unchanged because the root is torsion-free.

    Raises:
        NotARoot: If ``root`` does not have self-pairing -2 or has torsion.
    """
    return Reflection(root)(x)
