"""
Verdicts of the existence decision procedures.
"""
from dataclasses import dataclass, field
from enum import Enum

from src.lattice.classes import NSClass
from src.mukai.divisibility import Divisibility


class VerdictCase(str, Enum):
    """Which clause of the existence criterion decided the verdict."""

    I = "i"
    II = "ii"
    III = "iii"
    IV = "iv"
    SPHERICAL_RANK2 = "spherical-rank2"
    INAPPLICABLE = "inapplicable"


class Procedure(str, Enum):
    """Which decision procedure produced the verdict."""

    EXISTENCE = "existence"
    RANK0 = "rank0"
    SPHERICAL_RANK2 = "spherical-rank2"


@dataclass(frozen=True)
class Verdict:
    """
    Decision for M_H(v) != empty.

    ``nonempty`` is None when the verdict is unknown (a search bound was hit)
    or the criterion is inapplicable. ``case`` is None when no clause holds.
    """

    nonempty: bool | None
    procedure: Procedure
    case: VerdictCase | None = None
    self_pairing: int | None = None
    divisibility: Divisibility | None = None
    witness: NSClass | None = None
    dimension: int | None = None
    dimension_proved: bool = False
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def is_unknown(self) -> bool:
        return self.nonempty is None and self.case is not VerdictCase.INAPPLICABLE

    @property
    def is_inapplicable(self) -> bool:
        return self.case is VerdictCase.INAPPLICABLE

    def invariant_violations(self) -> list[str]:
        """Structural checks every returned verdict must pass."""
        problems = []
        needs_witness = self.case in (VerdictCase.IV, VerdictCase.SPHERICAL_RANK2)
        if self.nonempty and needs_witness and self.witness is None:
            problems.append(f"case {self.case.value} verdict without a nodal witness")
        if self.dimension is not None and self.nonempty is not True:
            problems.append("dimension reported for a verdict that is not nonempty")
        if self.nonempty and self.self_pairing is not None and self.self_pairing < -2:
            problems.append(f"nonempty verdict with <v^2> = {self.self_pairing} < -2")
        return problems
