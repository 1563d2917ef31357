"""
Pydantic report models written by the command line interface.

Field order is the output order; keep it stable, reports are compared
byte for byte.
"""
from typing import Literal

from pydantic import BaseModel, Field

from src import __version__
from src.moduli.verdict import Verdict
from src.mukai.vector import MukaiVector
from src.surface.model import SurfaceModel
from src.surface.reduction import ReductionTrace

TOOL_NAME = "enriques-moduli"

Status = Literal["nonempty", "empty", "unknown", "inapplicable"]


class ReportBase(BaseModel):
    """Fields shared by every report."""

    tool: str = Field(TOOL_NAME, description="Tool name")
    version: str = Field(__version__, description="Tool version")
    command: str = Field(..., description="Command that produced the report")
    timing_seconds: float | None = Field(None, description="Wall time, only with --timing")

    def document(self) -> dict:
        """JSON-compatible dict; timing is left out unless it was measured."""
        exclude = {"timing_seconds"} if self.timing_seconds is None else set()
        return self.model_dump(mode="json", exclude=exclude)


class SurfaceSummary(BaseModel):
    classical: bool
    ample: str
    roots: list[str]
    coeff_bound: int
    height_bound: int

    @classmethod
    def from_model(cls, model: SurfaceModel) -> "SurfaceSummary":
        return cls(
            classical=model.classical,
            ample=str(model.ample),
            roots=[str(root) for root in model.nodal_roots],
            coeff_bound=model.coeff_bound,
            height_bound=model.height_bound,
        )


def verdict_status(verdict: Verdict) -> Status:
    if verdict.is_inapplicable:
        return "inapplicable"
    if verdict.nonempty is None:
        return "unknown"
    return "nonempty" if verdict.nonempty else "empty"


class DecideReport(ReportBase):
    """Existence verdict for one Mukai vector."""

    command: str = "decide"
    surface: SurfaceSummary
    vector: str = Field(..., description="Input vector as (r,[L;t],s)")
    status: Status
    nonempty: bool | None
    procedure: str
    case: str | None
    self_pairing: int | None = Field(None, description="<v^2> = (L^2) - rs")
    gcd_rs: int | None = None
    gcd_primitive: int | None = None
    witness: str | None = Field(None, description="Nodal cycle for cases iv / spherical-rank2")
    witness_coefficients: list[int] | None = Field(
        None, description="Witness as a combination of the nodal roots, only with --trace"
    )
    dimension: int | None = None
    dimension_proved: bool = False
    notes: list[str] = Field(default_factory=list)

    @classmethod
    def from_verdict(
        cls,
        model: SurfaceModel,
        v: MukaiVector,
        verdict: Verdict,
        witness_coefficients: tuple[int, ...] | None = None,
    ) -> "DecideReport":
        divisibility = verdict.divisibility
        return cls(
            surface=SurfaceSummary.from_model(model),
            vector=str(v),
            status=verdict_status(verdict),
            nonempty=verdict.nonempty,
            procedure=verdict.procedure.value,
            case=verdict.case.value if verdict.case else None,
            self_pairing=verdict.self_pairing,
            gcd_rs=divisibility.g_rs if divisibility else None,
            gcd_primitive=divisibility.g_primitive if divisibility else None,
            witness=str(verdict.witness) if verdict.witness is not None else None,
            witness_coefficients=list(witness_coefficients) if witness_coefficients else None,
            dimension=verdict.dimension,
            dimension_proved=verdict.dimension_proved,
            notes=list(verdict.notes),
        )


class FMReport(ReportBase):
    """Image of a Mukai vector under the Fourier-Mukai transform."""

    command: str = "fm"
    classical: bool
    vector: str
    image: str
    chi: int
    self_pairing: int
    image_self_pairing: int
    involution: Literal["ok", "failed"]
    closed_form: Literal["agrees", "disagrees", "not defined"]


class PairReport(ReportBase):
    command: str = "lattice pair"
    a: str
    b: str
    pairing: int


class StepReport(BaseModel):
    root: str
    result: str


class ReductionReport(ReportBase):
    """Weyl reduction of a class into the nef chamber."""

    command: str = "lattice reduce"
    start: str
    final: str
    self_pairing: int
    steps: list[StepReport]

    @classmethod
    def from_trace(cls, trace: ReductionTrace, self_pairing: int) -> "ReductionReport":
        return cls(
            start=str(trace.start),
            final=str(trace.final),
            self_pairing=self_pairing,
            steps=[StepReport(root=str(s.root), result=str(s.result)) for s in trace.steps],
        )


class IsotropicReport(ReportBase):
    command: str = "lattice isotropic"
    d: str
    self_pairing: int
    bound: int = Field(..., description="floor(sqrt((D^2)))")
    companion: str
    pairing: int
    steps: list[StepReport] | None = Field(None, description="Reduction of D, only with --trace")


class RootsReport(ReportBase):
    command: str = "lattice roots"
    count: int
    summary: str


class ValidateReport(ReportBase):
    command: str = "validate"
    source: str
    valid: bool
    violations: list[str] = Field(default_factory=list)
    surface: SurfaceSummary | None = None
