"""
Pydantic schema for surface descriptors.
"""
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.cli.parsing import parse_class
from src.config.settings import settings
from src.lattice.classes import NSClass
from src.lattice.form import RANK
from src.surface.model import SurfaceModel


class ClassSpec(BaseModel):
    """A divisor class: ten coordinates and the K_X torsion bit."""

    model_config = ConfigDict(frozen=True)

    free: list[int] = Field(..., description="Coordinates in the (e, f, alpha_1..alpha_8) basis")
    torsion: int = Field(0, ge=0, le=1, description="Coefficient of K_X")

    @model_validator(mode="before")
    @classmethod
    def accept_shorthand(cls, data: Any) -> Any:
        """Allow ``[c1, ..., c10]`` and ``"[c1,...,c10;t]"`` besides the mapping form."""
        if isinstance(data, (list, tuple)):
            return {"free": list(data)}
        if isinstance(data, str):
            parsed = parse_class(data)
            return {"free": list(parsed.free), "torsion": parsed.torsion}
        if isinstance(data, NSClass):
            return {"free": list(data.free), "torsion": data.torsion}
        return data

    @field_validator("free")
    @classmethod
    def check_arity(cls, v: list[int]) -> list[int]:
        if len(v) != RANK:
            raise ValueError(f"expected {RANK} coordinates, got {len(v)}")
        return v

    def to_class(self) -> NSClass:
        return NSClass(tuple(self.free), self.torsion)


class SurfaceDescriptor(BaseModel):
    """On-disk form of a surface model."""

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "classical": True,
                "ample": {"free": [2, 2, -1, 0, 0, 0, 0, 0, 0, 0], "torsion": 0},
                "roots": [[0, 0, 1, 0, 0, 0, 0, 0, 0, 0]],
                "coeff_bound": 6,
                "height_bound": 6,
            }
        }
    )

    classical: bool = Field(True, description="False for a surface with K_X = 0")
    ample: ClassSpec = Field(..., description="Polarization H")
    roots: list[ClassSpec] = Field(default_factory=list, description="Nodal root classes")
    coeff_bound: int | None = Field(None, ge=0, description="Nodal-cycle coefficient bound")
    height_bound: int | None = Field(None, ge=0, description="Enumeration height bound")

    def to_model(self) -> SurfaceModel:
        """
        Build the surface model and check its invariants.

        Raises:
            InvalidSurface: Listing every violated invariant
        """
        model = SurfaceModel(
            classical=self.classical,
            nodal_roots=tuple(root.to_class() for root in self.roots),
            ample=self.ample.to_class(),
            coeff_bound=settings.default_coeff_bound if self.coeff_bound is None else self.coeff_bound,
            height_bound=(
                settings.default_height_bound if self.height_bound is None else self.height_bound
            ),
        )
        return model.validated()
