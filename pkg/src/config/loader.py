"""
Surface descriptor loader.

Two on-disk forms are accepted. The line form:

    # comment
    classical = true
    ample = [2,2,-1,0,0,0,0,0,0,0;0]
    root = [0,0,1,0,0,0,0,0,0,0]
    coeff_bound = 6
    height_bound = 6

and YAML (``.yaml``/``.yml``) with the keys of ``SurfaceDescriptor``.
"""
from pathlib import Path
from typing import Any

import structlog
import yaml
from pydantic import ValidationError

from src.cli.parsing import parse_class
from src.errors import InputError, ParseError
from src.schemas.surface import SurfaceDescriptor
from src.surface.model import SurfaceModel

logger = structlog.get_logger("enriques.config.loader")

YAML_SUFFIXES = {".yaml", ".yml"}
SINGLE_KEYS = {"classical", "ample", "coeff_bound", "height_bound"}


def _parse_int(value: str, line: int, column: int, source: str | None) -> int:
    try:
        return int(value)
    except ValueError:
        raise ParseError(f"expected an integer, found {value!r}", line, column, source) from None


def parse_descriptor(text: str, source: str | None = None) -> dict[str, Any]:
    """
    Parse the line form into a raw descriptor mapping.

    Raises:
        ParseError: On unknown or repeated keys and malformed values
    """
    data: dict[str, Any] = {"roots": []}
    seen: set[str] = set()

    for number, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if "=" not in line:
            column = len(line) - len(line.lstrip()) + 1
            raise ParseError("expected 'key = value'", number, column, source)

        key_part, value_part = line.split("=", 1)
        key = key_part.strip()
        key_column = len(key_part) - len(key_part.lstrip()) + 1
        value = value_part.strip()
        value_column = len(key_part) + 2 + (len(value_part) - len(value_part.lstrip()))

        if key in seen:
            raise ParseError(f"duplicate key {key!r}", number, key_column, source)
        if key in SINGLE_KEYS:
            seen.add(key)

        if key == "classical":
            if value not in ("true", "false"):
                raise ParseError(
                    f"classical must be true or false, found {value!r}", number, value_column, source
                )
            data["classical"] = value == "true"
        elif key in ("ample", "root"):
            parsed = parse_class(value, line=number, source=source, offset=value_column - 1)
            spec = {"free": list(parsed.free), "torsion": parsed.torsion}
            if key == "ample":
                data["ample"] = spec
            else:
                data["roots"].append(spec)
        elif key in ("coeff_bound", "height_bound"):
            data[key] = _parse_int(value, number, value_column, source)
        else:
            raise ParseError(f"unknown key {key!r}", number, key_column, source)

    if "ample" not in data:
        raise ParseError("missing required key 'ample'", 1, 1, source)
    return data


class SurfaceLoader:
    """Loads a surface descriptor from disk and builds the validated model."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self.raw: dict[str, Any] = {}

    @property
    def is_yaml(self) -> bool:
        return self.path.suffix.lower() in YAML_SUFFIXES

    def load_raw(self) -> dict[str, Any]:
        """
        Read the file into a raw mapping.

        Raises:
            InputError: If the file is missing or not a mapping
            ParseError: On syntax errors
        """
        if not self.path.exists():
            raise InputError(f"Surface descriptor not found: {self.path}")

        text = self.path.read_text(encoding="utf-8")
        if self.is_yaml:
            try:
                raw = yaml.safe_load(text)
            except yaml.YAMLError as exc:
                mark = getattr(exc, "problem_mark", None)
                line, column = (mark.line + 1, mark.column + 1) if mark else (1, 1)
                raise ParseError(f"invalid YAML: {exc}", line, column, str(self.path)) from exc
            if not isinstance(raw, dict):
                raise InputError(f"{self.path}: descriptor must be a mapping")
            self.raw = raw
        else:
            self.raw = parse_descriptor(text, source=str(self.path))

        logger.debug("Loaded surface descriptor", path=str(self.path), roots=len(self.raw.get("roots") or []))
        return self.raw

    def load(self) -> SurfaceDescriptor:
        """
        Load and schema-check the descriptor.

        Raises:
            InputError: If the descriptor does not fit the schema
        """
        raw = self.raw or self.load_raw()
        try:
            return SurfaceDescriptor.model_validate(raw)
        except ValidationError as exc:
            problems = "; ".join(
                f"{'.'.join(str(p) for p in err['loc']) or 'descriptor'}: {err['msg']}"
                for err in exc.errors()
            )
            raise InputError(f"{self.path}: {problems}") from exc

    def load_model(
        self, coeff_bound: int | None = None, height_bound: int | None = None
    ) -> SurfaceModel:
        """
        Load the descriptor, apply bound overrides and validate the model.

        Raises:
            InvalidSurface: Listing every violated model invariant
        """
        model = self.load().to_model()
        if coeff_bound is not None or height_bound is not None:
            model = model.with_bounds(coeff_bound, height_bound).validated()
        return model
