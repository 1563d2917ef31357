"""
Unit tests for surface descriptors: the line form, YAML and the schema.
"""
from pathlib import Path

import pytest
from pydantic import ValidationError

from src.config.loader import SurfaceLoader, parse_descriptor
from src.config.settings import settings
from src.errors import InputError, InvalidSurface, ParseError
from src.lattice import CANONICAL, E, e8_root
from src.schemas.surface import ClassSpec, SurfaceDescriptor
from tests import models

AMPLE = "ample = [2,2,-1,0,0,0,0,0,0,0;0]"


class TestParseDescriptor:
    """Test the line form."""

    def test_full_descriptor(self):
        """Test a descriptor using every key."""
        raw = parse_descriptor(
            "# comment\n"
            "classical = false\n"
            f"{AMPLE}  # trailing comment\n"
            "root = [0,0,1,0,0,0,0,0,0,0]\n"
            "\n"
            "coeff_bound = 3\n"
            "height_bound = 2\n"
        )
        assert raw["classical"] is False
        assert raw["ample"] == {"free": [2, 2, -1, 0, 0, 0, 0, 0, 0, 0], "torsion": 0}
        assert raw["roots"] == [{"free": [0, 0, 1, 0, 0, 0, 0, 0, 0, 0], "torsion": 0}]
        assert (raw["coeff_bound"], raw["height_bound"]) == (3, 2)

    def test_roots_repeat(self):
        """Test that root lines accumulate."""
        raw = parse_descriptor(f"{AMPLE}\nroot = [0,0,1,0,0,0,0,0,0,0]\nroot = [0,0,0,0,1,0,0,0,0,0]\n")
        assert len(raw["roots"]) == 2

    def test_duplicate_key(self):
        """Test that a repeated scalar key is reported with its position."""
        with pytest.raises(ParseError, match="duplicate key 'ample'") as excinfo:
            parse_descriptor(f"{AMPLE}\n{AMPLE}\n")
        assert (excinfo.value.line, excinfo.value.column) == (2, 1)

    def test_unknown_key(self):
        """Test that an unknown key is reported with its position."""
        with pytest.raises(ParseError, match="unknown key 'polarization'") as excinfo:
            parse_descriptor(f"{AMPLE}\n  polarization = 1\n")
        assert (excinfo.value.line, excinfo.value.column) == (2, 3)

    def test_bad_bool(self):
        """Test that a non-boolean classical value is rejected."""
        with pytest.raises(ParseError, match="true or false") as excinfo:
            parse_descriptor(f"classical = yes\n{AMPLE}\n")
        assert excinfo.value.column == 13

    def test_bad_int(self):
        """Test that a non-integer bound is rejected."""
        with pytest.raises(ParseError, match="expected an integer") as excinfo:
            parse_descriptor(f"{AMPLE}\ncoeff_bound = x\n")
        assert (excinfo.value.line, excinfo.value.column) == (2, 15)

    def test_class_error_column_is_absolute(self):
        """Test that class errors point into the whole line."""
        with pytest.raises(ParseError, match="expected 10 coordinates") as excinfo:
            parse_descriptor("ample = [1,2]\n")
        assert excinfo.value.column == 9

    def test_missing_equals(self):
        """Test that a line without '=' is rejected."""
        with pytest.raises(ParseError, match="key = value"):
            parse_descriptor(f"{AMPLE}\nclassical\n")

    def test_missing_ample(self):
        """Test that the ample class is required."""
        with pytest.raises(ParseError, match="missing required key 'ample'"):
            parse_descriptor("classical = true\n")


class TestClassSpec:
    """Test the schema for a single class."""

    def test_list_shorthand(self):
        """Test the plain list form."""
        assert ClassSpec.model_validate([1, 0, 0, 0, 0, 0, 0, 0, 0, 0]).to_class() == E

    def test_string_shorthand(self):
        """Test the bracket string form."""
        spec = ClassSpec.model_validate("[0,0,0,0,0,0,0,0,0,0;1]")
        assert spec.to_class() == CANONICAL

    def test_from_class(self):
        """Test building a spec from an existing class."""
        assert ClassSpec.model_validate(e8_root(2)).to_class() == e8_root(2)

    def test_arity(self):
        """Test that ten coordinates are required."""
        with pytest.raises(ValidationError, match="expected 10 coordinates"):
            ClassSpec.model_validate([1, 2, 3])

    def test_torsion_range(self):
        """Test that the torsion bit must be 0 or 1."""
        with pytest.raises(ValidationError):
            ClassSpec(free=[0] * 10, torsion=2)


class TestSurfaceDescriptor:
    """Test descriptor to model conversion."""

    def test_defaults_from_settings(self):
        """Test that bounds default to the configured values."""
        descriptor = SurfaceDescriptor.model_validate({"ample": [1, 1, 0, 0, 0, 0, 0, 0, 0, 0]})
        model = descriptor.to_model()
        assert model.classical
        assert model.nodal_roots == ()
        assert model.coeff_bound == settings.default_coeff_bound
        assert model.height_bound == settings.default_height_bound

    def test_invalid_model(self):
        """Test that model violations are reported."""
        descriptor = SurfaceDescriptor.model_validate(
            {"ample": [1, 1, 0, 0, 0, 0, 0, 0, 0, 0], "roots": [[0, 0, 1, 0, 0, 0, 0, 0, 0, 0]]}
        )
        with pytest.raises(InvalidSurface, match="ample class not positive on root"):
            descriptor.to_model()

    def test_negative_bound_rejected(self):
        """Test that negative bounds fail schema validation."""
        with pytest.raises(ValidationError):
            SurfaceDescriptor.model_validate(
                {"ample": [1, 1, 0, 0, 0, 0, 0, 0, 0, 0], "coeff_bound": -1}
            )


class TestSurfaceLoader:
    """Test loading descriptors from disk."""

    def test_line_form(self, single_root_descriptor: Path):
        """Test loading a line-oriented descriptor."""
        model = SurfaceLoader(single_root_descriptor).load_model()
        assert model.nodal_roots == (models.DELTA,)
        assert model.ample == models.H_SINGLE
        assert model.classical

    def test_yaml_form(self, a2_descriptor_yaml: Path):
        """Test loading a YAML descriptor."""
        loader = SurfaceLoader(a2_descriptor_yaml)
        assert loader.is_yaml
        model = loader.load_model()
        assert model.nodal_roots == models.A2_ROOTS
        assert model.coeff_bound == 4

    def test_bound_overrides(self, single_root_descriptor: Path):
        """Test that explicit bounds override the file."""
        model = SurfaceLoader(single_root_descriptor).load_model(coeff_bound=2, height_bound=1)
        assert (model.coeff_bound, model.height_bound) == (2, 1)

    def test_invalid_surface(self, invalid_descriptor: Path):
        """Test that an invalid surface raises InvalidSurface."""
        with pytest.raises(InvalidSurface) as excinfo:
            SurfaceLoader(invalid_descriptor).load_model()
        assert any("degree 0" in v for v in excinfo.value.violations)

    def test_missing_file(self, tmp_path: Path):
        """Test that a missing file is an input error."""
        with pytest.raises(InputError, match="not found"):
            SurfaceLoader(tmp_path / "absent.surface").load()

    def test_yaml_must_be_mapping(self, tmp_path: Path):
        """Test that a YAML list is rejected."""
        path = tmp_path / "list.yaml"
        path.write_text("- 1\n- 2\n", encoding="utf-8")
        with pytest.raises(InputError, match="mapping"):
            SurfaceLoader(path).load()

    def test_yaml_syntax_error(self, tmp_path: Path):
        """Test that malformed YAML is an input error."""
        path = tmp_path / "broken.yml"
        path.write_text("ample: [1, 2\nroots: {\n", encoding="utf-8")
        with pytest.raises(ParseError, match="invalid YAML"):
            SurfaceLoader(path).load()

    def test_yaml_schema_error(self, tmp_path: Path):
        """Test that schema errors are input errors."""
        path = tmp_path / "short.yaml"
        path.write_text("ample: [1, 1, 0]\n", encoding="utf-8")
        with pytest.raises(InputError, match="ample"):
            SurfaceLoader(path).load()

    def test_line_form_error_names_file(self, tmp_path: Path):
        """Test that parse errors name the file."""
        path = tmp_path / "typo.surface"
        path.write_text(f"{AMPLE}\nroot = [0,0,1]\n", encoding="utf-8")
        with pytest.raises(ParseError) as excinfo:
            SurfaceLoader(path).load()
        assert excinfo.value.source == str(path)
        assert excinfo.value.line == 2
