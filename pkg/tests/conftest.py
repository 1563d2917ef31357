"""
Pytest configuration and shared fixtures.
"""
from pathlib import Path

import pytest

from src.config.settings import settings
from src.surface.model import SurfaceModel
from tests import models
from tests.oracle import OracleConfig


@pytest.fixture
def unnodal_model() -> SurfaceModel:
    """Classical unnodal surface polarized by e + f."""
    return models.unnodal()


@pytest.fixture
def single_root_model() -> SurfaceModel:
    """Classical surface with one nodal root delta = a1."""
    return models.single_root()


@pytest.fixture
def non_classical_single_root_model(single_root_model: SurfaceModel) -> SurfaceModel:
    """The K_X = 0 twin of the single-root surface."""
    return single_root_model.twin()


@pytest.fixture
def a2_model() -> SurfaceModel:
    return models.a2()


@pytest.fixture
def a3_model() -> SurfaceModel:
    return models.a3()


@pytest.fixture
def d4_model() -> SurfaceModel:
    return models.d4()


@pytest.fixture
def e8_model() -> SurfaceModel:
    """All eight simple roots of E8; keep coefficient searches off this one."""
    return models.e8(coeff_bound=2)


@pytest.fixture
def oracle_config() -> OracleConfig:
    return OracleConfig()


@pytest.fixture
def small_search_limit(mocker):
    """Shrink the global search limit for the duration of a test."""
    mocker.patch.object(settings, "search_limit", 10)
    return 10


def _write(path: Path, text: str) -> Path:
    path.write_text(text, encoding="utf-8")
    return path


@pytest.fixture
def single_root_descriptor(tmp_path: Path) -> Path:
    """Line-form descriptor of the single-root surface."""
    return _write(
        tmp_path / "single.surface",
        "# one nodal curve\n"
        "classical = true\n"
        "ample = [2,2,-1,0,0,0,0,0,0,0;0]\n"
        "root = [0,0,1,0,0,0,0,0,0,0]\n",
    )


@pytest.fixture
def a2_descriptor_yaml(tmp_path: Path) -> Path:
    """YAML descriptor of an A2 chain polarized by 2e + 2f - a1 - a3."""
    return _write(
        tmp_path / "a2.yaml",
        "classical: true\n"
        "ample: [2, 2, -1, 0, -1, 0, 0, 0, 0, 0]\n"
        "roots:\n"
        "  - [0, 0, 1, 0, 0, 0, 0, 0, 0, 0]\n"
        "  - [0, 0, 0, 0, 1, 0, 0, 0, 0, 0]\n"
        "coeff_bound: 4\n",
    )


@pytest.fixture
def exhausting_descriptor(tmp_path: Path) -> Path:
    """A2 chain with a coefficient bound far beyond the default search limit."""
    return _write(
        tmp_path / "wide.surface",
        "classical = true\n"
        "ample = [2,2,-1,0,-1,0,0,0,0,0;0]\n"
        "root = [0,0,1,0,0,0,0,0,0,0]\n"
        "root = [0,0,0,0,1,0,0,0,0,0]\n"
        "coeff_bound = 4000\n",
    )


@pytest.fixture
def invalid_descriptor(tmp_path: Path) -> Path:
    """The root a1 has degree 0 against e + f."""
    return _write(
        tmp_path / "invalid.surface",
        "classical = true\n"
        "ample = [1,1,0,0,0,0,0,0,0,0;0]\n"
        "root = [0,0,1,0,0,0,0,0,0,0]\n",
    )


@pytest.fixture
def run_cli(capsys):
    """Run the command line entry point and return (exit code, stdout, stderr)."""
    from src.cli.main import main

    def _run(*argv: str) -> tuple[int, str, str]:
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run
