"""
Pytest configuration and fixtures for thetalift testing.

This module provides:
- Shared fixtures for all tests
- Class groups and precision contexts sized for fast tests
- Sample run configurations
"""

import os
import sys
from pathlib import Path
from typing import Any, Dict

import pytest

# Add project root to path
PROJECT_ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(PROJECT_ROOT))


# =============================================================================
# Configuration
# =============================================================================

def pytest_configure(config):
    """Configure pytest with custom settings."""
    # Verbose logs in captured output
    os.environ["THETALIFT_LOG_LEVEL"] = "DEBUG"


def pytest_collection_modifyitems(config, items):
    """Modify test collection to add markers automatically."""
    for item in items:
        # Auto-mark tests based on path
        path = str(item.fspath)
        if "integration" in path:
            item.add_marker(pytest.mark.integration)
        elif "unit" in path:
            item.add_marker(pytest.mark.unit)
        if "test_cli" in path:
            item.add_marker(pytest.mark.cli)


# =============================================================================
# Class Group Fixtures
# =============================================================================

@pytest.fixture(scope="session")
def cl7():
    """Trivial class group, D = -7."""
    from thetalift.classgroup import class_group
    return class_group(-7)


@pytest.fixture(scope="session")
def cl15():
    """Two genera, D = -15."""
    from thetalift.classgroup import class_group
    return class_group(-15)


@pytest.fixture(scope="session")
def cl23():
    """Cyclic of order 3, D = -23."""
    from thetalift.classgroup import class_group
    return class_group(-23)


@pytest.fixture(scope="session")
def cl47():
    """Cyclic of order 5, D = -47."""
    from thetalift.classgroup import class_group
    return class_group(-47)


# =============================================================================
# Precision Fixtures
# =============================================================================

@pytest.fixture(scope="session")
def ctx():
    """Default 128-bit precision."""
    from thetalift.config import PrecisionContext
    return PrecisionContext()


@pytest.fixture(scope="session")
def small_ctx():
    """Reduced quadrature grid for Petersson tests."""
    from thetalift.config import PrecisionContext
    return PrecisionContext(bits=96, quad_nodes_u=32, quad_nodes_v=32)


# =============================================================================
# Run Configuration Fixtures
# =============================================================================

@pytest.fixture
def sample_run_config() -> Dict[str, Any]:
    """Sample run configuration."""
    return {
        "disc": -23,
        "prec_bits": 96,
        "n_max": 20,
        "quad_nodes": 32,
        "height_T": 1.5,
        "method": "both",
        "a_class": 0,
        "seed": 7,
        "lift_samples": 4,
        "extraction_n_max": 10,
        "pretty": True,
        "checks": ["class_number", "cuspidality"],
    }


@pytest.fixture
def temp_config_file(tmp_path, sample_run_config) -> Path:
    """Create a temporary config file."""
    import yaml
    filepath = tmp_path / "config.yaml"
    with open(filepath, "w") as f:
        yaml.dump(sample_run_config, f)
    return filepath


@pytest.fixture
def cli_runner():
    """Typer test runner."""
    from typer.testing import CliRunner
    return CliRunner()
