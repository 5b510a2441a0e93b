"""Shared fixtures: small lattices, their order complexes and suite files."""

from pathlib import Path

import pytest
import yaml

from splitbasis.lattices import LatticeFamily, build_family_lattice
from splitbasis.poset import BoundedPoset
from splitbasis.splitting import ambient_complex


@pytest.fixture(scope="session")
def pi4() -> BoundedPoset:
    return build_family_lattice(LatticeFamily(family="A", n=4))


@pytest.fixture(scope="session")
def pi4_complex(pi4):
    return ambient_complex(pi4)


@pytest.fixture(scope="session")
def pib3() -> BoundedPoset:
    return build_family_lattice(LatticeFamily(family="B", n=3))


@pytest.fixture(scope="session")
def pib3_complex(pib3):
    return ambient_complex(pib3)


@pytest.fixture
def write_suite(tmp_path: Path):
    """Write a suite mapping to a temp YAML file and return its path."""

    def _write(data: dict, name: str = "test.suite.yaml") -> Path:
        path = tmp_path / name
        path.write_text(yaml.safe_dump(data, sort_keys=False))
        return path

    return _write
