"""
Pytest configuration and fixtures.
"""

import sys
from pathlib import Path

import pytest

root_path = Path(__file__).parent.parent
sys.path.insert(0, str(root_path))

from eulersense.ges.construct import construct_es, construct_ges  # noqa: E402
from eulersense.ges.models import GesArray  # noqa: E402
from eulersense.matrix.build import build_matrix  # noqa: E402
from eulersense.matrix.models import BinarySensingMatrix  # noqa: E402


@pytest.fixture(scope="session")
def es_3_2() -> GesArray:
    return construct_es(3, 2)


@pytest.fixture(scope="session")
def ges_5_4_2() -> GesArray:
    return construct_ges(5, 4, 2)


@pytest.fixture(scope="session")
def phi_3_2_1(es_3_2: GesArray) -> BinarySensingMatrix:
    return build_matrix(es_3_2)


@pytest.fixture(scope="session")
def phi_7_6_1() -> BinarySensingMatrix:
    return build_matrix(construct_es(7, 6))
