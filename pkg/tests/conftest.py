import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from negabase import phi_field, rational_field, tribonacci_field
from fractions import Fraction


@pytest.fixture(scope="session")
def phi():
    return phi_field()


@pytest.fixture(scope="session")
def mu():
    return tribonacci_field()


@pytest.fixture(scope="session")
def seven_quarters():
    return rational_field(Fraction(7, 4))
