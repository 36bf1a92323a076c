import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hyperalg.constructions import krasner_k2, prime_field, product_space, sign_hyperfield, vector_index  # noqa: E402

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def k2():
    return krasner_k2()


@pytest.fixture(scope="session")
def s3():
    return sign_hyperfield()


@pytest.fixture(scope="session")
def k2sq(k2):
    return product_space(k2, 2)


@pytest.fixture(scope="session")
def gf2cube():
    return product_space(prime_field(2), 3)


@pytest.fixture
def v():
    """vector index by coordinates: v(space, 1, 0)."""
    return lambda space, *c: vector_index(space, c)
