import os

import pytest
from hypothesis import HealthCheck, settings

from aql.catalog import a2_tilde, a3_tilde, d4_tilde, kronecker

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def K():
    return kronecker()


@pytest.fixture
def A():
    return a2_tilde()


@pytest.fixture
def D4():
    return d4_tilde()


AFFINE = [kronecker, a2_tilde, a3_tilde, d4_tilde]
