from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from cwekit.galois import FieldSpec, build_field

settings.register_profile(
    "ci", derandomize=True, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("ci")

# The four small showcase fields with their pinned alpha minimal polynomials.
SHOWCASE_SPECS = {
    8: FieldSpec(p=2, m=3, fq_min_poly=(1, 1, 0, 1)),
    9: FieldSpec(p=3, m=2, fq_min_poly=(2, 1, 1)),
    11: FieldSpec(p=11, m=1, fq_min_poly=(9, 1)),
    16: FieldSpec(p=2, m=4, fq_min_poly=(1, 1, 0, 0, 1)),
}


@pytest.fixture(scope="session")
def field8():
    return build_field(SHOWCASE_SPECS[8])


@pytest.fixture(scope="session")
def field9():
    return build_field(SHOWCASE_SPECS[9])


@pytest.fixture(scope="session")
def field11():
    return build_field(SHOWCASE_SPECS[11])


@pytest.fixture(scope="session")
def field16():
    return build_field(SHOWCASE_SPECS[16])


@pytest.fixture(scope="session")
def showcase_fields(field8, field9, field11, field16):
    return {8: field8, 9: field9, 11: field11, 16: field16}
