import functools

import pytest
from hypothesis import HealthCheck, settings

from frobtwo import compute_weight_table, parse_ring_spec

settings.register_profile(
    "frobtwo",
    deadline=None,
    derandomize=True,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("frobtwo")


@functools.lru_cache(maxsize=None)
def ring(spec: str):
    return parse_ring_spec(spec)


@functools.lru_cache(maxsize=None)
def weights(spec: str):
    return compute_weight_table(ring(spec))


@pytest.fixture
def z4():
    return ring("Z4")


def pytest_terminal_summary(terminalreporter):
    module = __import__("sys").modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
