import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "exact",
    max_examples=100,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large, HealthCheck.large_base_example],
    derandomize=True,
)
settings.load_profile("exact")


@pytest.fixture(scope="session")
def g18_result():
    from fomdescent.families import G18Params, g18_build

    return g18_build(G18Params((1, 1, 1), 2, 13), bound=50)


@pytest.fixture(scope="session")
def g36_result():
    from fomdescent.families import G36Params, g36_build

    return g36_build(G36Params(1))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
