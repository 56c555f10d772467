import pytest
from hypothesis import settings

settings.register_profile("ci", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("ci")


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=0, help="seed for randomized tests")


@pytest.fixture
def seed(request):
    return request.config.getoption("--seed")
