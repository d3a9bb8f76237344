import pytest

from maxmod import _kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # JIT compilation happens once here so timed tests measure the algorithm
    _kernels.warmup()
