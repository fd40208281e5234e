import pytest

from dihyper import census


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile the jitted sweep once so timed tests measure work, not JIT."""
    census(2, 2, backend="numba")
    census(2, 2, backend="numpy")
