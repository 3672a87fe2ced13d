import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from medianstring import _dp


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile the numba kernels once so timed sections measure work, not JIT."""
    _dp.warm_up()
