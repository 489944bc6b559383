import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from z2zu import kernels


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    # JIT compile outside any timed section
    kernels.warmup()
