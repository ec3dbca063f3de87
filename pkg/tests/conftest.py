import random
import sys
from pathlib import Path

import pytest

try:
    import bitcube  # noqa: F401
except ImportError:  # running from a checkout without installation
    sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from hypothesis import settings

settings.register_profile("bitcube", deadline=None)
settings.load_profile("bitcube")

SAMPLE_SEED = 20260808


def popcount_array(limit):
    """Set-bit counts of 0..limit-1 (np.bitwise_count needs numpy >= 2)."""
    import numpy as np

    return np.array([bin(c).count("1") for c in range(limit)], dtype=np.int64)


@pytest.fixture(scope="session")
def tables():
    """All six stratifications, computed once per session."""
    from bitcube import Semiring, Shape, stratify

    return {
        (n, s.value): stratify(Shape(n), s)
        for n in (3, 4)
        for s in Semiring
    }


@pytest.fixture(scope="session")
def sample_codes_4():
    """10 000 reproducible sample codes of dimension 4."""
    rng = random.Random(SAMPLE_SEED)
    return [rng.randrange(1 << 16) for _ in range(10_000)]
