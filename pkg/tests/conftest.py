import pytest

from dle3q import SystemParams

# Parameter set used for every published number: omega1 = 5, omega2 = 3.75,
# E0 = 3.721, lambda = 0.2, all linear-frequency GHz.
PAPER = dict(omega1=5.0, omega2=3.75, e0=3.721, lambda_=0.2)


@pytest.fixture
def paper_params() -> SystemParams:
    return SystemParams(**PAPER)


@pytest.fixture
def weak_params() -> SystemParams:
    """Well-separated, weakly coupled point where the oracle is sharpest."""
    return SystemParams(omega1=5.0, omega2=4.5, e0=3.721, lambda_=0.005)
