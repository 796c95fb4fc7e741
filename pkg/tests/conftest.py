from fractions import Fraction as F

import pytest

from bohrequiv import ExponentSet, ExponentialSum, GroundGeneratorSet

SQRT2 = "1.41421356237309504880168872420969807857"


@pytest.fixture
def gens1():
    return GroundGeneratorSet((("1", "1"),))


@pytest.fixture
def gens2():
    return GroundGeneratorSet((("1", "1"), ("sqrt2", SQRT2)))


@pytest.fixture
def disk_sum(gens2):
    """e^s + e^{sqrt2 s}."""
    exps = ExponentSet.from_coords(gens2, [(1, 0), (0, 1)])
    return ExponentialSum.from_polar(exps, [(1, 0), (1, 0)])


@pytest.fixture
def flipped_disk_sum(disk_sum):
    return ExponentialSum.from_polar(disk_sum.exponents, [(1, F(1, 2)), (1, F(1, 2))])


@pytest.fixture
def i_pair(gens1):
    """e^s + e^{2s} against i e^s + e^{2s}."""
    exps = ExponentSet.from_coords(gens1, [(1,), (2,)])
    f1 = ExponentialSum.from_polar(exps, [(1, 0), (1, 0)])
    f2 = ExponentialSum.from_polar(exps, [(1, F(1, 4)), (1, 0)])
    return f1, f2


@pytest.fixture
def half_pair(gens1):
    """Frequencies 1, 1/2, 3/2 over {1}; the second sum flips the middle sign."""
    exps = ExponentSet.from_coords(gens1, [(1,), (F(1, 2),), (F(3, 2),)])
    f1 = ExponentialSum.from_polar(exps, [(1, 0), (1, 0), (1, 0)])
    f2 = ExponentialSum.from_polar(exps, [(1, 0), (1, F(1, 2)), (1, 0)])
    return f1, f2
