import pytest

import duomap as dm


@pytest.fixture
def fig2():
    """The worked bipartite example: s1=abacddd, s2=acddbad, unit weights."""
    return dm.validate_instance("abacddd", "acddbad", dm.WeightSpec.unit())


@pytest.fixture
def aaa():
    return dm.validate_instance("aaa", "aaa", dm.WeightSpec.unit())


def random_instances(count, n_max, seed=0, kinds=("unit", "inverse", "matrix")):
    """Deterministic stream of small strict instances across weight kinds."""
    import random

    rng = random.Random(seed)
    out = []
    for t in range(count):
        n = rng.randint(2, n_max)
        k = rng.randint(1, 3)
        kind = kinds[t % len(kinds)]
        out.append(dm.random_instance(n, k, kind, seed=rng.randrange(2**31)))
    return out
