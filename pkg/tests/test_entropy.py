import math
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mislab.entropy import (
    CoverError,
    DistributionError,
    FiniteDistribution,
    ShearerCover,
    binary_entropy,
    binomial_entropy_bound,
    conditional_entropy,
    entropy,
    marginal,
    shearer_rhs,
    shearer_slack,
)

F = Fraction


@st.composite
def distributions(draw, m_max=4, arity=3):
    m = draw(st.integers(1, m_max))
    cells = list(product(range(arity), repeat=m))
    weights = draw(st.lists(st.integers(0, 6), min_size=len(cells), max_size=len(cells)))
    if not any(weights):
        weights[0] = 1
    return FiniteDistribution.from_counts(dict(zip(cells, weights)))


@st.composite
def covers(draw, m):
    """Random fractional tiling: each coordinate's unit mass is spread over
    a few random subsets containing it, then the subsets are closed up."""
    subsets = draw(
        st.lists(st.frozensets(st.integers(0, m - 1), min_size=1), min_size=0, max_size=4)
    )
    weights: dict[frozenset, Fraction] = {}
    load = [F(0)] * m
    for s in subsets:
        room = min(1 - load[i] for i in s)
        if room <= 0:
            continue
        w = room * F(draw(st.integers(1, 4)), 4)
        weights[s] = weights.get(s, F(0)) + w
        for i in s:
            load[i] += w
    for i in range(m):
        if load[i] < 1:
            key = frozenset([i])
            weights[key] = weights.get(key, F(0)) + 1 - load[i]
    return ShearerCover(m, weights)


def test_entropy_examples():
    assert entropy(FiniteDistribution.uniform([(i,) for i in range(4)])) == 2.0
    assert entropy(FiniteDistribution(((0,),), (F(1),))) == 0.0
    d = FiniteDistribution(((0,), (1,)), (F(1, 3), F(2, 3)))
    assert math.isclose(entropy(d), math.log2(3) - 2 / 3, abs_tol=1e-12)
    assert math.isclose(entropy(d), 0.9183, abs_tol=1e-4)


def test_distribution_validation():
    with pytest.raises(DistributionError):
        FiniteDistribution(((0,), (1,)), (F(1, 2), F(1, 3)))
    with pytest.raises(DistributionError):
        FiniteDistribution(((0,), (1,)), (F(3, 2), F(-1, 2)))
    with pytest.raises(DistributionError):
        FiniteDistribution(((0,), (0,)), (F(1, 2), F(1, 2)))
    with pytest.raises(DistributionError):
        FiniteDistribution(((0,), (0, 1)), (F(1, 2), F(1, 2)))
    with pytest.raises(DistributionError):
        FiniteDistribution.from_counts({})


def test_conditional_examples():
    ind = FiniteDistribution.uniform(list(product(range(2), range(3))))
    assert math.isclose(conditional_entropy(ind, given=(1,)), 1.0)
    same = FiniteDistribution.uniform([(0, 0), (1, 1)])
    assert conditional_entropy(same, given=(1,)) == 0.0
    tri = FiniteDistribution.uniform([(0, 0), (0, 1), (1, 0)])
    assert math.isclose(conditional_entropy(tri, given=(1,)), 2 / 3, abs_tol=1e-12)


def test_marginal_examples():
    d = FiniteDistribution.uniform(list(product(range(2), repeat=2)))
    assert marginal(d, (0, 1)) == d
    pm = marginal(d, ())
    assert pm.support == ((),) and pm.probs == (F(1),)
    assert marginal(d, (1,)) == FiniteDistribution.uniform([(0,), (1,)])
    with pytest.raises(DistributionError):
        marginal(d, (2,))
    with pytest.raises(DistributionError):
        marginal(d, (0, 0))


@settings(max_examples=300)
@given(distributions())
def test_chain_rule(d):
    for split in range(d.m + 1):
        left = tuple(range(split))
        right = tuple(range(split, d.m))
        h = entropy(marginal(d, left)) + conditional_entropy(d, given=left, target=right)
        assert math.isclose(h, entropy(d), abs_tol=1e-9)


@settings(max_examples=300)
@given(distributions())
def test_bounds(d):
    h = entropy(d)
    assert -1e-12 <= h <= math.log2(len(d.support)) + 1e-9
    for c in range(d.m):
        others = tuple(i for i in range(d.m) if i != c)
        # conditioning never increases entropy
        assert conditional_entropy(d, given=others, target=(c,)) <= entropy(marginal(d, (c,))) + 1e-9


@given(st.integers(1, 40))
def test_uniform_is_maximal(k):
    assert math.isclose(entropy(FiniteDistribution.uniform([(i,) for i in range(k)])), math.log2(k))


def test_shearer_examples():
    bits2 = FiniteDistribution.uniform(list(product(range(2), repeat=2)))
    singles = ShearerCover(2, {frozenset([0]): F(1), frozenset([1]): F(1)})
    assert abs(shearer_slack(bits2, singles)) < 1e-12
    twin = FiniteDistribution.uniform([(0, 0), (1, 1)])
    whole = ShearerCover(2, {frozenset([0, 1]): F(1)})
    assert abs(shearer_slack(twin, whole)) < 1e-12
    assert shearer_rhs(twin, whole) == 1.0
    cube = FiniteDistribution.uniform(list(product(range(2), repeat=3)))
    pairs = ShearerCover(3, {frozenset(p): F(1, 2) for p in ((0, 1), (1, 2), (0, 2))})
    assert abs(shearer_slack(cube, pairs)) < 1e-12


def test_shearer_rejects_bad_cover():
    d = FiniteDistribution.uniform([(0, 0), (1, 1)])
    with pytest.raises(CoverError):
        shearer_rhs(d, ShearerCover(2, {frozenset([0]): F(1)}))
    with pytest.raises(CoverError):
        shearer_rhs(d, ShearerCover(2, {frozenset([0, 1]): F(2), frozenset([0]): F(-1)}))
    with pytest.raises(CoverError):
        shearer_rhs(d, ShearerCover(1, {frozenset([0]): F(1)}))


@settings(max_examples=500)
@given(st.data())
def test_shearer_slack_nonnegative(data):
    d = data.draw(distributions())
    cover = data.draw(covers(d.m))
    assert cover.is_fractional_tiling()
    assert shearer_slack(d, cover) >= -1e-9


def test_binary_entropy():
    assert binary_entropy(0.5) == 1.0
    assert binary_entropy(0.0) == binary_entropy(1.0) == 0.0
    assert math.isclose(binary_entropy(1 / 3), math.log2(3) - 2 / 3)


def test_binomial_bound_examples():
    total, bound = binomial_entropy_bound(10, 3)
    assert total == 176
    assert math.isclose(bound, 8.813, abs_tol=1e-3)
    assert binomial_entropy_bound(7, 0) == (1, 0.0)
    for k in range(1, 8):
        total, bound = binomial_entropy_bound(2 * k, k)
        assert total == 2 ** (2 * k - 1) + math.comb(2 * k, k) // 2
        assert bound == 2 * k
    with pytest.raises(ValueError):
        binomial_entropy_bound(5, 3)


@given(st.integers(0, 200), st.data())
def test_binomial_bound_property(n, data):
    k = data.draw(st.integers(0, n // 2))
    total, bound = binomial_entropy_bound(n, k)
    assert math.log2(total) <= bound + 1e-9
