"""Shannon entropy of exact finite distributions, Shearer covers and the
binomial-sum entropy bound. All entropies are in bits."""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence


class DistributionError(ValueError):
    pass


class CoverError(ValueError):
    pass


def _log2_fraction(p: Fraction) -> float:
    return math.log2(p.numerator) - math.log2(p.denominator)


@dataclass(frozen=True)
class FiniteDistribution:
    """Exact distribution over tuples of a fixed length ``m``."""

    support: tuple[tuple, ...]
    probs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.support) != len(self.probs):
            raise DistributionError("support and probabilities differ in length")
        if len(set(self.support)) != len(self.support):
            raise DistributionError("support entries must be distinct")
        if self.support and len({len(s) for s in self.support}) != 1:
            raise DistributionError("support tuples must share one length")
        if any(p < 0 for p in self.probs):
            raise DistributionError("negative probability")
        if sum(self.probs, Fraction(0)) != 1:
            raise DistributionError("probabilities must sum to exactly 1")

    @property
    def m(self) -> int:
        return len(self.support[0]) if self.support else 0

    @classmethod
    def from_counts(cls, counts: Mapping[tuple, int]) -> "FiniteDistribution":
        total = sum(counts.values())
        if total <= 0:
            raise DistributionError("empty count table")
        items = sorted((k, v) for k, v in counts.items() if v)
        return cls(tuple(k for k, _ in items), tuple(Fraction(v, total) for _, v in items))

    @classmethod
    def uniform(cls, values: Iterable[tuple]) -> "FiniteDistribution":
        return cls.from_counts(Counter(tuple(v) for v in values))


def entropy(d: FiniteDistribution) -> float:
    # fsum gives the correctly rounded sum of the terms.
    return math.fsum(-float(p) * _log2_fraction(p) for p in d.probs if p)


def marginal(d: FiniteDistribution, coords: Sequence[int]) -> FiniteDistribution:
    coords = tuple(coords)
    if len(set(coords)) != len(coords) or any(not 0 <= c < d.m for c in coords):
        raise DistributionError(f"bad coordinate subset {coords} for m = {d.m}")
    acc: dict[tuple, Fraction] = defaultdict(Fraction)
    for s, p in zip(d.support, d.probs):
        acc[tuple(s[c] for c in coords)] += p
    keys = sorted(acc)
    return FiniteDistribution(tuple(keys), tuple(acc[k] for k in keys))


def conditional_entropy(
    joint: FiniteDistribution,
    given: Sequence[int] = (1,),
    target: Sequence[int] | None = None,
) -> float:
    """``H(target | given)`` evaluated from the definition,
    ``sum_y p(y) sum_x p(x|y) log 1/p(x|y)``."""
    given = tuple(given)
    if target is None:
        target = tuple(c for c in range(joint.m) if c not in given)
    target = tuple(target)
    for c in given + target:
        if not 0 <= c < joint.m:
            raise DistributionError(f"coordinate {c} out of range")
    py: dict[tuple, Fraction] = defaultdict(Fraction)
    pxy: dict[tuple, dict[tuple, Fraction]] = defaultdict(lambda: defaultdict(Fraction))
    for s, p in zip(joint.support, joint.probs):
        y = tuple(s[c] for c in given)
        py[y] += p
        pxy[y][tuple(s[c] for c in target)] += p
    terms = []
    for y, q in py.items():
        if not q:
            continue
        for p in pxy[y].values():
            if p:
                cond = p / q
                terms.append(-float(p) * _log2_fraction(cond))
    return math.fsum(terms)


def binary_entropy(p: float) -> float:
    if p <= 0.0 or p >= 1.0:
        return 0.0
    return -p * math.log2(p) - (1 - p) * math.log2(1 - p)


@dataclass
class ShearerCover:
    """Nonnegative weights on subsets of ``range(m)``.

    ``labels[i]``, when given, names coordinate ``i`` (e.g. a vertex).
    """

    m: int
    weights: dict[frozenset[int], Fraction] = field(default_factory=dict)
    labels: tuple[Hashable, ...] | None = None

    def coverage(self) -> list[Fraction]:
        cov = [Fraction(0)] * self.m
        for sub, w in self.weights.items():
            for i in sub:
                cov[i] += w
        return cov

    def is_fractional_tiling(self) -> bool:
        if any(w < 0 for w in self.weights.values()):
            return False
        if any(i < 0 or i >= self.m for sub in self.weights for i in sub):
            return False
        return all(c == 1 for c in self.coverage())

    def check(self) -> None:
        if not self.is_fractional_tiling():
            raise CoverError("weights are not a fractional tiling of the coordinates")


def shearer_rhs(d: FiniteDistribution, cover: ShearerCover) -> float:
    cover.check()
    if cover.m != d.m:
        raise CoverError(f"cover has {cover.m} coordinates, distribution has {d.m}")
    terms = [
        float(w) * entropy(marginal(d, sorted(sub)))
        for sub, w in sorted(cover.weights.items(), key=lambda kv: sorted(kv[0]))
        if w
    ]
    return math.fsum(terms)


def shearer_slack(d: FiniteDistribution, cover: ShearerCover) -> float:
    """``sum_A alpha_A H(psi_A) - H(psi)``; nonnegative for a valid cover."""
    return shearer_rhs(d, cover) - entropy(d)


def binomial_entropy_bound(n: int, k: int) -> tuple[int, float]:
    """Return ``sum_{i<=k} C(n, i)`` and ``n * H(k/n)``; requires ``k <= n/2``."""
    if n < 0 or k < 0 or 2 * k > n:
        raise ValueError("binomial entropy bound needs 0 <= k <= n/2")
    total = sum(math.comb(n, i) for i in range(k + 1))
    bound = n * binary_entropy(k / n) if n else 0.0
    if math.log2(total) > bound + 1e-9:
        raise AssertionError(f"binomial bound violated at n={n}, k={k}")
    return total, bound
