"""Integer partitions, compositions, and the descent-set correspondence.

Conventions used throughout the package:

* a partition is a tuple of weakly decreasing positive integers,
* a composition is a tuple of positive integers with order significant,
* partitions and compositions of n are canonically ordered by plain
  descending tuple comparison, so ``partitions_of(3)`` starts at ``(3,)``
  and ends at ``(1, 1, 1)``.

Descent sets are exposed as sorted tuples of positions in ``1..n-1``;
a composition of n and its set of proper partial sums determine each
other, which is the bijection ``composition_from_descents`` /
``descents_from_composition`` implements.
"""

from __future__ import annotations

from functools import lru_cache

Partition = tuple[int, ...]
Composition = tuple[int, ...]


def check_partition(parts) -> Partition:
    """Validate and normalise a partition given as any integer iterable."""
    lam = tuple(int(p) for p in parts)
    for i, p in enumerate(lam):
        if p < 1:
            raise ValueError(f"partition parts must be positive, got {lam}")
        if i and lam[i - 1] < p:
            raise ValueError(f"partition parts must be weakly decreasing, got {lam}")
    return lam


def check_composition(parts) -> Composition:
    """Validate a composition given as any integer iterable."""
    alpha = tuple(int(p) for p in parts)
    if any(p < 1 for p in alpha):
        raise ValueError(f"composition parts must be positive, got {alpha}")
    return alpha


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, each once, in canonical (descending) order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def rec(rem: int, cap: int):
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, cap), 0, -1):
            for rest in rec(rem - first, first):
                yield (first,) + rest

    return tuple(rec(n, n))


@lru_cache(maxsize=None)
def compositions_of(n: int) -> tuple[Composition, ...]:
    """All compositions of n in canonical (descending) order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def rec(rem: int):
        if rem == 0:
            yield ()
            return
        for first in range(rem, 0, -1):
            for rest in rec(rem - first):
                yield (first,) + rest

    return tuple(rec(n))


def hook_partition(n: int, k: int) -> Partition:
    """The hook (k, 1, ..., 1) of weight n."""
    if not 1 <= k <= n:
        raise ValueError(f"hook arm length must be in 1..{n}, got {k}")
    return (k,) + (1,) * (n - k)


def conjugate(lam) -> Partition:
    """Column lengths of the diagram of lam."""
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0]))


def dominance_leq(lam, mu) -> bool:
    """Whether lam <= mu in dominance order (prefix-sum comparison)."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("dominance order compares partitions of equal weight")
    a = b = 0
    for j in range(max(len(lam), len(mu))):
        a += lam[j] if j < len(lam) else 0
        b += mu[j] if j < len(mu) else 0
        if a > b:
            return False
    return True


def composition_from_descents(descents, n: int) -> Composition:
    """The composition of n whose proper partial sums are the given set."""
    prev = 0
    parts = []
    for d in sorted({int(d) for d in descents}):
        if not 0 < d < n:
            raise ValueError(f"descent positions must lie in 1..{n - 1}, got {d}")
        parts.append(d - prev)
        prev = d
    if n > 0:
        parts.append(n - prev)
    return tuple(parts)


def descents_from_composition(alpha) -> tuple[int, ...]:
    """Proper partial sums of a composition, as a sorted descent set."""
    alpha = check_composition(alpha)
    out = []
    acc = 0
    for part in alpha[:-1]:
        acc += part
        out.append(acc)
    return tuple(out)


def partition_of(alpha) -> Partition:
    """The underlying partition of a composition (parts sorted)."""
    return tuple(sorted(check_composition(alpha), reverse=True))


def multiplicities(lam) -> dict[int, int]:
    """Part multiplicities of a partition, part -> count."""
    out: dict[int, int] = {}
    for p in lam:
        out[p] = out.get(p, 0) + 1
    return out
