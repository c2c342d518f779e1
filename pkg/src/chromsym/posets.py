"""Finite posets, incomparability graphs, and hook-shape poset tableaux.

A poset on {1..n} is stored as strict-order bitmasks.  Hook-shape
tableaux are bijective fillings whose bottom row strictly increases in
the poset order at consecutive cells and whose column never strictly
increases going up; the column rule is kept switchable because the two
mirror readings are only told apart by the counting identity itself
(the exhaustive small-poset suite pins the default).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, product

from .chromatic import csf_schur
from .graphs import Graph
from .partitions import hook_partition

COLUMN_RULES = ("upper-not-less", "lower-not-less")
DEFAULT_COLUMN_RULE = "upper-not-less"


class Poset:
    """A partial order on {1..n}; above[i] is the bitmask of elements
    strictly greater than i+1."""

    __slots__ = ("n", "above")

    def __init__(self, n: int, above):
        above = tuple(int(a) for a in above)
        if n < 0 or len(above) != n:
            raise ValueError("above must give one bitmask per element")
        full = (1 << n) - 1
        for i, mask in enumerate(above):
            if mask & ~full:
                raise ValueError(f"bitmask for element {i + 1} is out of range")
            if mask >> i & 1:
                raise ValueError(f"element {i + 1} compares above itself")
        for i in range(n):
            rest = above[i]
            while rest:
                j = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if above[j] >> i & 1:
                    raise ValueError(f"elements {i + 1} and {j + 1} compare both ways")
                if above[j] & ~above[i]:
                    raise ValueError("relation is not transitively closed")
        self.n = n
        self.above = above

    @classmethod
    def from_covers(cls, n: int, covers) -> "Poset":
        """Build from cover pairs [a, b] meaning a < b, closing transitively."""
        direct = [0] * n
        for pair in covers:
            a, b = int(pair[0]), int(pair[1])
            if not (1 <= a <= n and 1 <= b <= n):
                raise ValueError(f"cover ({a},{b}) out of range 1..{n}")
            if a == b:
                raise ValueError(f"cover ({a},{b}) relates an element to itself")
            direct[a - 1] |= 1 << (b - 1)
        above = list(direct)
        changed = True
        while changed:
            changed = False
            for i in range(n):
                acc = above[i]
                rest = above[i]
                while rest:
                    j = (rest & -rest).bit_length() - 1
                    rest &= rest - 1
                    acc |= above[j]
                if acc != above[i]:
                    above[i] = acc
                    changed = True
        for i in range(n):
            if above[i] >> i & 1:
                raise ValueError(f"cover relations contain a cycle through element {i + 1}")
        return cls(n, above)

    def less(self, a: int, b: int) -> bool:
        return bool(self.above[a - 1] >> (b - 1) & 1)

    def incomparable(self, a: int, b: int) -> bool:
        return a != b and not self.less(a, b) and not self.less(b, a)

    def __eq__(self, other):
        return isinstance(other, Poset) and self.n == other.n and self.above == other.above

    def __hash__(self):
        return hash((self.n, self.above))

    def __repr__(self):
        pairs = [
            (i + 1, j + 1)
            for i in range(self.n)
            for j in range(self.n)
            if self.above[i] >> j & 1
        ]
        return f"Poset({self.n}, relations={pairs!r})"


def all_posets(n: int):
    """Every partial order on {1..n}, by direction assignment per pair."""
    if n == 0:
        yield Poset(0, ())
        return
    pairs = list(combinations(range(n), 2))
    for assignment in product((0, 1, 2), repeat=len(pairs)):
        above = [0] * n
        for (i, j), state in zip(pairs, assignment):
            if state == 1:
                above[i] |= 1 << j
            elif state == 2:
                above[j] |= 1 << i
        ok = True
        for i in range(n):
            rest = above[i]
            while rest:
                j = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if above[j] & ~above[i]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield Poset(n, above)


def incomparability_graph(poset: Poset) -> Graph:
    """Edges between incomparable pairs."""
    edges = [
        (a, b)
        for a in range(1, poset.n + 1)
        for b in range(a + 1, poset.n + 1)
        if poset.incomparable(a, b)
    ]
    return Graph(poset.n, edges)


def _column_step_allowed(poset: Poset, lower: int, upper: int, rule: str) -> bool:
    if rule == "upper-not-less":
        return not poset.less(upper, lower)
    if rule == "lower-not-less":
        return not poset.less(lower, upper)
    raise ValueError(f"unknown column rule {rule!r}")


def count_p_tableaux_hook(
    poset: Poset, k: int, column_rule: str = DEFAULT_COLUMN_RULE
) -> int:
    """Bijective hook-shape fillings: bottom row a chain read left to
    right, column above its first cell never increasing upward."""
    n = poset.n
    if not 1 <= k <= n:
        raise ValueError(f"hook arm length must be in 1..{n}, got {k}")

    def legs(lower: int, remaining: frozenset) -> int:
        if not remaining:
            return 1
        total = 0
        for x in remaining:
            if _column_step_allowed(poset, lower, x, column_rule):
                total += legs(x, remaining - {x})
        return total

    total = 0
    row: list[int] = []
    used: set[int] = set()

    def rows():
        nonlocal total
        if len(row) == k:
            total += legs(row[0], frozenset(range(1, n + 1)) - used)
            return
        for x in range(1, n + 1):
            if x in used:
                continue
            if row and not poset.less(row[-1], x):
                continue
            row.append(x)
            used.add(x)
            rows()
            row.pop()
            used.remove(x)

    rows()
    return total


@dataclass
class HookReport:
    """Per-arm-length comparison of hook tableau counts against the
    Schur hook coefficients of the incomparability graph."""

    per_k: dict[int, tuple[int, int]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(a == b for a, b in self.per_k.values())


def verify_hook_proposition(
    poset: Poset, column_rule: str = DEFAULT_COLUMN_RULE
) -> HookReport:
    """Compare hook tableau counts with the incomparability graph's
    Schur hook coefficients, for every arm length."""
    n = poset.n
    schur = csf_schur(incomparability_graph(poset))
    report = HookReport()
    for k in range(1, n + 1):
        count = count_p_tableaux_hook(poset, k, column_rule)
        coeff = schur.get(hook_partition(n, k), 0)
        report.per_k[k] = (count, coeff)
    return report


# ---------------------------------------------------------------------------
# input format


def parse_poset_text(text: str, source: str = "<input>") -> Poset:
    """Parse a poset file: JSON object with fields n and covers."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{source}: invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "n" not in data:
        raise ValueError(f"{source}: expected an object with fields 'n' and 'covers'")
    n = data["n"]
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"{source}: 'n' must be a nonnegative integer")
    try:
        return Poset.from_covers(n, data.get("covers", []))
    except ValueError as exc:
        raise ValueError(f"{source}: {exc}") from None


def load_poset(path) -> Poset:
    with open(path, encoding="utf-8") as fh:
        return parse_poset_text(fh.read(), source=str(path))
