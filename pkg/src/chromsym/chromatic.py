"""Chromatic symmetric and quasisymmetric functions of labeled graphs.

The same quantities are reachable along two independent routes:

* colorings: monomial coordinates from stable partitions (or directly
  from proper colorings), then exact basis changes;
* orientations: acyclic orientations weighted by sinks and descents,
  assembled into fundamental coordinates through linear extensions.

Hook coefficients computed both ways must agree, which is what the
``verify``/``sweep`` commands and the test suite exercise exhaustively
at small vertex counts.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial

from .graphs import (
    Graph,
    Labeling,
    Orientation,
    _peels_to_empty,
    acyclic_orientations,
    proper_colorings_bounded,
    stable_partitions_by_type,
)
from .partitions import composition_from_descents, multiplicities
from .symfunc import (
    QuasisymmetricF,
    QuasisymmetricM,
    SymmetricFunctionM,
    m_to_e,
    m_to_s,
    specialize_w_k,
)
from .tableaux import descent_set
from .tpoly import TPoly


@dataclass(frozen=True)
class SinkProfile:
    """Histogram of acyclic orientations by number of sinks."""

    counts: tuple[tuple[int, int], ...]  # (sinks, orientations), sinks ascending

    def __getitem__(self, j: int) -> int:
        for sinks_, count in self.counts:
            if sinks_ == j:
                return count
        return 0

    @property
    def total(self) -> int:
        return sum(c for _, c in self.counts)


def csf_monomial(graph: Graph) -> SymmetricFunctionM:
    """Monomial coordinates of the chromatic symmetric function.

    The coefficient of m_lam counts colorings with color-class sizes
    exactly lam: stable partitions of type lam times the permutations of
    equal-size blocks among their colors.
    """
    coeffs = {}
    for lam, count in stable_partitions_by_type(graph).items():
        ways = count
        for mult in multiplicities(lam).values():
            ways *= factorial(mult)
        coeffs[lam] = ways
    return SymmetricFunctionM(graph.n, coeffs)


def csf_monomial_by_colorings(graph: Graph) -> SymmetricFunctionM:
    """Independent route: direct summation over proper colorings with
    colors in 1..n, reading off monomial exponents."""
    n = graph.n
    acc: Counter = Counter()
    if n == 0:
        return SymmetricFunctionM(0, {(): 1})
    for kappa in proper_colorings_bounded(graph, n):
        counts = [0] * (n + 1)
        for c in kappa:
            counts[c] += 1
        vec = counts[1:]
        while vec and vec[-1] == 0:
            vec.pop()
        if all(vec[i] >= vec[i + 1] for i in range(len(vec) - 1)) and all(vec):
            acc[tuple(vec)] += 1
    return SymmetricFunctionM(n, acc)


def csf_schur(graph: Graph) -> dict[tuple[int, ...], int]:
    """Schur coefficients of the chromatic symmetric function."""
    return m_to_s(csf_monomial(graph))


@lru_cache(maxsize=8)
def _sink_counts(key) -> tuple[tuple[int, int], ...]:
    # Mask enumeration without Orientation objects; this is the hot loop
    # of the exhaustive sweeps.
    n, edges = key
    counts: dict[int, int] = {}
    for mask in range(1 << len(edges)):
        out = [0] * n
        for e, (u, v) in enumerate(edges):
            if mask >> e & 1:
                out[u - 1] |= 1 << (v - 1)
            else:
                out[v - 1] |= 1 << (u - 1)
        if _peels_to_empty(n, out):
            s = sum(1 for v in range(n) if out[v] == 0)
            counts[s] = counts.get(s, 0) + 1
    return tuple(sorted(counts.items()))


def sink_profile(graph: Graph) -> SinkProfile:
    """Sink histogram over all acyclic orientations."""
    return SinkProfile(_sink_counts(graph.key()))


def hook_coefficient_via_sinks(graph: Graph, k: int) -> int:
    """Binomial-weighted sink enumeration for the hook coefficient."""
    if not 1 <= k <= graph.n:
        raise ValueError(f"hook arm length must be in 1..{graph.n}, got {k}")
    return sum(comb(j - 1, k - 1) * a for j, a in _sink_counts(graph.key()))


def chromatic_polynomial_value(graph: Graph, k: int) -> int:
    """Number of proper colorings with at most k colors, by specialization."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return specialize_w_k(csf_monomial(graph), k)


# ---------------------------------------------------------------------------
# quasisymmetric refinement


def _zeta_bits(graph: Graph, zeta: Labeling) -> int:
    bits = 0
    for e, (u, v) in enumerate(graph.edges):
        if zeta.label(u) < zeta.label(v):
            bits |= 1 << e
    return bits


def _check_labeling(graph: Graph, zeta) -> Labeling:
    if zeta is None:
        return Labeling.identity(graph.n)
    if zeta.n != graph.n:
        raise ValueError("labeling does not match the graph's vertex count")
    return zeta


@lru_cache(maxsize=4)
def _coloring_profile(key) -> tuple[tuple[tuple[int, ...], int], ...]:
    """(class-size composition, edge-direction bits) per proper coloring
    whose colors form an initial segment 1..j."""
    n, edges = key
    if n == 0:
        return (((), 0),)
    adj = [0] * n
    for u, v in edges:
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    colors = [0] * n
    out = []

    def rec(v: int, used_mask: int):
        if v == n:
            j = used_mask.bit_length() - 1
            if used_mask != ((1 << j) - 1) << 1:
                return
            counts = [0] * (j + 1)
            for c in colors:
                counts[c] += 1
            kbits = 0
            for e, (a, b) in enumerate(edges):
                if colors[a - 1] < colors[b - 1]:
                    kbits |= 1 << e
            out.append((tuple(counts[1:]), kbits))
            return
        forbidden = 0
        mask = adj[v]
        for u in range(v):
            if mask >> u & 1:
                forbidden |= 1 << colors[u]
        for c in range(1, n + 1):
            if forbidden >> c & 1:
                continue
            colors[v] = c
            rec(v + 1, used_mask | 1 << c)
        colors[v] = 0

    rec(0, 0)
    return tuple(out)


def cqf_monomial(graph: Graph, zeta: Labeling | None = None) -> QuasisymmetricM:
    """Monomial coordinates of the chromatic quasisymmetric function:
    the coefficient of M_alpha collects t^(ascents) over proper colorings
    surjective onto 1..len(alpha) with class sizes alpha."""
    zeta = _check_labeling(graph, zeta)
    m = graph.m
    zbits = _zeta_bits(graph, zeta)
    acc: dict[tuple[int, ...], list[int]] = {}
    for comp, kbits in _coloring_profile(graph.key()):
        asc = m - (kbits ^ zbits).bit_count()
        arr = acc.get(comp)
        if arr is None:
            arr = acc[comp] = [0] * (m + 1)
        arr[asc] += 1
    return QuasisymmetricM(graph.n, {c: TPoly(a) for c, a in acc.items()})


def sink_minimal_increasing_labeling(o: Orientation) -> Labeling:
    """The canonical labeling that decreases along directed paths and
    gives the sinks the smallest labels.

    Sinks are labeled 1..s by vertex index; afterwards the smallest
    vertex whose out-neighbours are all labeled receives the next label.
    """
    if not o.is_acyclic():
        raise ValueError("orientation has a directed cycle")
    n = o.graph.n
    out = o.out_masks()
    labels = [0] * n
    labeled = 0
    next_label = 1
    for v in range(n):
        if out[v] == 0:
            labels[v] = next_label
            next_label += 1
            labeled |= 1 << v
    while next_label <= n:
        for v in range(n):
            if labeled >> v & 1:
                continue
            if out[v] & ~labeled:
                continue
            labels[v] = next_label
            next_label += 1
            labeled |= 1 << v
            break
    return Labeling(labels)


def dual_linear_extensions(o: Orientation, omega: Labeling) -> tuple[tuple[int, ...], ...]:
    """All vertex sequencings that respect reachability (tails before
    heads), read through omega as one-line permutations, sorted."""
    if not o.is_acyclic():
        raise ValueError("orientation has a directed cycle")
    if omega.n != o.graph.n:
        raise ValueError("labeling does not match the orientation's graph")
    n = o.graph.n
    prereq = [0] * n
    for u, v in o.arcs:
        prereq[v - 1] |= 1 << (u - 1)
    words: list[tuple[int, ...]] = []
    seq: list[int] = []

    def rec(placed: int):
        if len(seq) == n:
            words.append(tuple(omega.label(v) for v in seq))
            return
        for v in range(n):
            bit = 1 << v
            if placed & bit or prereq[v] & ~placed:
                continue
            seq.append(v + 1)
            rec(placed | bit)
            seq.pop()

    rec(0)
    return tuple(sorted(words))


@lru_cache(maxsize=4)
def _orientation_profile(key) -> tuple:
    """(direction bits, sinks, composition counts) per acyclic orientation.

    The composition counts record, for each linear extension of the
    orientation under its canonical labeling, the composition of the
    reflected descent set {i : n - i in Des}.
    """
    n, edges = key
    graph = Graph(n, edges)
    entries = []
    for o in acyclic_orientations(graph):
        dirbits = 0
        for e, arc in enumerate(o.arcs):
            if arc == graph.edges[e]:
                dirbits |= 1 << e
        omega = sink_minimal_increasing_labeling(o)
        comps: Counter = Counter()
        for word in dual_linear_extensions(o, omega):
            reflected = {n - i for i in descent_set(word)}
            comps[composition_from_descents(reflected, n)] += 1
        entries.append((dirbits, o.sinks(), tuple(sorted(comps.items()))))
    return tuple(entries)


def cqf_fundamental_via_orientations(
    graph: Graph, zeta: Labeling | None = None
) -> QuasisymmetricF:
    """Fundamental coordinates assembled from acyclic orientations:
    each orientation contributes t^(descents) times the fundamental
    terms of its dual linear extensions."""
    zeta = _check_labeling(graph, zeta)
    m = graph.m
    zbits = _zeta_bits(graph, zeta)
    acc: dict[tuple[int, ...], list[int]] = {}
    for dirbits, _, comp_counts in _orientation_profile(graph.key()):
        des = (dirbits ^ zbits).bit_count()
        for comp, count in comp_counts:
            arr = acc.get(comp)
            if arr is None:
                arr = acc[comp] = [0] * (m + 1)
            arr[des] += count
    return QuasisymmetricF(graph.n, {c: TPoly(a) for c, a in acc.items()})


def hook_coefficient_via_orientations_t(
    graph: Graph, zeta: Labeling | None, k: int
) -> TPoly:
    """Binomial-weighted descent generating polynomial over acyclic
    orientations: sum of C(sinks-1, k-1) t^(descents)."""
    if not 1 <= k <= graph.n:
        raise ValueError(f"hook arm length must be in 1..{graph.n}, got {k}")
    zeta = _check_labeling(graph, zeta)
    zbits = _zeta_bits(graph, zeta)
    arr = [0] * (graph.m + 1)
    for dirbits, sinks_, _ in _orientation_profile(graph.key()):
        w = comb(sinks_ - 1, k - 1)
        if w:
            arr[(dirbits ^ zbits).bit_count()] += w
    return TPoly(arr)


@dataclass
class ESinkReport:
    """Per-sink-count comparison of orientation counts against sums of
    elementary coefficients over partitions of that length."""

    per_k: dict[int, tuple[int, int]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(a == b for a, b in self.per_k.values())


def verify_e_sink_identity(graph: Graph) -> ESinkReport:
    """Compare a_k (acyclic orientations with k sinks) with the sum of
    e-coefficients b_lam over partitions lam of length k."""
    n = graph.n
    profile = sink_profile(graph)
    b = m_to_e(csf_monomial(graph))
    by_length = [0] * (n + 1)
    for lam, coeff in b.items():
        by_length[len(lam)] += coeff
    report = ESinkReport()
    for k in range(1, n + 1):
        report.per_k[k] = (profile[k], by_length[k])
    return report
