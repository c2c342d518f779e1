"""Finite simple graphs on vertex set {1..n}, with labelings, proper
colorings, stable partitions, and acyclic orientations.

Vertices are always 1..n.  Edges are stored canonically as sorted pairs
with no loops or duplicates.  Orientation enumeration walks all 2^|E|
direction vectors and keeps the acyclic ones; at the intended scale
(|E| <= 15) this doubles as an oracle-grade reference enumeration.
"""

from __future__ import annotations

import json
from functools import lru_cache
from itertools import combinations


class Graph:
    """A simple graph with vertices 1..n and a canonical edge tuple."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        normalized = []
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) out of range 1..{n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add((u, v))
            normalized.append((u, v))
        self.n = n
        self.edges = tuple(sorted(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    def key(self) -> tuple:
        return (self.n, self.edges)

    def adjacency_masks(self) -> tuple[int, ...]:
        """Bitmask of neighbours per vertex, 0-indexed bits."""
        return _adjacency_masks(self.key())

    def neighbors(self, v: int) -> tuple[int, ...]:
        mask = self.adjacency_masks()[v - 1]
        return tuple(u + 1 for u in range(self.n) if mask >> u & 1)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Graph({self.n}, {list(self.edges)!r})"


@lru_cache(maxsize=None)
def _adjacency_masks(key) -> tuple[int, ...]:
    n, edges = key
    adj = [0] * n
    for u, v in edges:
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    return tuple(adj)


def edgeless_graph(n: int) -> Graph:
    return Graph(n, ())


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def star_graph(leaves: int) -> Graph:
    """The star K_{1,leaves} with centre 1."""
    return Graph(leaves + 1, [(1, v) for v in range(2, leaves + 2)])


class Labeling:
    """A bijective labeling of the vertices: label(v) for v in 1..n."""

    __slots__ = ("labels",)

    def __init__(self, labels):
        word = tuple(int(x) for x in labels)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"labeling must be a permutation of 1..{len(word)}: {word}")
        self.labels = word

    @classmethod
    def identity(cls, n: int) -> "Labeling":
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self.labels)

    def label(self, v: int) -> int:
        return self.labels[v - 1]

    def __eq__(self, other):
        return isinstance(other, Labeling) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return f"Labeling({list(self.labels)!r})"


class Orientation:
    """A direction for every edge of a graph, as (tail, head) pairs
    aligned with the graph's canonical edge order."""

    __slots__ = ("graph", "arcs", "_acyclic")

    def __init__(self, graph: Graph, arcs):
        edge_set = set(graph.edges)
        by_edge: dict[tuple[int, int], tuple[int, int]] = {}
        for a in arcs:
            tail, head = int(a[0]), int(a[1])
            edge = (tail, head) if tail < head else (head, tail)
            if edge not in edge_set:
                raise ValueError(f"arc ({tail},{head}) does not orient an edge of the graph")
            if edge in by_edge:
                raise ValueError(f"edge ({edge[0]},{edge[1]}) is oriented twice")
            by_edge[edge] = (tail, head)
        if len(by_edge) != graph.m:
            raise ValueError("one direction per edge is required")
        self.graph = graph
        self.arcs = tuple(by_edge[e] for e in graph.edges)
        self._acyclic = None

    @classmethod
    def from_mask(cls, graph: Graph, mask: int) -> "Orientation":
        """Bit e set means edge e keeps its canonical (low -> high) direction."""
        arcs = []
        for e, (u, v) in enumerate(graph.edges):
            arcs.append((u, v) if mask >> e & 1 else (v, u))
        return cls(graph, arcs)

    def out_masks(self) -> list[int]:
        out = [0] * self.graph.n
        for u, v in self.arcs:
            out[u - 1] |= 1 << (v - 1)
        return out

    def is_acyclic(self) -> bool:
        if self._acyclic is None:
            self._acyclic = _peels_to_empty(self.graph.n, self.out_masks())
        return self._acyclic

    def sinks(self) -> int:
        """Number of vertices with no outgoing arc (isolated ones count)."""
        out = self.out_masks()
        return sum(1 for v in range(self.graph.n) if out[v] == 0)

    def reverse(self) -> "Orientation":
        return Orientation(self.graph, tuple((v, u) for u, v in self.arcs))

    def __eq__(self, other):
        return (
            isinstance(other, Orientation)
            and self.graph == other.graph
            and self.arcs == other.arcs
        )

    def __hash__(self):
        return hash((self.graph.key(), self.arcs))

    def __repr__(self):
        body = ", ".join(f"{u}->{v}" for u, v in self.arcs)
        return f"Orientation({body})"


def _peels_to_empty(n: int, out_masks) -> bool:
    """Repeatedly delete vertices with no live out-arc; True iff all go."""
    alive = (1 << n) - 1
    while alive:
        removable = 0
        for v in range(n):
            if alive >> v & 1 and out_masks[v] & alive == 0:
                removable |= 1 << v
        if not removable:
            return False
        alive &= ~removable
    return True


def acyclic_orientations(graph: Graph) -> tuple[Orientation, ...]:
    """All acyclic orientations; the empty orientation for edgeless graphs."""
    n = graph.n
    edges = graph.edges
    out = []
    for mask in range(1 << len(edges)):
        masks = [0] * n
        for e, (u, v) in enumerate(edges):
            if mask >> e & 1:
                masks[u - 1] |= 1 << (v - 1)
            else:
                masks[v - 1] |= 1 << (u - 1)
        if _peels_to_empty(n, masks):
            o = Orientation.from_mask(graph, mask)
            o._acyclic = True
            out.append(o)
    return tuple(out)


def sinks(o: Orientation) -> int:
    return o.sinks()


def descents(o: Orientation, zeta: Labeling) -> int:
    """Arcs (u, v) whose direction runs against the labeling: label(u) > label(v)."""
    if zeta.n != o.graph.n:
        raise ValueError("labeling and orientation live on different graphs")
    return sum(1 for u, v in o.arcs if zeta.label(u) > zeta.label(v))


def ascents(graph: Graph, kappa, zeta: Labeling) -> int:
    """Edges increasing in both the labeling and the coloring."""
    kappa = tuple(kappa)
    if len(kappa) != graph.n or zeta.n != graph.n:
        raise ValueError("coloring and labeling must match the graph")
    count = 0
    for u, v in graph.edges:
        cu, cv = kappa[u - 1], kappa[v - 1]
        if cu == cv:
            raise ValueError(f"coloring is not proper on edge ({u},{v})")
        if (zeta.label(u) < zeta.label(v)) == (cu < cv):
            count += 1
    return count


def is_proper_coloring(graph: Graph, kappa) -> bool:
    kappa = tuple(kappa)
    return all(kappa[u - 1] != kappa[v - 1] for u, v in graph.edges)


def proper_colorings_bounded(graph: Graph, k: int):
    """Stream of proper colorings V -> {1..k}, as tuples indexed by vertex."""
    if k < 1:
        raise ValueError("at least one color is required")
    n = graph.n
    adj = graph.adjacency_masks()
    colors = [0] * n

    def rec(v: int):
        if v == n:
            yield tuple(colors)
            return
        forbidden = set()
        mask = adj[v]
        for u in range(v):
            if mask >> u & 1:
                forbidden.add(colors[u])
        for c in range(1, k + 1):
            if c not in forbidden:
                colors[v] = c
                yield from rec(v + 1)
        colors[v] = 0

    yield from rec(0)


def stable_partitions_by_type(graph: Graph) -> dict[tuple[int, ...], int]:
    """Unordered partitions of V into stable blocks, counted by sorted
    block-size type."""
    n = graph.n
    adj = graph.adjacency_masks()
    counts: dict[tuple[int, ...], int] = {}
    block_masks: list[int] = []
    block_sizes: list[int] = []

    def rec(v: int):
        if v == n:
            key = tuple(sorted(block_sizes, reverse=True))
            counts[key] = counts.get(key, 0) + 1
            return
        bit = 1 << v
        a = adj[v]
        for i in range(len(block_masks)):
            if block_masks[i] & a == 0:
                block_masks[i] |= bit
                block_sizes[i] += 1
                rec(v + 1)
                block_masks[i] &= ~bit
                block_sizes[i] -= 1
        block_masks.append(bit)
        block_sizes.append(1)
        rec(v + 1)
        block_masks.pop()
        block_sizes.pop()

    if n:
        rec(0)
    else:
        counts[()] = 1
    return counts


def is_claw_free(graph: Graph) -> bool:
    """True iff no vertex has three pairwise non-adjacent neighbours."""
    adj = graph.adjacency_masks()
    for c in range(1, graph.n + 1):
        nbrs = graph.neighbors(c)
        for a, b, d in combinations(nbrs, 3):
            if (
                adj[a - 1] >> (b - 1) & 1 == 0
                and adj[a - 1] >> (d - 1) & 1 == 0
                and adj[b - 1] >> (d - 1) & 1 == 0
            ):
                return False
    return True


# ---------------------------------------------------------------------------
# input formats


class GraphInput:
    """A parsed graph plus its optional labeling and vertex-name map."""

    __slots__ = ("graph", "labeling", "names")

    def __init__(self, graph: Graph, labeling=None, names=None):
        self.graph = graph
        self.labeling = labeling
        self.names = names


def parse_graph_text(text: str, source: str = "<input>") -> GraphInput:
    """Parse a graph file: JSON object or plain 'u v' edge lines."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_graph_json(text, source)
    return _parse_graph_edges(text, source)


def _parse_graph_json(text: str, source: str) -> GraphInput:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{source}: invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "n" not in data:
        raise ValueError(f"{source}: expected an object with fields 'n' and 'edges'")
    n = data["n"]
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"{source}: 'n' must be a nonnegative integer")
    edges = data.get("edges", [])
    try:
        graph = Graph(n, edges)
    except ValueError as exc:
        raise ValueError(f"{source}: {exc}") from None
    labeling = None
    if "labels" in data and data["labels"] is not None:
        try:
            labeling = Labeling(data["labels"])
        except ValueError as exc:
            raise ValueError(f"{source}: {exc}") from None
        if labeling.n != n:
            raise ValueError(f"{source}: labels must be a permutation of 1..{n}")
    return GraphInput(graph, labeling)


def _parse_graph_edges(text: str, source: str) -> GraphInput:
    raw_edges = []
    names = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        tokens = body.split()
        if len(tokens) != 2:
            raise ValueError(f"{source}:{lineno}: expected two vertex names, got {tokens}")
        u, v = tokens
        if u == v:
            raise ValueError(f"{source}:{lineno}: loop at vertex {u!r} is not allowed")
        raw_edges.append((lineno, u, v))
        names.update((u, v))
    if all(name.lstrip("-").isdigit() for name in names):
        ordered = sorted(names, key=int)
    else:
        ordered = sorted(names)
    index = {name: i + 1 for i, name in enumerate(ordered)}
    seen = set()
    edges = []
    for lineno, u, v in raw_edges:
        a, b = index[u], index[v]
        if a > b:
            a, b = b, a
        if (a, b) in seen:
            raise ValueError(f"{source}:{lineno}: duplicate edge {u} {v}")
        seen.add((a, b))
        edges.append((a, b))
    return GraphInput(Graph(len(ordered), edges), None, tuple(ordered))


def load_graph(path) -> GraphInput:
    with open(path, encoding="utf-8") as fh:
        return parse_graph_text(fh.read(), source=str(path))
