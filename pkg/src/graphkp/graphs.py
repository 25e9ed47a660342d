"""Labeled simple graphs with bitset edge storage, plus the enumeration
primitives the rest of the package consumes: connected components, spanning
forests, set partitions, automorphism counting, canonical forms, edge
contraction on weighted graphs, and graph6 parsing/emission.

Edge slots.  The vertex pairs (i, j) with i < j are numbered in colex order

    (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), (0,4), ...

so ``slot(i, j) = j*(j-1)//2 + i``.  This single slot order is shared by the
edge bitsets, graph6 encoding, canonical forms and subset enumeration, so
bitsets move between all of them without translation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from graphkp.errors import Graph6ParseError, SizeLimitError

MAX_VERTICES = 12

#: slot -> (i, j) with i < j, colex order, for every slot of K_12.
SLOT_ENDPOINTS: tuple[tuple[int, int], ...] = tuple(
    (i, j) for j in range(MAX_VERTICES) for i in range(j))


def edge_slot(u: int, v: int) -> int:
    """Bit position of the edge {u, v} in the fixed colex slot order."""
    if u == v:
        raise ValueError(f"loops are not allowed (vertex {u})")
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


@dataclass(frozen=True, order=True)
class Graph:
    """Simple graph on vertices {0..n-1}; ``edges`` is a bitset over slots.

    Ordering compares (n, edges), giving a deterministic total order."""

    n: int
    edges: int = 0

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise SizeLimitError(f"vertex count must be in [0, {MAX_VERTICES}], got {self.n}")
        if not 0 <= self.edges < 1 << (self.n * (self.n - 1) // 2):
            raise ValueError("edge bitset out of range for vertex count")

    @classmethod
    def from_edges(cls, n: int, pairs: Sequence[tuple[int, int]]) -> "Graph":
        bits = 0
        for u, v in pairs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            bits |= 1 << edge_slot(u, v)
        return cls(n, bits)

    @property
    def num_edges(self) -> int:
        return self.edges.bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.edges >> edge_slot(u, v) & 1)

    def edge_list(self) -> tuple[tuple[int, int], ...]:
        return tuple(SLOT_ENDPOINTS[s] for s in _bit_indices(self.edges))

    def adjacency_masks(self) -> list[int]:
        masks = [0] * self.n
        for u, v in self.edge_list():
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    def degree(self, v: int) -> int:
        return self.adjacency_masks()[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.adjacency_masks())

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph on ``vertices``, relabeled 0..k-1 in sorted order."""
        vs = sorted(vertices)
        if len(set(vs)) != len(vs) or (vs and not 0 <= vs[0] <= vs[-1] < self.n):
            raise ValueError("vertex subset must be distinct vertices of the graph")
        index = {v: i for i, v in enumerate(vs)}
        bits = 0
        for a, b in itertools.combinations(vs, 2):
            if self.has_edge(a, b):
                bits |= 1 << edge_slot(index[a], index[b])
        return Graph(len(vs), bits)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image under the vertex permutation v -> perm[v]."""
        bits = 0
        for u, v in self.edge_list():
            bits |= 1 << edge_slot(perm[u], perm[v])
        return Graph(self.n, bits)

    def __str__(self):
        return emit_graph6(self)


@dataclass(frozen=True)
class WeightedGraph:
    """Graph with positive integer vertex weights; total weight is the grading."""

    graph: Graph
    weights: tuple[int, ...]

    def __post_init__(self):
        if len(self.weights) != self.graph.n:
            raise ValueError("one weight per vertex required")
        if any(w < 1 for w in self.weights):
            raise ValueError("vertex weights must be positive integers")

    @classmethod
    def from_graph(cls, g: Graph) -> "WeightedGraph":
        return cls(g, (1,) * g.n)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)


def complete_graph(n: int) -> Graph:
    return Graph(n, (1 << (n * (n - 1) // 2)) - 1)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Disjoint union; left factor keeps its labels, right factor shifts up."""
    bits = a.edges
    for u, v in b.edge_list():
        bits |= 1 << edge_slot(u + a.n, v + a.n)
    return Graph(a.n + b.n, bits)


def _bit_indices(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


# -- connectivity -------------------------------------------------------------


def components(g: Graph) -> list[tuple[int, ...]]:
    """Connected components as sorted vertex tuples, ordered by minimum vertex."""
    masks = g.adjacency_masks()
    unseen = (1 << g.n) - 1
    out = []
    while unseen:
        start = unseen & -unseen
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in _bit_indices(frontier):
                nxt |= masks[v]
            frontier = nxt & ~comp
            comp |= frontier
        out.append(tuple(_bit_indices(comp)))
        unseen &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    """True iff the graph has exactly one component.  The empty graph does not
    count as connected and is rejected."""
    if g.n == 0:
        raise ValueError("connectivity of the empty graph is undefined here")
    return len(components(g)) == 1


# -- enumeration --------------------------------------------------------------


def spanning_forests(g: Graph) -> Iterator[int]:
    """Yield every acyclic edge subset of ``g`` exactly once, as edge bitsets.

    The empty forest is included.  Enumeration is by recursive edge
    inclusion/exclusion with union-find cycle rejection, so the work is
    proportional to the number of forests rather than 2**|E|.
    """
    edge_slots = tuple(_bit_indices(g.edges))
    m = len(edge_slots)
    parent = list(range(g.n))
    size = [1] * g.n

    def rec(i: int, bits: int) -> Iterator[int]:
        if i == m:
            yield bits
            return
        yield from rec(i + 1, bits)
        slot = edge_slots[i]
        u, v = SLOT_ENDPOINTS[slot]
        while parent[u] != u:
            u = parent[u]
        while parent[v] != v:
            v = parent[v]
        if u == v:
            return
        if size[u] < size[v]:
            u, v = v, u
        parent[v] = u
        size[u] += size[v]
        yield from rec(i + 1, bits | 1 << slot)
        size[u] -= size[v]
        parent[v] = v

    yield from rec(0, 0)


SetPartition = tuple[tuple[int, ...], ...]


def set_partitions(n: int) -> Iterator[SetPartition]:
    """All set partitions of {0..n-1}, blocks ordered by minimum element.

    Enumeration follows restricted growth strings, so the count is Bell(n).
    """
    if not 0 <= n <= MAX_VERTICES:
        raise SizeLimitError(f"set partitions supported for 0 <= n <= {MAX_VERTICES}")
    if n == 0:
        yield ()
        return
    rgs = [0] * n

    def rec(i: int, top: int) -> Iterator[SetPartition]:
        if i == n:
            blocks: list[list[int]] = [[] for _ in range(top + 1)]
            for v, b in enumerate(rgs):
                blocks[b].append(v)
            yield tuple(tuple(b) for b in blocks)
            return
        for b in range(top + 2):
            rgs[i] = b
            yield from rec(i + 1, max(top, b))

    yield from rec(1, 0)


# -- automorphisms and canonical forms ---------------------------------------


def aut_order(g: Graph) -> int:
    """Order of the automorphism group, by backtracking over vertex images
    with degree pruning."""
    n = g.n
    if n > 10:
        raise SizeLimitError(f"automorphism counting capped at 10 vertices, got {n}")
    if n <= 1:
        return 1
    masks = g.adjacency_masks()
    deg = [m.bit_count() for m in masks]
    perm = [0] * n
    used = [False] * n
    count = 0

    def place(i: int) -> None:
        nonlocal count
        if i == n:
            count += 1
            return
        row = masks[i]
        for v in range(n):
            if used[v] or deg[v] != deg[i]:
                continue
            vrow = masks[v]
            if all((row >> j & 1) == (vrow >> perm[j] & 1) for j in range(i)):
                used[v] = True
                perm[i] = v
                place(i + 1)
                used[v] = False

    place(0)
    return count


@lru_cache(maxsize=None)
def _perms(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(itertools.permutations(range(n)))


@lru_cache(maxsize=None)
def canonical_form(g: Graph) -> Graph:
    """Isomorphism-invariant representative: the relabeling minimizing the edge
    bitset.  Brute force over all vertex permutations with a monotone early
    abort (the bitset only grows while it is being assembled)."""
    n = g.n
    if n > 8:
        raise SizeLimitError(f"canonical form capped at 8 vertices, got {n}")
    m = n * (n - 1) // 2
    if n <= 2 or g.edges == 0 or g.edges == (1 << m) - 1:
        return g
    el = g.edge_list()
    best = g.edges
    for perm in _perms(n):
        bits = 0
        ok = True
        for u, v in el:
            a, b = perm[u], perm[v]
            bits |= 1 << (b * (b - 1) // 2 + a if a < b else a * (a - 1) // 2 + b)
            if bits >= best:
                ok = False
                break
        if ok and bits < best:
            best = bits
    return Graph(n, best)


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """Canonical representatives of every isomorphism class on n vertices.

    Sweeps the 2**C(n,2) labeled bitsets in increasing order and marks whole
    orbits, so each first-unseen bitset is the minimum of its orbit, i.e. the
    canonical form.  Capped at n = 7 (2**21 bitsets).
    """
    if n > 7:
        raise SizeLimitError(f"exhaustive enumeration capped at 7 vertices, got {n}")
    m = n * (n - 1) // 2
    perms = _perms(n)
    seen = bytearray(1 << m)
    reps = []
    for bits in range(1 << m):
        if seen[bits]:
            continue
        reps.append(Graph(n, bits))
        el = tuple(SLOT_ENDPOINTS[s] for s in _bit_indices(bits))
        for perm in perms:
            image = 0
            for u, v in el:
                a, b = perm[u], perm[v]
                image |= 1 << (b * (b - 1) // 2 + a if a < b else a * (a - 1) // 2 + b)
            seen[image] = 1
    return tuple(reps)


def connected_graphs(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return ()
    return tuple(g for g in all_graphs(n) if is_connected(g))


# -- contraction --------------------------------------------------------------


def contract_edge(wg: WeightedGraph, edge: tuple[int, int]) -> WeightedGraph:
    """Contract an edge of a weighted graph.

    The endpoints merge into the lower-labeled vertex, whose weight becomes
    the sum of the endpoint weights; parallel edges collapse; vertices above
    the removed endpoint shift down by one.  Total weight is preserved.
    """
    u, v = edge
    if u > v:
        u, v = v, u
    g = wg.graph
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) not present")

    def newlabel(x: int) -> int:
        if x == v:
            return u
        return x - 1 if x > v else x

    bits = 0
    for a, b in g.edge_list():
        na, nb = newlabel(a), newlabel(b)
        if na != nb:
            bits |= 1 << edge_slot(na, nb)
    weights = list(wg.weights)
    weights[u] += weights[v]
    del weights[v]
    return WeightedGraph(Graph(g.n - 1, bits), tuple(weights))


# -- graph6 -------------------------------------------------------------------


def parse_graph6(text: str) -> Graph:
    """Parse a single graph6 value (optionally with the ``>>graph6<<`` header)."""
    data = text.rstrip("\n")
    base = 0
    if data.startswith(">>graph6<<"):
        base = 10
        data = data[10:]
    if not data:
        raise Graph6ParseError("empty graph6 string", base)
    c0 = ord(data[0])
    if c0 == 126:
        raise SizeLimitError("graph6 long-form vertex counts (>62) are not supported")
    if not 63 <= c0 <= 125:
        raise Graph6ParseError(f"invalid vertex-count byte {data[0]!r}", base)
    n = c0 - 63
    if n > MAX_VERTICES:
        raise SizeLimitError(f"graph6 value has {n} vertices, cap is {MAX_VERTICES}")
    m = n * (n - 1) // 2
    need = (m + 5) // 6
    body = data[1:]
    if len(body) != need:
        raise Graph6ParseError(
            f"expected {need} edge bytes for {n} vertices, got {len(body)}",
            base + 1 + min(len(body), need))
    bits = 0
    for k, ch in enumerate(body):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise Graph6ParseError(f"invalid edge byte {ch!r}", base + 1 + k)
        for off in range(6):
            s = 6 * k + off
            if val >> (5 - off) & 1:
                if s >= m:
                    raise Graph6ParseError("nonzero padding bits", base + 1 + k)
                bits |= 1 << s
    return Graph(n, bits)


def emit_graph6(g: Graph) -> str:
    """Encode as graph6; inverse of :func:`parse_graph6`."""
    m = g.n * (g.n - 1) // 2
    out = [chr(63 + g.n)]
    for k in range((m + 5) // 6):
        val = 0
        for off in range(6):
            s = 6 * k + off
            if s < m and g.edges >> s & 1:
                val |= 1 << (5 - off)
        out.append(chr(63 + val))
    return "".join(out)


def read_graph6_lines(text: str) -> list[Graph]:
    """Parse a line-delimited graph6 corpus, skipping blank lines."""
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]
