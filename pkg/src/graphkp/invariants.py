"""Graph polynomial invariants with exact rational coefficients.

Three computations of the same flavor live here, each homogeneous of weight
|V(G)| with the weight of q_i taken to be i:

* weighted chromatic polynomial, by the edge-subset expansion

      W_G(q) = sum over E' <= E(G) of (-1)^(|E'| - |V| + k(E'))
               * q_{v_1} ... q_{v_k},

  where k(E') counts connected components of the spanning subgraph (V, E')
  and v_1..v_k are their vertex counts;

* the same polynomial by deletion-contraction on weighted graphs,
  W(G) = W(G - e) + W(G / e), with an edgeless weighted graph mapping to the
  product of q_{weight(v)};

* the Abel polynomial, summing over spanning forests the product of
  (size * q_size) over the trees of the forest (each isolated vertex is a
  one-vertex tree contributing q_1).

``chromatic_oracle`` counts proper colorings by brute force; it shares no
code with the polynomials and serves as an independent cross-check through
the specialization (-1)^n W_G(q_j = -k) = #colorings with k colors.

``umbral_from_b`` reconstructs any umbral invariant from its primitive
coefficients b_G over connected graphs:

      U_G(q) = sum over set partitions of V(G) of
               product over blocks of b_{G(block)} * q_{|block|},

with b zero on disconnected induced subgraphs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from graphkp.errors import SizeLimitError
from graphkp.graphs import (Graph, SLOT_ENDPOINTS, WeightedGraph,
                            canonical_form, connected_graphs, contract_edge,
                            is_connected, set_partitions, spanning_forests)
from graphkp.series import DEFAULT_ORDER, TruncSeries, mono


def _counts_to_mono(counts: dict[int, int]):
    return mono(counts)


def weighted_chromatic_subset(g: Graph, order: int = DEFAULT_ORDER) -> TruncSeries:
    """Weighted chromatic polynomial via the edge-subset expansion."""
    if g.n > 10:
        raise SizeLimitError(f"subset expansion capped at 10 vertices, got {g.n}")
    if g.n > order:
        raise SizeLimitError(
            f"graph weight {g.n} exceeds truncation order {order}")
    edges = g.edge_list()
    m = len(edges)
    n = g.n
    acc: dict[tuple[int, ...], int] = {}
    for sub in range(1 << m):
        parent = list(range(n))
        ncomp = n
        nedges = 0
        s = sub
        while s:
            low = s & -s
            s ^= low
            u, v = edges[low.bit_length() - 1]
            while parent[u] != u:
                u = parent[u]
            while parent[v] != v:
                v = parent[v]
            if u != v:
                parent[v] = u
                ncomp -= 1
            nedges += 1
        sizes = [0] * n
        for v in range(n):
            r = v
            while parent[r] != r:
                r = parent[r]
            sizes[r] += 1
        key = tuple(sorted(sz for sz in sizes if sz))
        acc[key] = acc.get(key, 0) + (-1) ** (nedges - n + ncomp)
    terms = {}
    for sizes, val in acc.items():
        if val:
            counts: dict[int, int] = {}
            for sz in sizes:
                counts[sz] = counts.get(sz, 0) + 1
            terms[_counts_to_mono(counts)] = Fraction(val)
    return TruncSeries(order, "q", terms)


def weighted_chromatic_dc(wg: WeightedGraph | Graph,
                          order: int = DEFAULT_ORDER) -> TruncSeries:
    """Weighted chromatic polynomial by deletion-contraction.

    Always splits on the lowest-numbered present edge slot; an edgeless
    weighted graph with vertex weights w_1..w_k maps to q_{w_1} ... q_{w_k}.
    On simple graphs (all weights 1) this agrees with the subset expansion.
    """
    if isinstance(wg, Graph):
        wg = WeightedGraph.from_graph(wg)
    if wg.total_weight > order:
        raise SizeLimitError(
            f"total weight {wg.total_weight} exceeds truncation order {order}")
    if wg.graph.num_edges > 24:
        raise SizeLimitError("deletion-contraction capped at 24 edges")
    acc: dict[tuple[int, ...], int] = {}
    stack = [wg]
    while stack:
        cur = stack.pop()
        bits = cur.graph.edges
        if bits == 0:
            key = tuple(sorted(cur.weights))
            acc[key] = acc.get(key, 0) + 1
            continue
        slot = (bits & -bits).bit_length() - 1
        stack.append(WeightedGraph(Graph(cur.graph.n, bits ^ (1 << slot)),
                                   cur.weights))
        stack.append(contract_edge(cur, SLOT_ENDPOINTS[slot]))
    terms = {}
    for weights, val in acc.items():
        counts: dict[int, int] = {}
        for w in weights:
            counts[w] = counts.get(w, 0) + 1
        terms[_counts_to_mono(counts)] = Fraction(val)
    return TruncSeries(order, "q", terms)


def abel(g: Graph, order: int = DEFAULT_ORDER) -> TruncSeries:
    """Abel polynomial: sum over spanning forests of prod (size * q_size)."""
    if g.n > 10:
        raise SizeLimitError(f"forest expansion capped at 10 vertices, got {g.n}")
    if g.n > order:
        raise SizeLimitError(
            f"graph weight {g.n} exceeds truncation order {order}")
    n = g.n
    acc: dict[tuple[int, ...], int] = {}
    for forest in spanning_forests(g):
        parent = list(range(n))
        f = forest
        while f:
            low = f & -f
            f ^= low
            u, v = SLOT_ENDPOINTS[low.bit_length() - 1]
            while parent[u] != u:
                u = parent[u]
            while parent[v] != v:
                v = parent[v]
            parent[v] = u
        sizes = [0] * n
        for v in range(n):
            r = v
            while parent[r] != r:
                r = parent[r]
            sizes[r] += 1
        key = tuple(sorted(sz for sz in sizes if sz))
        acc[key] = acc.get(key, 0) + 1
    terms = {}
    for sizes, count in acc.items():
        coeff = count
        counts: dict[int, int] = {}
        for sz in sizes:
            coeff *= sz
            counts[sz] = counts.get(sz, 0) + 1
        terms[_counts_to_mono(counts)] = Fraction(coeff)
    return TruncSeries(order, "q", terms)


def chromatic_oracle(g: Graph, colors: int) -> int:
    """Count proper colorings with colors {1..k} by scanning all k**n maps.

    Deliberately naive: no deletion-contraction, no shared code with the
    polynomial invariants, so it can act as an independent oracle.
    """
    if g.n > 8 or colors > 8:
        raise SizeLimitError("coloring oracle capped at 8 vertices and 8 colors")
    if colors < 0:
        raise ValueError("color count must be nonnegative")
    if g.n == 0:
        return 1
    if colors == 0:
        return 0
    edges = g.edge_list()
    count = 0
    for coloring in itertools.product(range(colors), repeat=g.n):
        if all(coloring[u] != coloring[v] for u, v in edges):
            count += 1
    return count


INVARIANTS = {
    "W": weighted_chromatic_subset,
    "A": abel,
}


def extract_b(which: str, g: Graph) -> Fraction:
    """Primitive coefficient of a connected graph: the coefficient of q_n in
    the invariant, which is what the invariant assigns to the projection of
    the graph onto the primitive subspace."""
    if which not in INVARIANTS:
        raise ValueError(f"unknown invariant {which!r}, expected one of {sorted(INVARIANTS)}")
    if g.n > 7:
        raise SizeLimitError(f"primitive coefficients capped at 7 vertices, got {g.n}")
    if not is_connected(g):
        raise ValueError("primitive coefficients are defined for connected graphs only")
    poly = INVARIANTS[which](g, order=max(g.n, 1))
    return poly.coefficient(mono({g.n: 1}))


@dataclass(frozen=True)
class UmbralCoefficients:
    """Primitive coefficients b_G for connected canonical graphs up to a vertex
    bound; by convention b is zero on disconnected graphs."""

    values: dict[Graph, Fraction]
    bound: int

    @classmethod
    def from_invariant(cls, which: str, bound: int) -> "UmbralCoefficients":
        values = {}
        for n in range(1, bound + 1):
            for g in connected_graphs(n):
                values[g] = extract_b(which, g)
        return cls(values, bound)

    def lookup(self, g: Graph) -> Fraction:
        """b for a canonical connected graph; zero if disconnected."""
        if g.n == 0 or not is_connected(g):
            return Fraction(0)
        try:
            return self.values[g]
        except KeyError:
            raise ValueError(
                f"no primitive coefficient for a connected graph on {g.n} vertices"
            ) from None


def umbral_from_b(g: Graph, coeffs: UmbralCoefficients,
                  order: int = DEFAULT_ORDER) -> TruncSeries:
    """Reconstruct an umbral invariant from primitive coefficients by the set
    partition expansion; partitions with a disconnected block contribute 0."""
    if g.n > 7:
        raise SizeLimitError(f"umbral reconstruction capped at 7 vertices, got {g.n}")
    if g.n > order:
        raise SizeLimitError(f"graph weight {g.n} exceeds truncation order {order}")
    terms: dict = {}
    for blocks in set_partitions(g.n):
        coeff = Fraction(1)
        counts: dict[int, int] = {}
        for block in blocks:
            b = coeffs.lookup(canonical_form(g.induced(block)))
            if not b:
                coeff = Fraction(0)
                break
            coeff *= b
            counts[len(block)] = counts.get(len(block), 0) + 1
        if not coeff:
            continue
        key = _counts_to_mono(counts)
        s = terms.get(key, 0) + coeff
        if s:
            terms[key] = s
        elif key in terms:
            del terms[key]
    return TruncSeries(order, "q", terms)
