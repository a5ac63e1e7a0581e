"""Commuting graphs and their star-freeness.

The commuting graph of a non-abelian group has the non-central elements as
vertices, with an edge between two distinct elements that commute. A vertex
x has degree |C(x)| - |Z| - 1, so "no k-star subgraph" reduces to a degree
bound; the induced version needs k pairwise non-adjacent neighbours and is
decided by an independent-set search inside each neighbourhood.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import asdict, dataclass
from functools import cached_property

import numpy as np

from starfree import kernels
from starfree.errors import AbelianGroup
from starfree.group import FiniteGroup


@dataclass(frozen=True, eq=False)
class CommutingGraph:
    """Commuting graph with one bitset row per vertex.

    ``vertices[i]`` is the group element behind vertex i, and bit j of
    ``rows[i]`` is set iff vertices i and j are distinct and commute.
    """

    group_label: str
    vertices: tuple[int, ...]
    rows: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def neighbors(self, i: int) -> list[int]:
        r, out = self.rows[i], []
        while r:
            low = r & -r
            out.append(low.bit_length() - 1)
            r ^= low
        return out

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    @cached_property
    def matrix(self) -> np.ndarray:
        """Dense boolean adjacency matrix over vertex positions."""
        V = len(self.vertices)
        m = np.zeros((V, V), dtype=bool)
        for i in range(V):
            m[i, self.neighbors(i)] = True
        m.setflags(write=False)
        return m

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted pairs of group elements, in lexicographic order."""
        out = []
        for i, a in enumerate(self.vertices):
            for j in self.neighbors(i):
                b = self.vertices[j]
                if a < b:
                    out.append((a, b))
        return sorted(out)

    def components(self) -> list[tuple[int, int]]:
        """(vertex count, edge count) per connected component, largest first."""
        seen = 0
        out = []
        for start in range(len(self.vertices)):
            if seen >> start & 1:
                continue
            comp = frontier = 1 << start
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                new = self.rows[low.bit_length() - 1] & ~comp
                comp |= new
                frontier |= new
            seen |= comp
            members = [i for i in range(len(self.vertices)) if comp >> i & 1]
            edges = sum(self.degrees[i] for i in members) // 2
            out.append((len(members), edges))
        return sorted(out, reverse=True)

    def to_dot(self) -> str:
        """Graphviz text: vertices then edges, both sorted, one per line."""
        lines = [f'graph "{self.group_label}" {{']
        lines += [f"  {v};" for v in sorted(self.vertices)]
        lines += [f"  {a} -- {b};" for a, b in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


def _require_nonabelian(G: FiniteGroup) -> None:
    if G.is_abelian:
        raise AbelianGroup(f"{G.label or 'group'} is abelian; its commuting graph has no vertices")


def _require_k(k: int) -> None:
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")


def commuting_graph(G: FiniteGroup) -> CommutingGraph:
    _require_nonabelian(G)
    verts = np.flatnonzero(~G.center_mask)
    sub = G.commutes[np.ix_(verts, verts)].copy()
    np.fill_diagonal(sub, False)
    weights = [1 << j for j in range(len(verts))]
    rows = tuple(sum(w for w, bit in zip(weights, r) if bit) for r in sub.tolist())
    return CommutingGraph(G.label or f"G{G.order}", tuple(int(v) for v in verts), rows)


def _strong_by_centralizers(G: FiniteGroup, k: int) -> bool:
    # |C(x)| < (k + 1) + |Z| for every non-central x
    z = int(G.center_mask.sum())
    return bool((G.centralizer_sizes[~G.center_mask] < k + 1 + z).all())


def is_strong_k_star_free(G: FiniteGroup, k: int) -> bool:
    """True iff no vertex of the commuting graph has k or more neighbours.

    Decided twice, from graph degrees and from centralizer sizes; the two
    answers must agree.
    """
    _require_k(k)
    by_graph = commuting_graph(G).max_degree < k
    by_centralizers = _strong_by_centralizers(G, k)
    assert by_graph == by_centralizers, f"degree and centralizer criteria disagree for {G.label}, k={k}"
    return by_graph


def strong_star_number(G: FiniteGroup) -> int:
    _require_nonabelian(G)
    z = int(G.center_mask.sum())
    return int(G.centralizer_sizes[~G.center_mask].max()) - z


def _induced_search_order(graph: CommutingGraph) -> list[int]:
    return sorted(range(len(graph)), key=lambda i: (-graph.degrees[i], graph.vertices[i]))


def _neighbourhood(graph: CommutingGraph, i: int) -> np.ndarray:
    nb = sorted(graph.neighbors(i), key=lambda j: (graph.degrees[j], j))
    return graph.matrix[np.ix_(nb, nb)]


def has_induced_star(graph: CommutingGraph, k: int) -> bool:
    """True iff some vertex has k pairwise non-adjacent neighbours."""
    _require_k(k)
    for i in _induced_search_order(graph):
        if graph.degrees[i] < k:
            break
        if kernels.independence_number(_neighbourhood(graph, i), k) >= k:
            return True
    return False


def is_induced_k_star_free(G: FiniteGroup, k: int) -> bool:
    _require_k(k)
    return not has_induced_star(commuting_graph(G), k)


def _max_independent_neighbourhood(graph: CommutingGraph) -> int:
    best = 0
    for i in _induced_search_order(graph):
        if graph.degrees[i] <= best:
            break
        best = max(best, kernels.independence_number(_neighbourhood(graph, i)))
    return best


def induced_star_number(G: FiniteGroup) -> int:
    """Smallest k such that the commuting graph has no induced k-star."""
    return _max_independent_neighbourhood(commuting_graph(G)) + 1


@dataclass(frozen=True)
class StarReport:
    group: str
    order: int
    center_order: int
    strong_star_number: int
    induced_star_number: int
    max_degree: int
    degree_histogram: dict[int, int]
    components: list[tuple[int, int]]

    def to_json(self) -> str:
        doc = asdict(self)
        doc["degree_histogram"] = {str(d): c for d, c in sorted(self.degree_histogram.items())}
        doc["components"] = [list(c) for c in self.components]
        return json.dumps(doc, indent=2)


def star_report(G: FiniteGroup) -> StarReport:
    graph = commuting_graph(G)
    strong = graph.max_degree + 1
    induced = _max_independent_neighbourhood(graph) + 1
    assert strong == strong_star_number(G) and induced <= strong
    return StarReport(
        group=graph.group_label,
        order=G.order,
        center_order=int(G.center_mask.sum()),
        strong_star_number=strong,
        induced_star_number=induced,
        max_degree=graph.max_degree,
        degree_histogram=dict(sorted(Counter(graph.degrees).items())),
        components=graph.components(),
    )
