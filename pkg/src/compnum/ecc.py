"""Exact minimum edge clique covers.

The candidate universe is the maximal cliques only: any edge clique cover
can be turned into one of maximal cliques of the same size by expanding
each clique, so restricting to maximal cliques is sound.  The solver
branches on the lowest-index uncovered edge, trying only cliques that
contain it, and memoizes on the uncovered-edge bitmask.  Among equal-size
optima the lexicographically least cover (cliques as sorted tuples, the
cover as a sorted tuple of them) is returned, so fixtures are stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cliques import maximal_clique_masks
from .graph import Graph, bits, popcount


@dataclass(frozen=True)
class CliqueCover:
    """An ordered list of cliques with coverage certificates."""

    cliques: tuple[tuple[int, ...], ...]
    covers_all_edges: bool
    all_maximal: bool
    is_minimum: bool

    @property
    def theta(self) -> int:
        return len(self.cliques)

    def to_json_dict(self) -> dict:
        return {
            "theta_e": self.theta,
            "cliques": [list(c) for c in self.cliques],
            "maximal": self.all_maximal,
        }


class _CoverSolver:
    """Per-graph exact set-cover engine over maximal cliques."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.edges = graph.edges()
        self.edge_index = {e: i for i, e in enumerate(self.edges)}
        self.full_mask = (1 << len(self.edges)) - 1
        self.clique_masks = [c for c in maximal_clique_masks(graph) if popcount(c) >= 2]
        self.clique_edge_masks = [self._edge_mask(c) for c in self.clique_masks]
        self.cliques_per_edge = [
            [i for i, em in enumerate(self.clique_edge_masks) if (em >> e) & 1]
            for e in range(len(self.edges))
        ]
        self._size_memo: dict[int, int] = {0: 0}

    def _edge_mask(self, member_mask: int) -> int:
        em = 0
        members = list(bits(member_mask))
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                em |= 1 << self.edge_index[(u, v)]
        return em

    def edge_mask_of(self, members) -> int:
        m = 0
        for v in members:
            m |= 1 << v
        return self._edge_mask(m)

    def size(self, uncovered: int) -> int:
        """Exact minimum number of maximal cliques covering the edge set."""
        memo = self._size_memo
        hit = memo.get(uncovered)
        if hit is not None:
            return hit
        e = (uncovered & -uncovered).bit_length() - 1
        best = len(self.edges) + 1
        for ci in self.cliques_per_edge[e]:
            rest = uncovered & ~self.clique_edge_masks[ci]
            cand = 1 + self.size(rest)
            if cand < best:
                best = cand
        memo[uncovered] = best
        return best

    def disjoint_edge_bound(self, uncovered: int) -> int:
        """Greedy set of pairwise clique-disjoint edges; a lower bound on
        the number of cliques any cover of the set needs."""
        taken_cliques = 0
        count = 0
        for e in bits(uncovered):
            hits = self.cliques_per_edge[e]
            if all(not (taken_cliques >> ci) & 1 for ci in hits):
                count += 1
                for ci in hits:
                    taken_cliques |= 1 << ci
        return count

    def lex_min_cover(self, uncovered: int) -> tuple[int, ...]:
        """Lexicographically least minimum cover of the edge set, returned
        as clique indices in ascending order."""
        budget = self.size(uncovered)
        chosen: list[int] = []
        lo = 0
        while uncovered:
            for idx in range(lo, len(self.clique_masks)):
                em = self.clique_edge_masks[idx]
                if em & uncovered and self._size_from(uncovered & ~em, idx + 1) <= budget - 1:
                    chosen.append(idx)
                    uncovered &= ~em
                    budget -= 1
                    lo = idx + 1
                    break
            else:
                raise RuntimeError("cover extraction failed")
        return tuple(chosen)

    @lru_cache(maxsize=None)
    def _size_from(self, uncovered: int, lo: int) -> int:
        """Minimum cover size of the edge set using cliques of index >= lo."""
        if uncovered == 0:
            return 0
        e = (uncovered & -uncovered).bit_length() - 1
        best = len(self.edges) + 1
        for ci in self.cliques_per_edge[e]:
            if ci < lo:
                continue
            cand = 1 + self._size_from(uncovered & ~self.clique_edge_masks[ci], lo)
            if cand < best:
                best = cand
        return best

    def clique_tuple(self, idx: int) -> tuple[int, ...]:
        return tuple(bits(self.clique_masks[idx]))


@lru_cache(maxsize=None)
def cover_solver(graph: Graph) -> _CoverSolver:
    return _CoverSolver(graph)


def theta_e(graph: Graph) -> int:
    """Minimum size of an edge clique cover (0 for an edgeless graph)."""
    solver = cover_solver(graph)
    return solver.size(solver.full_mask)


def min_edge_clique_cover(graph: Graph) -> CliqueCover:
    """A minimum edge clique cover consisting of maximal cliques."""
    solver = cover_solver(graph)
    indices = solver.lex_min_cover(solver.full_mask)
    cliques = tuple(solver.clique_tuple(i) for i in indices)
    return CliqueCover(cliques, True, True, True)


def min_cover_of_edges(graph: Graph, edge_mask: int) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least minimum cover of an arbitrary edge subset
    (mask over ``graph.edges()`` positions) by maximal cliques."""
    solver = cover_solver(graph)
    return tuple(solver.clique_tuple(i) for i in solver.lex_min_cover(edge_mask))


def make_cover(graph: Graph, cliques) -> CliqueCover:
    """Wrap explicit cliques in a CliqueCover, computing its certificates."""
    cliques = tuple(tuple(sorted(c)) for c in cliques)
    for c in cliques:
        if not c:
            raise ValueError("empty clique in cover")
        if len(set(c)) != len(c) or not graph.is_clique(c):
            raise ValueError(f"{c} is not a clique")
    covered = set()
    for c in cliques:
        for i, u in enumerate(c):
            for v in c[i + 1:]:
                covered.add((u, v))
    covers_all = covered == set(graph.edges())
    maximal_set = set(maximal_clique_masks(graph))
    all_maximal = all(_mask(c) in maximal_set for c in cliques)
    is_minimum = covers_all and len(cliques) == theta_e(graph)
    return CliqueCover(cliques, covers_all, all_maximal, is_minimum)


def _mask(members) -> int:
    m = 0
    for v in members:
        m |= 1 << v
    return m


def expand_to_maximal(graph: Graph, cover: CliqueCover, dedup: bool = False) -> CliqueCover:
    """Expand every clique of a cover to a maximal clique.

    Expansion greedily adds the smallest-index vertex adjacent to the whole
    clique, so it is deterministic.  Cardinality is preserved unless
    ``dedup`` is set, in which case repeated expanded cliques collapse.
    """
    if not cover.covers_all_edges:
        raise ValueError("input does not cover all edges")
    expanded = []
    for c in cover.cliques:
        mask = _mask(c)
        while True:
            common = graph.vertex_mask & ~mask
            for v in bits(mask):
                common &= graph.rows[v]
            if common == 0:
                break
            mask |= common & -common
        expanded.append(tuple(bits(mask)))
    if dedup:
        expanded = sorted(set(expanded))
    return CliqueCover(tuple(expanded), True, True,
                       len(expanded) == theta_e(graph))


def naive_theta_e(graph: Graph) -> int:
    """Independent oracle: try all subsets of maximal cliques by increasing
    size.  Exponential; for cross-checks on tiny graphs only."""
    from itertools import combinations

    solver = cover_solver(graph)
    if solver.full_mask == 0:
        return 0
    cliques = solver.clique_edge_masks
    for size in range(1, len(cliques) + 1):
        for combo in combinations(cliques, size):
            m = 0
            for em in combo:
                m |= em
            if m == solver.full_mask:
                return size
    raise RuntimeError("maximal cliques fail to cover the graph")
