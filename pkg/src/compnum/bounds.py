"""Closed-form bounds and the diamond-free plane-graph formula.

Bounds are reported raw (they may be negative); since a competition number
is never negative, callers wanting a usable floor should clamp at zero.
The union-tail bound is deliberately strengthened over its per-labeling
statement: it minimizes the union size over all subsets of the given
cardinality, so it is sound without knowing any accompanying digraph
("subset-min variant").
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cliques import every_clique_has_occupied_edge, is_diamond_free, maximal_cliques
from .ecc import CliqueCover, min_edge_clique_cover, theta_e
from .graph import Graph
from .realizer import competition_number, primary_predator_index


def opsut_bound(graph: Graph) -> int:
    """theta_e - n + 2; the classical floor for the competition number."""
    return theta_e(graph) - graph.n + 2


def predator_bound(graph: Graph, p: int) -> int:
    """theta_e - n + p for a predator count p (exact or a lower bound)."""
    return theta_e(graph) - graph.n + p


def union_tail_bound(cover: CliqueCover, k: int) -> int:
    """Subset-min union-tail bound on the predator count.

    For a cover of size t and 1 <= k <= t, returns
    min over (t - k + 1)-subsets S of |union of S|, minus t, plus k.
    """
    if not (cover.is_minimum and cover.all_maximal):
        raise ValueError("cover must be a minimum cover of maximal cliques")
    t = cover.theta
    if not 1 <= k <= t:
        raise ValueError(f"index k must lie in 1..{t}")
    size = t - k + 1
    best = None
    for subset in combinations(cover.cliques, size):
        union = set()
        for c in subset:
            union.update(c)
        if best is None or len(union) < best:
            best = len(union)
    return best - t + k


def best_union_tail(cover: CliqueCover) -> tuple[int, int]:
    """The index k maximizing the union-tail bound (smallest k on ties)."""
    best = None
    for k in range(1, cover.theta + 1):
        value = union_tail_bound(cover, k)
        if best is None or value > best[1]:
            best = (k, value)
    if best is None:
        raise ValueError("empty cover has no union-tail bound")
    return best


def clique_census(graph: Graph) -> tuple[int, int, int]:
    """Counts (c2, c3, c4) of maximal cliques by size; isolated vertices
    are not counted.  Any maximal clique on 5 or more vertices is an error,
    because the census is meant for graphs without a K5 subgraph."""
    counts = {2: 0, 3: 0, 4: 0}
    for c in maximal_cliques(graph):
        if len(c) >= 5:
            raise ValueError(
                f"maximal clique of size {len(c)} found; the census covers "
                f"sizes 2..4 only")
        if len(c) >= 2:
            counts[len(c)] += 1
    return counts[2], counts[3], counts[4]


@dataclass(frozen=True)
class PlanarFormulaResult:
    faces: int
    k_formula: int
    theta_from_census: int
    k_exact: int
    consistent: bool


def planar_formula_check(graph: Graph, p: int) -> PlanarFormulaResult:
    """Evaluate the face-count formula for a connected diamond-free plane
    graph: k = f + p - 2*c3 - 5*c4 - 2 with f = |E| - n + 2.

    Planarity itself is the caller's assertion; only the edge-count sanity
    check |E| <= 3n - 6 (for n >= 3) guards it.  ``consistent`` requires
    both that the formula reproduces the exact competition number and that
    theta_e equals |E| - 2*c3 - 5*c4.
    """
    if graph.n == 0:
        raise ValueError("graph must have at least one vertex")
    if not graph.is_connected():
        raise ValueError("graph must be connected")
    free, witness = is_diamond_free(graph)
    if not free:
        raise ValueError(f"graph contains an induced diamond on {witness}")
    if graph.n >= 3 and graph.edge_count > 3 * graph.n - 6:
        raise ValueError("edge count exceeds the planar bound 3n - 6")
    c2, c3, c4 = clique_census(graph)
    faces = graph.edge_count - graph.n + 2
    k_formula = faces + p - 2 * c3 - 5 * c4 - 2
    theta_census = graph.edge_count - 2 * c3 - 5 * c4
    k_exact, _ = competition_number(graph)
    consistent = (k_formula == k_exact) and (theta_census == theta_e(graph))
    return PlanarFormulaResult(faces, k_formula, theta_census, k_exact,
                               consistent)


@dataclass(frozen=True)
class BoundsReport:
    """All bounds for one graph, with the exact values they hang off."""

    n: int
    edge_count: int
    theta_e: int
    k: int
    p: int
    opsut: int
    predator_bound: int
    union_tail: tuple[tuple[int, int], ...]
    union_tail_best: tuple[int, int] | None
    census: tuple[int, int, int] | None
    faces: int | None
    planar_formula_k: int | None
    planar_consistent: bool | None
    occupied_equality: bool | None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "edges": self.edge_count,
            "theta_e": self.theta_e,
            "k": self.k,
            "p": self.p,
            "opsut": self.opsut,
            "opsut_usable": max(self.opsut, 0),
            "predator_bound": self.predator_bound,
            "predator_bound_usable": max(self.predator_bound, 0),
            "union_tail": {str(k): v for k, v in self.union_tail},
            "union_tail_best": None if self.union_tail_best is None
            else list(self.union_tail_best),
            "union_tail_variant": "subset-min variant",
            "census": None if self.census is None else list(self.census),
            "faces": self.faces,
            "planar_formula_k": self.planar_formula_k,
            "planar_consistent": self.planar_consistent,
            "occupied_equality": self.occupied_equality,
        }


def bounds_report(graph: Graph) -> BoundsReport:
    """Compute every applicable bound for a graph, using exact k and p."""
    k, _ = competition_number(graph)
    p, _ = primary_predator_index(graph)
    theta = theta_e(graph)
    union_tail: tuple[tuple[int, int], ...] = ()
    union_best = None
    if theta > 0:
        cover = min_edge_clique_cover(graph)
        union_tail = tuple((i, union_tail_bound(cover, i))
                           for i in range(1, theta + 1))
        union_best = best_union_tail(cover)
    census = faces = formula_k = consistent = None
    try:
        census = clique_census(graph)
    except ValueError:
        pass
    try:
        result = planar_formula_check(graph, p)
    except ValueError:
        pass
    else:
        faces = result.faces
        formula_k = result.k_formula
        consistent = result.consistent
    occupied = None
    if graph.edge_count > 0:
        occupied = every_clique_has_occupied_edge(graph)
        if occupied and k != theta - graph.n + p:
            raise RuntimeError(
                "every maximal clique owns an occupied edge but the exact "
                "equality k = theta_e - n + p fails; library bug")
    return BoundsReport(graph.n, graph.edge_count, theta, k, p,
                        opsut_bound(graph), predator_bound(graph, p),
                        union_tail, union_best, census, faces, formula_k,
                        consistent, occupied)
