"""Line graphs of pure complexes: construction, edge counts, triangle
classification, second-syzygy predictions, complete-graph characterization,
generated families, and a bounded realizability search.

The line graph of a pure complex with facets of size d has one vertex per
facet (numbered 1..r in canonical facet order) and an edge exactly when two
facets meet in d-1 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .complexes import SimplicialComplex, facet_size, from_facets, is_pure
from .errors import (
    BadParameters,
    Budget,
    DimensionTooSmall,
    EmptyInput,
    NotPure,
    RidgelineError,
)
from .graphs import Graph


class TriangleType(Enum):
    """How a triangle of facets meets: every 3-clique of the line graph has
    a triple intersection of size d-1 (RidgeShared) or d-2 (SimplexType)."""

    RidgeShared = "ridge_shared"
    SimplexType = "simplex_type"


class NtInterpretation(Enum):
    """Rival readings of which simplex-type triangles the correction term of
    the second-syzygy formula counts."""

    AllSimplexType = "all"
    MaxDisjointSimplexType = "max_disjoint"
    IsolatedSimplexType = "isolated"


@dataclass(frozen=True)
class LabeledLineGraph:
    """A line graph remembering which facet each vertex stands for."""

    graph: Graph
    facet_of: tuple  # facet_of[i-1] is the facet behind vertex i

    @property
    def facet_count(self) -> int:
        return len(self.facet_of)


def _require_pure(cx: SimplicialComplex) -> int:
    if cx.is_empty:
        raise EmptyInput("line graph needs at least one facet")
    if not is_pure(cx):
        raise NotPure("line graphs are defined for pure complexes")
    return facet_size(cx)


def line_graph(cx: SimplicialComplex) -> LabeledLineGraph:
    """Line graph of a pure complex of facet size at least 2."""
    d = _require_pure(cx)
    if d < 2:
        raise DimensionTooSmall("line graph needs facets of size at least 2")
    facets = cx.facets
    r = len(facets)
    sets = [set(f) for f in facets]
    edges = [(i + 1, j + 1) for i, j in combinations(range(r), 2)
             if len(sets[i] & sets[j]) == d - 1]
    return LabeledLineGraph(Graph(r, edges), facets)


def ridge_counts(cx: SimplicialComplex) -> tuple:
    """s_i = number of later facets meeting facet i in all but one vertex."""
    d = _require_pure(cx)
    sets = [set(f) for f in cx.facets]
    r = len(sets)
    return tuple(
        sum(1 for j in range(i + 1, r) if len(sets[i] & sets[j]) == d - 1)
        for i in range(r)
    )


def edge_count_formula(cx: SimplicialComplex) -> int:
    """Edge count of the line graph as the sum of the ridge counts.

    Cross-checked against the constructed graph (and its degree sum) whenever
    the line graph itself is defined.
    """
    total = sum(ridge_counts(cx))
    if facet_size(cx) >= 2:
        g = line_graph(cx).graph
        if g.edge_count() != total:
            raise RidgelineError("ridge-count formula disagrees with the line graph")
        if sum(g.degree(v) for v in range(1, g.order + 1)) != 2 * total:
            raise RidgelineError("degree sum disagrees with twice the ridge counts")
    return total


def classify_triangles(cx: SimplicialComplex) -> tuple:
    """Each 3-clique of the line graph with its triple-intersection type.

    Computed straight from pairwise intersection sizes so that facet size 1
    (where the line graph constructor refuses to run) still classifies.
    """
    d = _require_pure(cx)
    sets = [set(f) for f in cx.facets]
    out = []
    for i, j, k in combinations(range(len(sets)), 3):
        if (len(sets[i] & sets[j]) != d - 1 or len(sets[i] & sets[k]) != d - 1
                or len(sets[j] & sets[k]) != d - 1):
            continue
        common = len(sets[i] & sets[j] & sets[k])
        if common == d - 1:
            kind = TriangleType.RidgeShared
        elif common == d - 2:
            kind = TriangleType.SimplexType
        else:  # unreachable: pairwise ridge intersections force d-1 or d-2
            raise RidgelineError(
                f"triangle {(i + 1, j + 1, k + 1)} has triple intersection of size {common}"
            )
        out.append(((i + 1, j + 1, k + 1), kind))
    return tuple(out)


def count_Nt(cx: SimplicialComplex, interp: NtInterpretation,
             budget: int | None = None) -> int:
    """Size of the correction term under one reading of "disjoint triangles".

    AllSimplexType counts every simplex-type triangle. MaxDisjoint takes the
    largest family of pairwise vertex-disjoint simplex-type triangles (exact
    branch and bound). Isolated keeps only simplex-type triangles sharing no
    vertex with any other triangle of the line graph.
    """
    interp = NtInterpretation(interp)
    classified = classify_triangles(cx)
    simplex = [t for t, kind in classified if kind is TriangleType.SimplexType]
    if interp is NtInterpretation.AllSimplexType:
        return len(simplex)
    if interp is NtInterpretation.IsolatedSimplexType:
        all_triples = [t for t, _ in classified]
        count = 0
        for t in simplex:
            ts = set(t)
            if all(not ts & set(u) for u in all_triples if u != t):
                count += 1
        return count
    # maximum pairwise-disjoint family
    masks = []
    for t in simplex:
        m = 0
        for v in t:
            m |= 1 << v
        masks.append(m)
    b = Budget(budget)
    best = 0

    def search(idx: int, used: int, size: int) -> None:
        nonlocal best
        if size + (len(masks) - idx) <= best:
            return
        if idx == len(masks):
            best = max(best, size)
            return
        b.spend()
        if not masks[idx] & used:
            search(idx + 1, used | masks[idx], size + 1)
        search(idx + 1, used, size)

    search(0, 0, 0)
    return best


def predicted_beta2(cx: SimplicialComplex, interp: NtInterpretation,
                    budget: int | None = None) -> int:
    """Edge count of the line graph minus the chosen correction term."""
    return edge_count_formula(cx) - count_Nt(cx, interp, budget)


CONE = "Cone"
SIMPLEX_SUBSETS = "SimplexSubsets"
NEITHER = "Neither"


def characterize_complete(cx: SimplicialComplex) -> str:
    """Which complete-line-graph family a pure complex belongs to.

    Cone: all facets share a common (d-1)-set and differ in one extra vertex.
    SimplexSubsets: all facets are d-subsets of one (d+1)-set. A single facet
    is reported as Cone. When the line graph is complete on at least four
    vertices, one of the two shapes must apply; a Neither answer there is an
    internal contradiction and raises.
    """
    d = _require_pure(cx)
    sets = [set(f) for f in cx.facets]
    r = len(sets)
    if r == 1:
        return CONE
    common = set.intersection(*sets)
    if len(common) == d - 1:
        return CONE
    union = set.union(*sets)
    if len(union) <= d + 1:
        return SIMPLEX_SUBSETS
    if r >= 4 and d >= 2:
        g = line_graph(cx).graph
        if g.edge_count() == r * (r - 1) // 2:
            raise RidgelineError(
                "complete line graph on four or more facets fits neither shape"
            )
    return NEITHER


def make_cone(r: int, d: int) -> SimplicialComplex:
    """r facets through the common (d-1)-set {1..d-1}; line graph K_r."""
    if r < 1 or d < 2:
        raise BadParameters("cone family needs r >= 1 and d >= 2")
    base = tuple(range(1, d))
    return from_facets([base + (d - 1 + i,) for i in range(1, r + 1)])


def make_simplex_subsets(d: int, count: int) -> SimplicialComplex:
    """First ``count`` d-subsets of {1..d+1} in order; line graph K_count."""
    if d < 2 or not 1 <= count <= d + 1:
        raise BadParameters("simplex-subset family needs d >= 2, 1 <= count <= d+1")
    subsets = list(combinations(range(1, d + 2), d))
    return from_facets(subsets[:count])


def make_triangle_join(d: int, case: str) -> SimplicialComplex:
    """The two three-facet families whose line graph is a triangle.

    Case "a" is the cone (three facets through a common (d-1)-set), case "b"
    the three d-subsets of a (d+1)-set.
    """
    if case == "a":
        return make_cone(3, d)
    if case == "b":
        return make_simplex_subsets(d, 3)
    raise BadParameters("case must be 'a' or 'b'")


def make_cycle_complex(r: int, d: int) -> SimplicialComplex:
    """Cyclic-window family on r >= 4 facets.

    For d < r-1 the facets are the r consecutive d-windows of a cycle on
    vertices 1..r. For d >= r-1 they are the r windows of size r-1 padded by
    one fresh common set of size d-r+1 (the two branches coincide at
    d = r-1). The padded branch makes every pairwise intersection have size
    d-1, so its line graph is complete rather than a cycle; the harness
    reports this instead of papering over it.
    """
    if r < 4 or d < 2:
        raise BadParameters("cycle family needs r >= 4 and d >= 2")
    if d < r - 1:
        window = d
        pad: tuple = ()
    else:
        window = r - 1
        pad = tuple(range(r + 1, r + 1 + (d - r + 1)))
    facets = []
    for i in range(r):
        win = tuple(sorted((i + k) % r + 1 for k in range(window)))
        facets.append(win + pad)
    return from_facets(facets)


def realizability_search(g: Graph, d: int, max_vertices: int,
                         budget: int | None = None):
    """Search for a pure complex with facet size d whose line graph is g.

    One facet per graph vertex, assigned in vertex order: facet 1 is fixed to
    {1..d} and every later facet draws from already-used vertices plus the
    smallest block of fresh ones, which enumerates all complexes up to
    relabeling. Returns a complex with line graph exactly g (identity
    labeling) or None once the bounded space is exhausted. d*r vertices are
    always enough, so ``max_vertices >= d * g.order`` makes the search
    complete.
    """
    if d < 2:
        raise DimensionTooSmall("realizability needs facet size at least 2")
    if max_vertices < d:
        raise BadParameters("max_vertices cannot be below the facet size")
    r = g.order
    if r == 0:
        raise EmptyInput("the empty graph is not a line graph here")
    b = Budget(budget)
    first = tuple(range(1, d + 1))
    chosen = [first]
    chosen_sets = [set(first)]

    def candidates(high: int):
        """d-sets over vertices 1..high plus a fresh suffix high+1..high+t."""
        for t in range(min(d, max_vertices - high) + 1):
            fresh = tuple(range(high + 1, high + 1 + t))
            for old in combinations(range(1, high + 1), d - t):
                yield tuple(sorted(old)) + fresh

    def fits(candidate: tuple) -> bool:
        cs = set(candidate)
        i = len(chosen) + 1
        for j, fj in enumerate(chosen_sets, start=1):
            inter = len(cs & fj)
            if inter == d:
                return False  # facets must be distinct
            if (inter == d - 1) != g.has_edge(i, j):
                return False
        return True

    def extend() -> bool:
        if len(chosen) == r:
            return True
        high = max(max(f) for f in chosen)
        for cand in candidates(high):
            b.spend()
            if fits(cand):
                chosen.append(cand)
                chosen_sets.append(set(cand))
                if extend():
                    return True
                chosen.pop()
                chosen_sets.pop()
        return False

    if r == 1 or extend():
        found = from_facets(chosen)
        if line_graph(found).graph != g:
            raise RidgelineError("realizability witness failed its own check")
        return found
    return None
