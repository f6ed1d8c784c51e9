"""Exact Betti numbers for squarefree monomial ideals via reduced homology.

The central computation is a subset scan: the graded Betti number of S/I in
homological index i and multidegree W equals the rank of reduced homology in
dimension |W|-i-1 of the restriction to W of the complex whose non-faces are
the sets containing a generator of I. Ranks come from boundary-matrix ranks,
over GF(2) through the selected kernel (compiled or pure) and over the
rationals through exact fraction-free integer elimination.

On top of the table sit regularity, linear resolutions, linear quotients,
the dual criterion for Cohen-Macaulayness, the chordal-complement test for
edge ideals, and a combined shellability/quotients report.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations
from math import gcd

from . import kernels
from .complexes import (
    AMBIENT_CAP,
    SimplicialComplex,
    alexander_dual,
    as_face,
    dimension,
    is_pure,
    is_shellable,
    minimal_nonfaces,
    single_swap_order,
)
from .errors import (
    BadParameters,
    BudgetExceeded,
    DegenerateDual,
    EmptyInput,
    NotPure,
    RidgelineError,
)
from .graphs import Graph, complement, is_chordal_graph


class FieldChoice(Enum):
    """Coefficient field for homology ranks: GF(2) or the rationals."""

    GF2 = "gf2"
    Rational = "rational"


def _field(field) -> FieldChoice:
    if isinstance(field, FieldChoice):
        return field
    if isinstance(field, str):
        low = field.lower()
        if low in ("gf2", "f2", "2"):
            return FieldChoice.GF2
        if low in ("rational", "rat", "q", "qq", "0"):
            return FieldChoice.Rational
    raise BadParameters(f"unknown field {field!r}")


@dataclass(frozen=True)
class MonomialIdeal:
    """Squarefree monomial ideal given by the supports of its minimal
    generators (an antichain) inside an ambient variable set."""

    ambient: tuple
    generators: tuple


def monomial_ideal(generators, ambient=None) -> MonomialIdeal:
    gens = sorted(as_face(g) for g in generators)
    support = set()
    for g in gens:
        if not g:
            raise EmptyInput("an empty support means the unit ideal; not representable here")
        support.update(g)
    for x in range(len(gens)):
        for y in range(len(gens)):
            if x != y and set(gens[x]) <= set(gens[y]):
                raise BadParameters(f"generators {gens[x]} and {gens[y]} are not an antichain")
    if ambient is None:
        amb = tuple(sorted(support))
    else:
        amb = as_face(ambient)
        if not support <= set(amb):
            raise BadParameters("generators use variables outside the ambient set")
    return MonomialIdeal(amb, tuple(gens))


def facet_ideal(cx: SimplicialComplex) -> MonomialIdeal:
    """Ideal generated by the facet supports."""
    if any(len(f) == 0 for f in cx.facets):
        raise EmptyInput("the empty facet generates the unit ideal")
    return MonomialIdeal(cx.ambient, tuple(sorted(cx.facets)))


def stanley_reisner_ideal(cx: SimplicialComplex) -> MonomialIdeal:
    """Ideal generated by the minimal non-faces."""
    gens = minimal_nonfaces(cx)
    if any(len(g) == 0 for g in gens):
        raise EmptyInput("a complex with no faces has the unit Stanley-Reisner ideal")
    return MonomialIdeal(cx.ambient, tuple(sorted(gens)))


def edge_ideal(g: Graph) -> MonomialIdeal:
    """Degree-two ideal of the edges of a graph."""
    return MonomialIdeal(tuple(range(1, g.order + 1)), tuple(sorted(g.edges())))


def _int_rank(rows, ncols: int) -> int:
    """Rank of an integer matrix, by fraction-free elimination with row-gcd
    normalization to keep entries small."""
    rows = [list(r) for r in rows]
    nrows = len(rows)
    rank = 0
    col = 0
    while rank < nrows and col < ncols:
        piv = None
        for i in range(rank, nrows):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        pv = pr[col]
        for i in range(rank + 1, nrows):
            ri = rows[i]
            v = ri[col]
            if v:
                for c in range(col, ncols):
                    ri[c] = ri[c] * pv - pr[c] * v
                g = 0
                for x in ri:
                    g = gcd(g, x)
                if g > 1:
                    for c in range(ncols):
                        ri[c] //= g
        rank += 1
        col += 1
    return rank


def _rational_ranks(face: bytearray, n: int):
    """Same contract as the GF(2) kernels, but over the rationals: f-vector
    and boundary ranks (vertices map to the empty face with sign +1)."""
    total = 1 << n
    by_card = [[] for _ in range(n + 1)]
    for m in range(total):
        if face[m]:
            by_card[m.bit_count()].append(m)
    fvec = [len(by_card[p]) for p in range(n + 1)] + [0]
    ranks = [0] * (n + 2)
    colidx = {}
    for p in range(n + 1):
        for k, m in enumerate(by_card[p]):
            colidx[m] = k
    for p in range(1, n + 1):
        if not by_card[p]:
            continue
        ncols = len(by_card[p - 1])
        rows = []
        for m in by_card[p]:
            row = [0] * ncols
            sign = 1
            mm = m
            while mm:
                low = mm & -mm
                mm ^= low
                row[colidx[m ^ low]] = sign
                sign = -sign
            rows.append(row)
        ranks[p] = _int_rank(rows, ncols)
    return fvec, ranks


def _facet_indicator(facet_masks, n: int) -> bytearray:
    face = bytearray(1 << n)
    for fm in facet_masks:
        sub = fm
        while True:
            face[sub] = 1
            if sub == 0:
                break
            sub = (sub - 1) & fm
    return face


def _nonface_indicator(gen_masks, w_mask: int):
    """Compressed indicator of the restriction to W; returns (face, bits)."""
    n = w_mask.bit_count()
    amb2c = {}
    rest = w_mask
    c = 0
    while rest:
        low = rest & -rest
        rest ^= low
        amb2c[low] = c
        c += 1
    total = 1 << n
    face = bytearray(1 for _ in range(total))
    for gm in gen_masks:
        if gm & ~w_mask:
            continue
        cg = 0
        g = gm
        while g:
            low = g & -g
            g ^= low
            cg |= 1 << amb2c[low]
        sup = (total - 1) ^ cg
        sub = sup
        while True:
            face[cg | sub] = 0
            if sub == 0:
                break
            sub = (sub - 1) & sup
    return face, n


def _homology_from_ranks(fvec, ranks, top: int):
    """Reduced homology ranks in dimensions -1..top from kernel output."""
    out = []
    for p in range(-1, top + 1):
        h = fvec[p + 1] - ranks[p + 1] - ranks[p + 2]
        if h < 0:
            raise RidgelineError("negative homology rank: kernel inconsistency")
        out.append(h)
    euler_faces = sum((-1) ** p * fvec[p + 1] for p in range(-1, top + 1))
    euler_hom = sum((-1) ** p * out[p + 1] for p in range(-1, top + 1))
    if euler_faces != euler_hom:
        raise RidgelineError("Euler characteristic mismatch: kernel inconsistency")
    return out


def reduced_homology_ranks(cx: SimplicialComplex, field=FieldChoice.GF2) -> list:
    """Ranks of reduced homology in dimensions -1 .. dim, as a list.

    Entry 0 is dimension -1 (nonzero only for the complex whose single face
    is empty), entry k is dimension k-1. Faces are enumerated over the
    support, which is capped.
    """
    field = _field(field)
    verts = cx.support
    n = len(verts)
    if n > AMBIENT_CAP:
        raise BudgetExceeded(f"homology face scan capped at {AMBIENT_CAP} support vertices")
    pos = {v: i for i, v in enumerate(verts)}
    masks = []
    for f in cx.facets:
        m = 0
        for v in f:
            m |= 1 << pos[v]
        masks.append(m)
    if field is FieldChoice.GF2:
        fvec, ranks = kernels.ranks_of_facet_complex(masks, n)
    else:
        fvec, ranks = _rational_ranks(_facet_indicator(masks, n), n)
    return _homology_from_ranks(fvec, ranks, dimension(cx))


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers of S/I: entries map (i, j) with homological
    index i >= 1 to a positive rank; beta_{0,0} = 1 is implicit."""

    entries: tuple  # sorted tuple of ((i, j), rank)
    field: FieldChoice

    def as_dict(self) -> dict:
        return dict(self.entries)

    def max_index(self) -> int:
        return max((i for (i, _), _ in self.entries), default=0)


@lru_cache(maxsize=65536)
def _betti_entries(ideal: MonomialIdeal, field: FieldChoice, cap: int) -> tuple:
    if len(ideal.ambient) > cap:
        raise BudgetExceeded(f"Betti scan capped at {cap} ambient variables")
    supp = sorted(set().union(*map(set, ideal.generators))) if ideal.generators else []
    s = len(supp)
    pos = {v: i for i, v in enumerate(supp)}
    gen_masks = []
    for g in ideal.generators:
        m = 0
        for v in g:
            m |= 1 << pos[v]
        gen_masks.append(m)
    entries: dict = {}
    for w_mask in range(1, 1 << s):
        j = w_mask.bit_count()
        if field is FieldChoice.GF2:
            fvec, ranks = kernels.ranks_of_nonface_complex(gen_masks, w_mask)
        else:
            face, bits = _nonface_indicator(gen_masks, w_mask)
            fvec, ranks = _rational_ranks(face, bits)
        for t in range(-1, j):
            h = fvec[t + 1] - ranks[t + 1] - ranks[t + 2]
            if h < 0:
                raise RidgelineError("negative homology rank: kernel inconsistency")
            i = j - t - 1
            if h and i >= 1:
                entries[(i, j)] = entries.get((i, j), 0) + h
    gen_total = sum(rank for (i, _), rank in entries.items() if i == 1)
    if gen_total != len(ideal.generators):
        raise RidgelineError("first syzygies disagree with the generator count")
    return tuple(sorted(entries.items()))


def betti_table(ideal: MonomialIdeal, field=FieldChoice.GF2, cap: int = AMBIENT_CAP) -> BettiTable:
    """Full graded Betti table of S/I by scanning vertex subsets.

    Subsets outside the union of generator supports restrict to cones and
    are skipped; the implicit beta_{0,0} = 1 is not stored.
    """
    field = _field(field)
    return BettiTable(_betti_entries(ideal, field, cap), field)


def beta(ideal: MonomialIdeal, i: int, j: int, field=FieldChoice.GF2) -> int:
    """One graded Betti number of S/I (so (0,0) gives 1)."""
    if i == 0:
        return 1 if j == 0 else 0
    return betti_table(ideal, field).as_dict().get((i, j), 0)


def beta_in_degree(ideal: MonomialIdeal, i: int, j: int, field=FieldChoice.GF2,
                   cap: int = AMBIENT_CAP) -> int:
    """One graded Betti number by scanning only the degree-j vertex subsets.

    Same value as beta(ideal, i, j, field) but without filling the whole
    table; the large field-agreement sweeps call this.
    """
    field = _field(field)
    if i == 0:
        return 1 if j == 0 else 0
    if i < 0 or j < i:
        return 0
    if len(ideal.ambient) > cap:
        raise BudgetExceeded(f"Betti scan capped at {cap} ambient variables")
    supp = sorted(set().union(*map(set, ideal.generators))) if ideal.generators else []
    s = len(supp)
    if j > s:
        return 0
    pos = {v: i2 for i2, v in enumerate(supp)}
    gen_masks = []
    for g in ideal.generators:
        m = 0
        for v in g:
            m |= 1 << pos[v]
        gen_masks.append(m)
    t = j - i - 1
    total = 0
    for window in combinations(range(s), j):
        w_mask = 0
        for b in window:
            w_mask |= 1 << b
        if field is FieldChoice.GF2:
            fvec, ranks = kernels.ranks_of_nonface_complex(gen_masks, w_mask)
        else:
            face, bits = _nonface_indicator(gen_masks, w_mask)
            fvec, ranks = _rational_ranks(face, bits)
        h = fvec[t + 1] - ranks[t + 1] - ranks[t + 2]
        if h < 0:
            raise RidgelineError("negative homology rank: kernel inconsistency")
        total += h
    return total


def regularity(ideal: MonomialIdeal, field=FieldChoice.GF2) -> int:
    """max(j - i) over the nonzero entries of the table of S/I."""
    table = betti_table(ideal, field)
    return max((j - i for (i, j), _ in table.entries), default=0)


def has_linear_resolution(ideal: MonomialIdeal, field=FieldChoice.GF2) -> bool:
    """All generators in one degree d and every table entry on j - i = d - 1."""
    if not ideal.generators:
        return True
    degrees = {len(g) for g in ideal.generators}
    if len(degrees) != 1:
        return False
    d = degrees.pop()
    table = betti_table(ideal, field)
    return all(j - i == d - 1 for (i, j), _ in table.entries)


def has_linear_quotients(ideal: MonomialIdeal, budget: int | None = None):
    """Ordering of the generators with variable-generated colon ideals.

    For squarefree generators, the colon condition asks for each j < i some
    k < i whose support exceeds generator i by the single variable l, with l
    also dividing generator j away from i. That is the single-swap order
    condition on the complemented supports, so the shared search runs there.
    Returns the ordered generators, or None.
    """
    gens = ideal.generators
    if not gens:
        return ()
    universe = set(ideal.ambient)
    comps = [universe - set(g) for g in gens]
    order = single_swap_order(comps, budget)
    if order is None:
        return None
    return tuple(gens[i] for i in order)


def is_cohen_macaulay(cx: SimplicialComplex, field=FieldChoice.GF2) -> bool:
    """Dual criterion: the Stanley-Reisner ideal of the dual complex has a
    linear resolution exactly when the complex is Cohen-Macaulay."""
    dual = alexander_dual(cx)
    if dual.is_empty:
        raise DegenerateDual("the full simplex has a void dual; nothing to test")
    return has_linear_resolution(stanley_reisner_ideal(dual), field)


def froberg_check(g: Graph, field=FieldChoice.GF2) -> dict:
    """Both sides of the chordal-complement criterion for edge ideals."""
    lin = has_linear_resolution(edge_ideal(g), field)
    chordal = is_chordal_graph(complement(g)) is not None
    return {
        "linear_resolution": lin,
        "complement_chordal": chordal,
        "agree": lin == chordal,
    }


def shellable_implies_quotients_check(cx: SimplicialComplex, field=FieldChoice.GF2,
                                      budget: int | None = None) -> dict:
    """Run the shelling search against linear quotients of the dual ideal.

    The two answers must agree; when quotients exist, the dual ideal must
    also have a linear resolution. All raw witnesses are included so callers
    can re-check them.
    """
    if not is_pure(cx):
        raise NotPure("this check compares pure shellability with the dual ideal")
    dual = alexander_dual(cx)
    if dual.is_empty:
        raise DegenerateDual("the full simplex has a void dual; nothing to test")
    shelling = is_shellable(cx, budget)
    ideal = stanley_reisner_ideal(dual)
    quotient_order = has_linear_quotients(ideal, budget)
    report = {
        "shellable": shelling is not None,
        "shelling_order": shelling,
        "dual_has_linear_quotients": quotient_order is not None,
        "quotient_order": quotient_order,
        "dual_generators": ideal.generators,
        "biconditional": (shelling is not None) == (quotient_order is not None),
    }
    if quotient_order is not None:
        linear = has_linear_resolution(ideal, field)
        report["dual_linear_resolution"] = linear
        report["quotients_imply_resolution"] = linear
    else:
        report["dual_linear_resolution"] = None
        report["quotients_imply_resolution"] = None
    return report
