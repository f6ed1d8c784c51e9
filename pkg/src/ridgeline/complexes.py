"""Simplicial complexes presented by their facets, and clutters.

Vertices are positive integers. A complex stores an explicit ambient vertex
set (needed for complements and duals) plus the canonical sorted tuple of
facets. Faces of the complex are exactly the subsets of facets; an ambient
vertex that lies in no facet is therefore a non-face (this is the convention
under which Stanley-Reisner ideals of restricted complexes behave).

The empty complex (no facets) and the complex whose single facet is the empty
set are not constructible through ``from_facets`` but are legal results of
deletions, contractions and duals, and all operations here accept them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import (
    BadParameters,
    Budget,
    BudgetExceeded,
    DegenerateComplement,
    EmptyInput,
    NotPure,
    OutOfAmbient,
    OverlappingAmbients,
    UnknownVertex,
)

Face = tuple  # strictly increasing tuple of positive integers

AMBIENT_CAP = 16  # subset scans refuse larger vertex sets


def as_face(vertices: Iterable[int]) -> Face:
    """Normalize an iterable of vertices into a sorted face tuple."""
    face = tuple(sorted(set(vertices)))
    for v in face:
        if not isinstance(v, int) or isinstance(v, bool) or v <= 0:
            raise BadParameters(f"vertex {v!r} is not a positive integer")
    return face


def _maximal(faces: Iterable[Face]) -> tuple:
    """Drop duplicate faces and faces contained in another face."""
    uniq = sorted(set(faces), key=len)
    keep = []
    for pos, f in enumerate(uniq):
        fs = set(f)
        if not any(fs < set(g) for g in uniq[pos + 1:]):
            keep.append(f)
    return tuple(sorted(keep))


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex over an explicit ambient set, stored by its facets."""

    ambient: tuple
    facets: tuple

    @property
    def is_empty(self) -> bool:
        return len(self.facets) == 0

    @property
    def support(self) -> tuple:
        """Vertices that actually appear in some facet."""
        seen = set()
        for f in self.facets:
            seen.update(f)
        return tuple(sorted(seen))

    @property
    def facet_count(self) -> int:
        return len(self.facets)

    def __repr__(self) -> str:
        inner = ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.facets)
        return f"SimplicialComplex(ambient={set(self.ambient) or '{}'}, facets=[{inner}])"


def from_facets(faces: Iterable[Iterable[int]], ambient: Iterable[int] | None = None) -> SimplicialComplex:
    """Build a complex from generating faces.

    Duplicate and non-maximal faces are dropped. The ambient defaults to the
    union of the faces; if given, it must contain every face.
    """
    face_list = [as_face(f) for f in faces]
    if not face_list:
        raise EmptyInput("a complex needs at least one face")
    if any(len(f) == 0 for f in face_list):
        raise EmptyInput("faces must be nonempty")
    facets = _maximal(face_list)
    support = set()
    for f in facets:
        support.update(f)
    if ambient is None:
        amb = tuple(sorted(support))
    else:
        amb = as_face(ambient)
        if not support <= set(amb):
            extra = sorted(support - set(amb))
            raise OutOfAmbient(f"vertices {extra} lie outside the ambient set")
    return SimplicialComplex(amb, facets)


def dimension(cx: SimplicialComplex) -> int:
    """max |F| - 1 over facets; -1 for the empty complex."""
    if cx.is_empty:
        return -1
    return max(len(f) for f in cx.facets) - 1


def is_pure(cx: SimplicialComplex) -> bool:
    """Whether all facets share one cardinality (vacuously true when empty)."""
    sizes = {len(f) for f in cx.facets}
    return len(sizes) <= 1


def facet_size(cx: SimplicialComplex) -> int:
    """Common facet cardinality of a pure complex."""
    if cx.is_empty:
        raise EmptyInput("empty complex has no facet size")
    if not is_pure(cx):
        raise NotPure("facet size is defined for pure complexes only")
    return len(cx.facets[0])


def is_face(cx: SimplicialComplex, face: Iterable[int]) -> bool:
    fs = set(face)
    return any(fs <= set(f) for f in cx.facets)


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Join of two complexes on disjoint ambient sets."""
    if a.is_empty or b.is_empty:
        raise EmptyInput("join needs two nonempty complexes")
    overlap = set(a.ambient) & set(b.ambient)
    if overlap:
        raise OverlappingAmbients(f"ambient sets share vertices {sorted(overlap)}")
    facets = tuple(sorted(tuple(sorted(f + g)) for f in a.facets for g in b.facets))
    ambient = tuple(sorted(a.ambient + b.ambient))
    return SimplicialComplex(ambient, facets)


def complement_complex(cx: SimplicialComplex) -> SimplicialComplex:
    """Complex whose facets are the ambient-complements of the facets."""
    if cx.is_empty:
        raise EmptyInput("empty complex has no complement complex")
    amb = set(cx.ambient)
    facets = []
    for f in cx.facets:
        comp = tuple(sorted(amb - set(f)))
        if not comp:
            raise DegenerateComplement(f"facet {f} equals the ambient set")
        facets.append(comp)
    # complements of an antichain form an antichain, so no re-maximalization
    return SimplicialComplex(cx.ambient, tuple(sorted(facets)))


def _check_ambient_cap(cx: SimplicialComplex, what: str) -> None:
    if len(cx.ambient) > AMBIENT_CAP:
        raise BudgetExceeded(f"{what} scans subsets of the ambient; capped at {AMBIENT_CAP} vertices")


def minimal_nonfaces(cx: SimplicialComplex) -> tuple:
    """Inclusion-minimal subsets of the ambient that are not faces.

    A set S qualifies exactly when S is not a face while every S minus one
    vertex is. The empty complex has the empty set as its minimal non-face.
    """
    _check_ambient_cap(cx, "minimal_nonfaces")
    amb = cx.ambient
    n = len(amb)
    facet_masks = [_mask_of(f, amb) for f in cx.facets]

    def face_mask(m: int) -> bool:
        return any(m & fm == m for fm in facet_masks)

    out = []
    for m in range(1 << n):
        if face_mask(m):
            continue
        sub = m
        minimal = True
        while sub:
            low = sub & -sub
            if not face_mask(m ^ low):
                minimal = False
                break
            sub ^= low
        if minimal:
            out.append(_face_of(m, amb))
    return tuple(sorted(out, key=lambda f: (len(f), f)))


def alexander_dual(cx: SimplicialComplex) -> SimplicialComplex:
    """Complex whose faces are the ambient-complements of non-faces.

    Its facets are the complements of the minimal non-faces. When the input
    is the full simplex on its ambient there are no non-faces and the result
    is the empty complex (flagged via ``is_empty``).
    """
    if cx.is_empty:
        raise EmptyInput("empty complex has no dual here; it would be the full simplex")
    amb = set(cx.ambient)
    facets = tuple(sorted(tuple(sorted(amb - set(w))) for w in minimal_nonfaces(cx)))
    return SimplicialComplex(cx.ambient, facets)


def deletion(cx: SimplicialComplex, v: int) -> SimplicialComplex:
    """Drop every facet through v and remove v from the ambient.

    May return the empty complex, which is legal input for minor recursion.
    """
    if v not in cx.ambient:
        raise UnknownVertex(f"vertex {v} is not in the ambient set")
    facets = tuple(f for f in cx.facets if v not in f)
    ambient = tuple(u for u in cx.ambient if u != v)
    return SimplicialComplex(ambient, facets)


def contraction(cx: SimplicialComplex, v: int) -> SimplicialComplex:
    """Remove v from every facet, then keep the maximal results.

    The result need not be pure even when the input is, and contracting the
    last vertex of a lone facet leaves the complex whose only facet is empty.
    """
    if v not in cx.ambient:
        raise UnknownVertex(f"vertex {v} is not in the ambient set")
    stripped = [tuple(u for u in f if u != v) for f in cx.facets]
    ambient = tuple(u for u in cx.ambient if u != v)
    return SimplicialComplex(ambient, _maximal(stripped))


def is_free_vertex(cx: SimplicialComplex, v: int) -> bool:
    """Whether v lies in exactly one facet."""
    if v not in cx.ambient:
        raise UnknownVertex(f"vertex {v} is not in the ambient set")
    return sum(1 for f in cx.facets if v in f) == 1


def is_simplicial_vertex(cx: SimplicialComplex, v: int) -> bool:
    """Whether every two distinct facets through v have a third facet inside
    their union with v removed. A vertex in at most one facet qualifies
    vacuously, so free vertices are always simplicial.
    """
    if v not in cx.ambient:
        raise UnknownVertex(f"vertex {v} is not in the ambient set")
    through = [set(f) for f in cx.facets if v in f]
    if len(through) <= 1:
        return True
    others = [set(f) for f in cx.facets]
    for f1, f2 in combinations(through, 2):
        allowed = (f1 | f2) - {v}
        if not any(f3 <= allowed for f3 in others):
            return False
    return True


def simplicial_vertices(cx: SimplicialComplex) -> tuple:
    return tuple(v for v in cx.support if is_simplicial_vertex(cx, v))


def _minor_chase(cx: SimplicialComplex, keeps_vertex, budget: int | None) -> bool:
    """Shared recursion: does every minor keep a vertex with the given property?

    Minors are generated by deletions and contractions at support vertices;
    ambient vertices outside the support touch no facet and are dropped by any
    minor anyway. Complexes with at most one facet pass as base cases.
    """
    b = Budget(budget)
    memo: dict = {}

    def good(facets: tuple) -> bool:
        if len(facets) <= 1:
            return True
        hit = memo.get(facets)
        if hit is not None:
            return hit
        b.spend()
        support = sorted(set().union(*map(set, facets)))
        state = SimplicialComplex(tuple(support), facets)
        ok = any(keeps_vertex(state, v) for v in support)
        if ok:
            for v in support:
                if not good(deletion(state, v).facets) or not good(contraction(state, v).facets):
                    ok = False
                    break
        memo[facets] = ok
        return ok

    return good(cx.facets)


def is_chordal_complex(cx: SimplicialComplex, budget: int | None = None) -> bool:
    """Whether every minor of the complex has a simplicial vertex.

    Empty and single-facet complexes count as chordal base cases. The memo
    key is the canonical facet tuple; each new minor state spends one budget
    step.
    """
    return _minor_chase(cx, is_simplicial_vertex, budget)


def has_free_vertex_property(cx: SimplicialComplex, budget: int | None = None) -> bool:
    """Whether every minor has a free vertex (a stronger form of chordality)."""
    return _minor_chase(cx, is_free_vertex, budget)


def single_swap_order(sets, budget: int | None = None) -> Optional[tuple]:
    """Order incomparable sets so each one is reachable by single swaps.

    Finds an ordering S_1, .., S_r such that for every j < i some v in
    S_i minus S_j satisfies S_i minus S_k = {v} for an earlier S_k; returns
    the ordering as a tuple of indices into the input, or None. This is the
    facet condition of a shelling, and applied to complemented supports it is
    also the colon condition for linear quotients of a squarefree ideal.
    Backtracking tries indices in input order and memoizes dead prefix sets
    (whether an order can be completed depends only on the prefix as a set),
    so the witness is deterministic.
    """
    sets = [set(s) for s in sets]
    r = len(sets)
    b = Budget(budget)
    dead: set = set()
    order: list = []

    def can_append(used: frozenset, i: int) -> bool:
        si = sets[i]
        if not used:
            return True
        singles = set()
        for k in used:
            diff = si - sets[k]
            if len(diff) == 1:
                singles.update(diff)
        if not singles:
            return False
        return all(singles & (si - sets[j]) for j in used)

    def extend(used: frozenset) -> bool:
        if len(used) == r:
            return True
        if used in dead:
            return False
        b.spend()
        for i in range(r):
            if i in used:
                continue
            if can_append(used, i):
                order.append(i)
                if extend(used | {i}):
                    return True
                order.pop()
        dead.add(used)
        return False

    if extend(frozenset()):
        return tuple(order)
    return None


def is_shellable(cx: SimplicialComplex, budget: int | None = None, *,
                 allow_nonpure: bool = False) -> Optional[tuple]:
    """Search for a shelling order of the facets; None when there is none.

    An order works when each facet F_i, measured against every earlier F_j,
    has a vertex v in F_i minus F_j such that F_i minus F_k = {v} for some
    earlier F_k. Non-pure input is rejected unless ``allow_nonpure`` is set
    (the same pairwise condition is the general one).
    """
    if cx.is_empty:
        raise EmptyInput("empty complex has nothing to shell")
    if not allow_nonpure and not is_pure(cx):
        raise NotPure("shelling search is restricted to pure complexes by default")
    order = single_swap_order(cx.facets, budget)
    if order is None:
        return None
    return tuple(cx.facets[i] for i in order)


@dataclass(frozen=True)
class Clutter:
    """An antichain of circuits over an explicit ambient set."""

    ambient: tuple
    circuits: tuple


def clutter(circuits: Iterable[Iterable[int]], ambient: Iterable[int] | None = None) -> Clutter:
    """Build a clutter; the circuits must already form an antichain."""
    circ = tuple(sorted(as_face(c) for c in circuits))
    for a, b in combinations(circ, 2):
        if set(a) <= set(b) or set(b) <= set(a):
            raise BadParameters(f"circuits {a} and {b} violate the antichain condition")
    support = set()
    for c in circ:
        support.update(c)
    if ambient is None:
        amb = tuple(sorted(support))
    else:
        amb = as_face(ambient)
        if not support <= set(amb):
            raise OutOfAmbient("circuit vertices lie outside the ambient set")
    return Clutter(amb, circ)


def clutter_of_complex(cx: SimplicialComplex) -> Clutter:
    """The facets of a complex viewed as circuits."""
    return Clutter(cx.ambient, cx.facets)


def independence_complex(cl: Clutter) -> SimplicialComplex:
    """Complex of vertex sets containing no circuit."""
    amb = cl.ambient
    n = len(amb)
    if n > AMBIENT_CAP:
        raise BudgetExceeded(f"independence_complex scans subsets; capped at {AMBIENT_CAP} vertices")
    circuit_masks = [_mask_of(c, amb) for c in cl.circuits]
    total = 1 << n
    independent = bytearray(1 for _ in range(total))
    for cm in circuit_masks:
        # mark every superset of the circuit dependent
        rest = (total - 1) ^ cm
        sub = rest
        while True:
            independent[cm | sub] = 0
            if sub == 0:
                break
            sub = (sub - 1) & rest
    facets = []
    for m in range(total):
        if not independent[m]:
            continue
        if all(not independent[m | (1 << i)] for i in range(n) if not m >> i & 1):
            facets.append(_face_of(m, amb))
    return SimplicialComplex(amb, tuple(sorted(facets)))


def complexes_isomorphic(a: SimplicialComplex, b: SimplicialComplex,
                         budget: int | None = None) -> bool:
    """Whether some support bijection maps one facet family onto the other.

    Backtracking over vertex images with facet-degree pruning; intended for
    the small complexes this package generates.
    """
    fa, fb = a.facets, b.facets
    if len(fa) != len(fb):
        return False
    if sorted(map(len, fa)) != sorted(map(len, fb)):
        return False
    sa, sb = a.support, b.support
    if len(sa) != len(sb):
        return False

    def degree_profile(facets, v):
        return sorted(len(f) for f in facets if v in f)

    prof_a = {v: degree_profile(fa, v) for v in sa}
    prof_b = {v: degree_profile(fb, v) for v in sb}
    if sorted(prof_a.values()) != sorted(prof_b.values()):
        return False

    fb_set = set(fb)
    bdg = Budget(budget)
    assignment: dict = {}
    used: set = set()

    def feasible() -> bool:
        for f in fa:
            if all(v in assignment for v in f):
                if tuple(sorted(assignment[v] for v in f)) not in fb_set:
                    return False
        return True

    def place(idx: int) -> bool:
        if idx == len(sa):
            return True
        v = sa[idx]
        for w in sb:
            if w in used or prof_a[v] != prof_b[w]:
                continue
            bdg.spend()
            assignment[v] = w
            used.add(w)
            if feasible() and place(idx + 1):
                return True
            del assignment[v]
            used.discard(w)
        return False

    return place(0)


def _mask_of(face: Iterable[int], ambient: tuple) -> int:
    pos = {v: i for i, v in enumerate(ambient)}
    m = 0
    for v in face:
        m |= 1 << pos[v]
    return m


def _face_of(mask: int, ambient: tuple) -> Face:
    return tuple(ambient[i] for i in range(len(ambient)) if mask >> i & 1)
