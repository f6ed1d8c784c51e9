"""Independent slow-path oracles the tests freeze values against.

Everything here deliberately avoids the package's algorithms: homology ranks
come from sympy exact linear algebra over explicitly assembled boundary
matrices, Betti numbers from the subset-restriction formula evaluated the
naive way, shellability and linear quotients from permutation search against
the textbook conditions, and graph chordality from induced-cycle search.
Slow on purpose; use only at unit-test scale.
"""

from itertools import combinations, permutations

from sympy import GF, QQ
from sympy.polys.matrices import DomainMatrix


# ---------------------------------------------------------------------------
# faces and homology

def faces_of(facets):
    """Every face of the complex, as a sorted list of sorted tuples."""
    seen = set()
    for f in facets:
        fs = tuple(sorted(f))
        for k in range(len(fs) + 1):
            seen.update(combinations(fs, k))
    return sorted(seen, key=lambda t: (len(t), t))


def _rank(rows, ncols, field):
    if not rows or ncols == 0:
        return 0
    K = GF(2) if field == "gf2" else QQ
    data = [[K.convert(v) for v in row] for row in rows]
    return DomainMatrix(data, (len(rows), ncols), K).rank()


def oracle_homology(facets, field="gf2"):
    """Reduced homology ranks in dimensions -1..dim, from scratch.

    Builds each signed boundary matrix explicitly (the empty face is the
    single column in dimension -1) and takes exact ranks with sympy.
    """
    faces = faces_of(facets)
    if not faces:
        return []
    dim = max(len(f) for f in faces) - 1
    by_dim = [[] for _ in range(dim + 2)]
    for f in faces:
        by_dim[len(f)].append(f)
    index = [{f: k for k, f in enumerate(layer)} for layer in by_dim]
    ranks = [0] * (dim + 3)
    for p in range(1, dim + 2):
        rows = []
        ncols = len(by_dim[p - 1])
        for f in by_dim[p]:
            row = [0] * ncols
            for pos in range(len(f)):
                sub = f[:pos] + f[pos + 1:]
                row[index[p - 1][sub]] = (-1) ** pos
            rows.append(row)
        ranks[p] = _rank(rows, ncols, field)
    out = []
    for p in range(-1, dim + 1):
        out.append(len(by_dim[p + 1]) - ranks[p + 1] - ranks[p + 2])
    return out


def oracle_beta(generators, ambient, i, j, field="gf2"):
    """Graded Betti number of S/I by restricting to every j-subset of the
    ambient variables and reading one reduced homology rank."""
    if i == 0:
        return 1 if j == 0 else 0
    gens = [frozenset(g) for g in generators]
    total = 0
    for W in combinations(sorted(ambient), j):
        ws = set(W)
        faces = [s for k in range(len(W) + 1) for s in combinations(W, k)
                 if not any(g <= set(s) for g in gens)]
        maximal = [s for s in faces if not any(set(s) < set(t) for t in faces)]
        if not maximal:
            continue
        hom = oracle_homology(maximal, field)
        t = j - i - 1
        if -1 <= t <= len(hom) - 2:
            total += hom[t + 1]
    return total


# ---------------------------------------------------------------------------
# shellability and linear quotients, textbook forms

def _shelling_order_ok(seq):
    """Each facet must meet the union of the earlier ones in a nonempty pure
    complex of codimension one (checked on explicit face sets)."""
    for idx in range(1, len(seq)):
        fi = set(seq[idx])
        inter = set()
        for k in range(idx):
            common = tuple(sorted(fi & set(seq[k])))
            for c in range(len(common) + 1):
                inter.update(combinations(common, c))
        maximal = [s for s in inter if not any(set(s) < set(t) for t in inter)]
        if any(len(s) != len(fi) - 1 for s in maximal):
            return False
    return True


def oracle_is_shellable(facets):
    """Permutation search with the intersection-complex condition; returns a
    shelling order or None. Factorial in the facet count."""
    facets = [tuple(sorted(f)) for f in facets]
    for seq in permutations(facets):
        if _shelling_order_ok(seq):
            return seq
    return None


def oracle_linear_quotients(generators):
    """Permutation search checking each colon ideal directly: the minimal
    monomial generators of (u_1..u_{k-1}) : u_k must all be variables."""
    gens = [tuple(sorted(g)) for g in generators]
    if len(gens) <= 1:
        return tuple(gens)
    for seq in permutations(gens):
        ok = True
        for k in range(1, len(seq)):
            uk = set(seq[k])
            quots = [frozenset(set(seq[x]) - uk) for x in range(k)]
            minimal = [q for q in quots if not any(p < q for p in quots)]
            if any(len(q) != 1 for q in minimal):
                ok = False
                break
        if ok:
            return seq
    return None


# ---------------------------------------------------------------------------
# complexes: nonfaces, links, Reisner

def oracle_minimal_nonfaces(facets, ambient):
    faces = set(faces_of(facets))
    nonfaces = [s for k in range(len(ambient) + 1)
                for s in combinations(sorted(ambient), k) if s not in faces]
    return sorted(s for s in nonfaces
                  if all(s[:p] + s[p + 1:] in faces for p in range(len(s))))


def oracle_is_cm_reisner(facets, field="gf2"):
    """Reisner's criterion: every link (the empty face included) has reduced
    homology vanishing below its dimension."""
    for sigma in faces_of(facets):
        ss = set(sigma)
        link_faces = [tuple(sorted(set(f) - ss)) for f in facets if ss <= set(f)]
        maximal = [s for s in link_faces if not any(set(s) < set(t) for t in link_faces)]
        hom = oracle_homology(maximal, field)
        link_dim = len(hom) - 2
        if any(hom[p + 1] != 0 for p in range(-1, link_dim)):
            return False
    return True


# ---------------------------------------------------------------------------
# graphs

def oracle_chordal_graph(n, edges):
    """No induced cycle of length four or more, by scanning vertex subsets: a
    subset induces a cycle exactly when it is connected with all degrees 2."""
    adj = {v: set() for v in range(1, n + 1)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    for size in range(4, n + 1):
        for sub in combinations(range(1, n + 1), size):
            ss = set(sub)
            degs = [len(adj[v] & ss) for v in sub]
            if any(d != 2 for d in degs):
                continue
            seen = {sub[0]}
            stack = [sub[0]]
            while stack:
                v = stack.pop()
                for w in adj[v] & ss:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if seen == ss:
                return False
    return True


def oracle_triangles(n, edges):
    es = {frozenset(e) for e in edges}
    return sorted(t for t in combinations(range(1, n + 1), 3)
                  if all(frozenset(p) in es for p in combinations(t, 2)))


def oracle_cycle_lengths(n, edges):
    """All lengths of (not necessarily induced) cycles, by rotating simple
    paths; fine for the small graphs the tests use."""
    adj = {v: set() for v in range(1, n + 1)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    lengths = set()

    def extend(path, used):
        head = path[-1]
        for w in adj[head]:
            if w == path[0] and len(path) >= 3:
                lengths.add(len(path))
            elif w not in used and w > path[0]:
                extend(path + [w], used | {w})

    for start in range(1, n + 1):
        extend([start], {start})
    return sorted(lengths)


def oracle_induced_cycle_lengths(n, edges):
    es = {frozenset(e) for e in edges}
    adj = {v: set() for v in range(1, n + 1)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    out = set()
    for size in range(3, n + 1):
        if size in out:
            continue
        for sub in combinations(range(1, n + 1), size):
            ss = set(sub)
            if any(len(adj[v] & ss) != 2 for v in sub):
                continue
            seen = {sub[0]}
            stack = [sub[0]]
            while stack:
                v = stack.pop()
                for w in adj[v] & ss:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if seen == ss:
                out.add(size)
                break
    return sorted(out)


def all_labeled_graphs(n):
    """Every labeled graph on vertex set {1..n}, as (n, edge tuple)."""
    pool = list(combinations(range(1, n + 1), 2))
    for k in range(len(pool) + 1):
        for es in combinations(pool, k):
            yield n, es


def connected_labeled_graphs(n):
    """Labeled connected graphs on {1..n} with at least one edge."""
    for n_, es in all_labeled_graphs(n):
        if not es:
            continue
        adj = {v: set() for v in range(1, n + 1)}
        for a, b in es:
            adj[a].add(b)
            adj[b].add(a)
        seen = {1}
        stack = [1]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) == n:
            yield n_, es
