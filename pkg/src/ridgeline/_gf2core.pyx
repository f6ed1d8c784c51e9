# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(2) boundary-rank kernel.

Drop-in twin of _gf2fallback: same two entry points, same return values
(``(fvec, ranks)`` lists of length n + 2). Faces are indexed by bitmask;
boundary rows live in packed 64-bit words and are reduced against a basis
keyed by leading column, which is plain Gaussian elimination over GF(2).
"""

from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memcpy, memset

cdef extern from *:
    int __builtin_popcount(unsigned int x)
    int __builtin_clzll(unsigned long long x)

cdef object _ranks_from_faces(unsigned char *face, int n):
    cdef long long total = 1LL << n
    cdef long long m, mm, low
    cdef int p, k, w, lead, words, rk, c, ncols
    cdef int *card = <int *> malloc(total * sizeof(int))
    cdef int *colidx = <int *> malloc(total * sizeof(int))
    cdef long long fcounts[22]  # cardinalities 0..20 plus padding
    cdef unsigned long long *row = NULL
    cdef unsigned long long *basis = NULL
    cdef unsigned char *has_basis = NULL
    cdef unsigned long long *brow
    if card == NULL or colidx == NULL:
        free(card)
        free(colidx)
        raise MemoryError()
    memset(fcounts, 0, sizeof(fcounts))
    for m in range(total):
        if face[m]:
            p = __builtin_popcount(<unsigned int> m)
            card[m] = p
            colidx[m] = <int> fcounts[p]
            fcounts[p] += 1
        else:
            card[m] = -1
    ranks = [0] * (n + 2)
    fvec = [0] * (n + 2)
    for p in range(n + 1):
        fvec[p] = fcounts[p]
    try:
        for p in range(1, n + 1):
            if fcounts[p] == 0 or fcounts[p - 1] == 0:
                continue
            ncols = <int> fcounts[p - 1]
            words = (ncols + 63) >> 6
            row = <unsigned long long *> malloc(words * sizeof(unsigned long long))
            basis = <unsigned long long *> calloc(ncols * words, sizeof(unsigned long long))
            has_basis = <unsigned char *> calloc(ncols, 1)
            if row == NULL or basis == NULL or has_basis == NULL:
                raise MemoryError()
            rk = 0
            for m in range(total):
                if card[m] != p:
                    continue
                memset(row, 0, words * sizeof(unsigned long long))
                mm = m
                while mm:
                    low = mm & -mm
                    mm ^= low
                    c = colidx[m ^ low]
                    row[c >> 6] ^= (<unsigned long long> 1) << (c & 63)
                while True:
                    lead = -1
                    for w in range(words - 1, -1, -1):
                        if row[w]:
                            lead = (w << 6) + 63 - __builtin_clzll(row[w])
                            break
                    if lead < 0:
                        break
                    brow = basis + <long long> lead * words
                    if has_basis[lead]:
                        for w in range(words):
                            row[w] ^= brow[w]
                    else:
                        memcpy(brow, row, words * sizeof(unsigned long long))
                        has_basis[lead] = 1
                        rk += 1
                        break
            ranks[p] = rk
            free(row)
            free(basis)
            free(has_basis)
            row = NULL
            basis = NULL
            has_basis = NULL
    finally:
        free(row)
        free(basis)
        free(has_basis)
        free(card)
        free(colidx)
    return fvec, ranks


def ranks_of_facet_complex(facet_masks, int n):
    """f-vector and boundary ranks of the complex generated by facet masks."""
    if n < 0 or n > 20:
        raise ValueError(f"bit count {n} outside 0..20")
    cdef long long total = 1LL << n
    cdef unsigned char *face = <unsigned char *> calloc(total, 1)
    if face == NULL:
        raise MemoryError()
    cdef unsigned int fm, sub
    try:
        for f in facet_masks:
            fm = f
            if fm >> n:
                raise ValueError(f"facet mask {fm:#x} does not fit in {n} bits")
            sub = fm
            while True:
                face[sub] = 1
                if sub == 0:
                    break
                sub = (sub - 1) & fm
        return _ranks_from_faces(face, n)
    finally:
        free(face)


def ranks_of_nonface_complex(gen_masks, unsigned int w_mask):
    """f-vector and boundary ranks of the restriction to W of the complex
    whose non-faces are the sets containing some generator mask."""
    cdef int n = __builtin_popcount(w_mask)
    if n > 20:
        raise ValueError(f"window of {n} bits outside 0..20")
    cdef int amb2c[32]
    cdef int i, c = 0
    for i in range(32):
        if w_mask >> i & 1:
            amb2c[i] = c
            c += 1
        else:
            amb2c[i] = -1
    cdef long long total = 1LL << n
    cdef unsigned char *face = <unsigned char *> malloc(total)
    if face == NULL:
        raise MemoryError()
    memset(face, 1, total)
    cdef unsigned int gm, g, low, cg, sup, sub
    try:
        for gobj in gen_masks:
            gm = gobj
            if gm & ~w_mask:
                continue
            cg = 0
            g = gm
            while g:
                low = g & (~g + 1)
                g ^= low
                cg |= (<unsigned int> 1) << amb2c[_bit_index(low)]
            sup = <unsigned int> (total - 1) ^ cg
            sub = sup
            while True:
                face[cg | sub] = 0
                if sub == 0:
                    break
                sub = (sub - 1) & sup
        return _ranks_from_faces(face, n)
    finally:
        free(face)


cdef inline int _bit_index(unsigned int single_bit):
    cdef int i = 0
    while not single_bit & 1:
        single_bit >>= 1
        i += 1
    return i
