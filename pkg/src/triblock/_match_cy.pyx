# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled subgraph-containment kernel.

Same backtracking search as ``triblock._match_py`` (the authoritative
reference for the semantics), with host adjacency held in uint64 bitset
words.  Candidates are scanned in ascending host-vertex order, so witnesses
are bit-identical to the pure kernel's.
"""

from libc.stdlib cimport calloc, free

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

ctypedef unsigned long long u64


def find_embedding(pattern_adj, order, host_adj, fixed_hosts=()):
    """Injective edge-preserving map of the pattern into the host.

    See ``triblock._match_py.find_embedding`` for the full contract.
    """
    cdef int p = len(pattern_adj)
    cdef int hn = len(host_adj)
    if p == 0:
        return ()
    if p > hn:
        return None

    cdef int words = (hn + 63) >> 6
    cdef int nfixed = len(fixed_hosts)

    cdef u64 *masks = <u64 *> calloc(hn * words, sizeof(u64))
    cdef u64 *allowed = <u64 *> calloc(p * words, sizeof(u64))
    cdef u64 *cand = <u64 *> calloc(p * words, sizeof(u64))
    cdef u64 *used = <u64 *> calloc(words, sizeof(u64))
    cdef int *host_degs = <int *> calloc(hn, sizeof(int))
    cdef int *assigned = <int *> calloc(p, sizeof(int))
    cdef int *pos_of = <int *> calloc(p, sizeof(int))
    cdef int *earlier_off = <int *> calloc(p + 1, sizeof(int))
    cdef int *earlier = NULL

    cdef int i, j, k, v, w, d, total, base
    cdef u64 bit
    cdef object result = None

    try:
        if (masks == NULL or allowed == NULL or cand == NULL or used == NULL
                or host_degs == NULL or assigned == NULL or pos_of == NULL
                or earlier_off == NULL):
            raise MemoryError()

        for v in range(hn):
            nbrs = host_adj[v]
            host_degs[v] = len(nbrs)
            base = v * words
            for w in nbrs:
                masks[base + (w >> 6)] |= (<u64> 1) << (w & 63)

        for i in range(p):
            pos_of[<int> order[i]] = i

        # Flatten, per position, the earlier positions holding pattern
        # neighbors of that position's vertex.
        total = 0
        for i in range(p):
            for w in pattern_adj[<int> order[i]]:
                if pos_of[<int> w] < i:
                    total += 1
            earlier_off[i + 1] = total
        earlier = <int *> calloc(total if total > 0 else 1, sizeof(int))
        if earlier == NULL:
            raise MemoryError()
        k = 0
        for i in range(p):
            for w in pattern_adj[<int> order[i]]:
                j = pos_of[<int> w]
                if j < i:
                    earlier[k] = j
                    k += 1

        for i in range(p):
            d = len(pattern_adj[<int> order[i]])
            base = i * words
            for v in range(hn):
                if host_degs[v] >= d:
                    allowed[base + (v >> 6)] |= (<u64> 1) << (v & 63)
            if i < nfixed:
                v = <int> fixed_hosts[i]
                for j in range(words):
                    allowed[base + j] = 0
                if host_degs[v] >= d:
                    allowed[base + (v >> 6)] = (<u64> 1) << (v & 63)

        result = _search(p, words, masks, allowed, cand, used, assigned,
                         earlier, earlier_off)
        if result is not None:
            mapping = [0] * p
            for i in range(p):
                mapping[<int> order[i]] = result[i]
            result = tuple(mapping)
    finally:
        free(masks)
        free(allowed)
        free(cand)
        free(used)
        free(host_degs)
        free(assigned)
        free(pos_of)
        free(earlier_off)
        free(earlier)
    return result


cdef object _search(int p, int words, u64 *masks, u64 *allowed, u64 *cand,
                    u64 *used, int *assigned, int *earlier, int *earlier_off):
    cdef int i = 0
    cdef int j, k, v, word
    cdef u64 w, bit
    cdef int base

    _candidates(0, words, masks, allowed, cand, used, assigned,
                earlier, earlier_off)
    while i >= 0:
        base = i * words
        v = -1
        for word in range(words):
            w = cand[base + word]
            if w != 0:
                bit = w & (~w + 1)
                cand[base + word] = w ^ bit
                v = (word << 6) + __builtin_ctzll(bit)
                break
        if v >= 0:
            assigned[i] = v
            if i == p - 1:
                out = [0] * p
                for j in range(p):
                    out[j] = assigned[j]
                return out
            used[v >> 6] |= (<u64> 1) << (v & 63)
            i += 1
            _candidates(i, words, masks, allowed, cand, used, assigned,
                        earlier, earlier_off)
        else:
            i -= 1
            if i >= 0:
                v = assigned[i]
                used[v >> 6] &= ~((<u64> 1) << (v & 63))
    return None


cdef void _candidates(int i, int words, u64 *masks, u64 *allowed, u64 *cand,
                      u64 *used, int *assigned, int *earlier,
                      int *earlier_off) nogil:
    cdef int j, k, word
    cdef int base = i * words
    for word in range(words):
        cand[base + word] = allowed[base + word] & ~used[word]
    for k in range(earlier_off[i], earlier_off[i + 1]):
        j = assigned[earlier[k]] * words
        for word in range(words):
            cand[base + word] &= masks[j + word]
