"""Pure-Python subgraph-containment kernel.

Reference implementation of the backtracking search also provided by the
compiled extension ``triblock._match_cy``.  Both kernels explore candidates
in ascending host-vertex order, so they return bit-identical witnesses; the
test suite holds them to that.

Host adjacency is kept as arbitrary-precision integer bitmasks, which keeps
the inner loop in C-speed integer ops even for hosts with a few hundred
vertices.
"""

from __future__ import annotations

from typing import Sequence


def find_embedding(
    pattern_adj: Sequence[Sequence[int]],
    order: Sequence[int],
    host_adj: Sequence[Sequence[int]],
    fixed_hosts: Sequence[int] = (),
):
    """Injective edge-preserving map of the pattern into the host.

    ``order`` fixes the assignment sequence of pattern vertices; the first
    ``len(fixed_hosts)`` of them are pinned to the given host vertices.
    Returns the mapping as a tuple indexed by pattern vertex, or None.
    """
    p = len(pattern_adj)
    hn = len(host_adj)
    if p == 0:
        return ()
    if p > hn:
        return None

    masks = [0] * hn
    for v, nbrs in enumerate(host_adj):
        mask = 0
        for w in nbrs:
            mask |= 1 << w
        masks[v] = mask
    host_degs = [len(nbrs) for nbrs in host_adj]

    pos_of = [0] * p
    for i, pv in enumerate(order):
        pos_of[pv] = i
    # For each position, the earlier positions holding pattern neighbors.
    earlier: list[tuple[int, ...]] = []
    for i, pv in enumerate(order):
        earlier.append(tuple(j for j in (pos_of[w] for w in pattern_adj[pv]) if j < i))

    # Static per-position candidate filters: host degree and pinning.
    allowed = [0] * p
    degree_masks: dict[int, int] = {}
    for i, pv in enumerate(order):
        d = len(pattern_adj[pv])
        mask = degree_masks.get(d)
        if mask is None:
            mask = 0
            for v in range(hn):
                if host_degs[v] >= d:
                    mask |= 1 << v
            degree_masks[d] = mask
        if i < len(fixed_hosts):
            mask &= 1 << fixed_hosts[i]
        allowed[i] = mask

    cand = [0] * p
    assigned = [0] * p
    used = 0

    def candidates(i: int) -> int:
        c = allowed[i] & ~used
        for j in earlier[i]:
            c &= masks[assigned[j]]
        return c

    i = 0
    cand[0] = candidates(0)
    while i >= 0:
        c = cand[i]
        if c:
            bit = c & -c
            cand[i] = c ^ bit
            v = bit.bit_length() - 1
            assigned[i] = v
            if i == p - 1:
                mapping = [0] * p
                for j in range(p):
                    mapping[order[j]] = assigned[j]
                return tuple(mapping)
            used |= bit
            i += 1
            cand[i] = candidates(i)
        else:
            i -= 1
            if i >= 0:
                used &= ~(1 << assigned[i])
    return None
