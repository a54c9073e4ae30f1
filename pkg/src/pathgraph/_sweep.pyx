# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel: sweep all labeled trees on c nodes in Pruefer order,
returning the first tree in which every vertex-occurrence mask induces a path.

Behavioral twin of _sweep_py; keep results identical.
"""

from libc.stdlib cimport free, malloc


def decode_pruefer(seq, int c):
    """Edges of the labeled tree on 0..c-1 encoded by a Pruefer sequence (c >= 2)."""
    cdef int i, x, leaf, ptr
    cdef int deg[64]
    cdef int su[64]
    cdef int sv[64]
    cdef int sq[64]
    if c < 2 or c > 64:
        raise ValueError("decode_pruefer supports 2 <= c <= 64")
    for i in range(c):
        deg[i] = 1
    for i in range(c - 2):
        sq[i] = seq[i]
        deg[sq[i]] += 1
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for i in range(c - 2):
        x = sq[i]
        if leaf < x:
            su[i] = leaf; sv[i] = x
        else:
            su[i] = x; sv[i] = leaf
        deg[leaf] = 0
        deg[x] -= 1
        if deg[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    x = -1
    for i in range(c):
        if deg[i] == 1:
            if x < 0:
                x = i
            else:
                su[c - 2] = x; sv[c - 2] = i
    return [(su[i], sv[i]) for i in range(c - 1)]


def first_path_tree(int c, masks):
    """First labeled tree on c nodes (Pruefer lexicographic order) where every
    mask induces a path, or None when no labeled tree works."""
    cdef int i, j, a, b, x, leaf, ptr, cnt, k, ok, nm
    cdef unsigned int m
    cdef int seq[16]
    cdef int deg[16]
    cdef int eu[16]
    cdef int ev[16]
    cdef int vdeg[16]
    cdef unsigned int *cmask = NULL
    cdef int *kcnt = NULL

    if c <= 1:
        return []
    if c == 2:
        return [(0, 1)]
    if c > 16:
        raise ValueError("first_path_tree kernel supports c <= 16")

    pm = [int(m0) for m0 in masks]
    nm = len(pm)
    cmask = <unsigned int *> malloc(nm * sizeof(unsigned int) if nm else sizeof(unsigned int))
    kcnt = <int *> malloc(nm * sizeof(int) if nm else sizeof(int))
    if cmask == NULL or kcnt == NULL:
        free(cmask); free(kcnt)
        raise MemoryError()
    for i in range(nm):
        m = pm[i]
        cmask[i] = m
        k = 0
        while m:
            m &= m - 1
            k += 1
        kcnt[i] = k

    for i in range(c - 2):
        seq[i] = 0

    try:
        while True:
            # decode current sequence
            for i in range(c):
                deg[i] = 1
            for i in range(c - 2):
                deg[seq[i]] += 1
            ptr = 0
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
            for i in range(c - 2):
                x = seq[i]
                if leaf < x:
                    eu[i] = leaf; ev[i] = x
                else:
                    eu[i] = x; ev[i] = leaf
                deg[leaf] = 0
                deg[x] -= 1
                if deg[x] == 1 and x < ptr:
                    leaf = x
                else:
                    ptr += 1
                    while deg[ptr] != 1:
                        ptr += 1
                    leaf = ptr
            x = -1
            for i in range(c):
                if deg[i] == 1:
                    if x < 0:
                        x = i
                    else:
                        eu[c - 2] = x; ev[c - 2] = i

            # every mask must induce a path
            ok = 1
            for j in range(nm):
                m = cmask[j]
                k = kcnt[j]
                if k <= 1:
                    continue
                cnt = 0
                for i in range(c):
                    vdeg[i] = 0
                for i in range(c - 1):
                    a = eu[i]; b = ev[i]
                    if (m >> a) & 1 and (m >> b) & 1:
                        cnt += 1
                        vdeg[a] += 1
                        vdeg[b] += 1
                        if vdeg[a] > 2 or vdeg[b] > 2:
                            ok = 0
                            break
                if ok == 0 or cnt != k - 1:
                    ok = 0
                    break
            if ok:
                out = [(eu[i], ev[i]) for i in range(c - 1)]
                return out

            # odometer step
            i = c - 3
            while i >= 0 and seq[i] == c - 1:
                seq[i] = 0
                i -= 1
            if i < 0:
                return None
            seq[i] += 1
    finally:
        free(cmask)
        free(kcnt)
