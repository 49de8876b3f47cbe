# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled mirror of boolhood._kernels_py.

Same functions, same outputs, with the hot mask scans and recursions at C
level. Any behavioural change here must land in the pure module too; the
backend test suite cross-checks the two on random inputs.
"""

import math

from libc.stdlib cimport free, malloc

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil

R1, R2, R3 = 1, 2, 3


def _key(m):
    return (m.bit_count(), m)


def _canon(masks):
    return tuple(sorted(set(masks), key=_key))


cdef inline u64 _lowbit(u64 x) nogil:
    return x & (0 - x)


cdef inline u64 _full_mask(int p) nogil:
    if p >= 64:
        return <u64>0xFFFFFFFFFFFFFFFF
    return ((<u64>1) << p) - 1


cdef u64* _to_array(masks, int n) except NULL:
    cdef u64* arr = <u64*> malloc((n if n > 0 else 1) * sizeof(u64))
    cdef int i
    if arr == NULL:
        raise MemoryError()
    for i in range(n):
        arr[i] = <u64>masks[i]
    return arr


cdef void _tv_descend(u64* masks, int n, u64 chosen, u64 banned, list out):
    cdef u64 target = 0
    cdef u64 avail, bit
    cdef bint hit_all = True
    cdef int i
    for i in range(n):
        if not (masks[i] & chosen):
            target = masks[i]
            hit_all = False
            break
    if hit_all:
        out.append(chosen)
        return
    avail = target & ~banned
    while avail:
        bit = _lowbit(avail)
        avail ^= bit
        _tv_descend(masks, n, chosen | bit, banned, out)
        banned |= bit


def minimal_transversals(masks):
    """Inclusion-minimal hitting sets of the clause family, as masks."""
    cdef int n = len(masks)
    cdef u64 t, bits, b
    cdef int i
    cdef bint needed, minimal
    if n == 0:
        return [0]
    srt = sorted(masks, key=_key)
    cdef u64* arr = _to_array(srt, n)
    found = []
    out = []
    try:
        _tv_descend(arr, n, 0, 0, found)
        for t_obj in found:
            t = <u64>t_obj
            bits = t
            minimal = True
            while bits and minimal:
                b = _lowbit(bits)
                bits ^= b
                needed = False
                for i in range(n):
                    if (arr[i] & t) == b:
                        needed = True
                        break
                if not needed:
                    minimal = False
            if minimal:
                out.append(t_obj)
    finally:
        free(arr)
    return out


def max_independent(masks, int p):
    """Maximal sets incomparable to every member; see the pure docstring."""
    cdef u64 full = _full_mask(p)
    cdef int n = len(masks)
    cdef u64 sigma, t
    cdef int i
    cdef bint contained
    cdef u64* arr = _to_array(masks, n)
    out = []
    try:
        for t_obj in minimal_transversals(masks):
            t = <u64>t_obj
            sigma = full & ~t
            if sigma == 0:
                continue
            contained = False
            for i in range(n):
                if (sigma & ~arr[i]) == 0:
                    contained = True
                    break
            if not contained:
                out.append(sigma)
    finally:
        free(arr)
    return _canon(out)


def max_dominated(masks):
    """Maximal sets strictly inside some member; see the pure docstring."""
    cdef int n = len(masks)
    cdef u64 m, bits, b, c
    cdef int i, limit
    cdef bint keep
    cdef u64* arr = _to_array(masks, n)
    cands = set()
    out = []
    try:
        for i in range(n):
            m = arr[i]
            bits = m
            while bits:
                b = _lowbit(bits)
                bits ^= b
                if m ^ b:
                    cands.add(m ^ b)
        for c_obj in cands:
            c = <u64>c_obj
            limit = __builtin_popcountll(c) + 1
            keep = True
            for i in range(n):
                if (c & ~arr[i]) == 0 and __builtin_popcountll(arr[i]) > limit:
                    keep = False
                    break
            if keep:
                out.append(c_obj)
    finally:
        free(arr)
    return _canon(out)


cdef u64* _unions_without(u64* arr, int n) except NULL:
    cdef u64* uw = <u64*> malloc((n if n > 0 else 1) * sizeof(u64))
    cdef u64 acc = 0
    cdef int i
    if uw == NULL:
        raise MemoryError()
    for i in range(n):
        uw[i] = acc
        acc |= arr[i]
    acc = 0
    for i in range(n - 1, -1, -1):
        uw[i] |= acc
        acc |= arr[i]
    return uw


def parents_of(masks, int p):
    """Immediate parents as (canonical mask tuple, rule) pairs."""
    cdef u64 full = _full_mask(p)
    cdef int n = len(masks)
    cdef u64 d, rest_union
    cdef int i
    cdef bint skip
    cdef u64* arr = _to_array(masks, n)
    cdef u64* uw = NULL
    results = []
    try:
        uw = _unions_without(arr, n)
        indep = max_independent(masks, p)
        for c_obj in indep:
            results.append((_canon(list(masks) + [c_obj]), R1))
        split_pool = {}
        for d_obj in max_dominated(masks):
            d = <u64>d_obj
            skip = False
            for c_obj in indep:
                if (d & ~<u64>c_obj) == 0:
                    skip = True
                    break
            if skip:
                continue
            rest_union = 0
            containing = []
            for i in range(n):
                if (d & ~arr[i]) == 0:
                    containing.append(i)
                else:
                    rest_union |= arr[i]
            if (rest_union | d) == full:
                kept = [masks[i] for i in range(n) if i not in containing]
                kept.append(d_obj)
                results.append((_canon(kept), R2))
            else:
                for i_obj in containing:
                    i = <int>i_obj
                    if (uw[i] | d) != full:
                        split_pool.setdefault(i_obj, []).append(d_obj)
        for i_obj, ds in split_pool.items():
            kept = [masks[j] for j in range(n) if j != i_obj]
            for a in range(len(ds)):
                for b in range(a + 1, len(ds)):
                    results.append((_canon(kept + [ds[a], ds[b]]), R3))
    finally:
        free(arr)
        if uw != NULL:
            free(uw)
    return results


def children_of(masks, int p):
    """Immediate children as (canonical mask tuple, rule) pairs."""
    cdef u64 full = _full_mask(p)
    cdef int n = len(masks)
    cdef u64 s, bits, b, grown, merged
    cdef int i, j, k, inside, size
    cdef bint can_merge
    cdef u64* arr = _to_array(masks, n)
    cdef u64* uw = NULL
    results = []
    try:
        uw = _unions_without(arr, n)
        merge_pool = {}
        for i in range(n):
            s = arr[i]
            exts = []
            can_merge = False
            bits = full & ~s
            while bits:
                b = _lowbit(bits)
                bits ^= b
                grown = s | b
                inside = 0
                for j in range(n):
                    if (arr[j] & ~grown) == 0:
                        inside += 1
                        if inside > 2:
                            break
                if inside == 1:
                    exts.append(grown)
                elif inside == 2:
                    can_merge = True
            if exts:
                kept = [masks[k] for k in range(n) if k != i]
                results.append((_canon(kept + exts), R2))
            elif uw[i] == full:
                results.append((_canon([masks[k] for k in range(n) if k != i]), R1))
            elif can_merge:
                merge_pool.setdefault(__builtin_popcountll(s), []).append(i)
        for size_obj, group in merge_pool.items():
            size = <int>size_obj
            for a in range(len(group)):
                i = <int>group[a]
                for b2 in range(a + 1, len(group)):
                    j = <int>group[b2]
                    merged = arr[i] | arr[j]
                    if __builtin_popcountll(merged) == size + 1:
                        kept = [masks[k] for k in range(n) if k != i and k != j]
                        results.append((_canon(kept + [merged]), R3))
    finally:
        free(arr)
        if uw != NULL:
            free(uw)
    return results


cdef long long _count_descend(u64* pool, int n, u64 uni, u64 full, u64* nxt,
                              long stride) nogil:
    cdef long long total = 0
    cdef int i, j, m
    cdef u64 c, u, rem
    for i in range(n):
        c = pool[i]
        u = uni | c
        if u == full:
            total += 1
        m = 0
        rem = 0
        for j in range(i + 1, n):
            if (pool[j] & ~c) and (c & ~pool[j]):
                nxt[m] = pool[j]
                rem |= pool[j]
                m += 1
        if m and (u | rem) == full:
            total += _count_descend(nxt, m, u, full, nxt + stride, stride)
    return total


def count_antichain_covers(int p):
    """Number of antichain covers of {1..p}; same traversal as the pure one."""
    if p < 1 or p > 11:
        raise ValueError(f"compiled counter supports 1 <= p <= 11, got {p}")
    cdef int nc = (1 << p) - 1
    cdef u64 full = _full_mask(p)
    # one candidate buffer per antichain level, plus slack
    cdef long levels = math.comb(p, p // 2) + 2
    cdef u64* buf = <u64*> malloc(<size_t>levels * nc * sizeof(u64))
    cdef int i
    cdef long long total
    if buf == NULL:
        raise MemoryError()
    cands = sorted(range(1, 1 << p), key=_key)
    for i in range(nc):
        buf[i] = <u64>cands[i]
    try:
        with nogil:
            total = _count_descend(buf, nc, 0, full, buf + nc, nc)
    finally:
        free(buf)
    return total
