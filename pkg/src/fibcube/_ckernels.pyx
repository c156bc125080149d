# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; behaviour matches ``_pykernels`` exactly."""

from libc.stdint cimport uint64_t, uint8_t
from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memset


def enumerate_independent(int n, edge_masks):
    if n > 63:
        from . import _pykernels
        return _pykernels.enumerate_independent(n, edge_masks)
    cdef list closing = [[] for _ in range(n)]
    cdef int top
    for e in edge_masks:
        top = int(e).bit_length() - 1
        closing[top].append(int(e) & ~(1 << top))
    cdef int nrest = sum(len(c) for c in closing)
    cdef uint64_t* rest = <uint64_t*> malloc((nrest + 1) * sizeof(uint64_t))
    cdef int* off = <int*> malloc((n + 1) * sizeof(int))
    cdef Py_ssize_t cap = 1024, count = 1, old, i
    cdef uint64_t* buf = <uint64_t*> malloc(cap * sizeof(uint64_t))
    cdef uint64_t* grown
    cdef uint64_t s, r, bit
    cdef int v, j, k = 0
    cdef bint ok
    cdef list res
    if rest == NULL or off == NULL or buf == NULL:
        free(rest); free(off); free(buf)
        raise MemoryError()
    for v in range(n):
        off[v] = k
        for r_obj in closing[v]:
            rest[k] = <uint64_t> r_obj
            k += 1
    off[n] = k
    buf[0] = 0
    try:
        for v in range(n):
            bit = (<uint64_t> 1) << v
            old = count
            for i in range(old):
                s = buf[i]
                ok = True
                for j in range(off[v], off[v + 1]):
                    r = rest[j]
                    if s & r == r:
                        ok = False
                        break
                if ok:
                    if count == cap:
                        cap *= 2
                        grown = <uint64_t*> realloc(buf, cap * sizeof(uint64_t))
                        if grown == NULL:
                            raise MemoryError()
                        buf = grown
                    buf[count] = s | bit
                    count += 1
        res = []
        for i in range(count):
            res.append(buf[i])
        return res
    finally:
        free(rest)
        free(off)
        free(buf)


def toggle_adjacency(verts, int n):
    cdef Py_ssize_t m = len(verts), i, lo, hi, mid
    if n > 63:
        from . import _pykernels
        return _pykernels.toggle_adjacency(verts, n)
    cdef uint64_t* arr = <uint64_t*> malloc((m + 1) * sizeof(uint64_t))
    cdef Py_ssize_t* row = <Py_ssize_t*> malloc((n + 1) * sizeof(Py_ssize_t))
    cdef uint64_t x, t
    cdef int b, cnt, a, c
    cdef Py_ssize_t tmp
    cdef list out = []
    cdef list lst
    if arr == NULL or row == NULL:
        free(arr); free(row)
        raise MemoryError()
    try:
        for i in range(m):
            arr[i] = <uint64_t> verts[i]
        for i in range(m):
            x = arr[i]
            cnt = 0
            for b in range(n):
                t = x ^ ((<uint64_t> 1) << b)
                lo = 0
                hi = m
                while lo < hi:
                    mid = (lo + hi) >> 1
                    if arr[mid] < t:
                        lo = mid + 1
                    else:
                        hi = mid
                if lo < m and arr[lo] == t:
                    row[cnt] = lo
                    cnt += 1
            # insertion sort; rows are at most n long
            for a in range(1, cnt):
                tmp = row[a]
                c = a - 1
                while c >= 0 and row[c] > tmp:
                    row[c + 1] = row[c]
                    c -= 1
                row[c + 1] = tmp
            lst = []
            for a in range(cnt):
                lst.append(row[a])
            out.append(lst)
        return out
    finally:
        free(arr)
        free(row)


def match_all(adj1, adj2, col1, col2, order, anchor, long limit=0):
    cdef Py_ssize_t n = len(adj1)
    if n != len(adj2):
        return []
    if n == 0:
        return [[]]
    cdef Py_ssize_t nn = n * n
    cdef uint8_t* dense = <uint8_t*> malloc(nn)
    cdef int* ip2 = <int*> malloc((n + 1) * sizeof(int))
    cdef int* ix2 = NULL
    cdef int* ipe = <int*> malloc((n + 1) * sizeof(int))
    cdef int* ixe = NULL
    cdef int* c1 = <int*> malloc(n * sizeof(int))
    cdef int* c2 = <int*> malloc(n * sizeof(int))
    cdef int* ordr = <int*> malloc(n * sizeof(int))
    cdef int* anch = <int*> malloc(n * sizeof(int))
    cdef int* pos = <int*> malloc(n * sizeof(int))
    cdef int* image = <int*> malloc(n * sizeof(int))
    cdef uint8_t* used = <uint8_t*> malloc(n)
    cdef int* ptr = <int*> malloc(n * sizeof(int))
    cdef Py_ssize_t e2 = 0, ee = 0
    cdef int i, j, k, u, v, w, a, cu, found, lo, hi, pool_len, cntu, need_len
    cdef bint ok, use_all
    cdef list out = []
    cdef list lst
    try:
        if (dense == NULL or ip2 == NULL or ipe == NULL or c1 == NULL or c2 == NULL
                or ordr == NULL or anch == NULL or pos == NULL or image == NULL
                or used == NULL or ptr == NULL):
            raise MemoryError()
        memset(dense, 0, nn)
        for i in range(n):
            e2 += len(adj2[i])
        ix2 = <int*> malloc((e2 + 1) * sizeof(int))
        if ix2 == NULL:
            raise MemoryError()
        e2 = 0
        for i in range(n):
            ip2[i] = e2
            for v in adj2[i]:
                ix2[e2] = v
                e2 += 1
                dense[<Py_ssize_t> i * n + v] = 1
        ip2[n] = e2
        for k in range(n):
            ordr[k] = order[k]
            anch[k] = anchor[k]
            pos[ordr[k]] = k
            c1[k] = col1[k]
            c2[k] = col2[k]
            image[k] = -1
            used[k] = 0
            ptr[k] = 0
        for k in range(n):
            ee += len(adj1[ordr[k]])
        ixe = <int*> malloc((ee + 1) * sizeof(int))
        if ixe == NULL:
            raise MemoryError()
        ee = 0
        for k in range(n):
            ipe[k] = ee
            for w in adj1[ordr[k]]:
                if pos[w] < k:
                    ixe[ee] = w
                    ee += 1
        ipe[n] = ee

        k = 0
        while k >= 0:
            if k == n:
                lst = []
                for i in range(n):
                    lst.append(image[i])
                out.append(lst)
                if limit and len(out) >= limit:
                    break
                k -= 1
                continue
            u = ordr[k]
            if image[u] >= 0:
                used[image[u]] = 0
                image[u] = -1
            a = anch[k]
            use_all = a < 0
            if use_all:
                lo = 0
                pool_len = n
            else:
                lo = ip2[image[ordr[a]]]
                pool_len = ip2[image[ordr[a]] + 1] - lo
            need_len = ipe[k + 1] - ipe[k]
            cu = c1[u]
            found = -1
            i = ptr[k]
            while i < pool_len:
                v = i if use_all else ix2[lo + i]
                i += 1
                if used[v] or c2[v] != cu:
                    continue
                ok = True
                for j in range(ipe[k], ipe[k + 1]):
                    if not dense[<Py_ssize_t> image[ixe[j]] * n + v]:
                        ok = False
                        break
                if not ok:
                    continue
                cntu = 0
                for j in range(ip2[v], ip2[v + 1]):
                    if used[ix2[j]]:
                        cntu += 1
                if cntu != need_len:
                    continue
                found = v
                break
            ptr[k] = i
            if found < 0:
                k -= 1
                continue
            image[u] = found
            used[found] = 1
            k += 1
            if k < n:
                ptr[k] = 0
        return out
    finally:
        free(dense); free(ip2); free(ix2); free(ipe); free(ixe)
        free(c1); free(c2); free(ordr); free(anch); free(pos)
        free(image); free(used); free(ptr)
