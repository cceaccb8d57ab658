# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the enumeration-heavy inner loops.

Mirrors zeroprod._kernels_py exactly; the selector in zeroprod.kernels
routes here only when every intermediate value fits 64-bit unsigned
arithmetic (see the gates there), so the loops below never overflow.
"""

from libc.stdint cimport uint32_t, uint64_t
from libc.stdlib cimport free, malloc

cdef uint64_t SM64_GAMMA = 0x9E3779B97F4A7C15
cdef uint64_t SM64_MIX1 = 0xBF58476D1CE4E5B9
cdef uint64_t SM64_MIX2 = 0x94D049BB133111EB


cdef inline uint64_t _gcd(uint64_t a, uint64_t b) noexcept nogil:
    cdef uint64_t t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef inline uint64_t _sm64_next(uint64_t *state) noexcept nogil:
    cdef uint64_t z
    state[0] = state[0] + SM64_GAMMA
    z = state[0]
    z = (z ^ (z >> 30)) * SM64_MIX1
    z = (z ^ (z >> 27)) * SM64_MIX2
    return z ^ (z >> 31)


def gcd_sum(n):
    cdef uint64_t un = n
    cdef uint64_t total = un
    cdef uint64_t x
    with nogil:
        for x in range(1, un):
            total += _gcd(x, un)
    return total


def ann_size_histogram_zn(n):
    cdef uint64_t un = n
    cdef uint64_t x, g
    hist = {un: 1}
    for x in range(1, un):
        g = _gcd(x, un)
        if g in hist:
            hist[g] += 1
        else:
            hist[g] = 1
    return hist


cdef uint32_t *_digit_table(tuple mods, uint64_t total, int r) except NULL:
    # Row i holds the mixed-radix digits of element i, most significant first.
    cdef uint32_t *dig = <uint32_t *> malloc(total * r * sizeof(uint32_t))
    if dig == NULL:
        raise MemoryError()
    cdef uint64_t i
    cdef int t
    for t in range(r):
        dig[t] = 0
    for i in range(1, total):
        for t in range(r):
            dig[i * r + t] = dig[(i - 1) * r + t]
        t = r - 1
        while True:
            dig[i * r + t] += 1
            if dig[i * r + t] < <uint32_t> mods[t]:
                break
            dig[i * r + t] = 0
            t -= 1
    return dig


def ann_size_histogram_mixed(tuple mods):
    cdef int r = len(mods)
    cdef uint64_t total = 1
    cdef int t
    for t in range(r):
        total *= <uint64_t> mods[t]
    cdef uint32_t *dig = _digit_table(mods, total, r)
    cdef uint64_t *cmods = <uint64_t *> malloc(r * sizeof(uint64_t))
    if cmods == NULL:
        free(dig)
        raise MemoryError()
    for t in range(r):
        cmods[t] = mods[t]
    cdef uint64_t i, size
    hist = {}
    try:
        for i in range(total):
            size = 1
            for t in range(r):
                size *= _gcd(dig[i * r + t], cmods[t])
            if size in hist:
                hist[size] += 1
            else:
                hist[size] = 1
    finally:
        free(dig)
        free(cmods)
    return hist


def ann_pair_count_zn(n):
    cdef uint64_t un = n
    cdef uint64_t x, y, count = 0
    with nogil:
        for x in range(un):
            for y in range(un):
                if (x * y) % un == 0:
                    count += 1
    return count


def ann_pair_count_mixed(tuple mods):
    cdef int r = len(mods)
    cdef uint64_t total = 1
    cdef int t
    for t in range(r):
        total *= <uint64_t> mods[t]
    cdef uint32_t *dig = _digit_table(mods, total, r)
    cdef uint64_t *cmods = <uint64_t *> malloc(r * sizeof(uint64_t))
    if cmods == NULL:
        free(dig)
        raise MemoryError()
    for t in range(r):
        cmods[t] = mods[t]
    cdef uint64_t i, j, count = 0
    cdef int zero
    try:
        with nogil:
            for i in range(total):
                for j in range(total):
                    zero = 1
                    for t in range(r):
                        if (<uint64_t> dig[i * r + t] * dig[j * r + t]) % cmods[t] != 0:
                            zero = 0
                            break
                    count += zero
    finally:
        free(dig)
        free(cmods)
    return count


def graph_edges_zn(n, verts):
    cdef uint64_t un = n
    cdef Py_ssize_t m = len(verts)
    cdef uint64_t *cv = <uint64_t *> malloc(m * sizeof(uint64_t))
    if cv == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    for i in range(m):
        cv[i] = verts[i]
    edges = []
    try:
        for i in range(m):
            for j in range(i + 1, m):
                if (cv[i] * cv[j]) % un == 0:
                    edges.append((i, j))
    finally:
        free(cv)
    return edges


def splitmix64_stream(seed, count):
    cdef uint64_t state = seed
    cdef Py_ssize_t k
    out = []
    for k in range(count):
        out.append(_sm64_next(&state))
    return out


def mc_zero_pairs_zn(n, samples, seed):
    cdef uint64_t un = n
    cdef uint64_t state = seed
    cdef uint64_t nsamples = samples
    cdef uint64_t rem = (0 - un) % un
    cdef uint64_t limit = 0 - rem  # wraps to 2**64 - rem; unused when rem == 0
    cdef uint64_t hits = 0
    cdef uint64_t i, r, x, y
    with nogil:
        for i in range(nsamples):
            while True:
                r = _sm64_next(&state)
                if rem == 0 or r < limit:
                    x = r % un
                    break
            while True:
                r = _sm64_next(&state)
                if rem == 0 or r < limit:
                    y = r % un
                    break
            if (x * y) % un == 0:
                hits += 1
    return hits
