"""Pure-Python kernel implementations.

These are the reference semantics for the hot loops; the compiled module
``zeroprod._kernels`` mirrors them operation for operation and must return
identical values (see tests/test_kernels.py).  Everything here is plain
integer arithmetic, so arbitrary-precision inputs work at the cost of
speed.
"""

from __future__ import annotations

from math import gcd

_MASK64 = (1 << 64) - 1
_SM64_GAMMA = 0x9E3779B97F4A7C15
_SM64_MIX1 = 0xBF58476D1CE4E5B9
_SM64_MIX2 = 0x94D049BB133111EB


def gcd_sum(n: int) -> int:
    """Sum of gcd(x, n) over x in [0, n), counting gcd(0, n) = n."""
    return n + sum(gcd(x, n) for x in range(1, n))


def ann_size_histogram_zn(n: int) -> dict[int, int]:
    """Histogram size -> count of annihilator sizes over all of Z_n.

    In Z_n the annihilator of x has exactly gcd(x, n) elements; x = 0
    contributes the full ring, size n.
    """
    hist: dict[int, int] = {n: 1}
    for x in range(1, n):
        g = gcd(x, n)
        hist[g] = hist.get(g, 0) + 1
    return hist


def ann_size_histogram_mixed(mods: tuple[int, ...]) -> dict[int, int]:
    """Annihilator-size histogram for Z_{m1} x ... x Z_{mr}.

    Componentwise, |Ann(x)| is the product of the per-component gcds.
    Elements are walked in lexicographic (odometer) order.
    """
    r = len(mods)
    digits = [0] * r
    total = 1
    for m in mods:
        total *= m
    hist: dict[int, int] = {}
    for _ in range(total):
        size = 1
        for t in range(r):
            size *= gcd(digits[t], mods[t])
        hist[size] = hist.get(size, 0) + 1
        for t in range(r - 1, -1, -1):
            digits[t] += 1
            if digits[t] < mods[t]:
                break
            digits[t] = 0
    return hist


def ann_pair_count_zn(n: int) -> int:
    """Ordered pairs (x, y) in Z_n^2 with x*y = 0, by full enumeration."""
    return sum(1 for x in range(n) for y in range(n) if (x * y) % n == 0)


def ann_pair_count_mixed(mods: tuple[int, ...]) -> int:
    """Ordered zero-product pairs in a product of Z_m rings, enumerated."""
    r = len(mods)
    elems = []
    digits = [0] * r
    total = 1
    for m in mods:
        total *= m
    for _ in range(total):
        elems.append(tuple(digits))
        for t in range(r - 1, -1, -1):
            digits[t] += 1
            if digits[t] < mods[t]:
                break
            digits[t] = 0
    count = 0
    for a in elems:
        for b in elems:
            for t in range(r):
                if (a[t] * b[t]) % mods[t] != 0:
                    break
            else:
                count += 1
    return count


def graph_edges_zn(n: int, verts: list[int]) -> list[tuple[int, int]]:
    """Index pairs (i, j), i < j, with verts[i]*verts[j] = 0 in Z_n."""
    m = len(verts)
    edges = []
    for i in range(m):
        vi = verts[i]
        for j in range(i + 1, m):
            if (vi * verts[j]) % n == 0:
                edges.append((i, j))
    return edges


def _sm64_next(state: int) -> tuple[int, int]:
    state = (state + _SM64_GAMMA) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * _SM64_MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _SM64_MIX2) & _MASK64
    return state, z ^ (z >> 31)


def splitmix64_stream(seed: int, count: int) -> list[int]:
    """First ``count`` outputs of splitmix64 seeded with ``seed``."""
    state = seed & _MASK64
    out = []
    for _ in range(count):
        state, value = _sm64_next(state)
        out.append(value)
    return out


def mc_zero_pairs_zn(n: int, samples: int, seed: int) -> int:
    """Count sampled pairs (x, y) with x*y = 0 in Z_n.

    Draws come from splitmix64 with rejection sampling: a 64-bit output r
    is accepted iff r < 2**64 - (2**64 mod n), then reduced mod n.  Each
    sample consumes draws for x first, then y, so any implementation of
    this procedure reproduces the stream bit for bit.
    """
    state = seed & _MASK64
    rem = (1 << 64) % n
    limit = (1 << 64) - rem
    hits = 0
    for _ in range(samples):
        while True:
            state, r = _sm64_next(state)
            if r < limit:
                x = r % n
                break
        while True:
            state, r = _sm64_next(state)
            if r < limit:
                y = r % n
                break
        if (x * y) % n == 0:
            hits += 1
    return hits
