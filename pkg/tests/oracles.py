"""Brute-force reference computations used to cross-check the library.

Each oracle works from group closure or plain permutations and never calls
the rank-based machinery it is compared against.
"""
from collections import deque
from itertools import permutations, product
from math import comb


def closure(gens, identity):
    """All products of ``gens``, with BFS distance from the identity."""
    dist = {identity: 0}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def reflections_by_closure(ctx):
    """Conjugates of the simple reflections."""
    simples = ctx.simple_reflections
    seen = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for t in frontier:
            for s in simples:
                u = s * t * s
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return seen


def interval_by_distance(ctx, g):
    """Elements w with d(1,w) + d(w,g) = d(1,g) in the T-Cayley graph."""
    dist = closure(list(ctx.reflections), ctx.identity)
    target = dist[g]
    return {w for w, d in dist.items() if d + dist[w.inverse() * g] == target}, dist


def catalan_closed_form(family, n, m=None):
    if family == "A":
        return comb(2 * n + 2, n + 1) // (n + 2)
    if family == "B":
        return comb(2 * n, n)
    if family == "D":
        return (3 * n - 2) * comb(2 * n - 2, n - 1) // n
    if family == "I":
        return m + 2
    raise ValueError(family)


def sn_cycle_count(p):
    seen, cycles = set(), 0
    for i in range(len(p)):
        if i not in seen:
            cycles += 1
            while i not in seen:
                seen.add(i)
                i = p[i]
    return cycles


def sn_lt_histogram(n):
    """l_T on S_n is n minus the number of cycles."""
    hist = [0] * n
    for p in permutations(range(n)):
        hist[n - sn_cycle_count(p)] += 1
    return hist


def brute_red_t(ctx, w, length):
    """Every length-``length`` tuple of reflections multiplying to ``w``."""
    T = list(ctx.reflections)
    out = set()
    for tup in product(range(len(T)), repeat=length):
        x = ctx.identity
        for i in tup:
            x = x * T[i]
        if x == w:
            out.add(tup)
    return out
