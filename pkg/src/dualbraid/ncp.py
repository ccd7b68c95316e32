"""Noncrossing partition models for types A and B.

Type A: noncrossing partitions of n points on a circle, mapped to S_n by
turning each block into the cycle that visits its points counterclockwise.
Type B: partitions of 2n points on a circle that are noncrossing and stable
under the antipodal map, mapped to signed permutations of e_1..e_n.

Both models are built without reference to the reflection-group engine;
the engine is only used to transport them onto ``P_c`` for comparison.
"""
from __future__ import annotations

from dataclasses import dataclass

from .coxeter import GroupContext, GroupElement, build_group
from .dual import DivisibilityPoset, enumerate_pc
from .report import Report, timed


def crossing(b1, b2) -> bool:
    """Do two disjoint blocks of points on a line or circle cross?

    True iff there are ``a < b < c < d`` with ``a, c`` in one block and
    ``b, d`` in the other.
    """
    labels = sorted([(x, 0) for x in b1] + [(x, 1) for x in b2])
    # longest alternating subsequence reaching length 4
    best = {0: 0, 1: 0}
    for _, lab in labels:
        best[lab] = max(best[lab], best[1 - lab] + 1)
    return max(best.values()) >= 4


def noncrossing_partitions(n: int) -> list[tuple[frozenset, ...]]:
    """All noncrossing set partitions of ``0..n-1`` via pruned growth strings."""
    out = []
    blocks: list[list[int]] = []

    def rec(i):
        if i == n:
            out.append(tuple(frozenset(b) for b in blocks))
            return
        for b in blocks:
            b.append(i)
            if not any(crossing(b, other) for other in blocks if other is not b):
                rec(i + 1)
            b.pop()
        blocks.append([i])
        rec(i + 1)
        blocks.pop()

    rec(0)
    return out


def block_permutation(partition, n: int) -> tuple[int, ...]:
    """Cycle each block through its points in increasing order."""
    perm = list(range(n))
    for b in partition:
        pts = sorted(b)
        for a, nxt in zip(pts, pts[1:] + pts[:1]):
            perm[a] = nxt
    return tuple(perm)


def refines(p, q) -> bool:
    where = {}
    for k, b in enumerate(q):
        for x in b:
            where[x] = k
    return all(len({where[x] for x in b}) == 1 for b in p)


def _poset_from_partitions(parts, rank_of):
    order = sorted(range(len(parts)), key=lambda i: rank_of(parts[i]))
    parts = [parts[i] for i in order]
    ranks = [rank_of(p) for p in parts]
    by_rank: dict[int, list[int]] = {}
    for i, r in enumerate(ranks):
        by_rank.setdefault(r, []).append(i)
    covers = []
    for r, lower in by_rank.items():
        for i in lower:
            for j in by_rank.get(r + 1, ()):
                if refines(parts[i], parts[j]):
                    covers.append((i, j, None))
    top = max(range(len(parts)), key=lambda i: ranks[i])
    poset = DivisibilityPoset(None, parts, ranks, covers, [()] * len(parts), top,
                              label="partition rank")
    return poset


@dataclass
class NCPModel:
    poset: DivisibilityPoset  # elements are partitions
    witness: list[GroupElement]  # image of each partition in W
    ctx: GroupContext
    c: GroupElement


# ---- type A ------------------------------------------------------------------

def _compose(p, q):
    return tuple(p[q[i]] for i in range(len(q)))


def _inverse(p):
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def _sn_to_element(ctx: GroupContext, sigma) -> GroupElement:
    """Element of W(A_{n-1}) acting on e_i - e_j as ``sigma`` on indices."""
    n = len(sigma)
    lookup = {v: r for r, v in enumerate(ctx.roots)}
    perm = []
    for v in ctx.roots:
        e = [0] * n
        prev = 0
        for k in range(n - 1):
            e[k] = v[k] - prev
            prev = v[k]
        e[n - 1] = -prev
        img = [0] * n
        for k in range(n):
            img[sigma[k]] = e[k]
        coords = tuple(sum(img[:k + 1]) for k in range(n - 1))
        perm.append(lookup[coords])
    return GroupElement(tuple(perm), ctx.rank)


def ncp_model_a(n: int) -> NCPModel:
    """Noncrossing partitions of n points, paired with P_c of A_{n-1}."""
    if n < 2:
        raise ValueError("type A model needs n >= 2")
    parts = noncrossing_partitions(n)
    poset = _poset_from_partitions(parts, lambda p: n - len(p))
    ctx = build_group(f"A{n - 1}")
    pair = ctx.canonical_chromatic_pair()
    gamma = tuple(range(n))
    for i in pair.order:
        swap = list(range(n))
        swap[i], swap[i + 1] = i + 1, i
        gamma = _compose(gamma, tuple(swap))
    # pi conjugates the rotation i -> i+1 onto gamma
    pi = [0] * n
    x = 0
    for i in range(n):
        pi[i] = x
        x = gamma[x]
    pi = tuple(pi)
    pinv = _inverse(pi)
    witness = [_sn_to_element(ctx, _compose(_compose(pi, block_permutation(p, n)), pinv))
               for p in poset.elements]
    return NCPModel(poset, witness, ctx, pair.c)


# ---- type B ------------------------------------------------------------------

def symmetric_noncrossing_partitions(n: int) -> list[tuple[frozenset, ...]]:
    """Noncrossing partitions of ``0..2n-1`` mapped to themselves by ``k -> k+n``."""
    out = []
    for p in noncrossing_partitions(2 * n):
        blocks = set(p)
        if all(frozenset((x + n) % (2 * n) for x in b) in blocks for b in p):
            out.append(p)
    return out


def _b_rank(n):
    def rank(p):
        sym = sum(1 for b in p if (min(b) + n) % (2 * n) in b)
        return n - (len(p) - sym) // 2
    return rank


def _point_vector(n, k):
    v = [0] * n
    v[k % n] = 1 if k < n else -1
    return v


def _bn_coords(v):
    return tuple(sum(v[:k + 1]) for k in range(len(v)))


def _bn_e_coords(coords):
    e, prev = [], 0
    for x in coords:
        e.append(x - prev)
        prev = x
    return e


def _signed_to_element(ctx: GroupContext, sigma, n: int) -> GroupElement:
    """Element of W(B_n) sending ``zeta_k`` to ``zeta_{sigma(k)}``, where
    ``zeta_k = e_{k+1}`` and ``zeta_{k+n} = -e_{k+1}``."""
    lookup = {v: r for r, v in enumerate(ctx.roots)}
    images = [_point_vector(n, sigma[k]) for k in range(n)]
    perm = []
    for v in ctx.roots:
        e = _bn_e_coords(v)
        img = [0] * n
        for k, a in enumerate(e):
            if a:
                for j in range(n):
                    img[j] += a * images[k][j]
        perm.append(lookup[_bn_coords(img)])
    return GroupElement(tuple(perm), ctx.rank)


def _element_to_signed(ctx: GroupContext, w: GroupElement, n: int) -> tuple[int, ...]:
    lookup = {v: r for r, v in enumerate(ctx.roots)}
    out = []
    for k in range(2 * n):
        r = lookup[_bn_coords(_point_vector(n, k))]
        e = _bn_e_coords(ctx.roots[w.perm[r]])
        j = next(i for i, x in enumerate(e) if x)
        out.append(j if e[j] > 0 else j + n)
    return tuple(out)


def ncp_model_b(n: int) -> NCPModel:
    """Antipodally symmetric noncrossing partitions of 2n points, paired with
    P_c of B_n."""
    if n < 2:
        raise ValueError("type B model needs n >= 2")
    parts = symmetric_noncrossing_partitions(n)
    poset = _poset_from_partitions(parts, _b_rank(n))
    ctx = build_group(f"B{n}")
    pair = ctx.canonical_chromatic_pair()
    gamma = _element_to_signed(ctx, pair.c, n)
    pi = [0] * (2 * n)
    x = 0
    for k in range(2 * n):
        pi[k] = x
        x = gamma[x]
    if sorted(pi) != list(range(2 * n)):
        raise ValueError("Coxeter element does not act as a single 2n-cycle")
    pi = tuple(pi)
    pinv = _inverse(pi)
    witness = [_signed_to_element(ctx, _compose(_compose(pi, block_permutation(p, 2 * n)), pinv), n)
               for p in poset.elements]
    return NCPModel(poset, witness, ctx, pair.c)


# ---- isomorphism check -------------------------------------------------------

def verify_ncp_isomorphism(model: NCPModel, pc: DivisibilityPoset | None = None) -> Report:
    """Check that the witness is a rank-preserving bijection onto P_c that
    maps covers onto covers, edge by edge."""
    pc = pc or enumerate_pc(model.ctx, model.c)
    rep = Report(str(model.ctx.descriptor), "ncp-iso")
    with timed(rep):
        P = model.poset
        rep.details.update(model_size=len(P), pc_size=len(pc))
        images = model.witness
        if len(set(images)) != len(images):
            rep.fail({"reason": "witness is not injective"})
        missing = [i for i, w in enumerate(images) if w not in pc.index]
        if missing:
            rep.fail({"reason": "witness leaves P_c", "partitions": len(missing)})
        if len(P) != len(pc):
            rep.fail({"reason": "sizes differ"})
        if rep.failures:
            return rep
        rep.details["top_to_c"] = images[P.top] == model.c
        if not rep.details["top_to_c"]:
            rep.fail({"reason": "one-block partition does not map to c"})
        bottom = min(range(len(P)), key=lambda i: P.ranks[i])
        if not images[bottom].is_identity():
            rep.fail({"reason": "discrete partition does not map to the identity"})
        for i, w in enumerate(images):
            if P.ranks[i] != pc.ranks[pc.index[w]]:
                rep.fail({"reason": "rank mismatch", "partition": sorted(map(sorted, P.elements[i]))})
        pc_edges = {(i, j) for i, j, _ in pc.covers}
        mapped = set()
        for i, j, _ in P.covers:
            rep.instances += 1
            e = (pc.index[images[i]], pc.index[images[j]])
            mapped.add(e)
            if e not in pc_edges:
                rep.fail({"reason": "cover not preserved", "edge": [i, j]})
        if mapped != pc_edges:
            rep.fail({"reason": "covers of P_c not hit", "count": len(pc_edges - mapped)})
        rep.details["covers"] = len(P.covers)
    return rep
