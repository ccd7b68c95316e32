import random
from functools import lru_cache
from math import lcm

import pytest
from hypothesis import given, settings, strategies as st

from dualbraid import (build_group, delta_conjugation, divisor_premonoid, e_poset,
                       group_mixed_form, is_normal, left_gcd, left_lcm, normal_form, right_gcd,
                       right_lcm, theta_antiautomorphisms, verify_garside, word_problem_eq)
from dualbraid.braids import classical_monoid, dual_monoid
from dualbraid.dual import CapExceeded
from dualbraid.garside import (MixedForm, NotBalanced, exhaustive_words, format_mixed_form,
                               invert_mixed, multiply_mixed, word_class)


@lru_cache(maxsize=None)
def view(t, kind):
    g = build_group(t)
    return dual_monoid(g) if kind == "dual" else classical_monoid(g)


def by_label(v, label):
    return v.labels.index(label)


def a2():
    v = view("A2", "dual")
    s, t, u = (by_label(v, f"t{i}") for i in (1, 2, 3))
    return v, s, t, u


VIEWS = [("A2", "dual"), ("A3", "dual"), ("B3", "dual"), ("H3", "dual"), ("D4", "dual"),
         ("I2(6)", "dual"), ("A2", "classical"), ("A3", "classical"), ("B3", "classical"),
         ("I2(5)", "classical")]


# ---- construction ---------------------------------------------------------------

def test_sizes_and_table_entries():
    assert len(view("A2", "classical")) == 6
    assert len(view("A2", "dual")) == 5
    for t in ["A3", "B3", "H3", "D4", "F4"]:
        g = build_group(t)
        cl, du = view(t, "classical"), view(t, "dual")
        assert (len(cl.atoms), cl.lengths[cl.delta]) == (g.rank, g.N)
        assert (len(du.atoms), du.lengths[du.delta]) == (g.N, g.rank)
        assert g.order(cl.element(cl.delta)) == 2
        assert g.order(du.element(du.delta)) == g.coxeter_number


def test_classical_simples_are_the_group():
    g = build_group("B3")
    assert set(view("B3", "classical").simples) == set(g.elements())


def test_trivial_premonoid():
    g = build_group("A2")
    for kind in "TS":
        v = divisor_premonoid(g, g.identity, kind)
        assert len(v) == 1 and v.delta == v.unit


def test_not_balanced():
    g = build_group("A2")
    s1, s2 = g.simple_reflections
    with pytest.raises(NotBalanced) as exc:
        divisor_premonoid(g, s1 * s2, "S")
    assert exc.value.witness in (s1, s2)
    assert len(divisor_premonoid(g, s1 * s2, "T")) == 5


def test_bad_generators():
    g = build_group("A2")
    with pytest.raises(ValueError):
        divisor_premonoid(g, g.identity, "X")


# ---- Garside verification --------------------------------------------------------

@pytest.mark.parametrize("t,kind", VIEWS + [("F4", "dual"), ("B4", "dual"), ("A5", "dual"),
                                             ("H4", "dual"), ("D4", "classical")])
def test_verify_garside(t, kind):
    rep = verify_garside(view(t, kind))
    assert rep.passed, rep.failures
    assert all(rep.details["conditions"].values())


def test_corrupted_table_is_rejected():
    v, s, t, u = a2()
    broken = v.to_table().without_product(s, t)
    rep = verify_garside(broken)
    assert not rep.passed
    named = [f.get("pair") for f in rep.failures if f["condition"] == "atom-lcms"]
    assert ["t1", "t2"] in named


def test_table_view_agrees_with_group_view():
    v = view("A3", "dual")
    tab = v.to_table()
    n = len(v)
    for i in range(n):
        for j in range(n):
            assert tab.mul(i, j) == v.mul(i, j)
            assert tab.left_quotient(i, j) == v.left_quotient(i, j)
            assert tab.right_quotient(i, j) == v.right_quotient(i, j)


# ---- gcd and lcm ------------------------------------------------------------------

def test_a2_bounds():
    v, s, t, u = a2()
    assert right_lcm(v, s, t) == v.delta
    for x in range(len(v)):
        assert left_gcd(v, x, v.unit) == v.unit
        assert left_gcd(v, v.delta, x) == x


@pytest.mark.parametrize("t,kind", VIEWS)
def test_greedy_gcd_equals_bitset_gcd(t, kind):
    v = view(t, kind)
    for x in range(len(v)):
        for y in range(len(v)):
            assert v.gcd(x, y) == left_gcd(v, x, y)


@pytest.mark.parametrize("t,kind", VIEWS)
def test_universal_properties(t, kind):
    v = view(t, kind)
    n = len(v)
    ldiv = [[v.left_divides(i, j) for j in range(n)] for i in range(n)]
    rdiv = [[v.right_divides(i, j) for j in range(n)] for i in range(n)]
    for x in range(n):
        for y in range(x, n):
            g, h = left_gcd(v, x, y), right_gcd(v, x, y)
            m, k = right_lcm(v, x, y), left_lcm(v, x, y)
            assert ldiv[g][x] and ldiv[g][y] and rdiv[h][x] and rdiv[h][y]
            assert ldiv[x][m] and ldiv[y][m] and rdiv[x][k] and rdiv[y][k]
            for z in range(n):
                if ldiv[z][x] and ldiv[z][y]:
                    assert ldiv[z][g]
                if rdiv[z][x] and rdiv[z][y]:
                    assert rdiv[z][h]
                if ldiv[x][z] and ldiv[y][z]:
                    assert ldiv[m][z]
                if rdiv[x][z] and rdiv[y][z]:
                    assert rdiv[k][z]


@pytest.mark.parametrize("t,kind", VIEWS)
def test_cancellative(t, kind):
    v = view(t, kind)
    n = len(v)
    for a in range(n):
        left = {}
        right = {}
        for b in range(n):
            p = v.mul(a, b)
            if p is not None:
                assert left.setdefault(p, b) == b
            q = v.mul(b, a)
            if q is not None:
                assert right.setdefault(q, b) == b


# ---- normal forms -------------------------------------------------------------------

def test_a2_normal_form_examples():
    v, s, t, u = a2()
    assert normal_form(v, [s]) == (s,)
    assert normal_form(v, [s, t]) == (v.delta,)
    assert normal_form(v, [t, s]) == (t, s)
    assert normal_form(v, []) == ()
    assert is_normal(v, ())
    assert is_normal(v, (t, s))
    assert not is_normal(v, (s, t))


@pytest.mark.parametrize("t,kind,length", [("A2", "dual", 3), ("A3", "dual", 3), ("B2", "dual", 3),
                                           ("A2", "classical", 3), ("B2", "classical", 3)])
def test_is_normal_iff_fixpoint(t, kind, length):
    v = view(t, kind)
    for seq in exhaustive_words(v, length):
        assert is_normal(v, seq) == (normal_form(v, seq) == seq)


@pytest.mark.parametrize("t,kind", [("A2", "dual"), ("B2", "dual"), ("A2", "classical")])
def test_normal_forms_are_unique(t, kind):
    v = view(t, kind)
    normals = [seq for seq in exhaustive_words(v, 3) if is_normal(v, seq)]
    for seq in normals:
        cls = word_class(v, seq)
        assert [w for w in cls if w in set(normals) and w != seq] == []
        assert all(normal_form(v, w) == seq for w in cls if len(w) <= 3)


@pytest.mark.parametrize("t,kind", [("A3", "dual"), ("B3", "dual"), ("H3", "dual"),
                                    ("A3", "classical"), ("B3", "classical")])
def test_random_words_normal_form_uniqueness(t, kind):
    v = view(t, kind)
    rng = random.Random(7)
    short = [i for i in range(1, len(v)) if v.lengths[i] <= 3]
    for _ in range(200):
        # keep the total length small so the word class stays enumerable
        word = tuple(rng.choice(short) for _ in range(rng.randrange(1, 4)))
        nf = normal_form(v, word)
        assert is_normal(v, nf)
        cls = word_class(v, word)
        assert nf in cls
        sample = rng.sample(sorted(cls), min(len(cls), 5))
        assert all(normal_form(v, w) == nf for w in sample)


def signed_words(n):
    return st.lists(st.tuples(st.integers(1, n - 1), st.sampled_from([1, -1])), max_size=8)


def evaluate(v, word):
    g = v.ctx
    out = g.identity
    for x, sign in word:
        e = v.element(x)
        out = out * (e if sign > 0 else e.inverse())
    return out


def evaluate_mixed(v, m):
    d = v.element(v.delta)
    out = g_power(v.ctx, d, m.delta_power)
    for x in m.factors:
        out = out * v.element(x)
    return out


def g_power(g, x, k):
    out = g.identity
    y = x if k >= 0 else x.inverse()
    for _ in range(abs(k)):
        out = out * y
    return out


@pytest.mark.parametrize("t,kind", [("A3", "dual"), ("B3", "dual"), ("H3", "dual"),
                                    ("B3", "classical"), ("I2(5)", "dual")])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_mixed_form_arithmetic(t, kind, data):
    v = view(t, kind)
    w1 = data.draw(signed_words(len(v)))
    w2 = data.draw(signed_words(len(v)))
    m1, m2 = group_mixed_form(v, w1), group_mixed_form(v, w2)
    assert evaluate_mixed(v, m1) == evaluate(v, w1)
    assert is_normal(v, m1.factors) and v.delta not in m1.factors
    assert multiply_mixed(v, m1, m2) == group_mixed_form(v, w1 + w2)
    inverse = [(x, -s) for x, s in reversed(w1)]
    assert invert_mixed(v, m1) == group_mixed_form(v, inverse)
    assert group_mixed_form(v, w1 + inverse) == MixedForm(0, ())


def test_mixed_form_examples():
    v, s, t, u = a2()
    assert group_mixed_form(v, []) == MixedForm(0, ())
    assert group_mixed_form(v, [(s, 1), (s, -1)]) == MixedForm(0, ())
    assert group_mixed_form(v, [(s, 1), (t, 1)]) == MixedForm(1, ())
    assert format_mixed_form(v, group_mixed_form(v, [(t, 1), (s, 1)])) == "D^0 · [t2][t1]"
    assert word_problem_eq(v, [(s, 1), (t, 1)], [(t, 1), (u, 1)])
    assert not word_problem_eq(v, [(t, 1), (s, 1)], [(s, 1), (t, 1)])


# ---- Delta conjugation, E(m) and Theta ----------------------------------------------------

@pytest.mark.parametrize("t", ["A2", "A3", "B3", "D4", "H3", "A4"])
def test_delta_conjugation_classical(t):
    v = view(t, "classical")
    dc = delta_conjugation(v)
    assert dc.report.passed, dc.report.failures
    assert dc.order in (1, 2)
    g = build_group(t)
    w0 = g.longest_element
    for a in v.atoms:
        image = v.simples[dc.permutation[a]]
        assert image == w0 * v.simples[a] * w0
        assert image in g.simple_reflections


@pytest.mark.parametrize("t", ["A2", "A3", "B3", "D4", "H3", "F4"])
def test_delta_conjugation_dual_orbits(t):
    v = view(t, "dual")
    g = build_group(t)
    dc = delta_conjugation(v)
    assert dc.report.passed, dc.report.failures
    perm = dc.permutation
    orbits = set()
    for a in v.atoms:
        orbit, x = set(), a
        while x not in orbit:
            orbit.add(x)
            x = perm[x]
        orbits.add(frozenset(g.reflection_index[v.simples[y]] for y in orbit))
    c = g.canonical_chromatic_pair().c
    assert orbits == {frozenset(o) for o in g.coxeter_conjugation_orbits(c)}
    assert dc.order == lcm(*map(len, orbits))
    assert dc.order in {g.coxeter_number, g.coxeter_number // 2}


def test_e_poset_examples():
    v, s, t, u = a2()
    assert (len(e_poset(v, [s]).vertices), e_poset(v, [s]).dimension) == (1, 0)
    e = e_poset(v, [v.delta])
    assert set(e.vertices) == {(v.delta,), (s, t), (t, u), (u, s)}
    assert e.dimension == 1
    assert e_poset(v, []).dimension == 0


def test_e_poset_cap_and_dimension():
    v = view("A3", "dual")
    e = e_poset(v, [v.delta])
    # (c), two-letter splits and the 16 reduced T-words of c
    two_letter = sum(1 for w in e.vertices if len(w) == 2)
    assert len(e.vertices) == 1 + two_letter + 16
    assert e.dimension == 2
    with pytest.raises(CapExceeded):
        e_poset(v, [v.delta, v.delta, v.delta], cap=6)


@pytest.mark.parametrize("t", ["A2", "A3", "B2", "B3", "D4", "H3", "I2(5)", "I2(6)", "I2(7)",
                               "I2(12)", "A5", "F4"])
def test_theta(t):
    g = build_group(t)
    maps = theta_antiautomorphisms(g)
    assert maps.report.passed, maps.report.failures
    h = g.coxeter_number
    assert maps.report.details["order"] in {h, h // 2}
