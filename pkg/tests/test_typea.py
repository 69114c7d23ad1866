import random
from fractions import Fraction as F
from math import comb

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from hessdeform.errors import InternalContradiction, RejectedInput, UnsupportedInput
from hessdeform.typea import (
    INF,
    AffineMap,
    MobiusMap,
    affine_equivalent,
    aut_report,
    canonical_point,
    characterize_search,
    classify,
    euler_closed_form,
    euler_hessenberg_linebundle,
    fmt,
    mobius_equivalent,
    parse_config,
    parse_scalar,
    pencil_charpoly,
    stab_affine,
    stab_mobius,
    symmetrize,
    weyl_dim_A,
)
from hessdeform.typea.groups import closure, cycles
from hessdeform.typea.lemma import weyl_dim_A_checked
from hessdeform.typea.linalg import pencil_charpoly_raw

fracs = st.fractions(min_value=-20, max_value=20, max_denominator=7)


def configs(lo=4, hi=6):
    return st.lists(fracs, min_size=lo, max_size=hi, unique=True)


affine_maps = st.builds(AffineMap, fracs.filter(lambda a: a != 0), fracs)


@st.composite
def mobius_maps(draw):
    a, b, c, d = (draw(fracs) for _ in range(4))
    assume(a * d - b * c != 0)
    return MobiusMap.make(a, b, c, d)


# -- scalars -------------------------------------------------------------------

def test_scalar_parsing():
    assert parse_scalar("3/7") == F(3, 7)
    assert parse_scalar("inf") is INF
    assert fmt(F(-6, 4)) == "-3/2" and fmt(F(5)) == "5" and fmt(INF) == "inf"
    with pytest.raises(RejectedInput):
        parse_scalar("inf", allow_inf=False)
    with pytest.raises(RejectedInput):
        parse_scalar("1/0")
    with pytest.raises(RejectedInput):
        parse_config("1,2,2")


# -- equivalence -----------------------------------------------------------------

def test_affine_examples():
    m, p = affine_equivalent([1, 2, 3, 4], [10, 20, 30, 40])
    assert (m.a, m.b) == (10, 0)
    assert affine_equivalent([1, 2, 3, 4], [0, 1, 2, 4]) is None
    c = [F(1, 3), 2, -5, 7]
    m, p = affine_equivalent(c, c)
    assert (m.a, m.b) == (1, 0) and p == (0, 1, 2, 3)


def test_affine_size_mismatch():
    with pytest.raises(RejectedInput):
        affine_equivalent([1, 2, 3], [1, 2, 3, 4])


def test_mobius_examples():
    m, p = mobius_equivalent([0, 1, 2, INF], [INF, 1, F(1, 2), 0])
    assert (m.a, m.b, m.c, m.d) == (0, 1, 1, 0)
    assert mobius_equivalent([0, 1, 3, INF], [0, 1, 4, INF]) is None


@given(configs(4, 6), mobius_maps(), st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_mobius_image_is_equivalent(c, m, rnd):
    img = [m(x) for x in c]
    rnd.shuffle(img)
    hit = mobius_equivalent(c, img)
    assert hit is not None
    w, p = hit
    assert all(w(x) == img[p[i]] for i, x in enumerate(c))


@given(configs(4, 6), affine_maps, affine_maps)
@settings(max_examples=60, deadline=None)
def test_affine_equivalence_relation(c, f, g):
    c2 = [f(x) for x in c]
    c3 = [g(x) for x in c2]
    m12, _ = affine_equivalent(c, c2)
    m21, _ = affine_equivalent(c2, c)
    m13, _ = affine_equivalent(c, c3)
    assert sorted(m21.compose(m12)(x) for x in c) == sorted(c)
    assert sorted(m13(x) for x in c) == sorted(c3)


@given(configs(4, 6), configs(4, 6))
@settings(max_examples=80, deadline=None)
def test_canonical_point_matches_affine_equivalence(c1, c2):
    assume(len(c1) == len(c2))
    same = canonical_point(c1, "x") == canonical_point(c2, "x")
    assert same == (affine_equivalent(c1, c2) is not None)


@given(configs(4, 5), affine_maps)
@settings(max_examples=40, deadline=None)
def test_canonical_point_invariant_x(c, m):
    assert canonical_point(c, "x") == canonical_point([m(x) for x in c], "x")


@given(configs(4, 5), mobius_maps())
@settings(max_examples=40, deadline=None)
def test_canonical_point_invariant_y(c, m):
    assert canonical_point(c, "y") == canonical_point([m(x) for x in c], "y")


def test_canonical_examples():
    assert canonical_point([10, 20, 30, 40], "x") == [0, F(1, 3), F(2, 3), 1]
    base = canonical_point([0, 1, -1, INF], "y")
    # every relabelling and any equivalent image give the same point
    m = MobiusMap.make(2, 1, 1, 3)
    assert canonical_point([m(x) for x in [INF, -1, 0, 1]], "y") == base
    assert canonical_point([0, 1, 3, INF], "y") != canonical_point([0, 1, 4, INF], "y")


# -- stabilisers ------------------------------------------------------------------

def test_stab_affine_examples():
    g = stab_affine([1, 2, 3, 4])
    assert str(g.classification) == "Cyclic(2)"
    (gen,) = g.generators
    assert cycles(gen) == "(1 4)(2 3)"
    m = g.witnesses[gen]
    assert (m.a, m.b) == (-1, 5)
    assert stab_affine([0, 1, 2, 4]).classification.name == "Trivial"
    assert str(stab_affine(range(6)).classification) == "Cyclic(2)"


def test_stab_mobius_examples():
    g = stab_mobius([0, 1, -1, INF])
    assert g.order == 8 and str(g.classification) == "Dihedral(4)"
    assert stab_affine([0, 1, 2, 4]).issubgroup(stab_mobius([0, 1, 2, 4]))


def test_stab_mobius_multiplicative_progression():
    # rational stand-in for roots of unity: z -> 8/z reverses 1, 2, 4, 8
    g = stab_mobius([1, 2, 4, 8])
    assert g.classification.name in {"Cyclic", "Dihedral"}
    assert (3, 2, 1, 0) in g.elements


def test_stab_mobius_octahedral():
    # 0, inf, +-1, +-i would be S4; over Q the six points 0, inf, 1, -1, 2, 1/2 still admit a Klein group
    g = stab_mobius([0, INF, 1, -1, 2, F(1, 2)])
    assert g.classification.name in {"Cyclic", "Dihedral", "A4", "S4", "A5", "Trivial"}


@given(configs(4, 7))
@settings(max_examples=40, deadline=None)
def test_affine_stab_is_cyclic_and_embeds(c):
    h = stab_affine(c)
    assert h.classification.name in {"Cyclic", "Trivial"}
    assert h.issubgroup(stab_mobius(c))


@given(configs(4, 6), mobius_maps())
@settings(max_examples=30, deadline=None)
def test_stab_mobius_conjugation_invariant(c, m):
    a, b = stab_mobius(c), stab_mobius([m(x) for x in c])
    assert (a.order, a.classification) == (b.order, b.classification)


def test_classify_table():
    s4 = closure([(1, 2, 3, 0), (1, 0, 2, 3)], 4)
    a4 = closure([(1, 2, 0, 3), (1, 0, 3, 2)], 4)
    klein = closure([(1, 0, 3, 2), (2, 3, 0, 1)], 4)
    assert str(classify(s4)) == "S4" and str(classify(a4)) == "A4"
    assert str(classify(klein)) == "Dihedral(2)"
    assert str(classify(closure([(1, 0, 2, 3)], 4))) == "Cyclic(2)"
    a5 = closure([(1, 2, 3, 4, 0), (1, 2, 0, 3, 4)], 5)
    assert str(classify(a5)) == "A5"
    s5 = closure([(1, 2, 3, 4, 0), (1, 0, 2, 3, 4)], 5)
    with pytest.raises(InternalContradiction):
        classify(s5)


def test_aut_report():
    r = aut_report([1, 2, 3, 4], "x")
    assert (r["torus_dim"], r["pi0_order"]) == (3, 4)
    assert aut_report([0, 1, 2, 4], "x")["pi0_order"] == 2
    assert aut_report([0, 1, -1, INF], "y")["pi0_order"] == 16
    assert aut_report([0, 1, 2], "x")["outside_theorem_range"]


# -- line bundles --------------------------------------------------------------------

def test_weyl_dim_A_examples():
    assert weyl_dim_A(4, (3, 0, 0, 0)) == 20
    assert weyl_dim_A(4, (0, 0, 0, 0)) == 1
    assert weyl_dim_A(3, (1, 0, -1)) == 8
    with pytest.raises(RejectedInput):
        weyl_dim_A(3, (0, 1, 0))


@given(st.integers(2, 6), st.data())
@settings(max_examples=60, deadline=None)
def test_weyl_dim_A_agrees_with_general(n, data):
    lam = sorted(data.draw(st.lists(st.integers(-3, 4), min_size=n, max_size=n)), reverse=True)
    weyl_dim_A_checked(n, lam)


def test_euler_linebundle_examples():
    assert euler_hessenberg_linebundle(4, (1, 0, 0, 0), 2) == 10
    assert euler_hessenberg_linebundle(4, (0, 0, 0, -1), 3) == 20
    for k in range(5):
        assert euler_hessenberg_linebundle(4, (0, 0, 0, 0), k) == 1


@given(st.integers(3, 6), st.integers(0, 4), st.data())
@settings(max_examples=80, deadline=None)
def test_closed_form_agrees(n, k, data):
    lam = sorted(data.draw(st.lists(st.integers(0, 3), min_size=n, max_size=n)), reverse=True)
    assert euler_closed_form(n, lam, k) == euler_hessenberg_linebundle(n, lam, k)


def test_closed_form_rejects_n2():
    with pytest.raises(RejectedInput):
        euler_closed_form(2, (1, 0), 1)


@pytest.mark.parametrize("n", [4, 5])
def test_characterize_search(n):
    hits = characterize_search(n, 3, 10)
    e1 = (1,) + (0,) * (n - 1)
    minus_en = (1,) * (n - 1) + (0,)
    assert set(hits) == {e1, minus_en}
    assert all(euler_hessenberg_linebundle(n, h, 3) == comb(n + 2, 3) for h in hits)


def test_characterize_search_box0():
    assert characterize_search(4, 0, 10) == []


# -- linear algebra --------------------------------------------------------------------

def _check_symmetrizer(s, q):
    S, Q = sympy.Matrix(s), sympy.Matrix(q)
    assert Q == Q.T and Q.det() != 0 and Q * S == S.T * Q


def test_symmetrize_examples():
    assert symmetrize([[2, 0], [0, 5]]) == sympy.eye(2)
    q = symmetrize([[0, 1], [2, 1]])
    _check_symmetrizer([[0, 1], [2, 1]], q)
    sym = [[1, 2], [2, 1]]
    _check_symmetrizer(sym, symmetrize(sym))


def test_symmetrize_rejects():
    with pytest.raises(UnsupportedInput):
        symmetrize([[0, 1], [2, 0]])  # eigenvalues +-sqrt 2
    with pytest.raises(UnsupportedInput):
        symmetrize([[1, 1], [0, 1]])


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3, unique=True), st.integers(0, 10**6))
@settings(max_examples=25, deadline=None)
def test_symmetrize_random_conjugates(eigs, seed):
    rnd = random.Random(seed)
    while True:
        P = sympy.Matrix(3, 3, lambda i, j: rnd.randint(-3, 3))
        if P.det() != 0:
            break
    s = P * sympy.diag(*eigs) * P.inv()
    _check_symmetrizer(s, symmetrize(s.tolist()))


def test_pencil_examples():
    assert pencil_charpoly([[1, 0], [0, 1]], [[1, 0], [0, 2]]) == [1, 3, 2]
    s = [[1, 2, 0], [0, 3, 1], [4, 0, 1]]
    coeffs = pencil_charpoly_raw([[1, 0, 0], [0, 1, 0], [0, 0, 1]], s)
    t = sympy.symbols("t")
    lhs = sum(c * (-t) ** (3 - i) for i, c in enumerate(coeffs))
    assert sympy.expand(lhs - (-1) ** 3 * sympy.Matrix(s).charpoly(t).as_expr()) == 0


mats = st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=3, max_size=3)


@given(mats, mats, mats)
@settings(max_examples=40, deadline=None)
def test_pencil_left_covariance(a, b, g):
    assume(sympy.Matrix(g).det() != 0)
    G = sympy.Matrix(g)
    ga, gb = (G * sympy.Matrix(a)).tolist(), (G * sympy.Matrix(b)).tolist()
    raw, raw_g = pencil_charpoly_raw(a, b), pencil_charpoly_raw(ga, gb)
    assert [G.det() * x for x in raw] == raw_g
    assume(any(raw))
    assert pencil_charpoly(a, b) == pencil_charpoly(ga, gb)
