import itertools
import pickle

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hessdeform.errors import RejectedInput
from hessdeform.rootsys import (
    CartanType,
    admissible_types,
    build_root_system,
    coroot_height,
    distinguished_roots,
    format_root,
    height,
    height_p,
    pairing,
    subsystem_distinguished,
)

ALL8 = list(admissible_types(8))


def _vec(coeffs, r):
    """Root from a {1-based index: coefficient} dict."""
    v = [0] * r
    for i, c in coeffs.items():
        v[i - 1] = c
    return tuple(v)


def _lattice_roots(rs, box):
    """Brute-force oracle: nonzero nonnegative combinations whose squared norm is a root norm.

    Uses only the Cartan matrix and the symmetrizer, not the root enumeration.
    The norm criterion is valid for simply laced types and for G2.
    """
    r = rs.rank
    norms = np.array(rs.simple_norms, dtype=np.int64)
    form = rs.cartan_matrix * norms[:, None]  # 2 (a_i, a_j)
    grid = np.array(list(itertools.product(range(box + 1), repeat=r)), dtype=np.int64)[1:]
    q = np.einsum("ki,ij,kj->k", grid, form, grid) // 2  # 2 (v, v) / 2
    allowed = set(int(x) for x in norms)
    keep = np.isin(q, list(allowed))
    return {tuple(int(x) for x in row) for row in grid[keep]}


# -- spec examples --------------------------------------------------------------

def test_a2_basics():
    rs = build_root_system("A2")
    assert rs.num_positive == 3
    assert rs.theta == (1, 1)


@pytest.mark.parametrize("name,box,count", [("G2", 3, 6), ("E8", 6, 120)])
def test_positive_root_count_brute_force(name, box, count):
    rs = build_root_system(name)
    brute = _lattice_roots(rs, box)
    assert len(brute) == count
    assert brute == set(rs.positive_roots)


def test_inadmissible_types():
    for bad in [("E", 9), ("D", 3), ("B", 1), ("F", 5), ("G", 3), ("A", 0), ("X", 2)]:
        with pytest.raises(RejectedInput):
            CartanType(*bad)


@pytest.mark.parametrize("t", ALL8, ids=str)
def test_rho_pairs_to_one_and_theta_self_pairing(t):
    rs = build_root_system(t)
    for i in range(rs.rank):
        assert pairing(rs, rs.rho, rs.simple_root(i)) == 1
    assert pairing(rs, rs.root_to_weight(rs.theta), rs.theta) == 2


def test_a3_theta_pairing():
    rs = build_root_system("A3")
    assert pairing(rs, rs.root_to_weight(rs.theta), (1, 0, 0)) == 1


def test_pairing_rejects_non_root():
    rs = build_root_system("A2")
    with pytest.raises(RejectedInput):
        pairing(rs, (1, 0), (2, 0))


def test_heights():
    c3 = build_root_system("C3")
    assert height((1, 2, 1)) == 4
    assert height(build_root_system("G2").theta) == 5
    for rs in (c3, build_root_system("E6")):
        for i in range(rs.rank):
            assert height(rs.simple_root(i)) == 1


def test_height_p_examples():
    a4 = build_root_system("A4")
    d = distinguished_roots(a4)
    assert height_p(a4, d.delta0, (0, 1, 1, 1)) == 1
    c2 = build_root_system("C2")
    d = distinguished_roots(c2)
    assert height_p(c2, d.delta0, tuple(-x for x in c2.theta)) == -2


@pytest.mark.parametrize("t", [t for t in ALL8 if t.rank >= 2], ids=str)
def test_height_p_range(t):
    rs = build_root_system(t)
    d0 = distinguished_roots(rs).delta0
    assert height_p(rs, d0, rs.theta) == 2
    assert all(-2 <= height_p(rs, d0, a) <= 2 for a in rs.roots)


def test_distinguished_c3():
    rs = build_root_system("C3")
    d = distinguished_roots(rs)
    assert d.theta_plus == (1, 2, 1)
    assert d.k_index == 0
    assert d.theta_plus_plus == (0, 2, 1)
    assert d.delta0 == frozenset({1, 2})


def test_distinguished_e7_theta0():
    rs = build_root_system("E7")
    sub = subsystem_distinguished(rs, distinguished_roots(rs).delta0)
    assert sub.theta0 == (0, 1, 1, 2, 2, 2, 1)


def test_a4_boundary():
    assert distinguished_roots(build_root_system("A4")).boundary == frozenset({0, 3})


def test_rank_one_distinguished():
    d = distinguished_roots(build_root_system("A1"))
    assert d.theta == (1,)
    assert d.delta0 is None and d.theta_plus is None


# -- golden tables ----------------------------------------------------------------

THETA_PLUS = {
    # type: (theta+, k, theta++) as 1-based coefficient dicts
    "B3": ({1: 1, 2: 1, 3: 1}, 3, {1: 1, 2: 1}),
    "B5": ({1: 1, 2: 1, 3: 1, 4: 1, 5: 1}, 5, {1: 1, 2: 1, 3: 1, 4: 1}),
    "C4": ({1: 1, 2: 2, 3: 2, 4: 1}, 1, {2: 2, 3: 2, 4: 1}),
    "F4": ({1: 1, 2: 2, 3: 3, 4: 2}, 3, {1: 1, 2: 2, 3: 2, 4: 2}),
    "G2": ({1: 2, 2: 1}, 1, {2: 1}),
}


@pytest.mark.parametrize("name", sorted(THETA_PLUS))
def test_theta_plus_table(name):
    rs = build_root_system(name)
    tp, k, tpp = THETA_PLUS[name]
    d = distinguished_roots(rs)
    assert d.theta_plus == _vec(tp, rs.rank)
    assert d.k_index + 1 == k
    assert d.theta_plus_plus == _vec(tpp, rs.rank)


THETA0 = {
    # type: (i0, theta0 or None when Phi_0 is disconnected, theta0+, theta0++)
    "C3": (1, {2: 2, 3: 1}, {2: 1, 3: 1}, {3: 1}),
    "C5": (1, {2: 2, 3: 2, 4: 2, 5: 1}, {2: 1, 3: 2, 4: 2, 5: 1}, {3: 2, 4: 2, 5: 1}),
    "C2": (1, {2: 1}, None, None),
    "E6": (2, {1: 1, 3: 1, 4: 1, 5: 1, 6: 1}, None, None),
    "E7": (1, {2: 1, 3: 1, 4: 2, 5: 2, 6: 2, 7: 1}, None, None),
    "E8": (8, {1: 2, 2: 2, 3: 3, 4: 4, 5: 3, 6: 2, 7: 1}, None, None),
    "F4": (1, {2: 1, 3: 2, 4: 2}, {2: 1, 3: 2, 4: 1}, {2: 1, 3: 2}),
    "G2": (2, {1: 1}, None, None),
    "B3": (2, None, None, None),  # the B-component is a single root here
    "B5": (2, None, {3: 1, 4: 1, 5: 1}, {3: 1, 4: 1}),
    "D6": (2, None, None, None),
}


@pytest.mark.parametrize("name", sorted(THETA0))
def test_theta0_table(name):
    rs = build_root_system(name)
    i0, t0, t0p, t0pp = THETA0[name]
    d = distinguished_roots(rs)
    assert d.i0 + 1 == i0
    sub = subsystem_distinguished(rs, d.delta0)
    if t0 is not None:
        assert sub.theta0 == _vec(t0, rs.rank)
    if t0p is not None:
        assert sub.theta0_plus == _vec(t0p, rs.rank)
    if t0pp is not None:
        assert sub.theta0_plus_plus == _vec(t0pp, rs.rank)


@pytest.mark.parametrize("name,parts", [
    ("B5", [{1: 1}, {3: 1, 4: 2, 5: 2}]),
    ("D6", [{1: 1}, {3: 1, 4: 2, 5: 1, 6: 1}]),
])
def test_disconnected_theta0_components(name, parts):
    rs = build_root_system(name)
    sub = subsystem_distinguished(rs, distinguished_roots(rs).delta0)
    assert sorted(sub.component_thetas) == sorted(_vec(p, rs.rank) for p in parts)


def test_a_type_theta0():
    rs = build_root_system("A5")
    sub = subsystem_distinguished(rs, distinguished_roots(rs).delta0)
    assert sub.theta0 == (0, 1, 1, 1, 0)


# -- invariants -------------------------------------------------------------------

@pytest.mark.parametrize("t", ALL8, ids=str)
def test_root_string_closure(t):
    rs = build_root_system(t)
    pos = set(rs.positive_roots)
    for a in rs.positive_roots:
        for i in range(rs.rank):
            ai = rs.simple_root(i)
            if a != ai and pairing(rs, rs.root_to_weight(a), ai) > 0:
                assert tuple(x - y for x, y in zip(a, ai)) in pos


@pytest.mark.parametrize("t", ALL8, ids=str)
def test_theta_unique_maximal(t):
    rs = build_root_system(t)
    maximal = [a for a in rs.positive_roots
               if not any(rs.is_root(tuple(x + y for x, y in zip(a, rs.simple_root(i)))) for i in range(rs.rank))]
    assert maximal == [rs.theta]
    assert rs.coxeter_number == height(rs.theta) + 1


@pytest.mark.parametrize("t", ALL8, ids=str)
def test_reflections_preserve_length(t):
    rs = build_root_system(t)
    for a in rs.positive_roots:
        short = rs.is_short[rs.index[a]]
        for i in range(rs.rank):
            b = rs.reflect_root(a, i)
            assert rs.is_root(b)
            pb = b if rs.is_positive_root(b) else tuple(-x for x in b)
            assert rs.is_short[rs.index[pb]] == short


@pytest.mark.parametrize("t", [t for t in ALL8 if t.family in "ADE"], ids=str)
def test_simply_laced_coroot_heights(t):
    rs = build_root_system(t)
    assert all(coroot_height(rs, a) == height(a) for a in rs.positive_roots)


@pytest.mark.parametrize("t", [t for t in ALL8 if t.rank >= 2], ids=str)
def test_delta0_is_complement_of_boundary(t):
    rs = build_root_system(t)
    d = distinguished_roots(rs)
    assert d.delta0 | d.boundary == frozenset(range(rs.rank))
    assert not d.delta0 & d.boundary
    expected = 2 if t.family == "A" else 1
    assert len(d.boundary) == expected


@given(st.sampled_from(ALL8), st.data())
@settings(max_examples=60, deadline=None)
def test_root_to_weight_round_trip(t, data):
    rs = build_root_system(t)
    a = data.draw(st.sampled_from(rs.roots))
    w = rs.root_to_weight(a)
    # column j of the Cartan matrix is alpha_j in fundamental coordinates
    back = np.linalg.solve(rs.cartan_matrix.astype(float), np.array(w, dtype=float))
    assert tuple(int(round(x)) for x in back) == a


def test_pickle_and_immutability():
    rs = build_root_system("F4")
    assert pickle.loads(pickle.dumps(rs)).positive_roots == rs.positive_roots
    with pytest.raises(ValueError):
        rs.cartan_matrix[0, 0] = 7


def test_format_root():
    assert format_root((1, 2, 0)) == "α1+2α2"
    assert format_root((0, -1)) == "-α2"
