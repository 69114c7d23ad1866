import pytest

from hessdeform import filtered
from hessdeform.bwb import WeightMultiset, euler_multiset
from hessdeform.errors import RejectedInput
from hessdeform.filtered import (
    BOREL,
    PARABOLIC,
    build_twisted_pair,
    deformation_table_X,
    deformation_table_Y,
    enumerate_regular,
    enumerate_regular_shift,
    middle_is_acyclic,
    resolve_cohomology,
    verify_regular_table,
)
from hessdeform.rootsys import admissible_types, build_root_system, distinguished_roots

ALL8 = list(admissible_types(8))
RANK2UP = [t for t in ALL8 if t.rank >= 2]


def rs_(name):
    return build_root_system(name)


def W(rs, *roots):
    return WeightMultiset([rs.root_to_weight(a) for a in roots])


# -- twisted pair ---------------------------------------------------------------

def test_pair_a1():
    a1 = rs_("A1")
    assert build_twisted_pair(a1, BOREL).quotient_side == WeightMultiset([(0,)])


def test_pair_a2_borel():
    a2 = rs_("A2")
    assert build_twisted_pair(a2, BOREL).quotient_side == W(a2, (0, -1), (-1, 0), (0, 0))


def test_pair_c2_parabolic():
    c2 = rs_("C2")
    theta = c2.theta
    expected = W(c2, *[tuple(x - t for x, t in zip(a, theta)) for a in [(1, 0), (1, 1), theta]])
    assert build_twisted_pair(c2, PARABOLIC).quotient_side == expected


def test_pair_rejects_unknown_case():
    with pytest.raises(RejectedInput):
        build_twisted_pair(rs_("A2"), "levi")


# -- resolver --------------------------------------------------------------------

def test_resolver_examples():
    p = resolve_cohomology(rs_("A2"), build_twisted_pair(rs_("A2"), BOREL))
    assert p.exact and p.dims == {1: 1}
    p = resolve_cohomology(rs_("C2"), build_twisted_pair(rs_("C2"), BOREL))
    assert p.exact and p.dims == {}
    p = resolve_cohomology(rs_("A4"), build_twisted_pair(rs_("A4"), PARABOLIC))
    assert p.exact and p.dims == {1: 1}


def test_a1_uses_r1():
    p = resolve_cohomology(rs_("A1"), build_twisted_pair(rs_("A1"), BOREL))
    assert p.rule == "R1" and p.dims == {0: 1}


@pytest.mark.parametrize("t", ALL8, ids=str)
def test_resolver_euler_matches_quotient(t):
    rs = build_root_system(t)
    cases = [BOREL] + ([PARABOLIC] if rs.rank >= 2 else [])
    for case in cases:
        pair = build_twisted_pair(rs, case)
        p = resolve_cohomology(rs, pair)
        assert p.exact
        chi = sum((-1) ** i * d for i, d in p.dims.items())
        assert chi == euler_multiset(rs, pair.quotient_side) == p.euler


@pytest.mark.parametrize("t", ALL8, ids=str)
def test_middle_acyclic_iff_rank_ge_2(t):
    rs = build_root_system(t)
    assert middle_is_acyclic(rs) == (rs.rank >= 2)


# -- deformation tables ------------------------------------------------------------------

@pytest.mark.parametrize("name,h0,h1", [("E8", 8, 7), ("A2", 2, 0), ("F4", 4, 3)])
def test_deform_x_examples(name, h0, h1):
    tab = deformation_table_X(rs_(name))
    assert (tab.h0, tab.h1) == (h0, h1)


def test_deform_x_f4_normal():
    assert deformation_table_X(rs_("F4")).normal_h0 == 51


def test_deform_x_a2_pipeline():
    # 2 + 0 - 1 - 1
    tab = deformation_table_X(rs_("A2"))
    assert tab.resolver.dims == {1: 1}
    assert tab.h0 + tab.resolver.h(0) - tab.resolver.h(1) - 1 == tab.h1 == 0


@pytest.mark.parametrize("name,h0,h1", [("A4", 4, 2), ("C3", 15, 0), ("B4", 4, 3)])
def test_deform_y_examples(name, h0, h1):
    tab = deformation_table_Y(rs_(name))
    assert (tab.h0, tab.h1) == (h0, h1)


@pytest.mark.parametrize("t", [t for t in RANK2UP if t.family != "A"], ids=str)
def test_deform_y_non_a(t):
    rs = build_root_system(t)
    expected = 0 if t.family == "C" else rs.rank - 1
    assert deformation_table_Y(rs).h1 == expected


def test_deform_y_rejects_a1():
    with pytest.raises(RejectedInput):
        deformation_table_Y(rs_("A1"))


def test_kodaira_spencer_note():
    assert any("Kodaira-Spencer" in n for n in deformation_table_X(rs_("B3")).notes)


# -- regular weights ------------------------------------------------------------------------

def test_regular_b3():
    rs = rs_("B3")
    d = distinguished_roots(rs)
    expected = {rs.theta, d.theta_plus, d.theta_plus_plus} | {tuple(-x for x in rs.simple_root(i)) for i in range(3)}
    assert set(enumerate_regular(rs).alphas()) == expected


def _degrees(table):
    return {r.alpha: r.degree for r in table.rows}


def test_shift_a3():
    rs = rs_("A3")
    assert _degrees(enumerate_regular_shift(rs)) == {
        (1, 1, 1): 0, (0, 1, 1): 1, (1, 1, 0): 1, (0, 1, 0): 2,
    }


def test_shift_c2_case3():
    rows = {r.alpha: r for r in enumerate_regular_shift(rs_("C2")).rows}
    assert rows[(-1, 0)].degree == 2 and rows[(-1, 0)].w_string() == "s2s1"
    assert rows[(-2, -1)].degree == 3 and rows[(-2, -1)].w_string() == "s1s2s1"
    assert rows[(-1, 0)].case_tag == "case3"


def test_shift_a2_case3_words():
    rows = {r.alpha: r.w_string() for r in enumerate_regular_shift(rs_("A2")).rows}
    assert rows[(-1, 0)] == "s2s1"
    assert rows[(0, -1)] == "s1s2"
    assert rows[(-1, -1)] == "s1s2s1"


def test_shift_c4_case2():
    rs = rs_("C4")
    rows = {r.alpha: r for r in enumerate_regular_shift(rs).rows if r.case_tag == "case2"}
    # theta0+ = a2 + 2a3 + a4 and theta0++ = 2a3 + a4
    assert rows[(0, 1, 2, 1)].w_string() == "s2s1"
    assert rows[(0, 0, 2, 1)].w_string() == "s1s2s1"
    assert set(rows) == {(0, 1, 2, 1), (0, 0, 2, 1)}


@pytest.mark.parametrize("name", ["B4", "B6", "D4", "D6"])
def test_shift_bd_has_no_case2(name):
    # the tabulated row uses a sum of two component roots, which is not a root
    rows = enumerate_regular_shift(rs_(name)).rows
    assert not [r for r in rows if r.case_tag == "case2"]


@pytest.mark.parametrize("t", RANK2UP, ids=str)
def test_tables_self_verify(t):
    rs = build_root_system(t)
    assert verify_regular_table(rs, enumerate_regular(rs)) == []
    assert verify_regular_table(rs, enumerate_regular_shift(rs)) == []


def test_verify_catches_tampering():
    rs = rs_("C3")
    tab = enumerate_regular_shift(rs)
    broken = filtered.RegularShiftTable(tab.rows[1:], tab.shift)
    assert verify_regular_table(rs, broken)
