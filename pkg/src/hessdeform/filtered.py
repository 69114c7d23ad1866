"""Cohomology of the twisted tangent bundles of G/B and G/P and the resulting
deformation counts for the codimension-one Hessenberg varieties X and Y.

The quotient side ``E`` is the bundle (g/h) (x) L(-theta) and the sub side
``F`` is h (x) L(-theta), with h = b (Borel case) or p (parabolic case, p the
stabiliser of the theta-line).  Everything is computed on G/B from the
line-bundle filtrations.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bwb import Singular, WeightMultiset, bott_batch, degree_profile, dominantize, euler_multiset
from .errors import InternalContradiction, RejectedInput, Unresolved
from .rootsys import RootSystem, distinguished_roots, height_p

BOREL = "borel"
PARABOLIC = "parabolic"


@dataclass(frozen=True)
class TwistedPair:
    quotient_side: WeightMultiset
    sub_side: WeightMultiset
    case: str


@dataclass(frozen=True)
class CohomologyProfile:
    dims: dict
    exact: bool
    bounds: dict | None = None
    euler: int = 0
    rule: str = ""

    def h(self, i):
        return self.dims.get(i, 0)

    def to_json(self):
        out = {
            "dims": {str(k): v for k, v in sorted(self.dims.items())},
            "exactness": "Exact" if self.exact else "BoundsOnly",
            "euler": self.euler,
            "rule": self.rule,
        }
        if self.bounds is not None:
            out["bounds"] = {str(k): v for k, v in sorted(self.bounds.items())}
        return out


@dataclass(frozen=True)
class DeformationTable:
    h0: int
    h1: int
    higher_vanish: bool
    normal_h0: int
    resolver: CohomologyProfile | None = None
    notes: tuple = ()

    def to_json(self):
        return {
            "h0": self.h0,
            "h1": self.h1,
            "higher_vanish": self.higher_vanish,
            "normal_h0": self.normal_h0,
            "resolver": None if self.resolver is None else self.resolver.to_json(),
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class RegularRow:
    alpha: tuple
    degree: int
    dominant_weight: tuple
    case_tag: str
    ht_p: int
    word: tuple = field(default=())

    def w_string(self):
        # word[0] is applied first, so it is the rightmost factor of w
        if not self.word:
            return "id"
        return "".join(f"s{i + 1}" for i in reversed(self.word))


@dataclass(frozen=True)
class RegularShiftTable:
    rows: tuple
    shift: tuple  # the root subtracted before adding rho (theta, or zero)

    def alphas(self):
        return [r.alpha for r in self.rows]


def theta_line_delta0(rs: RootSystem):
    if rs.rank < 2:
        raise RejectedInput("the parabolic of the highest root needs rank >= 2")
    return distinguished_roots(rs).delta0


def _minus_theta(rs, alpha):
    return rs.root_to_weight(tuple(a - t for a, t in zip(alpha, rs.theta)))


def build_twisted_pair(rs: RootSystem, case=BOREL) -> TwistedPair:
    if case == BOREL:
        in_quotient = lambda a: sum(a) > 0  # noqa: E731
    elif case == PARABOLIC:
        d0 = theta_line_delta0(rs)
        in_quotient = lambda a: height_p(rs, d0, a) >= 1  # noqa: E731
    else:
        raise RejectedInput(f"unknown case {case!r}")
    quo, sub = [], []
    for a in rs.roots:
        (quo if in_quotient(a) else sub).append(_minus_theta(rs, a))
    torus = rs.root_to_weight(tuple(-t for t in rs.theta))
    sub_ms = WeightMultiset(sub) + WeightMultiset({torus: rs.rank})
    return TwistedPair(WeightMultiset(quo), sub_ms, case)


def middle_is_acyclic(rs: RootSystem) -> bool:
    """Whether the middle term g (x) L(-theta) has no cohomology.

    g here is the trivial bundle, so this is dim G copies of L(-theta); its
    B-module filtration by the weights alpha - theta always contains the
    weight 0 and cannot be used weight by weight.
    """
    lengths, _ = bott_batch(rs, [rs.root_to_weight(tuple(-t for t in rs.theta))])
    return bool(lengths[0] < 0)


def _apply_r1(prof_e, chi):
    degs = set(prof_e)
    if len(degs) > 1:
        return None
    return CohomologyProfile(dict(prof_e), True, euler=chi, rule="R1")


def _apply_r3(prof_e, prof_f, chi):
    top = max(list(prof_e) + [k - 1 for k in prof_f] + [0])
    b = {}
    for i in range(top + 1):
        v = min(prof_e.get(i, 0), prof_f.get(i + 1, 0))
        if v:
            b[i] = v
    if not b:
        if chi != 0:
            raise InternalContradiction(f"all bounds vanish but the Euler characteristic is {chi}")
        return CohomologyProfile({}, True, bounds=b, euler=chi, rule="R3")
    if len(b) == 1:
        (i0, bound), = b.items()
        d = chi if i0 % 2 == 0 else -chi
        if not 0 <= d <= bound:
            raise InternalContradiction(f"forced h^{i0} = {d} violates the bound 0..{bound}")
        return CohomologyProfile({i0: d} if d else {}, True, bounds=b, euler=chi, rule="R3")
    return CohomologyProfile({}, False, bounds=b, euler=chi, rule="bounds")


def resolve_cohomology(rs: RootSystem, pair: TwistedPair) -> CohomologyProfile:
    """Exact cohomology of the quotient side when it is forced, else bounds.

    R1: all non-singular pieces of E sit in one degree.
    R2/R3: when g (x) L(-theta) is acyclic, h^i(E) = h^{i+1}(F); each side
    bounds it by its filtration, and if only one degree survives the Euler
    characteristic fixes it.  If both R1 and R3 apply they must agree.
    """
    E, F = pair.quotient_side, pair.sub_side
    prof_e = degree_profile(rs, E)
    chi = euler_multiset(rs, E)
    r1 = _apply_r1(prof_e, chi)
    r3 = None
    if middle_is_acyclic(rs):
        r3 = _apply_r3(prof_e, degree_profile(rs, F), chi)
    if r1 is not None:
        if r3 is not None and r3.exact and r3.dims != r1.dims:
            raise InternalContradiction(f"R1 gives {r1.dims} but R3 gives {r3.dims}")
        return r1
    if r3 is not None:
        return r3
    return CohomologyProfile({}, False, bounds=dict(prof_e), euler=chi, rule="bounds")


def _need_exact(prof):
    if not prof.exact:
        raise Unresolved(f"cohomology of the twisted tangent bundle not determined (bounds {prof.bounds})")


def deformation_table_X(rs: RootSystem) -> DeformationTable:
    """h^i(X, TX) for the codimension-one regular semisimple Hessenberg variety in G/B.

    h^0 is the rank (the torus acts with finite stabiliser); h^1 comes from
    D = h0(TX) + h0(TB (x) I) - h1(TB (x) I) - 1 with the resolver supplying
    the middle terms.  In rank 1 X is two reduced points, so h^0 = 0.
    """
    prof = resolve_cohomology(rs, build_twisted_pair(rs, BOREL))
    _need_exact(prof)
    notes = []
    if rs.rank == 1:
        h0 = 0
        notes.append("rank 1: X is a pair of points, no vector fields")
    else:
        h0 = rs.rank
    h1 = h0 + prof.h(0) - prof.h(1) - 1
    if h1 < 0:
        raise InternalContradiction(f"negative h1 = {h1}")
    notes.append("Kodaira-Spencer surjectivity is assumed, not computed")
    return DeformationTable(h0, h1, True, rs.dimension - 1, prof, tuple(notes))


def deformation_table_Y(rs: RootSystem) -> DeformationTable:
    """h^i(Y, TY) for the image of X in G/P (P the stabiliser of the theta-line)."""
    if rs.rank < 2:
        raise RejectedInput("Y needs rank >= 2")
    prof = resolve_cohomology(rs, build_twisted_pair(rs, PARABOLIC))
    _need_exact(prof)
    fam, r = rs.cartan_type.family, rs.rank
    if fam == "C":
        h0 = r * (2 * r - 1)
        dim_big = (2 * r) ** 2 - 1  # Y is a hyperplane section of a quadric-type SL_{2r} space
    else:
        h0 = r
        dim_big = rs.dimension
    # cohomology of the middle sheaf shifts the quotient side by one degree
    diff = dim_big - rs.dimension + prof.h(1) + 1
    h1 = h0 - diff
    if h1 < 0:
        raise InternalContradiction(f"negative h1 = {h1}")
    return DeformationTable(h0, h1, True, rs.dimension - 1, prof,
                            ("Kodaira-Spencer surjectivity is assumed, not computed",))


def _case_tag(rs, alpha):
    if sum(alpha) < 0:
        return "case3"
    pair = sum(c * t for c, t in zip(rs.coroot(alpha), rs.root_to_weight(rs.theta)))
    return "case1" if pair > 0 else "case2"


def _scan(rs, shift):
    d0 = theta_line_delta0(rs)
    rows = []
    for a in rs.roots:
        w = rs.root_to_weight(tuple(x - s for x, s in zip(a, shift)))
        res = dominantize(rs, [x + 1 for x in w], track_word=True)
        if res is Singular:
            continue
        length, mu, word = res
        rows.append(RegularRow(a, length, tuple(x - 1 for x in mu), _case_tag(rs, a), height_p(rs, d0, a), tuple(word)))
    rows.sort(key=lambda r: (r.case_tag, r.degree, -sum(r.alpha), tuple(-x for x in r.alpha)))
    return RegularShiftTable(tuple(rows), tuple(shift))


def enumerate_regular(rs: RootSystem) -> RegularShiftTable:
    """Roots alpha with alpha + rho regular."""
    return _scan(rs, (0,) * rs.rank)


def enumerate_regular_shift(rs: RootSystem) -> RegularShiftTable:
    """Roots alpha with alpha - theta + rho regular."""
    return _scan(rs, rs.theta)


def verify_regular_table(rs: RootSystem, table: RegularShiftTable):
    """Check a table against a direct pairing scan over all positive coroots.

    Returns a list of problems (empty when the table is right): listed roots
    must be regular with the right length, and unlisted roots singular.
    """
    listed = {r.alpha: r for r in table.rows}
    problems = []
    cor = rs.coroot_array
    for a in rs.roots:
        w = np.array(rs.root_to_weight(tuple(x - s for x, s in zip(a, table.shift))), dtype=np.int64) + 1
        pairs = cor @ w
        regular = not (pairs == 0).any()
        if a in listed:
            if not regular:
                problems.append(f"{a} listed but singular")
            elif int((pairs < 0).sum()) != listed[a].degree:
                problems.append(f"{a}: degree {listed[a].degree} but {int((pairs < 0).sum())} negative pairings")
        elif regular:
            problems.append(f"{a} regular but not listed")
    return problems
