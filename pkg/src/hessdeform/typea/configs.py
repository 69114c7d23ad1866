"""Eigenvalue configurations up to affine and Moebius transformations.

A configuration is a list of distinct exact scalars; position ``i`` is the
``i``-th eigenvalue.  A witness permutation ``p`` satisfies
``phi(c1[i]) == c2[p[i]]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from ..errors import InternalContradiction, RejectedInput
from .groups import PermutationGroup, cycles
from .scalars import INF, fmt, parse_config, sort_key

try:
    from gmpy2 import mpq
except ImportError:  # pragma: no cover
    mpq = Fraction


@dataclass(frozen=True)
class AffineMap:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        if self.a == 0:
            raise RejectedInput("affine map needs a != 0")

    def __call__(self, x):
        if x is INF:
            return INF
        return self.a * x + self.b

    def inverse(self):
        return AffineMap(1 / self.a, -self.b / self.a)

    def compose(self, other):
        """self o other."""
        return AffineMap(self.a * other.a, self.a * other.b + self.b)

    def to_json(self):
        return {"a": fmt(self.a), "b": fmt(self.b)}

    def __str__(self):
        return f"z -> ({fmt(self.a)})z + ({fmt(self.b)})"


@dataclass(frozen=True)
class MobiusMap:
    """z -> (a z + b) / (c z + d), stored with the first nonzero entry equal to 1."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    @classmethod
    def make(cls, a, b, c, d):
        a, b, c, d = (Fraction(x) for x in (a, b, c, d))
        if a * d - b * c == 0:
            raise RejectedInput("singular Moebius matrix")
        lead = next(x for x in (a, b, c, d) if x != 0)
        return cls(a / lead, b / lead, c / lead, d / lead)

    def __call__(self, z):
        a, b, c, d = self.a, self.b, self.c, self.d
        if z is INF:
            return INF if c == 0 else a / c
        den = c * z + d
        if den == 0:
            return INF
        return (a * z + b) / den

    def inverse(self):
        return MobiusMap.make(self.d, -self.b, -self.c, self.a)

    def compose(self, other):
        """self o other."""
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = other.a, other.b, other.c, other.d
        return MobiusMap.make(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def to_json(self):
        return {"matrix": [[fmt(self.a), fmt(self.b)], [fmt(self.c), fmt(self.d)]]}

    def __str__(self):
        return f"z -> ({fmt(self.a)}z + {fmt(self.b)})/({fmt(self.c)}z + {fmt(self.d)})"


def _to_01inf(z1, z2, z3):
    """Moebius map sending z1, z2, z3 to 0, 1, inf."""
    if z1 is INF:
        return MobiusMap.make(0, z2 - z3, 1, -z3)
    if z2 is INF:
        return MobiusMap.make(1, -z1, 1, -z3)
    if z3 is INF:
        return MobiusMap.make(1, -z1, 0, z2 - z1)
    return MobiusMap.make(z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1))


def _affine_inputs(c1, c2=None):
    c1 = parse_config(c1, allow_inf=False, min_size=2)
    if c2 is None:
        return c1, None
    c2 = parse_config(c2, allow_inf=False, min_size=2)
    if len(c1) != len(c2):
        raise RejectedInput("configurations have different sizes")
    return c1, c2


def _projective_inputs(c1, c2=None):
    c1 = parse_config(c1, allow_inf=True, min_size=3)
    if c2 is None:
        return c1, None
    c2 = parse_config(c2, allow_inf=True, min_size=3)
    if len(c1) != len(c2):
        raise RejectedInput("configurations have different sizes")
    return c1, c2


def _targets(c1, c2, anchor, k):
    """Ordered k-tuples of indices into c2 to try for the anchor; the index-preserving one first."""
    same = tuple(c1.index(x) for x in anchor)
    yield same
    order = sorted(range(len(c2)), key=lambda j: sort_key(c2[j]))
    for t in permutations(order, k):
        if t != same:
            yield t


def _fast(c):
    return [x if x is INF else mpq(x) for x in c]


def _scan(c1, c2, anchor, k, normalizer, make_map, first_only):
    """Shared search: normalise the anchor of c1 and each candidate k-tuple of c2
    to a fixed position and compare the two normalised point sets."""
    f1, f2 = _fast(c1), _fast(c2)
    af = _fast(anchor)
    norm1 = normalizer(*af)
    pos = {norm1(x): i for i, x in enumerate(f1)}
    n = len(c1)
    out = []
    for t in _targets(c1, c2, anchor, k):
        norm2 = normalizer(*(f2[j] for j in t))
        perm = [None] * n
        ok = True
        for j in range(n):
            if j in t:
                continue
            i = pos.get(norm2(f2[j]))
            if i is None:
                ok = False
                break
            perm[i] = j
        if not ok:
            continue
        for slot, j in enumerate(t):
            perm[c1.index(anchor[slot])] = j
        out.append((make_map([c2[j] for j in t]), tuple(perm)))
        if first_only:
            break
    return out


def _affine_normalizer(p, q):
    """x -> (x - p) / (q - p), sending p, q to 0, 1."""
    s = 1 / (q - p)
    return lambda x: (x - p) * s


def _affine_scan(c1, c2, first_only):
    # any witness sends the two least points of c1 to some ordered pair of c2
    x1, x2 = sorted(c1)[:2]

    def make(target):
        y1, y2 = target
        a = (y2 - y1) / (x2 - x1)
        return AffineMap(a, y1 - a * x1)

    return _scan(c1, c2, (x1, x2), 2, _affine_normalizer, make, first_only)


def affine_witnesses(c1, c2):
    """All (AffineMap, permutation) carrying c1 onto c2, in scan order."""
    c1, c2 = _affine_inputs(c1, c2)
    return _affine_scan(c1, c2, False)


def affine_equivalent(c1, c2):
    c1, c2 = _affine_inputs(c1, c2)
    hits = _affine_scan(c1, c2, True)
    return hits[0] if hits else None


def _anchor(c):
    return sorted(c, key=sort_key)[:3]


def _mobius_normalizer(w1, w2, w3):
    """The map sending w1, w2, w3 to 0, 1, inf, as a function on fast scalars."""
    if w1 is INF:
        k = w2 - w3
        return lambda y: 0 if y is INF else (INF if y == w3 else k / (y - w3))
    if w2 is INF:
        return lambda y: 1 if y is INF else (INF if y == w3 else (y - w1) / (y - w3))
    if w3 is INF:
        s = 1 / (w2 - w1)
        return lambda y: INF if y is INF else (y - w1) * s
    k = (w2 - w3) / (w2 - w1)
    return lambda y: k if y is INF else (INF if y == w3 else (y - w1) * k / (y - w3))


def _mobius_scan(c1, c2, first_only):
    # any witness sends the anchor triple of c1 to some ordered triple of c2
    z = _anchor(c1)
    tz = _to_01inf(*z)

    def make(target):
        return _to_01inf(*target).inverse().compose(tz)

    return _scan(c1, c2, z, 3, _mobius_normalizer, make, first_only)


def mobius_witnesses(c1, c2):
    c1, c2 = _projective_inputs(c1, c2)
    return _mobius_scan(c1, c2, False)


def mobius_equivalent(c1, c2):
    c1, c2 = _projective_inputs(c1, c2)
    hits = _mobius_scan(c1, c2, True)
    return hits[0] if hits else None


def stab_affine(c) -> PermutationGroup:
    """Permutations of c induced by affine self-maps; always cyclic."""
    c, _ = _affine_inputs(c)
    wit = _affine_scan(c, c, False)
    grp = PermutationGroup(len(c), [p for _, p in wit], {p: m for m, p in wit})
    if grp.classification.name not in ("Trivial", "Cyclic"):
        raise InternalContradiction(f"affine stabiliser is {grp.classification}, expected cyclic")
    return grp


def stab_mobius(c) -> PermutationGroup:
    c, _ = _projective_inputs(c)
    wit = _mobius_scan(c, c, False)
    return PermutationGroup(len(c), [p for _, p in wit], {p: m for m, p in wit})


def _normalized_affine(c, p, q):
    a = 1 / (q - p)
    return tuple(sorted(a * (x - p) for x in c))


def canonical_point(c, flavor="X"):
    """Representative of the orbit of c, equal for equivalent configurations.

    X: affine maps send the extreme pair (min, max) to an extreme pair, so the
    two normalisations of it to (0, 1) see the whole orbit; take the lex-least.
    Y: lex-least over all normalisations of an ordered triple to (0, 1, inf).
    """
    flavor = flavor.upper()
    if flavor == "X":
        c, _ = _affine_inputs(c)
        lo, hi = min(c), max(c)
        return list(min(_normalized_affine(c, lo, hi), _normalized_affine(c, hi, lo)))
    if flavor == "Y":
        c, _ = _projective_inputs(c)
        f = _fast(c)
        best = None
        for trip in permutations(f, 3):
            norm = _mobius_normalizer(*trip)
            key = sorted(sort_key(norm(x)) for x in f)
            if best is None or key < best:
                best = key
        return [INF if k[0] else Fraction(int(k[1].numerator), int(k[1].denominator)) for k in best]
    raise RejectedInput(f"unknown flavor {flavor!r}")


def aut_report(c, flavor="X"):
    """Shape of the automorphism group of X(s) or Y(s) for eigenvalues c.

    The identity component is the maximal torus modulo scalars; the component
    group is the stabiliser times the order-two involution.
    """
    flavor = flavor.upper()
    if flavor == "X":
        grp = stab_affine(c)
    elif flavor == "Y":
        grp = stab_mobius(c)
    else:
        raise RejectedInput(f"unknown flavor {flavor!r}")
    n = grp.degree
    witnesses = []
    for g in grp.generators:
        witnesses.append({"permutation": cycles(g), "map": grp.witnesses[g].to_json()})
    return {
        "flavor": flavor,
        "n": n,
        "identity_component": f"torus of dimension {n - 1}",
        "torus_dim": n - 1,
        "stabilizer_order": grp.order,
        "stabilizer": str(grp.classification),
        "stabilizer_generators": witnesses,
        "pi0_order": 2 * grp.order,
        "pi0": f"{grp.classification} x Z/2",
        "outside_theorem_range": n < 4,
    }
