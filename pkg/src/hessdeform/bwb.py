"""Cohomology of line bundles on G/B and G/P.

A weight ``lam`` (fundamental coordinates) gives the line bundle ``L(lam)``.
Its cohomology is computed by moving ``lam + rho`` into the dominant chamber
with simple reflections.
"""
from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels
from .errors import RejectedInput
from .rootsys import RootSystem


class _SingularType:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "Singular"

    def __bool__(self):
        return False

    def __reduce__(self):
        return (_SingularType, ())


Singular = _SingularType()


@dataclass(frozen=True)
class BottResult:
    """Either singular (all cohomology vanishes) or one module in one degree."""

    singular: bool
    degree: int | None = None
    dominant_weight: tuple | None = None
    dimension: int | None = None

    @property
    def kind(self):
        return "Singular" if self.singular else "Concentrated"

    @property
    def euler(self):
        if self.singular:
            return 0
        return -self.dimension if self.degree % 2 else self.dimension

    def h(self, i):
        if self.singular or i != self.degree:
            return 0
        return self.dimension

    def to_json(self):
        if self.singular:
            return {"kind": "Singular"}
        return {
            "kind": "Concentrated",
            "degree": self.degree,
            "dominant_weight": list(self.dominant_weight),
            "dimension": self.dimension,
        }


class WeightMultiset:
    """Weights with positive multiplicities; a line-bundle filtration of a bundle."""

    __slots__ = ("_c",)

    def __init__(self, entries=None):
        c = Counter()
        if entries is not None:
            items = entries.items() if hasattr(entries, "items") else ((w, 1) for w in entries)
            for w, m in items:
                if m < 0:
                    raise RejectedInput("multiplicities must be positive")
                if m:
                    c[tuple(int(x) for x in w)] += int(m)
        self._c = c

    def items(self):
        return self._c.items()

    def __iter__(self):
        return iter(self._c)

    def __len__(self):
        return len(self._c)

    def __getitem__(self, w):
        return self._c.get(tuple(w), 0)

    def __contains__(self, w):
        return tuple(w) in self._c

    def __eq__(self, other):
        return isinstance(other, WeightMultiset) and self._c == other._c

    def __repr__(self):
        return f"WeightMultiset({dict(sorted(self._c.items()))})"

    @property
    def size(self):
        return sum(self._c.values())

    def __add__(self, other):
        out = WeightMultiset()
        out._c = self._c + other._c
        return out

    def shifted(self, v):
        return WeightMultiset({tuple(a + b for a, b in zip(w, v)): m for w, m in self._c.items()})

    def as_dict(self):
        return dict(self._c)


def dominantize(rs: RootSystem, mu, track_word=False):
    """Reflect ``mu`` into the dominant chamber.

    Returns :data:`Singular` if a zero coordinate ever shows up, otherwise
    ``(length, dominant)``; with ``track_word`` also the list of reflection
    indices applied (first applied first).
    """
    mu = [int(x) for x in mu]
    cm = rs.cartan_matrix
    r = rs.rank
    word = []
    while True:
        if 0 in mu:
            return Singular
        neg = next((i for i in range(r) if mu[i] < 0), None)
        if neg is None:
            break
        c = mu[neg]
        for j in range(r):
            mu[j] -= c * int(cm[j, neg])
        word.append(neg)
    if track_word:
        return len(word), tuple(mu), word
    return len(word), tuple(mu)


def is_dominant(mu):
    return all(x >= 0 for x in mu)


@functools.lru_cache(maxsize=1 << 16)
def _weyl_dim(rs, mu):
    num = 1
    den = 1
    for cor in rs.positive_coroots:
        num *= sum(c * (m + 1) for c, m in zip(cor, mu))
        den *= sum(cor)
    q = Fraction(num, den)
    if q.denominator != 1:
        raise AssertionError(f"Weyl product not integral for {mu} in {rs.cartan_type}")
    return int(q)


def weyl_dim(rs: RootSystem, mu) -> int:
    """Dimension of the irreducible module with highest weight ``mu``."""
    mu = tuple(int(x) for x in mu)
    if len(mu) != rs.rank:
        raise RejectedInput("weight has the wrong length")
    if not is_dominant(mu):
        raise RejectedInput(f"{mu} is not dominant")
    return _weyl_dim(rs, mu)


def bott_line(rs: RootSystem, lam) -> BottResult:
    lam = tuple(int(x) for x in lam)
    if len(lam) != rs.rank:
        raise RejectedInput("weight has the wrong length")
    res = dominantize(rs, [x + 1 for x in lam])
    if res is Singular:
        return BottResult(True)
    length, mu = res
    dom = tuple(x - 1 for x in mu)
    return BottResult(False, length, dom, _weyl_dim(rs, dom))


def negative_pairing_count(rs: RootSystem, lam):
    """#{alpha > 0 : <lam + rho, alpha^vee> < 0}, or None if some pairing vanishes."""
    v = rs.coroot_array @ (np.asarray(lam, dtype=np.int64) + 1)
    if (v == 0).any():
        return None
    return int((v < 0).sum())


def bott_parabolic(rs: RootSystem, delta0, lam) -> BottResult:
    """Line bundle cohomology on G/P for a P-dominant weight.

    Pushing forward along G/B -> G/P does not change cohomology of a
    P-dominant weight, so the answer is the G/B one.
    """
    lam = tuple(int(x) for x in lam)
    bad = [i for i in delta0 if lam[i] < 0]
    if bad:
        raise RejectedInput(f"{lam} is not dominant for the parabolic (negative at {[i + 1 for i in bad]})")
    return bott_line(rs, lam)


def bott_batch(rs: RootSystem, weights):
    """Vectorised :func:`bott_line` over an ``(m, rank)`` array.

    Returns ``(degrees, dims)`` with ``degrees == -1`` and ``dims == 0`` for
    singular weights.  Dimensions are Python ints (object array).
    """
    arr = np.asarray(weights, dtype=np.int64).reshape(-1, rs.rank)
    lengths, out = _kernels.dominantize_batch(arr + 1, rs.cartan_matrix)
    dims = np.zeros(len(arr), dtype=object)
    for k in np.flatnonzero(lengths >= 0):
        dims[k] = _weyl_dim(rs, tuple(int(x) - 1 for x in out[k]))
    return lengths, dims


def euler_multiset(rs: RootSystem, M: WeightMultiset) -> int:
    """Euler characteristic of a bundle given by its line-bundle filtration."""
    if len(M) == 0:
        return 0
    ws = list(M.items())
    lengths, dims = bott_batch(rs, [w for w, _ in ws])
    total = 0
    for (_, m), ln, d in zip(ws, lengths, dims):
        if ln >= 0:
            total += -m * d if ln % 2 else m * d
    return total


def degree_profile(rs: RootSystem, M: WeightMultiset):
    """Per-degree sums of dimensions: {degree: sum of mult * dim} (nonzero only)."""
    prof = {}
    if len(M) == 0:
        return prof
    ws = list(M.items())
    lengths, dims = bott_batch(rs, [w for w, _ in ws])
    for (_, m), ln, d in zip(ws, lengths, dims):
        if ln >= 0:
            prof[int(ln)] = prof.get(int(ln), 0) + m * d
    return prof


def eweight_to_fundamental(e):
    """Type A_{n-1}: integer n-vector (modulo the all-ones vector) to fundamental coordinates.

    e.g. ``e_1 = (1,0,0,0) -> (1,0,0)``, ``-e_4 -> (0,0,1)``,
    ``e_1 - e_4 -> (1,0,1)`` which is the highest root of A3.
    """
    e = [int(x) for x in e]
    if len(e) < 2:
        raise RejectedInput("need at least two e-coordinates")
    return tuple(e[i] - e[i + 1] for i in range(len(e) - 1))
