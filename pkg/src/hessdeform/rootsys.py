"""Simple root systems with exact integer data.

Conventions
-----------
* Roots are integer tuples in the simple-root basis (Bourbaki numbering).
* Weights are integer tuples in the fundamental-weight basis; entry ``i`` is
  ``<lambda, alpha_i^vee>``.
* ``cartan_matrix[i][j] = <alpha_j, alpha_i^vee>``, so column ``j`` is
  ``alpha_j`` written in fundamental coordinates and converting a root to a
  weight is ``cartan_matrix @ root``.
* Simple roots are indexed from 0 in the Python API.  Human-readable output
  (labels, tables, CLI) uses the 1-based Bourbaki labels.

Our Borel subgroup corresponds to the negative simple roots.  Nothing in this
module depends on that choice; it only matters for the weights assigned to
homogeneous bundles in :mod:`hessdeform.filtered` and :mod:`hessdeform.symcoh`.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .errors import RejectedInput

_ADMISSIBLE = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 4,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}

# classical |Phi^+|
_POSITIVE_COUNT = {
    "A": lambda r: r * (r + 1) // 2,
    "B": lambda r: r * r,
    "C": lambda r: r * r,
    "D": lambda r: r * (r - 1),
    "E": lambda r: {6: 36, 7: 63, 8: 120}[r],
    "F": lambda r: 24,
    "G": lambda r: 6,
}


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        fam = str(self.family).upper()
        object.__setattr__(self, "family", fam)
        if fam not in _ADMISSIBLE or not isinstance(self.rank, int) or not _ADMISSIBLE[fam](self.rank):
            raise RejectedInput(f"inadmissible Cartan type {self.family}{self.rank}")

    @classmethod
    def parse(cls, text):
        text = text.strip()
        return cls(text[0], int(text[1:]))

    def __str__(self):
        return f"{self.family}{self.rank}"


def _cartan(family, r):
    c = [[0] * r for _ in range(r)]
    for i in range(r):
        c[i][i] = 2

    def link(i, j, a=-1, b=-1):
        # c[i][j] = <alpha_j, alpha_i^vee>
        c[i][j] = a
        c[j][i] = b

    if family in "ABC":
        for i in range(r - 1):
            link(i, i + 1)
        if family == "B":
            c[r - 1][r - 2] = -2  # alpha_r short
        elif family == "C":
            c[r - 2][r - 1] = -2  # alpha_r long
    elif family == "D":
        for i in range(r - 2):
            link(i, i + 1)
        link(r - 3, r - 1)
    elif family == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, r - 1):
            link(i, i + 1)
    elif family == "F":
        link(0, 1)
        link(1, 2)
        link(2, 3)
        c[2][1] = -2  # alpha_1, alpha_2 long; alpha_3, alpha_4 short
    elif family == "G":
        link(0, 1, a=-3, b=-1)  # alpha_1 short
    return c


def _symmetrizer(cartan):
    """Squared lengths of the simple roots, scaled to coprime positive integers."""
    r = len(cartan)
    d = [None] * r
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(r):
            if j != i and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                stack.append(j)
    den = 1
    for x in d:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in d]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints]


class RootSystem:
    """Immutable combinatorial datum of a simple root system.

    Build instances with :func:`build_root_system`, which caches them.
    """

    def __init__(self, cartan_type):
        self.cartan_type = cartan_type
        r = cartan_type.rank
        self.rank = r
        cm = _cartan(cartan_type.family, r)
        self.cartan_matrix = np.array(cm, dtype=np.int64)
        self.cartan_matrix.setflags(write=False)
        self.simple_norms = tuple(_symmetrizer(cm))
        self.simply_laced = len(set(self.simple_norms)) == 1

        roots = self._enumerate_positive(cm)
        self.positive_roots = tuple(roots)
        self.index = {a: k for k, a in enumerate(roots)}
        self.roots = self.positive_roots + tuple(tuple(-x for x in a) for a in roots)
        self._root_set = frozenset(self.roots)

        pos = np.array(roots, dtype=np.int64)
        pos.setflags(write=False)
        self.positive_array = pos
        gram = np.array(self.simple_norms, dtype=np.int64)[:, None] * self.cartan_matrix
        # (a, a) in units where (alpha_i, alpha_i) = simple_norms[i]
        norms2 = np.einsum("ki,ij,kj->k", pos, gram, pos)
        assert np.all(norms2 % 2 == 0)
        self.norms = tuple(int(x) // 2 for x in norms2)
        cor = []
        for a, nrm in zip(roots, self.norms):
            row = []
            for i in range(r):
                num = a[i] * self.simple_norms[i]
                assert num % nrm == 0
                row.append(num // nrm)
            cor.append(tuple(row))
        self.positive_coroots = tuple(cor)
        self.coroot_array = np.array(cor, dtype=np.int64)
        self.coroot_array.setflags(write=False)
        top = max(self.norms)
        low = min(self.norms)
        self.is_long = tuple(self.simply_laced or n == top for n in self.norms)
        self.is_short = tuple(self.simply_laced or n == low for n in self.norms)

    @staticmethod
    def _enumerate_positive(cm):
        r = len(cm)
        simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
        known = set(simple)
        level = list(simple)
        ordered = list(simple)
        while level:
            nxt = []
            for b in level:
                for i in range(r):
                    if b == simple[i]:
                        continue
                    pair = sum(cm[i][j] * b[j] for j in range(r))
                    p = 0
                    down = list(b)
                    while True:
                        down[i] -= 1
                        if tuple(down) in known:
                            p += 1
                        else:
                            break
                    if p - pair > 0:
                        up = list(b)
                        up[i] += 1
                        up = tuple(up)
                        if up not in known:
                            known.add(up)
                            nxt.append(up)
            nxt.sort(key=lambda a: tuple(-x for x in a))
            ordered.extend(nxt)
            level = nxt
        ordered.sort(key=lambda a: (sum(a), tuple(-x for x in a)))
        return ordered

    def __repr__(self):
        return f"RootSystem({self.cartan_type})"

    def __reduce__(self):
        return (build_root_system, (self.cartan_type,))

    # -- derived accessors -------------------------------------------------
    @property
    def num_positive(self):
        return len(self.positive_roots)

    @property
    def dimension(self):
        """Dimension of the simple Lie algebra."""
        return self.rank + 2 * self.num_positive

    @property
    def theta(self):
        return self.positive_roots[-1]

    @property
    def coxeter_number(self):
        return height(self.theta) + 1

    @property
    def rho(self):
        return (1,) * self.rank

    def simple_root(self, i):
        return tuple(int(i == j) for j in range(self.rank))

    def is_root(self, a):
        return tuple(a) in self._root_set

    def is_positive_root(self, a):
        return tuple(a) in self.index

    def root_to_weight(self, a):
        """Fundamental coordinates of an element of the root lattice."""
        return tuple(int(x) for x in self.cartan_matrix @ np.asarray(a, dtype=np.int64))

    def coroot(self, a):
        """Coroot of a root, in simple-coroot coordinates."""
        a = tuple(a)
        if a in self.index:
            return self.positive_coroots[self.index[a]]
        neg = tuple(-x for x in a)
        if neg in self.index:
            return tuple(-x for x in self.positive_coroots[self.index[neg]])
        raise RejectedInput(f"{format_root(a)} is not a root of {self.cartan_type}")

    def reflect_root(self, a, i):
        """s_i applied to an element of the root lattice."""
        w = self.root_to_weight(a)
        out = list(a)
        out[i] -= w[i]
        return tuple(out)

    def reflect_weight(self, lam, i):
        c = lam[i]
        return tuple(int(x - c * self.cartan_matrix[j, i]) for j, x in enumerate(lam))

    def short_simple(self):
        return [i for i in range(self.rank) if self.is_short[self.index[self.simple_root(i)]]]

    def long_simple(self):
        return [i for i in range(self.rank) if self.is_long[self.index[self.simple_root(i)]]]


@functools.lru_cache(maxsize=None)
def _build(cartan_type):
    rs = RootSystem(cartan_type)
    expected = _POSITIVE_COUNT[cartan_type.family](cartan_type.rank)
    if rs.num_positive != expected:
        raise AssertionError(f"{cartan_type}: enumerated {rs.num_positive} positive roots, expected {expected}")
    return rs


def build_root_system(t, rank=None):
    """Return the (cached) root system of a Cartan type.

    Accepts a :class:`CartanType`, a string such as ``"E8"``, or a family
    letter together with ``rank``.
    """
    if rank is not None:
        t = CartanType(t, rank)
    elif isinstance(t, str):
        t = CartanType.parse(t)
    return _build(t)


def admissible_types(max_rank=8):
    out = []
    for fam in "ABCDEFG":
        for r in range(1, max_rank + 1):
            if _ADMISSIBLE[fam](r):
                out.append(CartanType(fam, r))
    return out


def pairing(rs, lam, alpha):
    """<lam, alpha^vee> for a weight ``lam`` and a root ``alpha``."""
    cor = rs.coroot(alpha)
    return sum(int(c) * int(x) for c, x in zip(cor, lam))


def height(a):
    return sum(int(x) for x in a)


def coroot_height(rs, a):
    return height(rs.coroot(a))


def height_p(rs, delta0, a):
    """Sum of the coefficients of ``a`` over simple roots outside ``delta0``."""
    d0 = set(delta0)
    return sum(int(x) for i, x in enumerate(a) if i not in d0)


@dataclass(frozen=True)
class DistinguishedRoots:
    theta: tuple
    theta_plus: tuple | None = None
    k_index: int | None = None
    theta_plus_plus: tuple | None = None
    delta0: frozenset | None = None
    boundary: frozenset | None = None

    @property
    def i0(self):
        """Index of the unique boundary vertex outside type A (else None)."""
        if self.boundary is not None and len(self.boundary) == 1:
            return next(iter(self.boundary))
        return None


def _highest_short(rs, roots):
    short = [a for a in roots if rs.is_short[rs.index[a]]]
    return max(short, key=height)


def _k_and_plus_plus(rs, theta_plus, support=None):
    hits = [
        i
        for i in range(rs.rank)
        if (support is None or i in support) and rs.is_root(_add(theta_plus, rs.simple_root(i)))
    ]
    if len(hits) != 1:
        raise AssertionError(f"expected a unique k for {format_root(theta_plus)}, got {hits}")
    k = hits[0]
    return k, rs.reflect_root(_add(theta_plus, rs.simple_root(k)), k)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def distinguished_roots(rs):
    """theta, theta^+, k, theta^++ and the splitting of the simple roots by <theta, .>.

    ``delta0`` and ``boundary`` are computed from pairings with theta, not
    looked up.  In simply-laced types theta^+ coincides with theta and no k
    exists, so the three plus-fields are ``None``; in rank 1 only theta is set.
    """
    theta = rs.theta
    if rs.rank == 1:
        return DistinguishedRoots(theta=theta)
    tw = rs.root_to_weight(theta)
    delta0 = frozenset(i for i in range(rs.rank) if tw[i] == 0)
    boundary = frozenset(range(rs.rank)) - delta0
    if rs.simply_laced:
        return DistinguishedRoots(theta=theta, delta0=delta0, boundary=boundary)
    tp = _highest_short(rs, rs.positive_roots)
    k, tpp = _k_and_plus_plus(rs, tp)
    return DistinguishedRoots(theta, tp, k, tpp, delta0, boundary)


def components(rs, indices):
    """Connected components of the Dynkin subdiagram on ``indices``."""
    left = set(indices)
    comps = []
    while left:
        start = min(left)
        comp = {start}
        stack = [start]
        left.discard(start)
        while stack:
            i = stack.pop()
            for j in list(left):
                if rs.cartan_matrix[i, j] != 0:
                    left.discard(j)
                    comp.add(j)
                    stack.append(j)
        comps.append(frozenset(comp))
    return comps


def supported_on(rs, indices):
    """Positive roots whose support lies in ``indices``."""
    s = set(indices)
    return [a for a in rs.positive_roots if all(x == 0 or i in s for i, x in enumerate(a))]


@dataclass(frozen=True)
class SubsystemRoots:
    theta0: tuple
    theta0_plus: tuple | None
    theta0_plus_plus: tuple | None
    component_thetas: tuple


def subsystem_distinguished(rs, indices):
    """theta_0, theta_0^+, theta_0^++ of the subsystem generated by ``indices``.

    When the subsystem is disconnected theta_0 is reported as the sum of the
    highest roots of the components, so it need not be a root.  The plus-roots
    come from the (at most one) component with two root lengths.
    """
    comps = components(rs, indices)
    thetas = []
    plus = plus2 = None
    for comp in comps:
        roots = supported_on(rs, comp)
        top = max(roots, key=height)
        thetas.append(top)
        lengths = {rs.norms[rs.index[a]] for a in roots}
        if len(lengths) > 1:
            plus = _highest_short(rs, roots)
            _, plus2 = _k_and_plus_plus(rs, plus, support=comp)
    total = tuple(sum(t[i] for t in thetas) for i in range(rs.rank))
    return SubsystemRoots(total, plus, plus2, tuple(thetas))


def format_root(a, symbol="α"):
    """Readable form, e.g. ``α1+2α2+α3`` (1-based labels)."""
    terms = []
    for i, c in enumerate(a):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else "+"
        terms.append((sign, f"{mag}{symbol}{i + 1}"))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, t in terms[1:]:
        out += sign + t
    return out
