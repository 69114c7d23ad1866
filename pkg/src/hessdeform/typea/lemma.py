"""Line bundles on the type A Hessenberg variety X in the full flag variety Fl_n.

Weights are integer n-tuples modulo the all-ones vector (e-coordinates).
X is the zero locus of a section of L(theta), theta = e_1 - e_n, so
chi(X, L) = chi(Fl_n, L) - chi(Fl_n, L (x) L(-theta)).
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

from ..bwb import bott_line, eweight_to_fundamental, weyl_dim
from ..errors import RejectedInput
from ..rootsys import build_root_system


def _check_dominant(lam):
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise RejectedInput(f"{tuple(lam)} is not dominant (need weakly decreasing entries)")


def weyl_dim_A(n, lam):
    """prod_{i<j} (1 + (lam_i - lam_j)/(j - i)) for weakly decreasing lam."""
    lam = [int(x) for x in lam]
    if len(lam) != n:
        raise RejectedInput(f"expected {n} entries")
    _check_dominant(lam)
    out = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            out *= 1 + Fraction(lam[i] - lam[j], j - i)
    assert out.denominator == 1
    return int(out)


def weyl_dim_A_checked(n, lam):
    """weyl_dim_A, compared against the general root-system formula."""
    d = weyl_dim_A(n, lam)
    if n >= 2:
        other = weyl_dim(build_root_system("A", n - 1), eweight_to_fundamental(lam))
        assert d == other, (d, other)
    return d


def _theta_e(n):
    return (1,) + (0,) * (n - 2) + (-1,)


def euler_hessenberg_linebundle(n, lam, k):
    """chi(X, L(lam)^k) from two line-bundle computations on Fl_n."""
    if n < 2:
        raise RejectedInput("n must be at least 2")
    lam = [int(x) for x in lam]
    if len(lam) != n:
        raise RejectedInput(f"expected {n} entries")
    rs = build_root_system("A", n - 1)
    kl = [k * x for x in lam]
    twisted = [a - t for a, t in zip(kl, _theta_e(n))]
    return bott_line(rs, eweight_to_fundamental(kl)).euler - bott_line(rs, eweight_to_fundamental(twisted)).euler


def _eps(i, j, n):
    # 1-based i < j
    if i == 1 and j == n:
        return 2
    if i == 1 or j == n:
        return 1
    return 0


def closed_form_A(n, lam, k):
    out = Fraction(1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out *= 1 + Fraction((lam[i - 1] - lam[j - 1]) * k, j - i)
    return out


def closed_form_B(n, lam, k):
    out = Fraction(1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out *= 1 + Fraction((lam[i - 1] - lam[j - 1]) * k - _eps(i, j, n), j - i)
    return out


def euler_closed_form(n, lam, k):
    """A(k) - B(k) if lam_1 > lam_2 and lam_{n-1} > lam_n, else A(k); lam dominant, n >= 3.

    For n = 2 the weight -theta + rho is regular, so the twisted term never
    drops out and the formula does not apply.
    """
    if n < 3:
        raise RejectedInput("the closed form needs n >= 3")
    lam = [int(x) for x in lam]
    _check_dominant(lam)
    a = closed_form_A(n, lam, k)
    if lam[0] > lam[1] and lam[-2] > lam[-1]:
        a -= closed_form_B(n, lam, k)
    assert a.denominator == 1
    return int(a)


def dominant_weights(n, box):
    """Weakly decreasing n-tuples with last entry 0 and first entry <= box."""
    for parts in combinations_with_replacement(range(box + 1), n - 1):
        yield tuple(sorted(parts, reverse=True)) + (0,)


def characterize_search(n, box=3, kmax=10):
    """Dominant lam (mod the all-ones vector) in the box with chi(X, L^k) = C(n+k-1, k) for k <= kmax."""
    if n < 4:
        raise RejectedInput("the characterisation is stated for n >= 4")
    hits = []
    for lam in dominant_weights(n, box):
        if all(euler_hessenberg_linebundle(n, lam, k) == comb(n + k - 1, k) for k in range(1, kmax + 1)):
            hits.append(lam)
    return hits


def label_eweight(lam):
    """'e1', '-e4' and so on for the two expected answers, else the tuple."""
    n = len(lam)
    if tuple(lam) == (1,) + (0,) * (n - 1):
        return "e1"
    if tuple(lam) == (1,) * (n - 1) + (0,):
        return f"-e{n}"
    return str(tuple(lam))
