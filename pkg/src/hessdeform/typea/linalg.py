"""Exact matrix constructions: a symmetric form making s self-adjoint, and
the binary form det(uA + vB)."""
from __future__ import annotations

from fractions import Fraction
from math import gcd

import sympy

from ..errors import RejectedInput, UnsupportedInput
from .scalars import parse_scalar

_u, _v = sympy.symbols("u v")


def to_sympy_matrix(rows):
    try:
        data = [[sympy.Rational(str(parse_scalar(x, allow_inf=False))) for x in row] for row in rows]
    except TypeError as exc:
        raise RejectedInput("matrix must be a list of rows") from exc
    if not data or any(len(r) != len(data) for r in data):
        raise RejectedInput("matrix must be square and nonempty")
    return sympy.Matrix(data)


def _frac(x):
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


def to_fractions(m):
    return [[_frac(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def symmetrize(s):
    """Q = (P P^T)^{-1} where the columns of P are eigenvectors of s.

    Then Q is symmetric, invertible and Q s = s^T Q.  Needs n distinct
    rational eigenvalues.
    """
    S = s if isinstance(s, sympy.MatrixBase) else to_sympy_matrix(s)
    n = S.rows
    vecs = []
    for val, mult, basis in S.eigenvects():
        if not val.is_rational:
            raise UnsupportedInput(f"eigenvalue {val} is not rational; pass the eigenvalues as a configuration instead")
        if mult != 1:
            raise UnsupportedInput(f"eigenvalue {val} is repeated; pass the eigenvalues as a configuration instead")
        vecs.append((val, basis[0]))
    if len(vecs) != n:
        raise UnsupportedInput("matrix is not diagonalisable over the rationals")
    vecs.sort(key=lambda t: t[0])
    P = sympy.Matrix.hstack(*[v for _, v in vecs])
    Q = (P * P.T).inv()
    assert Q == Q.T
    assert Q.det() != 0
    assert Q * S == S.T * Q
    return Q


def pencil_charpoly_raw(A, B):
    """Coefficients of det(uA + vB), from u^n down to v^n."""
    A = A if isinstance(A, sympy.MatrixBase) else to_sympy_matrix(A)
    B = B if isinstance(B, sympy.MatrixBase) else to_sympy_matrix(B)
    if A.shape != B.shape:
        raise RejectedInput("A and B must have the same size")
    n = A.rows
    det = sympy.expand((_u * A + _v * B).det(method="berkowitz"))
    poly = sympy.Poly(det, _u, _v)
    return [_frac(poly.coeff_monomial(_u ** (n - i) * _v ** i)) for i in range(n + 1)]


def primitive(coeffs):
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return ints
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    return [-x for x in ints] if lead < 0 else ints


def pencil_charpoly(A, B):
    """det(uA + vB) as a primitive integer vector with positive leading entry."""
    return primitive(pencil_charpoly_raw(A, B))
