"""Exact scalars: Fractions plus a point at infinity."""
from __future__ import annotations

from fractions import Fraction

from ..errors import RejectedInput


class _Infinity:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __hash__(self):
        return hash("hessdeform.INF")

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __le__(self, other):
        return other is self

    def __ge__(self, other):
        return True

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

_INF_WORDS = {"inf", "infinity", "∞", "oo"}


def parse_scalar(text, allow_inf=True):
    if text is INF:
        if not allow_inf:
            raise RejectedInput("infinity is not allowed here")
        return INF
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    s = str(text).strip()
    if s.lower() in _INF_WORDS:
        if not allow_inf:
            raise RejectedInput("infinity is not allowed here")
        return INF
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise RejectedInput(f"not an exact rational: {text!r}") from exc


def parse_config(items, allow_inf=True, min_size=1):
    if isinstance(items, str):
        items = [p for p in items.replace(";", ",").split(",") if p.strip()]
    pts = [parse_scalar(x, allow_inf) for x in items]
    if len(pts) < min_size:
        raise RejectedInput(f"need at least {min_size} points, got {len(pts)}")
    if len(set(pts)) != len(pts):
        raise RejectedInput("configuration has repeated points")
    return pts


def fmt(x):
    """'p/q', 'p' or 'inf'."""
    if x is INF:
        return "inf"
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def sort_key(x):
    return (1, 0) if x is INF else (0, x)
