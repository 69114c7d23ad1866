"""Small permutation groups given by their full element list."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import InternalContradiction


def compose(p, q):
    """(p o q)[i] = p[q[i]]."""
    return tuple(p[i] for i in q)


def identity(n):
    return tuple(range(n))


def inverse(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def element_order(p):
    e = identity(len(p))
    q, k = p, 1
    while q != e:
        q = compose(p, q)
        k += 1
    return k


def closure(gens, n):
    e = identity(n)
    seen = {e}
    frontier = [e]
    gens = [tuple(g) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def cycles(p):
    """1-based cycle notation, e.g. ``(1 4)(2 3)``; ``()`` for the identity."""
    done = set()
    parts = []
    for i in range(len(p)):
        if i in done or p[i] == i:
            continue
        cyc = [i]
        done.add(i)
        j = p[i]
        while j != i:
            cyc.append(j)
            done.add(j)
            j = p[j]
        parts.append("(" + " ".join(str(k + 1) for k in cyc) + ")")
    return "".join(parts) or "()"


@dataclass(frozen=True)
class Classification:
    name: str  # Trivial, Cyclic, Dihedral, A4, S4, A5
    k: int | None = None

    def __str__(self):
        return f"{self.name}({self.k})" if self.k is not None else self.name


def classify(elements):
    """Isomorphism type among the finite subgroups of PGL_2.

    Decided by order, commutativity, largest element order and number of
    involutions.  The Klein four-group is reported as Dihedral(2) and a group
    of order 2 as Cyclic(2).
    """
    els = list(elements)
    order = len(els)
    if order == 1:
        return Classification("Trivial")
    orders = [element_order(g) for g in els]
    top = max(orders)
    invol = sum(1 for o in orders if o == 2)
    abelian = all(compose(a, b) == compose(b, a) for a in els for b in els)
    if abelian:
        if top == order:
            return Classification("Cyclic", order)
        if order == 4 and invol == 3:
            return Classification("Dihedral", 2)
    elif order % 2 == 0:
        k = order // 2
        if top == k and invol == k + (1 - k % 2):
            return Classification("Dihedral", k)
    if order == 12 and top == 3 and invol == 3:
        return Classification("A4")
    if order == 24 and top == 4 and invol == 9:
        return Classification("S4")
    if order == 60 and top == 5 and invol == 15:
        return Classification("A5")
    raise InternalContradiction(
        f"group of order {order} (abelian={abelian}, max element order {top}) is not a finite subgroup of PGL2"
    )


class PermutationGroup:
    def __init__(self, degree, elements, witnesses=None):
        self.degree = degree
        self.elements = frozenset(tuple(e) for e in elements)
        self.witnesses = witnesses or {}
        if identity(degree) not in self.elements:
            raise InternalContradiction("element list does not contain the identity")
        self.generators = self._generators()
        if closure(self.generators, degree) != self.elements:
            raise InternalContradiction("element list is not closed")
        self.classification = classify(self.elements)

    def _generators(self):
        gens = []
        span = {identity(self.degree)}
        # prefer high-order elements so cyclic groups get one generator
        for g in sorted(self.elements, key=lambda g: (-element_order(g), g)):
            if g not in span:
                gens.append(g)
                span = closure(gens, self.degree)
            if len(span) == len(self.elements):
                break
        return gens

    @property
    def order(self):
        return len(self.elements)

    def issubgroup(self, other):
        return self.degree == other.degree and self.elements <= other.elements

    def __repr__(self):
        return f"PermutationGroup(order={self.order}, {self.classification}, gens={[cycles(g) for g in self.generators]})"
