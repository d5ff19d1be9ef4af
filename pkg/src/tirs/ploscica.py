"""Maximal disjoint filter-ideal pairs and the dual graph of a lattice.

A maximal pair is a maximal partial homomorphism into the two-element
lattice: a filter F and an ideal I, disjoint, neither enlargeable without
breaking disjointness.  In a finite lattice all filters and ideals are
principal, so the search runs over generator pairs (x, y).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateLattice, MismatchedCarrier
from .lattice import FiniteLattice
from .structures import Graph


@dataclass(frozen=True)
class MaximalPair:
    """Maximal disjoint pair (up x, down y), stored by principal generators."""
    lattice: FiniteLattice
    x: int  # generator of the filter part
    y: int  # generator of the ideal part

    @property
    def ones(self) -> frozenset[int]:
        return self.lattice.up(self.x)

    @property
    def zeros(self) -> frozenset[int]:
        return self.lattice.down(self.y)

    def ones_names(self) -> list[str]:
        return sorted(self.lattice.name(a) for a in self.ones)

    def zeros_names(self) -> list[str]:
        return sorted(self.lattice.name(a) for a in self.zeros)


def maximal_pairs(L: FiniteLattice) -> list[MaximalPair]:
    """All maximal disjoint filter-ideal pairs, sorted by (x, y) index.

    (up x, down y) is maximal iff x is not below y, every x' < x lies below
    y, and every y' > y lies above x.
    """
    if L.n < 2:
        raise DegenerateLattice("need at least two elements")
    out = []
    for x in range(L.n):
        for y in range(L.n):
            if L.le(x, y):
                continue
            if not all(L.le(xp, y) for xp in range(L.n)
                       if L.le(xp, x) and xp != x):
                continue
            if not all(L.le(x, yp) for yp in range(L.n)
                       if L.le(y, yp) and yp != y):
                continue
            out.append(MaximalPair(L, x, y))
    return out


def mph_leq(f: MaximalPair, g: MaximalPair) -> bool:
    """Partial-homomorphism order: f <= g iff ones(f) is contained in
    ones(g)."""
    if f.lattice is not g.lattice and f.lattice != g.lattice:
        raise MismatchedCarrier("pairs over different lattices")
    return f.ones <= g.ones


def _edge_empty_intersection(f: MaximalPair, g: MaximalPair) -> bool:
    return not (f.ones & g.zeros)


def _edge_pointwise(f: MaximalPair, g: MaximalPair) -> bool:
    # f(a) <= g(a) on the common domain; only a in ones(f) with g(a) = 0
    # can violate it
    dom_f = f.ones | f.zeros
    dom_g = g.ones | g.zeros
    return all(not (a in f.ones and a in g.zeros) for a in dom_f & dom_g)


def dual_graph(L: FiniteLattice) -> Graph:
    """The dual graph of L: vertices are maximal pairs (named p0, p1, ... in
    sorted generator order), with an edge (f, g) iff ones(f) and zeros(g)
    are disjoint.

    The two defining forms of E (empty intersection vs pointwise order on
    the shared domain) are both evaluated and must agree.
    """
    pairs = maximal_pairs(L)
    names = [f"p{i}" for i in range(len(pairs))]
    edges = set()
    for i, f in enumerate(pairs):
        for j, g in enumerate(pairs):
            e1 = _edge_empty_intersection(f, g)
            e2 = _edge_pointwise(f, g)
            assert e1 == e2, "the two edge definitions disagree"
            if e1:
                edges.add((names[i], names[j]))
    meta = {names[i]: {"ones": p.ones_names(), "zeros": p.zeros_names()}
            for i, p in enumerate(pairs)}
    return Graph(tuple(names), frozenset(edges), meta)
