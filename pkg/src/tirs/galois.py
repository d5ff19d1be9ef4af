"""Galois connections from polarities, closed-set lattices, the frame of a
perfect lattice, and the two canonical-extension constructions.

closed sets are generated as the intersection closure of the column extents
plus the full first carrier; density and compactness of the computed
canonical extensions are re-verified rather than assumed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import EmbeddingNotOnto, IrreducibleMismatch, NotPerfect
from .lattice import (CheckReport, FiniteLattice, LatticeEmbedding, Witness,
                      check_compact, check_dense, filters_ideals, irreducibles,
                      lattice_from_leq)
from .ploscica import dual_graph, maximal_pairs
from .structures import Frame
from .functors import rho


def galois_up(f: Frame, A) -> frozenset[str]:
    """R-up: the second-sort points related to every member of A."""
    A = frozenset(A)
    assert A <= set(f.x1)
    return frozenset(y for y in f.x2 if all(f.has(a, y) for a in A))


def galois_down(f: Frame, B) -> frozenset[str]:
    """R-down: the first-sort points related to every member of B."""
    B = frozenset(B)
    assert B <= set(f.x2)
    return frozenset(x for x in f.x1 if all(f.has(x, b) for b in B))


def closure(f: Frame, A) -> frozenset[str]:
    """(R-down o R-up)(A)."""
    return galois_down(f, galois_up(f, A))


def _set_name(s: frozenset[str]) -> str:
    return "{" + ",".join(sorted(s)) + "}"


@dataclass(frozen=True)
class GaloisLattice:
    base_frame: Frame
    closed_sets: tuple[frozenset[str], ...]
    as_lattice: FiniteLattice
    j_infty: frozenset[str]  # element names of the lattice view
    m_infty: frozenset[str]

    def set_of(self, name: str) -> frozenset[str]:
        return self.closed_sets[self.as_lattice.index(name)]

    def name_of(self, s: frozenset[str]) -> str:
        return _set_name(s)

    def to_json(self) -> dict:
        d = self.as_lattice.to_json()
        d["closed_sets"] = [sorted(s) for s in self.closed_sets]
        d["j_infty"] = sorted(self.j_infty)
        d["m_infty"] = sorted(self.m_infty)
        return d


def closed_sets(f: Frame) -> GaloisLattice:
    """The complete lattice of Galois-closed subsets of X1, ordered by
    inclusion.

    Generated as the intersection closure of the column extents together
    with the full carrier; each member is verified to be Galois-closed.
    """
    full = frozenset(f.x1)
    family = {full}
    for y in f.x2:
        family.add(f.col(y))
    changed = True
    while changed:
        changed = False
        for a, b in itertools.combinations(list(family), 2):
            c = a & b
            if c not in family:
                family.add(c)
                changed = True
    for s in family:
        assert closure(f, s) == s, f"generated set {sorted(s)} is not closed"

    sets = sorted(family, key=lambda s: (len(s), sorted(s)))
    names = [_set_name(s) for s in sets]
    leq = [(names[i], names[j]) for i, si in enumerate(sets)
           for j, sj in enumerate(sets) if si <= sj]
    lat = lattice_from_leq(names, leq)

    j = frozenset(_set_name(closure(f, {x})) for x in f.x1)
    m = frozenset(_set_name(f.col(y)) for y in f.x2)
    return GaloisLattice(f, tuple(sets), lat, j, m)


def irreducibles_of_galois(gl: GaloisLattice):
    """J/M-irreducibles by the closure/extent formulas, cross-checked
    against the independent cover-count computation on the lattice view."""
    j, m = gl.j_infty, gl.m_infty
    j_ind, m_ind = irreducibles(gl.as_lattice)
    if j != j_ind or m != m_ind:
        raise IrreducibleMismatch(
            f"formula irreducibles {sorted(j)}/{sorted(m)} disagree with "
            f"lattice irreducibles {sorted(j_ind)}/{sorted(m_ind)}")
    return j, m


def check_perfect(C: FiniteLattice) -> CheckReport:
    """Every element is a join of join-irreducibles and a meet of
    meet-irreducibles (automatic for finite lattices, checked anyway)."""
    j, m = irreducibles(C)
    ji = [C.index(x) for x in j]
    mi = [C.index(x) for x in m]
    bad = []
    for a in range(C.n):
        if C.join_of([x for x in ji if C.le(x, a)]) != a:
            bad.append(Witness("join-of-irreducibles", (C.name(a),)))
        if C.meet_of([x for x in mi if C.le(a, x)]) != a:
            bad.append(Witness("meet-of-irreducibles", (C.name(a),)))
    return CheckReport.ok() if not bad else CheckReport.fail(bad)


def frame_of_perfect(C: FiniteLattice) -> Frame:
    """The frame (join-irreducibles, meet-irreducibles, order restricted)."""
    rep = check_perfect(C)
    if not rep:
        raise NotPerfect(rep.witnesses[0].elements[0])
    j, m = irreducibles(C)
    x1 = tuple(x for x in C.elements if x in j)
    x2 = tuple(x for x in C.elements if x in m)
    r = frozenset((a, b) for a in x1 for b in x2 if C.le_names(a, b))
    return Frame(x1, x2, r)


def canext_tandem(L: FiniteLattice):
    """Canonical extension via the dual graph and the associated frame:
    G(rho(dual_graph(L))), with the embedding sending a to the set of row
    classes of maximal pairs whose filter part contains a.

    Returns (embedding, GaloisLattice).  The embedding is verified to be a
    dense and compact bounded-lattice embedding, onto in the finite case.
    """
    g = dual_graph(L)
    f = rho(g)
    gl = closed_sets(f)
    cls1 = f.meta["class1"]
    pairs = maximal_pairs(L)
    names = [f"p{i}" for i in range(len(pairs))]

    emb_map = []
    for a in range(L.n):
        s = frozenset(cls1[names[i]] for i, p in enumerate(pairs)
                      if a in p.ones)
        name = _set_name(s)
        if s not in gl.closed_sets:
            raise AssertionError(f"image of {L.name(a)} is not a closed set")
        emb_map.append(gl.as_lattice.index(name))
    emb = LatticeEmbedding(L, gl.as_lattice, tuple(emb_map))
    _verify_canonical(emb)
    return emb, gl


def canext_polarity(L: FiniteLattice):
    """Canonical extension via the filter/ideal polarity: stable sets of
    the frame (filters, ideals, nonempty intersection), represented by
    their filter-side projection.

    Returns (embedding, GaloisLattice over the polarity frame).
    """
    filters, ideals = filters_ideals(L)
    fnames = [f"F{i}" for i in range(len(filters))]
    inames = [f"I{i}" for i in range(len(ideals))]
    r = frozenset((fnames[i], inames[j])
                  for i, F in enumerate(filters)
                  for j, I in enumerate(ideals) if F & I)
    frame = Frame(tuple(fnames), tuple(inames), r)
    gl = closed_sets(frame)

    emb_map = []
    for a in range(L.n):
        up_a = frozenset(L.name(b) for b in L.up(a))
        gen = frozenset({fnames[filters.index(up_a)]})
        s = closure(frame, gen)
        name = _set_name(s)
        assert s in gl.closed_sets
        emb_map.append(gl.as_lattice.index(name))
    emb = LatticeEmbedding(L, gl.as_lattice, tuple(emb_map))
    _verify_canonical(emb)
    return emb, gl


def _verify_canonical(emb: LatticeEmbedding):
    rep = emb.validate()
    if not rep:
        raise AssertionError(f"not an embedding: {rep.witnesses[0]}")
    if not check_dense(emb):
        raise AssertionError("computed extension is not dense")
    if not check_compact(emb):
        raise AssertionError("computed extension is not compact")
    if len(set(emb.map)) != emb.target.n:
        raise EmbeddingNotOnto(
            "a finite lattice is its own canonical extension")


def jinfty_via_maximal_pairs(emb: LatticeEmbedding) -> CheckReport:
    """Check that meets over embedded maximal-pair filters give exactly the
    join-irreducibles of the target (dually for ideals and
    meet-irreducibles), and that irreducibles generate everything."""
    L, C = emb.source, emb.target
    j, m = irreducibles(C)
    meets = set()
    joins = set()
    for p in maximal_pairs(L):
        meets.add(C.name(C.meet_of(emb.apply(a) for a in p.ones)))
        joins.add(C.name(C.join_of(emb.apply(a) for a in p.zeros)))
    bad = []
    if meets != j:
        bad.append(Witness("jinfty", tuple(sorted(meets ^ j))))
    if joins != m:
        bad.append(Witness("minfty", tuple(sorted(joins ^ m))))
    ji = [C.index(x) for x in j]
    mi = [C.index(x) for x in m]
    for c in range(C.n):
        if C.join_of([x for x in ji if C.le(x, c)]) != c:
            bad.append(Witness("join-generation", (C.name(c),)))
        if C.meet_of([x for x in mi if C.le(c, x)]) != c:
            bad.append(Witness("meet-generation", (C.name(c),)))
    return CheckReport.ok() if not bad else CheckReport.fail(bad)
