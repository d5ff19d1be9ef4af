"""The rho/gr correspondence between graphs and frames, the canonical maps
alpha and beta, isomorphism search, morphism validation, functor action on
morphisms, and naturality-square checks.

rho quotients a graph by row/column equality and relates classes through
the complement of E; gr rebuilds a graph from the maximal non-related pairs
of a frame.  On TiRS structures the two are mutually inverse up to the
canonical isomorphisms alpha and beta, and both act on morphisms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import HNotPreserved, IsoVerificationFailed, NotTiRS, NotWellDefined
from .lattice import CheckReport, Witness
from .structures import ConditionReport, Frame, Graph, check_frame, check_graph


@dataclass(frozen=True)
class GraphMorphism:
    source: Graph
    target: Graph
    map: dict

    def __post_init__(self):
        assert set(self.map) == set(self.source.vertices)
        assert set(self.map.values()) <= set(self.target.vertices)

    def apply(self, x: str) -> str:
        return self.map[x]

    def to_json(self) -> dict:
        return {"map": sorted(map(list, self.map.items()))}


@dataclass(frozen=True)
class FrameMorphism:
    source: Frame
    target: Frame
    map1: dict
    map2: dict

    def __post_init__(self):
        assert set(self.map1) == set(self.source.x1)
        assert set(self.map2) == set(self.source.x2)
        assert set(self.map1.values()) <= set(self.target.x1)
        assert set(self.map2.values()) <= set(self.target.x2)

    def to_json(self) -> dict:
        return {"map1": sorted(map(list, self.map1.items())),
                "map2": sorted(map(list, self.map2.items()))}


def compose_graph(m2: GraphMorphism, m1: GraphMorphism) -> GraphMorphism:
    assert m1.target == m2.source
    return GraphMorphism(m1.source, m2.target,
                         {x: m2.map[m1.map[x]] for x in m1.map})


def compose_frame(m2: FrameMorphism, m1: FrameMorphism) -> FrameMorphism:
    assert m1.target == m2.source
    return FrameMorphism(m1.source, m2.target,
                         {x: m2.map1[m1.map1[x]] for x in m1.map1},
                         {y: m2.map2[m1.map2[y]] for y in m1.map2})


def identity_graph_morphism(g: Graph) -> GraphMorphism:
    return GraphMorphism(g, g, {x: x for x in g.vertices})


def identity_frame_morphism(f: Frame) -> FrameMorphism:
    return FrameMorphism(f, f, {x: x for x in f.x1}, {y: y for y in f.x2})


# -- rho and gr ---------------------------------------------------------


def _classes(vertices, key):
    """Partition vertices by key; each class is named after its
    minimal-index representative.  Returns (ordered class names, member map
    vertex -> class name)."""
    by_key = {}
    member = {}
    for v in vertices:
        by_key.setdefault(key(v), []).append(v)
    names = []
    for v in vertices:
        k = key(v)
        rep = by_key[k][0]
        member[v] = rep
        if rep == v:
            names.append(rep)
    return tuple(names), member


def rho(g: Graph) -> Frame:
    """The associated frame of a graph: X1 = row classes, X2 = column
    classes, related iff the underlying pair is NOT an edge.

    Class membership tables are attached as frame metadata under "class1"
    and "class2".
    """
    rows = {x: g.row(x) for x in g.vertices}
    cols = {x: g.col(x) for x in g.vertices}
    x1, cls1 = _classes(g.vertices, lambda v: rows[v])
    x2, cls2 = _classes(g.vertices, lambda v: cols[v])
    r = frozenset((cls1[x], cls2[y])
                  for x in g.vertices for y in g.vertices
                  if not g.has(x, y))
    return Frame(x1, x2, r, {"class1": dict(cls1), "class2": dict(cls2)})


def h_set(f: Frame) -> list[tuple[str, str]]:
    """The H-vertex set of a frame: pairs (x, y) with x not related to y
    that are maximal in the row/column inclusion sense."""
    rows = {x: f.row(x) for x in f.x1}
    cols = {y: f.col(y) for y in f.x2}
    out = []
    for x in f.x1:
        for y in f.x2:
            if f.has(x, y):
                continue
            if not all(f.has(u, y) for u in f.x1
                       if u != x and rows[x] <= rows[u]):
                continue
            if not all(f.has(x, v) for v in f.x2
                       if v != y and cols[y] <= cols[v]):
                continue
            out.append((x, y))
    return out


def _pair_name(x: str, y: str) -> str:
    return f"({x},{y})"


def gr(f: Frame) -> Graph:
    """The associated graph of a frame: vertices are the H-pairs, with an
    edge ((x, y), (w, z)) iff x is not related to z."""
    hs = h_set(f)
    names = {p: _pair_name(*p) for p in hs}
    edges = frozenset((names[(x, y)], names[(w, z)])
                      for (x, y) in hs for (w, z) in hs
                      if not f.has(x, z))
    meta = {names[p]: {"pair": list(p)} for p in hs}
    return Graph(tuple(names[p] for p in hs), edges, meta)


# -- canonical isomorphisms ---------------------------------------------


def _require_tirs(report: ConditionReport):
    for cond, rep in (("reflexive", report.reflexive), ("S", report.condS),
                      ("R", report.condR), ("Ti", report.condTi)):
        if not rep:
            raise NotTiRS(cond, rep.witnesses)


def alpha(g: Graph) -> GraphMorphism:
    """The canonical isomorphism x |-> ([x]_1, [x]_2) from a TiRS graph onto
    gr(rho(g)), verified to be a graph isomorphism."""
    _require_tirs(check_graph(g))
    f = rho(g)
    cls1, cls2 = f.meta["class1"], f.meta["class2"]
    target = gr(f)
    mapping = {}
    tv = set(target.vertices)
    for x in g.vertices:
        v = _pair_name(cls1[x], cls2[x])
        if v not in tv:
            raise IsoVerificationFailed(f"alpha image {v} is not an H-vertex")
        mapping[x] = v
    m = GraphMorphism(g, target, mapping)
    if not _is_graph_iso(m):
        raise IsoVerificationFailed("alpha is not a graph isomorphism")
    return m


def beta(f: Frame) -> FrameMorphism:
    """The canonical isomorphism pair from a TiRS frame onto rho(gr(f)),
    sending x to the row class of any H-pair (x, y) and y to the column
    class of any H-pair (x, y); verified well defined and bijective."""
    _require_tirs(check_frame(f))
    target_graph = gr(f)
    target = rho(target_graph)
    cls1, cls2 = target.meta["class1"], target.meta["class2"]
    hs = h_set(f)
    map1, map2 = {}, {}
    for (x, y) in hs:
        v = _pair_name(x, y)
        if map1.setdefault(x, cls1[v]) != cls1[v]:
            raise IsoVerificationFailed(f"beta_1 ill defined at {x}")
        if map2.setdefault(y, cls2[v]) != cls2[v]:
            raise IsoVerificationFailed(f"beta_2 ill defined at {y}")
    if set(map1) != set(f.x1) or set(map2) != set(f.x2):
        raise IsoVerificationFailed("some point occurs in no H-pair")
    m = FrameMorphism(f, target, map1, map2)
    if not _is_frame_iso(m):
        raise IsoVerificationFailed("beta is not a frame isomorphism")
    return m


def _is_graph_iso(m: GraphMorphism) -> bool:
    g, h = m.source, m.target
    if len(set(m.map.values())) != len(g.vertices):
        return False
    if len(g.vertices) != len(h.vertices):
        return False
    return all(g.has(a, b) == h.has(m.map[a], m.map[b])
               for a in g.vertices for b in g.vertices)


def _is_frame_iso(m: FrameMorphism) -> bool:
    f, g = m.source, m.target
    if len(set(m.map1.values())) != len(f.x1) or len(f.x1) != len(g.x1):
        return False
    if len(set(m.map2.values())) != len(f.x2) or len(f.x2) != len(g.x2):
        return False
    return all(f.has(x, y) == g.has(m.map1[x], m.map2[y])
               for x in f.x1 for y in f.x2)


# -- isomorphism search -------------------------------------------------


def graph_iso(g1: Graph, g2: Graph) -> Optional[dict]:
    """A relation-preserving-and-reflecting bijection g1 -> g2, or None.
    Deterministic first-found witness under degree-profile-pruned
    backtracking."""
    if len(g1.vertices) != len(g2.vertices):
        return None

    def profile(g, v):
        return (len(g.row(v)), len(g.col(v)), g.has(v, v))

    cands = {a: [b for b in g2.vertices if profile(g1, a) == profile(g2, b)]
             for a in g1.vertices}
    order = sorted(g1.vertices, key=lambda a: (len(cands[a]),
                                               g1.vertices.index(a)))
    assign = {}
    used = set()

    def bt(k):
        if k == len(order):
            return True
        a = order[k]
        for b in cands[a]:
            if b in used:
                continue
            if all(g1.has(a, a2) == g2.has(b, b2)
                   and g1.has(a2, a) == g2.has(b2, b)
                   for a2, b2 in assign.items()):
                assign[a] = b
                used.add(b)
                if bt(k + 1):
                    return True
                del assign[a]
                used.discard(b)
        return False

    return dict(assign) if bt(0) else None


def frame_iso(f1: Frame, f2: Frame) -> Optional[tuple[dict, dict]]:
    """A pair of bijections (X1 -> Y1, X2 -> Y2) preserving and reflecting
    R, or None."""
    if len(f1.x1) != len(f2.x1) or len(f1.x2) != len(f2.x2):
        return None

    c1 = {a: [b for b in f2.x1 if len(f1.row(a)) == len(f2.row(b))]
          for a in f1.x1}
    c2 = {a: [b for b in f2.x2 if len(f1.col(a)) == len(f2.col(b))]
          for a in f1.x2}
    # interleave sorts: every slot is (sort, point)
    slots = [(1, x) for x in f1.x1] + [(2, y) for y in f1.x2]
    slots.sort(key=lambda s: len((c1 if s[0] == 1 else c2)[s[1]]))
    a1, a2 = {}, {}
    u1, u2 = set(), set()

    def consistent(sort, a, b):
        if sort == 1:
            return all(f1.has(a, y) == f2.has(b, a2[y]) for y in a2)
        return all(f1.has(x, a) == f2.has(a1[x], b) for x in a1)

    def bt(k):
        if k == len(slots):
            return True
        sort, a = slots[k]
        cands, assign, used = ((c1, a1, u1) if sort == 1 else (c2, a2, u2))
        for b in cands[a]:
            if b in used:
                continue
            if consistent(sort, a, b):
                assign[a] = b
                used.add(b)
                if bt(k + 1):
                    return True
                del assign[a]
                used.discard(b)
        return False

    return (dict(a1), dict(a2)) if bt(0) else None


# -- morphism validation ------------------------------------------------


def validate_graph_morphism(m: GraphMorphism,
                            all_witnesses: bool = False) -> CheckReport:
    """Clauses: (i) edges map to edges; (ii) row inclusion is preserved;
    (iii) column inclusion is preserved."""
    g, h = m.source, m.target
    rows_s = {x: g.row(x) for x in g.vertices}
    cols_s = {x: g.col(x) for x in g.vertices}
    rows_t = {x: h.row(x) for x in h.vertices}
    cols_t = {x: h.col(x) for x in h.vertices}

    def gen():
        for (a, b) in sorted(g.edges):
            if not h.has(m.map[a], m.map[b]):
                yield Witness("i", (a, b))
        for a in g.vertices:
            for b in g.vertices:
                if rows_s[a] <= rows_s[b] and \
                        not (rows_t[m.map[a]] <= rows_t[m.map[b]]):
                    yield Witness("ii", (a, b))
                if cols_s[a] <= cols_s[b] and \
                        not (cols_t[m.map[a]] <= cols_t[m.map[b]]):
                    yield Witness("iii", (a, b))

    out = []
    for w in gen():
        out.append(w)
        if not all_witnesses:
            break
    return CheckReport.ok() if not out else CheckReport.fail(out)


def validate_frame_morphism(m: FrameMorphism,
                            all_witnesses: bool = False) -> CheckReport:
    """Clauses: (i) relation is reflected; (ii)/(iii) row/column inclusion
    preserved; (iv) H-pairs map to H-pairs."""
    f, g = m.source, m.target
    rows_s = {x: f.row(x) for x in f.x1}
    cols_s = {y: f.col(y) for y in f.x2}
    rows_t = {x: g.row(x) for x in g.x1}
    cols_t = {y: g.col(y) for y in g.x2}
    h_t = set(h_set(g))

    def gen():
        for x in f.x1:
            for y in f.x2:
                if g.has(m.map1[x], m.map2[y]) and not f.has(x, y):
                    yield Witness("i", (x, y))
        for x in f.x1:
            for w in f.x1:
                if rows_s[x] <= rows_s[w] and \
                        not (rows_t[m.map1[x]] <= rows_t[m.map1[w]]):
                    yield Witness("ii", (x, w))
        for y in f.x2:
            for z in f.x2:
                if cols_s[y] <= cols_s[z] and \
                        not (cols_t[m.map2[y]] <= cols_t[m.map2[z]]):
                    yield Witness("iii", (y, z))
        for (x, y) in h_set(f):
            if (m.map1[x], m.map2[y]) not in h_t:
                yield Witness("iv", (x, y))

    out = []
    for w in gen():
        out.append(w)
        if not all_witnesses:
            break
    return CheckReport.ok() if not out else CheckReport.fail(out)


# -- functor action on morphisms ----------------------------------------


def rho_mor(m: GraphMorphism) -> FrameMorphism:
    """Image of a graph morphism under rho: classes map to classes of the
    images.  Well-definedness and the frame-morphism clauses are verified
    rather than trusted."""
    src, tgt = rho(m.source), rho(m.target)
    c1s, c2s = src.meta["class1"], src.meta["class2"]
    c1t, c2t = tgt.meta["class1"], tgt.meta["class2"]
    map1, map2 = {}, {}
    for x in m.source.vertices:
        v1 = c1t[m.map[x]]
        if map1.setdefault(c1s[x], v1) != v1:
            raise NotWellDefined(f"row classes collapse inconsistently at {x}")
        v2 = c2t[m.map[x]]
        if map2.setdefault(c2s[x], v2) != v2:
            raise NotWellDefined(f"column classes collapse inconsistently at {x}")
    out = FrameMorphism(src, tgt, map1, map2)
    rep = validate_frame_morphism(out)
    if not rep:
        raise NotWellDefined(f"rho image fails clause {rep.witnesses[0]}")
    return out


def gr_mor(m: FrameMorphism) -> GraphMorphism:
    """Image of a frame morphism under gr: (x, y) |-> (psi1 x, psi2 y).
    Every H-vertex must land on an H-vertex; the graph-morphism clauses are
    verified."""
    src, tgt = gr(m.source), gr(m.target)
    h_t = set(h_set(m.target))
    mapping = {}
    for (x, y) in h_set(m.source):
        img = (m.map1[x], m.map2[y])
        if img not in h_t:
            raise HNotPreserved(f"image of H-pair ({x},{y}) is not in H")
        mapping[_pair_name(x, y)] = _pair_name(*img)
    out = GraphMorphism(src, tgt, mapping)
    rep = validate_graph_morphism(out)
    if not rep:
        raise HNotPreserved(f"gr image fails clause {rep.witnesses[0]}")
    return out


# -- naturality ---------------------------------------------------------


def check_naturality(m) -> CheckReport:
    """Commutativity of the canonical square for a morphism between TiRS
    structures: gr(rho(phi)) o alpha = alpha o phi for graphs, and
    rho(gr(psi)) o beta = beta o psi for frames, checked pointwise."""
    bad = []
    if isinstance(m, GraphMorphism):
        a_src, a_tgt = alpha(m.source), alpha(m.target)
        functor_image = gr_mor(rho_mor(m))
        for x in m.source.vertices:
            if functor_image.map[a_src.map[x]] != a_tgt.map[m.map[x]]:
                bad.append(Witness("naturality", (x,)))
    elif isinstance(m, FrameMorphism):
        b_src, b_tgt = beta(m.source), beta(m.target)
        functor_image = rho_mor(gr_mor(m))
        for x in m.source.x1:
            if functor_image.map1[b_src.map1[x]] != b_tgt.map1[m.map1[x]]:
                bad.append(Witness("naturality-1", (x,)))
        for y in m.source.x2:
            if functor_image.map2[b_src.map2[y]] != b_tgt.map2[m.map2[y]]:
                bad.append(Witness("naturality-2", (y,)))
    else:
        raise TypeError(f"not a morphism: {m!r}")
    return CheckReport.ok() if not bad else CheckReport.fail(bad)
