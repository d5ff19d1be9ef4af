"""Graph and frame carriers with witnessed condition checkers.

A graph is a set of vertices with a binary relation E; a frame is a
two-sorted structure (X1, X2, R) with R between the sorts.  The checkers
evaluate reflexivity and the separation (S), reducedness (R) and maximal
extension (Ti) conditions literally by quantifier sweep, reporting the
first witness in lexicographic scan order (all witnesses behind a flag).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lattice import CheckReport, Witness


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: frozenset[tuple[str, str]]
    # optional per-vertex metadata (e.g. the maximal pair behind a dual-graph
    # vertex); not part of equality
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        vs = set(self.vertices)
        assert all(a in vs and b in vs for a, b in self.edges)

    def row(self, x: str) -> frozenset[str]:
        """xE = successors of x."""
        return frozenset(b for a, b in self.edges if a == x)

    def col(self, x: str) -> frozenset[str]:
        """Ex = predecessors of x."""
        return frozenset(a for a, b in self.edges if b == x)

    def has(self, a: str, b: str) -> bool:
        return (a, b) in self.edges

    def to_json(self) -> dict:
        d = {"vertices": list(self.vertices),
             "edges": sorted(map(list, self.edges))}
        if self.meta:
            d["meta"] = {k: v for k, v in sorted(self.meta.items())}
        return d


@dataclass(frozen=True)
class Frame:
    x1: tuple[str, ...]
    x2: tuple[str, ...]
    r: frozenset[tuple[str, str]]
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        s1, s2 = set(self.x1), set(self.x2)
        assert all(a in s1 and b in s2 for a, b in self.r)

    def row(self, x: str) -> frozenset[str]:
        """xR."""
        return frozenset(b for a, b in self.r if a == x)

    def col(self, y: str) -> frozenset[str]:
        """Ry."""
        return frozenset(a for a, b in self.r if b == y)

    def has(self, x: str, y: str) -> bool:
        return (x, y) in self.r

    def to_json(self) -> dict:
        d = {"x1": list(self.x1), "x2": list(self.x2),
             "r": sorted(map(list, self.r))}
        if self.meta:
            d["meta"] = {k: v for k, v in sorted(self.meta.items())}
        return d


@dataclass(frozen=True)
class ConditionReport:
    reflexive: CheckReport
    condS: CheckReport
    condR: CheckReport
    condTi: CheckReport

    @property
    def is_rs(self) -> bool:
        return bool(self.condS and self.condR)

    @property
    def is_tirs(self) -> bool:
        return bool(self.reflexive and self.condS and self.condR
                    and self.condTi)

    def to_json(self) -> dict:
        def rep(r):
            return {"verdict": r.verdict,
                    "witnesses": [{"condition": w.condition,
                                   "elements": list(w.elements)}
                                  for w in r.witnesses]}
        return {"reflexive": rep(self.reflexive), "S": rep(self.condS),
                "R": rep(self.condR), "Ti": rep(self.condTi)}


def _collect(gen, all_witnesses):
    out = []
    for w in gen:
        out.append(w)
        if not all_witnesses:
            break
    return CheckReport.ok() if not out else CheckReport.fail(out)


def check_graph(g: Graph, all_witnesses: bool = False) -> ConditionReport:
    """Evaluate reflexivity, (S), (R)(i)+(ii) and (Ti) on a graph.

    The graph is TiRS iff all four verdicts are true.
    """
    rows = {x: g.row(x) for x in g.vertices}
    cols = {x: g.col(x) for x in g.vertices}
    vs = g.vertices

    def refl():
        for x in vs:
            if not g.has(x, x):
                yield Witness("reflexive", (x,))

    def cond_s():
        for i, x in enumerate(vs):
            for y in vs[i + 1:]:
                if rows[x] == rows[y] and cols[x] == cols[y]:
                    yield Witness("S", (x, y))

    def cond_r():
        for z in vs:
            for x in vs:
                if rows[z] < rows[x] and g.has(z, x):
                    yield Witness("R(i)", (z, x))
        for y in vs:
            for z in vs:
                if cols[z] < cols[y] and g.has(y, z):
                    yield Witness("R(ii)", (y, z))

    def cond_ti():
        for x in vs:
            for y in vs:
                if not g.has(x, y):
                    continue
                if not any(rows[z] <= rows[x] and cols[z] <= cols[y]
                           for z in vs):
                    yield Witness("Ti", (x, y))

    return ConditionReport(
        reflexive=_collect(refl(), all_witnesses),
        condS=_collect(cond_s(), all_witnesses),
        condR=_collect(cond_r(), all_witnesses),
        condTi=_collect(cond_ti(), all_witnesses),
    )


def check_frame(f: Frame, all_witnesses: bool = False) -> ConditionReport:
    """Evaluate frame (S), (R) and (Ti).  RS iff (S) and (R) hold; TiRS iff
    additionally (Ti).  The reflexive slot is vacuously true (no reflexivity
    notion on two-sorted structures)."""
    rows = {x: f.row(x) for x in f.x1}
    cols = {y: f.col(y) for y in f.x2}

    def cond_s():
        for i, a in enumerate(f.x1):
            for b in f.x1[i + 1:]:
                if rows[a] == rows[b]:
                    yield Witness("S(i)", (a, b))
        for i, a in enumerate(f.x2):
            for b in f.x2[i + 1:]:
                if cols[a] == cols[b]:
                    yield Witness("S(ii)", (a, b))

    def cond_r():
        for x in f.x1:
            ok = any(not f.has(x, y)
                     and all(f.has(w, y) for w in f.x1
                             if w != x and rows[x] <= rows[w])
                     for y in f.x2)
            if not ok:
                yield Witness("R(i)", (x,))
        for y in f.x2:
            ok = any(not f.has(x, y)
                     and all(f.has(x, z) for z in f.x2
                             if z != y and cols[y] <= cols[z])
                     for x in f.x1)
            if not ok:
                yield Witness("R(ii)", (y,))

    def ti_witnessed(x, y):
        for w in f.x1:
            if not (rows[x] <= rows[w]):
                continue
            for z in f.x2:
                if f.has(w, z) or not (cols[y] <= cols[z]):
                    continue
                if not all(f.has(u, z) for u in f.x1
                           if u != w and rows[w] <= rows[u]):
                    continue
                if all(f.has(w, v) for v in f.x2
                       if v != z and cols[z] <= cols[v]):
                    return True
        return False

    def cond_ti():
        for x in f.x1:
            for y in f.x2:
                if not f.has(x, y) and not ti_witnessed(x, y):
                    yield Witness("Ti", (x, y))

    return ConditionReport(
        reflexive=CheckReport.ok(),
        condS=_collect(cond_s(), all_witnesses),
        condR=_collect(cond_r(), all_witnesses),
        condTi=_collect(cond_ti(), all_witnesses),
    )


def is_poset_graph(g: Graph, all_witnesses: bool = False) -> CheckReport:
    """True iff E is reflexive, transitive and antisymmetric (the Birkhoff
    special case: dual graphs of distributive lattices are posets)."""
    def gen():
        for x in g.vertices:
            if not g.has(x, x):
                yield Witness("reflexive", (x,))
        for x, y in sorted(g.edges):
            if x != y and g.has(y, x):
                yield Witness("antisymmetric", (x, y))
        for x, y in sorted(g.edges):
            for z in sorted(g.row(y)):
                if not g.has(x, z):
                    yield Witness("transitive", (x, y, z))

    return _collect(gen(), all_witnesses)
