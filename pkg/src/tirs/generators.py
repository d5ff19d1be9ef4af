"""Seeded random and exhaustive generation of posets, lattices, TiRS graphs
and RS frames for the property sweeps.

Random poset model: each strict pair (i, j) with i < j, visited in a
shuffled order, is included with probability 1/2, then the relation is
transitively closed.  Identical GenSpec values yield identical output.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Optional

from .errors import SizeUnreachable
from .lattice import FiniteLattice, lattice_from_leq, lattice_iso
from .ploscica import dual_graph
from .structures import Frame, Graph, check_frame
from .functors import graph_iso

EXHAUSTIVE_POSET_MAX = 5
EXHAUSTIVE_LATTICE_MAX = 6
EXHAUSTIVE_FRAME_MAX = 3


@dataclass(frozen=True)
class GenSpec:
    kind: str  # poset | lattice | distributive-lattice | tirs-graph | rs-frame
    size: int
    seed: int = 0
    count: int = 1
    exhaustive: bool = False

    def __post_init__(self):
        kinds = {"poset", "lattice", "distributive-lattice", "tirs-graph",
                 "rs-frame"}
        assert self.kind in kinds, f"unknown kind {self.kind}"
        assert self.size >= 1 and self.count >= 1


def _random_strict_order(n: int, rng: random.Random) -> set[tuple[int, int]]:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(pairs)
    rel = set()
    for (i, j) in pairs:
        if rng.random() < 0.5:
            rel.add((i, j))
    changed = True
    while changed:
        changed = False
        for (a, b) in list(rel):
            for c in range(n):
                if (b, c) in rel and (a, c) not in rel:
                    rel.add((a, c))
                    changed = True
    return rel


def _poset_graph(n: int, strict: set[tuple[int, int]]) -> Graph:
    vs = tuple(f"v{i}" for i in range(n))
    edges = frozenset({(vs[i], vs[i]) for i in range(n)}
                      | {(vs[a], vs[b]) for a, b in strict})
    return Graph(vs, edges)


def _enumerate_strict_orders(n: int):
    """All transitively closed subsets of {(i, j) : i < j}.  Every finite
    poset has a linear extension, so this hits every isomorphism class."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(2 ** len(pairs)):
        rel = {p for k, p in enumerate(pairs) if mask >> k & 1}
        if all((a, c) in rel
               for (a, b) in rel for (b2, c) in rel if b2 == b):
            yield rel


def gen_poset(spec: GenSpec) -> list[Graph]:
    """Posets as reflexive transitive graphs.  Exhaustive mode enumerates
    all posets of the given size up to isomorphism."""
    assert spec.kind == "poset"
    if spec.exhaustive:
        assert spec.size <= EXHAUSTIVE_POSET_MAX
        out: list[Graph] = []
        for rel in _enumerate_strict_orders(spec.size):
            g = _poset_graph(spec.size, rel)
            if not any(graph_iso(g, h) for h in out):
                out.append(g)
        return out
    rng = random.Random(spec.seed)
    return [_poset_graph(spec.size, _random_strict_order(spec.size, rng))
            for _ in range(spec.count)]


def _downset_lattice(g: Graph) -> FiniteLattice:
    """Lattice of downsets of a poset graph, ordered by inclusion."""
    downs = {frozenset()}
    for v in g.vertices:
        downs.add(g.col(v))  # principal downset: everything below v
    changed = True
    while changed:
        changed = False
        for a, b in itertools.combinations(list(downs), 2):
            for c in (a | b, a & b):
                if c not in downs:
                    downs.add(c)
                    changed = True
    sets = sorted(downs, key=lambda s: (len(s), sorted(s)))
    names = ["{" + ",".join(sorted(s)) + "}" for s in sets]
    leq = [(names[i], names[j]) for i, si in enumerate(sets)
           for j, sj in enumerate(sets) if si <= sj]
    return lattice_from_leq(names, leq)


def _dm_completion(g: Graph) -> FiniteLattice:
    """Dedekind-MacNeille completion of a poset graph, computed as the
    Galois-closed sets of the order polarity (P, P, <=)."""
    from .galois import closed_sets

    frame = Frame(g.vertices, g.vertices, frozenset(g.edges))
    return closed_sets(frame).as_lattice


def _is_lattice_order(rel_names, names) -> Optional[FiniteLattice]:
    from .errors import NoBounds, NotALattice

    try:
        return lattice_from_leq(names, rel_names)
    except (NotALattice, NoBounds):
        return None


def gen_lattice(spec: GenSpec) -> list[FiniteLattice]:
    """Finite lattices of exactly the requested size.

    distributive-lattice: downset lattices of random posets.
    lattice: Dedekind-MacNeille completions of random posets.
    Exhaustive mode enumerates all lattices of the size up to isomorphism.
    Raises SizeUnreachable if the target size cannot be hit.
    """
    assert spec.kind in ("lattice", "distributive-lattice")
    if spec.exhaustive:
        assert spec.size <= EXHAUSTIVE_LATTICE_MAX
        out: list[FiniteLattice] = []
        names = [f"e{i}" for i in range(spec.size)]
        for rel in _enumerate_strict_orders(spec.size):
            pairs = [(names[i], names[i]) for i in range(spec.size)]
            pairs += [(names[a], names[b]) for a, b in rel]
            lat = _is_lattice_order(pairs, names)
            if lat is None:
                continue
            if spec.kind == "distributive-lattice":
                from .lattice import is_distributive
                if not is_distributive(lat):
                    continue
            if not any(lattice_iso(lat, other) for other in out):
                out.append(lat)
        return out

    rng = random.Random(spec.seed)
    out = []
    attempts = 0
    max_attempts = 400 * spec.count
    while len(out) < spec.count:
        attempts += 1
        if attempts > max_attempts:
            raise SizeUnreachable(
                f"no {spec.kind} of size {spec.size} after {attempts} tries")
        base = max(1, spec.size - rng.randrange(0, 3))
        g = _poset_graph(base, _random_strict_order(base, rng))
        lat = (_downset_lattice(g) if spec.kind == "distributive-lattice"
               else _dm_completion(g))
        if lat.n == spec.size:
            out.append(lat)
    return out


def gen_rs_frame(spec: GenSpec) -> list[Frame]:
    """RS frames with both sides of the given size: rejection-sampled random
    relations, or (exhaustive) all relation patterns that pass RS."""
    assert spec.kind == "rs-frame"
    x1 = tuple(f"x{i}" for i in range(spec.size))
    x2 = tuple(f"y{i}" for i in range(spec.size))
    cells = [(a, b) for a in x1 for b in x2]
    if spec.exhaustive:
        assert spec.size <= EXHAUSTIVE_FRAME_MAX
        out = []
        for mask in range(2 ** len(cells)):
            r = frozenset(c for k, c in enumerate(cells) if mask >> k & 1)
            f = Frame(x1, x2, r)
            if check_frame(f).is_rs:
                out.append(f)
        return out
    rng = random.Random(spec.seed)
    out = []
    attempts = 0
    while len(out) < spec.count:
        attempts += 1
        if attempts > 2000 * spec.count:
            raise SizeUnreachable(
                f"no RS frame at size {spec.size} after {attempts} tries")
        r = frozenset(c for c in cells if rng.random() < 0.5)
        f = Frame(x1, x2, r)
        if check_frame(f).is_rs:
            out.append(f)
    return out


def gen_tirs_graph(spec: GenSpec) -> list[Graph]:
    """TiRS graphs: dual graphs of generated lattices plus generated
    posets (every poset is a TiRS graph)."""
    assert spec.kind == "tirs-graph"
    posets = gen_poset(GenSpec("poset", spec.size, spec.seed, spec.count,
                               spec.exhaustive))
    out = list(posets)
    try:
        lats = gen_lattice(GenSpec("lattice", max(2, spec.size), spec.seed,
                                   spec.count, spec.exhaustive))
    except SizeUnreachable:
        lats = []
    out.extend(dual_graph(lat) for lat in lats if lat.n >= 2)
    return out


def generate(spec: GenSpec):
    if spec.kind == "poset":
        return gen_poset(spec)
    if spec.kind in ("lattice", "distributive-lattice"):
        return gen_lattice(spec)
    if spec.kind == "rs-frame":
        return gen_rs_frame(spec)
    return gen_tirs_graph(spec)


def random_monotone_map(p: Graph, q: Graph,
                        rng: random.Random) -> Optional[dict]:
    """A monotone map between poset graphs, chosen by seeded backtracking;
    None if the search fails (cannot happen when q has a least element,
    but kept defensive)."""
    order = sorted(p.vertices, key=lambda v: len(p.col(v)))  # linear ext
    targets = list(q.vertices)
    assign: dict[str, str] = {}

    def bt(k):
        if k == len(order):
            return True
        v = order[k]
        cand = targets[:]
        rng.shuffle(cand)
        for t in cand:
            if all(not p.has(u, v) or q.has(assign[u], t) for u in assign) \
                    and all(not p.has(v, u) or q.has(t, assign[u])
                            for u in assign):
                assign[v] = t
                if bt(k + 1):
                    return True
                del assign[v]
        return False

    return dict(assign) if bt(0) else None
