"""The shared fixture corpus: small lattices, the NT4 graph, the F2x1
frame, and finite truncations of the infinite ladder frame."""

from __future__ import annotations

from .lattice import FiniteLattice, build_lattice
from .structures import Frame, Graph


def c2() -> FiniteLattice:
    return build_lattice(["0", "1"], [("0", "1")])


def c3() -> FiniteLattice:
    return build_lattice(["0", "m", "1"], [("0", "m"), ("m", "1")])


def b2() -> FiniteLattice:
    return build_lattice(["0", "p", "q", "1"],
                         [("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")])


def m3() -> FiniteLattice:
    return build_lattice(["0", "a", "b", "c", "1"],
                         [("0", "a"), ("0", "b"), ("0", "c"),
                          ("a", "1"), ("b", "1"), ("c", "1")])


def n5() -> FiniteLattice:
    return build_lattice(["0", "a", "b", "c", "1"],
                         [("0", "a"), ("0", "b"), ("a", "c"),
                          ("c", "1"), ("b", "1")])


def nt4() -> Graph:
    """Reflexive RS graph that fails (Ti): finite RS graphs need not be
    TiRS, unlike finite RS frames."""
    vs = ("x", "y", "w", "t")
    loops = {(v, v) for v in vs}
    return Graph(vs, frozenset(loops | {("x", "y"), ("w", "x"), ("y", "t")}))


def f2x1() -> Frame:
    """Two first-sort points with equal (empty) rows: fails (S) and (Ti)."""
    return Frame(("x", "x'"), ("y",), frozenset())


def diagonal_frame(names=("a", "b", "c")) -> Frame:
    return Frame(tuple(names), tuple(names),
                 frozenset((a, a) for a in names))


def ladder_truncation(n: int = 3) -> Frame:
    """Finite truncation of the infinite ladder frame whose full version is
    RS but not TiRS.  The truncations are RS *and* Ti: the obstruction is
    essentially infinite."""
    x1 = tuple(f"a{i}" for i in range(n + 1))
    x2 = tuple(f"b{i}" for i in range(n + 1))
    r = {("a1", "b0"), ("a0", "b1")}
    r |= {(f"a{i}", f"b{j}") for i in range(2, n + 1)
          for j in range(1, i + 1) if j <= n}
    return Frame(x1, x2, frozenset(r))


def all_lattices() -> dict:
    return {"C2": c2(), "C3": c3(), "B2": b2(), "M3": m3(), "N5": n5()}
