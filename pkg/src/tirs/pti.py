"""The PTi condition on finite perfect lattices, its frame-level form, and
the bridge suite tying the two together through the closed-set lattice.

PTi asks that every disjoint pair (up x, down y) generated by a
join-irreducible x and a meet-irreducible y extends to a maximal disjoint
pair (up w, down z) with w join-irreducible and z meet-irreducible.  The
maximality clauses quantify over irreducibles only:

  (i)   w <= x and y <= z
  (ii)  w is not below z
  (iii) every join-irreducible u < w lies below z
  (iv)  every meet-irreducible v > z lies above w

Clause (iv) is stated here with the witness z, matching the frame-level
form (strict column inclusion from Rz) via the row/column translation
lemma; stating it from y instead would make even 5-element lattices fail
while their frames satisfy (Ti).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NotPerfect, NotRS
from .lattice import CheckReport, FiniteLattice, Witness
from .structures import Frame, check_frame
from .galois import check_perfect, closed_sets, frame_of_perfect
from .functors import frame_iso


@dataclass(frozen=True)
class PTiWitness:
    x: str
    y: str
    w: Optional[str]
    z: Optional[str]
    status: str  # "satisfied" or "unsatisfiable-pair"


def _pti_pairs(C: FiniteLattice, all_witnesses: bool):
    from .lattice import irreducibles

    j, m = irreducibles(C)
    ji = sorted(C.index(e) for e in j)
    mi = sorted(C.index(e) for e in m)
    witnesses = []
    failures = []
    for x in ji:
        for y in mi:
            if C.le(x, y):
                continue
            found = None
            for w in ji:
                if found:
                    break
                if not C.le(w, x):
                    continue
                for z in mi:
                    if not C.le(y, z) or C.le(w, z):
                        continue
                    if not all(C.le(u, z) for u in ji
                               if C.le(u, w) and u != w):
                        continue
                    if all(C.le(w, v) for v in mi
                           if C.le(z, v) and v != z):
                        found = (w, z)
                        break
            if found:
                witnesses.append(PTiWitness(C.name(x), C.name(y),
                                            C.name(found[0]),
                                            C.name(found[1]), "satisfied"))
            else:
                witnesses.append(PTiWitness(C.name(x), C.name(y), None, None,
                                            "unsatisfiable-pair"))
                failures.append(Witness("PTi", (C.name(x), C.name(y))))
                if not all_witnesses:
                    return witnesses, failures
    return witnesses, failures


def check_pti(C: FiniteLattice, all_witnesses: bool = False):
    """PTi check on a finite perfect lattice.

    Returns (CheckReport, list of PTiWitness); the witness list records the
    chosen (w, z) for every irreducible pair with x not below y.
    """
    perf = check_perfect(C)
    if not perf:
        raise NotPerfect(perf.witnesses[0].elements[0])
    witnesses, failures = _pti_pairs(C, all_witnesses)
    rep = CheckReport.ok() if not failures else CheckReport.fail(failures)
    return rep, witnesses


def check_pti_frame_form(f: Frame, all_witnesses: bool = False) -> CheckReport:
    """The frame-level PTi form: for every non-related (x, y) there are
    (p, q) with x's row inside p's row, y's column inside q's column, p not
    related to q, every other point with a containing row related to q, and
    every other point with a containing column related from p.

    The maximality clauses quantify over points distinct from the witness
    with containing (not necessarily strictly larger) rows/columns; on RS
    frames, where rows and columns are separated, this coincides with the
    strict-inclusion phrasing and keeps non-separated frames such as F2x1
    honest about their maximal-extension failure."""
    rows = {x: f.row(x) for x in f.x1}
    cols = {y: f.col(y) for y in f.x2}

    def witnessed(x, y):
        for p in f.x1:
            if not (rows[x] <= rows[p]):
                continue
            for q in f.x2:
                if f.has(p, q) or not (cols[y] <= cols[q]):
                    continue
                if not all(f.has(u, q) for u in f.x1
                           if u != p and rows[p] <= rows[u]):
                    continue
                if all(f.has(p, v) for v in f.x2
                       if v != q and cols[q] <= cols[v]):
                    return True
        return False

    bad = []
    for x in f.x1:
        for y in f.x2:
            if not f.has(x, y) and not witnessed(x, y):
                bad.append(Witness("PTi-frame", (x, y)))
                if not all_witnesses:
                    return CheckReport.fail(bad)
    return CheckReport.ok() if not bad else CheckReport.fail(bad)


def pti_bridge_suite(f: Frame) -> CheckReport:
    """Instance-level bridge between the frame and lattice forms on an RS
    frame f, with lattice C = closed-set lattice of f:

      (a) if f satisfies (Ti) then C satisfies PTi;
      (b) if C satisfies PTi then the frame of C satisfies (Ti);
      (c) the frame of C is isomorphic to f.

    Implications are evaluated as material conditionals per instance.
    """
    rep = check_frame(f)
    if not rep.is_rs:
        failing = rep.condS if not rep.condS else rep.condR
        raise NotRS("S" if not rep.condS else "R", failing.witnesses)

    gl = closed_sets(f)
    pti_rep, _ = check_pti(gl.as_lattice)
    frame_back = frame_of_perfect(gl.as_lattice)
    bad = []
    if rep.condTi and not pti_rep:
        bad.append(Witness("Ti-implies-PTi", pti_rep.witnesses[0].elements))
    back_rep = check_frame(frame_back)
    if pti_rep and not back_rep.condTi:
        bad.append(Witness("PTi-implies-Ti",
                           back_rep.condTi.witnesses[0].elements))
    if frame_iso(frame_back, f) is None:
        bad.append(Witness("frame-roundtrip", ()))
    return CheckReport.ok() if not bad else CheckReport.fail(bad)
