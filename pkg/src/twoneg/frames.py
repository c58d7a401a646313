"""Relational frames for the two-negation languages.

Three kinds:

* `SubNormalFrame` (W, <=, Y0): both negations read off the order; Y0 is the
  upset of "queer" worlds, exactly where `~top` holds.
* `NhatFrame` (W, <=, R1, R2): each negation is an impossibility modality
  with its own accessibility relation, `!` over R1 and `~` over R2.
* `CompatFrame` (W, C, <=): implication-free language; `!` reads off the
  order and `~` off the compatibility relation C.

Builders close <= reflexively/transitively and *validate* the kind's frame
conditions; the R/C relations are taken as given, never repaired.  Raw
dataclass construction skips validation, which the canonicity tests use to
probe frames that violate a condition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .algebra import Verdict, VALID
from .errors import BoundGuardError, FrameError
from .formula import (And, Atom, Bot, Formula, Impl, Neg, Or, Tilde, Top,
                      atoms, contains_impl)
from .lattice import Table, transitive_reduction, upsets_of

__all__ = [
    "SubNormalFrame", "NhatFrame", "CompatFrame", "Frame", "FrameModel",
    "build_subnormal", "build_nhat", "build_compat",
    "condition_d", "is_identity", "nhat_condition3", "is_nhat_prime",
    "subcompat_violation", "compat_condition3", "is_compat_identity",
    "truth_set", "truth_at", "frame_valid", "frame_sequent_valid",
    "tilde_top_worlds", "dne_tilde_top_holds", "frame_upsets",
    "read_frame", "write_frame",
]


@dataclass(frozen=True)
class SubNormalFrame:
    worlds: tuple[str, ...]
    leq: Table
    y0: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.worlds)

    def index(self, name: str) -> int:
        try:
            return self.worlds.index(name)
        except ValueError:
            raise FrameError("unknown-world", name) from None


@dataclass(frozen=True)
class NhatFrame:
    worlds: tuple[str, ...]
    leq: Table
    rn1: Table
    rn2: Table

    @property
    def size(self) -> int:
        return len(self.worlds)

    def index(self, name: str) -> int:
        try:
            return self.worlds.index(name)
        except ValueError:
            raise FrameError("unknown-world", name) from None


@dataclass(frozen=True)
class CompatFrame:
    worlds: tuple[str, ...]
    leq: Table
    c: Table

    @property
    def size(self) -> int:
        return len(self.worlds)

    def index(self, name: str) -> int:
        try:
            return self.worlds.index(name)
        except ValueError:
            raise FrameError("unknown-world", name) from None


Frame = Union[SubNormalFrame, NhatFrame, CompatFrame]


def _close_order(worlds: tuple[str, ...], pairs) -> Table:
    n = len(worlds)
    idx = {w: i for i, w in enumerate(worlds)}
    if len(idx) != n:
        raise FrameError("duplicate-world", worlds)
    leq = [[i == j for j in range(n)] for i in range(n)]
    for a, b in pairs:
        if a not in idx or b not in idx:
            raise FrameError("relation-out-of-range", (a, b))
        leq[idx[a]][idx[b]] = True
    for k in range(n):
        for i in range(n):
            if leq[i][k]:
                for j in range(n):
                    if leq[k][j]:
                        leq[i][j] = True
    for i in range(n):
        for j in range(i + 1, n):
            if leq[i][j] and leq[j][i]:
                raise FrameError("condition-violation",
                                 ("poset", (worlds[i], worlds[j])), "order cycle")
    return tuple(tuple(row) for row in leq)


def _relation(worlds: tuple[str, ...], pairs) -> Table:
    n = len(worlds)
    idx = {w: i for i, w in enumerate(worlds)}
    rel = [[False] * n for _ in range(n)]
    for a, b in pairs:
        if a not in idx or b not in idx:
            raise FrameError("relation-out-of-range", (a, b))
        rel[idx[a]][idx[b]] = True
    return tuple(tuple(row) for row in rel)


def _is_upset(leq: Table, s: frozenset[int]) -> bool:
    return all(j in s for i in s for j in range(len(leq)) if leq[i][j])


# -- sub-normal ---------------------------------------------------------------

def condition_d(fr: SubNormalFrame) -> str | None:
    """Witness world violating: every world all of whose successors reach Y0
    must itself lie in Y0.  None when the condition holds."""
    n = fr.size
    for x in range(n):
        if x in fr.y0:
            continue
        if all(any(fr.leq[y][z] and z in fr.y0 for z in range(n))
               for y in range(n) if fr.leq[x][y]):
            return fr.worlds[x]
    return None


def is_identity(fr: SubNormalFrame) -> bool:
    """Condition (E): <= restricted to the non-queer worlds is symmetric."""
    n = fr.size
    return all(fr.leq[y][x]
               for x in range(n) if x not in fr.y0
               for y in range(n) if y not in fr.y0 and fr.leq[x][y])


def build_subnormal(worlds, leq_pairs, y0_names) -> SubNormalFrame:
    ws = tuple(worlds)
    leq = _close_order(ws, leq_pairs)
    idx = {w: i for i, w in enumerate(ws)}
    for w in y0_names:
        if w not in idx:
            raise FrameError("relation-out-of-range", ("y0", w))
    y0 = frozenset(idx[w] for w in y0_names)
    fr = SubNormalFrame(ws, leq, y0)
    if not _is_upset(leq, y0):
        raise FrameError("y0-not-upset", tuple(sorted(ws[i] for i in y0)))
    w = condition_d(fr)
    if w is not None:
        raise FrameError("condition-violation", ("D", w))
    return fr


# -- N-hat --------------------------------------------------------------------

def _stability_witness(leq: Table, r: Table):
    # (<= ; R ; >=) subset of R: x' <= x, x R y, y' <= y  =>  x' R y'.
    n = len(leq)
    for x in range(n):
        for y in range(n):
            if not r[x][y]:
                continue
            for xp in range(n):
                if not leq[xp][x]:
                    continue
                for yp in range(n):
                    if leq[yp][y] and not r[xp][yp]:
                        return (xp, x, y, yp)
    return None


def _condensation_witness(leq: Table, r: Table):
    # x R y  =>  some z above both with x R z.
    n = len(leq)
    for x in range(n):
        for y in range(n):
            if r[x][y] and not any(leq[x][z] and leq[y][z] and r[x][z]
                                   for z in range(n)):
                return (x, y)
    return None


def _symmetry_witness(r: Table):
    n = len(r)
    for x in range(n):
        for y in range(n):
            if r[x][y] != r[y][x]:
                return (x, y)
    return None


def nhat_condition3(fr: NhatFrame) -> str | None:
    """Witness world x where `!!~top` would hold but `~top` would not."""
    n = fr.size
    quiet = [not any(fr.rn2[x]) for x in range(n)]
    for x in range(n):
        if quiet[x]:
            continue
        if all(any(fr.rn1[y][z] and quiet[z] for z in range(n))
               for y in range(n) if fr.rn1[x][y]):
            return fr.worlds[x]
    return None


def is_nhat_prime(fr: NhatFrame) -> bool:
    """R2 contained in the converse order."""
    n = fr.size
    return all(fr.leq[y][x] for x in range(n) for y in range(n) if fr.rn2[x][y])


def nhat_violations(fr: NhatFrame) -> list[tuple[str, tuple]]:
    out = []
    for tag, rel in (("R1", fr.rn1), ("R2", fr.rn2)):
        w = _stability_witness(fr.leq, rel)
        if w is not None:
            out.append((f"{tag}-stability", tuple(fr.worlds[i] for i in w)))
        w = _symmetry_witness(rel)
        if w is not None:
            out.append((f"{tag}-symmetry", tuple(fr.worlds[i] for i in w)))
        w = _condensation_witness(fr.leq, rel)
        if w is not None:
            out.append((f"{tag}-condensation", tuple(fr.worlds[i] for i in w)))
    for x in range(fr.size):
        if not fr.rn1[x][x]:
            out.append(("R1-reflexivity", (fr.worlds[x],)))
            break
    w3 = nhat_condition3(fr)
    if w3 is not None:
        out.append(("3", (w3,)))
    return out


def build_nhat(worlds, leq_pairs, rn1_pairs, rn2_pairs) -> NhatFrame:
    ws = tuple(worlds)
    leq = _close_order(ws, leq_pairs)
    fr = NhatFrame(ws, leq, _relation(ws, rn1_pairs), _relation(ws, rn2_pairs))
    bad = nhat_violations(fr)
    if bad:
        raise FrameError("condition-violation", bad[0])
    return fr


# -- compatibility ------------------------------------------------------------

def compat_law_witness(fr: CompatFrame):
    """Downward-closure law (C): x' <= x, y' <= y, x C y  =>  x' C y'."""
    return _stability_witness(fr.leq, fr.c)


def compat_condition3(fr: CompatFrame) -> str | None:
    n = fr.size
    quiet = [not any(fr.c[x]) for x in range(n)]
    for x in range(n):
        if quiet[x]:
            continue
        if all(any(fr.leq[y][z] and quiet[z] for z in range(n))
               for y in range(n) if fr.leq[x][y]):
            return fr.worlds[x]
    return None


def subcompat_violation(fr: CompatFrame) -> tuple[str, tuple] | None:
    w = _symmetry_witness(fr.c)
    if w is not None:
        return ("C-symmetry", tuple(fr.worlds[i] for i in w))
    w = _condensation_witness(fr.leq, fr.c)
    if w is not None:
        return ("C-condensation", tuple(fr.worlds[i] for i in w))
    w3 = compat_condition3(fr)
    if w3 is not None:
        return ("3", (w3,))
    return None


def is_subcompat(fr: CompatFrame) -> bool:
    return subcompat_violation(fr) is None


def is_compat_identity(fr: CompatFrame) -> bool:
    n = fr.size
    return all(fr.leq[y][x] for x in range(n) for y in range(n) if fr.c[x][y])


def build_compat(worlds, leq_pairs, c_pairs, *, require_subcompat: bool = False) -> CompatFrame:
    ws = tuple(worlds)
    leq = _close_order(ws, leq_pairs)
    fr = CompatFrame(ws, leq, _relation(ws, c_pairs))
    w = compat_law_witness(fr)
    if w is not None:
        raise FrameError("condition-violation",
                         ("C-law", tuple(ws[i] for i in w)))
    if require_subcompat:
        bad = subcompat_violation(fr)
        if bad is not None:
            raise FrameError("condition-violation", bad)
    return fr


# -- truth and validity -------------------------------------------------------

@dataclass(frozen=True)
class FrameModel:
    """A frame plus an upset-valued valuation (checked at construction)."""

    frame: Frame
    valuation: dict[str, frozenset[int]]

    def __post_init__(self):
        for name, s in self.valuation.items():
            if not _is_upset(self.frame.leq, s):
                raise FrameError("valuation-not-upset", name)

    def truth(self, world: str, f: Formula) -> bool:
        return truth_at(self.frame, self.valuation, world, f)


def truth_set(fr: Frame, valuation: dict[str, frozenset[int]], f: Formula) -> frozenset[int]:
    """Worlds where f holds; `bot` holds nowhere in every kind."""
    n = fr.size
    every = frozenset(range(n))

    def rec(g: Formula) -> frozenset[int]:
        match g:
            case Top():
                return every
            case Bot():
                return frozenset()
            case Atom(name):
                if name not in valuation:
                    raise FrameError("unbound-atom", name)
                return valuation[name]
            case And(l, r):
                return rec(l) & rec(r)
            case Or(l, r):
                return rec(l) | rec(r)
            case Impl(l, r):
                if isinstance(fr, CompatFrame):
                    raise FrameError("wrong-language", g)
                left, right = rec(l), rec(r)
                return frozenset(
                    w for w in range(n)
                    if all(v in right for v in range(n)
                           if fr.leq[w][v] and v in left))
            case Neg(c):
                body = rec(c)
                rel = fr.rn1 if isinstance(fr, NhatFrame) else fr.leq
                return frozenset(
                    w for w in range(n)
                    if all(v not in body for v in range(n) if rel[w][v]))
            case Tilde(c):
                body = rec(c)
                if isinstance(fr, SubNormalFrame):
                    return frozenset(
                        w for w in range(n)
                        if all(v in fr.y0 for v in range(n)
                               if fr.leq[w][v] and v in body))
                rel = fr.rn2 if isinstance(fr, NhatFrame) else fr.c
                return frozenset(
                    w for w in range(n)
                    if all(v not in body for v in range(n) if rel[w][v]))
        raise TypeError(f"not a formula: {g!r}")

    return rec(f)


def truth_at(fr: Frame, valuation: dict[str, frozenset[int]], world: str, f: Formula) -> bool:
    return fr.index(world) in truth_set(fr, valuation, f)


@lru_cache(maxsize=256)
def frame_upsets(leq: Table) -> tuple[frozenset[int], ...]:
    return tuple(upsets_of(leq))


def _check_guards(fr: Frame, names: list[str], max_worlds, max_atoms, force):
    if force:
        return
    if max_worlds is not None and fr.size > max_worlds:
        raise BoundGuardError("frame worlds", max_worlds, fr.size)
    if max_atoms is not None and len(names) > max_atoms:
        raise BoundGuardError("valuation atoms", max_atoms, len(names))


def _witness_valuation(fr: Frame, names: list[str], combo) -> dict[str, tuple[str, ...]]:
    return {name: tuple(fr.worlds[i] for i in sorted(s))
            for name, s in zip(names, combo)}


def frame_valid(fr: Frame, f: Formula, *, max_worlds: int | None = 10,
                max_atoms: int | None = 3, force: bool = False) -> Verdict:
    """Exhaust all assignments of atoms to upsets, in (cardinality, lexicographic)
    order; the first falsifying valuation and world are reported."""
    if isinstance(fr, CompatFrame) and contains_impl(f):
        raise FrameError("wrong-language", f)
    names = atoms(f)
    _check_guards(fr, names, max_worlds, max_atoms, force)
    ups = frame_upsets(fr.leq)
    every = frozenset(range(fr.size))
    for combo in itertools.product(ups, repeat=len(names)):
        holds = truth_set(fr, dict(zip(names, combo)), f)
        if holds != every:
            world = min(set(range(fr.size)) - holds)
            return Verdict(False, _witness_valuation(fr, names, combo),
                           fr.worlds[world])
    return VALID


def frame_sequent_valid(fr: Frame, lhs: Formula, rhs: Formula, *,
                        max_worlds: int | None = 10, max_atoms: int | None = 3,
                        force: bool = False) -> Verdict:
    """Pointwise truth implication under every upset valuation."""
    if isinstance(fr, CompatFrame) and (contains_impl(lhs) or contains_impl(rhs)):
        raise FrameError("wrong-language", lhs)
    names = atoms(And(lhs, rhs))
    _check_guards(fr, names, max_worlds, max_atoms, force)
    ups = frame_upsets(fr.leq)
    for combo in itertools.product(ups, repeat=len(names)):
        val = dict(zip(names, combo))
        left = truth_set(fr, val, lhs)
        right = truth_set(fr, val, rhs)
        if not left <= right:
            world = min(left - right)
            return Verdict(False, _witness_valuation(fr, names, combo),
                           fr.worlds[world])
    return VALID


# -- valuation-free canonicity ------------------------------------------------

def tilde_top_worlds(fr: Frame) -> frozenset[int]:
    """Worlds where `~top` holds; depends only on the frame."""
    if isinstance(fr, SubNormalFrame):
        return fr.y0
    rel = fr.rn2 if isinstance(fr, NhatFrame) else fr.c
    return frozenset(x for x in range(fr.size) if not any(rel[x]))


def dne_tilde_top_holds(fr: Frame) -> bool:
    """Whether `!!~top -> ~top` is frame-valid; decided without valuations."""
    quiet = tilde_top_worlds(fr)
    rel = fr.rn1 if isinstance(fr, NhatFrame) else fr.leq
    n = fr.size
    for x in range(n):
        if x in quiet:
            continue
        if all(any(rel[y][z] and z in quiet for z in range(n))
               for y in range(n) if rel[x][y]):
            return False
    return True


# -- frame files --------------------------------------------------------------

def read_frame(text: str) -> Frame:
    from .errors import FileFormatError
    kind = ""
    name = ""
    worlds: list[str] = []
    leq_pairs: list[tuple[str, str]] = []
    y0: list[str] = []
    rn1: list[tuple[str, str]] = []
    rn2: list[tuple[str, str]] = []
    c: list[tuple[str, str]] = []
    ended = False
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ended:
            raise FileFormatError("trailing-content", line)
        words = line.split()
        match words:
            case ["frame", k, nm]:
                kind, name = k, nm
            case ["worlds", *rest] if rest:
                worlds.extend(rest)
            case ["leq", a, b]:
                leq_pairs.append((a, b))
            case ["y0", *rest]:
                y0.extend(rest)
            case ["rn1", a, b]:
                rn1.append((a, b))
            case ["rn2", a, b]:
                rn2.append((a, b))
            case ["c", a, b]:
                c.append((a, b))
            case ["end"]:
                ended = True
            case _:
                raise FileFormatError("bad-line", line)
    if not ended:
        raise FileFormatError("missing-end", None)
    if kind == "subnormal":
        return build_subnormal(worlds, leq_pairs, y0)
    if kind == "nhat":
        return build_nhat(worlds, leq_pairs, rn1, rn2)
    if kind == "compat":
        return build_compat(worlds, leq_pairs, c)
    raise FileFormatError("unknown-frame-kind", kind)


def write_frame(fr: Frame, name: str = "frame") -> str:
    kind = {SubNormalFrame: "subnormal", NhatFrame: "nhat", CompatFrame: "compat"}[type(fr)]
    lines = [f"frame {kind} {name}", "worlds " + " ".join(fr.worlds)]
    for a, b in transitive_reduction(fr.leq):
        lines.append(f"leq {fr.worlds[a]} {fr.worlds[b]}")
    if isinstance(fr, SubNormalFrame):
        if fr.y0:
            lines.append("y0 " + " ".join(fr.worlds[i] for i in sorted(fr.y0)))
    elif isinstance(fr, NhatFrame):
        for tag, rel in (("rn1", fr.rn1), ("rn2", fr.rn2)):
            for x in range(fr.size):
                for y in range(fr.size):
                    if rel[x][y]:
                        lines.append(f"{tag} {fr.worlds[x]} {fr.worlds[y]}")
    else:
        for x in range(fr.size):
            for y in range(fr.size):
                if fr.c[x][y]:
                    lines.append(f"c {fr.worlds[x]} {fr.worlds[y]}")
    lines.append("end")
    return "\n".join(lines) + "\n"
