"""Graded arc systems on the disk of the perfect derived category of A_n.

Green points m_0..m_n sit counterclockwise on the boundary, one red point
on each boundary segment.  The red arc a_t (t >= 1) cuts off m_t, and the
central polygon they bound contains m_0.  The arc joining m_s and m_t
crosses a_s and a_t when s >= 1 and only a_t when s = 0.

Gradings are integers at red-arc crossings.  For s >= 1 the two indices
differ by one, with the larger at a_t: following the arc from m_s through
the central polygon to m_t raises the index by one.  An arc with indices
(0 at a_s, 1 at a_t) is the complex P(t) -> P(s), a fan arc (m_0, m_t) with
index z is P(t)[z].

Intersection bookkeeping: every arc has one index per endpoint (the index
seen at that end).  At a shared endpoint m, the arc further to the left
(larger counterclockwise offset (u - m) mod (n+1) of its other end u)
carries a morphism to the one on the right in degree e_left - e_right.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import product

from . import config
from .complexes import TwoTermComplex, presentation_complex, stalk
from .planar import crosses, faces
from .quiver import Arrow, BoundQuiverAlgebra, Quiver


@dataclass(frozen=True, order=True)
class GradedArc:
    s: int
    t: int
    index_t: int
    index_s: int | None = None

    def __post_init__(self):
        if not (0 <= self.s < self.t):
            raise ValueError(f"bad endpoints ({self.s}, {self.t})")
        if self.s == 0 and self.index_s is not None:
            raise ValueError("a fan arc crosses only a_t")
        if self.s >= 1 and self.index_s != self.index_t - 1:
            raise ValueError("indices of an arc through the central polygon differ by one")

    @classmethod
    def fan(cls, t: int, z: int) -> "GradedArc":
        return cls(0, t, z)

    @classmethod
    def inner(cls, s: int, t: int, shift: int = 0) -> "GradedArc":
        """Arc m_s -- m_t with index shift at a_s and shift + 1 at a_t."""
        return cls(s, t, shift + 1, shift)

    @property
    def chord(self) -> tuple[int, int]:
        return (self.s, self.t)

    @property
    def shift(self) -> int:
        """Index at the first red arc crossed: a_s, or a_t for a fan arc."""
        return self.index_t if self.s == 0 else self.index_s

    def is_2term(self) -> bool:
        return all(i in (0, 1) for i in self.indices().values())

    def indices(self) -> dict[str, int]:
        if self.s == 0:
            return {"a_t": self.index_t}
        return {"a_s": self.index_s, "a_t": self.index_t}

    def label(self) -> str:
        if self.s == 0:
            return f"g(0,{self.t})^{self.index_t}"
        return f"g({self.s},{self.t})^{self.index_s}"

    def to_dict(self):
        return {"s": self.s, "t": self.t, "indices": self.indices()}

    @classmethod
    def from_dict(cls, d):
        ind = d["indices"]
        return cls(int(d["s"]), int(d["t"]), int(ind["a_t"]),
                   None if int(d["s"]) == 0 else int(ind["a_s"]))


def endpoint_index(g: GradedArc, m: int) -> int:
    if m == g.t:
        return g.index_t
    if m == g.s:
        return g.index_t if g.s == 0 else g.index_s
    raise ValueError(f"m_{m} is not an endpoint of {g.label()}")


def _offset(m: int, u: int, n: int) -> int:
    return (u - m) % (n + 1)


def is_left_of(g1: GradedArc, g2: GradedArc, m: int, n: int) -> bool:
    """At the shared endpoint m, is g1 to the left of g2?"""
    o1 = _offset(m, g1.s if g1.t == m else g1.t, n)
    o2 = _offset(m, g2.s if g2.t == m else g2.t, n)
    if o1 == o2:
        raise ValueError("same chord")
    return o1 > o2


def intersection_index(g1: GradedArc, g2: GradedArc, m: int, n: int) -> int:
    """Index of the boundary intersection at m from g1 to g2.

    The two orientations of a boundary intersection sum to one.
    """
    d = endpoint_index(g1, m) - endpoint_index(g2, m)
    return d if is_left_of(g1, g2, m, n) else d + 1


def _relabel(c, n):
    """Place m_0 after m_n so chords read (smaller, larger) along a line."""
    s, t = c
    return (t, n + 1) if s == 0 else (s, t)


def intersections(g1: GradedArc, g2: GradedArc, n: int) -> list[tuple[str, int]]:
    """(kind, degree) for each intersection contributing to Hom(X(g1), X(g2)[degree])."""
    if g1.chord == g2.chord:
        m = g1.t
        return [("parallel", endpoint_index(g1, m) - endpoint_index(g2, m))]
    shared = set(g1.chord) & set(g2.chord)
    if shared:
        (m,) = shared
        if is_left_of(g1, g2, m, n):
            return [("endpoint", intersection_index(g1, g2, m, n))]
        return []
    if crosses(g1.chord, g2.chord):
        a, _ = _relabel(g1.chord, n)
        c, _ = _relabel(g2.chord, n)
        if a < c:
            return [("crossing", g1.shift - g2.shift + 1)]
        return [("crossing", g1.shift - g2.shift)]
    return []


def int_d(g1: GradedArc, g2: GradedArc, d: int, n: int) -> int:
    return sum(1 for _, deg in intersections(g1, g2, n) if deg == d)


@dataclass(frozen=True)
class GradedArcSystem:
    n: int
    arcs: tuple[GradedArc, ...]

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple(sorted(self.arcs)))

    def chords(self):
        return [g.chord for g in self.arcs]

    def to_dict(self):
        return {"n": self.n, "arcs": [g.to_dict() for g in self.arcs]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d):
        return cls(int(d["n"]), tuple(GradedArc.from_dict(a) for a in d["arcs"]))

    @classmethod
    def from_json(cls, s):
        return cls.from_dict(json.loads(s))


def is_admissible(n: int, chords) -> bool:
    """Every region cut out by the arcs holds exactly one red point."""
    chords = list(chords)
    if len(set(chords)) != len(chords):
        return False
    if any(crosses(a, b) for i, a in enumerate(chords) for b in chords[i + 1:]):
        return False
    return all(len(f.segments) == 1 for f in faces(n + 1, chords))


def satisfies_s4(system: GradedArcSystem) -> bool:
    """Non-positive index from left to right at every shared endpoint."""
    n = system.n
    for m in range(n + 1):
        here = [g for g in system.arcs if m in g.chord]
        for g1 in here:
            for g2 in here:
                if g1 is not g2 and is_left_of(g1, g2, m, n):
                    if intersection_index(g1, g2, m, n) > 0:
                        return False
    return True


def is_valid_system(system: GradedArcSystem) -> bool:
    n = system.n
    chords = system.chords()
    return (len(system.arcs) == n and len(set(chords)) == n
            and all(0 <= s < t <= n for s, t in chords)
            and is_admissible(n, chords) and satisfies_s4(system))


def _spanning_forests(n):
    """Non-crossing chord trees on the points 0..n, by backtracking with union-find."""
    chords = [(s, t) for s in range(n + 1) for t in range(s + 1, n + 1)]
    k = len(chords)
    cross = [[crosses(a, b) for b in chords] for a in chords]

    def find(parent, x):
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(start, chosen, parent):
        if len(chosen) == n:
            yield tuple(chords[i] for i in chosen)
            return
        if k - start < n - len(chosen):
            return
        for i in range(start, k):
            if any(cross[i][j] for j in chosen):
                continue
            s, t = chords[i]
            rs, rt = find(parent, s), find(parent, t)
            if rs == rt:
                continue
            new = list(parent)
            new[rt] = rs
            chosen.append(i)
            yield from rec(i + 1, chosen, new)
            chosen.pop()

    yield from rec(0, [], list(range(n + 1)))


def iter_2term_silting(n: int):
    """All 2-term non-positive graded arc systems.

    Inner arcs are forced to indices (0, 1); only fan arcs choose an index,
    and (S4) then prunes the choices.  Order: chord sets as produced by the
    backtracking over lexicographically sorted chords, then fan indices in
    lexicographic order.
    """
    config.check_n(n)
    for chords in _spanning_forests(n):
        if not is_admissible(n, chords):
            continue
        fans = [c for c in chords if c[0] == 0]
        inner = [GradedArc.inner(s, t) for s, t in chords if s != 0]
        for zs in product((0, 1), repeat=len(fans)):
            arcs = inner + [GradedArc.fan(t, z) for (_, t), z in zip(fans, zs)]
            system = GradedArcSystem(n, tuple(arcs))
            if satisfies_s4(system):
                yield system


def enumerate_2term_silting(n: int) -> list[GradedArcSystem]:
    return list(iter_2term_silting(n))


def induced_graded_algebra(system: GradedArcSystem) -> BoundQuiverAlgebra:
    """Graded algebra of a system: arcs are vertices, adjacent arcs give arrows.

    At each green point the arcs ending there are ordered left to right;
    neighbours L, R give an arrow R -> L of grade e_R - e_L.  Two composable
    arrows are a zero relation when their three arcs are sides of one region.
    """
    if not is_valid_system(system):
        raise ValueError("invalid graded arc system")
    n = system.n
    arcs = list(system.arcs)
    labels = [g.label() for g in arcs]
    arrows, ends = [], []
    for m in range(n + 1):
        here = [i for i, g in enumerate(arcs) if m in g.chord]
        here.sort(key=lambda i: -_offset(m, arcs[i].s if arcs[i].t == m else arcs[i].t, n))
        for left, right in zip(here, here[1:]):
            grade = endpoint_index(arcs[right], m) - endpoint_index(arcs[left], m)
            arrows.append(Arrow(labels[right], labels[left], grade))
            ends.append((right, left))
    regions = [set(f.chords) for f in faces(n + 1, [g.chord for g in arcs])]
    rels = set()
    for x, (i, j) in enumerate(ends):
        for y, (j2, k) in enumerate(ends):
            if j2 == j and any({i, j, k} <= r for r in regions):
                rels.add((x, y))
    return BoundQuiverAlgebra(Quiver(tuple(labels), tuple(arrows)), frozenset(rels))


def h0(a: BoundQuiverAlgebra) -> BoundQuiverAlgebra:
    """Degree-zero part: delete arrows of positive grade."""
    if any(x.grade < 0 for x in a.arrows):
        raise ValueError("negative grade present")
    keep = [i for i, x in enumerate(a.arrows) if x.grade == 0]
    where = {old: new for new, old in enumerate(keep)}
    rels = {(where[i], where[j]) for i, j in a.relations if i in where and j in where}
    return BoundQuiverAlgebra(Quiver(a.vertices, tuple(a.arrows[i] for i in keep)), frozenset(rels))


def x_of(g: GradedArc, n: int) -> TwoTermComplex:
    """Complex of an arc: a crossing with index i puts P(t) in degree -i."""
    if not g.is_2term():
        raise ValueError(f"{g.label()} is not 2-term")
    if g.t > n:
        raise ValueError("arc outside the disk")
    if g.s == 0:
        return stalk(g.t, g.index_t)
    if g.index_s == 0:
        return presentation_complex(g.t, g.s)
    raise ValueError(f"{g.label()} is not 2-term")


def complexes_of(system: GradedArcSystem) -> list[TwoTermComplex]:
    return [x_of(g, system.n) for g in system.arcs]


def all_2term_arcs(n: int) -> list[GradedArc]:
    return ([GradedArc.fan(t, z) for t in range(1, n + 1) for z in (0, 1)]
            + [GradedArc.inner(s, t) for s in range(1, n + 1) for t in range(s + 1, n + 1)])


def has_fan_jump(system: GradedArcSystem) -> bool:
    """Two fan arcs with different indices and no fan arc between them at m_0."""
    fans = sorted((g for g in system.arcs if g.s == 0), key=lambda g: g.t)
    return any(a.index_t != b.index_t for a, b in zip(fans, fans[1:]))


def to_tikz(system: GradedArcSystem, radius: float = 2.0) -> str:
    """Disk picture: green points, red arcs as the inner polygon, indexed arcs."""
    n = system.n
    N = n + 1

    def ang(q):
        return math.pi / 2 + 2 * math.pi * q / N

    def pt(a, r=radius):
        return f"({r * math.cos(a):.3f},{r * math.sin(a):.3f})"

    lines = ["\\begin{tikzpicture}", f"  \\draw[thick] (0,0) circle ({radius});"]
    reds = [ang(q) + math.pi / N for q in range(N)]
    for q in range(1, N):
        # a_q cuts off m_q between the red points on either side
        lines.append(f"  \\draw[red] {pt(reds[q - 1])} -- {pt(reds[q])};")
    for q in range(N):
        lines.append(f"  \\fill[red] {pt(reds[q])} circle (1.5pt);")
        lines.append(f"  \\fill[green!60!black] {pt(ang(q))} circle (2pt);")
        lines.append(f"  \\node[font=\\scriptsize] at {pt(ang(q), 1.15 * radius)} {{$m_{{{q}}}$}};")
    for g in system.arcs:
        style = "blue, thick"
        mid = (ang(g.s) + ang(g.t)) / 2
        lines.append(f"  \\draw[{style}] {pt(ang(g.s))} -- {pt(ang(g.t))};")
        text = ",".join(f"{v}" for v in g.indices().values())
        lines.append(f"  \\node[font=\\tiny, blue] at {pt(mid, 0.45 * radius)} {{{text}}};")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"
