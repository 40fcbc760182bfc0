"""The marked disk of the module category of A_n.

Boundary positions 0..n+2 run counterclockwise:

    0 = p,  1 = r_1,  k+1 = v_k (k = 1..n),  n+2 = r_2

p and the v_k are the marked points of the green arc system, which is the
fan of arcs (p, v_k); r_1 and r_2 are the two extra points on either side
of p.  A chord is a sorted pair of non-adjacent positions; chords through p
are the trivial curves and carry the zero module.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from . import config
from .modules import IntervalModule, STTPair, support_of
from .planar import crosses, faces
from .quiver import Arrow, BoundQuiverAlgebra, Quiver


@dataclass(frozen=True)
class MarkedDisk:
    n: int

    @property
    def npoints(self) -> int:
        return self.n + 3

    def name(self, pos: int) -> str:
        if pos == 0:
            return "p"
        if pos == 1:
            return "r1"
        if pos == self.n + 2:
            return "r2"
        return f"v{pos - 1}"

    def green_arcs(self) -> list[tuple[int, int]]:
        return [(0, k + 1) for k in range(1, self.n + 1)]

    def construction_algebra(self) -> BoundQuiverAlgebra:
        """Algebra of the green arc system: arcs are vertices, angles are arrows.

        At a shared endpoint an arc points to the arc that follows it
        counterclockwise; two consecutive arrows bounding the same polygon
        compose to zero.
        """
        arcs = self.green_arcs()
        N = self.npoints
        label = [self.name(b) for _, b in arcs]
        fs = faces(N, arcs)
        arrows, corner_face = [], []
        for q in range(N):
            here = sorted((i for i, c in enumerate(arcs) if q in c),
                          key=lambda i: (_other(arcs[i], q) - q) % N)
            for a, b in zip(here, here[1:]):
                arrows.append(Arrow(label[a], label[b]))
                corner_face.append(_face_with_corner(fs, q, {a, b}))
        rels = {(x, y) for x in range(len(arrows)) for y in range(len(arrows))
                if arrows[x].tgt == arrows[y].src and corner_face[x] == corner_face[y]
                and corner_face[x] is not None}
        return BoundQuiverAlgebra(Quiver(tuple(label), tuple(arrows)), frozenset(rels))


def _other(chord, q):
    return chord[1] if chord[0] == q else chord[0]


def _face_with_corner(fs, q, arc_ids):
    for k, f in enumerate(fs):
        if q in f.points and arc_ids <= set(f.chords):
            return k
    return None


def is_chord(c, n: int) -> bool:
    N = n + 3
    a, b = c
    return 0 <= a < b < N and b - a >= 2 and not (a == 0 and b == N - 1)


def is_trivial(c) -> bool:
    return c[0] == 0


def c_p1(n: int) -> tuple[int, int]:
    return (1, n + 2)


def curve_to_module(c, n: int) -> IntervalModule | None:
    """Module of a chord: relabel r_1 -> 0, v_k -> k, r_2 -> n+1 and take [a+1, b-1]."""
    a, b = sorted(c)
    if not is_chord((a, b), n):
        raise ValueError(f"{c} is not a chord of the {n + 3}-gon")
    if a == 0:
        return None
    return IntervalModule(a, b - 2, n)


def module_to_curve(m: IntervalModule) -> tuple[int, int]:
    return (m.lo, m.hi + 2)


@dataclass(frozen=True)
class Triangulation:
    n: int
    chords: tuple[tuple[int, int], ...]

    def __post_init__(self):
        cs = tuple(sorted(tuple(sorted(c)) for c in self.chords))
        object.__setattr__(self, "chords", cs)
        if len(cs) != self.n or len(set(cs)) != self.n:
            raise ValueError(f"a triangulation of the {self.n + 3}-gon has {self.n} chords")
        for c in cs:
            if not is_chord(c, self.n):
                raise ValueError(f"{c} is not a chord")
        for i, c in enumerate(cs):
            for d in cs[i + 1:]:
                if crosses(c, d):
                    raise ValueError(f"chords {c} and {d} cross")

    @classmethod
    def _trusted(cls, n, chords):
        # the ear recursion only produces valid sorted chord lists
        t = object.__new__(cls)
        object.__setattr__(t, "n", n)
        object.__setattr__(t, "chords", chords)
        return t

    def contains_cp1(self) -> bool:
        return c_p1(self.n) in self.chords

    def to_dict(self):
        return {"n": self.n, "chords": [list(c) for c in self.chords]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d):
        return cls(int(d["n"]), tuple(tuple(c) for c in d["chords"]))

    @classmethod
    def from_json(cls, s: str):
        return cls.from_dict(json.loads(s))


def _polygon_triangulations(i, j):
    """Chord lists triangulating the sub-polygon on positions i..j (edge i-j given)."""
    if j - i < 2:
        yield ()
        return
    for k in range(i + 1, j):
        left = ((i, k),) if k - i >= 2 else ()
        right = ((k, j),) if j - k >= 2 else ()
        for a in _polygon_triangulations(i, k):
            for b in _polygon_triangulations(k, j):
                yield left + right + a + b


def iter_triangulations(n: int):
    """All triangulations of the (n+3)-gon in a fixed order.

    Ear recursion on the boundary edge (0, n+2): the apex k of the triangle
    on that edge runs from 1 to n+1, then the two sides are triangulated
    recursively, left side varying slowest.  Ids used by the command line
    index this order.
    """
    config.check_n(n)
    for chords in _polygon_triangulations(0, n + 2):
        yield Triangulation._trusted(n, tuple(sorted(chords)))


def enumerate_triangulations(n: int) -> list[Triangulation]:
    return list(iter_triangulations(n))


def tilting_triangulations(n: int) -> list[Triangulation]:
    return list(_tilting(n))


@lru_cache(maxsize=None)
def _tilting(n):
    return tuple(t for t in iter_triangulations(n) if t.contains_cp1())


def module_of_triangulation(t: Triangulation) -> STTPair:
    mods = sorted(m for m in (curve_to_module(c, t.n) for c in t.chords) if m is not None)
    return STTPair(tuple(mods), support_of(mods))


def triangulation_of_pair(pair: STTPair, n: int) -> Triangulation:
    """Inverse of module_of_triangulation: add the trivial chords (p, v_k) off the support."""
    chords = [module_to_curve(m) for m in pair.modules]
    chords += [(0, k + 1) for k in range(1, n + 1) if k not in pair.support]
    return Triangulation(n, tuple(chords))


@dataclass(frozen=True)
class Tile:
    vertices: tuple[int, int, int]          # sorted positions x < y < z
    edges: tuple[tuple[tuple[int, int], str], ...]   # (edge, "chord" | "boundary")

    @property
    def complete(self) -> bool:
        return all(kind == "chord" for _, kind in self.edges)


def tiles(t: Triangulation) -> list[Tile]:
    """The n+1 triangles, sorted by vertices.

    In a triangulated convex polygon the faces are exactly the triples of
    pairwise joined vertices (no chord fits inside such a triangle), so they
    are read off the edge graph; the tests compare with traced faces.
    """
    N = t.n + 3
    chords = set(t.chords)
    nbrs = {q: {(q + 1) % N, (q - 1) % N} for q in range(N)}
    for a, b in chords:
        nbrs[a].add(b)
        nbrs[b].add(a)
    out = []
    for x in range(N):
        for y in sorted(v for v in nbrs[x] if v > x):
            for z in sorted(v for v in nbrs[y] if v > y and v in nbrs[x]):
                edges = tuple((e, "chord" if e in chords else "boundary")
                              for e in ((x, y), (y, z), (x, z)))
                out.append(Tile((x, y, z), edges))
    return out


def chord_label(c) -> str:
    return f"({c[0]},{c[1]})"


def induced_algebra(t: Triangulation) -> BoundQuiverAlgebra:
    """The algebra read off the triangles of a triangulation through c_P(1).

    In a triangle x < y < z with sides e1 = (x, y), e2 = (y, z), e3 = (x, z)
    the angle at a vertex joins the two sides meeting there, and the arrow
    runs from the side that comes first counterclockwise around the disk
    from that vertex to the other: e2 -> e1 at y, e3 -> e2 at z, e1 -> e3
    at x.  In a complete triangle the side e3 faces p, the angle at y is
    dropped and the remaining path e1 -> e3 -> e2 is a zero relation.
    """
    if not t.contains_cp1():
        raise ValueError("induced_algebra needs the chord (r1, r2)")
    labels = [chord_label(c) for c in t.chords]
    arrows, rels = [], set()
    for tl in tiles(t):
        x, y, z = tl.vertices
        e1, e2, e3 = (x, y), (y, z), (x, z)
        have = {e for e, kind in tl.edges if kind == "chord"}
        if tl.complete:
            arrows.append(Arrow(chord_label(e1), chord_label(e3)))
            arrows.append(Arrow(chord_label(e3), chord_label(e2)))
            rels.add((len(arrows) - 2, len(arrows) - 1))
            continue
        for a, b in ((e2, e1), (e3, e2), (e1, e3)):
            if a in have and b in have:
                arrows.append(Arrow(chord_label(a), chord_label(b)))
    return BoundQuiverAlgebra(Quiver(tuple(labels), tuple(arrows)), frozenset(rels))


class TiltedKind(Enum):
    HEREDITARY = "hereditary"
    NON_HEREDITARY = "non-hereditary"


def classify_triangulation(t: Triangulation) -> TiltedKind:
    if not t.contains_cp1():
        raise ValueError("classification needs the chord (r1, r2)")
    if any(tl.complete for tl in tiles(t)):
        return TiltedKind.NON_HEREDITARY
    return TiltedKind.HEREDITARY


def to_tikz(t: Triangulation, radius: float = 2.0) -> str:
    """TikZ picture of the disk: green marked points, red extra points, chords."""
    disk = MarkedDisk(t.n)
    N = disk.npoints

    def pt(q, r=radius):
        ang = math.pi / 2 + 2 * math.pi * q / N
        return f"({r * math.cos(ang):.3f},{r * math.sin(ang):.3f})"

    lines = ["\\begin{tikzpicture}",
             f"  \\draw[thick] (0,0) circle ({radius});"]
    for a, b in disk.green_arcs():
        lines.append(f"  \\draw[green!60!black, very thin] {pt(a)} -- {pt(b)};")
    for c in t.chords:
        colour = "orange" if c == c_p1(t.n) else "blue"
        lines.append(f"  \\draw[{colour}, thick] {pt(c[0])} -- {pt(c[1])};")
    for q in range(N):
        if q in (1, N - 1):
            lines.append(f"  \\draw[red] {pt(q)} circle (2pt);")
        else:
            lines.append(f"  \\fill[green!60!black] {pt(q)} circle (2pt);")
        lines.append(f"  \\node[font=\\scriptsize] at {pt(q, 1.15 * radius)} {{${disk.name(q)}$}};")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"
