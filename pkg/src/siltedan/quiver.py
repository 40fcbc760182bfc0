"""Bound quivers with graded arrows and quadratic zero relations.

A :class:`BoundQuiverAlgebra` is the common output type of every algebra
construction in the package (geometric algebras, endomorphism oracles,
degree-zero parts).  Vertex labels are strings so that algebras serialize
directly to JSON.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from itertools import permutations, product


@dataclass(frozen=True)
class Arrow:
    src: str
    tgt: str
    grade: int = 0


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.src not in vs or a.tgt not in vs:
                raise ValueError(f"arrow {a} has an undeclared endpoint")


@dataclass(frozen=True)
class BoundQuiverAlgebra:
    """kQ/I with I generated by composable pairs (alpha, beta) of arrow indices.

    A pair (alpha, beta) means the path "alpha then beta" is zero, so
    tgt(alpha) must equal src(beta).
    """

    quiver: Quiver
    relations: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        rels = frozenset((int(a), int(b)) for a, b in self.relations)
        object.__setattr__(self, "relations", rels)
        arrows = self.quiver.arrows
        for a, b in rels:
            if not (0 <= a < len(arrows) and 0 <= b < len(arrows)):
                raise ValueError(f"relation {(a, b)} refers to a missing arrow")
            if arrows[a].tgt != arrows[b].src:
                raise ValueError(f"relation {(a, b)} is not composable")

    @property
    def vertices(self):
        return self.quiver.vertices

    @property
    def arrows(self):
        return self.quiver.arrows

    @classmethod
    def build(cls, vertices, arrows, relations=()):
        """Convenience constructor from plain tuples ``(src, tgt[, grade])``."""
        arr = [a if isinstance(a, Arrow) else Arrow(*a) for a in arrows]
        return cls(Quiver(tuple(vertices), tuple(arr)), frozenset(relations))

    def num_paths(self) -> int:
        """Dimension of kQ/I, counting trivial paths (quiver must be acyclic)."""
        out = {v: [] for v in self.vertices}
        for i, a in enumerate(self.arrows):
            out[a.src].append(i)
        total = len(self.vertices)
        # paths by last arrow, extended one step at a time
        frontier = {i: 1 for i in range(len(self.arrows))}
        steps = 0
        while frontier:
            total += sum(frontier.values())
            nxt: dict[int, int] = {}
            for i, cnt in frontier.items():
                for j in out[self.arrows[i].tgt]:
                    if (i, j) not in self.relations:
                        nxt[j] = nxt.get(j, 0) + cnt
            frontier = nxt
            steps += 1
            if steps > len(self.arrows) + 1:
                raise ValueError("quiver has an oriented cycle without enough relations")
        return total

    # serialization

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [{"src": a.src, "tgt": a.tgt, "grade": a.grade} for a in self.arrows],
            "relations": [list(r) for r in sorted(self.relations)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "BoundQuiverAlgebra":
        arrows = [Arrow(a["src"], a["tgt"], int(a.get("grade", 0))) for a in d["arrows"]]
        return cls(Quiver(tuple(d["vertices"]), tuple(arrows)),
                   frozenset(tuple(r) for r in d.get("relations", [])))

    @classmethod
    def from_json(cls, s: str) -> "BoundQuiverAlgebra":
        return cls.from_dict(json.loads(s))

    def to_dot(self, name: str = "Q") -> str:
        lines = [f"digraph {name} {{", "  rankdir=LR;"]
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for a in self.arrows:
            label = f' [label="{a.grade}", style=dashed]' if a.grade else ""
            lines.append(f'  "{a.src}" -> "{a.tgt}"{label};')
        for i, j in sorted(self.relations):
            s, t = self.arrows[i].src, self.arrows[j].tgt
            lines.append(f'  "{s}" -> "{t}" [style=dotted, arrowhead=none, constraint=false];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def linear_quiver(n: int, grades=None) -> BoundQuiverAlgebra:
    """1 -> 2 -> ... -> n, no relations."""
    grades = grades or [0] * (n - 1)
    vs = [str(i) for i in range(1, n + 1)]
    return BoundQuiverAlgebra.build(vs, [(vs[i], vs[i + 1], grades[i]) for i in range(n - 1)])


def is_connected(a: BoundQuiverAlgebra) -> bool:
    return len(_component_vertex_sets(a)) <= 1


def _component_vertex_sets(a):
    adj = {v: set() for v in a.vertices}
    for ar in a.arrows:
        adj[ar.src].add(ar.tgt)
        adj[ar.tgt].add(ar.src)
    seen, comps = set(), []
    for v in a.vertices:
        if v in seen:
            continue
        comp, queue = [], deque([v])
        seen.add(v)
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def connected_components(a: BoundQuiverAlgebra) -> list[BoundQuiverAlgebra]:
    """Maximal connected pieces, sorted by their sorted vertex labels."""
    keyed = sorted((sorted(c), c) for c in _component_vertex_sets(a))
    out = []
    for svs, comp in keyed:
        cs = set(comp)
        # keep the original vertex order inside each component
        verts = [v for v in a.vertices if v in cs]
        idx = [i for i, ar in enumerate(a.arrows) if ar.src in cs]
        remap = {old: new for new, old in enumerate(idx)}
        rels = {(remap[i], remap[j]) for i, j in a.relations if i in remap}
        out.append(BoundQuiverAlgebra(Quiver(tuple(verts), tuple(a.arrows[i] for i in idx)),
                                      frozenset(rels)))
    return out


# canonical forms

def _refine(a, vidx, colors):
    """Colour refinement; returns stable colours ranked canonically."""
    arrows = [(vidx[x.src], vidx[x.tgt], x.grade) for x in a.arrows]
    rels = [(arrows[i], arrows[j]) for i, j in a.relations]
    n = len(colors)
    ncol = len(set(colors))
    while True:
        sig = []
        for v in range(n):
            outs = sorted((g, colors[t]) for s, t, g in arrows if s == v)
            ins = sorted((g, colors[s]) for s, t, g in arrows if t == v)
            rel = sorted(
                (pos, x[2], y[2]) + tuple(colors[u] for u in (x[0], x[1], y[1]))
                for x, y in rels
                for pos, u in enumerate((x[0], x[1], y[1]))
                if u == v
            )
            sig.append((colors[v], tuple(outs), tuple(ins), tuple(rel)))
        ranks = {s: r for r, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(ranks) == ncol:
            return new
        colors, ncol = new, len(ranks)


def _encode(a, vidx, order):
    """Encoding under a total vertex order; parallel arrows give a choice."""
    pos = {v: order.index(v) for v in range(len(order))}
    keyed = sorted(((pos[vidx[x.src]], pos[vidx[x.tgt]], x.grade), i) for i, x in enumerate(a.arrows))
    groups: dict = {}
    for k, i in keyed:
        groups.setdefault(k, []).append(i)
    keys = sorted(groups)
    best = None
    for choice in product(*(permutations(groups[k]) for k in keys)):
        seq = [i for ch in choice for i in ch]
        where = {old: new for new, old in enumerate(seq)}
        rels = sorted((where[i], where[j]) for i, j in a.relations)
        enc = (len(order), tuple(k for k in keys for _ in groups[k]), tuple(rels))
        if best is None or enc < best:
            best = enc
    return best


def canonical_form(a: BoundQuiverAlgebra) -> bytes:
    """Byte string equal for two algebras iff they are isomorphic.

    Isomorphism means a vertex bijection carrying arrows to arrows with the
    same grade and relations to relations.  Colour refinement narrows the
    search; every remaining tie is branched on, so the result is the minimum
    encoding over all refinement-compatible orderings and therefore exact.
    """
    vidx = {v: i for i, v in enumerate(a.vertices)}
    n = len(vidx)
    best = None

    def search(colors):
        nonlocal best
        colors = _refine(a, vidx, colors)
        if len(set(colors)) == n:
            order = sorted(range(n), key=lambda v: colors[v])
            enc = _encode(a, vidx, order)
            if best is None or enc < best:
                best = enc
            return
        counts: dict = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        cell = min(c for c, k in counts.items() if k > 1)
        for v in range(n):
            if colors[v] == cell:
                search([2 * c + (0 if u == v else 1) for u, c in enumerate(colors)])

    search([0] * n)
    if best is None:
        best = (0, (), ())
    return json.dumps(best, separators=(",", ":")).encode()


def is_gentle(a: BoundQuiverAlgebra) -> bool:
    arrows = a.arrows
    for v in a.vertices:
        if sum(x.src == v for x in arrows) > 2 or sum(x.tgt == v for x in arrows) > 2:
            return False
    # every relation is a composable pair of arrows, so (G4) holds by type
    for i, x in enumerate(arrows):
        after = [j for j, y in enumerate(arrows) if y.src == x.tgt]
        before = [j for j, y in enumerate(arrows) if y.tgt == x.src]
        if sum((i, j) in a.relations for j in after) > 1:
            return False
        if sum((j, i) in a.relations for j in before) > 1:
            return False
        if sum((i, j) not in a.relations for j in after) > 1:
            return False
        if sum((j, i) not in a.relations for j in before) > 1:
            return False
    return True


def _check_acyclic(a):
    indeg = {v: 0 for v in a.vertices}
    for x in a.arrows:
        indeg[x.tgt] += 1
    queue = deque(v for v in a.vertices if indeg[v] == 0)
    seen = 0
    while queue:
        v = queue.popleft()
        seen += 1
        for x in a.arrows:
            if x.src == v:
                indeg[x.tgt] -= 1
                if indeg[x.tgt] == 0:
                    queue.append(x.tgt)
    if seen != len(a.vertices):
        raise ValueError("global_dimension needs an acyclic quiver")


def simple_projective_dimension(a: BoundQuiverAlgebra, v: str) -> int:
    """pd of the simple at v for a quadratic monomial algebra.

    The minimal resolution of S(v) has a term for every chain of arrows
    alpha_1 alpha_2 ... alpha_k starting at v in which each consecutive pair
    is a relation, so pd S(v) is the longest such chain.
    """
    _check_acyclic(a)
    return _chain_lengths(a)[v]


def _chain_lengths(a):
    arrows = a.arrows
    memo: dict[int, int] = {}

    def chain(i):
        if i not in memo:
            memo[i] = 1 + max((chain(j) for j, y in enumerate(arrows)
                               if y.src == arrows[i].tgt and (i, j) in a.relations), default=0)
        return memo[i]

    return {v: max((chain(i) for i, x in enumerate(arrows) if x.src == v), default=0)
            for v in a.vertices}


def global_dimension(a: BoundQuiverAlgebra) -> int:
    _check_acyclic(a)
    return max(_chain_lengths(a).values(), default=0)
