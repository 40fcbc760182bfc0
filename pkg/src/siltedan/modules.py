"""Interval modules over the linearly oriented quiver 1 -> 2 -> ... -> n.

Conventions used everywhere in the package:

* the module [i, j] is k at vertices i..j with identity maps along arrows;
* P(i) = [i, n] and I(j) = [1, j];
* Hom([a, b], [c, d]) is one-dimensional iff c <= a <= d <= b and zero
  otherwise;
* tau [i, j] = [i+1, j+1] for j < n, and projectives have tau = 0.

The closed rules are checked against :class:`Representation`, which solves
the intertwining equations of actual matrix representations.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from . import config
from .linalg import nullspace, rank
from .quiver import Arrow, BoundQuiverAlgebra, Quiver


@dataclass(frozen=True, order=True)
class IntervalModule:
    lo: int
    hi: int
    n: int

    def __post_init__(self):
        if not (1 <= self.lo <= self.hi <= self.n):
            raise ValueError(f"bad interval [{self.lo},{self.hi}] over A_{self.n}")

    @property
    def is_projective(self) -> bool:
        return self.hi == self.n

    @property
    def is_injective(self) -> bool:
        return self.lo == 1

    @property
    def support(self) -> range:
        return range(self.lo, self.hi + 1)

    def label(self) -> str:
        return f"[{self.lo},{self.hi}]"

    def to_json(self) -> list[int]:
        return [self.lo, self.hi]

    def __repr__(self):
        return f"[{self.lo},{self.hi}]"


def P(i: int, n: int) -> IntervalModule:
    return IntervalModule(i, n, n)


def I(j: int, n: int) -> IntervalModule:
    return IntervalModule(1, j, n)


def all_modules(n: int) -> list[IntervalModule]:
    return [IntervalModule(i, j, n) for i in range(1, n + 1) for j in range(i, n + 1)]


def hom_dim(m1: IntervalModule, m2: IntervalModule) -> int:
    if m1.n != m2.n:
        raise ValueError("modules over different quivers")
    return int(m2.lo <= m1.lo <= m2.hi <= m1.hi)


def tau(m: IntervalModule) -> IntervalModule | None:
    if m.is_projective:
        return None
    return IntervalModule(m.lo + 1, m.hi + 1, m.n)


# explicit representations (the oracle)

class Representation:
    """A representation of 1 -> ... -> n: dimensions and one matrix per arrow.

    ``maps[i]`` is the matrix of the arrow (i+1) -> (i+2), of shape
    dims[i+1] x dims[i].
    """

    def __init__(self, dims, maps):
        self.dims = tuple(dims)
        self.maps = tuple(tuple(tuple(Fraction(x) for x in row) for row in m) for m in maps)
        self.n = len(self.dims)

    @classmethod
    def of_interval(cls, m: IntervalModule) -> "Representation":
        dims = [1 if m.lo <= v <= m.hi else 0 for v in range(1, m.n + 1)]
        maps = [[[1]] * dims[i + 1] if dims[i] and dims[i + 1] else [[0] * dims[i]] * dims[i + 1]
                for i in range(m.n - 1)]
        return cls(dims, maps)

    def as_interval(self) -> IntervalModule | None:
        """Read back an interval module, None for zero; error if not an interval."""
        supp = [v + 1 for v, d in enumerate(self.dims) if d]
        if not supp:
            return None
        lo, hi = supp[0], supp[-1]
        if any(d != 1 for d in self.dims[lo - 1:hi]):
            raise ValueError("not an interval module")
        for v in range(lo, hi):
            if self.maps[v - 1][0][0] == 0:
                raise ValueError("decomposable representation")
        return IntervalModule(lo, hi, self.n)


def hom_space(r1: Representation, r2: Representation) -> list[list[list[list[Fraction]]]]:
    """Basis of Hom(r1, r2); each element is a list of per-vertex matrices."""
    n = r1.n
    # unknowns: entries of f_v (dims2[v] x dims1[v]) for every vertex
    offs, total = [], 0
    for v in range(n):
        offs.append(total)
        total += r1.dims[v] * r2.dims[v]

    def var(v, r, c):
        return offs[v] + r * r1.dims[v] + c

    eqs = []
    for v in range(n - 1):
        a1, a2 = r1.maps[v], r2.maps[v]
        # f_{v+1} a1 - a2 f_v = 0, entry (r, c) with r < dims2[v+1], c < dims1[v]
        for r in range(r2.dims[v + 1]):
            for c in range(r1.dims[v]):
                row = [Fraction(0)] * total
                for k in range(r1.dims[v + 1]):
                    row[var(v + 1, r, k)] += a1[k][c]
                for k in range(r2.dims[v]):
                    row[var(v, k, c)] -= a2[r][k]
                eqs.append(row)
    basis = []
    for vec in nullspace(eqs, total):
        f = [[[vec[var(v, r, c)] for c in range(r1.dims[v])] for r in range(r2.dims[v])]
             for v in range(n)]
        basis.append(f)
    return basis


def compose(f, g):
    """g after f, both given as per-vertex matrix lists."""
    out = []
    for fv, gv in zip(f, g):
        inner = len(fv)
        cols = len(fv[0]) if fv else 0
        out.append([[sum((gv[r][k] * fv[k][c] for k in range(inner)), Fraction(0))
                     for c in range(cols)] for r in range(len(gv))])
    return out


def is_zero_map(f) -> bool:
    return all(x == 0 for fv in f for row in fv for x in row)


@lru_cache(maxsize=None)
def hom_dim_oracle(m1: IntervalModule, m2: IntervalModule) -> int:
    return len(hom_space(Representation.of_interval(m1), Representation.of_interval(m2)))


def _kernel(f, r1: Representation) -> Representation:
    """Kernel subrepresentation of f: r1 -> r2, assuming per-vertex rank <= 1 pieces."""
    bases = [nullspace(fv, r1.dims[v]) for v, fv in enumerate(f)]
    dims = [len(b) for b in bases]
    maps = []
    for v in range(r1.n - 1):
        m = r1.maps[v]
        # express the image of each basis vector of ker_v in the basis of ker_{v+1}
        cols = []
        for b in bases[v]:
            img = [sum((m[r][k] * b[k] for k in range(len(b))), Fraction(0)) for r in range(len(m))]
            cols.append(_coords(bases[v + 1], img))
        maps.append([[cols[c][r] for c in range(dims[v])] for r in range(dims[v + 1])])
    return Representation(dims, maps)


def _coords(basis, vec):
    if not basis:
        if any(vec):
            raise ValueError("vector outside subspace")
        return []
    # the bases from nullspace have a unit entry at a distinct free column each
    k = len(basis)
    unknowns = nullspace([[basis[j][i] for j in range(k)] + [-vec[i]] for i in range(len(vec))], k + 1)
    for u in unknowns:
        if u[-1] != 0:
            return [x / u[-1] for x in u[:-1]]
    raise ValueError("vector outside subspace")


class Presentation(NamedTuple):
    p1: int | None
    p0: int


def projective_presentation(m: IntervalModule) -> Presentation:
    """Minimal projective presentation computed from the representation.

    The top of an interval module sits at its lowest vertex; the kernel of
    the projective cover is computed explicitly and read back as P(j).
    """
    r = Representation.of_interval(m)
    top = next(v + 1 for v, d in enumerate(r.dims) if d)
    cover = P(top, m.n)
    maps = hom_space(Representation.of_interval(cover), r)
    surj = next(f for f in maps if all(rank(fv) == r.dims[v] for v, fv in enumerate(f) if r.dims[v]))
    ker = _kernel(surj, Representation.of_interval(cover)).as_interval()
    if ker is None:
        return Presentation(None, top)
    if not ker.is_projective:
        raise AssertionError("kernel of a projective cover over a hereditary algebra is projective")
    return Presentation(ker.lo, top)


def tau_oracle(m: IntervalModule) -> IntervalModule | None:
    """tau = D Tr computed through the Nakayama functor.

    From P1 -> P0 -> M -> 0, tau M is the kernel of nu P1 -> nu P0 with
    nu P(i) = I(i); over a hereditary algebra this is the whole of tau M.
    """
    pres = projective_presentation(m)
    if pres.p1 is None:
        return None
    src, tgt = I(pres.p1, m.n), I(pres.p0, m.n)
    r_src = Representation.of_interval(src)
    maps = hom_space(r_src, Representation.of_interval(tgt))
    if len(maps) != 1:
        raise AssertionError("expected a one-dimensional Hom between injectives")
    return _kernel(maps[0], r_src).as_interval()


# tau-rigidity and support tau-tilting

def _pieces(support):
    """Maximal runs of consecutive vertices."""
    runs, cur = [], []
    for v in sorted(support):
        if cur and v == cur[-1] + 1:
            cur.append(v)
        else:
            if cur:
                runs.append(cur)
            cur = [v]
    if cur:
        runs.append(cur)
    return runs


def tau_relative(m: IntervalModule, support) -> IntervalModule | None:
    """tau over the algebra A/<1 - e_support>, whose quiver is the full subquiver."""
    for run in _pieces(support):
        if m.lo in run:
            if m.hi not in run:
                raise ValueError(f"{m} not supported on {sorted(support)}")
            return None if m.hi == run[-1] else IntervalModule(m.lo + 1, m.hi + 1, m.n)
    raise ValueError(f"{m} not supported on {sorted(support)}")


def support_of(modules) -> tuple[int, ...]:
    return tuple(sorted({v for m in modules for v in m.support}))


def is_tau_rigid(modules, support=None) -> bool:
    """Hom(x, tau y) = 0 for all ordered pairs, tau taken over ``support`` if given."""
    mods = list(modules)
    for y in mods:
        ty = tau(y) if support is None else tau_relative(y, support)
        if ty is None:
            continue
        if any(hom_dim(x, ty) for x in mods):
            return False
    return True


def is_tau_tilting(modules, n: int) -> bool:
    mods = set(modules)
    return len(mods) == n and is_tau_rigid(mods)


def is_support_tau_tilting(modules, support=None) -> bool:
    mods = set(modules)
    supp = support_of(mods) if support is None else tuple(sorted(support))
    if not set(support_of(mods)) <= set(supp):
        return False
    return len(mods) == len(supp) and is_tau_rigid(mods, supp)


class STTPair(NamedTuple):
    modules: tuple[IntervalModule, ...]
    support: tuple[int, ...]

    def to_json(self):
        return {"modules": [m.to_json() for m in self.modules], "support": list(self.support)}


def iter_stt(n: int):
    """Support tau-tilting pairs, by clique search over tau-compatibility.

    By the Adachi-Iyama-Reiten reduction, a module is tau-rigid as a module
    over A/<e> exactly when it is tau-rigid over A and avoids e, so the
    search runs over tau-rigid sets and keeps those with as many summands as
    supported vertices.
    """
    config.check_n(n)
    mods = all_modules(n)
    k = len(mods)
    compat = []
    for i, x in enumerate(mods):
        mask = 0
        for j, y in enumerate(mods):
            tx, ty = tau(x), tau(y)
            if not (ty and hom_dim(x, ty)) and not (tx and hom_dim(y, tx)):
                mask |= 1 << j
        compat.append(mask)
    rigid = [bool(compat[i] >> i & 1) for i in range(k)]
    supp_mask = [sum(1 << (v - 1) for v in m.support) for m in mods]

    def rec(start, allowed, chosen, smask):
        if len(chosen) == bin(smask).count("1"):
            yield STTPair(tuple(mods[i] for i in chosen),
                          tuple(v + 1 for v in range(n) if smask >> v & 1))
        for i in range(start, k):
            if allowed >> i & 1:
                chosen.append(i)
                yield from rec(i + 1, allowed & compat[i], chosen, smask | supp_mask[i])
                chosen.pop()

    start_allowed = sum(1 << i for i in range(k) if rigid[i])
    yield from rec(0, start_allowed, [], 0)


def enumerate_stt(n: int) -> list[STTPair]:
    return list(iter_stt(n))


# endomorphism algebra oracle

def quiver_from_hom_data(labels, homs, compose_nonzero) -> BoundQuiverAlgebra:
    """Gabriel quiver of End(X_1 + ... + X_k) when every Hom(X_i, X_j) has dim <= 1.

    ``homs[i][j]`` is dim Hom(X_i, X_j); ``compose_nonzero(i, l, j)`` tells
    whether the composite X_i -> X_l -> X_j of the basis maps is nonzero.
    A map X_i -> X_j is irreducible iff it does not factor through another
    summand; it yields an arrow j -> i (paths from j to i correspond to maps
    X_i -> X_j).  A relation (alpha: a -> b, beta: b -> c) holds iff the
    composite X_c -> X_b -> X_a vanishes.
    """
    k = len(labels)
    irreducible = []
    for i in range(k):
        for j in range(k):
            if i == j or not homs[i][j]:
                continue
            if any(l not in (i, j) and homs[i][l] and homs[l][j] and compose_nonzero(i, l, j)
                   for l in range(k)):
                continue
            irreducible.append((i, j))
    arrows = sorted((j, i) for i, j in irreducible)
    arr = [Arrow(labels[s], labels[t], 0) for s, t in arrows]
    rels = set()
    for x, (a, b) in enumerate(arrows):
        for y, (b2, c) in enumerate(arrows):
            if b2 == b and not compose_nonzero(c, b, a):
                rels.add((x, y))
    return BoundQuiverAlgebra(Quiver(tuple(labels), tuple(arr)), frozenset(rels))


@lru_cache(maxsize=None)
def _basis_map(m1: IntervalModule, m2: IntervalModule):
    basis = hom_space(Representation.of_interval(m1), Representation.of_interval(m2))
    return basis[0] if basis else None


def endomorphism_algebra(modules) -> BoundQuiverAlgebra:
    mods = sorted(set(modules))
    labels = [m.label() for m in mods]
    homs = [[hom_dim_oracle(x, y) for y in mods] for x in mods]

    def nonzero(i, l, j):
        f, g = _basis_map(mods[i], mods[l]), _basis_map(mods[l], mods[j])
        if f is None or g is None:
            return False
        return not is_zero_map(compose(f, g))

    return quiver_from_hom_data(labels, homs, nonzero)
