"""Two-term complexes of projective A_n-modules and their Hom spaces.

The projective P(i) = [i, n] has Hom(P(i), P(j)) = k exactly when j <= i,
spanned by the inclusion; these inclusions compose to inclusions, so a map
between sums of projectives is just a scalar matrix whose nonzero entries
sit at allowed positions.  Hom in the homotopy category is computed as
chain maps modulo null-homotopic maps with exact rational arithmetic.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linalg import in_span, nullspace, rank
from .modules import STTPair, is_support_tau_tilting, projective_presentation
from .quiver import BoundQuiverAlgebra


def _allowed(src: int, tgt: int) -> bool:
    return tgt <= src


@dataclass(frozen=True)
class TwoTermComplex:
    """P^{-1} -> P^0 with P^{-1} = sum P(deg_minus1[c]) and P^0 = sum P(deg0[r]).

    ``diff[r][c]`` is the coefficient of the inclusion P(deg_minus1[c]) -> P(deg0[r]).
    """

    deg_minus1: tuple[int, ...]
    deg0: tuple[int, ...]
    diff: tuple[tuple[Fraction, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "deg_minus1", tuple(self.deg_minus1))
        object.__setattr__(self, "deg0", tuple(self.deg0))
        diff = tuple(tuple(Fraction(x) for x in row) for row in self.diff)
        if not diff and self.deg0:
            diff = tuple((Fraction(0),) * len(self.deg_minus1) for _ in self.deg0)
        if len(diff) != len(self.deg0) or any(len(r) != len(self.deg_minus1) for r in diff):
            raise ValueError("differential has the wrong shape")
        for r, row in enumerate(diff):
            for c, x in enumerate(row):
                if x and not _allowed(self.deg_minus1[c], self.deg0[r]):
                    raise ValueError(f"no map P({self.deg_minus1[c]}) -> P({self.deg0[r]})")
        object.__setattr__(self, "diff", diff)

    def terms(self) -> dict[int, tuple[int, ...]]:
        return {-1: self.deg_minus1, 0: self.deg0}

    def is_minimal(self) -> bool:
        return not any(x and self.deg_minus1[c] == self.deg0[r]
                       for r, row in enumerate(self.diff) for c, x in enumerate(row))

    def key(self):
        """Isomorphism key for the syntactically indecomposable complexes used here."""
        pattern = tuple(tuple(bool(x) for x in row) for row in self.diff)
        return (self.deg_minus1, self.deg0, pattern)

    def label(self) -> str:
        if not self.deg_minus1:
            return "+".join(f"P{i}" for i in self.deg0)
        if not self.deg0:
            return "+".join(f"P{i}" for i in self.deg_minus1) + "[1]"
        return ("+".join(f"P{i}" for i in self.deg_minus1) + "->"
                + "+".join(f"P{i}" for i in self.deg0))

    def to_dict(self):
        def enc(x):
            return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return {"deg_minus1": list(self.deg_minus1), "deg0": list(self.deg0),
                "diff": [[enc(x) for x in row] for row in self.diff]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d):
        return cls(tuple(d["deg_minus1"]), tuple(d["deg0"]),
                   tuple(tuple(Fraction(x) for x in row) for row in d["diff"]))

    @classmethod
    def from_json(cls, s):
        return cls.from_dict(json.loads(s))


def stalk(i: int, shift: int = 0) -> TwoTermComplex:
    """P(i) in degree 0, or P(i)[1] for shift = 1."""
    return TwoTermComplex((i,), ()) if shift else TwoTermComplex((), (i,))


def presentation_complex(src: int, tgt: int) -> TwoTermComplex:
    return TwoTermComplex((src,), (tgt,), ((1,),))


# Hom in the homotopy category

def _graded(x: TwoTermComplex, shift: int = 0):
    """Terms and differentials of x[shift] as dicts keyed by degree."""
    terms = {k - shift: v for k, v in x.terms().items() if v}
    sign = -1 if shift % 2 else 1
    diffs = {}
    if x.deg_minus1 and x.deg0:
        diffs[-1 - shift] = [[sign * e for e in row] for row in x.diff]
    return terms, diffs


class _HomProblem:
    """Chain maps X -> Z and the null-homotopic ones, as vectors in one coordinate system."""

    def __init__(self, x: TwoTermComplex, z: TwoTermComplex, shift: int):
        self.xt, self.xd = _graded(x)
        self.zt, self.zd = _graded(z, shift)
        self.fvars = {}
        for k, src in self.xt.items():
            for r, t in enumerate(self.zt.get(k, ())):
                for c, s in enumerate(src):
                    if _allowed(s, t):
                        self.fvars[(k, r, c)] = len(self.fvars)
        self.size = len(self.fvars)

    def _d(self, d, k, r, c):
        m = d.get(k)
        return m[r][c] if m else 0

    def chain_equations(self):
        eqs = []
        degs = set(self.xt) | {k - 1 for k in self.xt}
        for k in sorted(degs):
            # d_Z^k f^k - f^{k+1} d_X^k = 0 as maps X^k -> Z^{k+1}
            for r in range(len(self.zt.get(k + 1, ()))):
                for c in range(len(self.xt.get(k, ()))):
                    row = [Fraction(0)] * self.size
                    for j in range(len(self.zt.get(k, ()))):
                        v = self.fvars.get((k, j, c))
                        if v is not None:
                            row[v] += self._d(self.zd, k, r, j)
                    for j in range(len(self.xt.get(k + 1, ()))):
                        v = self.fvars.get((k + 1, r, j))
                        if v is not None:
                            row[v] -= self._d(self.xd, k, j, c)
                    if any(row):
                        eqs.append(row)
        return eqs

    def homotopy_images(self):
        vecs = []
        for k, src in self.xt.items():
            tgt = self.zt.get(k - 1, ())
            for r, t in enumerate(tgt):
                for c, s in enumerate(src):
                    if not _allowed(s, t):
                        continue
                    vec = [Fraction(0)] * self.size
                    # d_Z^{k-1} h^k lands in f^k
                    for r2 in range(len(self.zt.get(k, ()))):
                        e = self._d(self.zd, k - 1, r2, r)
                        if e:
                            vec[self.fvars[(k, r2, c)]] += e
                    # h^k d_X^{k-1} lands in f^{k-1}
                    for c2 in range(len(self.xt.get(k - 1, ()))):
                        e = self._d(self.xd, k - 1, c, c2)
                        if e:
                            vec[self.fvars[(k - 1, r, c2)]] += e
                    if any(vec):
                        vecs.append(vec)
        return vecs

    def quotient_basis(self):
        chains = nullspace(self.chain_equations(), self.size)
        span = list(self.homotopy_images())
        basis = []
        for v in chains:
            if not in_span(span, v):
                span.append(v)
                basis.append(v)
        return basis


@lru_cache(maxsize=None)
def _problem(x: TwoTermComplex, y: TwoTermComplex, d: int) -> _HomProblem:
    return _HomProblem(x, y, d)


@lru_cache(maxsize=None)
def hom_dim_complexes(x: TwoTermComplex, y: TwoTermComplex, d: int) -> int:
    """dim Hom(x, y[d]) in the homotopy category."""
    pb = _problem(x, y, d)
    chains = pb.size - rank(pb.chain_equations(), pb.size) if pb.size else 0
    null = rank(pb.homotopy_images(), pb.size) if pb.size else 0
    return chains - null


@lru_cache(maxsize=None)
def _degree0_basis(x: TwoTermComplex, y: TwoTermComplex):
    return _problem(x, y, 0).quotient_basis()


def _as_matrices(pb: _HomProblem, vec):
    mats = {}
    for k, src in pb.xt.items():
        tgt = pb.zt.get(k, ())
        mats[k] = [[vec[pb.fvars[(k, r, c)]] if (k, r, c) in pb.fvars else Fraction(0)
                    for c in range(len(src))] for r in range(len(tgt))]
    return mats


def _composite_is_nonzero(x, l, y) -> bool:
    """Is (basis map l -> y) after (basis map x -> l) nonzero up to homotopy?"""
    f = _degree0_basis(x, l)
    g = _degree0_basis(l, y)
    if not f or not g:
        return False
    pf, pg, ph = _problem(x, l, 0), _problem(l, y, 0), _problem(x, y, 0)
    fm, gm = _as_matrices(pf, f[0]), _as_matrices(pg, g[0])
    vec = [Fraction(0)] * ph.size
    for (k, r, c), idx in ph.fvars.items():
        inner = len(pf.zt.get(k, ()))
        vec[idx] = sum((gm[k][r][t] * fm[k][t][c] for t in range(inner)), Fraction(0))
    return not in_span(ph.homotopy_images(), vec)


def _check_family(cs):
    keys = [c.key() for c in cs]
    if len(set(keys)) != len(keys):
        raise ValueError("summands must be pairwise non-isomorphic")


def is_presilting(cs) -> bool:
    return all(hom_dim_complexes(x, y, d) == 0 for x in cs for y in cs for d in (1, 2))


def is_silting(cs, n: int) -> bool:
    """2-term presilting with n pairwise non-isomorphic indecomposable summands."""
    cs = list(cs)
    _check_family(cs)
    return len(cs) == n and is_presilting(cs)


def is_tilting_complex(cs, n: int) -> bool:
    cs = list(cs)
    return is_silting(cs, n) and all(hom_dim_complexes(x, y, -1) == 0 for x in cs for y in cs)


def air_complex(pair: STTPair, n: int) -> list[TwoTermComplex]:
    """Minimal presentations of the summands plus P(e)[1] off the support."""
    if not is_support_tau_tilting(pair.modules, pair.support):
        raise ValueError("not a support tau-tilting pair")
    out = []
    for m in pair.modules:
        pres = projective_presentation(m)
        out.append(stalk(pres.p0) if pres.p1 is None else presentation_complex(pres.p1, pres.p0))
    out += [stalk(e, 1) for e in range(1, n + 1) if e not in pair.support]
    return sorted(out, key=lambda c: c.key())


def endomorphism_algebra_of_complex(cs, n: int) -> BoundQuiverAlgebra:
    from .modules import quiver_from_hom_data
    cs = list(cs)
    if not is_silting(cs, n):
        raise ValueError("not a silting collection")
    cs = sorted(cs, key=lambda c: c.key())
    labels = [c.label() for c in cs]
    homs = [[hom_dim_complexes(x, y, 0) for y in cs] for x in cs]
    if any(h > 1 for row in homs for h in row):
        raise AssertionError("Hom spaces between 2-term indecomposables are at most one-dimensional")
    return quiver_from_hom_data(labels, homs,
                                lambda i, l, j: _composite_is_nonzero(cs[i], cs[l], cs[j]))
