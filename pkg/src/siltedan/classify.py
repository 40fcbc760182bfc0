"""Catalogues of tilted and silted algebras, counting formulas, cross-checks.

Closed forms are evaluated with Fractions; the term
(1 + (-1)^(n-1)) 2^((n-5)/2) only survives for odd n, where the exponent is
an integer (possibly negative).
"""
from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import complexes as cx
from . import derived as dm
from . import modules as mc
from . import surface as sm
from .quiver import (canonical_form, connected_components, global_dimension, is_connected,
                     is_gentle, linear_quiver)


class VerificationError(AssertionError):
    """Two routes to the same quantity disagreed."""


def catalan(r: int) -> int:
    if r < 0:
        raise ValueError("r must be non-negative")
    return comb(2 * r, r) // (r + 1)


def _odd_term(n: int) -> Fraction:
    """(1 + (-1)^(n-1)) * 2^((n-5)/2)."""
    if n % 2 == 0:
        return Fraction(0)
    return 2 * Fraction(2) ** ((n - 5) // 2)


def _integral(x: Fraction) -> int:
    if x.denominator != 1:
        raise VerificationError(f"closed form gave a non-integer {x}")
    return x.numerator


def nhta_closed(n: int) -> int:
    return catalan(n) - 2 ** (n - 1)


@lru_cache(maxsize=None)
def nhta_recurrence(n: int) -> int:
    if n == 1:
        return 0
    return 2 * nhta_recurrence(n - 1) + sum(catalan(j - 1) * catalan(n - j) for j in range(2, n))


def hta_closed(n: int) -> int:
    return _integral(Fraction(2) ** (n - 2) + _odd_term(n))


@lru_cache(maxsize=None)
def hta_recurrence(n: int) -> int:
    # from splitting on where the quiver changes orientation
    if n <= 2:
        return 1
    return 2 ** (n - 3) + 2 * hta_recurrence(n - 2)


def ta_closed(n: int) -> int:
    return _integral(catalan(n) + _odd_term(n) - Fraction(2) ** (n - 2))


def ncsa_closed(n: int, ta=ta_closed) -> int:
    total = Fraction(0)
    for a in range(1, n):
        b = n - a
        if a != b:
            total += Fraction(ta(a) * ta(b), 2)
    if n % 2 == 0:
        h = ta(n // 2)
        total += Fraction(h * (h + 1), 2)
    return _integral(total)


def sa_closed(n: int) -> int:
    return ta_closed(n) + ncsa_closed(n)


# catalogues

@dataclass
class AlgebraClass:
    form: bytes
    representative: object
    members: list = field(default_factory=list)

    @property
    def multiplicity(self) -> int:
        return len(self.members)


def _group(items, algebra_of):
    classes: dict[bytes, AlgebraClass] = {}
    for item in items:
        alg = algebra_of(item)
        f = canonical_form(alg)
        if f not in classes:
            classes[f] = AlgebraClass(f, alg)
        classes[f].members.append(item)
    return list(classes.values())


@lru_cache(maxsize=None)
def tilted_catalog(n: int) -> tuple[AlgebraClass, ...]:
    """Isomorphism classes of A^Gamma over triangulations through c_P(1)."""
    return tuple(_group(sm.tilting_triangulations(n), sm.induced_algebra))


@lru_cache(maxsize=None)
def tilted_forms(n: int) -> frozenset:
    return frozenset(c.form for c in tilted_catalog(n))


@lru_cache(maxsize=None)
def silting_systems(n: int) -> tuple:
    return tuple(dm.iter_2term_silting(n))


def silted_algebra(system) -> object:
    return dm.h0(dm.induced_graded_algebra(system))


@lru_cache(maxsize=None)
def non_tilting_systems(n: int) -> tuple:
    return tuple(s for s in silting_systems(n) if dm.has_fan_jump(s))


@lru_cache(maxsize=None)
def silted_catalog(n: int, non_connected_only: bool = False) -> tuple[AlgebraClass, ...]:
    systems = non_tilting_systems(n) if non_connected_only else silting_systems(n)
    return tuple(_group(systems, silted_algebra))


def component_pair(alg) -> tuple:
    return tuple(sorted(canonical_form(c) for c in connected_components(alg)))


# counts

@dataclass
class Row:
    enumerated: int | None
    closed_form: int
    recurrence: int | None = None

    @property
    def match(self) -> bool | None:
        if self.enumerated is None:
            return None
        vals = [self.enumerated, self.closed_form] + ([self.recurrence] if self.recurrence is not None else [])
        return len(set(vals)) == 1

    def to_dict(self):
        return {"enumerated": self.enumerated, "closed_form": self.closed_form,
                "recurrence": self.recurrence, "match": self.match}


@dataclass
class CountReport:
    n: int
    triangulations: int
    tilting_triangulations: int
    stt: int
    two_term_silting: int | None
    non_tilting_2silt: int | None
    a_hta: Row
    a_nhta: Row
    a_ta: Row
    a_ncsa: Row
    a_sa: Row

    QUANTITIES = ("a_hta", "a_nhta", "a_ta", "a_ncsa", "a_sa")

    @property
    def ok(self) -> bool:
        return all(getattr(self, q).match is not False for q in self.QUANTITIES)

    def to_dict(self):
        d = {k: v for k, v in asdict(self).items() if k not in self.QUANTITIES}
        for q in self.QUANTITIES:
            d[q] = getattr(self, q).to_dict()
        d["ok"] = self.ok
        return d


def count_nhta(n: int):
    enumerated = sum(1 for t in sm.tilting_triangulations(n)
                     if sm.classify_triangulation(t) is sm.TiltedKind.NON_HEREDITARY)
    return Row(enumerated, nhta_closed(n), nhta_recurrence(n))


def count_hta(n: int):
    heredit = [c for c in tilted_catalog(n) if not c.representative.relations]
    return Row(len(heredit), hta_closed(n), hta_recurrence(n))


def count_ta(n: int):
    return Row(len(tilted_catalog(n)), ta_closed(n))


def count_ncsa(n: int, enumerate_silted: bool = True):
    if not enumerate_silted:
        return Row(None, ncsa_closed(n))
    pairs = {component_pair(silted_algebra(s)) for s in non_tilting_systems(n)}
    by_form = len(silted_catalog(n, True))
    if by_form != len(pairs):
        raise VerificationError("component-pair and whole-algebra dedup disagree")
    return Row(len(pairs), ncsa_closed(n))


def count_sa(n: int, enumerate_silted: bool = True):
    if not enumerate_silted:
        return Row(None, sa_closed(n))
    return Row(len(silted_catalog(n)), sa_closed(n))


def count_report(n: int, silted_max: int = 6, derived_max: int = 8) -> CountReport:
    two_term = sum(1 for _ in dm.iter_2term_silting(n)) if n <= derived_max else None
    esil = n <= silted_max
    return CountReport(
        n=n,
        triangulations=sum(1 for _ in sm.iter_triangulations(n)),
        tilting_triangulations=len(sm.tilting_triangulations(n)),
        stt=sum(1 for _ in mc.iter_stt(n)),
        two_term_silting=two_term,
        non_tilting_2silt=len(non_tilting_systems(n)) if esil else None,
        a_hta=count_hta(n), a_nhta=count_nhta(n), a_ta=count_ta(n),
        a_ncsa=count_ncsa(n, esil), a_sa=count_sa(n, esil))


def count_table(n_max: int, silted_max: int = 6, derived_max: int = 8) -> list[CountReport]:
    return [count_report(n, silted_max, derived_max) for n in range(1, n_max + 1)]


def counts_to_csv(reports) -> str:
    buf = io.StringIO()
    head = ["n", "triangulations", "tilting_triangulations", "stt", "two_term_silting",
            "non_tilting_2silt"]
    for q in CountReport.QUANTITIES:
        head += [f"{q}_enumerated", f"{q}_closed_form", f"{q}_match"]
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(head)
    for r in reports:
        row = [r.n, r.triangulations, r.tilting_triangulations, r.stt,
               "" if r.two_term_silting is None else r.two_term_silting,
               "" if r.non_tilting_2silt is None else r.non_tilting_2silt]
        for q in CountReport.QUANTITIES:
            x = getattr(r, q)
            row += ["" if x.enumerated is None else x.enumerated, x.closed_form,
                    "" if x.match is None else str(x.match).lower()]
        w.writerow(row)
    return buf.getvalue()


def counts_to_json(reports) -> str:
    return json.dumps([r.to_dict() for r in reports], sort_keys=True, indent=1)


# cross-checks

@dataclass
class Check:
    name: str
    n: int
    passed: bool
    detail: str = ""


def _chk_hom_oracle(n):
    mods = mc.all_modules(n)
    bad = [(x, y) for x in mods for y in mods if mc.hom_dim(x, y) != mc.hom_dim_oracle(x, y)]
    bad_tau = [m for m in mods if mc.tau(m) != mc.tau_oracle(m)]
    return not bad and not bad_tau, f"{len(mods)**2} pairs, {len(bad)} Hom and {len(bad_tau)} tau mismatches"


def _chk_triangulation_counts(n):
    tri = list(sm.iter_triangulations(n))
    til = [t for t in tri if t.contains_cp1()]
    her = [t for t in til if sm.classify_triangulation(t) is sm.TiltedKind.HEREDITARY]
    got = (len(tri), len(til), len(her))
    want = (catalan(n + 1), catalan(n), 2 ** (n - 1))
    return got == want, f"got {got}, expected {want}"


def _chk_stt(n):
    pairs = mc.enumerate_stt(n)
    full = [p for p in pairs if len(p.support) == n]
    p1 = mc.P(1, n)
    ok = len(pairs) == catalan(n + 1) and len(full) == catalan(n) and all(p1 in p.modules for p in full)
    return ok, f"{len(pairs)} pairs, {len(full)} with full support"


def _chk_curve_bijection(n):
    chords = [(a, b) for a in range(n + 3) for b in range(a + 2, n + 3) if sm.is_chord((a, b), n)]
    mods = [sm.curve_to_module(c, n) for c in chords if not sm.is_trivial(c)]
    images = {sm.module_of_triangulation(t) for t in sm.iter_triangulations(n)}
    ok = sorted(mods) == mc.all_modules(n) and images == set(mc.enumerate_stt(n))
    ok = ok and all(sm.triangulation_of_pair(p, n) is not None for p in images)
    return ok, f"{len(images)} distinct images"


def _chk_green_fan(n):
    return canonical_form(sm.MarkedDisk(n).construction_algebra()) == canonical_form(linear_quiver(n)), ""


def _chk_geometric_vs_end(n):
    bad = [t for t in sm.tilting_triangulations(n)
           if canonical_form(sm.induced_algebra(t))
           != canonical_form(mc.endomorphism_algebra(sm.module_of_triangulation(t).modules))]
    return not bad, f"{len(bad)} mismatches"


def _chk_injective(n):
    nh = [t for t in sm.tilting_triangulations(n)
          if sm.classify_triangulation(t) is sm.TiltedKind.NON_HEREDITARY]
    forms = {canonical_form(sm.induced_algebra(t)) for t in nh}
    return len(forms) == len(nh), f"{len(nh)} triangulations, {len(forms)} classes"


def _chk_hereditary_criterion(n):
    bad = 0
    for t in sm.tilting_triangulations(n):
        a = sm.induced_algebra(t)
        nonher = sm.classify_triangulation(t) is sm.TiltedKind.NON_HEREDITARY
        gd = global_dimension(a)
        if nonher != (gd >= 2) or nonher != bool(a.relations) or (n > 1 and not nonher and gd != 1):
            bad += 1
    return bad == 0, f"{bad} disagreements"


def _is_forest(a):
    return len(a.arrows) == len(a.vertices) - len(connected_components(a))


def _chk_gentle(n):
    algs = [sm.induced_algebra(t) for t in sm.tilting_triangulations(n)]
    algs += [silted_algebra(s) for s in silting_systems(n)]
    bad = sum(1 for a in algs if not (is_gentle(a) and _is_forest(a)))
    return bad == 0, f"{len(algs)} algebras, {bad} failures"


def _chk_2silt_air(n):
    systems = silting_systems(n)
    from_arcs = {tuple(sorted(c.key() for c in dm.complexes_of(s))) for s in systems}
    from_air = {tuple(c.key() for c in cx.air_complex(p, n)) for p in mc.enumerate_stt(n)}
    ok = len(systems) == catalan(n + 1) and from_arcs == from_air and len(from_air) == len(systems)
    ok = ok and all(cx.is_silting(dm.complexes_of(s), n) for s in systems)
    return ok, f"{len(systems)} systems"


def _chk_index_sum(n):
    bad = 0
    for s in silting_systems(n):
        for m in range(n + 1):
            here = [g for g in s.arcs if m in g.chord]
            for g1 in here:
                for g2 in here:
                    if g1 != g2 and (dm.intersection_index(g1, g2, m, n)
                                     + dm.intersection_index(g2, g1, m, n)) != 1:
                        bad += 1
    return bad == 0, f"{bad} violations"


def _chk_dimension_formula(n):
    arcs = dm.all_2term_arcs(n)
    bad = 0
    for g1 in arcs:
        for g2 in arcs:
            x1, x2 = dm.x_of(g1, n), dm.x_of(g2, n)
            for d in (-1, 0, 1):
                if dm.int_d(g1, g2, d, n) != cx.hom_dim_complexes(x1, x2, d):
                    bad += 1
    return bad == 0, f"{len(arcs)}^2 pairs x 3 degrees, {bad} mismatches"


def _chk_h0_vs_end(n):
    bad = sum(1 for s in silting_systems(n)
              if canonical_form(silted_algebra(s))
              != canonical_form(cx.endomorphism_algebra_of_complex(dm.complexes_of(s), n)))
    return bad == 0, f"{bad} mismatches"


def _chk_fan_jump(n):
    bad = sum(1 for s in silting_systems(n)
              if dm.has_fan_jump(s) == cx.is_tilting_complex(dm.complexes_of(s), n))
    return bad == 0, f"{bad} mismatches"


def _chk_non_tilting_structure(n):
    bad = []
    for s in non_tilting_systems(n):
        alg = cx.endomorphism_algebra_of_complex(dm.complexes_of(s), n)
        comps = connected_components(alg)
        ranks = [len(c.vertices) for c in comps]
        ok = (len(comps) == 2 and sum(ranks) == n and all(r < n for r in ranks)
              and all(canonical_form(c) in tilted_forms(len(c.vertices)) for c in comps))
        if not ok:
            bad.append(s)
    return not bad, f"{len(non_tilting_systems(n))} non-tilting systems, {len(bad)} failures"


def _chk_connected_is_tilted(n):
    connected = {c.form for c in silted_catalog(n) if is_connected(c.representative)}
    return connected == set(tilted_forms(n)), f"{len(connected)} connected silted classes"


def _chk_no_strictly_shod(n):
    dims = {global_dimension(c) for s in silting_systems(n)
            for c in connected_components(silted_algebra(s))}
    return dims <= {0, 1, 2}, f"global dimensions seen: {sorted(dims)}"


def _chk_counts(n):
    rep = count_report(n, silted_max=n, derived_max=n)
    rows = {q: getattr(rep, q).to_dict() for q in CountReport.QUANTITIES}
    return rep.ok, json.dumps(rows, sort_keys=True)


def _chk_example_a4(n):
    if n != 4:
        return True, "only meaningful for n = 4"
    nt = non_tilting_systems(4)
    mult = sorted(c.multiplicity for c in silted_catalog(4, True))
    ok = (len(silting_systems(4)) == 42 and len(nt) == 14 and mult == [2, 2, 2, 4, 4]
          and len(tilted_catalog(4)) == 10 and len(silted_catalog(4)) == 15)
    return ok, f"{len(nt)} non-tilting, multiplicities {mult}"


CHECKS = [
    ("hom-and-tau-oracle", _chk_hom_oracle),
    ("triangulation-counts", _chk_triangulation_counts),
    ("support-tau-tilting", _chk_stt),
    ("curve-module-bijection", _chk_curve_bijection),
    ("green-fan-is-linear", _chk_green_fan),
    ("geometric-algebra-vs-End", _chk_geometric_vs_end),
    ("non-hereditary-injective", _chk_injective),
    ("hereditary-criterion", _chk_hereditary_criterion),
    ("gentle-forests", _chk_gentle),
    ("two-term-silting-vs-stt", _chk_2silt_air),
    ("index-sum-one", _chk_index_sum),
    ("dimension-formula", _chk_dimension_formula),
    ("h0-vs-End", _chk_h0_vs_end),
    ("fan-jump-iff-non-tilting", _chk_fan_jump),
    ("non-tilting-splits", _chk_non_tilting_structure),
    ("connected-silted-are-tilted", _chk_connected_is_tilted),
    ("no-strictly-shod", _chk_no_strictly_shod),
    ("counting-formulas", _chk_counts),
    ("worked-example-A4", _chk_example_a4),
]


@dataclass
class VerifyReport:
    n_max: int
    checks: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self):
        return {"n_max": self.n_max, "passed": self.passed,
                "checks": [asdict(c) for c in self.checks]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1)


def full_verify(n_max: int, progress=None) -> VerifyReport:
    from . import config
    config.check_n(n_max)
    checks = []
    for n in range(1, n_max + 1):
        for name, fn in CHECKS:
            t0 = time.perf_counter()
            try:
                ok, detail = fn(n)
            except Exception as exc:  # a crashing check is a failed check
                ok, detail = False, f"{type(exc).__name__}: {exc}"
            checks.append(Check(name, n, bool(ok), detail))
            if progress:
                progress(checks[-1], time.perf_counter() - t0)
    return VerifyReport(n_max, checks)
