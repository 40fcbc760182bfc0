import json

import pytest

from siltedan import classify as ce


def test_catalan():
    assert [ce.catalan(r) for r in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    with pytest.raises(ValueError):
        ce.catalan(-1)


def test_hta_values():
    assert [ce.hta_closed(n) for n in (1, 2, 3, 4)] == [1, 1, 3, 4]
    assert all(ce.hta_closed(n) == ce.hta_recurrence(n) for n in range(1, 30))


def test_nhta_values():
    assert [ce.nhta_closed(n) for n in (1, 2, 3, 4)] == [0, 0, 1, 6]
    assert all(ce.nhta_closed(n) == ce.nhta_recurrence(n) for n in range(1, 30))


def test_ta_and_silted_values():
    assert ce.ta_closed(4) == 10
    assert ce.ta_closed(1) == 1 and ce.ta_closed(2) == 1 and ce.ta_closed(3) == 4
    assert ce.ncsa_closed(2) == 1 and ce.ncsa_closed(1) == 0
    assert ce.ncsa_closed(4) == 5 and ce.sa_closed(4) == 15
    assert all(ce.ta_closed(n) == ce.hta_closed(n) + ce.nhta_closed(n) for n in range(1, 30))


def test_ncsa_closed_matches_pair_count():
    # unordered pairs of tilted classes of complementary ranks
    for n in range(1, 20):
        pairs = 0
        for a in range(1, n):
            b = n - a
            if a < b:
                pairs += ce.ta_closed(a) * ce.ta_closed(b)
            elif a == b:
                pairs += ce.ta_closed(a) * (ce.ta_closed(a) + 1) // 2
        assert ce.ncsa_closed(n) == pairs


@pytest.mark.parametrize("n", range(1, 8))
def test_counts_enumerated(n):
    assert ce.count_nhta(n).match and ce.count_hta(n).match and ce.count_ta(n).match


@pytest.mark.parametrize("n", range(1, 6))
def test_silted_counts_enumerated(n):
    assert ce.count_ncsa(n).match and ce.count_sa(n).match


def test_frozen_table_values():
    # closed-form values, also reproduced by the enumeration up to n = 6
    assert [ce.ta_closed(n) for n in range(1, 11)] == [1, 1, 4, 10, 36, 116, 401, 1366, 4742, 16540]
    assert [ce.ncsa_closed(n) for n in range(1, 7)] == [0, 1, 1, 5, 14, 56]
    assert [ce.sa_closed(n) for n in range(1, 7)] == [1, 2, 5, 15, 50, 172]


def test_count_report_row_four():
    r = ce.count_report(4)
    assert (r.triangulations, r.tilting_triangulations, r.stt, r.two_term_silting,
            r.non_tilting_2silt) == (42, 14, 42, 42, 14)
    assert (r.a_ta.enumerated, r.a_ncsa.enumerated, r.a_sa.enumerated) == (10, 5, 15)
    assert r.ok
    d = r.to_dict()
    assert d["a_hta"] == {"closed_form": 4, "enumerated": 4, "match": True, "recurrence": 4}


def test_count_report_without_silted_enumeration():
    r = ce.count_report(7, silted_max=6, derived_max=6)
    assert r.a_sa.enumerated is None and r.a_sa.match is None and r.ok
    assert r.two_term_silting is None
    assert ",," in ce.counts_to_csv([r])


def test_csv_and_json_tables():
    reps = ce.count_table(3)
    lines = ce.counts_to_csv(reps).splitlines()
    assert lines[0].startswith("n,triangulations,tilting_triangulations,stt")
    assert lines[3].split(",")[:6] == ["3", "14", "5", "14", "14", "4"]
    assert [row["n"] for row in json.loads(ce.counts_to_json(reps))] == [1, 2, 3]


def test_a4_catalog_multiplicities():
    cls = ce.silted_catalog(4, True)
    assert sorted(c.multiplicity for c in cls) == [2, 2, 2, 4, 4]
    assert len(ce.silted_catalog(4)) == 15
    tilted = ce.tilted_catalog(4)
    assert len(tilted) == 10
    assert sum(1 for c in tilted if c.representative.relations) == 6


def test_full_verify_small():
    rep = ce.full_verify(4)
    assert rep.passed, [c for c in rep.checks if not c.passed]
    assert {c.name for c in rep.checks} == {name for name, _ in ce.CHECKS}
    assert ce.full_verify(1).passed


def test_full_verify_reports_failures(monkeypatch):
    monkeypatch.setattr(ce, "CHECKS", ce.CHECKS + [("always-fails", lambda n: (False, "x")),
                                                   ("crashes", lambda n: 1 / 0)])
    rep = ce.full_verify(1)
    assert not rep.passed
    bad = {c.name for c in rep.checks if not c.passed}
    assert bad == {"always-fails", "crashes"}
