from fractions import Fraction

import pytest

from siltedan.complexes import (TwoTermComplex, air_complex, endomorphism_algebra_of_complex,
                                hom_dim_complexes, is_silting, is_tilting_complex, presentation_complex,
                                stalk)
from siltedan.derived import complexes_of, enumerate_2term_silting
from siltedan.modules import STTPair, IntervalModule, enumerate_stt, hom_dim, tau
from siltedan.quiver import canonical_form, connected_components, linear_quiver


def test_complex_validation():
    with pytest.raises(ValueError):
        TwoTermComplex((1,), (2,), ((1,),))  # no map P(1) -> P(2)
    with pytest.raises(ValueError):
        TwoTermComplex((2,), (1,), ((1, 1),))
    c = presentation_complex(3, 1)
    assert c.is_minimal() and not TwoTermComplex((2,), (2,), ((1,),)).is_minimal()


def test_json_round_trip():
    c = TwoTermComplex((3, 2), (1,), ((Fraction(1, 2), 2),))
    assert c.to_dict() == {"deg_minus1": [3, 2], "deg0": [1], "diff": [["1/2", 2]]}
    assert TwoTermComplex.from_json(c.to_json()) == c


def test_hom_examples():
    assert hom_dim_complexes(stalk(1), stalk(1), 0) == 1
    assert hom_dim_complexes(stalk(1, 1), stalk(2), 0) == 0
    assert hom_dim_complexes(stalk(2), stalk(1, 1), -1) == 1


def test_split_complex_is_null_homotopic():
    # P(2) -id-> P(2) is contractible
    c = TwoTermComplex((2,), (2,), ((1,),))
    assert hom_dim_complexes(c, c, 0) == 0


@pytest.mark.parametrize("n", range(1, 6))
def test_presentations_recover_module_homs(n):
    # Hom between minimal presentations in degree 0 is Hom between the modules,
    # degree 1 is Ext^1 = D Hom(y, tau x)
    mods = [IntervalModule(i, j, n) for i in range(1, n + 1) for j in range(i, n + 1)]

    def pres(m):
        return stalk(m.lo) if m.is_projective else presentation_complex(m.hi + 1, m.lo)

    for x in mods:
        for y in mods:
            assert hom_dim_complexes(pres(x), pres(y), 0) == hom_dim(x, y)
            tx = tau(x)
            assert hom_dim_complexes(pres(x), pres(y), 1) == (hom_dim(y, tx) if tx else 0)


def test_silting_examples():
    for n in (1, 3, 5):
        assert is_silting([stalk(i) for i in range(1, n + 1)], n)
        assert is_silting([stalk(i, 1) for i in range(1, n + 1)], n)
    assert not is_silting([stalk(1), stalk(1, 1)], 2)
    assert is_tilting_complex([stalk(1), stalk(2)], 2)
    assert not is_tilting_complex([stalk(2), stalk(1, 1)], 2)
    assert is_silting([stalk(2), stalk(1, 1)], 2)


def test_non_isomorphic_required():
    with pytest.raises(ValueError):
        is_silting([stalk(1), stalk(1)], 2)


def test_tilting_count_a4():
    systems = enumerate_2term_silting(4)
    assert sum(is_tilting_complex(complexes_of(s), 4) for s in systems) == 28


def test_air_examples():
    n = 3
    free = STTPair(tuple(IntervalModule(i, n, n) for i in range(1, n + 1)), (1, 2, 3))
    assert air_complex(free, n) == sorted([stalk(i) for i in (1, 2, 3)], key=lambda c: c.key())
    assert air_complex(STTPair((), ()), n) == sorted([stalk(i, 1) for i in (1, 2, 3)],
                                                     key=lambda c: c.key())
    got = air_complex(STTPair((IntervalModule(1, 1, 2),), (1,)), 2)
    assert set(got) == {presentation_complex(2, 1), stalk(2, 1)}


def test_air_rejects_invalid_pair():
    with pytest.raises(ValueError):
        air_complex(STTPair((IntervalModule(1, 1, 2), IntervalModule(2, 2, 2)), (1, 2)), 2)


@pytest.mark.parametrize("n", range(1, 7))
def test_air_bijection(n):
    from_air = {tuple(c.key() for c in air_complex(p, n)) for p in enumerate_stt(n)}
    from_arcs = {tuple(sorted(c.key() for c in complexes_of(s))) for s in enumerate_2term_silting(n)}
    assert from_air == from_arcs and len(from_air) == len(enumerate_stt(n))
    for p in enumerate_stt(n):
        assert is_silting(air_complex(p, n), n)


def test_end_examples():
    for n in (1, 2, 4):
        e = endomorphism_algebra_of_complex([stalk(i) for i in range(1, n + 1)], n)
        assert canonical_form(e) == canonical_form(linear_quiver(n))
    e = endomorphism_algebra_of_complex([stalk(2), stalk(1, 1)], 2)
    assert len(connected_components(e)) == 2 and not e.arrows
    full = STTPair((IntervalModule(1, 1, 2), IntervalModule(1, 2, 2)), (1, 2))
    e = endomorphism_algebra_of_complex(air_complex(full, 2), 2)
    assert len(e.arrows) == 1


def test_end_requires_silting():
    with pytest.raises(ValueError):
        endomorphism_algebra_of_complex([stalk(1)], 2)
