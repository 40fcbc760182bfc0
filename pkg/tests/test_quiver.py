import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from siltedan.quiver import (Arrow, BoundQuiverAlgebra, Quiver, canonical_form,
                             connected_components, global_dimension, is_connected, is_gentle,
                             linear_quiver, simple_projective_dimension)


def relabel(a: BoundQuiverAlgebra, rng) -> BoundQuiverAlgebra:
    """Random vertex renaming plus a shuffle of vertex and arrow order."""
    names = [f"x{i}" for i in range(len(a.vertices))]
    rng.shuffle(names)
    ren = dict(zip(a.vertices, names))
    order = list(range(len(a.arrows)))
    rng.shuffle(order)
    where = {old: new for new, old in enumerate(order)}
    verts = [ren[v] for v in a.vertices]
    rng.shuffle(verts)
    arrows = [Arrow(ren[a.arrows[i].src], ren[a.arrows[i].tgt], a.arrows[i].grade) for i in order]
    rels = {(where[i], where[j]) for i, j in a.relations}
    return BoundQuiverAlgebra(Quiver(tuple(verts), tuple(arrows)), frozenset(rels))


def test_linear_is_connected():
    assert is_connected(linear_quiver(3))


def test_isolated_vertices_not_connected():
    assert not is_connected(BoundQuiverAlgebra.build(["a", "b"], []))


def test_empty_quiver_connected():
    assert is_connected(BoundQuiverAlgebra.build([], []))


def test_components_split_and_order():
    a = BoundQuiverAlgebra.build(["3", "1", "2"], [("1", "2")])
    comps = connected_components(a)
    assert [c.vertices for c in comps] == [("1", "2"), ("3",)]
    assert [len(c.arrows) for c in comps] == [1, 0]


def test_components_of_connected_is_identity():
    a = linear_quiver(4)
    assert connected_components(a) == [a]


def test_components_keep_relations():
    a = BoundQuiverAlgebra.build(["a", "b", "c", "d"], [("d", "a"), ("a", "b"), ("b", "c")], {(1, 2)})
    (c,) = connected_components(a)
    assert c.relations == {(1, 2)}
    b = BoundQuiverAlgebra.build(["z", "a", "b", "c"], [("a", "b"), ("b", "c")], {(0, 1)})
    first, second = connected_components(b)
    assert first.relations == {(0, 1)} and second.vertices == ("z",)


def test_relation_must_compose():
    with pytest.raises(ValueError):
        BoundQuiverAlgebra.build(["a", "b", "c"], [("a", "b"), ("a", "c")], {(0, 1)})


def test_arrow_endpoints_declared():
    with pytest.raises(ValueError):
        BoundQuiverAlgebra.build(["a"], [("a", "b")])


def test_canonical_relabel_reverse():
    a = BoundQuiverAlgebra.build(["1", "2", "3"], [("1", "2"), ("2", "3")])
    b = BoundQuiverAlgebra.build(["3", "2", "1"], [("3", "2"), ("2", "1")])
    assert canonical_form(a) == canonical_form(b)


def test_canonical_sees_relations():
    a = BoundQuiverAlgebra.build(["1", "2", "3"], [("1", "2"), ("2", "3")])
    b = BoundQuiverAlgebra.build(["1", "2", "3"], [("1", "2"), ("2", "3")], {(0, 1)})
    assert canonical_form(a) != canonical_form(b)


def test_canonical_sees_orientation_and_grade():
    a = BoundQuiverAlgebra.build("abc", [("a", "b"), ("b", "c")])
    b = BoundQuiverAlgebra.build("abc", [("a", "b"), ("c", "b")])
    c = BoundQuiverAlgebra.build("abc", [("a", "b", 1), ("b", "c")])
    assert len({canonical_form(a), canonical_form(b), canonical_form(c)}) == 3


def test_canonical_parallel_arrows():
    # Kronecker-style pieces with relations attached to different parallel copies
    base = ["a", "b", "c"]
    arrows = [("a", "b"), ("a", "b"), ("b", "c")]
    x = BoundQuiverAlgebra.build(base, arrows, {(0, 2)})
    y = BoundQuiverAlgebra.build(base, arrows, {(1, 2)})
    z = BoundQuiverAlgebra.build(base, arrows, {(0, 2), (1, 2)})
    assert canonical_form(x) == canonical_form(y) != canonical_form(z)


def _brute_isomorphic(a, b):
    from itertools import permutations
    if len(a.vertices) != len(b.vertices) or len(a.arrows) != len(b.arrows):
        return False
    bar = {(x.src, x.tgt, x.grade) for x in b.arrows}
    brel = {(b.arrows[i].src, b.arrows[i].tgt, b.arrows[j].tgt) for i, j in b.relations}
    for perm in permutations(b.vertices):
        m = dict(zip(a.vertices, perm))
        if {(m[x.src], m[x.tgt], x.grade) for x in a.arrows} != bar:
            continue
        arel = {(m[a.arrows[i].src], m[a.arrows[i].tgt], m[a.arrows[j].tgt]) for i, j in a.relations}
        if arel == brel:
            return True
    return False


@st.composite
def small_algebras(draw):
    k = draw(st.integers(1, 5))
    vs = [str(i) for i in range(k)]
    pairs = [(s, t) for s in vs for t in vs if int(s) < int(t)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=6)) if pairs else []
    grades = draw(st.lists(st.integers(0, 1), min_size=len(chosen), max_size=len(chosen)))
    arrows = [(s, t, g) for (s, t), g in zip(chosen, grades)]
    comp = [(i, j) for i, x in enumerate(arrows) for j, y in enumerate(arrows) if x[1] == y[0]]
    rels = draw(st.lists(st.sampled_from(comp), unique=True)) if comp else []
    return BoundQuiverAlgebra.build(vs, arrows, rels)


@settings(max_examples=150, deadline=None)
@given(small_algebras(), small_algebras())
def test_canonical_matches_brute_force(a, b):
    # no parallel arrows are generated, so the brute force over vertex maps is exact
    assert (canonical_form(a) == canonical_form(b)) == _brute_isomorphic(a, b)


@settings(max_examples=100, deadline=None)
@given(small_algebras(), st.integers(0, 10**6))
def test_canonical_is_relabeling_invariant(a, seed):
    assert canonical_form(relabel(a, random.Random(seed))) == canonical_form(a)


def test_gentle_linear():
    assert is_gentle(linear_quiver(5))


def test_three_outgoing_not_gentle():
    a = BoundQuiverAlgebra.build("abcd", [("a", "b"), ("a", "c"), ("a", "d")])
    assert not is_gentle(a)


def test_gentle_pairing_conditions():
    # two arrows leaving b after a -> b, neither composite zero: violates (G3)
    a = BoundQuiverAlgebra.build("abcd", [("a", "b"), ("b", "c"), ("b", "d")])
    assert not is_gentle(a)
    # one of them killed: gentle
    assert is_gentle(BoundQuiverAlgebra.build("abcd", [("a", "b"), ("b", "c"), ("b", "d")], {(0, 1)}))
    # both killed: violates (G2)
    assert not is_gentle(BoundQuiverAlgebra.build("abcd", [("a", "b"), ("b", "c"), ("b", "d")],
                                                  {(0, 1), (0, 2)}))


def test_global_dimension_examples():
    assert global_dimension(linear_quiver(3)) == 1
    a = BoundQuiverAlgebra.build("abc", [("a", "b"), ("b", "c")], {(0, 1)})
    assert global_dimension(a) == 2
    assert simple_projective_dimension(a, "a") == 2
    assert simple_projective_dimension(a, "c") == 0
    assert global_dimension(BoundQuiverAlgebra.build(["x"], [])) == 0


def test_global_dimension_long_chain():
    a = BoundQuiverAlgebra.build("abcde", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")],
                                 {(0, 1), (1, 2), (2, 3)})
    assert global_dimension(a) == 4
    # break the chain in the middle
    b = BoundQuiverAlgebra.build("abcde", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")],
                                 {(0, 1), (2, 3)})
    assert global_dimension(b) == 2


def test_global_dimension_rejects_cycles():
    a = BoundQuiverAlgebra.build("ab", [("a", "b"), ("b", "a")], {(0, 1), (1, 0)})
    with pytest.raises(ValueError):
        global_dimension(a)


def test_num_paths():
    assert linear_quiver(3).num_paths() == 6
    a = BoundQuiverAlgebra.build("abc", [("a", "b"), ("b", "c")], {(0, 1)})
    assert a.num_paths() == 5


def test_json_round_trip():
    a = BoundQuiverAlgebra.build("abc", [("a", "b", 1), ("b", "c")], {(0, 1)})
    d = json.loads(a.to_json())
    assert d == {"vertices": ["a", "b", "c"],
                 "arrows": [{"src": "a", "tgt": "b", "grade": 1}, {"src": "b", "tgt": "c", "grade": 0}],
                 "relations": [[0, 1]]}
    assert BoundQuiverAlgebra.from_json(a.to_json()) == a


def test_dot_export():
    a = BoundQuiverAlgebra.build("abc", [("a", "b", 1), ("b", "c")], {(0, 1)})
    dot = a.to_dot()
    assert '"a" -> "b" [label="1", style=dashed];' in dot
    assert '"a" -> "c" [style=dotted' in dot
    assert dot.startswith("digraph")
