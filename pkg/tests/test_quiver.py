import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nccount import linalg as la
from nccount.quiver import (Kind, Quiver, QuiverError, builtin, classify, euler_form, is_dynkin,
                            kronecker, star, tits_form)

NAMES = ["K(2)", "K(3)", "A~(1,1)", "A~(2,1)", "A~(2,2)", "A~(3,2)", "D~(4)", "D~(5)", "D~(7)",
         "E~(6)", "E~(7)", "E~(8)", "A(1)", "A(3)", "D(4)", "D(6)", "E(6)", "E(7)", "E(8)"]


def test_euler_examples():
    k2 = kronecker(2)
    assert euler_form(k2, (1, 0), (0, 1)) == -2
    assert euler_form(k2, (1, 0), (1, 0)) == 1


def test_dtilde4_null_root_with_sink_centre():
    q = Quiver(["c", "1", "2", "3", "4"], [(v, "c") for v in "1234"])
    d = q.dimvector({"c": 2, "1": 1, "2": 1, "3": 1, "4": 1})
    assert euler_form(q, d, d) == 0
    (comp,) = classify(q)
    assert comp.label == "D~4" and comp.null_root == d


def test_tits_examples():
    assert tits_form(kronecker(2), (1, 1)) == 0
    assert tits_form(kronecker(2), (1, 2)) == 1
    assert tits_form(kronecker(3), (1, 1)) == -1


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        euler_form(kronecker(2), (1, 0, 0), (1, 0))


def test_classify_examples():
    (c,) = classify(kronecker(2))
    assert (c.kind, c.label, c.null_root) == (Kind.EXTENDED_DYNKIN, "A~1", (1, 1))
    assert c.pretty() == "Ã₁"
    q1 = Quiver(["1", "2", "3"], [("1", "2"), ("2", "3"), ("1", "3")])
    (c,) = classify(q1)
    assert c.label == "A~2" and c.orientation == (2, 1)
    assert [c.kind for c in classify(kronecker(3))] == [Kind.WILD]


@pytest.mark.parametrize("name,label", [
    ("A~(2,2)", "A~3"), ("D~(4)", "D~4"), ("D~(6)", "D~6"), ("E~(6)", "E~6"), ("E~(7)", "E~7"),
    ("E~(8)", "E~8"), ("A(4)", "A4"), ("D(5)", "D5"), ("E(7)", "E7")])
def test_builtins_classify(name, label):
    assert [c.label for c in classify(builtin(name))] == [label]


def test_disconnected_components():
    q = Quiver(["a", "b", "c", "d", "e"], [("a", "b"), ("c", "d"), ("c", "d")])
    assert [c.label for c in classify(q)] == ["A2", "A~1", "A1"]
    assert not is_dynkin(q)


def test_validation():
    with pytest.raises(QuiverError):
        Quiver(["1", "2"], [("1", "2"), ("2", "1")])
    with pytest.raises(QuiverError):
        Quiver(["1"], [("1", "1")])
    with pytest.raises(QuiverError):
        Quiver(["1", "1"], [])
    with pytest.raises(QuiverError):
        Quiver(["1"], [("1", "2")])
    with pytest.raises(QuiverError):
        builtin("Z(3)")
    with pytest.raises(QuiverError):
        Quiver.from_json('{"vertices": ["1"]')


def test_json_roundtrip():
    q = builtin("A~(3,2)")
    back = Quiver.from_json(q.to_json())
    assert back == q
    assert json.loads(q.to_json())["arrows"]


@pytest.mark.parametrize("name", NAMES)
def test_euler_matrix_unitriangular(name):
    q = builtin(name)
    m = q.euler_matrix()
    assert all(m[i][i] == 1 for i in range(q.n))
    assert all(m[i][j] == 0 for i in range(q.n) for j in range(i))
    assert la.qmat(m).det() == 1
    for s, t in q.arrows:
        assert s < t


@pytest.mark.parametrize("name", [n for n in NAMES if "~" in n or n == "K(2)"])
def test_null_root_spans_radical(name):
    q = builtin(name)
    (c,) = classify(q)
    delta = c.null_root
    assert min(delta) >= 1 and euler_form(q, delta, delta) == 0
    for v in range(q.n):
        e = [0] * q.n
        e[v] = 1
        assert euler_form(q, delta, e) + euler_form(q, e, delta) == 0


vectors = st.lists(st.integers(-6, 6), min_size=5, max_size=5)


@settings(max_examples=150, deadline=None)
@given(vectors, vectors, vectors, st.integers(-4, 4))
def test_euler_bilinear(d, d2, e, k):
    q = builtin("D~(4)")
    dd = [a + b for a, b in zip(d, d2)]
    assert euler_form(q, dd, e) == euler_form(q, d, e) + euler_form(q, d2, e)
    assert euler_form(q, e, dd) == euler_form(q, e, d) + euler_form(q, e, d2)
    assert euler_form(q, [k * x for x in d], e) == k * euler_form(q, d, e)
    assert tits_form(q, d) == euler_form(q, d, d)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), max_size=10))
def test_topological_storage(pairs):
    arrows = [(str(min(a, b)), str(max(a, b))) for a, b in pairs if a != b]
    verts = [str(v) for v in reversed(range(6))]
    q = Quiver(verts, arrows)
    assert all(s < t for s, t in q.arrows)
    assert sorted(q.vertices) == sorted(verts)
    assert sum(q.arrow_counts().values()) == len(arrows)


def test_star_orientation_points_inward():
    q = star([1, 2, 2])
    c = q.index("c")
    assert all(t == c or t != c and s != c for s, t in q.arrows)
    assert all(s != c for s, t in q.arrows)
