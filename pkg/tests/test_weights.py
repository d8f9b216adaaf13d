import itertools

import pytest

from nccount import linalg as la
from nccount.quiver import classify
from nccount.weights import (WeightError, WeightSequence, canonical_gram, canonical_quiver_paths,
                             dynkin_form, dynkin_type_triples, is_dynkin_type, preceq, to_quiver)

TRIPLES = [WeightSequence(p) for p in itertools.product(range(1, 7), repeat=3)]


def test_dynkin_examples():
    assert is_dynkin_type((1, 1, 1))
    assert is_dynkin_type((2, 3, 5))
    assert not is_dynkin_type((3, 3, 3))
    assert not is_dynkin_type((2, 3, 6))
    assert len(dynkin_type_triples(6)) == 44


def test_preceq_examples():
    assert preceq((2, 2, 2), (2, 3, 3))
    assert not preceq((2, 2, 2), (7, 9, 1))
    assert all(preceq((1, 1, 1), p) for p in TRIPLES)


def test_preceq_matches_sorted_comparison():
    for a in TRIPLES:
        for b in TRIPLES[::7]:
            sa, sb = sorted(a.p), sorted(b.p)
            assert preceq(a, b) == all(x <= y for x, y in zip(sa, sb))


def test_preceq_partial_order():
    sorted_triples = sorted({tuple(sorted(p.p)) for p in TRIPLES})
    for a in sorted_triples:
        assert preceq(a, a)
    for a, b in itertools.product(sorted_triples, repeat=2):
        if preceq(a, b) and preceq(b, a):
            assert a == b
    for a, b, c in itertools.product(sorted_triples[::3], repeat=3):
        if preceq(a, b) and preceq(b, c):
            assert preceq(a, c)


def test_strict_domination_shrinks_total():
    for a in TRIPLES[::2]:
        for b in TRIPLES:
            if preceq(a, b) and sorted(a.p) != sorted(b.p):
                assert a.total < b.total


def test_dynkin_type_closed_downward():
    for b in TRIPLES:
        if not is_dynkin_type(b):
            continue
        for a in TRIPLES:
            if preceq(a, b):
                assert dynkin_form(a) is not None


@pytest.mark.parametrize("p", dynkin_type_triples(6))
def test_to_quiver_vertex_count_and_type(p):
    q = to_quiver(p)
    assert q.n == p.total - 1 == p.rank
    (c,) = classify(q)
    assert c.label.startswith(("A~", "D~", "E~"))


def test_to_quiver_examples():
    assert to_quiver((1, 1, 1)).arrow_counts() == {(0, 1): 2}
    assert to_quiver((2, 3, 5)).n == 9
    q = to_quiver((2, 2, 1))
    (c,) = classify(q)
    assert q.n == 4 and c.orientation == (2, 2)
    with pytest.raises(WeightError):
        to_quiver((3, 3, 3))


def test_canonical_gram_examples():
    assert canonical_gram((1, 1, 1)) == [[1, 2], [0, 1]]
    assert canonical_gram((2, 1, 1)) == [[1, 1, 2], [0, 1, 1], [0, 0, 1]]


@pytest.mark.parametrize("p", [WeightSequence(p) for p in itertools.product(range(1, 5), repeat=3)])
def test_canonical_gram_oracles(p):
    g = canonical_gram(p)
    n = p.total - 1
    assert len(g) == n and all(len(r) == n for r in g)
    assert g == canonical_quiver_paths(p)
    assert la.qmat(g).det() == 1


def _charpoly_coxeter(m):
    g = la.qmat(m)
    cox = -(g.inv() * g.transpose())
    return [int(c) for c in cox.charpoly().coeffs()]


@pytest.mark.parametrize("p", dynkin_type_triples(5))
def test_coxeter_polynomial_matches_quiver(p):
    """Derived-equivalent algebras share the Coxeter polynomial: the canonical
    algebra of p against the Euler matrix of the extended Dynkin quiver."""
    assert _charpoly_coxeter(canonical_gram(p)) == _charpoly_coxeter(to_quiver(p).euler_matrix())


def test_weight_validation():
    with pytest.raises(WeightError):
        WeightSequence((0, 1, 1))
    with pytest.raises(WeightError):
        WeightSequence((1, 1))
    with pytest.raises(WeightError):
        WeightSequence.parse("2,x,3")
    assert WeightSequence.parse("2,3,5").p == (2, 3, 5)
    assert WeightSequence((1, 3, 2)).normalized() == (3, 2, 1)
