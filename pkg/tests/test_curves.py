import itertools

import pytest

from nccount import reps as rp
from nccount.curves import (CurveStatus, Verdict, cluster_into_curves, count_Cl, decide_embedding,
                            find_strong_pairs, gram_witness_search, k0_key, ladder_closure,
                            semiorthogonal_graph, to_dot)
from nccount.derived import derived_hom
from nccount.quiver import builtin, euler_form, kronecker
from nccount.weights import WeightError, canonical_gram, dynkin_type_triples, preceq, to_quiver

K2 = kronecker(2)


def test_kronecker_pairs_are_ladder_pairs():
    pairs = find_strong_pairs(K2, 1, 3)
    assert pairs
    for p in pairs:
        assert p.hom == 2
        a, b = p.e1.dims, p.e2.dims
        assert abs(a[0] - a[1]) == 1 and abs(b[0] - b[1]) == 1
        for k in (-2, -1, 1, 2):
            assert derived_hom(p.e1, p.e2, k) == 0
        for k in range(-2, 3):
            assert derived_hom(p.e2, p.e1, k) == 0
    keys = {p.key for p in pairs}
    assert ((0, 1), (1, 2), 0) in keys and ((1, 0), (0, 1), 1) in keys


def test_kronecker_has_no_orthogonal_pairs():
    # every pair of exceptional K(2)-modules has Hom* nonzero in one direction
    assert find_strong_pairs(K2, -1, 4) == []


def test_orthogonal_pairs_exist_in_a3():
    pairs = find_strong_pairs(builtin("A(3)"), -1, 1)
    assert ((0, 0, 1), (1, 0, 0), 0) in {p.key for p in pairs}


@pytest.mark.parametrize("name", ["A(2)", "A(3)", "D(4)"])
def test_dynkin_has_no_positive_genus(name):
    for l in range(1, 5):
        assert find_strong_pairs(builtin(name), l, 4) == []


def test_kronecker_single_curve():
    curves, collisions = cluster_into_curves(find_strong_pairs(K2, 1, 4), K2, 4)
    assert len(curves) == 1 and not collisions
    c = curves[0]
    assert c.genus == 1 and c.status is CurveStatus.OPEN
    assert len(c.ladder) == 8  # (n, n+1) and (n+1, n) for n <= 3


def test_d4_tilde_eight_curves_distinct_spans():
    q = builtin("D~(4)")
    res = count_Cl(q, 1, 6)
    assert res.count == 8 and res.stable and res.undecided == 0
    assert len({c.k0_key for c in res.curves}) == 8
    assert not res.collisions


def test_counts_small_windows():
    assert count_Cl(to_quiver((2, 1, 1)), 1, 3).count == 2
    assert count_Cl(builtin("D~(4)"), 2, 5).count == 0
    assert count_Cl(kronecker(3), 2, 3).count >= 1


def test_genus_one_ladder_invariants():
    q = to_quiver((2, 2, 1))
    res = count_Cl(q, 1, 5, check_stable=False)
    for c in res.curves:
        lad = c.ladder
        for x, y in zip(lad, lad[1:]):
            assert derived_hom(x, y, 0) == 2
            assert all(derived_hom(x, y, k) == 0 for k in (-2, -1, 1, 2))
        for x, y, z in zip(lad, lad[1:], lad[2:]):
            assert all(a + b == 2 * m for a, m, b in zip(x.k0_class(), y.k0_class(), z.k0_class()))


def test_genus_zero_closure_is_finite():
    q = builtin("A(2)")
    (p,) = [p for p in find_strong_pairs(q, 0, 1) if p.key == ((0, 1), (1, 1), 0)]
    pairs, ladder, status = ladder_closure(p, 1)
    assert status is CurveStatus.CLOSED and len(ladder) == 3
    assert count_Cl(q, 0, 1).count == 1


def test_k0_key_is_canonical():
    assert k0_key((1, 2), (0, 1)) == k0_key((1, 0), (3, 5)) == ("1,0", "0,1")
    assert k0_key((1, 1, 0), (2, 2, 0)) == ("1,1,0",)


def test_decide_embedding_examples():
    assert decide_embedding((2, 2, 2), (2, 3, 3)) is Verdict.NON_EMPTY_FINITE
    assert decide_embedding((2, 2, 2), (4, 3, 1)) is Verdict.EMPTY
    assert decide_embedding((2, 3, 4), (2, 3, 4)) is Verdict.NON_EMPTY_FINITE
    with pytest.raises(WeightError):
        decide_embedding((3, 3, 3), (2, 3, 5))


def test_decide_embedding_monotone():
    ts = dynkin_type_triples(5)
    for a, b, c in itertools.product(ts, repeat=3):
        if preceq(a, b) and decide_embedding(b, c) is Verdict.NON_EMPTY_FINITE:
            assert decide_embedding(a, c) is Verdict.NON_EMPTY_FINITE


def test_gram_witness_examples():
    w = gram_witness_search((1, 1, 1), K2, 2)
    assert [(o.dims, o.shift) for o in w] == [((0, 1), 0), ((1, 2), 0)]
    assert w.strong and w.gram() == canonical_gram((1, 1, 1))
    w = gram_witness_search((2, 1, 1), builtin("D~(4)"), 4)
    assert w is not None and w.strong and w.gram() == canonical_gram((2, 1, 1))
    assert gram_witness_search((2, 2, 2), to_quiver((2, 1, 1)), 4) is None


def test_graph():
    res = count_Cl(K2, 1, 4, check_stable=False)
    g = semiorthogonal_graph(res.curves)
    assert g.number_of_nodes() == 1 and g.number_of_edges() == 0
    res = count_Cl(builtin("D~(4)"), 1, 3, check_stable=False)
    g = semiorthogonal_graph(res.curves)
    assert g.number_of_nodes() == 8
    for i, j in g.edges():
        assert not g.has_edge(j, i)
        for x in res.curves[i].ladder:
            for y in res.curves[j].ladder:
                assert rp.hom_dim(y.module, x.module) == 0 and rp.ext_dim(y.module, x.module) == 0
    assert to_dot(res.curves, g).startswith('digraph "curves"')


def test_a3_genus_minus_one_curves():
    # orthogonal pairs in A3 generate A1 x A1; both orders give one subcategory
    q = builtin("A(3)")
    res = count_Cl(q, -1, 3, check_stable=False)
    assert res.count == 4 and all(c.status is CurveStatus.CLOSED for c in res.curves)
    for c in res.curves:
        e, f = c.representative.e1.dims, c.representative.e2.dims
        assert euler_form(q, e, f) == euler_form(q, f, e) == 0


def test_result_record():
    rec = count_Cl(K2, 1, 3).to_dict()
    assert set(rec) >= {"quiver", "l", "window", "count", "truncated", "curves"}
    assert set(rec["curves"][0]) >= {"k0_key", "ladder_dims", "representative_pair"}
