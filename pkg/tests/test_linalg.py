import random

from nccount import linalg as la


def test_bareiss_matches_flint():
    rng = random.Random(7)
    for _ in range(300):
        r, c = rng.randint(1, 8), rng.randint(1, 8)
        rows = [[rng.choice([0, 0, 1, -1, 2, 3]) for _ in range(c)] for _ in range(r)]
        assert la.bareiss_rank(rows) == la.rank(la.qmat(rows))


def test_nullspace_normal_form():
    m = la.qmat([[1, 2, 3], [2, 4, 6]])
    k, free = la.nullspace(m)
    assert free == [1, 2] and la.is_zero(m * k)
    for j, f in enumerate(free):
        assert k[f, j] == 1


def test_image_complement_completes_span():
    m = la.qmat([[1, 0], [1, 0], [0, 0]])
    comp = la.image_complement(m)
    full = la.hstack([m, la.select_cols(la.eye(3), comp)], 3)
    assert la.rank(full) == 3 and len(comp) == 2


def test_empty_shapes():
    z = la.zero(0, 3)
    assert la.shape(z) == (0, 3) and la.rank(z) == 0
    k, free = la.nullspace(z)
    assert la.shape(k) == (3, 3) and free == [0, 1, 2]
    assert la.to_strings(la.qmat([["1/2", 3]])) == [["1/2", "3"]]
