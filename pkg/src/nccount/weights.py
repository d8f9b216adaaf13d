"""Weight triples, the domination order, and the extended Dynkin quiver T(p)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .quiver import Quiver, a_tilde, d_tilde, e_tilde


class WeightError(ValueError):
    pass


@dataclass(frozen=True)
class WeightSequence:
    """A triple ``(p1, p2, p3)`` of positive integers, kept in the given order."""

    p: tuple[int, int, int]

    def __post_init__(self):
        p = tuple(int(x) for x in self.p)
        if len(p) != 3:
            raise WeightError(f"weight sequences have length 3, got {len(p)}")
        if any(x < 1 for x in p):
            raise WeightError(f"weights must be >= 1, got {p}")
        object.__setattr__(self, "p", p)

    @classmethod
    def parse(cls, text: str) -> "WeightSequence":
        """Parse the ``"2,3,5"`` syntax."""
        try:
            return cls(tuple(int(x) for x in text.split(",")))
        except ValueError as exc:
            raise WeightError(f"bad weight triple {text!r}: {exc}") from exc

    @property
    def total(self) -> int:
        return sum(self.p)

    @property
    def rank(self) -> int:
        """Rank of K_0 of T(p)."""
        return self.total - 1

    def normalized(self) -> tuple[int, int, int]:
        return tuple(sorted(self.p, reverse=True))

    def product(self) -> int:
        a, b, c = self.p
        return a * b * c

    def __iter__(self):
        return iter(self.p)

    def __str__(self):
        return ",".join(map(str, self.p))


def _ws(p) -> WeightSequence:
    return p if isinstance(p, WeightSequence) else WeightSequence(tuple(p))


def is_dynkin_type(p) -> bool:
    """True for (p1,p2,1), (2,2,p) with p >= 2, (2,3,3), (2,3,4), (2,3,5).

    The shapes are matched in the given order; use :func:`dynkin_form` to find
    a Dynkin-type rearrangement of an arbitrary triple.
    """
    a, b, c = _ws(p).p
    return c == 1 or (a, b) == (2, 2) or (a, b, c) in {(2, 3, 3), (2, 3, 4), (2, 3, 5)}


def dynkin_form(p) -> WeightSequence | None:
    """A permutation of ``p`` that is of Dynkin type, if there is one."""
    for perm in sorted(set(permutations(_ws(p).p)), reverse=True):
        if is_dynkin_type(perm):
            return WeightSequence(perm)
    return None


def preceq(p_small, p_big) -> bool:
    """``p_small`` is dominated by ``p_big``: some permutation s has
    ``p_small[s(i)] <= p_big[i]`` for all i."""
    a, b = _ws(p_small).p, _ws(p_big).p
    return any(all(a[s[i]] <= b[i] for i in range(3)) for s in permutations(range(3)))


def dynkin_type_triples(bound: int) -> list[WeightSequence]:
    """All Dynkin-type triples with entries <= bound, in lexicographic order."""
    out = []
    for a in range(1, bound + 1):
        for b in range(1, bound + 1):
            for c in range(1, bound + 1):
                if is_dynkin_type((a, b, c)):
                    out.append(WeightSequence((a, b, c)))
    return out


def to_quiver(p, orientation: str = "inward") -> Quiver:
    """The extended Dynkin quiver whose derived category is T(p).

    (p1, p2, 1) gives A~(p1, p2): a cycle with p1 arrows one way and p2 the
    other.  (2,2,p) gives D~(p+2) and (2,3,3|4|5) gives E~(6|7|8); for these the
    only orientation offered is ``"inward"`` (leaves towards branch vertices),
    since any orientation of a tree yields an equivalent derived category.
    """
    w = _ws(p)
    if not is_dynkin_type(w):
        raise WeightError(f"{w} is not of Dynkin type")
    if orientation != "inward":
        raise WeightError(f"unknown orientation {orientation!r}")
    a, b, c = w.p
    if c == 1:
        return a_tilde(a, b)
    if (a, b) == (2, 2):
        return d_tilde(c + 2)
    return e_tilde({3: 6, 4: 7, 5: 8}[c])


def canonical_gram(p) -> list[list[int]]:
    """Hom-dimension matrix of the canonical strong exceptional collection
    ``O, O(x1), ..., O((p1-1)x1), ..., O((p3-1)x3), O(c)``."""
    w = _ws(p)
    # (arm, position) labels; arm None for O and O(c)
    labels = [(None, 0)]
    for arm, pi in enumerate(w.p):
        labels += [(arm, k) for k in range(1, pi)]
    labels.append((None, 1))
    n = len(labels)
    g = [[0] * n for _ in range(n)]
    for i, (ai, ki) in enumerate(labels):
        for j, (aj, kj) in enumerate(labels):
            if j < i:
                continue
            if i == j:
                g[i][j] = 1
            elif ai is None and ki == 0:
                g[i][j] = 2 if j == n - 1 else 1
            elif j == n - 1:
                g[i][j] = 1
            elif ai == aj and ki <= kj:
                g[i][j] = 1
    return g


def canonical_quiver_paths(p) -> list[list[int]]:
    """Independent route to :func:`canonical_gram`: path counts in the
    canonical algebra's quiver modulo its single relation.

    The quiver has a source, a sink, and one path of ``p_i`` arrows between
    them per weight; the relation identifies a combination of the three long
    paths, removing one dimension from the source-to-sink paths.
    """
    w = _ws(p)
    verts = ["src"]
    edges = []
    for arm, pi in enumerate(w.p):
        chain = ["src"] + [f"{arm}:{k}" for k in range(1, pi)] + ["snk"]
        verts += chain[1:-1]
        edges += list(zip(chain, chain[1:]))
    verts.append("snk")
    idx = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    succ = {v: [t for s, t in edges if s == v] for v in verts}

    def count(u: str, v: str) -> int:
        if u == v:
            return 1
        return sum(count(t, v) for t in succ[u])

    g = [[count(verts[i], verts[j]) if i <= j else 0 for j in range(n)] for i in range(n)]
    # one relation among the t = 3 long paths
    g[idx["src"]][idx["snk"]] -= len(w.p) - 2
    return g

