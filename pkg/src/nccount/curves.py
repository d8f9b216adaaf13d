"""Strong exceptional pairs, the subcategories they generate, and their counts.

A strong pair ``(E1, E2)`` with ``hom(E1, E2) = l + 1`` generates a copy of
D^b(K(l+1)).  For ``l >= 1`` the exceptional objects of that copy form a
doubly infinite ladder ``s_i`` with triangles ``s_{i-1} -> s_i^{l+1} -> s_{i+1}``;
consecutive ladder members are again strong pairs of the same kind.  Two
pairs generate the same subcategory iff one is reached from the other by
mutation, which is how pairs are grouped into curves.
"""

from __future__ import annotations

import enum
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import networkx as nx

from . import linalg as la
from . import reps as rp
from .derived import (DerivedObject, Enumeration, ExcCollection, enumerate_exceptional,
                      left_mutation, right_mutation, thread_count)
from .quiver import Quiver, euler_form
from .weights import WeightError, _ws, canonical_gram, is_dynkin_type, preceq


@dataclass(frozen=True)
class StrongPair:
    """``(E1, E2)`` normalized so that E1 has shift 0."""

    e1: DerivedObject
    e2: DerivedObject

    @property
    def key(self) -> tuple:
        return (self.e1.dims, self.e2.dims, self.e2.shift - self.e1.shift)

    @property
    def hom(self) -> int:
        return _hom0(self.e1, self.e2)

    def to_dict(self) -> dict:
        return {"E1": {"dims": list(self.e1.dims), "shift": self.e1.shift},
                "E2": {"dims": list(self.e2.dims), "shift": self.e2.shift}}


def _hom0(x: DerivedObject, y: DerivedObject) -> int:
    n = y.shift - x.shift
    if n == 0:
        return rp.hom_dim(x.module, y.module)
    if n == 1:
        return rp.ext_dim(x.module, y.module)
    return 0


def strong_shift(e: rp.Representation, f: rp.Representation, l: int) -> int | None:
    """The shift s making (E, F[s]) a strong pair with hom l+1, or None."""
    q = e.quiver
    if euler_form(q, f.dims, e.dims) != 0:
        return None
    chi = euler_form(q, e.dims, f.dims)
    if abs(chi) != l + 1:
        return None
    if rp.hom_dim(f, e) != 0:
        return None
    h, x = rp.hom_dim(e, f), rp.ext_dim(e, f)
    if l == -1:
        return 0 if h == x == 0 else None
    if (h, x) == (l + 1, 0):
        return 0
    if (h, x) == (0, l + 1):
        return 1
    return None


def find_strong_pairs(q: Quiver, l: int, window: int,
                      objects: Enumeration | None = None) -> list[StrongPair]:
    """Strong pairs (E1, E2) with hom(E1, E2) = l+1 among the exceptional objects
    with dimension entries <= window."""
    if l < -1:
        raise ValueError("l must be >= -1")
    objs = objects if objects is not None else enumerate_exceptional(q, window)
    mods = [o.module for o in objs]
    # K_0 pre-filter: <f, e> = 0 and |<e, f>| = l + 1 are necessary
    cands = [(a, b) for a in range(len(mods)) for b in range(len(mods)) if a != b
             and euler_form(q, mods[b].dims, mods[a].dims) == 0
             and abs(euler_form(q, mods[a].dims, mods[b].dims)) == l + 1]

    def test(ab):
        a, b = ab
        return strong_shift(mods[a], mods[b], l)

    workers = thread_count()
    if workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            shifts = list(ex.map(test, cands))
    else:
        shifts = [test(c) for c in cands]
    return [StrongPair(DerivedObject(mods[a]), DerivedObject(mods[b], s))
            for (a, b), s in zip(cands, shifts) if s is not None]


def k0_key(e: Sequence[int], f: Sequence[int]) -> tuple[str, ...]:
    """Canonical form (RREF rows) of the rational span of two classes."""
    r, piv = la.rref(la.qmat([list(e), list(f)]))
    rows = la.to_fractions(r)[:len(piv)]
    return tuple(",".join(str(x) for x in row) for row in rows)


class CurveStatus(enum.Enum):
    CLOSED = "closed"
    OPEN = "open"
    UNDECIDED = "undecided"


@dataclass
class NcCurve:
    """A subcategory generated by a strong pair, seen through a window."""

    genus: int
    pairs: list[StrongPair]
    ladder: list[DerivedObject]
    k0_key: tuple[str, ...]
    status: CurveStatus
    members: list[StrongPair] = field(default_factory=list)

    @property
    def representative(self) -> StrongPair:
        return self.members[0] if self.members else self.pairs[0]

    def ladder_dims(self) -> list[tuple[int, ...]]:
        return [o.dims for o in self.ladder]

    def to_dict(self) -> dict:
        return {"k0_key": list(self.k0_key),
                "ladder_dims": [list(d) for d in self.ladder_dims()],
                "representative_pair": self.representative.to_dict(),
                "status": self.status.value}


def _normalize(x: DerivedObject, y: DerivedObject) -> StrongPair:
    return StrongPair(x.shifted(-x.shift), y.shifted(-x.shift))


def _in_window(o: DerivedObject, window: int) -> bool:
    return all(d <= window for d in o.dims)


def _reenters(a: Sequence[int], b: Sequence[int], l: int, window: int, steps: int) -> bool:
    """Run the K_0 recursion c'' = (l+1) c' - c outward from the last two in-window
    classes and report whether a later class of constant sign fits the window."""
    for _ in range(steps):
        a, b = b, tuple((l + 1) * y - x for x, y in zip(a, b))
        if (all(x >= 0 for x in b) or all(x <= 0 for x in b)) and max(abs(x) for x in b) <= window:
            return True
    return False


def ladder_closure(pair: StrongPair, window: int, max_steps: int = 10_000):
    """All pairs reachable from ``pair`` by left/right mutation inside the window.

    Returns ``(pairs, ladder, status)``.  For ``l >= 1`` the pairs form a path
    ``(s_i, s_{i+1})`` and ``ladder`` lists the ``s_i`` in order; status is
    UNDECIDED if the K_0 continuation beyond an exit could come back into the
    window.  For ``l in {-1, 0}`` the closure is finite and CLOSED.
    """
    l = pair.hom - 1 if pair.hom else -1
    if l >= 1:
        seq = [pair.e1, pair.e2]
        status = CurveStatus.OPEN
        # extend to the left: s_{i-1} = L_{s_i} s_{i+1}
        for _ in range(max_steps):
            nxt = left_mutation(seq[0], seq[1])
            if not _in_window(nxt, window):
                if _reenters(seq[1].k0_class(), seq[0].k0_class(), l, window, 4 * window + 4):
                    status = CurveStatus.UNDECIDED
                break
            seq.insert(0, nxt)
        # extend to the right: s_{i+2} = R_{s_{i+1}} s_i
        for _ in range(max_steps):
            nxt = right_mutation(seq[-2], seq[-1])
            if not _in_window(nxt, window):
                if _reenters(seq[-2].k0_class(), seq[-1].k0_class(), l, window, 4 * window + 4):
                    status = CurveStatus.UNDECIDED
                break
            seq.append(nxt)
        pairs = [_normalize(x, y) for x, y in zip(seq, seq[1:])]
        return pairs, seq, status
    # finite cases: breadth-first over pairs
    seen = {pair.key: pair}
    todo = [pair]
    status = CurveStatus.CLOSED
    while todo:
        p = todo.pop()
        for x, y in ((left_mutation(p.e1, p.e2), p.e1), (p.e2, right_mutation(p.e1, p.e2))):
            if not (_in_window(x, window) and _in_window(y, window)):
                status = CurveStatus.UNDECIDED
                continue
            n = _normalize(x, y)
            if n.key not in seen:
                seen[n.key] = n
                todo.append(n)
    pairs = sorted(seen.values(), key=lambda p: p.key)
    objs = {}
    for p in pairs:
        for o in (p.e1, p.e2):
            objs.setdefault(o.dims, o.shifted(-o.shift))
    return pairs, [objs[d] for d in sorted(objs)], status


def cluster_into_curves(pairs: Sequence[StrongPair], q: Quiver, window: int) -> tuple[list[NcCurve], list]:
    """Group pairs by generated subcategory.

    Returns ``(curves, collisions)``; ``collisions`` lists groups of distinct
    curves that share a k0_key (reported, never merged).
    """
    uf = nx.utils.UnionFind()
    closures = {}
    owner: dict[tuple, tuple] = {}
    for p in sorted(pairs, key=lambda p: p.key):
        if p.key in owner:
            uf.union(owner[p.key], p.key)
            continue
        cl, ladder, status = ladder_closure(p, window)
        closures[p.key] = (cl, ladder, status)
        uf[p.key]
        for c in cl:
            if c.key in owner:
                uf.union(owner[c.key], p.key)
            else:
                owner[c.key] = p.key
    groups: dict = {}
    for p in sorted(pairs, key=lambda p: p.key):
        groups.setdefault(uf[p.key], []).append(p)
    curves = []
    for members in groups.values():
        roots = [m.key for m in members if m.key in closures]
        cl, ladder, status = closures[roots[0]]
        allp = {c.key: c for r in roots for c in closures[r][0]}
        if any(closures[r][2] is CurveStatus.UNDECIDED for r in roots):
            status = CurveStatus.UNDECIDED
        m0 = members[0]
        curves.append(NcCurve(genus=m0.hom - 1 if m0.hom else -1,
                              pairs=sorted(allp.values(), key=lambda p: p.key),
                              ladder=ladder, k0_key=k0_key(m0.e1.dims, m0.e2.dims),
                              status=status, members=members))
    curves.sort(key=lambda c: (c.k0_key, c.representative.key))
    by_key: dict = {}
    for c in curves:
        by_key.setdefault(c.k0_key, []).append(c)
    collisions = [cs for cs in by_key.values() if len(cs) > 1]
    return curves, collisions


@dataclass
class CountResult:
    quiver: Quiver
    l: int
    window: int
    count: int
    truncated: bool
    curves: list[NcCurve]
    undecided: int = 0
    collisions: list = field(default_factory=list)
    stable: bool | None = None

    def to_dict(self) -> dict:
        return {"quiver": self.quiver.name or str(self.quiver), "l": self.l,
                "window": self.window, "count": self.count, "truncated": self.truncated,
                "undecided": self.undecided, "stable": self.stable,
                "k0_collisions": len(self.collisions),
                "curves": [c.to_dict() for c in self.curves]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _count_once(q: Quiver, l: int, window: int) -> CountResult:
    en = enumerate_exceptional(q, window)
    pairs = find_strong_pairs(q, l, window, en)
    curves, collisions = cluster_into_curves(pairs, q, window)
    decided = [c for c in curves if c.status is not CurveStatus.UNDECIDED]
    return CountResult(q, l, window, len(decided), en.truncated, curves,
                       undecided=len(curves) - len(decided), collisions=collisions)


def count_Cl(q: Quiver, l: int, window: int, check_stable: bool = True) -> CountResult:
    """Number of genus-l curves visible in the window (undecided ones excluded
    from ``count`` and reported separately)."""
    res = _count_once(q, l, window)
    if check_stable and window > 1:
        res.stable = _count_once(q, l, window - 1).count == res.count and res.undecided == 0
    return res


class Verdict(enum.Enum):
    NON_EMPTY_FINITE = "NonEmptyFinite"
    EMPTY = "Empty"

    def __str__(self):
        return self.value


def decide_embedding(p_from, p_into) -> Verdict:
    """Whether the category indexed by ``p_from`` embeds into the one indexed by
    ``p_into``; when it does there are finitely many such subcategories."""
    a, b = _ws(p_from), _ws(p_into)
    for w in (a, b):
        if not is_dynkin_type(w):
            raise WeightError(f"{w} is not of Dynkin type")
    return Verdict.NON_EMPTY_FINITE if preceq(a, b) else Verdict.EMPTY


def _strong_entry(x: DerivedObject, y: DerivedObject, g: int) -> bool:
    """Hom*(X, Y) is concentrated in degree 0 with dimension g."""
    n = y.shift - x.shift
    h, e = rp.hom_dim(x.module, y.module), rp.ext_dim(x.module, y.module)
    if n == 0:
        return (h, e) == (g, 0)
    if n == 1:
        return (h, e) == (0, g)
    return g == 0 and h == e == 0


def gram_witness_search(p_from, q: Quiver, window: int, objects: Enumeration | None = None,
                        node_limit: int = 2_000_000) -> ExcCollection | None:
    """A strong exceptional sequence whose hom matrix is ``canonical_gram(p_from)``."""
    g = canonical_gram(p_from)
    n = len(g)
    objs = list(objects if objects is not None else enumerate_exceptional(q, window))
    mods = [o.module for o in objs]
    chosen: list[DerivedObject] = []
    budget = [node_limit]

    def euler_ok(m, s, i):
        x = chosen[i]
        # <[X], [Y]> of signed classes must equal the degree-0 hom; back-form is 0
        chi = euler_form(q, x.dims, m.dims) * (-1) ** ((s - x.shift) % 2)
        return chi == g[i][len(chosen)] and euler_form(q, m.dims, x.dims) == 0

    def extend() -> bool:
        if len(chosen) == n:
            return True
        j = len(chosen)
        for m in mods:
            shifts = [0] if j == 0 else [chosen[0].shift, chosen[0].shift + 1]
            for s in shifts:
                budget[0] -= 1
                if budget[0] < 0:
                    return False
                if any(m == c.module for c in chosen):
                    continue
                if not all(euler_ok(m, s, i) for i in range(j)):
                    continue
                y = DerivedObject(m, s)
                if all(_strong_entry(chosen[i], y, g[i][j]) and rp.hom_dim(m, chosen[i].module) == 0
                       and rp.ext_dim(m, chosen[i].module) == 0 for i in range(j)):
                    chosen.append(y)
                    if extend():
                        return True
                    chosen.pop()
        return False

    if extend():
        return ExcCollection(chosen)
    return None


def semiorthogonal_graph(curves: Sequence[NcCurve]) -> nx.DiGraph:
    """Edge A -> B when Hom*(b, a) = 0 for every ladder object a of A and b of B."""
    gr = nx.DiGraph()
    for i, _ in enumerate(curves):
        gr.add_node(i)
    for i, a in enumerate(curves):
        for j, b in enumerate(curves):
            if i == j:
                continue
            if all(rp.hom_dim(y.module, x.module) == 0 and rp.ext_dim(y.module, x.module) == 0
                   for x in a.ladder for y in b.ladder):
                gr.add_edge(i, j)
    return gr


def to_dot(curves: Sequence[NcCurve], graph: nx.DiGraph, title: str = "curves") -> str:
    lines = [f'digraph "{title}" {{']
    for i, c in enumerate(curves):
        rep = c.representative
        label = f"{list(rep.e1.dims)} | {list(rep.e2.dims)}[{rep.e2.shift}]"
        lines.append(f'  n{i} [label="{label}"];')
    for i, j in sorted(graph.edges()):
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
