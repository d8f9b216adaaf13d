"""Acyclic quivers, the Euler form, and Dynkin / extended Dynkin classification."""

from __future__ import annotations

import enum
import json
import math
import re
import unicodedata
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import flint
import networkx as nx


class QuiverError(ValueError):
    pass


class Kind(enum.Enum):
    DYNKIN = "Dynkin"
    EXTENDED_DYNKIN = "ExtendedDynkin"
    WILD = "Wild"


class Quiver:
    """A finite acyclic quiver.

    ``vertices`` is stored in a topological order (every arrow goes from a
    lower to a higher index); the order of the input is kept wherever it is
    already compatible.  Dimension vectors and matrices are indexed by
    ``vertices``.  ``arrows`` holds index pairs, one entry per arrow, so a
    Kronecker quiver has the same pair repeated.
    """

    __slots__ = ("vertices", "arrows", "name", "_index")

    def __init__(self, vertices: Iterable, arrows: Iterable[Sequence], name: str = ""):
        verts = [str(v) for v in vertices]
        if len(set(verts)) != len(verts):
            raise QuiverError("vertex ids must be distinct")
        pos = {v: i for i, v in enumerate(verts)}
        raw = []
        for a in arrows:
            if len(a) != 2:
                raise QuiverError(f"arrow {a!r} is not a (source, target) pair")
            s, t = str(a[0]), str(a[1])
            if s not in pos or t not in pos:
                raise QuiverError(f"arrow {s}->{t} uses an undeclared vertex")
            if s == t:
                raise QuiverError(f"loop at {s}: quiver must be acyclic")
            raw.append((s, t))
        g = nx.MultiDiGraph()
        g.add_nodes_from(verts)
        g.add_edges_from(raw)
        if not nx.is_directed_acyclic_graph(g):
            raise QuiverError("quiver has a directed cycle")
        order = list(nx.lexicographical_topological_sort(g, key=lambda v: pos[v]))
        self._index = {v: i for i, v in enumerate(order)}
        self.vertices: tuple[str, ...] = tuple(order)
        self.arrows: tuple[tuple[int, int], ...] = tuple(
            (self._index[s], self._index[t]) for s, t in raw)
        self.name = name

    def __eq__(self, other):
        return isinstance(other, Quiver) and (self.vertices, self.arrows) == (other.vertices, other.arrows)

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def __repr__(self):
        return f"Quiver({list(self.vertices)!r}, {[(self.vertices[s], self.vertices[t]) for s, t in self.arrows]!r})"

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self, vertex) -> int:
        return self._index[str(vertex)]

    def arrow_counts(self) -> Counter:
        return Counter(self.arrows)

    def dimvector(self, by_vertex: Mapping) -> tuple[int, ...]:
        """Dimension vector from a ``{vertex id: entry}`` mapping (missing ids are 0)."""
        d = [0] * self.n
        for v, x in by_vertex.items():
            d[self.index(v)] = int(x)
        return tuple(d)

    def euler_matrix(self) -> list[list[int]]:
        m = [[int(i == j) for j in range(self.n)] for i in range(self.n)]
        for (s, t), c in self.arrow_counts().items():
            m[s][t] -= c
        return m

    def to_json(self) -> str:
        return json.dumps({"vertices": list(self.vertices),
                           "arrows": [[self.vertices[s], self.vertices[t]] for s, t in self.arrows]})

    @classmethod
    def from_json(cls, text: str) -> "Quiver":
        try:
            data = json.loads(text)
            return cls(data["vertices"], data["arrows"])
        except (KeyError, TypeError, json.JSONDecodeError) as exc:
            raise QuiverError(f"malformed quiver JSON: {exc}") from exc

    def __str__(self):
        return self.name or f"Quiver({self.n} vertices, {len(self.arrows)} arrows)"


def _check(q: Quiver, *vecs) -> None:
    for v in vecs:
        if len(v) != q.n:
            raise QuiverError(f"dimension vector of length {len(v)} for a quiver with {q.n} vertices")


def euler_form(q: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    """<d, e> = sum_v d_v e_v - sum_{a: s->t} d_s e_t."""
    _check(q, d, e)
    val = sum(int(x) * int(y) for x, y in zip(d, e))
    for s, t in q.arrows:
        val -= int(d[s]) * int(e[t])
    return val


def tits_form(q: Quiver, d: Sequence[int]) -> int:
    return euler_form(q, d, d)


# --- built-in quivers -------------------------------------------------------

def kronecker(n: int) -> Quiver:
    return Quiver(["1", "2"], [("1", "2")] * n, name=f"K({n})")


def a_tilde(p: int, q: int) -> Quiver:
    """Cycle with ``p`` arrows one way round and ``q`` the other.

    Vertices: source ``s``, sink ``t``, the clockwise path ``s -> u1 -> ... ->
    u{p-1} -> t`` and the counterclockwise path ``s -> w1 -> ... -> w{q-1} -> t``.
    ``A~(1,1)`` is the Kronecker quiver and ``A~(2,1)``/``A~(2,2)`` are the
    triangle and the square.
    """
    if p < 1 or q < 1:
        raise QuiverError("A~(p,q) needs p, q >= 1")
    up = [f"u{i}" for i in range(1, p)]
    wp = [f"w{i}" for i in range(1, q)]
    verts = ["s"] + up + wp + ["t"]
    arrows = []
    for path in (["s"] + up + ["t"], ["s"] + wp + ["t"]):
        arrows += list(zip(path, path[1:]))
    return Quiver(verts, arrows, name=f"A~({p},{q})")


def star(arms: Sequence[int], name: str = "") -> Quiver:
    """Tree with one centre and arms of the given lengths, all arrows pointing
    towards the centre."""
    verts, arrows = [], []
    for i, length in enumerate(arms):
        arm = [f"{chr(ord('a') + i)}{k}" for k in range(length, 0, -1)]
        verts += arm
        path = arm + ["c"]
        arrows += list(zip(path, path[1:]))
    verts.append("c")
    return Quiver(verts, arrows, name=name)


def a_n(n: int) -> Quiver:
    verts = [str(i) for i in range(1, n + 1)]
    return Quiver(verts, list(zip(verts, verts[1:])), name=f"A({n})")


def d_n(n: int) -> Quiver:
    if n < 4:
        raise QuiverError("D(n) needs n >= 4")
    return star([1, 1, n - 3], name=f"D({n})")


def e_n(n: int) -> Quiver:
    if n not in (6, 7, 8):
        raise QuiverError("E(n) needs n in 6, 7, 8")
    return star([1, 2, n - 4], name=f"E({n})")


def d_tilde(n: int) -> Quiver:
    """Extended D_n (n + 1 vertices); leaves point inwards, the spine runs
    from the first branch vertex to the second."""
    if n < 4:
        raise QuiverError("D~(n) needs n >= 4")
    if n == 4:
        return star([1, 1, 1, 1], name="D~(4)")
    spine = [f"m{i}" for i in range(n - 3)]
    arrows = [("l1", spine[0]), ("l2", spine[0]), ("r1", spine[-1]), ("r2", spine[-1])]
    arrows += list(zip(spine, spine[1:]))
    return Quiver(["l1", "l2", "r1", "r2"] + spine, arrows, name=f"D~({n})")


def e_tilde(n: int) -> Quiver:
    arms = {6: [2, 2, 2], 7: [1, 3, 3], 8: [1, 2, 5]}
    if n not in arms:
        raise QuiverError("E~(n) needs n in 6, 7, 8")
    return star(arms[n], name=f"E~({n})")


_BUILTIN = re.compile(r"^\s*(K|A~|D~|E~|A|D|E)\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)\s*$")


def builtin(name: str) -> Quiver:
    """Parse ``K(n)``, ``A~(p,q)``, ``D~(n)``, ``E~(6|7|8)``, ``A(n)``, ``D(n)``, ``E(6|7|8)``."""
    m = _BUILTIN.match(name)
    if not m:
        raise QuiverError(f"unknown quiver name {name!r}")
    kind, a, b = m.group(1), int(m.group(2)), m.group(3)
    if kind == "A~":
        if b is None:
            raise QuiverError("A~ needs two parameters, e.g. A~(2,1)")
        return a_tilde(a, int(b))
    if b is not None:
        raise QuiverError(f"{kind} takes one parameter")
    return {"K": kronecker, "A": a_n, "D": d_n, "E": e_n, "D~": d_tilde, "E~": e_tilde}[kind](a)


# --- classification ----------------------------------------------------------

@dataclass(frozen=True)
class Component:
    vertices: tuple[int, ...]
    kind: Kind
    label: str
    null_root: tuple[int, ...] | None = None
    orientation: tuple[int, int] | None = None

    def pretty(self) -> str:
        sub = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
        letter, _, rest = self.label.partition("~")
        if rest:
            return unicodedata.normalize("NFC", f"{letter}\u0303{rest.translate(sub)}")
        return f"{self.label[0]}{self.label[1:].translate(sub)}" if self.kind != Kind.WILD else self.label


def _underlying(q: Quiver, verts: Sequence[int]) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(verts)
    for (s, t), c in q.arrow_counts().items():
        if s in g and t in g:
            prev = g.edges[s, t]["mult"] if g.has_edge(s, t) else 0
            g.add_edge(s, t, mult=prev + c)
    return g


def _path_graph(n):
    g = nx.path_graph(n)
    nx.set_edge_attributes(g, 1, "mult")
    return g


def _star_graph(arms):
    g = nx.Graph()
    g.add_node(0)
    k = 1
    for length in arms:
        prev = 0
        for _ in range(length):
            g.add_edge(prev, k, mult=1)
            prev = k
            k += 1
    return g


def _standard_graphs(n: int):
    """(label, kind, graph) for every ADE / affine diagram with ``n`` vertices."""
    out = []
    if n >= 1:
        out.append((f"A{n}", Kind.DYNKIN, _path_graph(n)))
    if n >= 4:
        out.append((f"D{n}", Kind.DYNKIN, _star_graph([1, 1, n - 3])))
    if n in (6, 7, 8):
        out.append((f"E{n}", Kind.DYNKIN, _star_graph([1, 2, n - 4])))
    if n == 2:
        g = nx.Graph()
        g.add_edge(0, 1, mult=2)
        out.append(("A~1", Kind.EXTENDED_DYNKIN, g))
    if n >= 3:
        g = nx.cycle_graph(n)
        nx.set_edge_attributes(g, 1, "mult")
        out.append((f"A~{n - 1}", Kind.EXTENDED_DYNKIN, g))
    if n == 5:
        out.append(("D~4", Kind.EXTENDED_DYNKIN, _star_graph([1, 1, 1, 1])))
    if n >= 6:
        g = _path_graph(n - 4)
        m = n - 5
        for leaf, hub in ((n - 4, 0), (n - 3, 0), (n - 2, m), (n - 1, m)):
            g.add_edge(hub, leaf, mult=1)
        out.append((f"D~{n - 1}", Kind.EXTENDED_DYNKIN, g))
    arms = {7: [2, 2, 2], 8: [1, 3, 3], 9: [1, 2, 5]}
    if n in arms:
        out.append((f"E~{n - 1}", Kind.EXTENDED_DYNKIN, _star_graph(arms[n])))
    return out


def null_root(q: Quiver, verts: Sequence[int]) -> tuple[int, ...]:
    """Positive primitive generator of the radical of the symmetrized Euler
    form restricted to ``verts`` (returned as a full-length vector)."""
    e = q.euler_matrix()
    k = len(verts)
    sym = flint.fmpz_mat(k, k, [e[a][b] + e[b][a] for a in verts for b in verts])
    basis, nullity = sym.nullspace()
    if nullity != 1:
        raise QuiverError(f"radical has rank {nullity}, expected 1")
    vec = [int(basis[i, 0]) for i in range(k)]
    g = math.gcd(*vec)
    vec = [x // g for x in vec]
    if vec[0] < 0:
        vec = [-x for x in vec]
    full = [0] * q.n
    for v, x in zip(verts, vec):
        full[v] = x
    return tuple(full)


def _cycle_orientation(q: Quiver, verts: Sequence[int]) -> tuple[int, int]:
    """(#arrows one way, #arrows the other way) round the unique cycle, larger first."""
    vs = set(verts)
    arrows = [a for a in q.arrows if a[0] in vs and a[1] in vs]
    if len(verts) == 2:
        return (1, 1)
    g = nx.Graph()
    for s, t in arrows:
        g.add_edge(s, t)
    cycle = nx.cycle_basis(g)[0]
    fwd = sum(1 for i, v in enumerate(cycle) if (v, cycle[(i + 1) % len(cycle)]) in arrows)
    bwd = len(cycle) - fwd
    return (max(fwd, bwd), min(fwd, bwd))


def classify(q: Quiver) -> list[Component]:
    """Label each connected component as Dynkin, extended Dynkin (with its null
    root, and for type A~ the orientation split) or wild."""
    g_all = _underlying(q, range(q.n))
    comps = []
    for cc in sorted(nx.connected_components(g_all), key=min):
        verts = tuple(sorted(cc))
        g = g_all.subgraph(verts)
        found = None
        for label, kind, std in _standard_graphs(len(verts)):
            if nx.is_isomorphic(g, std, edge_match=lambda a, b: a["mult"] == b["mult"]):
                found = (label, kind)
                break
        if found is None:
            comps.append(Component(verts, Kind.WILD, "wild"))
            continue
        label, kind = found
        if kind == Kind.EXTENDED_DYNKIN:
            orient = _cycle_orientation(q, verts) if label.startswith("A~") else None
            comps.append(Component(verts, kind, label, null_root(q, verts), orient))
        else:
            comps.append(Component(verts, kind, label))
    return comps


def is_dynkin(q: Quiver) -> bool:
    return all(c.kind == Kind.DYNKIN for c in classify(q))
