"""Quiver representations over the rationals and the linear algebra of Hom/Ext.

A representation stores one vector-space dimension per vertex and one matrix
per arrow (rows = target dimension, columns = source dimension).  Hom spaces
are computed as the null space of the intertwiner system

    N_a f_s - f_t M_a = 0      for every arrow a: s -> t,

and, since path algebras of acyclic quivers are hereditary, the cokernel of
the same system is Ext^1.
"""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Sequence

import flint

from . import linalg as la
from .linalg import Matrix
from .quiver import Quiver, euler_form


class IntegrityError(ArithmeticError):
    """A computed invariant contradicts the theory (signals corrupted input)."""


class Representation:
    """A representation of ``quiver``.  Immutable; equality is by content."""

    __slots__ = ("quiver", "dims", "maps", "_key", "_hash")

    def __init__(self, quiver: Quiver, dims: Sequence[int], maps: Sequence[Matrix] | None = None):
        dims = tuple(int(d) for d in dims)
        if len(dims) != quiver.n:
            raise ValueError(f"{len(dims)} dimensions for {quiver.n} vertices")
        if any(d < 0 for d in dims):
            raise ValueError(f"negative dimension in {dims}")
        if maps is None:
            maps = [la.zero(dims[t], dims[s]) for s, t in quiver.arrows]
        maps = tuple(m if isinstance(m, flint.fmpq_mat) else la.qmat(m, dims[t], dims[s])
                     for m, (s, t) in zip(maps, quiver.arrows))
        if len(maps) != len(quiver.arrows):
            raise ValueError(f"{len(maps)} maps for {len(quiver.arrows)} arrows")
        for k, (m, (s, t)) in enumerate(zip(maps, quiver.arrows)):
            if la.shape(m) != (dims[t], dims[s]):
                raise ValueError(f"arrow {k}: matrix is {la.shape(m)}, expected {(dims[t], dims[s])}")
        self.quiver = quiver
        self.dims = dims
        self.maps = maps
        self._key = (quiver, dims, tuple(la.entries_key(m) for m in maps))
        self._hash = hash(self._key)

    def __eq__(self, other):
        return isinstance(other, Representation) and self._hash == other._hash and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Representation(dims={self.dims})"

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return not any(self.dims)

    def to_dict(self) -> dict:
        return {"dims": list(self.dims), "maps": [la.to_strings(m) for m in self.maps]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, quiver: Quiver, data: dict) -> "Representation":
        dims = data["dims"]
        maps = [la.qmat(m, dims[t], dims[s]) for m, (s, t) in zip(data["maps"], quiver.arrows)]
        return cls(quiver, dims, maps)

    @classmethod
    def from_json(cls, quiver: Quiver, text: str) -> "Representation":
        return cls.from_dict(quiver, json.loads(text))


def direct_sum(reps: Sequence[Representation]) -> Representation:
    q = reps[0].quiver
    dims = [sum(r.dims[v] for r in reps) for v in range(q.n)]
    maps = [la.block_diag([r.maps[k] for r in reps]) for k in range(len(q.arrows))]
    return Representation(q, dims, maps)


def power(rep: Representation, k: int) -> Representation:
    if k == 0:
        return Representation(rep.quiver, [0] * rep.quiver.n)
    return direct_sum([rep] * k)


def simple(q: Quiver, v: int) -> Representation:
    return Representation(q, [int(i == v) for i in range(q.n)])


def _paths_from(q: Quiver, v: int) -> list[tuple[int, ...]]:
    """All paths starting at ``v`` as tuples of arrow indices (the empty path first)."""
    out = [()]
    stack = [((), v)]
    while stack:
        path, end = stack.pop()
        for k, (s, t) in enumerate(q.arrows):
            if s == end:
                p = path + (k,)
                out.append(p)
                stack.append((p, t))
    return out


def _end(q: Quiver, start: int, path: tuple[int, ...]) -> int:
    return q.arrows[path[-1]][1] if path else start


def projective(q: Quiver, v: int) -> Representation:
    """P_v: the space at w has the paths v -> w as basis."""
    paths = _paths_from(q, v)
    by_vertex = [[p for p in paths if _end(q, v, p) == w] for w in range(q.n)]
    pos = [{p: i for i, p in enumerate(ps)} for ps in by_vertex]
    maps = []
    for k, (s, t) in enumerate(q.arrows):
        m = la.zero(len(by_vertex[t]), len(by_vertex[s]))
        for j, p in enumerate(by_vertex[s]):
            m[pos[t][p + (k,)], j] = 1
        maps.append(m)
    return Representation(q, [len(ps) for ps in by_vertex], maps)


def injective(q: Quiver, v: int) -> Representation:
    """I_v: the space at w is dual to the paths w -> v."""
    into = [[p for p in _paths_from(q, w) if _end(q, w, p) == v] for w in range(q.n)]
    pos = [{p: i for i, p in enumerate(ps)} for ps in into]
    maps = []
    for k, (s, t) in enumerate(q.arrows):
        m = la.zero(len(into[t]), len(into[s]))
        for j, p in enumerate(into[s]):
            if p and p[0] == k:
                m[pos[t][p[1:]], j] = 1
        maps.append(m)
    return Representation(q, [len(ps) for ps in into], maps)


class RepMorphism:
    """A morphism of representations given by one matrix per vertex."""

    __slots__ = ("source", "target", "blocks")

    def __init__(self, source: Representation, target: Representation, blocks: Sequence[Matrix],
                 check: bool = True):
        if source.quiver != target.quiver:
            raise ValueError("morphism between representations of different quivers")
        self.source = source
        self.target = target
        self.blocks = tuple(blocks)
        q = source.quiver
        for v in range(q.n):
            if la.shape(self.blocks[v]) != (target.dims[v], source.dims[v]):
                raise ValueError(f"block {v} has shape {la.shape(self.blocks[v])}")
        if check:
            for k, (s, t) in enumerate(q.arrows):
                if self.blocks[t] * source.maps[k] != target.maps[k] * self.blocks[s]:
                    raise IntegrityError(f"intertwiner condition fails on arrow {k}")

    def rank(self, v: int) -> int:
        return la.rank(self.blocks[v])

    def is_injective(self) -> bool:
        return all(self.rank(v) == self.source.dims[v] for v in range(len(self.blocks)))

    def is_surjective(self) -> bool:
        return all(self.rank(v) == self.target.dims[v] for v in range(len(self.blocks)))


def identity(rep: Representation) -> RepMorphism:
    return RepMorphism(rep, rep, [la.eye(d) for d in rep.dims], check=False)


def _same_quiver(m: Representation, n: Representation) -> None:
    if m.quiver != n.quiver:
        raise ValueError("representations of different quivers")


def _hom_system(m: Representation, n: Representation) -> tuple[Matrix, list[int]]:
    """Matrix of f -> (N_a f_s - f_t M_a)_a and the column offset of each f_v.

    f_v is vectorised row-major: entry (i, j) of f_v sits at offset_v + i*M_v + j.
    """
    q = m.quiver
    offs, c = [], 0
    for v in range(q.n):
        offs.append(c)
        c += n.dims[v] * m.dims[v]
    rows = sum(n.dims[t] * m.dims[s] for s, t in q.arrows)
    flat = [0] * (rows * c)
    r0 = 0
    for k, (s, t) in enumerate(q.arrows):
        na, ma = n.maps[k], m.maps[k]
        ms, mt, ns = m.dims[s], m.dims[t], n.dims[s]
        nt = n.dims[t]
        na_nz = [(i, kk, na[i, kk]) for i in range(nt) for kk in range(ns) if na[i, kk]]
        ma_nz = [(kk, j, ma[kk, j]) for kk in range(mt) for j in range(ms) if ma[kk, j]]
        for i, kk, x in na_nz:
            for j in range(ms):
                flat[(r0 + i * ms + j) * c + offs[s] + kk * ms + j] += x
        for kk, j, x in ma_nz:
            for i in range(nt):
                flat[(r0 + i * ms + j) * c + offs[t] + i * mt + kk] -= x
        r0 += nt * ms
    return flint.fmpq_mat(rows, c, flat), offs


@lru_cache(maxsize=200_000)
def hom_dim(m: Representation, n: Representation) -> int:
    """dim Hom(M, N)."""
    _same_quiver(m, n)
    d, _ = _hom_system(m, n)
    return d.ncols() - la.rank(d)


def ext_dim(m: Representation, n: Representation) -> int:
    """dim Ext^1(M, N) = hom(M, N) - <dim M, dim N>."""
    e = hom_dim(m, n) - euler_form(m.quiver, m.dims, n.dims)
    if e < 0:
        raise IntegrityError(f"negative ext ({e}) between {m} and {n}")
    return e


def hom_basis(m: Representation, n: Representation) -> list[RepMorphism]:
    """A basis of Hom(M, N) as morphisms."""
    _same_quiver(m, n)
    d, offs = _hom_system(m, n)
    k, _ = la.nullspace(d)
    out = []
    for col in range(k.ncols()):
        blocks = []
        for v in range(m.quiver.n):
            b = la.zero(n.dims[v], m.dims[v])
            for i in range(n.dims[v]):
                for j in range(m.dims[v]):
                    b[i, j] = k[offs[v] + i * m.dims[v] + j, col]
            blocks.append(b)
        out.append(RepMorphism(m, n, blocks))
    return out


def ext_basis(m: Representation, n: Representation) -> list[tuple[Matrix, ...]]:
    """Cocycles (one matrix N_t x M_s per arrow) whose classes form a basis of Ext^1(M, N)."""
    _same_quiver(m, n)
    q = m.quiver
    d, _ = _hom_system(m, n)
    comp = la.image_complement(d)
    starts, r0 = [], 0
    for s, t in q.arrows:
        starts.append(r0)
        r0 += n.dims[t] * m.dims[s]
    out = []
    for row in comp:
        cocycle = []
        for k, (s, t) in enumerate(q.arrows):
            b = la.zero(n.dims[t], m.dims[s])
            local = row - starts[k]
            if 0 <= local < n.dims[t] * m.dims[s]:
                b[local // m.dims[s], local % m.dims[s]] = 1
            cocycle.append(b)
        out.append(tuple(cocycle))
    return out


def is_exceptional(m: Representation) -> bool:
    """End(M) is the base field and Ext^1(M, M) = 0."""
    return not m.is_zero() and hom_dim(m, m) == 1 and ext_dim(m, m) == 0


def is_isomorphic_exceptional(m: Representation, n: Representation) -> bool:
    """Isomorphism test valid for exceptional representations (bricks)."""
    return (m.dims == n.dims and hom_dim(m, n) >= 1 and hom_dim(n, m) >= 1
            and is_exceptional(m) and is_exceptional(n))


def evaluation_map(e: Representation, f: Representation) -> RepMorphism:
    """ev: E^h -> F, h = hom(E, F), assembled from a basis of Hom(E, F)."""
    basis = hom_basis(e, f)
    if not basis:
        raise ValueError("evaluation map needs hom(E, F) >= 1")
    src = power(e, len(basis))
    blocks = [la.hstack([b.blocks[v] for b in basis], f.dims[v]) for v in range(e.quiver.n)]
    return RepMorphism(src, f, blocks)


def coevaluation_map(e: Representation, f: Representation) -> RepMorphism:
    """coev: E -> F^h, h = hom(E, F)."""
    basis = hom_basis(e, f)
    if not basis:
        raise ValueError("coevaluation map needs hom(E, F) >= 1")
    tgt = power(f, len(basis))
    blocks = [la.vstack([b.blocks[v] for b in basis], e.dims[v]) for v in range(e.quiver.n)]
    return RepMorphism(e, tgt, blocks)


def kernel(f: RepMorphism) -> Representation:
    src = f.source
    q = src.quiver
    bases = [la.nullspace(f.blocks[v]) for v in range(q.n)]
    maps = []
    for k, (s, t) in enumerate(q.arrows):
        ks, _ = bases[s]
        kt, free_t = bases[t]
        maps.append(la.solve_in_span(kt, free_t, src.maps[k] * ks))
    return Representation(q, [b[0].ncols() for b in bases], maps)


def cokernel(f: RepMorphism) -> Representation:
    tgt = f.target
    q = tgt.quiver
    projs = [la.left_nullspace(f.blocks[v]) for v in range(q.n)]
    maps = []
    for k, (s, t) in enumerate(q.arrows):
        ps, cols_s = projs[s]
        pt, _ = projs[t]
        section = la.select_cols(la.eye(tgt.dims[s]), cols_s)
        c = pt * tgt.maps[k] * section
        if c * ps != pt * tgt.maps[k]:
            raise IntegrityError(f"cokernel map on arrow {k} is not well defined")
        maps.append(c)
    return Representation(q, [p[0].nrows() for p in projs], maps)


def extension(e: Representation, f: Representation, cocycles: Sequence[tuple[Matrix, ...]],
              e_copies: bool) -> Representation:
    """Middle term of an extension built from Ext^1(E, F) cocycles.

    With ``e_copies`` the result G sits in 0 -> F -> G -> E^k -> 0 (one copy of
    E per cocycle); otherwise in 0 -> F^k -> X -> E -> 0.
    """
    q = e.quiver
    k = len(cocycles)
    maps = []
    for a, (s, t) in enumerate(q.arrows):
        if e_copies:
            top = la.hstack([f.maps[a]] + [c[a] for c in cocycles], f.dims[t])
            bottom = la.hstack([la.zero(k * e.dims[t], f.dims[s]),
                                la.block_diag([e.maps[a]] * k) if k else la.zero(0, 0)],
                               k * e.dims[t])
            maps.append(la.vstack([top, bottom], f.dims[s] + k * e.dims[s]))
        else:
            top = la.hstack([la.block_diag([f.maps[a]] * k) if k else la.zero(0, 0),
                             la.vstack([c[a] for c in cocycles], e.dims[s])], k * f.dims[t])
            bottom = la.hstack([la.zero(e.dims[t], k * f.dims[s]), e.maps[a]], e.dims[t])
            maps.append(la.vstack([top, bottom], k * f.dims[s] + e.dims[s]))
    if e_copies:
        dims = [f.dims[v] + k * e.dims[v] for v in range(q.n)]
    else:
        dims = [k * f.dims[v] + e.dims[v] for v in range(q.n)]
    return Representation(q, dims, maps)


# --- independent route: the standard projective resolution -----------------

def hom_ext_by_resolution(m: Representation, n: Representation) -> tuple[int, int]:
    """(hom, ext^1) from 0 -> P^1 -> P^0 -> M -> 0 with P^0 = sum_v P_v (x) M_v and
    P^1 = sum_a P_{t(a)} (x) M_{s(a)}.

    The differential is built explicitly on path bases, checked to be an
    injective morphism, and Hom(-, N) is evaluated through generators; ranks
    use the pure-Python fraction-free elimination.
    """
    _same_quiver(m, n)
    q = m.quiver
    mm = [la.to_fractions(x) for x in m.maps]
    paths = [_paths_from(q, v) for v in range(q.n)]
    # P^0 summands: (v, i), generator e_v (x) (basis vector i of M_v)
    p0 = [(v, i) for v in range(q.n) for i in range(m.dims[v])]
    p1 = [(a, j) for a, (s, t) in enumerate(q.arrows) for j in range(m.dims[s])]

    def basis_at(summands, start_of, w):
        return [(idx, p) for idx, sm in enumerate(summands)
                for p in paths[start_of(sm)] if _end(q, start_of(sm), p) == w]

    start0 = lambda sm: sm[0]
    start1 = lambda sm: q.arrows[sm[0]][1]
    b0 = [basis_at(p0, start0, w) for w in range(q.n)]
    b1 = [basis_at(p1, start1, w) for w in range(q.n)]
    pos0 = [{x: i for i, x in enumerate(b)} for b in b0]
    p0_index = {sm: i for i, sm in enumerate(p0)}

    # d(path r from t(a) on summand (a, j)) = (a then r) on (s(a), j) - sum_i M_a[i, j] r on (t(a), i)
    diffs = []
    for w in range(q.n):
        rows, cols = len(b0[w]), len(b1[w])
        d = [[0] * cols for _ in range(rows)]
        for c, (idx, r) in enumerate(b1[w]):
            a, j = p1[idx]
            s, t = q.arrows[a]
            d[pos0[w][(p0_index[(s, j)], (a,) + r)]][c] += 1
            for i in range(m.dims[t]):
                x = mm[a][i][j]
                if x:
                    d[pos0[w][(p0_index[(t, i)], r)]][c] -= x
        if cols and la.bareiss_rank(d) != cols:
            raise IntegrityError("resolution differential is not injective")
        if rows - cols != m.dims[w]:
            raise IntegrityError("resolution has the wrong dimension vector")
        diffs.append(d)

    def along(path: tuple[int, ...], dim: int) -> list[list]:
        # N applied along a path, first arrow first
        mat = la.eye(dim)
        for a in path:
            mat = n.maps[a] * mat
        return la.to_fractions(mat)

    # phi in Hom(P^0, N) is fixed by phi(e_v (x) i) in N_v; phi(path p on (v, i)) = N_p phi(e_v (x) i)
    unk = []
    for (v, i) in p0:
        unk += [(v, i, c) for c in range(n.dims[v])]
    unk_pos = {u: k for k, u in enumerate(unk)}
    eqs = []
    for g, (a, j) in enumerate(p1):
        t = q.arrows[a][1]
        col = b1[t].index((g, ()))
        rows = [[0] * len(unk) for _ in range(n.dims[t])]
        for r, (idx, p) in enumerate(b0[t]):
            x = diffs[t][r][col]
            if not x:
                continue
            v, i = p0[idx]
            np_ = along(p, n.dims[v])
            for out in range(n.dims[t]):
                for c in range(n.dims[v]):
                    if np_[out][c]:
                        rows[out][unk_pos[(v, i, c)]] += x * np_[out][c]
        eqs += rows
    rk = la.bareiss_rank(eqs) if eqs and unk else 0
    return len(unk) - rk, len(eqs) - rk
