"""Objects of the bounded derived category as shifted exceptional modules.

Path algebras of acyclic quivers are hereditary, so every indecomposable
object of D^b(Q) is a module placed in a single degree.  An exceptional
object is therefore a pair ``(M, n)`` with M an exceptional representation,
and graded homs reduce to hom/ext in the module category.

Mutation conventions (the triangles defining them)::

    L_E F -> Hom*(E, F) (x) E -> F            (left)
    E -> Hom*(E, F)^* (x) F -> R_F E          (right)

so that L and R are mutually inverse including shifts.
"""

from __future__ import annotations

import json
import os
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from . import reps as rp
from .quiver import Quiver, euler_form
from .reps import IntegrityError, Representation


@dataclass(frozen=True)
class DerivedObject:
    """``module[shift]`` with ``module`` exceptional."""

    module: Representation
    shift: int = 0

    def __post_init__(self):
        if not rp.is_exceptional(self.module):
            raise ValueError(f"{self.module} is not exceptional")

    @property
    def quiver(self) -> Quiver:
        return self.module.quiver

    @property
    def dims(self) -> tuple[int, ...]:
        return self.module.dims

    def k0_class(self) -> tuple[int, ...]:
        """Signed class in K_0: (-1)^shift times the dimension vector."""
        sign = -1 if self.shift % 2 else 1
        return tuple(sign * d for d in self.module.dims)

    def shifted(self, k: int) -> "DerivedObject":
        return DerivedObject(self.module, self.shift + k)

    def to_dict(self) -> dict:
        return {"shift": self.shift, **self.module.to_dict()}

    def __repr__(self):
        return f"DerivedObject({self.module.dims}[{self.shift}])"


def _obj(x) -> DerivedObject:
    return x if isinstance(x, DerivedObject) else DerivedObject(x, 0)


def derived_hom(x: DerivedObject, y: DerivedObject, k: int) -> int:
    """dim Hom(X, Y[k])."""
    x, y = _obj(x), _obj(y)
    n = k + y.shift - x.shift
    if n == 0:
        return rp.hom_dim(x.module, y.module)
    if n == 1:
        return rp.ext_dim(x.module, y.module)
    return 0


def graded_hom(x: DerivedObject, y: DerivedObject) -> dict[int, int]:
    """Nonzero degrees of Hom*(X, Y)."""
    x, y = _obj(x), _obj(y)
    base = x.shift - y.shift
    out = {}
    h, e = rp.hom_dim(x.module, y.module), rp.ext_dim(x.module, y.module)
    if h:
        out[base] = h
    if e:
        out[base + 1] = e
    return out


def is_orthogonal(f: Representation, e: Representation) -> bool:
    """Hom*(F, E) = 0, the condition for (E, F) to be an exceptional pair."""
    if euler_form(f.quiver, f.dims, e.dims) != 0:
        return False
    return rp.hom_dim(f, e) == 0


def is_exceptional_pair(e: DerivedObject, f: DerivedObject) -> bool:
    return is_orthogonal(_obj(f).module, _obj(e).module)


class ExcCollection:
    """An exceptional collection ``(E_1, ..., E_n)``; validated on construction."""

    def __init__(self, objects: Iterable[DerivedObject]):
        self.objects = tuple(_obj(o) for o in objects)
        for i, ei in enumerate(self.objects):
            for ej in self.objects[i + 1:]:
                if not is_exceptional_pair(ei, ej):
                    raise ValueError(f"({ei}, {ej}) is not an exceptional pair")

    def __len__(self):
        return len(self.objects)

    def __iter__(self) -> Iterator[DerivedObject]:
        return iter(self.objects)

    def __getitem__(self, i):
        return self.objects[i]

    @property
    def strong(self) -> bool:
        """All Hom^k(E_i, E_j) vanish for k != 0."""
        return all(set(graded_hom(ei, ej)) <= {0}
                   for i, ei in enumerate(self.objects) for ej in self.objects[i + 1:])

    def gram(self) -> list[list[int]]:
        """Degree-zero hom dimensions ``hom(E_i, E_j)``."""
        return [[derived_hom(a, b, 0) for b in self.objects] for a in self.objects]

    def mutate_left(self, i: int) -> "ExcCollection":
        """Replace (E_i, E_{i+1}) by (L_{E_i} E_{i+1}, E_i)."""
        o = list(self.objects)
        o[i], o[i + 1] = left_mutation(o[i], o[i + 1]), o[i]
        return ExcCollection(o)

    def mutate_right(self, i: int) -> "ExcCollection":
        """Replace (E_i, E_{i+1}) by (E_{i+1}, R_{E_{i+1}} E_i)."""
        o = list(self.objects)
        o[i], o[i + 1] = o[i + 1], right_mutation(o[i], o[i + 1])
        return ExcCollection(o)


def _check_pair(e: Representation, f: Representation) -> tuple[int, int]:
    if not is_orthogonal(f, e):
        raise ValueError("mutation needs an exceptional pair: Hom*(F, E) != 0")
    h, x = rp.hom_dim(e, f), rp.ext_dim(e, f)
    if h and x:
        raise IntegrityError("hom and ext both nonzero on an exceptional pair")
    return h, x


def left_mutation(e: DerivedObject, f: DerivedObject) -> DerivedObject:
    """L_E F for the exceptional pair (E, F)."""
    e, f = _obj(e), _obj(f)
    h, x = _check_pair(e.module, f.module)
    b = f.shift
    if h:
        ev = rp.evaluation_map(e.module, f.module)
        if ev.is_injective():
            return DerivedObject(rp.cokernel(ev), b - 1)
        if ev.is_surjective():
            return DerivedObject(rp.kernel(ev), b)
        raise IntegrityError("evaluation map is neither injective nor surjective")
    if x:
        g = rp.extension(e.module, f.module, rp.ext_basis(e.module, f.module), e_copies=True)
        return DerivedObject(g, b - 1)
    return f.shifted(-1)


def right_mutation(e: DerivedObject, f: DerivedObject) -> DerivedObject:
    """R_F E for the exceptional pair (E, F)."""
    e, f = _obj(e), _obj(f)
    h, x = _check_pair(e.module, f.module)
    a = e.shift
    if h:
        coev = rp.coevaluation_map(e.module, f.module)
        if coev.is_injective():
            return DerivedObject(rp.cokernel(coev), a)
        if coev.is_surjective():
            return DerivedObject(rp.kernel(coev), a + 1)
        raise IntegrityError("coevaluation map is neither injective nor surjective")
    if x:
        g = rp.extension(e.module, f.module, rp.ext_basis(e.module, f.module), e_copies=False)
        return DerivedObject(g, a + 1)
    return e.shifted(1)


def predicted_left(q: Quiver, e: Sequence[int], f: Sequence[int]) -> tuple[int, ...]:
    """Dimension vector of L_E F up to sign, from K_0 alone."""
    chi = euler_form(q, e, f)
    return tuple(fi - chi * ei for ei, fi in zip(e, f))


def predicted_right(q: Quiver, e: Sequence[int], f: Sequence[int]) -> tuple[int, ...]:
    chi = euler_form(q, e, f)
    return tuple(ei - chi * fi for ei, fi in zip(e, f))


def _as_dims(c: Sequence[int]) -> tuple[int, ...] | None:
    """|c| if c is a nonzero vector of constant sign, else None."""
    if all(x >= 0 for x in c) and any(c):
        return tuple(c)
    if all(x <= 0 for x in c) and any(c):
        return tuple(-x for x in c)
    return None


def projective_collection(q: Quiver) -> ExcCollection:
    """(P_v) ordered sinks first, a full exceptional collection."""
    return ExcCollection([DerivedObject(rp.projective(q, v)) for v in reversed(range(q.n))])


@dataclass
class Enumeration:
    """Result of :func:`enumerate_exceptional`."""

    quiver: Quiver
    window: int
    objects: list[DerivedObject]
    truncated: bool
    by_dims: dict = field(repr=False, default_factory=dict)

    def __len__(self):
        return len(self.objects)

    def __iter__(self):
        return iter(self.objects)

    def dims(self) -> list[tuple[int, ...]]:
        return [o.dims for o in self.objects]

    def lookup(self, dims: Sequence[int]) -> DerivedObject | None:
        return self.by_dims.get(tuple(dims))

    def dump_jsonl(self) -> str:
        return "".join(json.dumps(o.to_dict(), sort_keys=True) + "\n" for o in self.objects)


def seed_collections(q: Quiver) -> list[ExcCollection]:
    """Projectives (sinks first), simples (sources first) and injectives (sinks
    first); all three are full exceptional collections in one braid orbit."""
    order = list(reversed(range(q.n)))
    return [projective_collection(q),
            ExcCollection([DerivedObject(rp.simple(q, v)) for v in range(q.n)]),
            ExcCollection([DerivedObject(rp.injective(q, v)) for v in order])]


def enumerate_exceptional(q: Quiver, window: int, slack: int = 0) -> Enumeration:
    """All exceptional objects (shift 0) reachable by mutation from the projectives,
    keeping those whose dimension entries are all <= ``window``.

    The closure is seeded with the simple and injective collections as well:
    they lie in the mutation orbit of the projectives, and seeding with them
    recovers objects whose mutation path from the projectives alone would
    leave the window.  ``slack`` lets intermediate objects go up to
    ``window + slack``; only in-window objects are returned.

    Works pairwise: every adjacent pair of an exceptional collection is an
    exceptional pair, so closing the object set under mutation of exceptional
    pairs of known objects covers collection-level mutation.  Exceptional
    modules are determined by their dimension vector, and the dimension vector
    of a mutation is known from K_0 in advance, so a mutation is only carried
    out when it would produce a new in-window object.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    outer = window + max(0, slack)
    reg: dict[tuple[int, ...], DerivedObject] = {}
    queue: deque[tuple[int, ...]] = deque()

    def add(obj: DerivedObject) -> None:
        m = obj.module
        if any(d > outer for d in m.dims):
            raise IntegrityError("out-of-window object reached the registry")
        if m.dims not in reg:
            reg[m.dims] = DerivedObject(m, 0)
            queue.append(m.dims)

    truncated = False
    for coll in seed_collections(q):
        for p in coll:
            if all(d <= outer for d in p.dims):
                add(p)
            else:
                truncated = True

    def fits(d):
        return d is not None and all(x <= outer for x in d)

    def consider(e: DerivedObject, f: DerivedObject) -> None:
        nonlocal truncated
        de, df = e.dims, f.dims
        if euler_form(q, df, de) != 0:
            return
        left = _as_dims(predicted_left(q, de, df))
        right = _as_dims(predicted_right(q, de, df))
        new_left = left is not None and left not in reg
        new_right = right is not None and right not in reg
        if not (new_left or new_right):
            return
        if fits(left) and new_left or fits(right) and new_right:
            if not is_orthogonal(f.module, e.module):
                return
            if new_left and fits(left):
                add(left_mutation(e, f))
            if new_right and fits(right) and right not in reg:
                add(right_mutation(e, f))
        if not truncated and (new_left and not fits(left) or new_right and not fits(right)):
            truncated = is_orthogonal(f.module, e.module)

    seen: list[tuple[int, ...]] = []
    while queue:
        d = queue.popleft()
        x = reg[d]
        for y in [reg[s] for s in seen]:
            consider(x, y)
            consider(y, x)
        seen.append(d)
    objs = sorted((o for o in reg.values() if all(d <= window for d in o.dims)),
                  key=lambda o: o.dims)
    truncated = truncated or len(objs) < len(reg)
    for o in objs:
        if euler_form(q, o.dims, o.dims) != 1:
            raise IntegrityError(f"{o} does not have Euler norm 1")
    return Enumeration(q, window, objs, truncated, {o.dims: o for o in objs})


def thread_count() -> int:
    """Worker cap from ``NCCOUNT_THREADS`` (default 1)."""
    try:
        return max(1, int(os.environ.get("NCCOUNT_THREADS", "1")))
    except ValueError:
        return 1
