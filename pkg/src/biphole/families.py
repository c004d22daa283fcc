"""Deterministic generators for the named graph families.

Every generator fixes a canonical labelling so its graph6 output is
byte-stable.  :func:`instance` pairs a generated graph with the invariant
values the construction is known to have, so harnesses can check them
uniformly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

from .graph import Graph, build_graph


class Family(enum.Enum):
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"
    CYCLE = "cycle"
    PATH = "path"
    STAR = "star"
    EDGELESS = "edgeless"
    UNION = "union"
    JOIN = "join"
    ONE_SUM = "one_sum"
    EX51 = "ex51"
    EX52 = "ex52"
    CIRCULANT_QK = "circulant_qk"


ALIASES = {
    "k": Family.COMPLETE,
    "complete": Family.COMPLETE,
    "k_bip": Family.COMPLETE_BIPARTITE,
    "bipartite": Family.COMPLETE_BIPARTITE,
    "complete_bipartite": Family.COMPLETE_BIPARTITE,
    "c": Family.CYCLE,
    "cycle": Family.CYCLE,
    "p": Family.PATH,
    "path": Family.PATH,
    "star": Family.STAR,
    "edgeless": Family.EDGELESS,
    "empty": Family.EDGELESS,
    "union": Family.UNION,
    "join": Family.JOIN,
    "one_sum": Family.ONE_SUM,
    "onesum": Family.ONE_SUM,
    "ex51": Family.EX51,
    "ex52": Family.EX52,
    "circulant": Family.CIRCULANT_QK,
    "circulant_qk": Family.CIRCULANT_QK,
}

ARITY = {
    Family.COMPLETE: 1,
    Family.COMPLETE_BIPARTITE: 2,
    Family.CYCLE: 1,
    Family.PATH: 1,
    Family.STAR: 1,
    Family.EDGELESS: 1,
    Family.ONE_SUM: 2,
    Family.EX51: 2,
    Family.EX52: 3,
    Family.CIRCULANT_QK: 2,
}


class FamilyError(ValueError):
    """Parameters outside a family's valid range."""


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its parameters.

    UNION and JOIN take two nested ``FamilySpec`` values; every other family
    takes integers (see ``ARITY``).
    """

    family: Family
    params: tuple[Any, ...] = ()

    @classmethod
    def parse(cls, name: str, params: list[str] | tuple[str, ...]) -> FamilySpec:
        try:
            family = ALIASES[name.lower()]
        except KeyError:
            raise FamilyError(f"unknown family {name!r}") from None
        if family in (Family.UNION, Family.JOIN):
            raise FamilyError(f"{family.value} needs nested families; build it from the library")
        try:
            values = tuple(int(p) for p in params)
        except ValueError:
            raise FamilyError("family parameters must be integers") from None
        return cls(family, values)

    def __str__(self) -> str:
        return f"{self.family.value}({', '.join(str(p) for p in self.params)})"


@dataclass(frozen=True)
class FamilyInstance:
    spec: FamilySpec
    graph: Graph
    expected: dict[str, Any] = field(default_factory=dict)


def complete(n: int) -> Graph:
    if n < 1:
        raise FamilyError("K_n needs n >= 1")
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise FamilyError("K_{a,b} needs a, b >= 1")
    return build_graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise FamilyError("C_n needs n >= 3")
    return build_graph(n, [(v, (v + 1) % n) for v in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise FamilyError("P_n needs n >= 1")
    return build_graph(n, [(v, v + 1) for v in range(n - 1)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    if leaves < 1:
        raise FamilyError("a star needs at least one leaf")
    return build_graph(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def edgeless(n: int) -> Graph:
    if n < 1:
        raise FamilyError("edgeless graph needs n >= 1")
    return build_graph(n, [])


def union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; vertices of ``h`` are shifted by ``g.n``."""
    return Graph(g.n + h.n, g.masks + tuple(mv << g.n for mv in h.masks))


def join(g: Graph, h: Graph) -> Graph:
    u = union(g, h)
    gmask = g.full_mask
    hmask = h.full_mask << g.n
    masks = tuple(mv | (hmask if v < g.n else gmask) for v, mv in enumerate(u.masks))
    return Graph(u.n, masks)


def one_sum(a: int, b: int) -> Graph:
    """K_a and K_b glued at vertex 0: cliques {0..a-1} and {0, a..a+b-2}."""
    if a < 1 or b < 1:
        raise FamilyError("one_sum needs a, b >= 1")
    first = list(range(a))
    second = [0] + list(range(a, a + b - 1))
    edges = [(u, v) for part in (first, second) for i, u in enumerate(part) for v in part[i + 1:]]
    return build_graph(a + b - 1, edges)


def _ex51_check(n: int, a: int) -> None:
    if a < 3 or 4 * (a - 2) < n or 2 * a > n:
        raise FamilyError(f"ex51 needs n/4 + 2 <= a <= n/2 and a >= 3, got n={n}, a={a}")


def gen_ex51(n: int, a: int) -> Graph:
    """(K_{a-2} + K_{n-a}) joined with K_2; the K_2 is vertices n-2, n-1."""
    _ex51_check(n, a)
    return join(union(complete(a - 2), complete(n - a)), complete(2))


def _ex52_check(p: int, q: int, r: int) -> None:
    if p < 4 or q < 2 * p or not 2 * p - 1 <= r <= p + q - 5:
        raise FamilyError(
            f"ex52 needs p >= 4, q >= 2p and 2p-1 <= r <= p+q-5, got p={p}, q={q}, r={r}"
        )


def gen_ex52(p: int, q: int, r: int) -> Graph:
    """(C_p + K_q) joined with K_r; cycle 0..p-1, clique next, K_r last."""
    _ex52_check(p, q, r)
    return join(union(cycle(p), complete(q)), complete(r))


def circulant_offsets(q: int, k: int) -> list[int]:
    """U = union of U_i = {2ik+1, ..., (2i+1)k} for i = 0..q."""
    return [2 * i * k + j for i in range(q + 1) for j in range(1, k + 1)]


def circulant_order(q: int, k: int) -> int:
    return 4 * q * k + 4 * k + 2 * q - 1


def gen_circulant_qk(q: int, k: int) -> Graph:
    """Circulant on Z_n with xy an edge iff y - x is in U or -U."""
    if q < 1 or k < 2 * q:
        raise FamilyError(f"circulant needs q >= 1 and k >= 2q, got q={q}, k={k}")
    n = circulant_order(q, k)
    offsets = circulant_offsets(q, k)
    return build_graph(n, [(x, (x + d) % n) for x in range(n) for d in offsets])


def generate(spec: FamilySpec) -> Graph:
    f, p = spec.family, spec.params
    if f in (Family.UNION, Family.JOIN):
        if len(p) != 2 or not all(isinstance(x, FamilySpec) for x in p):
            raise FamilyError(f"{f.value} takes two nested families")
        combine = union if f is Family.UNION else join
        return combine(generate(p[0]), generate(p[1]))
    if len(p) != ARITY[f]:
        raise FamilyError(f"{f.value} takes {ARITY[f]} parameter(s), got {len(p)}")
    builders = {
        Family.COMPLETE: complete,
        Family.COMPLETE_BIPARTITE: complete_bipartite,
        Family.CYCLE: cycle,
        Family.PATH: path,
        Family.STAR: star,
        Family.EDGELESS: edgeless,
        Family.ONE_SUM: one_sum,
        Family.EX51: gen_ex51,
        Family.EX52: gen_ex52,
        Family.CIRCULANT_QK: gen_circulant_qk,
    }
    return builders[f](*p)


def expectations(spec: FamilySpec) -> dict[str, Any]:
    """Invariant values the construction is claimed to have.

    Keys ending in ``_min``/``_max`` are bounds; ``regular`` is the common
    degree.  ``tialpha_alt`` for ex51 is the second closed form stated for
    that family (2a + 3), kept so a harness can report which form holds.
    """
    f, p = spec.family, spec.params
    if f is Family.COMPLETE_BIPARTITE:
        a, b = p
        return {"n": a + b, "m": a * b, "alpha": max(a, b)}
    if f is Family.COMPLETE:
        return {"n": p[0], "tialpha": 1, "kappa": p[0] - 1}
    if f is Family.EX51:
        n, a = p
        return {
            "n": n,
            "sigma2": n,
            "tialpha": min(2 * a - 3, n - a + 1),
            "tialpha_alt": 2 * a + 3,
            "two_connected": True,
        }
    if f is Family.EX52:
        q_p, q_q, r = p
        return {
            "n": q_p + q_q + r,
            "sigma2": 2 * r + 4,
            "tialpha": 2 * q_p + 1,
            "kappa_min": r,
            "alpha_max": q_p + 1,
        }
    if f is Family.CIRCULANT_QK:
        q, k = p
        d = 2 * (q + 1) * k
        return {
            "n": circulant_order(q, k),
            "regular": d,
            "sigma2": 2 * d,
            "closure_is_self": True,
            "two_connected": True,
            "tialpha_max": d,
            "no_hole": (2, d - 1),
        }
    if f is Family.ONE_SUM:
        a, b = p
        return {"n": a + b - 1, "m": a * (a - 1) // 2 + b * (b - 1) // 2}
    return {}


def instance(spec: FamilySpec) -> FamilyInstance:
    return FamilyInstance(spec, generate(spec), expectations(spec))
