"""Exact cycle-structure deciders.

Up to ``CYCLE_DP_MAX_N`` vertices everything is read off one bitmask dynamic
programme: ``dp[mask]`` holds the end vertices of paths that start at the
least vertex of ``mask`` and visit exactly ``mask``.  A cycle on ``mask``
exists iff one of those ends is adjacent to the start.  Larger graphs fall
back to backtracking for Hamilton cycles and S-cycles.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache

from . import _kernels as K
from .graph import Graph, _bits, _mask_of, bipartition, is_connected

CYCLE_DP_MAX_N = K.CYCLE_DP_MAX_N


@dataclass(frozen=True)
class CycleWitness:
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def is_valid(self, g: Graph) -> bool:
        vs = self.vertices
        if len(vs) < 3 or len(set(vs)) != len(vs):
            return False
        return all(g.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


@dataclass(frozen=True)
class CycleSpectrum:
    n: int
    present: frozenset[int]

    @property
    def is_hamiltonian(self) -> bool:
        return self.n >= 3 and self.n in self.present

    @property
    def is_pancyclic(self) -> bool:
        return self.n >= 3 and self.present == frozenset(range(3, self.n + 1))


@lru_cache(maxsize=2)
def _table(g: Graph):
    if g.n > CYCLE_DP_MAX_N:
        raise ValueError(f"cycle table limited to n <= {CYCLE_DP_MAX_N}")
    adj = g.kernel_adj()
    return adj, K.cycle_table(adj, g.n)


def _witness(g: Graph, mask: int) -> CycleWitness:
    adj, dp = _table(g)
    return CycleWitness(tuple(int(v) for v in K.cycle_order(dp, adj, mask)))


def hamiltonian_cycle(g: Graph) -> CycleWitness | None:
    if g.n < 3:
        return None
    if g.n > CYCLE_DP_MAX_N:
        if _obviously_not_hamiltonian(g):
            return None
        return _backtrack_cycle(g, g.full_mask, require_all=True)
    adj, dp = _table(g)
    if not K.closes_cycle(dp, adj, g.full_mask):
        return None
    return _witness(g, g.full_mask)


def is_hamiltonian(g: Graph) -> bool:
    return hamiltonian_cycle(g) is not None


def hamiltonian_path(g: Graph) -> list[int] | None:
    if g.n > CYCLE_DP_MAX_N:
        raise ValueError(f"Hamilton path search limited to n <= {CYCLE_DP_MAX_N}")
    order = K.hamiltonian_path(g.kernel_adj(), g.n)
    return [int(v) for v in order] if len(order) else None


def cycle_spectrum(g: Graph) -> CycleSpectrum:
    adj, dp = _table(g)
    present = K.cycle_lengths(dp, adj, g.n)
    return CycleSpectrum(g.n, frozenset(int(k) for k in range(3, g.n + 1) if present[k]))


def is_pancyclic(g: Graph) -> bool:
    return cycle_spectrum(g).is_pancyclic


def s_cyclable(g: Graph, S: Iterable[int]) -> CycleWitness | None:
    """A cycle through every vertex of S (any cycle when S is empty), or None."""
    smask = _mask_of(S, g.n)
    if g.n > CYCLE_DP_MAX_N:
        return _backtrack_cycle(g, smask, require_all=False)
    adj, dp = _table(g)
    mask = int(K.cycle_through(dp, adj, g.n, smask))
    if mask < 0:
        return None
    return _witness(g, mask)


def x_set(g: Graph, tialpha: int) -> frozenset[int]:
    """Vertices whose degree is at least ``tialpha``."""
    return frozenset(v for v in range(g.n) if g.degree(v) >= tialpha)


def _obviously_not_hamiltonian(g: Graph) -> bool:
    # cheap necessary conditions; backtracking is hopeless on e.g. K_{m,m+1}
    if not is_connected(g) or any(mv.bit_count() < 2 for mv in g.masks):
        return True
    sides = bipartition(g)
    return sides is not None and sides[0].bit_count() != sides[1].bit_count()


def _reachable(g: Graph, start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.masks[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def _backtrack_cycle(g: Graph, smask: int, require_all: bool) -> CycleWitness | None:
    anchors = [(smask & -smask).bit_length() - 1] if smask else list(range(g.n))
    for a in anchors:
        # without S every cycle can be rooted at its least vertex
        allowed_all = g.full_mask if smask else g.full_mask & ~((1 << a) - 1)
        path = [a]

        def extend(v: int, used: int) -> bool:
            if used & smask == smask and len(path) >= 3 and g.has_edge(v, a):
                if not require_all or used == g.full_mask:
                    return True
            free = allowed_all & ~used
            missing = smask & ~used
            if missing:
                reach = _reachable(g, v, free | (1 << v))
                if reach & missing != missing:
                    return False
            for u in _bits(g.masks[v] & free):
                path.append(u)
                if extend(u, used | 1 << u):
                    return True
                path.pop()
            return False

        if extend(a, 1 << a):
            return CycleWitness(tuple(path))
    return None
