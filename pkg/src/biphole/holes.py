"""Bipartite holes and the bipartite-hole number.

Two independent routes to the bipartite-hole number are provided:
:func:`tialpha_formula` works from the minimum set-neighbourhood sizes
(:func:`hole_spectrum`), while :func:`tialpha_definitional` only ever asks
whether an (s, t)-hole exists.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass

from . import _kernels as K
from .graph import Graph, _bits, _mask_of, component_masks, delta


@dataclass(frozen=True)
class HoleWitness:
    """Disjoint nonempty sets S, T with no edge between them."""

    S: frozenset[int]
    T: frozenset[int]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.S), len(self.T)

    def is_valid(self, g: Graph) -> bool:
        if not self.S or not self.T or self.S & self.T:
            return False
        return not any(g.has_edge(u, v) for u in self.S for v in self.T)


@dataclass(frozen=True)
class HoleSpectrum:
    """``values[s - 1]`` is min |N(S)| over all S of size s, for s = 1..len(values)."""

    n: int
    values: tuple[int, ...]

    def __getitem__(self, s: int) -> int:
        if not 1 <= s <= len(self.values):
            raise KeyError(s)
        return self.values[s - 1]

    def __iter__(self):
        return iter(range(1, len(self.values) + 1))

    def items(self) -> list[tuple[int, int]]:
        return list(enumerate(self.values, 1))

    @property
    def smax(self) -> int:
        return len(self.values)


def find_bipartite_hole(g: Graph, s: int, t: int) -> HoleWitness | None:
    """Lexicographically least (s, t)-bipartite-hole, or None."""
    if s < 1 or t < 1:
        raise ValueError("s and t must be positive")
    if s + t > g.n:
        raise ValueError(f"no disjoint pair of sizes {s} + {t} fits in {g.n} vertices")
    smask, tmask = K.find_hole(g.kernel_adj(), g.n, s, t)
    if smask < 0:
        return None
    return HoleWitness(frozenset(_bits(int(smask))), frozenset(_bits(int(tmask))))


def has_bipartite_hole(g: Graph, s: int, t: int) -> bool:
    if s + t > g.n:
        return False
    return find_bipartite_hole(g, s, t) is not None


def hole_spectrum(g: Graph, full_range: bool = False) -> HoleSpectrum:
    """Minimum neighbourhood size of s-sets for 1 <= s <= n - delta.

    With ``full_range`` every s <= n - 1 is scanned (s = 1 for K_1), which
    lets callers confirm that sizes beyond n - delta never matter.
    """
    smax = max(g.n - 1, 1) if full_range else g.n - delta(g)
    f = K.hole_spectrum(g.kernel_adj(), g.n, smax)
    return HoleSpectrum(g.n, tuple(int(x) for x in f[1:]))


def tialpha_formula(g: Graph) -> int:
    return g.n - max(hole_spectrum(g).values)


def tialpha_definitional(g: Graph) -> int:
    return int(K.tialpha_definitional(g.kernel_adj(), g.n))


tialpha = tialpha_formula


def component_sizes(g: Graph) -> list[int]:
    return sorted(c.bit_count() for c in component_masks(g))


def check_tialpha_equals_n(g: Graph) -> tuple[bool, list[int]]:
    """Component-size criterion for the bipartite-hole number to equal n.

    With sizes a_1 <= ... <= a_r and prefix sums A_i, the criterion is
    a_i - 1 <= A_{i-1} for every i.  Returns the verdict and the sizes.
    """
    sizes = component_sizes(g)
    total = 0
    for a in sizes:
        if a - 1 > total:
            return False, sizes
        total += a
    return True, sizes


def min_components_bound_check(g: Graph, tialpha_value: int | None = None) -> bool:
    """Whether a graph with bipartite-hole number n has >= ceil(log2(n+1)) components."""
    value = tialpha_formula(g) if tialpha_value is None else tialpha_value
    if value != g.n:
        raise ValueError("precondition: the bipartite-hole number must equal n")
    return len(component_masks(g)) >= math.ceil(math.log2(g.n + 1))


def hole_between(g: Graph, S: Iterable[int], T: Iterable[int]) -> bool:
    """Whether (S, T) is a bipartite hole of ``g``."""
    smask, tmask = _mask_of(S, g.n), _mask_of(T, g.n)
    if not smask or not tmask or smask & tmask:
        return False
    return all(g.masks[v] & tmask == 0 for v in _bits(smask))
