"""Vertex connectivity, independence number and 2-connectivity."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .graph import Graph, component_masks
from .holes import hole_spectrum


class CutKind(enum.Enum):
    SEPARATOR = "separator"
    COMPLETE = "complete"


@dataclass(frozen=True)
class CutCertificate:
    kind: CutKind
    separator: frozenset[int]

    def is_valid(self, g: Graph) -> bool:
        if self.kind is CutKind.COMPLETE:
            return g.is_complete() and not self.separator
        keep = g.full_mask & ~sum(1 << v for v in self.separator)
        return len(component_masks(g, keep)) >= 2


def kappa_formula(g: Graph) -> int:
    """Minimum |N(S)| over nonempty S with |S| <= n - delta."""
    return min(hole_spectrum(g).values)


def kappa_formula_strict(g: Graph) -> int | None:
    """Same minimum restricted to |S| < n - delta (None when that range is empty)."""
    values = hole_spectrum(g).values[:-1]
    return min(values) if values else None


def kappa_oracle(g: Graph) -> tuple[int, CutCertificate]:
    """Vertex connectivity via max-flow; works for any n."""
    kappa, complete, sep = K.kappa_oracle(g.adjacency_matrix(), g.n)
    if complete:
        return int(kappa), CutCertificate(CutKind.COMPLETE, frozenset())
    return int(kappa), CutCertificate(CutKind.SEPARATOR, frozenset(np.flatnonzero(sep).tolist()))


def kappa(g: Graph) -> int:
    return kappa_oracle(g)[0]


def alpha(g: Graph) -> int:
    """Independence number by branch and bound over bitmasks."""
    return int(K.alpha(g.kernel_adj(), g.n))


def is_2_connected(g: Graph) -> bool:
    return g.n >= 3 and kappa_oracle(g)[0] >= 2
