"""One-stop invariant summary for a single graph."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from . import connectivity, cycles, holes
from .graph import (
    INFINITY,
    Graph,
    degree_sequence,
    has_triangle,
    is_balanced_complete_bipartite,
    is_bipartite,
    is_connected,
    sigma2,
)


@dataclass(frozen=True)
class InvariantReport:
    n: int
    m: int
    delta: int
    sigma2: int | float
    alpha: int
    tialpha: int
    kappa: int
    is_connected: bool
    is_2_connected: bool
    has_triangle: bool
    is_bipartite: bool
    is_balanced_complete_bipartite: bool
    is_hamiltonian: bool
    is_pancyclic: bool
    tialpha_definitional: int | None = None
    kappa_formula: int | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        if d["sigma2"] == INFINITY:
            d["sigma2"] = "inf"
        if self.tialpha_definitional is None:
            del d["tialpha_definitional"]
            del d["kappa_formula"]
        return d


def invariant_report(g: Graph, oracle: bool = False) -> InvariantReport:
    """Compute every invariant; ``oracle`` adds the independent cross-checks.

    ``tialpha`` comes from the neighbourhood formula and ``kappa`` from
    max-flow.  With ``oracle`` the definitional bipartite-hole number and the
    neighbourhood formula for connectivity are included as well.
    """
    spectrum = cycles.cycle_spectrum(g)
    kappa = connectivity.kappa(g)
    return InvariantReport(
        n=g.n,
        m=g.m,
        delta=min(degree_sequence(g)),
        sigma2=sigma2(g),
        alpha=connectivity.alpha(g),
        tialpha=holes.tialpha_formula(g),
        kappa=kappa,
        is_connected=is_connected(g),
        is_2_connected=g.n >= 3 and kappa >= 2,
        has_triangle=has_triangle(g)[0],
        is_bipartite=is_bipartite(g),
        is_balanced_complete_bipartite=is_balanced_complete_bipartite(g),
        is_hamiltonian=spectrum.is_hamiltonian,
        is_pancyclic=spectrum.is_pancyclic,
        tialpha_definitional=holes.tialpha_definitional(g) if oracle else None,
        kappa_formula=connectivity.kappa_formula(g) if oracle else None,
    )
