"""Exhaustive verification of the degree-sum / bipartite-hole theorems.

Graphs are evaluated by the compiled :func:`biphole._kernels.evaluate`
kernel into integer records, and every theorem verdict is derived from those
records by :func:`verdict_table`.  The per-graph ``check_*`` functions and the
streaming :func:`run_suite` share that one code path; the per-graph functions
only add human-readable witnesses.

Theorem ids::

    T1.1  delta >= tialpha                      => Hamiltonian
    T1.2  delta >= tialpha                      => pancyclic or K_{m,m}
    T1.3  sigma2 >= 2 tialpha - 1               => Hamiltonian or spanning
                                                   subgraph of K_k (+)_1 K_{n+1-k},
                                                   2 <= k <= (n+2)/4
    T1.4  2-connected, sigma2 >= 2 tialpha - 1  => Hamiltonian
    T1.5  (none)                                => cycle through X = {deg >= tialpha}
    T1.6  sigma2 >= 2 tialpha - 1               => triangle or K_{m,m}
    L1.7  G non-complete                        => kappa >= delta + 2 - tialpha
    C1.10 (none)                                => kappa + tialpha <= n
    P4.1  (none)                                => component criterion <=> tialpha = n
    LOG2  tialpha = n                           => >= ceil(log2(n+1)) components
"""

from __future__ import annotations

import itertools
import time
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from typing import Any

import numba
import numpy as np

from . import _kernels as K
from . import cycles, holes
from .graph import INFINITY, Graph, _bits, component_masks, write_graph6

THEOREM_IDS = ("T1.1", "T1.2", "T1.3", "T1.4", "T1.5", "T1.6", "L1.7", "C1.10", "P4.1", "LOG2")
ENUMERATE_MAX_N = 7
CHUNK = 1 << 15

_BITLEN = np.array([int(i).bit_length() for i in range(K.CYCLE_DP_MAX_N + 2)], dtype=np.int64)


class UnknownTheoremError(ValueError):
    pass


@dataclass(frozen=True)
class TheoremVerdict:
    theorem_id: str
    hypothesis_holds: bool
    conclusion_holds: bool
    flagged: bool
    detail: str = ""

    @property
    def violation(self) -> bool:
        return self.hypothesis_holds and not self.conclusion_holds and not self.flagged

    def to_dict(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem_id,
            "hypothesis": self.hypothesis_holds,
            "conclusion": self.conclusion_holds,
            "flagged": self.flagged,
            "detail": self.detail,
        }


@dataclass
class TheoremStats:
    hypothesis: int = 0
    violations: int = 0
    flags: int = 0
    exceptions: int = 0

    def to_dict(self) -> dict[str, int]:
        return {
            "hypothesis": self.hypothesis,
            "violations": self.violations,
            "flags": self.flags,
            "exceptions": self.exceptions,
        }


@dataclass
class SearchResult:
    """Aggregate of a suite run.

    ``violations`` is always complete; ``flags`` keeps the first
    ``max_listed`` entries per theorem while ``stats`` carries full counts.
    ``exceptions`` counts graphs where the hypothesis held, the primary
    conclusion failed and the stated exceptional structure applied.
    """

    checkers: tuple[str, ...]
    graphs_scanned: int = 0
    violations: list[tuple[int, str, TheoremVerdict]] = field(default_factory=list)
    flags: list[tuple[int, str, TheoremVerdict]] = field(default_factory=list)
    stats: dict[str, TheoremStats] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def violation_count(self) -> int:
        return sum(s.violations for s in self.stats.values())

    @property
    def flag_count(self) -> int:
        return sum(s.flags for s in self.stats.values())

    def to_dict(self) -> dict[str, Any]:
        def entry(item):
            index, g6, verdict = item
            return {"index": index, "graph6": g6, **verdict.to_dict()}

        return {
            "checkers": list(self.checkers),
            "graphs_scanned": self.graphs_scanned,
            "violation_count": self.violation_count,
            "flag_count": self.flag_count,
            "stats": {t: self.stats[t].to_dict() for t in self.checkers},
            "violations": [entry(v) for v in self.violations],
            "flags": [entry(f) for f in self.flags],
        }


@dataclass
class Q54Result:
    graphs_scanned: int = 0
    hypothesis_count: int = 0
    candidates: list[tuple[int, str, dict[str, int]]] = field(default_factory=list)
    breaches: list[tuple[int, str, dict[str, int]]] = field(default_factory=list)
    elapsed: float = 0.0

    def to_dict(self) -> dict[str, Any]:
        def entry(item):
            index, g6, values = item
            return {"index": index, "graph6": g6, **values}

        return {
            "graphs_scanned": self.graphs_scanned,
            "hypothesis_count": self.hypothesis_count,
            "candidate_count": len(self.candidates),
            "breach_count": len(self.breaches),
            "candidates": [entry(c) for c in self.candidates],
            "breaches": [entry(b) for b in self.breaches],
        }


# graph streams -----------------------------------------------------------------

def graph_from_code(n: int, code: int) -> Graph:
    masks = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            if code >> k & 1:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            k += 1
    return Graph(n, tuple(masks))


class LabeledGraphs:
    """All labelled graphs on n vertices, in edge-bitmask order.

    Bit k of the code is the k-th vertex pair in graph6 order
    (0,1), (0,2), (1,2), (0,3), ...
    """

    def __init__(self, n: int):
        if not 1 <= n <= ENUMERATE_MAX_N:
            raise ValueError(f"labelled enumeration supports 1 <= n <= {ENUMERATE_MAX_N}, got {n}")
        self.n = n
        self.count = 1 << (n * (n - 1) // 2)

    def __len__(self) -> int:
        return self.count

    def __iter__(self) -> Iterator[Graph]:
        for code in range(self.count):
            yield graph_from_code(self.n, code)

    def code_chunks(self, size: int = CHUNK) -> Iterator[np.ndarray]:
        for start in range(0, self.count, size):
            yield np.arange(start, min(start + size, self.count), dtype=np.int64)


def enumerate_labeled(n: int) -> LabeledGraphs:
    return LabeledGraphs(n)


def _packed_chunks(stream: Iterable[Graph], size: int = CHUNK):
    """Yield (graphs, ns, adjs) batches for the packed kernel."""
    batch: list[Graph] = []
    for g in stream:
        if g.n > K.CYCLE_DP_MAX_N:
            raise ValueError(f"suite checks support n <= {K.CYCLE_DP_MAX_N}, got n = {g.n}")
        batch.append(g)
        if len(batch) == size:
            yield _pack(batch)
            batch = []
    if batch:
        yield _pack(batch)


def _pack(batch: list[Graph]):
    width = max(g.n for g in batch)
    adjs = np.zeros((len(batch), width), dtype=np.int64)
    for i, g in enumerate(batch):
        adjs[i, : g.n] = g.masks
    ns = np.array([g.n for g in batch], dtype=np.int64)
    return batch, ns, adjs


def evaluate_stream(stream: Iterable[Graph] | LabeledGraphs, with_definitional: bool = False):
    """Yield (offset, records, graph_at) per chunk; ``graph_at(i)`` rebuilds graph i."""
    offset = 0
    if isinstance(stream, LabeledGraphs):
        n = stream.n
        for codes in stream.code_chunks():
            recs = K.evaluate_codes(n, codes, with_definitional)
            yield offset, recs, (lambda i, codes=codes: graph_from_code(n, int(codes[i])))
            offset += len(codes)
        return
    for batch, ns, adjs in _packed_chunks(stream):
        recs = K.evaluate_packed(ns, adjs, with_definitional)
        yield offset, recs, (lambda i, batch=batch: batch[i])
        offset += len(batch)


def record(g: Graph, with_definitional: bool = False) -> np.ndarray:
    if g.n > K.CYCLE_DP_MAX_N:
        raise ValueError(f"records support n <= {K.CYCLE_DP_MAX_N}, got n = {g.n}")
    rec = np.zeros(K.R_FIELDS, dtype=np.int64)
    K.evaluate(g.kernel_adj(), g.n, rec, with_definitional)
    return rec


# verdicts ------------------------------------------------------------------------

def verdict_table(recs: np.ndarray) -> dict[str, tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]]:
    """Per theorem: (hypothesis, conclusion, flagged, exception) boolean columns."""
    recs = np.atleast_2d(recs)
    col = lambda i: recs[:, i]  # noqa: E731
    n = col(K.R_N)
    delta = col(K.R_DELTA)
    s2 = col(K.R_SIGMA2)
    ta = col(K.R_TIALPHA)
    kap = col(K.R_KAPPA_ORACLE)
    ham = col(K.R_HAMILTONIAN).astype(bool)
    pan = col(K.R_PANCYCLIC).astype(bool)
    bcb = col(K.R_BALANCED_CB).astype(bool)
    tri = col(K.R_TRIANGLE).astype(bool)
    one_sum = col(K.R_ONE_SUM).astype(bool)
    complete = col(K.R_COMPLETE).astype(bool)
    two_conn = col(K.R_TWO_CONNECTED).astype(bool)
    every = np.ones(len(recs), dtype=bool)
    never = np.zeros(len(recs), dtype=bool)
    small = n <= 2
    min_deg = delta >= ta
    ore = s2 >= 2 * ta - 1
    full_hole = ta == n
    return {
        "T1.1": (min_deg, ham, small, never),
        "T1.2": (min_deg, pan | bcb, small, min_deg & ~pan & bcb),
        "T1.3": (ore, ham | one_sum, small, ore & ~ham & one_sum),
        "T1.4": (two_conn & ore, ham, never, never),
        "T1.5": (every, col(K.R_X_CYCLABLE).astype(bool), col(K.R_X_SIZE) <= 2, never),
        "T1.6": (ore, tri | bcb, n == 1, ore & ~tri & bcb),
        "L1.7": (every, kap >= delta + 2 - ta, complete, never),
        "C1.10": (every, kap + ta <= n, never, never),
        "P4.1": (every, col(K.R_PROP41).astype(bool) == full_hole, never, never),
        "LOG2": (full_hole, col(K.R_NCOMP) >= _BITLEN[n], never, never),
    }


def _fmt_sigma2(value: int) -> str:
    return "inf" if value >= K.SIGMA_INF else str(int(value))


def _detail(theorem: str, rec: np.ndarray, g: Graph | None) -> str:
    n = int(rec[K.R_N])
    ta = int(rec[K.R_TIALPHA])
    s2 = _fmt_sigma2(rec[K.R_SIGMA2])
    delta = int(rec[K.R_DELTA])
    kap = int(rec[K.R_KAPPA_ORACLE])
    base = f"n={n} delta={delta} sigma2={s2} tialpha={ta}"
    if theorem in ("T1.1", "T1.2", "T1.3", "T1.4") and n <= 2:
        return base + "; Hamiltonicity undefined for n <= 2"
    if theorem == "T1.1" or theorem == "T1.4":
        extra = ""
        if g is not None and rec[K.R_HAMILTONIAN]:
            extra = f" cycle={list(cycles.hamiltonian_cycle(g).vertices)}"
        return base + f" hamiltonian={bool(rec[K.R_HAMILTONIAN])}" + extra
    if theorem == "T1.2":
        return base + f" pancyclic={bool(rec[K.R_PANCYCLIC])} balanced_complete_bipartite={bool(rec[K.R_BALANCED_CB])}"
    if theorem == "T1.3":
        extra = ""
        if g is not None and rec[K.R_ONE_SUM]:
            ok, cert = is_one_sum_subgraph(g)
            if ok:
                v, A = cert
                extra = f" one_sum_cut_vertex={v} one_sum_side={sorted(A)}"
        return base + f" hamiltonian={bool(rec[K.R_HAMILTONIAN])} one_sum_subgraph={bool(rec[K.R_ONE_SUM])}" + extra
    if theorem == "T1.5":
        literal = bool(rec[K.R_X_CYCLABLE])
        text = base + f" |X|={int(rec[K.R_X_SIZE])} x_cycle={literal}"
        if rec[K.R_X_SIZE] <= 2:
            text += f"; |X| <= 2: literal reading {'holds' if literal else 'fails'}, vacuous reading holds"
        return text
    if theorem == "T1.6":
        text = base + f" triangle={bool(rec[K.R_TRIANGLE])} balanced_complete_bipartite={bool(rec[K.R_BALANCED_CB])}"
        if n == 1:
            text += "; K1: sigma2 is infinite by convention and K1 is not K_{m,m}"
        return text
    if theorem == "L1.7":
        text = f"{base} kappa={kap} bound=delta+2-tialpha={delta + 2 - ta}"
        if rec[K.R_COMPLETE]:
            text += "; complete graph, inequality only claimed for non-complete graphs"
        return text
    if theorem == "C1.10":
        return f"{base} kappa={kap} kappa+tialpha={kap + ta}"
    if theorem == "P4.1":
        sizes = sorted(c.bit_count() for c in component_masks(g)) if g is not None else []
        return base + f" component_criterion={bool(rec[K.R_PROP41])} sizes={sizes}"
    if theorem == "LOG2":
        return base + f" components={int(rec[K.R_NCOMP])} needed={int(_BITLEN[n])}"
    raise UnknownTheoremError(theorem)


def _validate_checkers(checkers: Iterable[str]) -> tuple[str, ...]:
    chosen = set()
    for c in checkers:
        if c.lower() == "all":
            chosen.update(THEOREM_IDS)
        elif c.upper() in THEOREM_IDS:
            chosen.add(c.upper())
        else:
            raise UnknownTheoremError(f"unknown theorem id {c!r}")
    return tuple(t for t in THEOREM_IDS if t in chosen)


def check_graph(g: Graph, theorem: str) -> TheoremVerdict:
    (theorem,) = _validate_checkers([theorem])
    rec = record(g)
    hyp, concl, flag, _ = verdict_table(rec)[theorem]
    return TheoremVerdict(theorem, bool(hyp[0]), bool(concl[0]), bool(flag[0]), _detail(theorem, rec, g))


def check_t11_t12(g: Graph) -> tuple[TheoremVerdict, TheoremVerdict]:
    return check_graph(g, "T1.1"), check_graph(g, "T1.2")


def check_t13(g: Graph) -> TheoremVerdict:
    return check_graph(g, "T1.3")


def check_t14(g: Graph) -> TheoremVerdict:
    return check_graph(g, "T1.4")


def check_t15(g: Graph) -> TheoremVerdict:
    return check_graph(g, "T1.5")


def check_t16(g: Graph) -> TheoremVerdict:
    return check_graph(g, "T1.6")


def check_inequalities(g: Graph) -> list[TheoremVerdict]:
    return [check_graph(g, t) for t in ("L1.7", "C1.10", "P4.1", "LOG2")]


def is_one_sum_subgraph(g: Graph, kmax: int | None = None) -> tuple[bool, tuple[int, frozenset[int]] | None]:
    """Whether g spans a subgraph of K_k (+)_1 K_{n+1-k} for some 2 <= k <= kmax.

    Equivalent to: some vertex v and nonempty A, |A| <= kmax - 1, with no
    edge between A and V - v - A.  A must be a union of components of G - v,
    so the smallest component decides.  ``kmax`` defaults to floor((n+2)/4).
    """
    if kmax is None:
        kmax = (g.n + 2) // 4
    if kmax < 2:
        return False, None
    for v in range(g.n):
        comps = component_masks(g, g.full_mask & ~(1 << v))
        if len(comps) >= 2 and comps[0].bit_count() <= kmax - 1:
            return True, (v, frozenset(_bits(comps[0])))
    return False, None


# runners -------------------------------------------------------------------------

def set_threads(threads: int | None) -> None:
    if threads is not None:
        numba.set_num_threads(max(1, min(int(threads), numba.config.NUMBA_NUM_THREADS)))


def run_suite(
    stream: Iterable[Graph] | LabeledGraphs,
    checkers: Iterable[str] = ("all",),
    *,
    max_listed: int = 100,
    threads: int | None = None,
) -> SearchResult:
    """Apply the selected theorem checks to every graph in ``stream``."""
    chosen = _validate_checkers(checkers)
    set_threads(threads)
    result = SearchResult(chosen, stats={t: TheoremStats() for t in chosen})
    listed = {t: 0 for t in chosen}
    start = time.perf_counter()
    pending_flags: list[tuple[int, str, TheoremVerdict]] = []
    for offset, recs, graph_at in evaluate_stream(stream):
        table = verdict_table(recs)
        result.graphs_scanned += len(recs)
        for t in chosen:
            hyp, concl, flag, exc = table[t]
            stats = result.stats[t]
            bad = hyp & ~concl & ~flag
            stats.hypothesis += int(hyp.sum())
            stats.violations += int(bad.sum())
            stats.flags += int(flag.sum())
            stats.exceptions += int(exc.sum())
            for i in np.flatnonzero(bad):
                g = graph_at(i)
                verdict = TheoremVerdict(t, True, False, False, _detail(t, recs[i], g))
                result.violations.append((offset + int(i), write_graph6(g).decode(), verdict))
            room = max_listed - listed[t]
            for i in np.flatnonzero(flag)[: max(room, 0)]:
                g = graph_at(i)
                verdict = TheoremVerdict(t, bool(hyp[i]), bool(concl[i]), True, _detail(t, recs[i], g))
                pending_flags.append((offset + int(i), write_graph6(g).decode(), verdict))
                listed[t] += 1
    order = {t: k for k, t in enumerate(THEOREM_IDS)}
    result.violations.sort(key=lambda x: (x[0], order[x[2].theorem_id]))
    result.flags = sorted(pending_flags, key=lambda x: (x[0], order[x[2].theorem_id]))
    result.elapsed = time.perf_counter() - start
    return result


def q54_values(rec: np.ndarray) -> dict[str, Any]:
    return {
        "n": int(rec[K.R_N]),
        "sigma2": int(rec[K.R_SIGMA2]) if rec[K.R_SIGMA2] < K.SIGMA_INF else "inf",
        "tialpha": int(rec[K.R_TIALPHA]),
        "kappa": int(rec[K.R_KAPPA_ORACLE]),
        "alpha": int(rec[K.R_ALPHA]),
    }


def search_q54(stream: Iterable[Graph] | LabeledGraphs, *, threads: int | None = None) -> Q54Result:
    """Collect 2-connected graphs with sigma2 >= 2 tialpha - 1 but kappa < alpha.

    Any such candidate must have sigma2 < n, since sigma2 >= n already forces
    kappa >= alpha; a candidate violating that is recorded as a breach.
    """
    set_threads(threads)
    result = Q54Result()
    start = time.perf_counter()
    for offset, recs, graph_at in evaluate_stream(stream):
        result.graphs_scanned += len(recs)
        n = recs[:, K.R_N]
        s2 = recs[:, K.R_SIGMA2]
        ta = recs[:, K.R_TIALPHA]
        hyp = recs[:, K.R_TWO_CONNECTED].astype(bool) & (s2 >= 2 * ta - 1)
        cand = hyp & (recs[:, K.R_KAPPA_ORACLE] < recs[:, K.R_ALPHA])
        result.hypothesis_count += int(hyp.sum())
        for i in np.flatnonzero(cand):
            item = (offset + int(i), write_graph6(graph_at(i)).decode(), q54_values(recs[i]))
            result.candidates.append(item)
            if s2[i] >= n[i]:
                result.breaches.append(item)
    result.elapsed = time.perf_counter() - start
    return result


# oracle agreement and family reports ---------------------------------------------

def tialpha_disagreements(n: int) -> tuple[int, list[int]]:
    """Compare formula and definitional bipartite-hole numbers on all labelled n-graphs."""
    graphs = enumerate_labeled(n)
    bad: list[int] = []
    for codes in graphs.code_chunks():
        pairs = K.tialpha_pairs(n, codes)
        bad.extend(int(c) for c in codes[pairs[:, 0] != pairs[:, 1]])
    return len(graphs), bad


def kappa_disagreements_labeled(n: int) -> tuple[int, list[int]]:
    graphs = enumerate_labeled(n)
    bad: list[int] = []
    for codes in graphs.code_chunks():
        pairs = K.kappa_pairs_codes(n, codes)
        bad.extend(int(c) for c in codes[pairs[:, 0] != pairs[:, 1]])
    return len(graphs), bad


def kappa_disagreements(stream: Iterable[Graph]) -> tuple[int, list[Graph]]:
    scanned = 0
    bad: list[Graph] = []
    for batch, ns, adjs in _packed_chunks(stream):
        pairs = K.kappa_pairs(ns, adjs)
        scanned += len(batch)
        bad.extend(batch[i] for i in np.flatnonzero(pairs[:, 0] != pairs[:, 1]))
    return scanned, bad


def ex51_report(n: int, a: int) -> dict[str, Any]:
    """Brute-force bipartite-hole number of the ex51 family against both stated forms."""
    from .families import FamilySpec, Family, instance

    inst = instance(FamilySpec(Family.EX51, (n, a)))
    brute = holes.tialpha_definitional(inst.graph)
    formula = holes.tialpha_formula(inst.graph)
    min_form = inst.expected["tialpha"]
    alt_form = inst.expected["tialpha_alt"]
    inconsistent = [name for name, v in (("min{2a-3, n-a+1}", min_form), ("2a+3", alt_form)) if v != brute]
    return {
        "n": n,
        "a": a,
        "tialpha_definitional": brute,
        "tialpha_formula": formula,
        "min_form": min_form,
        "alt_form_2a_plus_3": alt_form,
        "min_form_matches": min_form == brute,
        "alt_form_matches": alt_form == brute,
        "inconsistent_forms": inconsistent,
    }


def random_graphs(rng: np.random.Generator, count: int, n: int, p: float = 0.5) -> Iterator[Graph]:
    """G(n, p) samples, for property sweeps and cross-checks."""
    pairs = list(itertools.combinations(range(n), 2))
    for _ in range(count):
        keep = rng.random(len(pairs)) < p
        masks = [0] * n
        for (u, v), k in zip(pairs, keep):
            if k:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
        yield Graph(n, tuple(masks))


def sigma2_value(rec: np.ndarray) -> int | float:
    return INFINITY if rec[K.R_SIGMA2] >= K.SIGMA_INF else int(rec[K.R_SIGMA2])
