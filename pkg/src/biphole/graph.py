"""Immutable simple graphs on vertices ``0..n-1`` with bitset adjacency.

Each vertex stores its open neighbourhood as a Python ``int`` bitmask, so set
union, intersection and popcount are word operations for ``n <= 64`` and stay
correct (just slower) for larger graphs.  The exhaustive kernels in
:mod:`biphole._kernels` take the same masks as an ``int64`` array.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from typing import TextIO

import numpy as np

INFINITY = math.inf
"""Value of :func:`sigma2` for graphs without a nonadjacent pair."""

KERNEL_MAX_N = 62


class GraphFormatError(ValueError):
    """Raised for malformed graph6 or edge-list input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_of(vertices: Iterable[int], n: int) -> int:
    mask = 0
    for v in vertices:
        v = int(v)
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range 0..{n - 1}")
        mask |= 1 << v
    return mask


@dataclass(frozen=True, eq=True)
class Graph:
    """A simple undirected graph; ``masks[v]`` is the bitmask of N(v)."""

    n: int
    masks: tuple[int, ...]
    _m: int = field(default=-1, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        if len(self.masks) != self.n:
            raise ValueError("masks must have one entry per vertex")
        full = (1 << self.n) - 1
        for v, mv in enumerate(self.masks):
            if mv & ~full:
                raise ValueError(f"neighbour of {v} out of range")
            if mv >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in _bits(mv):
                if not self.masks[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "_m", sum(mv.bit_count() for mv in self.masks) // 2)

    @property
    def m(self) -> int:
        return self._m

    @property
    def adj(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(_bits(mv)) for mv in self.masks)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self.masks[v]))

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in _bits(self.masks[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        full = self.full_mask
        return [
            (u, v)
            for u in range(self.n)
            for v in _bits(~self.masks[u] & full & ~((1 << (u + 1)) - 1))
        ]

    def is_complete(self) -> bool:
        return 2 * self.m == self.n * (self.n - 1)

    def with_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise ValueError("loop edge")
        masks = list(self.masks)
        masks[u] |= 1 << v
        masks[v] |= 1 << u
        return Graph(self.n, tuple(masks))

    def complement(self) -> Graph:
        full = self.full_mask
        return Graph(self.n, tuple(~mv & full & ~(1 << v) for v, mv in enumerate(self.masks)))

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabelled in increasing vertex order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return build_graph(len(keep), edges)

    def kernel_adj(self) -> np.ndarray:
        """Adjacency masks as the ``int64`` array the compiled kernels expect."""
        if self.n > KERNEL_MAX_N:
            raise ValueError(f"exhaustive kernels support n <= {KERNEL_MAX_N}, got n = {self.n}")
        return np.array(self.masks, dtype=np.int64)

    def adjacency_matrix(self) -> np.ndarray:
        mat = np.zeros((self.n, self.n), dtype=np.uint8)
        for u, v in self.edges():
            mat[u, v] = mat[v, u] = 1
        return mat

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on ``n`` vertices with the given edges; duplicates collapse."""
    if n < 1:
        raise ValueError("n must be at least 1")
    masks = [0] * n
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"loop edge ({u}, {v})")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(n, tuple(masks))


def from_masks(masks: Iterable[int]) -> Graph:
    masks = tuple(int(x) for x in masks)
    return Graph(len(masks), masks)


def degree_sequence(g: Graph) -> list[int]:
    return [mv.bit_count() for mv in g.masks]


def delta(g: Graph) -> int:
    return min(degree_sequence(g))


def sigma2(g: Graph) -> int | float:
    """Minimum degree sum over nonadjacent pairs, or INFINITY if there is none."""
    degs = degree_sequence(g)
    best = INFINITY
    full = g.full_mask
    for u in range(g.n):
        rest = ~g.masks[u] & full & ~((1 << (u + 1)) - 1)
        for v in _bits(rest):
            s = degs[u] + degs[v]
            if s < best:
                best = s
    return best


def neighborhood_mask(g: Graph, smask: int) -> int:
    nb = 0
    for v in _bits(smask):
        nb |= g.masks[v]
    return nb & ~smask


def neighborhood_of_set(g: Graph, vertices: Iterable[int]) -> frozenset[int]:
    """Open neighbourhood N(S): vertices outside S with a neighbour in S."""
    smask = _mask_of(vertices, g.n)
    if not smask:
        raise ValueError("S must be nonempty")
    return frozenset(_bits(neighborhood_mask(g, smask)))


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Components of the subgraph induced by ``within`` (default: all of V)."""
    remaining = g.full_mask if within is None else within
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            reach = 0
            for v in _bits(frontier):
                reach |= g.masks[v]
            reach &= remaining & ~comp
            comp |= reach
            frontier = reach
        comps.append(comp)
        remaining &= ~comp
    comps.sort(key=lambda c: (c.bit_count(), (c & -c).bit_length()))
    return comps


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components ordered by size, then by least vertex."""
    return [frozenset(_bits(c)) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return len(component_masks(g)) == 1


def has_triangle(g: Graph) -> tuple[bool, tuple[int, int, int] | None]:
    for u in range(g.n):
        higher = g.masks[u] >> (u + 1) << (u + 1)
        for v in _bits(higher):
            common = g.masks[u] & g.masks[v] & ~((1 << (v + 1)) - 1)
            if common:
                w = (common & -common).bit_length() - 1
                return True, (u, v, w)
    return False, None


def bipartition(g: Graph) -> tuple[int, int] | None:
    """Two-colouring as a pair of masks, or None when an odd cycle exists."""
    colour = [-1] * g.n
    for root in range(g.n):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in _bits(g.masks[v]):
                if colour[u] < 0:
                    colour[u] = 1 - colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return None
    a = sum(1 << v for v in range(g.n) if colour[v] == 0)
    return a, g.full_mask & ~a


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def is_balanced_complete_bipartite(g: Graph) -> bool:
    """True iff ``g`` is K_{m,m} for some m >= 1."""
    if g.n % 2 or not is_connected(g):
        return False
    parts = bipartition(g)
    if parts is None:
        return False
    a, b = parts
    if a.bit_count() != b.bit_count():
        return False
    return all(g.masks[v] == (b if a >> v & 1 else a) for v in range(g.n))


def bondy_chvatal_closure(g: Graph) -> Graph:
    """Add edges between nonadjacent pairs with degree sum >= n until none remain."""
    masks = list(g.masks)
    degs = [mv.bit_count() for mv in masks]
    full = g.full_mask
    changed = True
    while changed:
        changed = False
        for u in range(g.n):
            for v in _bits(~masks[u] & full & ~((1 << (u + 1)) - 1)):
                if degs[u] + degs[v] >= g.n:
                    masks[u] |= 1 << v
                    masks[v] |= 1 << u
                    degs[u] += 1
                    degs[v] += 1
                    changed = True
    return Graph(g.n, tuple(masks))


# graph6 ---------------------------------------------------------------------

GRAPH6_HEADER = b">>graph6<<"
GRAPH6_MAX_N = 258047


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= GRAPH6_MAX_N:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise ValueError(f"graph6 supports n <= {GRAPH6_MAX_N}")


def write_graph6(g: Graph) -> bytes:
    """graph6 encoding without header or trailing newline."""
    out = bytearray(_encode_n(g.n))
    acc = 0
    nbits = 0
    for v in range(1, g.n):
        mv = g.masks[v]
        for u in range(v):
            acc = acc << 1 | (mv >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def parse_graph6(data: bytes | str) -> Graph:
    """Decode one graph6 line; a single trailing newline is tolerated."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.rstrip(b"\r\n")
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise GraphFormatError("empty graph6 string")
    if any(not 63 <= c <= 126 for c in data):
        raise GraphFormatError("graph6 byte outside the printable range 63..126")
    if data[0] != 126:
        n, body = data[0] - 63, data[1:]
    else:
        if len(data) >= 2 and data[1] == 126:
            raise GraphFormatError("8-byte graph6 size prefix is not supported")
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 size prefix")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        if n < 63:
            raise GraphFormatError("non-canonical graph6 size prefix")
        body = data[4:]
    if n < 1:
        raise GraphFormatError("graph6 graph with no vertices")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) != nbytes:
        raise GraphFormatError(f"expected {nbytes} data bytes for n = {n}, got {len(body)}")
    if nbytes and nbits % 6:
        pad = 6 - nbits % 6
        if (body[-1] - 63) & ((1 << pad) - 1):
            raise GraphFormatError("nonzero graph6 padding bits")
    masks = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            k += 1
    return Graph(n, tuple(masks))


def read_graph6_lines(stream: Iterable[bytes | str]) -> Iterator[Graph]:
    """Graphs from a graph6 file, one per line; header and blank lines skipped."""
    for lineno, line in enumerate(stream, 1):
        if isinstance(line, str):
            line = line.encode("ascii", errors="replace")
        line = line.strip()
        if line.startswith(GRAPH6_HEADER):
            line = line[len(GRAPH6_HEADER):]
        if not line:
            continue
        try:
            yield parse_graph6(line)
        except GraphFormatError as exc:
            raise GraphFormatError(str(exc), line=lineno) from None


# edge list ------------------------------------------------------------------

def write_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str | TextIO) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``."""
    if not isinstance(text, str):
        text = text.read()
    rows = [(i, line.split()) for i, line in enumerate(text.splitlines(), 1) if line.strip()]
    if not rows:
        raise GraphFormatError("empty edge list", line=1)
    lineno, head = rows[0]
    try:
        n, m = (int(x) for x in head)
    except ValueError:
        raise GraphFormatError("header must be 'n m'", line=lineno) from None
    if len(rows) - 1 != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(rows) - 1}", line=lineno)
    edges = []
    for lineno, parts in rows[1:]:
        try:
            u, v = (int(x) for x in parts)
        except ValueError:
            raise GraphFormatError("edge line must be 'u v'", line=lineno) from None
        edges.append((u, v))
    try:
        return build_graph(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc), line=lineno) from None
