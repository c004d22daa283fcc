"""Compiled bitset kernels.

Every kernel takes ``adj``, an ``int64`` array whose entry ``v`` is the
neighbourhood bitmask of vertex ``v``, plus the vertex count ``n <= 62``.
Masks stay in signed 64-bit arithmetic throughout; mixing unsigned and
signed integers in numba silently promotes to float.
"""

from __future__ import annotations

import numpy as np
from numba import njit, prange

SIGMA_INF = np.int64(1) << np.int64(40)
CYCLE_DP_MAX_N = 24

# record layout produced by ``evaluate``
R_N = 0
R_M = 1
R_DELTA = 2
R_SIGMA2 = 3
R_ALPHA = 4
R_TIALPHA = 5
R_TIALPHA_DEF = 6
R_KAPPA_FORMULA = 7
R_KAPPA_ORACLE = 8
R_CONNECTED = 9
R_TWO_CONNECTED = 10
R_TRIANGLE = 11
R_BIPARTITE = 12
R_BALANCED_CB = 13
R_HAMILTONIAN = 14
R_PANCYCLIC = 15
R_X_SIZE = 16
R_X_CYCLABLE = 17
R_ONE_SUM = 18
R_PROP41 = 19
R_NCOMP = 20
R_COMPLETE = 21
R_FIELDS = 22


@njit(cache=True, inline="always")
def popcount(x):
    x = x - ((x >> 1) & 0x5555555555555555)
    x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
    return ((x * 0x0101010101010101) >> 56) & 0xFF


@njit(cache=True, inline="always")
def lowbit_index(x):
    return popcount((x & -x) - 1)


@njit(cache=True)
def full_mask(n):
    return (np.int64(1) << n) - 1


@njit(cache=True)
def degrees(adj, n):
    out = np.empty(n, dtype=np.int64)
    for v in range(n):
        out[v] = popcount(adj[v])
    return out


@njit(cache=True)
def sigma2(adj, n):
    best = SIGMA_INF
    deg = degrees(adj, n)
    full = full_mask(n)
    for u in range(n):
        rest = ~adj[u] & full & ~((np.int64(1) << (u + 1)) - 1)
        while rest:
            v = lowbit_index(rest)
            rest &= rest - 1
            s = deg[u] + deg[v]
            if s < best:
                best = s
    return best


@njit(cache=True)
def nbhd(adj, smask):
    nb = np.int64(0)
    m = smask
    while m:
        v = lowbit_index(m)
        m &= m - 1
        nb |= adj[v]
    return nb & ~smask


@njit(cache=True)
def component_masks(adj, n, within):
    """Components of the subgraph induced by ``within``, in discovery order."""
    out = np.zeros(n, dtype=np.int64)
    count = 0
    remaining = within
    while remaining:
        comp = remaining & -remaining
        frontier = comp
        while frontier:
            reach = np.int64(0)
            f = frontier
            while f:
                v = lowbit_index(f)
                f &= f - 1
                reach |= adj[v]
            reach &= remaining & ~comp
            comp |= reach
            frontier = reach
        out[count] = comp
        count += 1
        remaining &= ~comp
    return out[:count]


@njit(cache=True)
def has_triangle(adj, n):
    for u in range(n):
        higher = adj[u] & ~((np.int64(1) << (u + 1)) - 1)
        while higher:
            v = lowbit_index(higher)
            higher &= higher - 1
            if adj[u] & adj[v]:
                return True
    return False


@njit(cache=True)
def bipartition(adj, n):
    """Mask of colour-0 vertices, or -1 when an odd cycle exists."""
    colour = np.full(n, -1, dtype=np.int64)
    stack = np.empty(n, dtype=np.int64)
    for root in range(n):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        top = 0
        stack[top] = root
        top += 1
        while top:
            top -= 1
            v = stack[top]
            nb = adj[v]
            while nb:
                u = lowbit_index(nb)
                nb &= nb - 1
                if colour[u] < 0:
                    colour[u] = 1 - colour[v]
                    stack[top] = u
                    top += 1
                elif colour[u] == colour[v]:
                    return np.int64(-1)
    a = np.int64(0)
    for v in range(n):
        if colour[v] == 0:
            a |= np.int64(1) << v
    return a


@njit(cache=True)
def is_balanced_complete_bipartite(adj, n):
    if n % 2:
        return False
    a = bipartition(adj, n)
    if a < 0:
        return False
    b = full_mask(n) & ~a
    if popcount(a) != popcount(b):
        return False
    for v in range(n):
        want = b if (a >> v) & 1 else a
        if adj[v] != want:
            return False
    return True


# bipartite holes -----------------------------------------------------------

@njit(cache=True)
def hole_spectrum(adj, n, smax):
    """f[s] = min |N(S)| over |S| = s for 1 <= s <= smax (f[0] unused).

    Subsets of each size are visited in increasing bitmask order (Gosper's
    hack); a size stops early once its minimum reaches 0.
    """
    f = np.zeros(smax + 1, dtype=np.int64)
    limit = np.int64(1) << n
    for s in range(1, smax + 1):
        best = n
        S = (np.int64(1) << s) - 1
        while S < limit:
            size = popcount(nbhd(adj, S))
            if size < best:
                best = size
                if best == 0:
                    break
            c = S & -S
            r = S + c
            S = (((r ^ S) >> 2) // c) | r
        f[s] = best
    return f


@njit(cache=True)
def min_degree(adj, n):
    best = n
    for v in range(n):
        d = popcount(adj[v])
        if d < best:
            best = d
    return best


@njit(cache=True)
def tialpha_formula(adj, n):
    smax = n - min_degree(adj, n)
    f = hole_spectrum(adj, n, smax)
    best = 0
    for s in range(1, smax + 1):
        if f[s] > best:
            best = f[s]
    return n - best


@njit(cache=True)
def kappa_formula(adj, n):
    smax = n - min_degree(adj, n)
    f = hole_spectrum(adj, n, smax)
    best = n
    for s in range(1, smax + 1):
        if f[s] < best:
            best = f[s]
    return best


@njit(cache=True)
def find_hole(adj, n, s, t):
    """Lexicographically least (S, T) with |S| = s, |T| = t and no S-T edge.

    S runs over s-combinations in lexicographic order; for a given S the
    least T is the t smallest vertices having no neighbour in S.  Returns
    (-1, -1) when no such pair exists.
    """
    idx = np.arange(s)
    while True:
        smask = np.int64(0)
        for i in range(s):
            smask |= np.int64(1) << idx[i]
        tmask = np.int64(0)
        got = 0
        for v in range(n):
            if got == t:
                break
            if (smask >> v) & 1:
                continue
            ok = True
            for i in range(s):
                if (adj[idx[i]] >> v) & 1:
                    ok = False
                    break
            if ok:
                tmask |= np.int64(1) << v
                got += 1
        if got == t:
            return smask, tmask
        i = s - 1
        while i >= 0 and idx[i] == n - s + i:
            i -= 1
        if i < 0:
            return np.int64(-1), np.int64(-1)
        idx[i] += 1
        for j in range(i + 1, s):
            idx[j] = idx[j - 1] + 1


@njit(cache=True)
def tialpha_definitional(adj, n):
    """Least k such that some (s, t) with s + t = k + 1 admits no hole."""
    for k in range(1, n + 1):
        for s in range(1, k + 1):
            t = k + 1 - s
            if s + t > n:
                return k
            S, _ = find_hole(adj, n, s, t)
            if S < 0:
                return k
    return n


@njit(cache=True)
def prop41_holds(adj, n):
    comps = component_masks(adj, n, full_mask(n))
    sizes = np.empty(len(comps), dtype=np.int64)
    for i in range(len(comps)):
        sizes[i] = popcount(comps[i])
    sizes.sort()
    acc = 0
    for a in sizes:
        if a - 1 > acc:
            return False
        acc += a
    return True


# connectivity --------------------------------------------------------------

@njit(cache=True)
def _augment(cap, src, dst, limit):
    """Unit augmenting paths on a residual matrix until ``limit`` is reached."""
    size = cap.shape[0]
    flow = 0
    parent = np.empty(size, dtype=np.int64)
    queue = np.empty(size, dtype=np.int64)
    while flow < limit:
        parent[:] = -1
        parent[src] = src
        head = 0
        tail = 0
        queue[tail] = src
        tail += 1
        while head < tail and parent[dst] < 0:
            x = queue[head]
            head += 1
            for y in range(size):
                if parent[y] < 0 and cap[x, y] > 0:
                    parent[y] = x
                    queue[tail] = y
                    tail += 1
        if parent[dst] < 0:
            break
        y = dst
        while y != src:
            x = parent[y]
            cap[x, y] -= 1
            cap[y, x] += 1
            y = x
        flow += 1
    return flow


@njit(cache=True)
def _local_cut(mat, n, s, t, limit):
    """Max number of internally disjoint s-t paths (capped) and a min separator."""
    big = n + 1
    cap = np.zeros((2 * n, 2 * n), dtype=np.int64)
    for v in range(n):
        cap[2 * v, 2 * v + 1] = 1
        for u in range(n):
            if mat[v, u]:
                cap[2 * v + 1, 2 * u] = big
    flow = _augment(cap, 2 * s + 1, 2 * t, limit)
    seen = np.zeros(2 * n, dtype=np.bool_)
    stack = np.empty(2 * n, dtype=np.int64)
    seen[2 * s + 1] = True
    stack[0] = 2 * s + 1
    top = 1
    while top:
        top -= 1
        x = stack[top]
        for y in range(2 * n):
            if not seen[y] and cap[x, y] > 0:
                seen[y] = True
                stack[top] = y
                top += 1
    sep = np.zeros(n, dtype=np.bool_)
    for v in range(n):
        if v != s and v != t and seen[2 * v] and not seen[2 * v + 1]:
            sep[v] = True
    return flow, sep


@njit(cache=True)
def kappa_oracle(mat, n):
    """Vertex connectivity by unit-capacity max-flow on the split graph.

    Returns (kappa, complete, separator).  Sources are taken in index order
    and the scan stops once the source index exceeds the best cut found: a
    minimum separator misses one of the first kappa + 1 vertices.
    """
    complete = True
    for u in range(n):
        for v in range(u + 1, n):
            if not mat[u, v]:
                complete = False
    if complete:
        return n - 1, True, np.zeros(n, dtype=np.bool_)
    best = n
    best_sep = np.zeros(n, dtype=np.bool_)
    i = 0
    while i < n and i <= best:
        for j in range(i + 1, n):
            if mat[i, j]:
                continue
            flow, sep = _local_cut(mat, n, i, j, best)
            if flow < best:
                best = flow
                best_sep = sep
        i += 1
    return best, False, best_sep


@njit(cache=True)
def matrix_from_masks(adj, n):
    mat = np.zeros((n, n), dtype=np.uint8)
    for v in range(n):
        m = adj[v]
        while m:
            u = lowbit_index(m)
            m &= m - 1
            mat[v, u] = 1
    return mat


@njit(cache=True)
def _mis(adj, mask):
    if mask == 0:
        return 0
    lo_v = -1
    lo_d = 99
    hi_v = -1
    hi_d = -1
    m = mask
    while m:
        v = lowbit_index(m)
        m &= m - 1
        d = popcount(adj[v] & mask)
        if d < lo_d:
            lo_d = d
            lo_v = v
        if d > hi_d:
            hi_d = d
            hi_v = v
    if lo_d <= 1:
        # a vertex of degree <= 1 lies in some maximum independent set
        return 1 + _mis(adj, mask & ~((np.int64(1) << lo_v) | adj[lo_v]))
    without = _mis(adj, mask & ~(np.int64(1) << hi_v))
    with_v = 1 + _mis(adj, mask & ~((np.int64(1) << hi_v) | adj[hi_v]))
    return max(without, with_v)


@njit(cache=True)
def alpha(adj, n):
    return _mis(adj, full_mask(n))


# cycles ----------------------------------------------------------------------

@njit(cache=True)
def cycle_table(adj, n):
    """dp[mask] = ends v of paths from min(mask) through exactly ``mask``.

    Only vertices larger than the anchor min(mask) are ever appended, so
    every cycle is counted once at its least vertex.
    """
    size = np.int64(1) << n
    dp = np.zeros(size, dtype=np.int64)
    for a in range(n):
        dp[np.int64(1) << a] = np.int64(1) << a
    for mask in range(1, size):
        ends = dp[mask]
        if ends == 0:
            continue
        a = lowbit_index(mask)
        allowed = ~mask & ~((np.int64(1) << (a + 1)) - 1)
        while ends:
            v = lowbit_index(ends)
            ends &= ends - 1
            ext = adj[v] & allowed
            while ext:
                u = lowbit_index(ext)
                ext &= ext - 1
                bit = np.int64(1) << u
                dp[mask | bit] |= bit
    return dp


@njit(cache=True)
def closes_cycle(dp, adj, mask):
    if popcount(mask) < 3:
        return False
    a = lowbit_index(mask)
    return (dp[mask] & adj[a]) != 0


@njit(cache=True)
def cycle_lengths(dp, adj, n):
    present = np.zeros(n + 1, dtype=np.bool_)
    for mask in range(1, np.int64(1) << n):
        if not present[popcount(mask)] and closes_cycle(dp, adj, mask):
            present[popcount(mask)] = True
    return present


@njit(cache=True)
def cycle_through(dp, adj, n, smask):
    """Least vertex-set mask of a cycle containing ``smask``, or -1."""
    size = np.int64(1) << n
    free = ~smask & (size - 1)
    # enumerate supersets of smask in increasing order via the free bits
    sub = np.int64(0)
    while True:
        mask = smask | sub
        if closes_cycle(dp, adj, mask):
            return mask
        if sub == free:
            return np.int64(-1)
        sub = (sub - free) & free


@njit(cache=True)
def cycle_order(dp, adj, mask):
    """Vertex order of a cycle on exactly ``mask`` (requires closes_cycle)."""
    k = popcount(mask)
    order = np.empty(k, dtype=np.int64)
    a = lowbit_index(mask)
    cand = dp[mask] & adj[a]
    v = lowbit_index(cand)
    cur = mask
    for pos in range(k - 1, 0, -1):
        order[pos] = v
        prev = cur & ~(np.int64(1) << v)
        cand = dp[prev] & adj[v]
        cur = prev
        v = lowbit_index(cand)
    order[0] = a
    return order


@njit(cache=True)
def hamiltonian_path(adj, n):
    size = np.int64(1) << n
    dp = np.zeros(size, dtype=np.int64)
    for v in range(n):
        dp[np.int64(1) << v] = np.int64(1) << v
    for mask in range(1, size):
        ends = dp[mask]
        while ends:
            v = lowbit_index(ends)
            ends &= ends - 1
            ext = adj[v] & ~mask
            while ext:
                u = lowbit_index(ext)
                ext &= ext - 1
                bit = np.int64(1) << u
                dp[mask | bit] |= bit
    full = size - 1
    if dp[full] == 0:
        return np.empty(0, dtype=np.int64)
    order = np.empty(n, dtype=np.int64)
    cur = full
    v = lowbit_index(dp[full])
    for pos in range(n - 1, 0, -1):
        order[pos] = v
        prev = cur & ~(np.int64(1) << v)
        v = lowbit_index(dp[prev] & adj[v])
        cur = prev
    order[0] = v
    return order


# structure -------------------------------------------------------------------

@njit(cache=True)
def one_sum_split(adj, n, kmax):
    """(v, A) with 1 <= |A| <= kmax - 1 and no edge from A to V - v - A.

    Any union of components of G - v qualifies, so it suffices to test the
    smallest component.  Returns (-1, 0) when no split exists.
    """
    if kmax < 2:
        return -1, np.int64(0)
    full = full_mask(n)
    for v in range(n):
        comps = component_masks(adj, n, full & ~(np.int64(1) << v))
        best = np.int64(0)
        best_size = n
        for c in comps:
            sz = popcount(c)
            if sz < best_size or (sz == best_size and (c & -c) < (best & -best)):
                best = c
                best_size = sz
        if len(comps) >= 2 and best_size <= kmax - 1:
            return v, best
    return -1, np.int64(0)


@njit(cache=True)
def evaluate(adj, n, rec, with_definitional):
    """Fill ``rec`` with every invariant the theorem checks need."""
    full = full_mask(n)
    deg = degrees(adj, n)
    m = 0
    dmin = n
    for v in range(n):
        m += deg[v]
        if deg[v] < dmin:
            dmin = deg[v]
    m //= 2
    complete = 2 * m == n * (n - 1)
    s2 = sigma2(adj, n)
    smax = n - dmin
    f = hole_spectrum(adj, n, smax)
    fmax = 0
    fmin = n
    for s in range(1, smax + 1):
        if f[s] > fmax:
            fmax = f[s]
        if f[s] < fmin:
            fmin = f[s]
    ta = n - fmax
    rec[R_N] = n
    rec[R_M] = m
    rec[R_DELTA] = dmin
    rec[R_SIGMA2] = s2
    rec[R_ALPHA] = alpha(adj, n)
    rec[R_TIALPHA] = ta
    rec[R_TIALPHA_DEF] = tialpha_definitional(adj, n) if with_definitional else -1
    rec[R_KAPPA_FORMULA] = fmin
    kap, _, _ = kappa_oracle(matrix_from_masks(adj, n), n)
    rec[R_KAPPA_ORACLE] = kap
    comps = component_masks(adj, n, full)
    rec[R_NCOMP] = len(comps)
    rec[R_CONNECTED] = len(comps) == 1
    rec[R_TWO_CONNECTED] = n >= 3 and kap >= 2
    rec[R_TRIANGLE] = has_triangle(adj, n)
    rec[R_BIPARTITE] = bipartition(adj, n) >= 0
    rec[R_BALANCED_CB] = is_balanced_complete_bipartite(adj, n)
    dp = cycle_table(adj, n)
    present = cycle_lengths(dp, adj, n)
    ham = n >= 3 and present[n]
    pan = n >= 3
    for length in range(3, n + 1):
        if not present[length]:
            pan = False
    rec[R_HAMILTONIAN] = ham
    rec[R_PANCYCLIC] = pan
    xmask = np.int64(0)
    for v in range(n):
        if deg[v] >= ta:
            xmask |= np.int64(1) << v
    rec[R_X_SIZE] = popcount(xmask)
    rec[R_X_CYCLABLE] = cycle_through(dp, adj, n, xmask) >= 0
    v, _ = one_sum_split(adj, n, (n + 2) // 4)
    rec[R_ONE_SUM] = v >= 0
    rec[R_PROP41] = prop41_holds(adj, n)
    rec[R_COMPLETE] = complete


@njit(cache=True)
def adj_from_code(code, n, adj):
    """Decode an edge bitmask in graph6 pair order (0,1), (0,2), (1,2), (0,3), ..."""
    for v in range(n):
        adj[v] = 0
    k = 0
    for v in range(1, n):
        for u in range(v):
            if (code >> k) & 1:
                adj[u] |= np.int64(1) << v
                adj[v] |= np.int64(1) << u
            k += 1


@njit(cache=True, parallel=True)
def evaluate_codes(n, codes, with_definitional):
    out = np.zeros((len(codes), R_FIELDS), dtype=np.int64)
    for i in prange(len(codes)):
        adj = np.empty(n, dtype=np.int64)
        adj_from_code(codes[i], n, adj)
        evaluate(adj, n, out[i], with_definitional)
    return out


@njit(cache=True, parallel=True)
def evaluate_packed(ns, adjs, with_definitional):
    out = np.zeros((len(ns), R_FIELDS), dtype=np.int64)
    for i in prange(len(ns)):
        evaluate(adjs[i], ns[i], out[i], with_definitional)
    return out


@njit(cache=True, parallel=True)
def tialpha_pairs(n, codes):
    """(formula, definitional) bipartite-hole numbers for each edge code."""
    out = np.zeros((len(codes), 2), dtype=np.int64)
    for i in prange(len(codes)):
        adj = np.empty(n, dtype=np.int64)
        adj_from_code(codes[i], n, adj)
        out[i, 0] = tialpha_formula(adj, n)
        out[i, 1] = tialpha_definitional(adj, n)
    return out


@njit(cache=True, parallel=True)
def kappa_pairs(ns, adjs):
    out = np.zeros((len(ns), 2), dtype=np.int64)
    for i in prange(len(ns)):
        n = ns[i]
        adj = adjs[i]
        out[i, 0] = kappa_formula(adj, n)
        k, _, _ = kappa_oracle(matrix_from_masks(adj, n), n)
        out[i, 1] = k
    return out


@njit(cache=True, parallel=True)
def kappa_pairs_codes(n, codes):
    out = np.zeros((len(codes), 2), dtype=np.int64)
    for i in prange(len(codes)):
        adj = np.empty(n, dtype=np.int64)
        adj_from_code(codes[i], n, adj)
        out[i, 0] = kappa_formula(adj, n)
        k, _, _ = kappa_oracle(matrix_from_masks(adj, n), n)
        out[i, 1] = k
    return out
