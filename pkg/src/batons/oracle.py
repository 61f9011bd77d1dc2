"""Formula-independent exact densities via window automata and mean cycles.

Every role constraint is local with horizon L = diam(S): whether a new
position may join the set depends only on the previous L memberships.
Encode the last L memberships as an L-bit window (bit L-1 = newest).
Appending a bit b at the next position forms an (L+1)-bit extended
window e = w | (b << L), and the role admits the transition iff

* packing:  b = 1 requires no earlier member at lag d for any positive
            pairwise difference d of S (all lags are <= L);
* free:     the translate of S whose maximum lands on the new position
            must not be fully contained, i.e. e may not contain all
            bits of S (the translate spans exactly the extended window);
* blocking: the translate of S whose minimum sits at the oldest window
            position is now fully visible and must be hit: e & S != 0;
* covering: blocking for the reflected baton (A covers Z by S iff A
            meets every translate of -S);
* free for both S and -S: the free constraint for S and reflect(S).

Bi-infinite valid sequences correspond to bi-infinite walks, and
periodic sets of period p to closed walks of length p, with the appended
bits as edge weights.  Since optimal densities are attained on periodic
sets, the optimum equals the extremal mean cycle weight of the graph.

Mean cycles are found per strongly connected component with Karp's
dynamic program in pure integer arithmetic (two streaming passes, no
division until the final ratio), and a witness cycle is extracted by
shifting edge weights w -> q*w - p at the optimal mean p/q and walking
the subgraph of tight edges under shortest-path potentials.  All integer
magnitudes are bounded by (node count)^2 << 2**50, far inside exact
int64 range; the final values are exact Fractions.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .core import (
    Baton,
    BatonError,
    MAX_ROLES,
    MIN_ROLES,
    PeriodicSet,
    Rational,
    ResourceLimitError,
    RoleKind,
    _mask_has_role,
    has_role,
    positive_differences,
    reflect,
)

#: Hard cap on diam(S); node count is 2**diam.  Override with the env var.
DEFAULT_DIAM_LIMIT = 20
DIAM_LIMIT_ENV = "BATONS_DIAM_LIMIT"

_INF = 1 << 50
_FINITE = 1 << 49  # anything below this is a genuine path weight


def diam_limit() -> int:
    raw = os.environ.get(DIAM_LIMIT_ENV)
    return int(raw) if raw else DEFAULT_DIAM_LIMIT


@dataclass(frozen=True, eq=False)
class WindowAutomaton:
    """Transition validity over L-bit windows, pruned to its cyclic part.

    ``valid0[w]``/``valid1[w]`` say whether appending 0/1 to window w is
    admissible; the successor is always ``(w >> 1) | (b << (L-1))``.
    ``sccs`` lists the strongly connected components that contain at
    least one edge (only those can carry cycles), each sorted ascending,
    ordered by smallest window; ``cyclic_nodes`` is their union.
    """

    baton: Baton
    kind: RoleKind
    window_length: int
    valid0: np.ndarray
    valid1: np.ndarray
    cyclic_nodes: np.ndarray
    sccs: tuple[np.ndarray, ...]

    def successor(self, window: int, bit: int) -> int:
        if self.window_length == 0:
            return 0
        return (window >> 1) | (bit << (self.window_length - 1))

    def out_edges(self, window: int) -> list[tuple[int, int]]:
        """Valid (bit, successor) pairs out of a window."""
        edges = []
        if self.valid0[window]:
            edges.append((0, self.successor(window, 0)))
        if self.valid1[window]:
            edges.append((1, self.successor(window, 1)))
        return edges


@dataclass(frozen=True, eq=False)
class MeanCycleResult:
    """Optimal mean edge weight, one optimal cycle, and its periodic set."""

    value: Rational
    cycle: tuple[int, ...]
    witness: PeriodicSet


def build_automaton(baton: Baton, kind: RoleKind) -> WindowAutomaton:
    """Build the pruned window automaton for one role."""
    length = baton.diam
    limit = diam_limit()
    if length > limit:
        raise ResourceLimitError(
            f"diam {length} exceeds the configured limit {limit} "
            f"(set {DIAM_LIMIT_ENV} to raise it)"
        )
    n = 1 << length
    windows = np.arange(n, dtype=np.int64)
    extended0 = windows
    extended1 = windows | (1 << length)

    def bitmask(elements: tuple[int, ...]) -> int:
        acc = 0
        for e in elements:
            acc |= 1 << e
        return acc

    s_mask = bitmask(baton.elements)
    if kind is RoleKind.PACKING:
        lag_mask = bitmask(tuple(length - d for d in positive_differences(baton)))
        valid0 = np.ones(n, dtype=bool)
        valid1 = (windows & lag_mask) == 0
    elif kind is RoleKind.FREE:
        valid0 = (extended0 & s_mask) != s_mask
        valid1 = (extended1 & s_mask) != s_mask
    elif kind is RoleKind.FREE_BOTH:
        r_mask = bitmask(reflect(baton).elements)
        valid0 = ((extended0 & s_mask) != s_mask) & ((extended0 & r_mask) != r_mask)
        valid1 = ((extended1 & s_mask) != s_mask) & ((extended1 & r_mask) != r_mask)
    elif kind is RoleKind.BLOCKING:
        valid0 = (extended0 & s_mask) != 0
        valid1 = (extended1 & s_mask) != 0
    elif kind is RoleKind.COVERING:
        r_mask = bitmask(reflect(baton).elements)
        valid0 = (extended0 & r_mask) != 0
        valid1 = (extended1 & r_mask) != 0
    else:
        raise BatonError(f"unknown role kind: {kind!r}")

    sccs = _cyclic_sccs(length, valid0, valid1)
    cyclic = (
        np.sort(np.concatenate(sccs)) if sccs else np.empty(0, dtype=np.int64)
    )
    return WindowAutomaton(
        baton=baton,
        kind=kind,
        window_length=length,
        valid0=valid0,
        valid1=valid1,
        cyclic_nodes=cyclic,
        sccs=tuple(sccs),
    )


def _cyclic_sccs(length: int, valid0, valid1) -> list[np.ndarray]:
    """Strongly connected components that contain at least one edge.

    Iterative Tarjan over the implicit de Bruijn-style graph; components
    are returned sorted internally and ordered by their smallest window.
    """
    if length == 0:
        if valid0[0] or valid1[0]:
            return [np.array([0], dtype=np.int64)]
        return []
    n = 1 << length
    half = 1 << (length - 1)
    full = n - 1
    index = [-1] * n
    low = [0] * n
    on_stack = bytearray(n)
    stack: list[int] = []
    counter = 0
    components: list[list[int]] = []

    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, child = work.pop()
            if child == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = 1
            descended = False
            for b in range(child, 2):
                if not (valid1[v] if b else valid0[v]):
                    continue
                w = (v >> 1) | (half if b else 0)
                if index[w] == -1:
                    work.append((v, b + 1))
                    work.append((w, 0))
                    descended = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if descended:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = 0
                    comp.append(w)
                    if w == v:
                        break
                components.append(comp)
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])

    keep = []
    for comp in components:
        if len(comp) >= 2:
            keep.append(np.array(sorted(comp), dtype=np.int64))
        else:
            v = comp[0]
            # Only the all-zeros and all-ones windows can self-loop.
            if (v == 0 and valid0[0]) or (v == full and valid1[full]):
                keep.append(np.array(comp, dtype=np.int64))
    keep.sort(key=lambda arr: int(arr[0]))
    return keep


# ---------------------------------------------------------------------------
# Per-component graphs and Karp's dynamic program


@dataclass(eq=False)
class _ComponentGraph:
    """In-edge view of one SCC with local indices.

    Each node v has at most two predecessor candidates (shift the low
    bits left and fill with 0 or 1); both in-edges carry the same weight,
    the newest bit of v.  Absent predecessors point at a sentinel slot
    that the DP keeps at infinity, so one gather covers both the edge
    mask and the relaxation.
    """

    nodes: np.ndarray  # global window ids, ascending
    weight: np.ndarray  # int64 in {0, 1}: appended bit per node
    pred0: np.ndarray  # local predecessor indices; len(nodes) = sentinel
    pred1: np.ndarray
    has0: np.ndarray  # bool
    has1: np.ndarray


def _component_graph(automaton: WindowAutomaton, members, scc_id, local) -> _ComponentGraph:
    length = automaton.window_length
    nodes = members
    my_id = scc_id[nodes[0]]
    top = nodes >> (length - 1)
    base = (nodes & ((1 << (length - 1)) - 1)) << 1
    weight = top.astype(np.int64)
    sentinel = len(nodes)

    def in_edge(pred):
        edge_ok = np.where(
            top.astype(bool), automaton.valid1[pred], automaton.valid0[pred]
        )
        return edge_ok & (scc_id[pred] == my_id)

    has0 = in_edge(base)
    has1 = in_edge(base | 1)
    pred0 = np.where(has0, local[base], sentinel)
    pred1 = np.where(has1, local[base | 1], sentinel)
    return _ComponentGraph(nodes, weight, pred0, pred1, has0, has1)


class _Relaxer:
    """Buffered DP levels over the in-edge arrays.

    Distance vectors carry one extra sentinel slot pinned at _INF; values
    relaxed from it stay far above _FINITE (the drift over n levels is at
    most a few n << _INF - _FINITE), so reachability tests stay exact.
    All kernels write into preallocated buffers: the hot loop runs once
    per node, and per-level temporaries would thrash the allocator.
    """

    def __init__(self, graph: _ComponentGraph, weight: np.ndarray):
        self.graph = graph
        self.weight = weight
        n = len(graph.nodes)
        self.dist = np.full(n + 1, _INF, dtype=np.int64)
        self.dist[0] = 0
        self._a = np.empty(n, dtype=np.int64)
        self._b = np.empty(n, dtype=np.int64)

    def values(self) -> np.ndarray:
        return self.dist[:-1]

    def step(self) -> None:
        # Indices never exceed the sentinel slot; clip mode just skips
        # the bounds-checking path.
        np.take(self.dist, self.graph.pred0, out=self._a, mode="clip")
        np.take(self.dist, self.graph.pred1, out=self._b, mode="clip")
        np.minimum(self._a, self._b, out=self._a)
        self._a += self.weight
        self.dist[:-1] = self._a


def _karp_min_mean(graph: _ComponentGraph, weight: np.ndarray) -> Fraction:
    """Karp's formula: min over v of max over k of (F_n(v) - F_k(v))/(n-k).

    F_k(v) is the minimum weight of a k-edge walk from the source (local
    node 0) to v, computed exactly in integers; unreachable combinations
    are skipped.  Two streaming passes keep memory at O(nodes).
    """
    n = len(graph.nodes)
    first = _Relaxer(graph, weight)
    for _ in range(n):
        first.step()
    final = first.values().copy()  # F_n
    final_ok = final < _FINITE

    # Running max of (F_n - F_k)/(n - k) per node as integer pairs; the
    # sentinel numerator sits below every genuine ratio (|F| <= 2n).
    sentinel = np.int64(-4 * n - 1)
    second = _Relaxer(graph, weight)
    best_num = np.full(n, sentinel, dtype=np.int64)
    best_den = np.ones(n, dtype=np.int64)
    num = np.empty(n, dtype=np.int64)
    lhs = np.empty(n, dtype=np.int64)
    rhs = np.empty(n, dtype=np.int64)
    usable = np.empty(n, dtype=bool)
    better = np.empty(n, dtype=bool)
    for k in range(n):
        dist = second.values()
        np.less(dist, _FINITE, out=usable)
        usable &= final_ok
        np.subtract(final, dist, out=num)
        # num is wraparound garbage in unreachable lanes; `better` masks
        # those lanes out below, so the comparison stays exact.
        np.multiply(num, best_den, out=lhs)
        np.multiply(best_num, np.int64(n - k), out=rhs)
        np.greater(lhs, rhs, out=better)
        better &= usable
        np.copyto(best_num, num, where=better)
        np.copyto(best_den, np.int64(n - k), where=better)
        second.step()

    eligible = np.nonzero(best_num != sentinel)[0]
    if eligible.size == 0:
        raise AssertionError("Karp found no eligible node in a strongly connected component")
    return min(Fraction(int(best_num[i]), int(best_den[i])) for i in eligible)


def _tight_cycle(graph: _ComponentGraph, weight: np.ndarray, mean: Fraction) -> list[int]:
    """A cycle achieving the optimal mean, as local node indices.

    With weights shifted to q*w - p every cycle has non-negative total
    and optimal cycles total zero, so all their edges are tight for
    shortest-path potentials.  The DFS scans start nodes in ascending
    window order and prefers the smaller successor, which pins down one
    deterministic optimal cycle.
    """
    n = len(graph.nodes)
    p, q = mean.numerator, mean.denominator
    shifted = q * weight - p
    pot = np.full(n + 1, _INF, dtype=np.int64)
    pot[0] = 0
    buf_a = np.empty(n, dtype=np.int64)
    buf_b = np.empty(n, dtype=np.int64)
    for _ in range(n + 1):
        np.take(pot, graph.pred0, out=buf_a, mode="clip")
        np.take(pot, graph.pred1, out=buf_b, mode="clip")
        np.minimum(buf_a, buf_b, out=buf_a)
        buf_a += shifted
        np.minimum(buf_a, pot[:-1], out=buf_a)
        if np.array_equal(buf_a, pot[:-1]):
            break
        pot[:-1] = buf_a
    else:
        raise AssertionError("shortest-path potentials failed to converge")
    values = pot[:-1]
    if not (values < _FINITE).all():
        raise AssertionError("component is not strongly connected")

    tight0 = graph.has0 & (pot[graph.pred0] + shifted == values)
    tight1 = graph.has1 & (pot[graph.pred1] + shifted == values)
    out: list[list[int]] = [[] for _ in range(n)]
    for v in np.nonzero(tight0)[0]:
        out[int(graph.pred0[v])].append(int(v))
    for v in np.nonzero(tight1)[0]:
        out[int(graph.pred1[v])].append(int(v))
    for succ in out:
        succ.sort()

    color = bytearray(n)  # 0 white, 1 on path, 2 done
    for start in range(n):
        if color[start]:
            continue
        path = [start]
        color[start] = 1
        frames = [(start, iter(out[start]))]
        while frames:
            node, successors = frames[-1]
            descended = False
            for nxt in successors:
                if color[nxt] == 1:
                    return path[path.index(nxt):]
                if color[nxt] == 0:
                    color[nxt] = 1
                    path.append(nxt)
                    frames.append((nxt, iter(out[nxt])))
                    descended = True
                    break
            if not descended:
                frames.pop()
                path.pop()
                color[node] = 2
    raise AssertionError("no tight cycle found at the optimal mean")


def _solve(automaton: WindowAutomaton, maximize: bool, threads: int) -> MeanCycleResult:
    kind = automaton.kind
    length = automaton.window_length

    if length == 0:
        # Single empty window; self-loops for each admissible bit.
        bits = [b for b in (0, 1) if (automaton.valid1[0] if b else automaton.valid0[0])]
        if bits:
            bit = max(bits) if maximize else min(bits)
            witness = PeriodicSet(1, (0,) if bit else ())
            result = MeanCycleResult(Fraction(bit), (0,), witness)
            return _verified(result, automaton)

    if not automaton.sccs:
        if maximize:
            # Only the empty set qualifies; its density is 0.
            return _verified(
                MeanCycleResult(Fraction(0), (), PeriodicSet(1, ())), automaton
            )
        raise BatonError(
            f"no periodic set satisfies role {kind.value} for {automaton.baton}"
        )

    scc_id = np.full(1 << length, -1, dtype=np.int64)
    local = np.zeros(1 << length, dtype=np.int64)
    for i, members in enumerate(automaton.sccs):
        scc_id[members] = i
        local[members] = np.arange(len(members))
    graphs = [
        _component_graph(automaton, members, scc_id, local)
        for members in automaton.sccs
    ]

    def solve_one(graph: _ComponentGraph) -> Fraction:
        weight = -graph.weight if maximize else graph.weight
        return _karp_min_mean(graph, weight)

    if threads > 1 and len(graphs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            means = list(pool.map(solve_one, graphs))
    else:
        means = [solve_one(g) for g in graphs]

    # Both directions minimize in the (possibly negated) weight space;
    # ties go to the component with the smallest window id.
    best = min(range(len(means)), key=lambda i: (means[i], i))
    mean_min = means[best]
    graph = graphs[best]
    weight = -graph.weight if maximize else graph.weight

    cycle_local = _tight_cycle(graph, weight, mean_min)
    lowest = min(range(len(cycle_local)), key=lambda i: graph.nodes[cycle_local[i]])
    cycle_local = cycle_local[lowest:] + cycle_local[:lowest]
    size = len(cycle_local)
    bits = [int(graph.weight[cycle_local[(i + 1) % size]]) for i in range(size)]
    witness = PeriodicSet(size, tuple(i for i, b in enumerate(bits) if b))
    value = -mean_min if maximize else mean_min
    cycle = tuple(int(graph.nodes[v]) for v in cycle_local)
    return _verified(MeanCycleResult(value, cycle, witness), automaton)


def _verified(result: MeanCycleResult, automaton: WindowAutomaton) -> MeanCycleResult:
    if result.witness.density() != result.value:
        raise AssertionError(
            f"witness {result.witness} density {result.witness.density()} "
            f"!= optimal mean {result.value}"
        )
    if not has_role(result.witness, automaton.baton, automaton.kind):
        raise AssertionError(
            f"witness {result.witness} fails role {automaton.kind.value} "
            f"for {automaton.baton}"
        )
    return result


def max_mean_cycle(automaton: WindowAutomaton, *, threads: int = 1) -> MeanCycleResult:
    """Maximum mean cycle weight; the optimal density for sup-type roles."""
    return _solve(automaton, maximize=True, threads=threads)


def min_mean_cycle(automaton: WindowAutomaton, *, threads: int = 1) -> MeanCycleResult:
    """Minimum mean cycle weight; the optimal density for inf-type roles."""
    return _solve(automaton, maximize=False, threads=threads)


def oracle_density(
    baton: Baton, kind: RoleKind, *, threads: int = 1
) -> tuple[Rational, PeriodicSet]:
    """Exact optimal density and a verified periodic witness for any role.

    Results are cached (the computation is pure); the witness is checked
    against the role predicate before it is ever returned.
    """
    return _oracle_density_cached(baton, kind, threads)


@lru_cache(maxsize=None)
def _oracle_density_cached(
    baton: Baton, kind: RoleKind, threads: int
) -> tuple[Rational, PeriodicSet]:
    automaton = build_automaton(baton, kind)
    if kind in MAX_ROLES:
        result = max_mean_cycle(automaton, threads=threads)
    else:
        result = min_mean_cycle(automaton, threads=threads)
    return result.value, result.witness


MAX_BRUTE_FORCE_PERIOD = 16


def brute_force_periodic(baton: Baton, kind: RoleKind, max_period: int) -> Rational:
    """Optimum density over all residue subsets of all periods <= max_period.

    A deliberately naive second oracle for testing the automaton path:
    straight enumeration of every subset of every Z_m, decided by the
    same public role predicate the rest of the library uses.  The result
    bounds the true density (from below for sup-type roles, above for
    inf-type) and equals it whenever some optimal witness has period
    <= max_period.
    """
    if max_period < 1:
        raise BatonError(f"max_period must be >= 1, got {max_period}")
    if max_period > MAX_BRUTE_FORCE_PERIOD:
        raise ResourceLimitError(
            f"max_period {max_period} exceeds brute-force cap {MAX_BRUTE_FORCE_PERIOD}"
        )
    minimize = kind in MIN_ROLES
    found = False
    best_num = best_den = 0
    for m in range(1, max_period + 1):
        for mask in range(1 << m):
            count = mask.bit_count()
            if found:
                # Skip subsets that cannot strictly improve the incumbent.
                if minimize:
                    if count * best_den >= best_num * m:
                        continue
                elif count * best_den <= best_num * m:
                    continue
            if _mask_has_role(mask, m, baton, kind):
                found = True
                best_num, best_den = count, m
    if not found:
        raise BatonError(f"no periodic set of period <= {max_period} has role {kind.value}")
    return Fraction(best_num, best_den)
