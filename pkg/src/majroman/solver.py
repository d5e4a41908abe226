"""Exact computation of the majority Roman domination number.

Two independent routes:

* ``brute_force`` -- vectorized exhaustive enumeration of all 3^n
  labelings (the reference oracle), capped at n <= 16 by default.
* ``branch_and_bound`` -- DFS over partial labelings with three safe
  pruning rules, usable beyond the brute-force cap and on sparse graphs.

Both return the same optimum whenever both run. The all-2 labeling is
valid on every graph (every closed sum is positive and there is no -1
vertex), so every instance is feasible; lowering any single 2 to +1 keeps
validity, hence the optimum is always < 2n for n >= 1.
"""

from __future__ import annotations

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np

from .graph import Graph
from .labeling import majority_threshold, validate, weight as label_weight


class SolverError(RuntimeError):
    pass


class CapExceededError(SolverError):
    """Instance too large for exhaustive enumeration."""


class InfeasibleError(SolverError):
    """No valid labeling exists (unreachable for simple graphs; kept as a
    distinguished outcome rather than a silent wrong answer)."""


@dataclass
class SolveOptions:
    method: str = "auto"  # auto | brute | bb
    thread_count: int = 1
    initial_upper_bound: Optional[int] = None
    seed_labeling: Optional[Tuple[int, ...]] = None
    node_limit: Optional[int] = None
    threshold_mode: str = "ceil"
    brute_cap: int = 16

    def __post_init__(self):
        if self.thread_count < 1:
            raise ValueError("thread_count must be >= 1")


@dataclass
class OptResult:
    optimum: int
    witness: Tuple[int, ...]
    nodes_explored: int
    method: str
    elapsed: float
    proven: bool = True


_LABELS = np.array([-1, 1, 2], dtype=np.int8)
_CHUNK = 3**12


def brute_force(g: Graph, options: Optional[SolveOptions] = None) -> OptResult:
    """Exhaustive minimum over all 3^n labelings.

    The witness is the first optimum in mixed-radix code order, which is
    the lexicographically smallest over vertices 0..n-1 with value order
    (-1, +1, 2).
    """
    opts = options or SolveOptions()
    n = g.n
    if n > opts.brute_cap:
        raise CapExceededError(
            f"n={n} exceeds brute-force cap {opts.brute_cap}; "
            "use branch_and_bound"
        )
    t0 = time.perf_counter()
    if n == 0:
        return OptResult(0, (), 1, "brute_force", time.perf_counter() - t0)
    thr = majority_threshold(n, opts.threshold_mode)
    closed = np.zeros((n, n), dtype=np.float32)
    open_adj = np.zeros((n, n), dtype=np.float32)
    for v in range(n):
        closed[v, v] = 1.0
        for u in g.adj[v]:
            closed[v, u] = 1.0
            open_adj[v, u] = 1.0
    powers = 3 ** np.arange(n - 1, -1, -1, dtype=np.int64)
    total = 3**n
    best_w: Optional[int] = None
    best_code: Optional[int] = None
    for start in range(0, total, _CHUNK):
        codes = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        digits = (codes[:, None] // powers[None, :]) % 3
        labels = _LABELS[digits]
        lf = labels.astype(np.float32)
        sums = lf @ closed.T
        maj_ok = (sums >= 1.0).sum(axis=1) >= thr
        has_two = ((labels == 2).astype(np.float32) @ open_adj.T) > 0.5
        guard_ok = ~np.logical_and(labels == -1, ~has_two).any(axis=1)
        valid = maj_ok & guard_ok
        if valid.any():
            w = lf.sum(axis=1)
            w = np.where(valid, w, np.inf)
            i = int(np.argmin(w))
            if best_w is None or w[i] < best_w:
                best_w = float(w[i])
                best_code = int(codes[i])
    if best_w is None:
        raise InfeasibleError("no valid labeling found")
    witness = tuple(
        int(_LABELS[(best_code // int(p)) % 3]) for p in powers
    )
    return OptResult(
        optimum=int(best_w),
        witness=witness,
        nodes_explored=total,
        method="brute_force",
        elapsed=time.perf_counter() - t0,
    )


class _Incumbent:
    """Monotonically improving best solution, shareable across workers."""

    def __init__(self, weight: int, witness: Optional[Tuple[int, ...]]):
        self.weight = weight
        self.witness = witness
        self._lock = threading.Lock()

    def try_update(self, weight: int, witness: Tuple[int, ...]) -> None:
        with self._lock:
            if weight < self.weight:
                self.weight = weight
                self.witness = witness


class _Search:
    """One DFS worker over partial labelings.

    Pruning rules (all safe):
    (a) optimistic completion: current weight plus -1 per unassigned
        vertex cannot beat the incumbent;
    (b) Roman guard death: an assigned -1 vertex whose open neighborhood
        is fully assigned with no 2;
    (c) majority death: vertices whose closed sum can no longer reach 1
        even if every unassigned closed neighbor takes 2; prune once more
        than n - threshold of them exist.
    """

    def __init__(self, g: Graph, order, incumbent, allowed_unsat, node_limit):
        n = g.n
        self.n = n
        self.order = order
        self.incumbent = incumbent
        self.allowed_unsat = allowed_unsat
        self.node_limit = node_limit
        self.closed_nbrs = [sorted(g.adj[v] | {v}) for v in range(n)]
        self.open_nbrs = [sorted(g.adj[v]) for v in range(n)]
        self.label = [0] * n
        self.sum_closed = [0] * n
        self.un_closed = [len(g.adj[v]) + 1 for v in range(n)]
        self.un_open = [len(g.adj[v]) for v in range(n)]
        self.twos_open = [0] * n
        self.dead = [False] * n
        self.dead_count = 0
        self.dead_stack = []
        self.nodes = 0
        self.truncated = False

    def assign(self, u: int, x: int) -> bool:
        label = self.label
        label[u] = x
        sum_closed = self.sum_closed
        un_closed = self.un_closed
        for v in self.closed_nbrs[u]:
            sum_closed[v] += x
            un_closed[v] -= 1
        for v in self.open_nbrs[u]:
            self.un_open[v] -= 1
        if x == 2:
            for v in self.open_nbrs[u]:
                self.twos_open[v] += 1
        ok = True
        if x == -1 and self.un_open[u] == 0 and self.twos_open[u] == 0:
            ok = False
        if ok and x != 2:
            for w in self.open_nbrs[u]:
                if (
                    label[w] == -1
                    and self.un_open[w] == 0
                    and self.twos_open[w] == 0
                ):
                    ok = False
                    break
        newly_dead = []
        dead = self.dead
        for v in self.closed_nbrs[u]:
            if not dead[v] and sum_closed[v] + 2 * un_closed[v] < 1:
                dead[v] = True
                newly_dead.append(v)
        self.dead_count += len(newly_dead)
        self.dead_stack.append(newly_dead)
        if self.dead_count > self.allowed_unsat:
            ok = False
        return ok

    def unassign(self, u: int, x: int) -> None:
        newly_dead = self.dead_stack.pop()
        self.dead_count -= len(newly_dead)
        for v in newly_dead:
            self.dead[v] = False
        if x == 2:
            for v in self.open_nbrs[u]:
                self.twos_open[v] -= 1
        for v in self.open_nbrs[u]:
            self.un_open[v] += 1
        for v in self.closed_nbrs[u]:
            self.sum_closed[v] -= x
            self.un_closed[v] += 1
        self.label[u] = 0

    def dfs(self, depth: int, cur_w: int) -> None:
        n = self.n
        if depth == n:
            # every leaf reached here satisfies both conditions: guard and
            # majority deaths were pruned on the way down
            self.incumbent.try_update(cur_w, tuple(self.label))
            return
        if cur_w - (n - depth) >= self.incumbent.weight:
            return
        if self.node_limit is not None and self.nodes >= self.node_limit:
            self.truncated = True
            return
        u = self.order[depth]
        for x in (-1, 1, 2):
            self.nodes += 1
            ok = self.assign(u, x)
            if ok:
                self.dfs(depth + 1, cur_w + x)
            self.unassign(u, x)
            if self.truncated:
                return


def branch_and_bound(
    g: Graph, options: Optional[SolveOptions] = None
) -> OptResult:
    """Exact optimum by pruned DFS; same value as brute_force.

    Branching order is descending degree (ties by index), value order
    (-1, +1, 2). With ``thread_count == 1`` the witness is the
    lexicographically smallest optimum in branching order and node counts
    are reproducible; parallel runs return the same optimum but may return
    any optimal witness.

    ``seed_labeling`` seeds the incumbent with a known valid labeling.
    ``initial_upper_bound`` alone must be a weight known to be achievable
    (e.g. from a validated certificate); the search is then started just
    above it so that a witness is still produced. Seeding never changes
    the optimum, only node counts.
    """
    opts = options or SolveOptions()
    n = g.n
    t0 = time.perf_counter()
    if n == 0:
        return OptResult(0, (), 1, "branch_and_bound", time.perf_counter() - t0)
    thr = majority_threshold(n, opts.threshold_mode)
    allowed_unsat = n - thr
    order = sorted(range(n), key=lambda v: (-len(g.adj[v]), v))

    if opts.seed_labeling is not None:
        report = validate(g, opts.seed_labeling, opts.threshold_mode)
        if not report.is_valid:
            raise SolverError("seed_labeling is not a valid labeling")
        incumbent = _Incumbent(report.weight, tuple(opts.seed_labeling))
    elif opts.initial_upper_bound is not None:
        incumbent = _Incumbent(opts.initial_upper_bound + 1, None)
    else:
        incumbent = _Incumbent(2 * n, tuple([2] * n))

    truncated = False
    if opts.thread_count == 1:
        search = _Search(g, order, incumbent, allowed_unsat, opts.node_limit)
        search.dfs(0, 0)
        nodes = search.nodes
        truncated = search.truncated
    else:
        depth = 1
        while 3**depth < 4 * opts.thread_count and depth < n:
            depth += 1
        prefixes = [[]]
        for _ in range(depth):
            prefixes = [p + [x] for p in prefixes for x in (-1, 1, 2)]
        counts = []

        def run_prefix(prefix):
            search = _Search(g, order, incumbent, allowed_unsat, opts.node_limit)
            cur_w = 0
            stop = len(prefix)
            for i, x in enumerate(prefix):
                search.nodes += 1
                if not search.assign(order[i], x):
                    stop = i + 1
                    break
                cur_w += x
            else:
                search.dfs(depth, cur_w)
            # worker-local arrays are discarded; no unwind needed
            del stop
            return search.nodes, search.truncated

        with ThreadPoolExecutor(max_workers=opts.thread_count) as pool:
            for node_count, trunc in pool.map(run_prefix, prefixes):
                counts.append(node_count)
                truncated = truncated or trunc
        nodes = sum(counts)

    if incumbent.witness is None:
        if opts.initial_upper_bound is not None and not truncated:
            raise SolverError(
                "initial_upper_bound was not achievable; pass a valid "
                "seed_labeling instead"
            )
        raise InfeasibleError("search found no valid labeling")
    return OptResult(
        optimum=incumbent.weight,
        witness=incumbent.witness,
        nodes_explored=nodes,
        method="branch_and_bound",
        elapsed=time.perf_counter() - t0,
        proven=not truncated,
    )


def solve(g: Graph, options: Optional[SolveOptions] = None) -> OptResult:
    """Dispatch on method: "brute", "bb", or "auto" (brute for small n)."""
    opts = options or SolveOptions()
    if opts.method == "brute":
        return brute_force(g, opts)
    if opts.method == "bb":
        return branch_and_bound(g, opts)
    if opts.method == "auto":
        if g.n <= min(12, opts.brute_cap):
            return brute_force(g, opts)
        return branch_and_bound(g, opts)
    raise SolverError(f"unknown method {opts.method!r}")


def delta_lower_bound(g: Graph) -> Fraction:
    """n(2 - max_degree) / (max_degree + 1), exactly.

    The counting argument behind it needs at least one edge; on an
    edgeless graph the bound is simply false (all-(+1) has weight n < 2n).
    """
    if g.n < 2:
        raise SolverError("lower bound requires n >= 2")
    d = g.max_degree()
    return Fraction(g.n * (2 - d), d + 1)
