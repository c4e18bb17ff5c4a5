"""Parameterized decision procedures for the short path variants.

The driver routine branches over the low-degree side of a degree
partition: high-degree vertices either kill every short secluded path
(their leftover neighbors alone overshoot l) or, in the unsecluded
problem, are handled separately by flow routing, so the branching tree
only ever extends within the bounded-degree remainder and stays small.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Literal

from .flow import shortest_route_through
from .graph import (
    DegreePartition,
    Graph,
    InvalidInstanceError,
    PathCertificate,
    ProblemInstance,
    Variant,
    degree_partition,
)
from .oracle import Answer


@dataclass(frozen=True)
class SolverStats:
    """Work counters for the parameterized solvers."""

    branch_nodes_explored: int = 0
    flow_calls: int = 0
    candidate_pairs_tried: int = 0


def _merge(a: SolverStats, b: SolverStats) -> SolverStats:
    return SolverStats(
        a.branch_nodes_explored + b.branch_nodes_explored,
        a.flow_calls + b.flow_calls,
        a.candidate_pairs_tried + b.candidate_pairs_tried,
    )


def branch_decide(
    g: Graph,
    part: DegreePartition,
    s: int,
    t: int,
    k: int,
    l: int,
    mode: Literal["secluded", "unsecluded"],
) -> Answer:
    """Depth-bounded search for an st-path inside the low-degree side.

    Extends paths from s only through part.b_set vertices, children in
    ascending order, at most k vertices per path; a path reaching t is
    accepted iff its open neighborhood in the full graph is <= l
    (secluded) or >= l (unsecluded).  Both terminals must lie in b_set.

    In secluded mode a branch is cut once its neighborhood exceeds l by
    more than the number of vertices that can still be appended: each
    appended vertex removes at most one current neighbor from the count,
    so the cut never discards a feasible completion.

    Stats report the number of search tree nodes explored, which is at
    most sum(delta_b**d for d in range(k)).
    """
    if mode not in ("secluded", "unsecluded"):
        raise ValueError(f"unknown mode {mode!r}")
    if k < 2:
        raise ValueError("terminal-to-terminal search needs k >= 2")
    if s == t:
        raise ValueError("terminals must be distinct")
    b_mask = part.b_set.mask()
    for x in (s, t):
        if not (0 <= x < g.n):
            raise ValueError(f"terminal {x} outside 0..{g.n - 1}")
        if not (b_mask >> x & 1):
            raise ValueError(f"terminal {x} is not in the low-degree side")
    masks = g.neighbor_masks
    adj = g.adjacency
    secluded = mode == "secluded"
    limit = min(k, g.n)
    explored = 1
    path = [s]
    pmask = 1 << s
    accs = [masks[s]]
    iters = [iter(adj[s])]
    witness: PathCertificate | None = None
    while iters and witness is None:
        advanced = False
        for u in iters[-1]:
            if not (b_mask >> u & 1) or (pmask >> u & 1):
                continue
            explored += 1
            bit = 1 << u
            acc = accs[-1] | masks[u]
            path.append(u)
            pmask |= bit
            if u == t:
                ncount = (acc & ~pmask).bit_count()
                if (ncount <= l) if secluded else (ncount >= l):
                    witness = PathCertificate(tuple(path))
                    break
            elif len(path) < limit:
                if secluded:
                    ncount = (acc & ~pmask).bit_count()
                    if ncount - (limit - len(path)) > l:
                        path.pop()
                        pmask &= ~bit
                        continue
                iters.append(iter(adj[u]))
                accs.append(acc)
                advanced = True
                break
            path.pop()
            pmask &= ~bit
        if witness is not None:
            break
        if not advanced:
            iters.pop()
            accs.pop()
            pmask &= ~(1 << path.pop())
    # the geometric sum above stays within 2 * delta_b**k once delta_b >= 2
    assert part.delta_b < 2 or explored <= 2 * part.delta_b**k
    return Answer(
        witness is not None, witness, SolverStats(branch_nodes_explored=explored)
    )


def _require(inst: ProblemInstance, variant: Variant) -> None:
    if inst.variant is not variant:
        raise InvalidInstanceError(f"solver handles {variant.value}, got {inst.variant.value}")
    if not inst.st_mode:
        raise InvalidInstanceError("solver needs fixed terminals; wrap free instances")


def st_ssp_decide(inst: ProblemInstance) -> Answer:
    """Terminal-pair short secluded path.

    Any vertex of degree >= k + l + 1 keeps at least l + 2 neighbors
    off every path of at most k vertices, so no feasible path may touch
    one; if a terminal is such a vertex the answer is no, and otherwise
    the search is confined to the low-degree side.
    """
    _require(inst, Variant.SSP)
    g = inst.graph
    part = degree_partition(g, inst.k + inst.l + 1)
    assert inst.s is not None and inst.t is not None
    if inst.s in part.r_set or inst.t in part.r_set:
        return Answer(False, None, SolverStats())
    return branch_decide(g, part, inst.s, inst.t, inst.k, inst.l, "secluded")


def st_sup_decide(inst: ProblemInstance) -> Answer:
    """Terminal-pair short unsecluded path.

    Phase 1: for each vertex v of degree >= l + 2, route two cost-minimal
    vertex-disjoint legs from v to the terminals.  A minimum-size path
    through v keeps all but at most two of v's neighbors outside itself,
    so if it fits in k vertices it already has >= l neighbors and is a
    valid witness.  Phase 2: no feasible path touches a high-degree
    vertex anymore, so branch over the low-degree side.
    """
    _require(inst, Variant.SUP)
    g = inst.graph
    s, t = inst.s, inst.t
    assert s is not None and t is not None
    part = degree_partition(g, inst.l + 2)
    flow_calls = 0
    for v in part.r_set:
        flow_calls += 1
        route = shortest_route_through(g, s, t, v)
        if route is not None and len(route) <= inst.k:
            return Answer(True, route, SolverStats(flow_calls=flow_calls))
    stats = SolverStats(flow_calls=flow_calls)
    if s in part.r_set or t in part.r_set:
        # every st-path crosses the terminal, and phase 1 just proved no
        # short st-path through it exists at all
        return Answer(False, None, stats)
    ans = branch_decide(g, part, s, t, inst.k, inst.l, "unsecluded")
    assert isinstance(ans.stats, SolverStats)
    return Answer(ans.decision, ans.witness, _merge(stats, ans.stats))


def free_variant_decide(
    inst: ProblemInstance,
    solver: Callable[[ProblemInstance], Answer] | None = None,
) -> Answer:
    """Decide a free instance through a terminal-pair solver.

    Single-vertex paths are checked directly (their neighborhood is the
    vertex degree), then every terminal pair is tried in lexicographic
    order with the pair solver.  The pair queries use max(k, 2): for the
    long variants with k = 1 this is equivalent, because any two-endpoint
    path has at least two vertices anyway.

    solver defaults to the matching parameterized solver; the long
    variants have none here, so a solver (the oracle, say) must be given.
    """
    if inst.st_mode:
        raise InvalidInstanceError("instance already has terminals")
    g = inst.graph
    variant, k, l = inst.variant, inst.k, inst.l
    if solver is None:
        if variant is Variant.SSP:
            solver = st_ssp_decide
        elif variant is Variant.SUP:
            solver = st_sup_decide
        else:
            raise InvalidInstanceError(
                f"no parameterized terminal-pair solver for {variant.value}; pass one"
            )
    for v in range(g.n):
        if variant.size_ok(1, k) and variant.neighborhood_ok(g.degree(v), l):
            return Answer(True, PathCertificate((v,)), SolverStats())
    if variant.short and k == 1:
        # longer paths cannot satisfy the size bound
        return Answer(False, None, SolverStats())
    pairs = 0
    k_pair = max(k, 2)
    for s in range(g.n):
        for t in range(s + 1, g.n):
            pairs += 1
            ans = solver(ProblemInstance(g, variant, k_pair, l, s, t))
            if ans.decision:
                return Answer(
                    True, ans.witness, SolverStats(candidate_pairs_tried=pairs)
                )
    return Answer(False, None, SolverStats(candidate_pairs_tried=pairs))
