"""Instance transformations: equivalences between the path problems and
classic hard problems, and a disjunction combinator.

Every transformer returns a ReductionOutput whose vertex numbering is
deterministic: source vertices (or their copies) come first in source
order, then each auxiliary block in the order the construction adds it.
The named groups partition the output vertex set, and the provenance map
records where each output vertex came from.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from .graph import (
    Graph,
    InvalidInstanceError,
    ProblemInstance,
    Variant,
    VertexSet,
    build_graph,
)


class NonCubicWarning(UserWarning):
    """Input is not 3-regular; the emitted instance may not be equivalent."""


@dataclass(frozen=True)
class ReductionOutput:
    """Transformed instance plus bookkeeping.

    groups: named blocks of output vertices, pairwise disjoint, jointly
    covering the output graph (empty blocks are omitted).
    provenance: output vertex -> tuple describing its origin or role.
    """

    instance: ProblemInstance
    groups: dict[str, VertexSet] = field(default_factory=dict)
    provenance: dict[int, tuple] = field(default_factory=dict)

    def __post_init__(self):
        n = self.instance.graph.n
        seen = 0
        for name, vs in self.groups.items():
            if not vs.members:
                raise ValueError(f"group {name!r} is empty; omit it instead")
            block = vs.mask()
            if block & seen:
                raise ValueError(f"group {name!r} overlaps another group")
            seen |= block
        if seen != (1 << n) - 1:
            raise ValueError("groups do not cover the output vertex set")
        for v in self.provenance:
            if not (0 <= v < n):
                raise ValueError(f"provenance key {v} outside the output range")


def _connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = [0]
    while frontier:
        v = frontier.pop()
        rest = g.neighbor_masks[v] & ~seen
        seen |= rest
        while rest:
            u = rest & -rest
            frontier.append(u.bit_length() - 1)
            rest ^= u
    return seen == (1 << g.n) - 1


def _warn_if_not_cubic(g: Graph) -> None:
    if any(g.degree(v) != 3 for v in range(g.n)):
        warnings.warn(
            "input graph is not 3-regular; equivalence is not guaranteed",
            NonCubicWarning,
            stacklevel=3,
        )


def reduce_to_st(inst: ProblemInstance) -> ReductionOutput:
    """Free instance to a terminal-pair instance of the same variant.

    One copy of the graph per unordered vertex pair {v, w}, v < w in
    lexicographic order; fresh terminals s and t, with s joined to the
    copy's v and t to the copy's w.  Every st-path then reads s, a v-to-w
    path inside one copy, t, and sees the 2*(pairs - 1) attachment
    vertices of the unused copies as unavoidable neighbors, so the new
    bounds are k + 2 and 2*(pairs - 1) + l.

    Multi-vertex solutions translate exactly both ways; a free instance
    whose only solutions are single vertices has no counterpart here,
    since the transformed paths always carry both terminals.
    """
    if inst.st_mode:
        raise InvalidInstanceError("instance already has terminals")
    g = inst.graph
    if g.n < 2:
        raise InvalidInstanceError("need at least two vertices to form a pair")
    pairs = [(v, w) for v in range(g.n) for w in range(v + 1, g.n)]
    count = len(pairs)
    n_out = count * g.n + 2
    s, t = count * g.n, count * g.n + 1
    edges: list[tuple[int, int]] = []
    groups: dict[str, VertexSet] = {}
    provenance: dict[int, tuple] = {}
    for c, (v, w) in enumerate(pairs):
        off = c * g.n
        edges.extend((off + a, off + b) for a, b in g.edges)
        edges.append((s, off + v))
        edges.append((t, off + w))
        groups[f"copy_{v}_{w}"] = VertexSet(tuple(range(off, off + g.n)))
        for x in range(g.n):
            provenance[off + x] = ("copy", v, w, x)
    groups["s"] = VertexSet((s,))
    groups["t"] = VertexSet((t,))
    provenance[s] = ("terminal", "s")
    provenance[t] = ("terminal", "t")
    out = ProblemInstance(
        build_graph(n_out, edges),
        inst.variant,
        inst.k + 2,
        2 * (count - 1) + inst.l,
        s,
        t,
    )
    return ReductionOutput(out, groups, provenance)


_PENDANT_TARGETS = ("sup", "lup-d")
_PCH_TARGETS = ("ssp", "lsp", "sup", "lup-a", "lup-d")


def _pendant_graph(g: Graph) -> tuple[int, list[tuple[int, int]], VertexSet]:
    # two fresh leaves per vertex, numbered n + 2v and n + 2v + 1
    edges = list(g.edges)
    for v in range(g.n):
        edges.append((v, g.n + 2 * v))
        edges.append((v, g.n + 2 * v + 1))
    pendants = VertexSet(tuple(range(g.n, 3 * g.n)))
    return 3 * g.n, edges, pendants


def pchp_to_variant(g: Graph, target: str) -> ReductionOutput:
    """Hamiltonian path (on a connected, ideally cubic graph) to a free
    path instance.

    Targets and emitted parameters, with n the input order:
      ssp    copy of g,        k = n, l = 0
      lsp    copy of g,        k = 1, l = 0
      sup    two leaves per vertex, k = n, l = 2n
      lup-a  copy of g,        k = n, l = 0
      lup-d  two leaves per vertex, k = 1, l = 2n

    In a connected graph a path with no outside neighbors must cover
    every vertex; in the leaf-augmented graph only a path through all n
    original vertices reaches 2n neighbors within the size budget.
    """
    if target not in _PCH_TARGETS:
        raise ValueError(f"unknown target {target!r}, expected one of {_PCH_TARGETS}")
    if g.n == 0:
        raise InvalidInstanceError("input graph is empty")
    if not _connected(g):
        raise InvalidInstanceError("input graph must be connected")
    _warn_if_not_cubic(g)
    n = g.n
    groups: dict[str, VertexSet] = {"V'": VertexSet(tuple(range(n)))}
    provenance: dict[int, tuple] = {v: ("vertex", v) for v in range(n)}
    if target in _PENDANT_TARGETS:
        n_out, edges, pendants = _pendant_graph(g)
        groups["pendants"] = pendants
        for v in range(n):
            provenance[n + 2 * v] = ("pendant", v, 0)
            provenance[n + 2 * v + 1] = ("pendant", v, 1)
        out_graph = build_graph(n_out, edges)
    else:
        out_graph = build_graph(n, g.edges)
    params = {
        "ssp": (Variant.SSP, n, 0),
        "lsp": (Variant.LSP, 1, 0),
        "sup": (Variant.SUP, n, 2 * n),
        "lup-a": (Variant.LUP, n, 0),
        "lup-d": (Variant.LUP, 1, 2 * n),
    }
    variant, k, l = params[target]
    return ReductionOutput(ProblemInstance(out_graph, variant, k, l), groups, provenance)


def pchc_to_st_variant(
    g: Graph, x: int, y: int, z: int, target: str, c: int, long_k: int = 2
) -> ReductionOutput:
    """Hamiltonian cycle (connected, ideally cubic) to a terminal-pair
    instance.

    The graph is copied; a terminal s is joined to x, a terminal t to
    both y and z, and c leaves hang off s.  y and z must be distinct
    neighbors of x: a Hamiltonian cycle of a graph with deg(x) <= 3 can
    always be broken right after x into a spanning x-to-y or x-to-z
    path, which extends to an s-t path through everything.

    Targets (n the input order):
      ssp    k = n + 2, l = c
      lsp    k = 2,     l = c
      sup    two leaves per copy vertex, k = n + 2, l = 2n + c
      lup-a  k = n + 2, l = c
      lup-d  two leaves per copy vertex, k = long_k, l = 2n + c

    long_k must lie in [2, n + 2]; larger values exceed the longest
    possible s-t path and would make the instance trivially negative.
    """
    if target not in _PCH_TARGETS:
        raise ValueError(f"unknown target {target!r}, expected one of {_PCH_TARGETS}")
    n = g.n
    if n == 0:
        raise InvalidInstanceError("input graph is empty")
    if not _connected(g):
        raise InvalidInstanceError("input graph must be connected")
    if len({x, y, z}) != 3:
        raise InvalidInstanceError("x, y, z must be three distinct vertices")
    if not g.has_edge(x, y) or not g.has_edge(x, z):
        raise InvalidInstanceError("y and z must both be neighbors of x")
    if c < 0:
        raise InvalidInstanceError("leaf count c must be nonnegative")
    if not (2 <= long_k <= n + 2):
        raise InvalidInstanceError(f"long_k must be in [2, {n + 2}]")
    _warn_if_not_cubic(g)
    s, t = n, n + 1
    edges = list(g.edges)
    edges.append((s, x))
    edges.append((y, t))
    edges.append((z, t))
    groups: dict[str, VertexSet] = {
        "V'": VertexSet(tuple(range(n))),
        "s": VertexSet((s,)),
        "t": VertexSet((t,)),
    }
    provenance: dict[int, tuple] = {v: ("vertex", v) for v in range(n)}
    provenance[s] = ("terminal", "s")
    provenance[t] = ("terminal", "t")
    next_id = n + 2
    if c > 0:
        groups["Z"] = VertexSet(tuple(range(next_id, next_id + c)))
        for i in range(c):
            edges.append((s, next_id + i))
            provenance[next_id + i] = ("s_leaf", i)
        next_id += c
    if target in _PENDANT_TARGETS:
        start = next_id
        for v in range(n):
            edges.append((v, start + 2 * v))
            edges.append((v, start + 2 * v + 1))
            provenance[start + 2 * v] = ("pendant", v, 0)
            provenance[start + 2 * v + 1] = ("pendant", v, 1)
        groups["pendants"] = VertexSet(tuple(range(start, start + 2 * n)))
        next_id += 2 * n
    params = {
        "ssp": (Variant.SSP, n + 2, c),
        "lsp": (Variant.LSP, 2, c),
        "sup": (Variant.SUP, n + 2, 2 * n + c),
        "lup-a": (Variant.LUP, n + 2, c),
        "lup-d": (Variant.LUP, long_k, 2 * n + c),
    }
    variant, k, l = params[target]
    out = ProblemInstance(build_graph(next_id, edges), variant, k, l, s, t)
    return ReductionOutput(out, groups, provenance)


def clique_to_ssp(g: Graph, k: int) -> ReductionOutput:
    """k-clique to a free short secluded path instance.

    Output vertices: the n vertex copies, one vertex per edge (the edge
    vertices form a clique, each joined to its two endpoint copies), and
    a filler clique of m + k + 1 vertices completely joined to the
    vertex copies.  A path touching a filler or copy vertex sees more
    than l neighbors, so feasible paths live among the edge vertices;
    one of k*(k-1)/2 edge vertices has m - k*(k-1)/2 edge neighbors plus
    its endpoint copies, which meets l = m - k*(k-1)/2 + k exactly when
    the endpoints number k, that is, when the picked edges are a clique.

    k*(k-1)/2 may exceed m; the instance is emitted anyway and is
    trivially negative (l is clamped to 0 in the corner where the exact
    value would be negative, which changes nothing: both values make
    every path infeasible).
    """
    if k < 2:
        raise InvalidInstanceError(f"clique size must be >= 2, got {k}")
    if g.m < 1:
        raise InvalidInstanceError("input graph has no edges")
    n, m = g.n, g.m
    edge_vertex = {e: n + j for j, e in enumerate(g.edges)}
    filler = list(range(n + m, n + m + m + k + 1))
    edges: list[tuple[int, int]] = []
    for j, (u, v) in enumerate(g.edges):
        edges.append((u, n + j))
        edges.append((v, n + j))
    ev = sorted(edge_vertex.values())
    edges.extend((a, b) for i, a in enumerate(ev) for b in ev[i + 1 :])
    edges.extend((a, b) for i, a in enumerate(filler) for b in filler[i + 1 :])
    edges.extend((v, f) for v in range(n) for f in filler)
    k_out = k * (k - 1) // 2
    l_out = max(0, m - k_out + k)
    groups = {
        "V'": VertexSet(tuple(range(n))),
        "E'": VertexSet(tuple(range(n, n + m))),
        "C": VertexSet(tuple(filler)),
    }
    provenance: dict[int, tuple] = {v: ("vertex", v) for v in range(n)}
    for j, (u, v) in enumerate(g.edges):
        provenance[n + j] = ("edge", u, v)
    for i, f in enumerate(filler):
        provenance[f] = ("filler", i)
    out = ProblemInstance(
        build_graph(n + m + m + k + 1, edges), Variant.SSP, k_out, l_out
    )
    return ReductionOutput(out, groups, provenance)


_L_FORMULAS = ("all-hubs", "k-hubs")


def rbds_to_sup(
    g: Graph,
    red: VertexSet,
    blue: VertexSet,
    k: int,
    l_formula: str = "all-hubs",
) -> ReductionOutput:
    """Red-blue dominating set to a free short unsecluded path instance.

    The bipartite input (every edge joins a red and a blue vertex) is
    copied; k + 1 hub vertices are joined to every red vertex, and each
    hub gets n*n leaves of its own.  A path of at most 2k + 1 vertices
    maximizes its neighborhood by alternating hub, red, hub, ..., hub:
    it then sees all (k + 1) * n * n hub leaves, the n - k vertices left
    in the copy, plus the blue vertices dominated by its k red picks.
    The l threshold decides whether those picks must dominate all of
    blue.

    l_formula chooses the threshold:
      all-hubs  (k + 1) * n*n + n - k   counts every hub's leaves (default)
      k-hubs    k * n*n + 2n - k        counts only k hubs' leaves

    Instances with k > |red| are emitted like any other; no path can
    alternate k reds then, so the emitted instance is negative even when
    fewer than k reds dominate blue.
    """
    if k < 1:
        raise InvalidInstanceError(f"budget k must be >= 1, got {k}")
    if l_formula not in _L_FORMULAS:
        raise ValueError(f"unknown l_formula {l_formula!r}, expected one of {_L_FORMULAS}")
    n = g.n
    if n == 0:
        raise InvalidInstanceError("input graph is empty")
    red_mask, blue_mask = red.mask(), blue.mask()
    if red_mask & blue_mask or (red_mask | blue_mask) != (1 << n) - 1:
        raise InvalidInstanceError("red and blue must partition the vertex set")
    for u, v in g.edges:
        if bool(red_mask >> u & 1) == bool(red_mask >> v & 1):
            raise InvalidInstanceError(f"edge ({u}, {v}) does not join red to blue")
    hubs = list(range(n, n + k + 1))
    edges = list(g.edges)
    for h in hubs:
        edges.extend((r, h) for r in red)
    leaf_start = n + k + 1
    block = n * n
    for i, h in enumerate(hubs):
        base = leaf_start + i * block
        edges.extend((h, base + j) for j in range(block))
    n_out = leaf_start + (k + 1) * block
    if l_formula == "all-hubs":
        l_out = (k + 1) * block + n - k
    else:
        l_out = k * block + 2 * n - k
    groups = {
        "R'": red,
        "B'": blue,
        "U": VertexSet(tuple(hubs)),
        "H": VertexSet(tuple(range(leaf_start, n_out))),
    }
    if not blue.members:
        del groups["B'"]
    if not red.members:
        del groups["R'"]
    provenance: dict[int, tuple] = {v: ("vertex", v) for v in range(n)}
    for i, h in enumerate(hubs):
        provenance[h] = ("hub", i)
        for j in range(block):
            provenance[leaf_start + i * block + j] = ("hub_leaf", i, j)
    out = ProblemInstance(build_graph(n_out, edges), Variant.SUP, 2 * k + 1, l_out)
    return ReductionOutput(out, groups, provenance)


def or_compose(
    instances: list[ProblemInstance], variant: Variant | None = None
) -> ReductionOutput:
    """Disjunction of terminal-pair instances sharing (variant, k, l).

    The instance count p must be a power of two.  Two full binary trees
    with p leaves at depth log2(p) are built (heap order; the leaves
    read left to right); leaf i of the s-tree is joined to instance i's
    s and leaf i of the t-tree to its t, each joining edge subdivided k
    times.  The terminals are the two roots.  Any root-to-root path
    crosses exactly one copy terminal-to-terminal, picking up one tree
    sibling per level per side, so the composed instance is positive iff
    some input is.

    Parameters: k' = 3k + 2*(log2(p) + 1) for every variant; l' is
    l + 2*log2(p), except for lsp, where every tree vertex additionally
    gets a star of 2*log2(p) + l + 1 leaves and
    l' = 2*(log2(p) + 1)*(2*log2(p) + l + 1) + l + 2*log2(p).
    The lup variant is not composed here.
    """
    if not instances:
        raise InvalidInstanceError("need at least one instance")
    p = len(instances)
    if p & (p - 1):
        raise InvalidInstanceError(f"instance count must be a power of two, got {p}")
    first = instances[0]
    if variant is None:
        variant = first.variant
    if variant is Variant.LUP:
        raise InvalidInstanceError("lup instances are not composed here")
    k, l = first.k, first.l
    for i, inst in enumerate(instances):
        if not inst.st_mode:
            raise InvalidInstanceError(f"instance {i} has no terminals")
        if inst.variant is not variant or inst.k != k or inst.l != l:
            raise InvalidInstanceError(f"instance {i} does not share (variant, k, l)")

    log_p = p.bit_length() - 1
    tree_size = 2 * p - 1
    offsets: list[int] = []
    pos = 0
    for inst in instances:
        offsets.append(pos)
        pos += inst.graph.n
    ts_base = pos
    tt_base = ts_base + tree_size
    sub_s_base = tt_base + tree_size
    sub_t_base = sub_s_base + p * k
    pos = sub_t_base + p * k

    edges: list[tuple[int, int]] = []
    groups: dict[str, VertexSet] = {}
    provenance: dict[int, tuple] = {}
    for i, inst in enumerate(instances):
        off = offsets[i]
        edges.extend((off + a, off + b) for a, b in inst.graph.edges)
        groups[f"copy_{i + 1}"] = VertexSet(tuple(range(off, off + inst.graph.n)))
        for v in range(inst.graph.n):
            provenance[off + v] = ("copy", i + 1, v)
    # heap-indexed trees: node h at base + h - 1, children 2h and 2h + 1,
    # leaves h in [p, 2p - 1] left to right
    for base, tag in ((ts_base, "tree_s"), (tt_base, "tree_t")):
        for h in range(1, p):
            edges.append((base + h - 1, base + 2 * h - 1))
            edges.append((base + h - 1, base + 2 * h))
        for h in range(1, tree_size + 1):
            provenance[base + h - 1] = (tag, h)
    groups["T_s"] = VertexSet(tuple(range(ts_base, ts_base + tree_size)))
    groups["T_t"] = VertexSet(tuple(range(tt_base, tt_base + tree_size)))
    for i, inst in enumerate(instances):
        leaf_s = ts_base + p + i - 1
        leaf_t = tt_base + p + i - 1
        assert inst.s is not None and inst.t is not None
        s_i = offsets[i] + inst.s
        t_i = offsets[i] + inst.t
        # s-side subdividers ordered by distance from the tree leaf,
        # t-side ones by distance from the copy terminal
        chain_s = [sub_s_base + i * k + j for j in range(k)]
        prev = leaf_s
        for node in chain_s:
            edges.append((prev, node))
            prev = node
        edges.append((prev, s_i))
        chain_t = [sub_t_base + i * k + j for j in range(k)]
        prev = t_i
        for node in chain_t:
            edges.append((prev, node))
            prev = node
        edges.append((prev, leaf_t))
        groups[f"subdiv_s_{i + 1}"] = VertexSet(tuple(chain_s))
        groups[f"subdiv_t_{i + 1}"] = VertexSet(tuple(chain_t))
        for j, node in enumerate(chain_s):
            provenance[node] = ("subdiv_s", i + 1, j)
        for j, node in enumerate(chain_t):
            provenance[node] = ("subdiv_t", i + 1, j)

    if variant is Variant.LSP:
        star = 2 * log_p + l + 1
        star_members: list[int] = []
        for base in (ts_base, tt_base):
            for h in range(1, tree_size + 1):
                for j in range(star):
                    edges.append((base + h - 1, pos))
                    provenance[pos] = ("star_leaf", base + h - 1, j)
                    star_members.append(pos)
                    pos += 1
        groups["stars"] = VertexSet(tuple(star_members))
        l_out = 2 * (log_p + 1) * star + l + 2 * log_p
    else:
        l_out = l + 2 * log_p
    k_out = 3 * k + 2 * (log_p + 1)
    out = ProblemInstance(
        build_graph(pos, edges), variant, k_out, l_out, ts_base, tt_base
    )
    return ReductionOutput(out, groups, provenance)
