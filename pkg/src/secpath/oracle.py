"""Exhaustive path enumeration and the brute-force decision oracle.

Every simple path is visited once up to reversal, oriented so its first
vertex is <= its last, in lexicographic order of the oriented sequence.
The enumeration is the ground truth the parameterized solvers are tested
against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator

from .graph import Graph, PathCertificate, ProblemInstance, VertexRangeError

if TYPE_CHECKING:
    from .solvers import SolverStats


@dataclass(frozen=True)
class OracleStats:
    """Work counter: paths enumerated up to and including the hit."""

    paths_enumerated: int


@dataclass(frozen=True)
class Answer:
    """Decision plus an optional witness path and work counters."""

    decision: bool
    witness: PathCertificate | None = None
    stats: "OracleStats | SolverStats | None" = None


def _iter_core(
    g: Graph, max_len: int | None, endpoints: tuple[int, int] | None
) -> Iterator[tuple[int, int, list[int]]]:
    """Yield (size, open neighborhood size, live path buffer) per path.

    The buffer is reused between yields; callers must copy it before
    advancing the generator.  Iterative DFS, children in ascending vertex
    order, so free-mode paths arrive in lexicographic order of their
    canonical orientation and endpoint-mode paths in lexicographic order
    from the smaller terminal.
    """
    n = g.n
    limit = n if max_len is None else min(max_len, n)
    if limit < 1 or n == 0:
        return
    masks = g.neighbor_masks
    adj = g.adjacency
    goal = -1
    if endpoints is not None:
        a, b = endpoints
        if not (0 <= a < n) or not (0 <= b < n):
            raise VertexRangeError(f"endpoint outside 0..{n - 1}")
        if a == b:
            raise ValueError("endpoints must be distinct")
        if a > b:
            a, b = b, a
        starts: range | tuple[int, ...] = (a,)
        goal = b
    else:
        starts = range(n)

    for start in starts:
        path = [start]
        pmask = 1 << start
        accs = [masks[start]]
        if goal < 0:
            yield 1, (accs[0] & ~pmask).bit_count(), path
        if limit == 1:
            continue
        iters = [iter(adj[start])]
        while iters:
            advanced = False
            for u in iters[-1]:
                if pmask >> u & 1:
                    continue
                acc = accs[-1] | masks[u]
                bit = 1 << u
                path.append(u)
                pmask |= bit
                if goal < 0:
                    if path[0] <= u:
                        yield len(path), (acc & ~pmask).bit_count(), path
                    if len(path) < limit:
                        iters.append(iter(adj[u]))
                        accs.append(acc)
                        advanced = True
                        break
                elif u == goal:
                    yield len(path), (acc & ~pmask).bit_count(), path
                elif len(path) < limit:
                    iters.append(iter(adj[u]))
                    accs.append(acc)
                    advanced = True
                    break
                path.pop()
                pmask &= ~bit
            if not advanced:
                iters.pop()
                accs.pop()
                pmask &= ~(1 << path.pop())


def enumerate_paths(
    g: Graph,
    max_len: int | None = None,
    endpoints: tuple[int, int] | None = None,
) -> Iterator[PathCertificate]:
    """Stream every simple path of g once, up to reversal.

    max_len bounds the vertex count; endpoints, when given, restricts to
    paths whose ends are exactly that unordered pair.
    """
    for _, _, buf in _iter_core(g, max_len, endpoints):
        yield PathCertificate(tuple(buf))


def iter_path_stats(
    g: Graph,
    max_len: int | None = None,
    endpoints: tuple[int, int] | None = None,
) -> Iterator[tuple[int, int]]:
    """Stream (vertex count, open neighborhood size) per path.

    Same traversal and order as enumerate_paths, without materializing
    the paths; this is the cheap substrate for bulk expected-answer
    computations.
    """
    for size, ncount, _ in _iter_core(g, max_len, endpoints):
        yield size, ncount


def oracle_decide(inst: ProblemInstance) -> Answer:
    """Decide an instance by exhaustive enumeration.

    Short variants prune the search at k vertices; long variants must
    consider every simple path.  Stops at the first satisfying path, and
    the returned stats count the paths enumerated up to that point.
    """
    variant = inst.variant
    short = variant.short
    secluded = variant.secluded
    k, l = inst.k, inst.l
    max_len = k if short else None
    endpoints = (inst.s, inst.t) if inst.s is not None and inst.t is not None else None
    count = 0
    for size, ncount, buf in _iter_core(inst.graph, max_len, endpoints):
        count += 1
        if (size <= k if short else size >= k) and (
            ncount <= l if secluded else ncount >= l
        ):
            return Answer(True, PathCertificate(tuple(buf)), OracleStats(count))
    return Answer(False, None, OracleStats(count))
