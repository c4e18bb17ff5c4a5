"""Immutable simple graphs plus the shared problem vocabulary.

Vertices are integers 0..n-1.  Adjacency is kept both as sorted neighbor
tuples and as per-vertex bitmasks (bit u of neighbor_masks[v] is set iff
u and v are adjacent); the solvers lean on the masks for fast
neighborhood counting via int.bit_count().
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator


class InvalidGraphError(ValueError):
    """Malformed graph construction input."""


class SelfLoopError(InvalidGraphError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(InvalidGraphError):
    """The same unordered edge appears more than once."""


class VertexRangeError(InvalidGraphError):
    """A vertex index is negative or >= n."""


class GraphFormatError(ValueError):
    """Unparseable graph text; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class InvalidInstanceError(ValueError):
    """Problem instance parameters violate their preconditions."""


class Graph:
    """Undirected simple graph, immutable and hashable by (n, edges)."""

    __slots__ = ("n", "edges", "adjacency", "neighbor_masks", "_hash")

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]
    neighbor_masks: tuple[int, ...]

    def __init__(self, n: int, edge_list: Iterable[tuple[int, int]]):
        if n < 0:
            raise InvalidGraphError(f"vertex count must be nonnegative, got {n}")
        masks = [0] * n
        seen: set[tuple[int, int]] = set()
        edges: list[tuple[int, int]] = []
        for u, v in edge_list:
            if not (0 <= u < n) or not (0 <= v < n):
                raise VertexRangeError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise DuplicateEdgeError(f"duplicate edge ({e[0]}, {e[1]})")
            seen.add(e)
            edges.append(e)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(edges)))
        object.__setattr__(self, "neighbor_masks", tuple(masks))
        adjacency = tuple(
            tuple(u for u in range(n) if masks[v] >> u & 1) for v in range(n)
        )
        object.__setattr__(self, "adjacency", adjacency)
        object.__setattr__(self, "_hash", hash((n, self.edges)))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and bool(self.neighbor_masks[u] >> v & 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Validate and construct a graph from a vertex count and edge list.

    Rejects self-loops, duplicate edges (in either orientation), and
    out-of-range endpoints with distinct error types.
    """
    return Graph(n, edge_list)


@dataclass(frozen=True)
class VertexSet:
    """Sorted duplicate-free tuple of vertex indices."""

    members: tuple[int, ...]

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.members, self.members[1:])):
            raise ValueError("members must be strictly increasing")
        if self.members and self.members[0] < 0:
            raise VertexRangeError("negative vertex index")

    @classmethod
    def of(cls, vertices: Iterable[int]) -> VertexSet:
        return cls(tuple(sorted(set(vertices))))

    def mask(self) -> int:
        bits = 0
        for v in self.members:
            bits |= 1 << v
        return bits

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.members


def _mask_to_vertices(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def neighborhood(g: Graph, w: VertexSet | Iterable[int]) -> VertexSet:
    """Open neighborhood N(W): vertices adjacent to W but not in W."""
    members = tuple(w.members if isinstance(w, VertexSet) else w)
    inside = 0
    union = 0
    for v in members:
        if not (0 <= v < g.n):
            raise VertexRangeError(f"vertex {v} outside 0..{g.n - 1}")
        inside |= 1 << v
        union |= g.neighbor_masks[v]
    return VertexSet(_mask_to_vertices(union & ~inside))


@dataclass(frozen=True)
class DegreePartition:
    """Split of the vertex set by a degree threshold.

    r_set holds the vertices of degree >= threshold, b_set the rest;
    delta_b is the maximum degree of the subgraph induced on b_set.
    """

    threshold: int
    r_set: VertexSet
    b_set: VertexSet
    delta_b: int


def degree_partition(g: Graph, threshold: int) -> DegreePartition:
    if threshold < 0:
        raise ValueError(f"threshold must be nonnegative, got {threshold}")
    r = [v for v in range(g.n) if g.degree(v) >= threshold]
    b = [v for v in range(g.n) if g.degree(v) < threshold]
    b_mask = 0
    for v in b:
        b_mask |= 1 << v
    delta_b = max(((g.neighbor_masks[v] & b_mask).bit_count() for v in b), default=0)
    return DegreePartition(threshold, VertexSet(tuple(r)), VertexSet(tuple(b)), delta_b)


class Variant(str, Enum):
    """The four path decision problems.

    Size side: short variants demand |V(P)| <= k, long ones |V(P)| >= k.
    Neighborhood side: secluded variants demand |N(V(P))| <= l,
    unsecluded ones |N(V(P))| >= l.
    """

    SSP = "ssp"
    LSP = "lsp"
    SUP = "sup"
    LUP = "lup"

    @property
    def short(self) -> bool:
        return self in (Variant.SSP, Variant.SUP)

    @property
    def secluded(self) -> bool:
        return self in (Variant.SSP, Variant.LSP)

    def size_ok(self, size: int, k: int) -> bool:
        return size <= k if self.short else size >= k

    def neighborhood_ok(self, count: int, l: int) -> bool:
        return count <= l if self.secluded else count >= l


@dataclass(frozen=True)
class PathCertificate:
    """Claimed path, as the visited vertex sequence."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("a path has at least one vertex")

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)


@dataclass(frozen=True)
class ProblemInstance:
    """One decision question: graph, variant, bounds, optional terminals.

    Free instances leave s and t as None; st instances fix both endpoints
    and require k >= 2 (an st path has at least two vertices, so smaller
    size bounds would be degenerate for the short variants).
    """

    graph: Graph
    variant: Variant
    k: int
    l: int
    s: int | None = None
    t: int | None = None

    def __post_init__(self):
        if self.k < 1:
            raise InvalidInstanceError(f"k must be >= 1, got {self.k}")
        if self.l < 0:
            raise InvalidInstanceError(f"l must be >= 0, got {self.l}")
        if (self.s is None) != (self.t is None):
            raise InvalidInstanceError("s and t must be given together")
        if self.s is not None and self.t is not None:
            if not (0 <= self.s < self.graph.n) or not (0 <= self.t < self.graph.n):
                raise InvalidInstanceError("terminals outside the vertex range")
            if self.s == self.t:
                raise InvalidInstanceError("terminals must be distinct")
            if self.k < 2:
                raise InvalidInstanceError("st instances require k >= 2")

    @property
    def st_mode(self) -> bool:
        return self.s is not None


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking a certificate: verdict plus measured quantities.

    size and neighbor_count are measured on the claimed vertex sequence
    (neighbor_count over its distinct vertices) even when rejected;
    reason names the first violated condition, None on acceptance.
    """

    accepted: bool
    size: int
    neighbor_count: int
    reason: str | None = None


def verify_certificate(inst: ProblemInstance, cert: PathCertificate) -> VerificationReport:
    """Check a claimed path against an instance.

    Conditions are tested in order: simple path in the graph, endpoint
    pair (st instances, unordered), size bound, neighborhood bound.
    """
    g = inst.graph
    for v in cert.vertices:
        if not (0 <= v < g.n):
            raise VertexRangeError(f"certificate vertex {v} outside 0..{g.n - 1}")
    size = len(cert.vertices)
    distinct = set(cert.vertices)
    inside = 0
    union = 0
    for v in distinct:
        inside |= 1 << v
        union |= g.neighbor_masks[v]
    ncount = (union & ~inside).bit_count()

    reason = None
    if len(distinct) != size:
        reason = "vertex repeated on the path"
    else:
        for a, b in zip(cert.vertices, cert.vertices[1:]):
            if not g.has_edge(a, b):
                reason = f"consecutive vertices {a} and {b} are not adjacent"
                break
    if reason is None and inst.st_mode:
        if {cert.vertices[0], cert.vertices[-1]} != {inst.s, inst.t}:
            reason = f"endpoints are not {{{inst.s}, {inst.t}}}"
    if reason is None and not inst.variant.size_ok(size, inst.k):
        cmp = "<=" if inst.variant.short else ">="
        reason = f"path has {size} vertices, need {cmp} {inst.k}"
    if reason is None and not inst.variant.neighborhood_ok(ncount, inst.l):
        cmp = "<=" if inst.variant.secluded else ">="
        reason = f"neighborhood has {ncount} vertices, need {cmp} {inst.l}"
    return VerificationReport(reason is None, size, ncount, reason)


def serialize_graph(g: Graph) -> str:
    """Graph text: an 'n m' header line, then one 'u v' line per edge, u < v."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph_file(text: str) -> Graph:
    """Parse graph text (see serialize_graph); '#' starts a comment line.

    Raises GraphFormatError with a 1-based line number on any defect:
    bad token counts, non-integers, endpoints out of range or not in
    canonical u < v order, self-loops, duplicate edges, wrong edge count.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(lineno, f"expected two integers, got {raw.strip()!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(lineno, f"expected two integers, got {raw.strip()!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError(lineno, "header counts must be nonnegative")
            header = (a, b)
            continue
        n, m = header
        if len(edges) >= m:
            raise GraphFormatError(lineno, f"more than the declared {m} edges")
        if not (0 <= a < n) or not (0 <= b < n):
            raise GraphFormatError(lineno, f"endpoint outside 0..{n - 1}")
        if a == b:
            raise GraphFormatError(lineno, f"self-loop at vertex {a}")
        if a > b:
            raise GraphFormatError(lineno, "edge endpoints must satisfy u < v")
        if (a, b) in seen:
            raise GraphFormatError(lineno, f"duplicate edge ({a}, {b})")
        seen.add((a, b))
        edges.append((a, b))
    if header is None:
        raise GraphFormatError(max(last_line, 1), "missing 'n m' header line")
    if len(edges) != header[1]:
        raise GraphFormatError(
            max(last_line, 1), f"declared {header[1]} edges, found {len(edges)}"
        )
    return build_graph(header[0], edges)
