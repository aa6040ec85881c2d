"""Simple undirected graphs: construction, edge-list I/O, named families and
seeded random sampling.

Vertices are ``0..n-1``. Edges are stored as sorted ``(u, v)`` pairs with
``u < v``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, TextIO

__all__ = [
    "Graph",
    "FamilySpec",
    "GraphError",
    "ParseError",
    "XorShift64Star",
    "parse_edge_list",
    "read_edge_list",
    "serialize_edge_list",
    "generate_family",
    "random_connected",
    "is_connected",
    "degree_sequence",
    "FAMILY_KINDS",
]

FAMILY_KINDS = ("complete", "cycle", "path", "star", "complete-bipartite")

_MASK64 = (1 << 64) - 1


class GraphError(ValueError):
    """Invalid graph or family construction."""


class ParseError(GraphError):
    """Malformed edge-list input."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"{message}, line {line}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    Parameters
    ----------
    n : int
        Number of vertices, at least 1.
    edges : iterable of (int, int)
        Unordered vertex pairs. Duplicates (in either orientation) collapse.
    """

    n: int
    edges: frozenset = field(default_factory=frozenset)
    adjacency: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {self.n!r}")
        normalized = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"endpoint out of range in edge ({u}, {v})")
            normalized.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(normalized))
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in normalized:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in nbrs))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degrees(self) -> list[int]:
        """Degrees in vertex order (unsorted)."""
        return [len(a) for a in self.adjacency]

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.sorted_edges())


@dataclass(frozen=True)
class FamilySpec:
    """Named graph family member.

    ``a`` is the size of the first part and is only used by
    ``complete-bipartite``.
    """

    kind: str
    n: int
    a: int | None = None

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise GraphError(f"unknown family kind {self.kind!r}")
        if self.n < 1:
            raise GraphError("family order must be >= 1")
        if self.kind == "cycle" and self.n < 3:
            raise GraphError("cycle needs n >= 3")
        if self.kind == "complete-bipartite":
            if self.a is None or not 1 <= self.a <= self.n - 1:
                raise GraphError("complete-bipartite needs 1 <= a <= n-1")

    @property
    def label(self) -> str:
        if self.kind == "complete":
            return f"K{self.n}"
        if self.kind == "cycle":
            return f"C{self.n}"
        if self.kind == "path":
            return f"P{self.n}"
        if self.kind == "star":
            return f"S{self.n}"
        return f"K{self.a},{self.n - self.a}"


# ---------------------------------------------------------------------------
# Edge-list format


def parse_edge_list(text: str | Iterable[str]) -> Graph:
    """Parse the plain edge-list format.

    The first non-comment line holds ``n``; every further non-comment line
    holds two integers ``u v``. ``#`` starts a comment. Errors name the
    1-based line number of the offending line.

    >>> parse_edge_list("3\\n0 1\\n1 2").sorted_edges()
    [(0, 1), (1, 2)]
    """
    lines = text.splitlines() if isinstance(text, str) else text
    n = None
    edges = set()
    for lineno, raw in enumerate(lines, start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        tokens = content.split()
        if n is None:
            if len(tokens) != 1:
                raise ParseError("expected vertex count", lineno)
            try:
                n = int(tokens[0])
            except ValueError:
                raise ParseError(f"malformed integer {tokens[0]!r}", lineno) from None
            if n < 1:
                raise ParseError("vertex count must be >= 1", lineno)
            continue
        if len(tokens) != 2:
            raise ParseError("expected two endpoints", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"malformed integer in {content!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError("endpoint out of range", lineno)
        if u == v:
            raise ParseError("self-loop", lineno)
        edges.add((min(u, v), max(u, v)))
    if n is None:
        raise ParseError("missing vertex count")
    return Graph(n, frozenset(edges))


def read_edge_list(fh: TextIO) -> Graph:
    return parse_edge_list(fh.read())


def serialize_edge_list(g: Graph) -> str:
    """Inverse of :func:`parse_edge_list`: ``n`` then sorted ``u v`` lines."""
    out = [f"{g.n}\n"]
    out.extend(f"{u} {v}\n" for u, v in g.sorted_edges())
    return "".join(out)


# ---------------------------------------------------------------------------
# Families


def generate_family(spec: FamilySpec) -> Graph:
    n = spec.n
    if spec.kind == "complete":
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    elif spec.kind == "cycle":
        edges = [(i, (i + 1) % n) for i in range(n)]
    elif spec.kind == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif spec.kind == "star":
        edges = [(0, i) for i in range(1, n)]
    else:
        a = spec.a
        edges = [(i, j) for i in range(a) for j in range(a, n)]
    return Graph(n, frozenset(edges))


# ---------------------------------------------------------------------------
# Random graphs


class XorShift64Star:
    """xorshift64* generator (Vigna 2016), seeded through splitmix64.

    The algorithm is fixed so that a seed names the same graph on every
    platform:

    * state ``s = splitmix64(seed)``, replaced by a fixed odd constant if 0;
    * step: ``s ^= s >> 12; s ^= s << 25; s ^= s >> 27`` (mod 2**64);
    * output ``s * 0x2545F4914F6CDD1D mod 2**64``;
    * uniform doubles use the top 53 bits: ``(x >> 11) * 2**-53``.
    """

    _MULT = 0x2545F4914F6CDD1D

    def __init__(self, seed: int):
        z = (seed + 0x9E3779B97F4A7C15) & _MASK64
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        z ^= z >> 31
        self.state = z or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        s = self.state
        s ^= s >> 12
        s ^= (s << 25) & _MASK64
        s ^= s >> 27
        self.state = s
        return (s * self._MULT) & _MASK64

    def random(self) -> float:
        """Uniform double in [0, 1)."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]`` (inclusive)."""
        return lo + int(self.random() * (hi - lo + 1))


RESAMPLE_CAP = 10000


def random_connected(n: int, p: float, seed: int) -> Graph:
    """Sample G(n, p) until the result is connected.

    Pairs ``(i, j)``, ``i < j``, are visited in lexicographic order and each
    consumes one uniform draw; the edge is kept when the draw is below ``p``.
    Rejected samples keep consuming the same stream. For reasonable
    rejection rates use ``p >= ln(n) / n``.
    """
    if n < 2:
        raise GraphError("random_connected needs n >= 2")
    if not 0.0 < p <= 1.0:
        raise GraphError(f"edge probability must be in (0, 1], got {p}")
    rng = XorShift64Star(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for _ in range(RESAMPLE_CAP):
        edges = frozenset(e for e in pairs if rng.random() < p)
        g = Graph(n, edges)
        if is_connected(g):
            return g
    raise GraphError("connectivity resample cap")


# ---------------------------------------------------------------------------
# Queries


def is_connected(g: Graph) -> bool:
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count == g.n


def degree_sequence(g: Graph) -> list[int]:
    """Degrees sorted nonincreasing."""
    return sorted(g.degrees(), reverse=True)
