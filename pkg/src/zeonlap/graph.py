"""Simple undirected graphs, vertex labelings and walk censuses.

Vertices are numbered ``1..m`` throughout this module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .errors import DuplicateLabels, GraphFormatError

__all__ = [
    "Graph",
    "Labeling",
    "WalkCensus",
    "parse_graph",
    "read_graph",
    "format_graph",
    "parse_labeling",
]


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``1..m``.

    ``edges`` holds pairs ``(i, j)`` with ``i < j``; the constructor
    normalizes any iterable of 2-element pairs.
    """

    m: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.m < 0:
            raise GraphFormatError("vertex count must be non-negative")
        norm = set()
        for e in self.edges:
            i, j = (int(x) for x in e)
            if i == j:
                raise GraphFormatError(f"self-loop at vertex {i}")
            if not (1 <= i <= self.m and 1 <= j <= self.m):
                raise GraphFormatError(f"edge {i} {j} outside vertices 1..{self.m}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def complete(cls, m: int) -> "Graph":
        return cls(m, frozenset((i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)))

    @classmethod
    def path(cls, m: int) -> "Graph":
        return cls(m, frozenset((i, i + 1) for i in range(1, m)))

    @classmethod
    def cycle(cls, m: int) -> "Graph":
        return cls(m, cls.path(m).edges | {(1, m)})

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def neighbors(self, i: int) -> list[int]:
        return sorted({b if a == i else a for a, b in self.edges if i in (a, b)})

    def adjacency_lists(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.m + 1)}
        for a, b in sorted(self.edges):
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def degree(self, i: int) -> int:
        return sum(1 for e in self.edges if i in e)

    def degrees(self) -> list[int]:
        deg = [0] * self.m
        for a, b in self.edges:
            deg[a - 1] += 1
            deg[b - 1] += 1
        return deg

    def relabel(self, perm) -> "Graph":
        """Image under the vertex map ``v -> perm[v - 1]``."""
        return Graph(self.m, frozenset((perm[a - 1], perm[b - 1]) for a, b in self.edges))


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format.

    Blank lines and ``#`` comments are ignored.  An optional header ``p m``
    fixes the vertex count; otherwise it is the largest vertex mentioned.
    """
    m = None
    seen: set = set()
    order = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "p":
            if m is not None or order:
                raise GraphFormatError(f"line {lineno}: header must come first and only once")
            if len(parts) != 2:
                raise GraphFormatError(f"line {lineno}: expected 'p m'")
            m = _int(parts[1], lineno)
            if m < 0:
                raise GraphFormatError(f"line {lineno}: negative vertex count")
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two vertex numbers, got {line!r}")
        i, j = _int(parts[0], lineno), _int(parts[1], lineno)
        if i < 1 or j < 1:
            raise GraphFormatError(f"line {lineno}: vertices are numbered from 1")
        if i == j:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {i}")
        key = (min(i, j), max(i, j))
        if key in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {i} {j}")
        seen.add(key)
        order.append(key)
    if m is None:
        m = max((b for _, b in order), default=0)
    elif any(b > m for _, b in order):
        raise GraphFormatError(f"edge endpoint exceeds declared vertex count {m}")
    return Graph(m, frozenset(order))


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: {tok!r} is not an integer") from None


def read_graph(path) -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}") from exc
    return parse_graph(text)


def format_graph(G: Graph) -> str:
    lines = [f"p {G.m}"] + [f"{a} {b}" for a, b in sorted(G.edges)]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Labeling:
    """Positive rational vertex labels ``values[v - 1]``.

    ``kind`` is ``"degree"``, ``"f"`` or ``"q"``.  f- and q-labelings must
    be pairwise distinct; degree labelings usually are not.
    """

    values: tuple
    kind: str = "f"

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if self.kind not in ("degree", "f", "q"):
            raise ValueError(f"unknown labeling kind {self.kind!r}")
        if self.kind == "f" and any(v.denominator != 1 or v <= 0 for v in vals):
            raise ValueError("f-labels must be positive integers")
        if self.kind == "q" and any(v <= 0 for v in vals):
            raise ValueError("q-labels must be positive")
        if self.kind != "degree" and len(set(vals)) != len(vals):
            raise DuplicateLabels(f"{self.kind}-labels must be pairwise distinct")

    @classmethod
    def degree(cls, G: Graph) -> "Labeling":
        return cls(tuple(G.degrees()), "degree")

    @classmethod
    def f(cls, m_or_values) -> "Labeling":
        if isinstance(m_or_values, int):
            return cls(tuple(range(1, m_or_values + 1)), "f")
        return cls(tuple(m_or_values), "f")

    @classmethod
    def q(cls, m_or_values) -> "Labeling":
        if isinstance(m_or_values, int):
            return cls(tuple(range(1, m_or_values + 1)), "q")
        return cls(tuple(m_or_values), "q")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, v: int) -> Fraction:
        """Label of vertex ``v`` (1-based)."""
        return self.values[v - 1]

    def floats(self) -> list[float]:
        return [float(x) for x in self.values]

    def is_unique(self, v: int) -> bool:
        return self.values.count(self.values[v - 1]) == 1

    def spec(self) -> str:
        if self.kind == "degree":
            return "degree"
        return self.kind + ":" + ",".join(str(x) for x in self.values)


def parse_labeling(spec: str, G: Graph, vertex: int | None = None) -> Labeling:
    """Build a labeling from a command-line string.

    Accepted forms are ``degree``, ``f``, ``q`` (defaults ``1..m``),
    ``f:3,1,2``, ``q:1/2,2,5`` and ``auto``.  ``auto`` means the degree
    labeling when ``vertex`` has a degree no other vertex shares, and the
    default f-labeling otherwise.
    """
    spec = spec.strip()
    if spec == "degree":
        return Labeling.degree(G)
    if spec == "auto":
        lab = Labeling.degree(G)
        if vertex is not None and lab.is_unique(vertex):
            return lab
        return Labeling.f(G.m)
    kind, _, rest = spec.partition(":")
    if kind not in ("f", "q"):
        raise ValueError(f"unknown labeling {spec!r}")
    if not rest:
        return Labeling.f(G.m) if kind == "f" else Labeling.q(G.m)
    try:
        vals = [Fraction(tok.strip()) for tok in rest.split(",")]
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"cannot parse labels in {spec!r}") from None
    if len(vals) != G.m:
        raise ValueError(f"labeling has {len(vals)} values but the graph has {G.m} vertices")
    return Labeling(tuple(vals), kind)


@dataclass(frozen=True)
class WalkCensus:
    """Counts of walks of one kind, grouped by vertex subset.

    Attributes
    ----------
    kind : str
        ``"paths"``, ``"cycles"``, ``"pwics"`` or ``"paths+pwics"``.
    endpoints : tuple
        ``(i, j)`` for walks from ``i`` to ``j``, ``(v,)`` for cycles at ``v``.
    table : dict
        Maps ``frozenset`` of vertices to a positive count.  Zero counts are
        never stored, so two censuses are equal exactly when their tables are.
    """

    kind: str
    endpoints: tuple
    table: dict = field(default_factory=dict, hash=False)

    def __post_init__(self):
        clean = {frozenset(k): int(v) for k, v in self.table.items() if int(v) != 0}
        object.__setattr__(self, "table", clean)

    def total(self) -> int:
        return sum(self.table.values())

    def __len__(self):
        return len(self.table)

    def merged(self, other: "WalkCensus", kind: str | None = None) -> "WalkCensus":
        out = dict(self.table)
        for k, v in other.table.items():
            out[k] = out.get(k, 0) + v
        return WalkCensus(kind or self.kind, self.endpoints, out)

    def shifted(self, vertex: int, kind: str | None = None) -> "WalkCensus":
        """Same counts with ``vertex`` added to every subset key."""
        return WalkCensus(kind or self.kind, self.endpoints, {k | {vertex}: v for k, v in self.table.items()})

    def same_counts(self, other: "WalkCensus") -> bool:
        return self.table == other.table

    def sorted_items(self):
        return sorted(self.table.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "endpoints": list(self.endpoints),
            "table": [{"vertices": sorted(k), "count": v} for k, v in self.sorted_items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "WalkCensus":
        return cls(
            data["kind"],
            tuple(data["endpoints"]),
            {frozenset(e["vertices"]): e["count"] for e in data["table"]},
        )

    def __str__(self):
        body = ", ".join("{" + ",".join(map(str, sorted(k))) + "}: " + str(v) for k, v in self.sorted_items())
        return f"{self.kind}{self.endpoints} {{{body}}}"
