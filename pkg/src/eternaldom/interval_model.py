"""Interval models, their intersection graphs, and the text formats for both."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping

import numpy as np


class ModelError(ValueError):
    """Malformed model or graph input.  ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Interval:
    id: str
    s: float
    t: float

    def __post_init__(self):
        if not self.s < self.t:
            raise ValueError(f"interval {self.id!r}: need s < t, got ({self.s}, {self.t})")


@dataclass(frozen=True, eq=False)
class IntervalModel:
    """An ordered family of named intervals.

    Coordinates live in two parallel arrays.  After :func:`normalize` they are
    int64 and together hold each integer ``1..2n`` exactly once; ``canonical``
    reports whether that is the case.
    """

    ids: tuple[str, ...]
    s: np.ndarray
    t: np.ndarray

    def __post_init__(self):
        if not (len(self.ids) == len(self.s) == len(self.t)):
            raise ValueError("ids, s and t must have equal length")
        if len(set(self.ids)) != len(self.ids):
            raise ValueError("interval ids must be unique")
        if len(self.s) and not np.all(self.s < self.t):
            bad = int(np.flatnonzero(~(self.s < self.t))[0])
            raise ValueError(f"interval {self.ids[bad]!r}: need s < t")

    @classmethod
    def from_intervals(cls, intervals: Iterable[Interval | tuple]) -> IntervalModel:
        ids, s, t = [], [], []
        for item in intervals:
            if not isinstance(item, Interval):
                item = Interval(*item)
            ids.append(str(item.id))
            s.append(item.s)
            t.append(item.t)
        dtype = np.int64 if all(_is_int(x) for x in s + t) else np.float64
        return cls(tuple(ids), np.asarray(s, dtype=dtype), np.asarray(t, dtype=dtype))

    def __len__(self) -> int:
        return len(self.ids)

    def __iter__(self) -> Iterator[Interval]:
        for i, name in enumerate(self.ids):
            yield Interval(name, self.s[i].item(), self.t[i].item())

    def __eq__(self, other):
        if not isinstance(other, IntervalModel):
            return NotImplemented
        return (
            self.ids == other.ids
            and np.array_equal(self.s, other.s)
            and np.array_equal(self.t, other.t)
        )

    def __hash__(self):
        return hash((self.ids, self.s.tobytes(), self.t.tobytes()))

    @property
    def intervals(self) -> list[Interval]:
        return list(self)

    @property
    def n(self) -> int:
        return len(self.ids)

    @cached_property
    def index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.ids)}

    @cached_property
    def id_array(self) -> np.ndarray:
        return np.asarray(self.ids, dtype=object)

    @cached_property
    def canonical(self) -> bool:
        n = self.n
        if n == 0:
            return True
        if self.s.dtype.kind not in "iu" or self.t.dtype.kind not in "iu":
            return False
        coords = np.concatenate([self.s, self.t])
        if coords.min() < 1 or coords.max() > 2 * n:
            return False
        return bool(np.all(np.bincount(coords, minlength=2 * n + 1)[1:] == 1))

    def interval(self, name: str) -> Interval:
        i = self.index[name]
        return Interval(name, self.s[i].item(), self.t[i].item())


def _is_int(x) -> bool:
    return isinstance(x, (int, np.integer)) and not isinstance(x, bool)


def _number(token: str):
    try:
        return int(token)
    except ValueError:
        return float(token)


# ---------------------------------------------------------------------------
# model text format


def parse_model(text: str) -> IntervalModel:
    """Parse the model file format.

    The first non-comment line holds ``n``; then ``n`` lines ``<id> <s> <t>``.
    Lines starting with ``#`` and blank lines are ignored.
    """
    header = None
    rows: list[tuple[int, str, object, object]] = []
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 1:
                raise ModelError("expected the interval count n", lineno)
            try:
                header = int(parts[0])
            except ValueError:
                raise ModelError(f"interval count is not an integer: {parts[0]!r}", lineno) from None
            if header < 0:
                raise ModelError("interval count must be non-negative", lineno)
            continue
        if len(parts) != 3:
            raise ModelError(f"expected '<id> <s> <t>', got {line!r}", lineno)
        name, s_tok, t_tok = parts
        try:
            s, t = _number(s_tok), _number(t_tok)
        except ValueError:
            raise ModelError(f"non-numeric coordinate in {line!r}", lineno) from None
        if not np.isfinite(s) or not np.isfinite(t):
            raise ModelError("coordinates must be finite", lineno)
        if not s < t:
            raise ModelError(f"interval {name!r} has s >= t ({s_tok} >= {t_tok})", lineno)
        if name in seen:
            raise ModelError(f"duplicate id {name!r} (first seen at line {seen[name]})", lineno)
        seen[name] = lineno
        rows.append((lineno, name, s, t))
        if len(rows) > header:
            raise ModelError(f"more than the declared {header} intervals", lineno)
    if header is None:
        raise ModelError("missing interval count")
    if len(rows) != header:
        raise ModelError(f"declared {header} intervals but found {len(rows)}")
    return IntervalModel.from_intervals((name, s, t) for _, name, s, t in rows)


def format_model(model: IntervalModel) -> str:
    lines = [str(model.n)]
    for iv in model:
        lines.append(f"{iv.id} {iv.s} {iv.t}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# normalization and structure


def normalize(model: IntervalModel) -> IntervalModel:
    """Return the canonical model with endpoints ``1..2n``.

    Inputs are read as closed intervals.  Endpoints are ranked by
    (coordinate, begin-before-end, id), which keeps touching intervals
    adjacent and leaves an already canonical model unchanged.
    """
    n = model.n
    if n == 0:
        return IntervalModel((), np.empty(0, np.int64), np.empty(0, np.int64))
    id_rank = np.empty(n, dtype=np.int64)
    id_rank[np.argsort(np.asarray(model.ids, dtype=object), kind="stable")] = np.arange(n)
    coord = np.concatenate([model.s, model.t]).astype(np.float64)
    kind = np.concatenate([np.zeros(n, np.int8), np.ones(n, np.int8)])
    rank = np.concatenate([id_rank, id_rank])
    order = np.lexsort((rank, kind, coord))
    pos = np.empty(2 * n, dtype=np.int64)
    pos[order] = np.arange(1, 2 * n + 1)
    return IntervalModel(model.ids, pos[:n], pos[n:])


def require_canonical(model: IntervalModel) -> None:
    if not model.canonical:
        raise ValueError("model is not canonical; call normalize() first")


def is_proper(model: IntervalModel) -> bool:
    """True iff no interval contains another."""
    if model.n <= 1:
        return True
    m = model if model.canonical else normalize(model)
    by_s = np.argsort(m.s, kind="stable")
    return bool(np.all(np.diff(m.t[by_s]) > 0))


def random_model(n: int, seed: int, kind: str = "general") -> IntervalModel:
    """Deterministic random canonical model with ids ``v1..vn``.

    ``general`` pairs up a random permutation of ``1..2n``; ``proper`` draws a
    random begin/end word and matches the i-th end with the i-th begin, so
    begin and end orders coincide.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if kind not in ("general", "proper"):
        raise ValueError(f"unknown kind {kind!r}")
    rng = np.random.default_rng(seed)
    ids = tuple(f"v{i}" for i in range(1, n + 1))
    if n == 0:
        return IntervalModel(ids, np.empty(0, np.int64), np.empty(0, np.int64))
    if kind == "general":
        pairs = rng.permutation(np.arange(1, 2 * n + 1, dtype=np.int64)).reshape(n, 2)
        pairs.sort(axis=1)
        pairs = pairs[np.argsort(pairs[:, 0])]
        return IntervalModel(ids, pairs[:, 0].copy(), pairs[:, 1].copy())
    # proper: random lattice path that never has more ends than begins so far
    flips = rng.random(2 * n)
    word = np.empty(2 * n, dtype=np.bool_)  # True = begin
    opened = closed = 0
    for i in range(2 * n):
        if opened == n:
            begin = False
        elif opened == closed:
            begin = True
        else:
            begin = flips[i] < 0.5
        word[i] = begin
        if begin:
            opened += 1
        else:
            closed += 1
    coords = np.arange(1, 2 * n + 1, dtype=np.int64)
    return IntervalModel(ids, coords[word], coords[~word])


# ---------------------------------------------------------------------------
# graphs


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on string vertex ids."""

    vertices: tuple[str, ...]
    adj: Mapping[str, frozenset[str]] = field(repr=False)

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise ValueError("duplicate vertex id")
        if set(self.adj) != vs:
            raise ValueError("adjacency keys must equal the vertex set")
        for v, nb in self.adj.items():
            if v in nb:
                raise ValueError(f"self-loop at {v!r}")
            for w in nb:
                if v not in self.adj.get(w, ()):
                    raise ValueError(f"asymmetric edge {v!r}-{w!r}")

    @classmethod
    def from_edges(cls, vertices: Iterable[str], edges: Iterable[tuple[str, str]]) -> Graph:
        vertices = tuple(vertices)
        adj: dict[str, set[str]] = {v: set() for v in vertices}
        for u, v in edges:
            if u not in adj or v not in adj:
                raise ValueError(f"edge {u!r}-{v!r} uses an unknown vertex")
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(vertices, {v: frozenset(nb) for v, nb in adj.items()})

    @property
    def n(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self.adj

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and all(
            self.adj[v] == other.adj[v] for v in self.vertices
        )

    def __hash__(self):
        return hash(frozenset(self.edges()))

    def neighbors(self, v: str) -> frozenset[str]:
        return self.adj[v]

    def closed_neighbors(self, v: str) -> frozenset[str]:
        return self.adj[v] | {v}

    def edges(self) -> list[tuple[str, str]]:
        pos = {v: i for i, v in enumerate(self.vertices)}
        out = []
        for v in self.vertices:
            for w in self.adj[v]:
                if pos[v] < pos[w]:
                    out.append((v, w))
        return sorted(out, key=lambda e: (pos[e[0]], pos[e[1]]))

    def subgraph(self, vertices: Iterable[str]) -> Graph:
        keep = [v for v in vertices]
        ks = set(keep)
        return Graph(tuple(keep), {v: self.adj[v] & ks for v in keep})

    def without_edge(self, u: str, v: str) -> Graph:
        adj = dict(self.adj)
        adj[u] = adj[u] - {v}
        adj[v] = adj[v] - {u}
        return Graph(self.vertices, adj)

    def bfs_distances(self, source: str, allowed: set[str] | None = None) -> dict[str, int]:
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if w not in dist and (allowed is None or w in allowed):
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        return len(self.bfs_distances(self.vertices[0])) == len(self.vertices)

    def is_clique(self, vertices: Iterable[str] | None = None) -> bool:
        vs = list(self.vertices if vertices is None else vertices)
        return all(w in self.adj[v] for i, v in enumerate(vs) for w in vs[i + 1:])


def intersection_graph(model: IntervalModel) -> Graph:
    """Graph with an edge between every pair of overlapping intervals.

    Runs a sweep over the endpoints, so the cost is O(n log n + m).
    """
    m = model if model.canonical else normalize(model)
    n = m.n
    adj: dict[str, set[str]] = {v: set() for v in m.ids}
    if n:
        coords = np.concatenate([m.s, m.t])
        order = np.argsort(coords, kind="stable")
        active: dict[int, None] = {}
        for e in order.tolist():
            i = e if e < n else e - n
            if e < n:
                vi = m.ids[i]
                for j in active:
                    vj = m.ids[j]
                    adj[vi].add(vj)
                    adj[vj].add(vi)
                active[i] = None
            else:
                del active[i]
    return Graph(m.ids, {v: frozenset(nb) for v, nb in adj.items()})


def validate_model_graph(model: IntervalModel, graph: Graph) -> bool:
    """True iff ``graph`` is exactly the intersection graph of ``model``."""
    if set(model.ids) != set(graph.vertices):
        missing = sorted(set(model.ids) ^ set(graph.vertices))
        raise ValueError(f"id mismatch between model and graph: {missing[:5]}")
    return intersection_graph(model) == graph


# ---------------------------------------------------------------------------
# graph text format


def parse_graph(text: str) -> Graph:
    """Parse the DIMACS-like graph format.

    ``p <n> <m>`` (an optional format word such as ``edge`` is tolerated),
    then ``m`` lines ``e <u> <v>``.  Endpoints are 1-based indices unless a
    ``v <index> <id>`` block names the vertices, in which case either the
    index or the id may be used.  ``c`` and ``#`` lines are comments.
    """
    n = m = None
    names: dict[int, str] = {}
    raw_edges: list[tuple[int, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] in "c#":
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise ModelError("duplicate 'p' line", lineno)
            nums = parts[2:] if len(parts) == 4 else parts[1:]
            if len(nums) != 2:
                raise ModelError("expected 'p <n> <m>'", lineno)
            try:
                n, m = int(nums[0]), int(nums[1])
            except ValueError:
                raise ModelError("non-integer in 'p' line", lineno) from None
        elif n is None:
            raise ModelError("'p' line must come first", lineno)
        elif tag == "v":
            if len(parts) != 3:
                raise ModelError("expected 'v <index> <id>'", lineno)
            try:
                idx = int(parts[1])
            except ValueError:
                raise ModelError("vertex index is not an integer", lineno) from None
            if not 1 <= idx <= n:
                raise ModelError(f"vertex index {idx} out of range", lineno)
            if idx in names:
                raise ModelError(f"vertex index {idx} named twice", lineno)
            names[idx] = parts[2]
        elif tag == "e":
            if len(parts) != 3:
                raise ModelError("expected 'e <u> <v>'", lineno)
            raw_edges.append((lineno, parts[1], parts[2]))
        else:
            raise ModelError(f"unknown line tag {tag!r}", lineno)
    if n is None:
        raise ModelError("missing 'p' line")
    if names and len(names) != n:
        raise ModelError(f"'v' block names {len(names)} of {n} vertices")
    vertices = [names.get(i, str(i)) for i in range(1, n + 1)]
    if len(set(vertices)) != n:
        raise ModelError("duplicate vertex id in 'v' block")
    by_name = {v: v for v in vertices}

    def resolve(tok: str, lineno: int) -> str:
        if tok in by_name:
            return tok
        try:
            i = int(tok)
        except ValueError:
            raise ModelError(f"unknown vertex {tok!r}", lineno) from None
        if not 1 <= i <= n:
            raise ModelError(f"vertex index {i} out of range", lineno)
        return vertices[i - 1]

    edges = []
    for lineno, a, b in raw_edges:
        u, v = resolve(a, lineno), resolve(b, lineno)
        if u == v:
            raise ModelError(f"self-loop at {u!r}", lineno)
        edges.append((u, v))
    if len(edges) != m:
        raise ModelError(f"declared {m} edges but found {len(edges)}")
    return Graph.from_edges(vertices, edges)


def format_graph(graph: Graph) -> str:
    edges = graph.edges()
    lines = [f"p {graph.n} {len(edges)}"]
    lines += [f"v {i} {v}" for i, v in enumerate(graph.vertices, start=1)]
    lines += [f"e {u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"
