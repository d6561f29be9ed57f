"""Whitehead graphs and the simple piece-count length of reduced words.

The Whitehead graph of a word has one vertex for every basis letter and
every inverse letter, and one edge ``{a, b^-1}`` for each consecutive
letter pair ``a b`` of the word, counted with multiplicity.  A word of
length n therefore produces n - 1 edges.

A piece is called *simple* here when its Whitehead graph is connected
and free of cut vertices on the chosen vertex set; the simple length of
a word is the largest number of consecutive pieces it can be split into
so that every piece is simple, and 0 when no such split exists.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import CapExceeded, RankError
from .words import ReducedWord, subword

__all__ = [
    "WhiteheadGraph",
    "SimpleLengthWitness",
    "DEFAULT_VERTEX_SET",
    "whitehead_graph",
    "has_cut_vertex",
    "simple_length",
    "simple_length_bruteforce",
    "subword_simple_lengths",
    "vertex_label",
    "to_dot",
]

# Cut-vertex convention.  "full" runs the check on all 2g vertices, so a
# word that never uses some basis letter leaves isolated vertices and is
# flagged as having a cut vertex.  Flip to "support" to restrict the
# check to vertices that carry at least one edge.
DEFAULT_VERTEX_SET = "full"

# Degenerate multigraphs with fewer than this many edges always count as
# having a cut vertex (single letters and two-letter words).
MIN_EDGES_FOR_CUT_FREE = 2


def _vkey(v: int) -> tuple[int, int]:
    """Display order: x1..xg, then X1..Xg."""
    return (0, v) if v > 0 else (1, -v)


def vertex_label(v: int) -> str:
    return f"x{v}" if v > 0 else f"X{-v}"


@dataclass(frozen=True)
class WhiteheadGraph:
    """Multigraph on the 2g letter symbols.

    ``edges`` maps canonically ordered unordered vertex pairs to their
    multiplicities; self-loops are representable but never arise from a
    reduced word and never affect connectivity.
    """

    rank: int
    edges: tuple[tuple[tuple[int, int], int], ...]

    def __post_init__(self) -> None:
        if self.rank < 2:
            raise RankError(f"rank must be at least 2, got {self.rank}")
        seen: set[tuple[int, int]] = set()
        for (u, v), mult in self.edges:
            for x in (u, v):
                if x == 0 or abs(x) > self.rank:
                    raise RankError(f"vertex {x} outside rank {self.rank}")
            if _vkey(u) > _vkey(v):
                raise ValueError(f"edge {(u, v)} is not canonically ordered")
            if mult < 1:
                raise ValueError(f"edge {(u, v)} has multiplicity {mult}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge entry {(u, v)}")
            seen.add((u, v))

    @classmethod
    def from_pairs(cls, rank: int, pairs: Iterable[tuple[int, int]]) -> "WhiteheadGraph":
        counts: Counter[tuple[int, int]] = Counter()
        for u, v in pairs:
            if _vkey(u) > _vkey(v):
                u, v = v, u
            counts[(u, v)] += 1
        edges = tuple(sorted(counts.items(), key=lambda e: (_vkey(e[0][0]), _vkey(e[0][1]))))
        return cls(rank, edges)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1)) + tuple(range(-1, -self.rank - 1, -1))

    @property
    def edge_count(self) -> int:
        return sum(mult for _, mult in self.edges)

    def adjacency(self) -> dict[int, set[int]]:
        """Simple-graph adjacency over all 2g vertices, self-loops dropped."""
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for (u, v), _ in self.edges:
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
        return adj


@dataclass(frozen=True)
class SimpleLengthWitness:
    """Simple length together with a maximizing split (empty when 0)."""

    value: int
    pieces: tuple[ReducedWord, ...]


def whitehead_graph(w: ReducedWord) -> WhiteheadGraph:
    """Whitehead graph of a reduced word: edge {a, b^-1} per pair ``a b``.

    >>> g = whitehead_graph(ReducedWord(2, (1, 2)))
    >>> g.edges
    (((1, -2), 1),)
    """
    return WhiteheadGraph.from_pairs(
        w.rank, ((a, -b) for a, b in zip(w.letters, w.letters[1:]))
    )


def _cut_vertex_in(verts: tuple[int, ...], adj: dict[int, set[int]], edge_count: int) -> bool:
    """Cut-vertex verdict for the multigraph restricted to ``verts``.

    True when there are fewer than MIN_EDGES_FOR_CUT_FREE edges, when the
    graph on ``verts`` is disconnected (isolated vertices included), or
    when removing some single vertex disconnects the rest.  Articulation
    testing uses low-links on the underlying simple graph; parallel edges
    never change vertex connectivity.
    """
    if edge_count < MIN_EDGES_FOR_CUT_FREE:
        return True
    n = len(verts)
    if n <= 1:
        return False
    root = verts[0]
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    parent: dict[int, int | None] = {root: None}
    found = False
    counter = 0

    def dfs(u: int) -> None:
        nonlocal counter, found
        disc[u] = low[u] = counter
        counter += 1
        children = 0
        for v in adj[u]:
            if v not in disc:
                parent[v] = u
                children += 1
                dfs(v)
                if low[v] < low[u]:
                    low[u] = low[v]
                if parent[u] is None:
                    if children > 1:
                        found = True
                elif low[v] >= disc[u]:
                    found = True
            elif v != parent[u] and disc[v] < low[u]:
                low[u] = disc[v]

    dfs(root)
    if len(disc) != n:
        return True
    return found


def has_cut_vertex(graph: WhiteheadGraph, vertex_set: str = DEFAULT_VERTEX_SET) -> bool:
    """Whether the graph fails two-connectivity on the chosen vertex set.

    >>> has_cut_vertex(whitehead_graph(ReducedWord(2, (1,))))
    True
    """
    if vertex_set not in ("full", "support"):
        raise ValueError(f"unknown vertex set convention {vertex_set!r}")
    adj = graph.adjacency()
    if vertex_set == "full":
        verts = graph.vertices
    else:
        verts = tuple(v for v in graph.vertices if adj[v])
    return _cut_vertex_in(verts, adj, graph.edge_count)


@lru_cache(maxsize=65536)
def _piece_table(rank: int, letters: tuple[int, ...], vertex_set: str) -> tuple[int, ...]:
    """Per-word table of simple pieces.

    Row i is a bitmask whose bit j is set iff the piece ``letters[i:j]``
    is connected and cut-vertex-free.  Built incrementally: extending a
    piece by one letter adds one edge, and under the "full" convention
    the check is skipped outright until every vertex carries an edge.
    """
    n = len(letters)
    all_verts = tuple(range(1, rank + 1)) + tuple(range(-1, -rank - 1, -1))
    rows = []
    for i in range(n):
        mask = 0
        adj: dict[int, set[int]] = {v: set() for v in all_verts}
        touched = 0
        edge_count = 0
        for j in range(i + 1, n + 1):
            if j - i >= 2:
                u, v = letters[j - 2], -letters[j - 1]
                edge_count += 1
                if v not in adj[u]:
                    if not adj[u]:
                        touched += 1
                    if not adj[v]:
                        touched += 1
                    adj[u].add(v)
                    adj[v].add(u)
            if edge_count >= MIN_EDGES_FOR_CUT_FREE:
                if vertex_set == "full":
                    if touched == 2 * rank and not _cut_vertex_in(all_verts, adj, edge_count):
                        mask |= 1 << j
                else:
                    support = tuple(v for v in all_verts if adj[v])
                    if not _cut_vertex_in(support, adj, edge_count):
                        mask |= 1 << j
        rows.append(mask)
    return tuple(rows)


def simple_length(w: ReducedWord) -> SimpleLengthWitness:
    """Simple length of ``w`` with a maximizing split.

    Dynamic program over split positions: the best piece count for the
    prefix [0, j) extends the best count over all i < j whose final
    piece [i, j) is simple.  Value 0 means no split of any size works;
    the witness pieces concatenate letterwise to ``w`` (a split never
    re-reduces across piece boundaries).
    """
    n = len(w)
    rows = _piece_table(w.rank, w.letters, DEFAULT_VERTEX_SET)
    best = [-1] * (n + 1)
    back = [0] * (n + 1)
    best[0] = 0
    for j in range(1, n + 1):
        top, arg = -1, 0
        for i in range(j):
            if best[i] >= 0 and (rows[i] >> j) & 1 and best[i] + 1 > top:
                top, arg = best[i] + 1, i
        best[j], back[j] = top, arg
    if n == 0 or best[n] <= 0:
        return SimpleLengthWitness(0, ())
    pieces = []
    j = n
    while j > 0:
        i = back[j]
        pieces.append(subword(w, i, j))
        j = i
    return SimpleLengthWitness(best[n], tuple(reversed(pieces)))


def simple_length_bruteforce(w: ReducedWord, cap: int = 14) -> int:
    """Independent check of :func:`simple_length` by explicit enumeration.

    Walks the full tree of 2^(n-1) letterwise splits depth first; a
    branch is dropped as soon as its current piece has a cut vertex,
    which discards only splits that already fail to qualify.  Pieces are
    judged through the public graph constructor rather than the internal
    piece table.
    """
    n = len(w)
    if n > cap:
        raise CapExceeded(f"word length {n} exceeds brute-force cap {cap}")
    memo: dict[tuple[int, int], bool] = {}

    def simple_piece(i: int, j: int) -> bool:
        key = (i, j)
        if key not in memo:
            memo[key] = not has_cut_vertex(whitehead_graph(subword(w, i, j)))
        return memo[key]

    best = 0

    def walk(i: int, count: int) -> None:
        nonlocal best
        if i == n:
            if count > best:
                best = count
            return
        for j in range(i + 1, n + 1):
            if simple_piece(i, j):
                walk(j, count + 1)

    if n:
        walk(0, 0)
    return best


def subword_simple_lengths(w: ReducedWord) -> dict[tuple[int, int], int]:
    """Simple length of every nonempty contiguous subword, keyed (start, stop).

    One pass per left end reuses the shared piece table, so the whole
    table costs O(n^3) rather than n^2 independent runs.
    """
    n = len(w)
    rows = _piece_table(w.rank, w.letters, DEFAULT_VERTEX_SET)
    out: dict[tuple[int, int], int] = {}
    for i in range(n):
        best = [-1] * (n + 1)
        best[i] = 0
        for j in range(i + 1, n + 1):
            top = -1
            for m in range(i, j):
                if best[m] >= 0 and (rows[m] >> j) & 1 and best[m] + 1 > top:
                    top = best[m] + 1
            best[j] = top
            out[(i, j)] = top if top > 0 else 0
    return out


def to_dot(graph: WhiteheadGraph) -> str:
    """DOT rendering: one line per edge multiplicity, deterministic order."""
    lines = ["graph whitehead {"]
    for v in graph.vertices:
        lines.append(f'  "{vertex_label(v)}";')
    for (u, v), mult in graph.edges:
        lines.extend(f'  "{vertex_label(u)}" -- "{vertex_label(v)}";' for _ in range(mult))
    lines.append("}")
    return "\n".join(lines) + "\n"
