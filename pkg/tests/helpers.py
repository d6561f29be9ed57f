"""Corpus builders and independent oracles shared by the test suite.

The oracles here deliberately avoid the package's internal algorithms:
connectivity is computed by fixpoint set expansion instead of low-link
search, and the cut-vertex verdict tries every single vertex removal.
"""

from __future__ import annotations

import random
from typing import Iterator

from spotdisk.whitehead import WhiteheadGraph
from spotdisk.words import ReducedWord


def all_reduced_words(rank: int, max_len: int) -> Iterator[ReducedWord]:
    """Every reduced word of length at most max_len, shortest first."""
    yield ReducedWord(rank, ())
    alphabet = list(range(1, rank + 1)) + list(range(-1, -rank - 1, -1))
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(max_len):
        grown = []
        for tail in frontier:
            for a in alphabet:
                if tail and tail[-1] == -a:
                    continue
                item = tail + (a,)
                grown.append(item)
                yield ReducedWord(rank, item)
        frontier = grown


def random_reduced_word(rng: random.Random, rank: int, length: int) -> ReducedWord:
    """Uniform random reduced word of exactly the given length."""
    alphabet = list(range(1, rank + 1)) + list(range(-1, -rank - 1, -1))
    letters: list[int] = []
    while len(letters) < length:
        a = rng.choice(alphabet)
        if letters and letters[-1] == -a:
            continue
        letters.append(a)
    return ReducedWord(rank, tuple(letters))


def _reachable(start: str | int, verts: set, adjacency: dict) -> set:
    """Fixpoint set expansion, no explicit stack discipline."""
    seen = {start}
    while True:
        grown = set(seen)
        for u in seen:
            grown.update(v for v in adjacency.get(u, ()) if v in verts)
        if grown == seen:
            return seen
        seen = grown


def brute_has_cut_vertex(graph: WhiteheadGraph, vertex_set: str = "full") -> bool:
    """Exhaustive-removal cut-vertex verdict, independent of the package path."""
    adjacency: dict[int, set[int]] = {}
    for (u, v), _ in graph.edges:
        if u != v:
            adjacency.setdefault(u, set()).add(v)
            adjacency.setdefault(v, set()).add(u)
    if vertex_set == "full":
        verts = set(graph.vertices)
    else:
        verts = set(adjacency)
    if graph.edge_count < 2:
        return True
    if not verts:
        return True
    first = min(verts)
    if _reachable(first, verts, adjacency) != verts:
        return True
    for v in verts:
        rest = verts - {v}
        if not rest:
            continue
        if _reachable(min(rest), rest, adjacency) != rest:
            return True
    return False


def tree_has_cycle(vertices: tuple[str, ...], edges: tuple[tuple[str, str], ...]) -> bool:
    """Parent-tracked depth-first cycle detection over an undirected graph."""
    adjacency: dict[str, list[str]] = {v: [] for v in vertices}
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    seen: set[str] = set()
    for root in vertices:
        if root in seen:
            continue
        stack: list[tuple[str, str | None]] = [(root, None)]
        seen.add(root)
        while stack:
            node, parent = stack.pop()
            skipped_parent = False
            for other in adjacency[node]:
                if other == parent and not skipped_parent:
                    skipped_parent = True
                    continue
                if other in seen:
                    return True
                seen.add(other)
                stack.append((other, node))
    return False
