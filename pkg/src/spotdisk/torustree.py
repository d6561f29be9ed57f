"""Finite balls in the disk graph of a solid torus with two marked points.

That graph is a tree: the non-separating disks span a tree of countable
valency, and every separating disk hangs off exactly one non-separating
disk as a leaf.  Balls are generated abstractly with a uniform valency
truncation and path-from-root labels.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["TorusDiskBall", "build_ball", "is_tree", "to_dot"]

ROOT = "d"


@dataclass(frozen=True)
class TorusDiskBall:
    """Truncated ball: a uniform tree of non-separating disks with
    separating leaves attached to every tree vertex."""

    radius: int
    valency_cap: int
    leaf_count: int
    nonseparating: tuple[str, ...]
    separating: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.nonseparating + self.separating


def build_ball(radius: int, tree_valency: int, leaf_count: int) -> TorusDiskBall:
    """Breadth-first ball of the given radius.

    Every non-separating vertex gets ``tree_valency`` tree children (a
    truncation of countably many) and ``leaf_count`` separating leaves.

    >>> ball = build_ball(1, 3, 0)
    >>> len(ball.vertices), len(ball.edges)
    (4, 3)
    """
    if radius < 0:
        raise ValueError(f"radius must be nonnegative, got {radius}")
    if tree_valency < 1:
        raise ValueError(f"tree valency must be at least 1, got {tree_valency}")
    if leaf_count < 0:
        raise ValueError(f"leaf count must be nonnegative, got {leaf_count}")
    nonsep = [ROOT]
    edges: list[tuple[str, str]] = []
    frontier = [ROOT]
    for _ in range(radius):
        grown: list[str] = []
        for parent in frontier:
            for i in range(tree_valency):
                child = f"{parent}.{i}"
                nonsep.append(child)
                edges.append((parent, child))
                grown.append(child)
        frontier = grown
    separating: list[str] = []
    for parent in nonsep:
        for j in range(leaf_count):
            leaf = f"{parent}.s{j}"
            separating.append(leaf)
            edges.append((parent, leaf))
    return TorusDiskBall(
        radius,
        tree_valency,
        leaf_count,
        tuple(nonsep),
        tuple(separating),
        tuple(edges),
    )


def is_tree(ball: TorusDiskBall) -> bool:
    """Connected with exactly |V| - 1 edges (hence acyclic)."""
    verts = ball.vertices
    if not verts:
        return False
    if len(ball.edges) != len(verts) - 1:
        return False
    adjacency: dict[str, list[str]] = {v: [] for v in verts}
    for u, v in ball.edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        u = stack.pop()
        for v in adjacency[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == len(verts)


def to_dot(ball: TorusDiskBall) -> str:
    """DOT rendering; separating leaves are drawn as boxes."""
    lines = ["graph torusball {"]
    for v in ball.nonseparating:
        lines.append(f'  "{v}" [shape=circle];')
    for v in ball.separating:
        lines.append(f'  "{v}" [shape=box];')
    for u, v in ball.edges:
        lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
