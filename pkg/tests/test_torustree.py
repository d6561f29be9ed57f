import pytest
from helpers import tree_has_cycle

from spotdisk.torustree import build_ball, is_tree, to_dot


def test_radius_zero_is_a_single_vertex():
    ball = build_ball(0, 1, 0)
    assert len(ball.vertices) == 1
    assert ball.edges == ()
    assert is_tree(ball)


def test_radius_one_star():
    ball = build_ball(1, 3, 0)
    assert len(ball.vertices) == 4
    assert len(ball.edges) == 3
    assert is_tree(ball)


def test_tree_counts_and_cycle_freeness():
    ball = build_ball(2, 3, 2)
    assert len(ball.nonseparating) == 1 + 3 + 9
    assert len(ball.separating) == 13 * 2
    assert len(ball.edges) == len(ball.vertices) - 1
    assert not tree_has_cycle(ball.vertices, ball.edges)
    assert is_tree(ball)


def test_separating_leaves_have_degree_one():
    ball = build_ball(2, 2, 3)
    degree = {v: 0 for v in ball.vertices}
    for u, v in ball.edges:
        degree[u] += 1
        degree[v] += 1
    for leaf in ball.separating:
        assert degree[leaf] == 1


def test_validation():
    with pytest.raises(ValueError):
        build_ball(-1, 1, 0)
    with pytest.raises(ValueError):
        build_ball(0, 0, 0)
    with pytest.raises(ValueError):
        build_ball(0, 1, -2)


def test_dot_marks_separating_leaves():
    ball = build_ball(1, 1, 1)
    text = to_dot(ball)
    assert '"d" [shape=circle];' in text
    assert '"d.s0" [shape=box];' in text
    assert '"d" -- "d.0";' in text
    assert text.startswith("graph torusball {")


def test_is_tree_detects_broken_graphs():
    ball = build_ball(1, 2, 0)
    broken = type(ball)(
        ball.radius,
        ball.valency_cap,
        ball.leaf_count,
        ball.nonseparating,
        ball.separating,
        ball.edges + (("d.0", "d.1"),),
    )
    assert not is_tree(broken)
