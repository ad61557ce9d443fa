import pytest

from eternaldom import (IntervalModel, compute_blocks, compute_sequences,
                        eternal_dominating_set, intersection_graph, normalize,
                        random_model, weight)
from eternaldom.crosscheck import partition_problems
from eternaldom.oracle import clique_connected_cover_number

from conftest import fid


def solve(model):
    r = compute_sequences(model)
    return r, compute_blocks(model, r)


def test_sample15_blocks(fig_model, fig_graph):
    r, neo = solve(fig_model)
    assert [len(b) for b in neo.blocks] == [2, 6, 2, 4, 1]
    assert [b.kind for b in neo.blocks] == ["clique", "cds", "clique", "cds", "clique"]
    assert [b.weight for b in neo.blocks] == [1, 3, 1, 2, 1]
    assert neo.total_weight == 8
    b2, b4 = neo.blocks[1], neo.blocks[3]
    assert b2.cds_ids == (fid(4, 11), fid(10, 15)) and b2.rover_id == fid(6, 7)
    assert b4.cds_ids == (fid(20, 27),) and b4.rover_id == fid(22, 23)
    assert set(neo.blocks[0].interval_ids) == {fid(0, 3), fid(2, 5)}
    assert set(neo.blocks[2].interval_ids) == {fid(16, 21), fid(18, 19)}
    assert partition_problems(fig_model, fig_graph, neo, r.k) == []


def test_sample15_weights_from_scratch(fig_model, fig_graph):
    _, neo = solve(fig_model)
    assert [weight(b, fig_graph) for b in neo.blocks] == [b.weight for b in neo.blocks]
    assert weight((fid(16, 21), fid(18, 19)), fig_graph) == 1
    assert weight((fid(20, 27), fid(22, 23), fid(24, 25), fid(26, 29)), fig_graph) == 2


def test_sample15_eternal_set(fig_model):
    r, _ = solve(fig_model)
    expected = {fid(*x) for x in [(0, 3), (6, 7), (4, 11), (10, 15), (18, 19), (22, 23), (20, 27), (28, 31)]}
    assert eternal_dominating_set(r) == expected


def test_single_interval():
    m = normalize(IntervalModel.from_intervals([("x", 0, 1)]))
    _, neo = solve(m)
    assert len(neo.blocks) == 1
    assert neo.blocks[0].kind == "clique" and neo.blocks[0].weight == 1


def test_p3():
    m = normalize(IntervalModel.from_intervals([("a", 1, 4), ("b", 3, 6), ("c", 5, 8)]))
    r, neo = solve(m)
    assert [set(b.interval_ids) for b in neo.blocks] == [{"a", "b"}, {"c"}]
    assert [b.kind for b in neo.blocks] == ["clique", "clique"]
    assert neo.total_weight == 2
    assert eternal_dominating_set(r) == {"a", "c"}
    assert clique_connected_cover_number(intersection_graph(m)) == 2


def test_empty():
    r, neo = solve(normalize(IntervalModel.from_intervals([])))
    assert neo.blocks == () and eternal_dominating_set(r) == frozenset()


def test_weight_of_disconnected_set(fig_graph):
    with pytest.raises(ValueError):
        weight((fid(0, 3), fid(28, 31)), fig_graph)


def test_single_vertex_weight(fig_graph):
    assert weight((fid(28, 31),), fig_graph) == 1


def test_rejects_foreign_result(fig_model):
    r = compute_sequences(random_model(15, 0))
    with pytest.raises(ValueError):
        compute_blocks(fig_model, r)


def test_random_models_partition_and_weights():
    for seed in range(80):
        m = random_model(9, seed, "general" if seed % 3 else "proper")
        g = intersection_graph(m)
        r, neo = solve(m)
        assert partition_problems(m, g, neo, r.k) == []
        assert len(eternal_dominating_set(r)) == r.k
        for b in neo.blocks:
            assert weight(b, g) == b.weight


@pytest.mark.parametrize("backend", ["numba", "numpy"])
def test_backends_agree(backend):
    m = random_model(5000, 3, "proper")
    r = compute_sequences(m)
    assert compute_blocks(m, r, backend=backend) == compute_blocks(m, r, backend="numpy")
