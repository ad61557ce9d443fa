import numpy as np
import pytest

from eternaldom import (IntervalModel, attacker_sequence, compute_sequences,
                        eternal_domination_number, intersection_graph,
                        normalize, random_model)
from eternaldom import _kernels
from eternaldom.crosscheck import distance_violations

from conftest import fid
from oracles import rule_sequences, triples

S15_A = [(0, 3), (6, 7), (8, 9), (12, 13), (18, 19), (22, 23), (24, 25), (28, 31)]
S15_D = [(0, 3), (6, 7), (4, 11), (10, 15), (18, 19), (22, 23), (20, 27), (28, 31)]

BACKENDS = [b for b in _kernels.BACKENDS if b != "numba" or _kernels.HAVE_NUMBA]


def p3():
    return normalize(IntervalModel.from_intervals([("a", 1, 4), ("b", 3, 6), ("c", 5, 8)]))


@pytest.mark.parametrize("backend", BACKENDS)
def test_sample15(fig_model, backend):
    r = compute_sequences(fig_model, backend=backend)
    assert r.k == 8
    assert list(r.A) == [fid(*x) for x in S15_A]
    assert list(r.D) == [fid(*x) for x in S15_D]
    assert r.anchors == (0, 1, 2, 5, 6, 8, 9)
    assert attacker_sequence(r) == [fid(*x) for x in S15_A]


def test_single_interval():
    r = compute_sequences(normalize(IntervalModel.from_intervals([("x", 0, 1)])))
    assert (r.k, r.A, r.D, r.anchors) == (1, ("x",), ("x",), (0, 1, 2))


def test_p3_trace():
    r = compute_sequences(p3())
    assert (r.k, r.A, r.D, r.anchors) == (2, ("a", "c"), ("a", "c"), (0, 1, 2, 3))
    assert r.B == (None, "b")
    assert attacker_sequence(r) == ["a", "c"]


def test_empty():
    r = compute_sequences(normalize(IntervalModel.from_intervals([])))
    assert r.k == 0 and r.anchors == (0, 1)
    assert attacker_sequence(r) == []


def test_clique_gives_one():
    m = normalize(IntervalModel.from_intervals([("a", 1, 10), ("b", 2, 9), ("c", 3, 12), ("d", 4, 5)]))
    assert intersection_graph(m).is_clique()
    assert eternal_domination_number(m) == 1


def test_rejects_non_canonical(fig_raw):
    with pytest.raises(ValueError, match="canonical"):
        compute_sequences(fig_raw)


@pytest.mark.parametrize("kind", ["general", "proper"])
def test_matches_rule_definitions(kind):
    for n in range(0, 25):
        for seed in range(8):
            m = random_model(n, seed, kind)
            A, B, D = rule_sequences(triples(m))
            for backend in BACKENDS:
                r = compute_sequences(m, backend=backend)
                assert (list(r.A), list(r.B), list(r.D)) == (A, B, D), (n, seed, backend)


def test_backends_agree_on_large_models():
    for kind in ("general", "proper"):
        m = random_model(20_000, 5, kind)
        results = [compute_sequences(m, backend=b) for b in BACKENDS]
        assert all(r == results[0] for r in results)


def test_structural_invariants():
    for seed in range(60):
        m = random_model(15, seed, "general" if seed % 2 else "proper")
        r = compute_sequences(m)
        s, t = m.s, m.t
        td = [r.td(i) for i in range(r.k + 1)]
        assert all(x < y for x, y in zip(td[1:], td[2:]))
        assert not np.any(s > td[-1])  # maximality
        for i in range(1, r.k):
            a, b = r.a_idx[i], r.b_idx[i]
            assert s[a] > td[i]
            assert not np.any((s > td[i]) & (t < t[a]))
            assert not np.any((s < td[i]) & (t > t[b]))
            assert r.D[i] in (r.A[i], r.B[i])
        assert r.A[0] == r.D[0]
        assert list(r.anchors) == sorted(set(r.anchors))
        assert r.anchors[0] == 0 and r.anchors[1] == 1 and r.anchors[-1] == r.k + 1


def test_distance_property():
    for seed in range(60):
        m = random_model(14, seed)
        r = compute_sequences(m)
        assert distance_violations(intersection_graph(m), r) == []


def test_env_flag_selects_backend(monkeypatch):
    monkeypatch.setenv("ETERNALDOM_BACKEND", "numpy")
    assert _kernels.default_backend() == "numpy"
    monkeypatch.setenv("ETERNALDOM_BACKEND", "fortran")
    with pytest.raises(ValueError):
        _kernels.default_backend()
    monkeypatch.delenv("ETERNALDOM_BACKEND")
    assert _kernels.default_backend() == ("numba" if _kernels.HAVE_NUMBA else "numpy")
