"""Per-instance cross-checks of the linear algorithm against the exhaustive oracles."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from . import oracle
from .game import (ALL_MULTI, ALL_SIMPLE, ChaseStrategy, GuardConfig,
                   run_attack_sequence, strategy_from_neocolonization,
                   verify_eternal)
from .greedy import GreedyResult, attacker_sequence, compute_sequences
from .interval_model import Graph, IntervalModel, intersection_graph, normalize
from .neocolonization import Neocolonization, compute_blocks

MAX_PLACEMENTS = 5000


def distance_violations(graph: Graph, result: GreedyResult) -> list[tuple[int, int, int]]:
    """Pairs (i, i+j) with dist(v(A_i), v(A_{i+j})) < j + 1, as (i, j, dist)."""
    bad = []
    A = result.A
    for i, a in enumerate(A):
        dist = graph.bfs_distances(a)
        for j in range(1, len(A) - i):
            d = dist.get(A[i + j])
            if d is not None and d < j + 1:
                bad.append((i + 1, j, d))
    return bad


def partition_problems(model: IntervalModel, graph: Graph, neo: Neocolonization, k: int) -> list[str]:
    problems = []
    seen: dict[str, int] = {}
    for bi, block in enumerate(neo.blocks):
        if not block.interval_ids:
            problems.append(f"block {bi + 1} is empty")
        for v in block.interval_ids:
            if v in seen:
                problems.append(f"{v} in blocks {seen[v] + 1} and {bi + 1}")
            seen[v] = bi
        members = set(block.interval_ids)
        if block.kind == "clique":
            if block.weight != 1 or not graph.is_clique(block.interval_ids):
                problems.append(f"clique block {bi + 1} is not a weight-1 clique")
        else:
            cds = set(block.cds_ids)
            if block.weight != 1 + len(cds) or not cds <= members:
                problems.append(f"cds block {bi + 1} has inconsistent weight or guards")
            if not graph.subgraph(block.cds_ids).is_connected():
                problems.append(f"cds of block {bi + 1} is not connected")
            if any(v not in cds and not (graph.adj[v] & cds) for v in members):
                problems.append(f"cds of block {bi + 1} does not dominate")
            idx = [model.index[v] for v in block.cds_ids]
            lo, hi = model.s[idx], model.t[idx]
            order = np.argsort(lo)
            # the union is one segment: each piece starts before the running max end
            if np.any(lo[order][1:] > np.maximum.accumulate(hi[order])[:-1]):
                problems.append(f"cds of block {bi + 1} is not one segment")
        if block.rover_id not in members:
            problems.append(f"rover of block {bi + 1} lies outside it")
    if set(seen) != set(model.ids):
        problems.append("blocks do not cover every interval")
    if neo.total_weight != k:
        problems.append(f"total weight {neo.total_weight} != k = {k}")
    return problems


def placements(graph: Graph, guards: int, cap: int = MAX_PLACEMENTS, seed: int = 0):
    """Distinct-vertex placements of ``guards`` guards; sampled beyond ``cap``."""
    vs = sorted(graph.vertices)
    if guards > len(vs):
        return []
    if comb(len(vs), guards) <= cap:
        return [GuardConfig(c) for c in combinations(vs, guards)]
    rng = np.random.default_rng(seed)
    return [GuardConfig(tuple(rng.choice(vs, size=guards, replace=False))) for _ in range(cap)]


@dataclass
class InstanceReport:
    n: int
    k: int
    checks: dict[str, bool] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def check_instance(model: IntervalModel, budget: int = 1_000_000,
                   eternal_limit: int = oracle.ETERNAL_LIMIT,
                   theta_c_limit: int = oracle.THETA_C_LIMIT) -> InstanceReport:
    model = model if model.canonical else normalize(model)
    graph = intersection_graph(model)
    result = compute_sequences(model)
    neo = compute_blocks(model, result)
    k = result.k
    rep = InstanceReport(model.n, k)

    rep.checks["distance"] = not distance_violations(graph, result)
    problems = partition_problems(model, graph, neo, k)
    rep.checks["partition"] = not problems
    rep.notes += problems

    strategy, initial = strategy_from_neocolonization(neo, graph)
    ver = verify_eternal(graph, strategy, initial, ALL_SIMPLE, budget=budget)
    if ver.status == "budget-exceeded":
        raise oracle.LimitExceeded(f"verify_eternal exceeded {budget} states")
    rep.checks["strategy-eternal"] = ver.eternal
    if not ver.eternal:
        rep.notes.append(f"strategy defeated by {ver.witness}: {ver.reason}")

    if k:
        attacks = attacker_sequence(result)
        chase = ChaseStrategy(graph)
        survivors = [
            cfg for cfg in placements(graph, k - 1)
            if run_attack_sequence(graph, chase, cfg, ALL_SIMPLE, attacks).repelled
        ]
        rep.checks["attack-defeats-k-1"] = not survivors
        if survivors:
            rep.notes.append(f"k-1 placement survived the attack schedule: {survivors[0].positions}")

    if model.n <= eternal_limit:
        for params in (ALL_SIMPLE, ALL_MULTI):
            exact = oracle.eternal_domination_number_exact(graph, params, limit=eternal_limit)
            rep.checks[f"oracle-{params.label}"] = exact == k
            if exact != k:
                rep.notes.append(f"{params.label}: oracle {exact} != greedy {k}")
    else:
        rep.notes.append("eternal oracle skipped (n above limit)")
    if model.n <= theta_c_limit:
        tc = oracle.clique_connected_cover_number(graph, limit=theta_c_limit)
        rep.checks["oracle-theta_c"] = tc == k
        if tc != k:
            rep.notes.append(f"theta_c {tc} != greedy {k}")
    else:
        rep.notes.append("theta_c oracle skipped (n above limit)")
    return rep

