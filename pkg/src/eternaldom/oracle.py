"""Exhaustive graph and game parameters for small graphs.

Everything here is brute force over bitmasks and is meant as ground truth for
the linear-time interval algorithm, not as a scalable solver.  Each function
takes a ``limit`` on the vertex count and raises :class:`LimitExceeded` above
it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product

from .game import ALL_MULTI, ALL_SIMPLE, SINGLE_SIMPLE, GameParams
from .interval_model import Graph

DEFAULT_LIMIT = 16
THETA_C_LIMIT = 10
ETERNAL_LIMIT = 8


class LimitExceeded(RuntimeError):
    pass


class _Masks:
    """Bitmask view of a graph: vertex ``i`` is bit ``i``."""

    def __init__(self, graph: Graph):
        self.vertices = graph.vertices
        self.n = len(graph.vertices)
        pos = {v: i for i, v in enumerate(graph.vertices)}
        self.nbr = [0] * self.n
        for v, nb in graph.adj.items():
            m = 0
            for w in nb:
                m |= 1 << pos[w]
            self.nbr[pos[v]] = m
        self.closed = [self.nbr[i] | (1 << i) for i in range(self.n)]
        self.full = (1 << self.n) - 1

    def dominates(self, mask: int, within: int | None = None) -> bool:
        within = self.full if within is None else within
        cover = 0
        m = mask
        while m:
            low = m & -m
            cover |= self.closed[low.bit_length() - 1]
            m ^= low
        return cover & within == within

    def connected(self, mask: int) -> bool:
        if not mask:
            return True
        seen = mask & -mask
        frontier = seen
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = self.nbr[low.bit_length() - 1] & mask & ~seen
            seen |= new
            frontier |= new
        return seen == mask

    def is_clique(self, mask: int) -> bool:
        m = mask
        while m:
            low = m & -m
            i = low.bit_length() - 1
            if (mask & ~low) & ~self.nbr[i]:
                return False
            m ^= low
        return True


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _check(graph: Graph, limit: int, what: str):
    if graph.n > limit:
        raise LimitExceeded(f"{what}: graph has {graph.n} vertices, limit is {limit}")


# ---------------------------------------------------------------------------
# classic parameters


def domination_number(graph: Graph, limit: int = DEFAULT_LIMIT) -> int:
    _check(graph, limit, "domination_number")
    g = _Masks(graph)
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            if g.dominates(_mask(combo)):
                return size
    return g.n  # unreachable: V dominates itself


def _min_connected_dominating(g: _Masks, within: int) -> int:
    verts = list(_bits(within))
    for size in range(1, len(verts) + 1):
        for combo in combinations(verts, size):
            mask = _mask(combo)
            if g.connected(mask) and g.dominates(mask, within):
                return size
    raise ValueError("no connected dominating set (disconnected vertex set)")


def connected_domination_number(graph: Graph, limit: int = DEFAULT_LIMIT) -> int:
    """Size of a smallest connected dominating set; the graph must be connected and nonempty."""
    _check(graph, limit, "connected_domination_number")
    if graph.n == 0 or not graph.is_connected():
        raise ValueError("connected domination number needs a nonempty connected graph")
    g = _Masks(graph)
    return _min_connected_dominating(g, g.full)


def independence_number(graph: Graph, limit: int = DEFAULT_LIMIT) -> int:
    _check(graph, limit, "independence_number")
    g = _Masks(graph)

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if not mask:
            return 0
        i = (mask & -mask).bit_length() - 1
        skip = best(mask & ~(1 << i))
        take = 1 + best(mask & ~g.closed[i])
        return max(skip, take)

    return best(g.full)


def _maximal_cliques_with(g: _Masks, v: int, mask: int):
    """Cliques of G[mask] containing ``v`` that are maximal within ``mask``."""
    out = []

    def expand(clique: int, cand: int, excl: int):
        if not cand and not excl:
            out.append(clique)
            return
        for u in list(_bits(cand)):
            bit = 1 << u
            expand(clique | bit, cand & g.nbr[u], excl & g.nbr[u])
            cand &= ~bit
            excl |= bit

    expand(1 << v, g.nbr[v] & mask, 0)
    return out


def clique_cover_number(graph: Graph, limit: int = DEFAULT_LIMIT) -> int:
    """Minimum number of cliques partitioning V."""
    _check(graph, limit, "clique_cover_number")
    g = _Masks(graph)

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if not mask:
            return 0
        v = (mask & -mask).bit_length() - 1
        # a clique in a cover may always be grown to a maximal one within
        # the remaining vertices without increasing the count
        return 1 + min(best(mask & ~c) for c in _maximal_cliques_with(g, v, mask))

    return best(g.full)


def clique_connected_cover_number(graph: Graph, limit: int = THETA_C_LIMIT) -> int:
    """Minimum weight of a partition of V into connected parts.

    A part weighs 1 if it is a clique and 1 + its connected domination
    number otherwise.
    """
    _check(graph, limit, "clique_connected_cover_number")
    g = _Masks(graph)

    @lru_cache(maxsize=None)
    def part_weight(mask: int) -> int:
        if g.is_clique(mask):
            return 1
        return 1 + _min_connected_dominating(g, mask)

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if not mask:
            return 0
        low = mask & -mask
        rest = mask ^ low
        result = None
        sub = rest
        while True:
            part = sub | low
            if g.connected(part):
                value = part_weight(part) + best(mask & ~part)
                if result is None or value < result:
                    result = value
            if sub == 0:
                break
            sub = (sub - 1) & rest
        return result

    return best(g.full)


# ---------------------------------------------------------------------------
# eternal domination by safety-game fixpoint


def _configs(n: int, m: int, params: GameParams):
    if params.occupancy == "simple":
        return list(combinations(range(n), m))
    return list(combinations_with_replacement(range(n), m))


def _successors(g: _Masks, config: tuple[int, ...], params: GameParams, simple: bool):
    out = set()
    if params.move_mode == "all":
        options = [[i, *_bits(g.nbr[i])] for i in config]
        for combo in product(*options):
            nxt = tuple(sorted(combo))
            if simple and len(set(nxt)) != len(nxt):
                continue
            out.add(nxt)
    else:
        out.add(config)
        for j, i in enumerate(config):
            for w in _bits(g.nbr[i]):
                nxt = tuple(sorted(config[:j] + (w,) + config[j + 1:]))
                if simple and len(set(nxt)) != len(nxt):
                    continue
                out.add(nxt)
    return out


def winning_configs(graph: Graph, params: GameParams, guards: int,
                    limit: int = ETERNAL_LIMIT) -> set[tuple[str, ...]]:
    """Greatest fixpoint of guard configurations from which every attack can be answered.

    A configuration survives a round when, for each vertex, some legal
    one-turn move leads to a surviving configuration occupying that vertex.
    Configurations are returned as sorted tuples of vertex ids.
    """
    _check(graph, limit, "winning_configs")
    g = _Masks(graph)
    n = g.n
    if n == 0:
        return {()} if guards == 0 else set()
    simple = params.occupancy == "simple"
    if simple and guards > n:
        return set()
    configs = _configs(n, guards, params)
    index = {c: i for i, c in enumerate(configs)}
    occ = [_mask(c) for c in configs]
    succ = [[index[x] for x in _successors(g, c, params, simple)] for c in configs]

    alive = [True] * len(configs)
    changed = True
    while changed:
        changed = False
        for ci in range(len(configs)):
            if not alive[ci]:
                continue
            cover = 0
            for x in succ[ci]:
                if alive[x]:
                    cover |= occ[x]
            if cover != g.full:
                alive[ci] = False
                changed = True
    names = graph.vertices
    return {tuple(names[v] for v in configs[ci]) for ci in range(len(configs)) if alive[ci]}


def eternal_domination_number_exact(graph: Graph, params: GameParams,
                                    limit: int = ETERNAL_LIMIT,
                                    max_guards: int | None = None) -> int:
    """Smallest guard count with a nonempty winning fixpoint.

    Search starts at the domination number when all guards move and at the
    independence number when only one does.
    """
    _check(graph, limit, "eternal_domination_number_exact")
    if graph.n == 0:
        return 0
    top = graph.n if max_guards is None else min(max_guards, graph.n)
    start = domination_number(graph) if params.move_mode == "all" else independence_number(graph)
    for m in range(start, top + 1):
        if winning_configs(graph, params, m, limit=limit):
            return m
    raise LimitExceeded(f"no winning configuration with at most {top} guards")


# ---------------------------------------------------------------------------
# aggregate report


@dataclass
class ParameterReport:
    gamma: int
    gamma_c: int | None
    alpha: int
    theta: int
    theta_c: int
    eternal: dict[GameParams, int] = field(default_factory=dict)
    chains: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.chains.values())

    def as_dict(self) -> dict:
        return {
            "gamma": self.gamma,
            "gamma_c": self.gamma_c,
            "alpha": self.alpha,
            "theta": self.theta,
            "theta_c": self.theta_c,
            "eternal": {p.label: v for p, v in self.eternal.items()},
            "chains": dict(self.chains),
        }


def bound_chains(gamma, gamma_c, alpha, theta, theta_c, eternal) -> dict[str, bool]:
    nn, n1, one = eternal[ALL_MULTI], eternal[ALL_SIMPLE], eternal[SINGLE_SIMPLE]
    upper = theta if gamma_c is None else min(theta, gamma_c + 1)
    chains = {
        "gamma<=all-multi<=all-simple<=alpha<=single-simple<=theta":
            gamma <= nn <= n1 <= alpha <= one <= theta,
        "all-simple<=theta_c<=min(theta,gamma_c+1)": n1 <= theta_c <= upper,
    }
    if gamma_c is not None:
        chains["all-multi<=all-simple<=1+gamma_c"] = nn <= n1 <= 1 + gamma_c
    return chains


def parameter_report(graph: Graph, limit: int = ETERNAL_LIMIT,
                     theta_c_limit: int = THETA_C_LIMIT) -> ParameterReport:
    gamma = domination_number(graph)
    gamma_c = None
    if graph.n and graph.is_connected():
        gamma_c = connected_domination_number(graph)
    alpha = independence_number(graph)
    theta = clique_cover_number(graph)
    theta_c = clique_connected_cover_number(graph, limit=theta_c_limit)
    eternal = {p: eternal_domination_number_exact(graph, p, limit=limit)
               for p in (ALL_MULTI, ALL_SIMPLE, SINGLE_SIMPLE)}
    return ParameterReport(gamma, gamma_c, alpha, theta, theta_c, eternal,
                           bound_chains(gamma, gamma_c, alpha, theta, theta_c, eternal))
