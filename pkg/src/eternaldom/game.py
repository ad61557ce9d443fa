"""Eternal domination game: rules, defender strategies and exhaustive checking.

Guards sit on vertices.  Each turn the attacker names a vertex, then the
defender relocates guards along edges (one guard, or all of them, depending
on :class:`GameParams`).  The attack is repelled when a guard stands on the
attacked vertex afterwards.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field, replace
from typing import Callable, Hashable, Sequence

from .interval_model import Graph

Move = tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class GameParams:
    move_mode: str = "all"  # "single" (x = 1) or "all" (x = n)
    occupancy: str = "simple"  # "simple" (y = 1) or "multi" (y = n)

    def __post_init__(self):
        if self.move_mode not in ("single", "all"):
            raise ValueError(f"move_mode must be 'single' or 'all', got {self.move_mode!r}")
        if self.occupancy not in ("simple", "multi"):
            raise ValueError(f"occupancy must be 'simple' or 'multi', got {self.occupancy!r}")

    @property
    def label(self) -> str:
        return f"{self.move_mode}-{self.occupancy}"

    @classmethod
    def from_label(cls, label: str) -> GameParams:
        mode, _, occ = label.partition("-")
        return cls(mode, occ)


ALL_MULTI = GameParams("all", "multi")
ALL_SIMPLE = GameParams("all", "simple")
SINGLE_SIMPLE = GameParams("single", "simple")
SINGLE_MULTI = GameParams("single", "multi")


@dataclass(frozen=True)
class GuardConfig:
    positions: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "positions", tuple(sorted(self.positions)))

    def __len__(self):
        return len(self.positions)

    def __contains__(self, v):
        return v in self.positions

    def counts(self) -> Counter:
        return Counter(self.positions)

    def is_legal(self, graph: Graph, params: GameParams) -> bool:
        if any(v not in graph for v in self.positions):
            return False
        return params.occupancy == "multi" or len(set(self.positions)) == len(self.positions)


@dataclass(frozen=True)
class GameState:
    graph: Graph = field(repr=False)
    params: GameParams
    config: GuardConfig
    turn: int = 0


class Rejected(Exception):
    """An attack that the defender's move failed to handle."""

    tag = "rejected"


class IllegalMove(Rejected):
    tag = "illegal-move"


class NotRepelled(Rejected):
    tag = "not-repelled"


def apply_turn(state: GameState, attack: str, move: Sequence[tuple[str, str]]) -> GameState:
    """Play one turn; raise :class:`IllegalMove` or :class:`NotRepelled` on failure."""
    graph, params = state.graph, state.params
    if attack not in graph:
        raise ValueError(f"attack on unknown vertex {attack!r}")
    counts = state.config.counts()
    used: Counter = Counter()
    moved = 0
    for src, dst in move:
        if dst not in graph:
            raise IllegalMove(f"destination {dst!r} is not a vertex")
        used[src] += 1
        if used[src] > counts.get(src, 0):
            raise IllegalMove(f"no guard left to move from {src!r}")
        if src != dst:
            if dst not in graph.adj[src]:
                raise IllegalMove(f"{src!r} and {dst!r} are not adjacent")
            moved += 1
    if params.move_mode == "single" and moved > 1:
        raise IllegalMove(f"{moved} guards moved in a single-guard game")
    after = counts.copy()
    for src, dst in move:
        after[src] -= 1
        after[dst] += 1
    positions = tuple(after.elements())
    if params.occupancy == "simple" and any(c > 1 for c in after.values()):
        raise IllegalMove("two guards on one vertex in a simple-occupancy game")
    if after[attack] <= 0:
        raise NotRepelled(f"no guard on {attack!r} after the move")
    return replace(state, config=GuardConfig(positions), turn=state.turn + 1)


def _lex_shortest_path(graph: Graph, source: str, target: str, interior: set[str]) -> list[str] | None:
    """Lexicographically smallest shortest path whose inner vertices lie in ``interior``."""
    if source == target:
        return [source]
    dist = {target: 0}
    queue = deque([target])
    while queue:
        u = queue.popleft()
        for w in graph.adj[u]:
            if w not in dist and w in interior:
                dist[w] = dist[u] + 1
                queue.append(w)
    steps = [w for w in graph.adj[source] if w in dist]
    if not steps:
        return None
    best = min(dist[w] for w in steps)
    path = [source, min(w for w in steps if dist[w] == best)]
    while path[-1] != target:
        u = path[-1]
        path.append(min(w for w in graph.adj[u] if dist.get(w) == dist[u] - 1))
    return path


class DefenderStrategy:
    """Deterministic defender.

    ``respond(config, memory, attack)`` returns ``(move, new_memory)`` where
    ``memory`` is any hashable bookkeeping the strategy needs.
    """

    initial_memory: Hashable = None

    def respond(self, config: GuardConfig, memory, attack: str) -> tuple[Move, Hashable]:
        raise NotImplementedError


class ChaseStrategy(DefenderStrategy):
    """Send the nearest guard one step along a shortest path toward the attack."""

    def __init__(self, graph: Graph):
        self.graph = graph

    def respond(self, config, memory, attack):
        if attack in config:
            return (), memory
        dist = self.graph.bfs_distances(attack)
        reachable = [g for g in set(config.positions) if g in dist]
        if not reachable:
            return (), memory
        guard = min(reachable, key=lambda g: (dist[g], g))
        path = _lex_shortest_path(self.graph, guard, attack, set(self.graph.vertices))
        return ((guard, path[1]),), memory


class NeocolonizationStrategy(DefenderStrategy):
    """Per-block defence derived from a neocolonization.

    Clique blocks keep one guard that jumps to whichever member is attacked.
    Other blocks keep one stationary guard on each vertex of their connected
    dominating set plus a rover; an attack on an empty vertex shifts every
    guard on the lexicographically smallest shortest rover-to-target path
    (inner vertices in the dominating set) one step forward.  ``memory`` is
    the tuple of rover positions, one per block.
    """

    def __init__(self, neo, graph: Graph):
        self.graph = graph
        self.blocks = neo.blocks
        self.block_of = neo.block_of()
        self.cds = [set(b.cds_ids) for b in self.blocks]
        self.initial_memory = tuple(b.rover_id for b in self.blocks)
        self.initial = GuardConfig(tuple(v for b in self.blocks for v in b.guards))

    def respond(self, config, memory, attack):
        if attack in config:
            return (), memory
        b = self.block_of[attack]
        rover = memory[b]
        if self.blocks[b].kind == "clique":
            move = ((rover, attack),)
        else:
            path = _lex_shortest_path(self.graph, rover, attack, self.cds[b])
            if path is None:
                return (), memory
            move = tuple(zip(path, path[1:]))
        return move, memory[:b] + (attack,) + memory[b + 1:]


def strategy_from_neocolonization(neo, graph: Graph) -> tuple[NeocolonizationStrategy, GuardConfig]:
    strategy = NeocolonizationStrategy(neo, graph)
    return strategy, strategy.initial


# ---------------------------------------------------------------------------
# playing and verifying


def format_turn(turn: int, attack: str, move: Move, status: str) -> str:
    moves = ",".join(f"{a}->{b}" for a, b in move) or "-"
    return f"turn {turn} attack {attack} move {moves} status {status}"


@dataclass
class RunResult:
    status: str  # "all-repelled" or "defeated"
    turn: int | None = None
    reason: str | None = None
    trace: list[str] = field(default_factory=list)

    @property
    def repelled(self) -> bool:
        return self.status == "all-repelled"


def run_attack_sequence(graph: Graph, strategy: DefenderStrategy, initial: GuardConfig,
                        params: GameParams, attacks: Sequence[str], memory=None) -> RunResult:
    """Play ``attacks`` in order; report the first turn (1-based) that fails."""
    if not attacks:
        raise ValueError("attack sequence must be nonempty")
    state = GameState(graph, params, initial)
    memory = strategy.initial_memory if memory is None else memory
    trace = []
    for turn, attack in enumerate(attacks, start=1):
        move, new_memory = strategy.respond(state.config, memory, attack)
        try:
            state = apply_turn(state, attack, move)
        except Rejected as exc:
            trace.append(format_turn(turn, attack, move, "defeated"))
            return RunResult("defeated", turn, f"{exc.tag}: {exc}", trace)
        memory = new_memory
        trace.append(format_turn(turn, attack, move, "repelled"))
    return RunResult("all-repelled", None, None, trace)


@dataclass
class VerifyResult:
    status: str  # "eternal", "defeated" or "budget-exceeded"
    states: int
    witness: list[str] | None = None
    reason: str | None = None
    frontier: int = 0

    @property
    def eternal(self) -> bool:
        return self.status == "eternal"


def verify_eternal(graph: Graph, strategy: DefenderStrategy, initial: GuardConfig,
                   params: GameParams, budget: int = 1_000_000,
                   observer: Callable[[GuardConfig, Hashable], None] | None = None) -> VerifyResult:
    """Explore every state the strategy can reach and try every attack in each.

    States are (sorted guard positions, strategy memory).  Returns ``defeated``
    with a shortest witness attack sequence if some attack is not handled.
    ``observer`` is called once per explored state.
    """
    if not initial.is_legal(graph, params):
        raise ValueError("initial configuration is not legal for these parameters")
    start = (initial.positions, strategy.initial_memory)
    parent: dict = {start: None}
    queue = deque([start])
    vertices = sorted(graph.vertices)

    def witness(key, last):
        seq = [last]
        while parent[key] is not None:
            key, attack = parent[key]
            seq.append(attack)
        return seq[::-1]

    while queue:
        key = queue.popleft()
        positions, memory = key
        state = GameState(graph, params, GuardConfig(positions))
        if observer is not None:
            observer(state.config, memory)
        for attack in vertices:
            move, new_memory = strategy.respond(state.config, memory, attack)
            try:
                nxt = apply_turn(state, attack, move)
            except Rejected as exc:
                return VerifyResult("defeated", len(parent), witness(key, attack), f"{exc.tag}: {exc}")
            nkey = (nxt.config.positions, new_memory)
            if nkey not in parent:
                if len(parent) >= budget:
                    return VerifyResult("budget-exceeded", len(parent), frontier=len(queue) + 1)
                parent[nkey] = (key, attack)
                queue.append(nkey)
    return VerifyResult("eternal", len(parent))


def check_block_invariant(strategy: NeocolonizationStrategy, config: GuardConfig) -> bool:
    """Every dominating-set vertex holds one guard and each block holds its weight in guards."""
    counts = config.counts()
    per_block = Counter(strategy.block_of[v] for v in config.positions)
    for i, block in enumerate(strategy.blocks):
        if per_block[i] != block.weight:
            return False
        if any(counts[v] != 1 for v in block.cds_ids):
            return False
    return True
