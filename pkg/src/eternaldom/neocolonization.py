"""Minimum-weight partition into guardable blocks, read off a GreedyResult.

Consecutive anchors ``p < q`` delimit a block: every interval whose beginning
falls strictly between the ending points of ``D_{p-1}`` and ``D_{q-1}``.  When
``q == p + 1`` the block is a clique guarded by one guard; otherwise
``D_{p+1} .. D_{q-1}`` form a connected dominating set of it and one more
guard (the rover, starting on ``D_p``) answers the attacks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import _kernels
from .greedy import GreedyResult
from .interval_model import Graph, IntervalModel, require_canonical

CLIQUE = "clique"
CDS = "cds"


@dataclass(frozen=True, eq=False)
class Block:
    """One part of the partition.

    ``members`` indexes the model's intervals (in order of beginning point);
    ``interval_ids`` resolves them to ids on first access.
    """

    members: np.ndarray = field(repr=False)
    kind: str
    cds_ids: tuple[str, ...]
    rover_id: str
    weight: int
    p: int
    q: int
    id_array: np.ndarray = field(repr=False)

    @cached_property
    def interval_ids(self) -> tuple[str, ...]:
        return tuple(self.id_array[self.members].tolist())

    def __len__(self):
        return len(self.members)

    def _key(self):
        return (self.interval_ids, self.kind, self.cds_ids, self.rover_id, self.weight, self.p, self.q)

    def __eq__(self, other):
        if not isinstance(other, Block):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    @property
    def guards(self) -> tuple[str, ...]:
        return (self.rover_id, *self.cds_ids)


@dataclass(frozen=True)
class Neocolonization:
    blocks: tuple[Block, ...]

    @property
    def total_weight(self) -> int:
        return sum(b.weight for b in self.blocks)

    def block_of(self) -> dict[str, int]:
        return {v: i for i, b in enumerate(self.blocks) for v in b.interval_ids}


def compute_blocks(model: IntervalModel, result: GreedyResult, backend: str | None = None) -> Neocolonization:
    require_canonical(model)
    if result.model is not model and result.model != model:
        raise ValueError("greedy result was not computed from this model")
    k = result.k
    anchors = np.asarray(result.anchors, dtype=np.int64)
    td = np.zeros(k + 1, dtype=np.int64)
    td[1:] = model.t[result.d_idx]
    cuts = td[anchors[1:] - 1]
    if result.tables is None:
        owner, is_end = _kernels.endpoint_tables(model.s.astype(np.int64), model.t.astype(np.int64))
    else:
        owner, is_end = result.tables
    order, offsets = _kernels.block_slices(is_end, owner, cuts, backend=backend)

    ids = model.id_array
    offs = offsets.tolist()
    D = result.D
    blocks = []
    for i, (p, q) in enumerate(zip(result.anchors[1:-1], result.anchors[2:])):
        members = order[offs[i]:offs[i + 1]]
        if q == p + 1:
            blocks.append(Block(members, CLIQUE, (), D[p - 1], 1, p, q, ids))
        else:
            blocks.append(Block(members, CDS, D[p:q - 1], D[p - 1], q - p, p, q, ids))
    return Neocolonization(tuple(blocks))


def eternal_dominating_set(result: GreedyResult) -> frozenset[str]:
    """The ids of D_1..D_k; k distinct vertices."""
    return frozenset(result.D)


def weight(block: Block | tuple, graph: Graph) -> int:
    """Weight of a vertex set recomputed from scratch (exhaustive, small sets only).

    1 for a clique, otherwise 1 plus the connected domination number of the
    induced subgraph.
    """
    from .oracle import connected_domination_number

    members = block.interval_ids if isinstance(block, Block) else tuple(block)
    missing = [v for v in members if v not in graph]
    if missing:
        raise ValueError(f"block members not in graph: {missing}")
    sub = graph.subgraph(members)
    if not sub.is_connected() or not members:
        raise ValueError("weight is undefined for a disconnected or empty vertex set")
    if sub.is_clique():
        return 1
    return 1 + connected_domination_number(sub)
