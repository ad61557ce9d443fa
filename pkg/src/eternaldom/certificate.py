"""JSON certificate bundling everything the solver derives for one model."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .greedy import GreedyResult, attacker_sequence
from .neocolonization import Neocolonization, eternal_dominating_set


@dataclass(frozen=True)
class BlockRecord:
    kind: str
    members: tuple[str, ...]
    cds_ids: tuple[str, ...]
    rover_id: str
    weight: int


@dataclass(frozen=True)
class Certificate:
    n: int
    k: int
    A: tuple[str, ...]
    D: tuple[str, ...]
    anchors: tuple[int, ...]
    blocks: tuple[BlockRecord, ...]
    eternal_set: tuple[str, ...]
    attacker_sequence: tuple[str, ...]

    @classmethod
    def build(cls, result: GreedyResult, neo: Neocolonization) -> Certificate:
        blocks = tuple(
            BlockRecord(b.kind, b.interval_ids, b.cds_ids, b.rover_id, b.weight) for b in neo.blocks
        )
        eternal = eternal_dominating_set(result)
        return cls(
            n=result.model.n,
            k=result.k,
            A=result.A,
            D=result.D,
            anchors=result.anchors,
            blocks=blocks,
            eternal_set=tuple(v for v in result.D if v in eternal),  # keep D order
            attacker_sequence=tuple(attacker_sequence(result)),
        )

    def consistent(self) -> bool:
        return (
            sum(b.weight for b in self.blocks) == self.k == len(self.eternal_set) == len(self.A)
            and len(set(self.eternal_set)) == self.k
            and sum(len(b.members) for b in self.blocks) == self.n
        )

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(asdict(self), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> Certificate:
        raw = json.loads(text)
        blocks = tuple(
            BlockRecord(b["kind"], tuple(b["members"]), tuple(b["cds_ids"]), b["rover_id"], b["weight"])
            for b in raw["blocks"]
        )
        return cls(
            n=raw["n"],
            k=raw["k"],
            A=tuple(raw["A"]),
            D=tuple(raw["D"]),
            anchors=tuple(raw["anchors"]),
            blocks=blocks,
            eternal_set=tuple(raw["eternal_set"]),
            attacker_sequence=tuple(raw["attacker_sequence"]),
        )

    def to_text(self) -> str:
        lines = [f"n {self.n}", f"k {self.k}"]
        lines.append("A " + " ".join(self.A))
        lines.append("D " + " ".join(self.D))
        lines.append("anchors " + " ".join(map(str, self.anchors)))
        for i, b in enumerate(self.blocks, start=1):
            extra = f" cds {' '.join(b.cds_ids)}" if b.cds_ids else ""
            lines.append(
                f"block {i} {b.kind} weight {b.weight} rover {b.rover_id}{extra} members {' '.join(b.members)}"
            )
        lines.append("eternal_set " + " ".join(self.eternal_set))
        lines.append("attacker_sequence " + " ".join(self.attacker_sequence))
        return "\n".join(lines)
