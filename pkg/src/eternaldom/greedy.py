"""The A/B/D interval sequences and the eternal domination number they yield.

Starting from the interval with the leftmost ending point, each step looks at
``td``, the ending point of the last chosen ``D`` interval:

* ``A`` is the interval beginning after ``td`` that ends first;
* ``B`` is the interval beginning before ``td`` that ends last;
* ``D`` is ``A`` if ``A`` ends after ``B``, otherwise ``B``.

The walk stops when nothing begins after ``td``.  The number of steps ``k`` is
the eternal domination number of the interval graph (for games where all
guards may move, with or without multi-occupancy).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .interval_model import IntervalModel, require_canonical


@dataclass(frozen=True, eq=False)
class GreedyResult:
    """Output of :func:`compute_sequences`.

    ``A``, ``B`` and ``D`` hold interval ids and have length ``k``; ``B[0]``
    is always ``None`` because the first step has no ``B``.  ``anchors`` are
    the steps ``p`` with ``D_p == A_p``, bracketed by the sentinels 0 and
    ``k + 1``.  The ``*_idx`` arrays index into ``model``.
    """

    model: IntervalModel = field(repr=False)
    A: tuple[str, ...]
    B: tuple[str | None, ...]
    D: tuple[str, ...]
    anchors: tuple[int, ...]
    a_idx: np.ndarray = field(repr=False)
    b_idx: np.ndarray = field(repr=False)
    d_idx: np.ndarray = field(repr=False)
    tables: tuple[np.ndarray, np.ndarray] | None = field(default=None, repr=False)

    @property
    def k(self) -> int:
        return len(self.A)

    def td(self, i: int) -> int:
        """Ending coordinate of ``D_i`` (1-based); ``td(0) == 0``."""
        return 0 if i == 0 else int(self.model.t[self.d_idx[i - 1]])

    def __eq__(self, other):
        if not isinstance(other, GreedyResult):
            return NotImplemented
        return (self.A, self.B, self.D, self.anchors) == (other.A, other.B, other.D, other.anchors)


def compute_sequences(model: IntervalModel, backend: str | None = None) -> GreedyResult:
    """Run the linear sweep on a canonical model."""
    require_canonical(model)
    s = np.ascontiguousarray(model.s, dtype=np.int64)
    t = np.ascontiguousarray(model.t, dtype=np.int64)
    owner, is_end = _kernels.endpoint_tables(s, t)
    a_idx, b_idx, d_idx = _kernels.sweep(s, t, owner, is_end, backend=backend)
    k = len(a_idx)
    ids = model.id_array
    b_ids = ids[b_idx]
    b_ids[b_idx < 0] = None
    anchor_steps = np.flatnonzero(a_idx == d_idx) + 1
    anchors = (0, *anchor_steps.tolist(), k + 1) if k else (0, 1)
    return GreedyResult(
        model=model,
        A=tuple(ids[a_idx].tolist()),
        B=tuple(b_ids.tolist()),
        D=tuple(ids[d_idx].tolist()),
        anchors=anchors,
        a_idx=a_idx,
        b_idx=b_idx,
        d_idx=d_idx,
        tables=(owner, is_end),
    )


def eternal_domination_number(model: IntervalModel, backend: str | None = None) -> int:
    return compute_sequences(model, backend=backend).k


def attacker_sequence(result: GreedyResult) -> list[str]:
    """Attack schedule v(A_1), ..., v(A_k); fewer than k guards cannot repel it."""
    return list(result.A)
