"""Bipartite 2-factorizations of C_m wr E_2 and their directed lift.

The columns of C are cut into blocks of a_1, ..., a_t consecutive columns,
neighbouring blocks sharing a boundary column.  In block coordinates
0..a, factor 1 takes the 2a-cycle

    x0, y1, y2, ..., ya, x(a-1), ..., x1

and factor 2 takes the other 2a edges of the block, which form the cycle
y0, x1, y2, ... zigzagging to xa and back.  Factor 1 owns x at every left
boundary and y at every right boundary, factor 2 the opposite, so the
blocks glue into two spanning 2-factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .digraph import BlownCycle, Vertex
from .pathkit import DiCycle, TwoFactor


class BlockError(ValueError):
    pass


@dataclass(frozen=True)
class BlockPlan:
    columns: tuple[int, ...]
    blocks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(self.columns))
        object.__setattr__(self, "blocks", tuple(self.blocks))
        m = len(self.columns)
        if m < 3:
            raise BlockError(f"need at least 3 columns, got {m}")
        if len(set(self.columns)) != m:
            raise BlockError("column labels must be distinct")
        short = [a for a in self.blocks if a < 2]
        if short:
            raise BlockError(f"block length {short[0]} gives a cycle of length "
                             f"{2 * short[0]}; cycles must have length at least 4")
        if sum(self.blocks) != m:
            raise BlockError(f"block lengths {list(self.blocks)} do not sum to m = {m}")

    @property
    def m(self) -> int:
        return len(self.columns)

    def starts(self) -> list[int]:
        out, s = [], 0
        for a in self.blocks:
            out.append(s)
            s += a
        return out

    def end_rows(self) -> list[tuple[str, str]]:
        """Rows covered by factor 1 at the (left, right) boundary of each block."""
        return [("x", "y")] * len(self.blocks)

    def column(self, pos: int) -> int:
        return self.columns[pos % self.m]


def plan_blocks(columns: Sequence[int], lengths: Sequence[int]) -> BlockPlan:
    bad = [L for L in lengths if L % 2 or L < 4]
    if bad:
        raise BlockError(f"cycle length {bad[0]} must be even and at least 4")
    if sum(lengths) != 2 * len(columns):
        raise BlockError(f"lengths {list(lengths)} do not sum to 2m = {2 * len(columns)}")
    return BlockPlan(tuple(columns), tuple(L // 2 for L in lengths))


def _block_cycles(plan: BlockPlan, start: int, a: int) -> tuple[list[Vertex], list[Vertex]]:
    def x(i):
        return Vertex(plan.column(start + i), "x")

    def y(i):
        return Vertex(plan.column(start + i), "y")

    first = [x(0)] + [y(i) for i in range(1, a + 1)] + [x(i) for i in range(a - 1, 0, -1)]
    # zigzags leave y0 through x1 and y1 and meet again at xa
    up = [x(i) if i % 2 else y(i) for i in range(1, a)]
    down = [y(i) if i % 2 else x(i) for i in range(1, a)]
    second = [y(0)] + up + [x(a)] + down[::-1]
    return first, second


def f_factorize_blowup(columns: Sequence[int], lengths: Sequence[int]) -> tuple[
        list[list[Vertex]], list[list[Vertex]]]:
    """Two edge-disjoint undirected 2-factors of C wr E_2, each with cycle lengths ``lengths``.

    Cycles are returned as vertex lists; their union is every edge of C wr E_2.
    """
    plan = plan_blocks(columns, lengths)
    f1, f2 = [], []
    for start, a in zip(plan.starts(), plan.blocks):
        c1, c2 = _block_cycles(plan, start, a)
        f1.append(c1)
        f2.append(c2)
    return f1, f2


def d_factorize_blowup_star(columns: Sequence[int], t1: int, t2: int) -> list[TwoFactor]:
    """Four directed 2-factors of (C wr E_2)* with cycle lengths {t1, t2}.

    Each undirected factor gives two: every cycle in stored order, and every
    cycle reversed.
    """
    if t1 + t2 != 2 * len(columns):
        raise BlockError(f"t1 + t2 = {t1 + t2} must equal 2m = {2 * len(columns)}")
    host = BlownCycle(columns)
    out = []
    for factor in f_factorize_blowup(columns, [t1, t2]):
        cycles = [DiCycle(tuple(c)) for c in factor]
        out.append(TwoFactor(cycles, host))
        out.append(TwoFactor([c.reversed() for c in cycles], host))
    return out
