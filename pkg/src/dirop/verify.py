"""Independent verification of claimed factorizations, plus a small exhaustive oracle.

The checks here share only the Vertex/Arc types with the constructions: host
membership is recomputed from the serialized host parameters.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .digraph import Arc, HostSpec, Vertex


class ViolationKind(str, Enum):
    MISSING_ARC = "MissingArc"
    DUPLICATE_ARC = "DuplicateArc"
    FOREIGN_ARC = "ForeignArc"
    NOT_SPANNING = "NotSpanning"
    BAD_CYCLE_LENGTHS = "BadCycleLengths"
    OVERLAPPING_CYCLES = "OverlappingCycles"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    witness: str
    factor: int | None = None

    def __str__(self) -> str:
        where = f" (factor {self.factor})" if self.factor is not None else ""
        return f"{self.kind.value}{where}: {self.witness}"


@dataclass
class VerifyOutcome:
    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def kinds(self) -> set[ViolationKind]:
        return {v.kind for v in self.violations}

    def summary(self, limit: int = 5) -> str:
        if self.passed:
            return "pass"
        head = "; ".join(str(v) for v in self.violations[:limit])
        more = len(self.violations) - limit
        return head + (f"; ... {more} more" if more > 0 else "")


class _Host:
    """Vertex set and adjacency rebuilt from a host descriptor."""

    def __init__(self, desc: dict):
        kind, p = desc["kind"], desc["params"]
        self.kind = kind
        if kind == "complete_symmetric":
            n = p["n"]
            if p.get("labels") == "two_row":
                self.vertices = {Vertex(c, r) for c in range(n // 2) for r in "xy"}
            else:
                self.vertices = {Vertex(c, "x") for c in range(n)}
            self._adj = lambda u, v: True
        elif kind == "circulant":
            m, dists = p["m"], set(p["S"])
            self.vertices = {Vertex(c, "x") for c in range(m)}
            self._adj = lambda u, v: min((v.column - u.column) % m,
                                         (u.column - v.column) % m) in dists
        elif kind == "circulant_1_3e":
            m = p["m"]
            self.vertices = {Vertex(c, "x") for c in range(m)}
            self._adj = lambda u, v: self._one_three_even(m, u.column, v.column)
        elif kind == "blown_cycle":
            cols = list(p["columns"])
            pos = {c: i for i, c in enumerate(cols)}
            m = len(cols)
            self.vertices = {Vertex(c, r) for c in cols for r in "xy"}
            self._adj = lambda u, v: (pos[u.column] - pos[v.column]) % m in (1, m - 1)
        elif kind == "w_star":
            m = p["order"] // 2
            self.vertices = {Vertex(c, r) for c in range(m) for r in "xy"}
            if m % 2:
                cols = lambda a, b: (a - b) % m in (1, 2, m - 1, m - 2)
            else:
                cols = lambda a, b: self._one_three_even(m, a, b)
            self._adj = lambda u, v: (u.row != v.row) if u.column == v.column else cols(
                u.column, v.column)
        else:
            raise ValueError(f"unknown host kind {kind!r}")

    @staticmethod
    def _one_three_even(m: int, a: int, b: int) -> bool:
        d = (b - a) % m
        if d in (1, m - 1):
            return True
        lo = a if d == 3 else b if d == m - 3 else None
        return lo is not None and lo % 2 == 0

    def has_arc(self, u: Vertex, v: Vertex) -> bool:
        return u != v and u in self.vertices and v in self.vertices and self._adj(u, v)

    def all_arcs(self) -> set[Arc]:
        vs = sorted(self.vertices)
        return {Arc(u, v) for u in vs for v in vs if u != v and self._adj(u, v)}


def _describe(host) -> dict:
    return host.to_dict() if isinstance(host, HostSpec) else host


def _cycle_vertices(cycle) -> list[Vertex]:
    return list(cycle.vertices) if hasattr(cycle, "vertices") else list(cycle)


def _factor_cycles(factor) -> list[list[Vertex]]:
    cycles = factor.cycles if hasattr(factor, "cycles") else factor
    return [_cycle_vertices(c) for c in cycles]


def _cycle_arcs(vs: Sequence[Vertex]) -> list[Arc]:
    return [Arc(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def _check_factor(cycles: list[list[Vertex]], host: _Host, lengths: Sequence[int],
                  index: int | None) -> tuple[list[Violation], list[Arc]]:
    out: list[Violation] = []
    arcs: list[Arc] = []
    seen: Counter = Counter()
    for c in cycles:
        seen.update(c)
        if len(c) < 2:
            out.append(Violation(ViolationKind.OVERLAPPING_CYCLES,
                                 f"degenerate cycle {[str(v) for v in c]}", index))
            continue
        for a in _cycle_arcs(c):
            arcs.append(a)
            if not host.has_arc(*a):
                out.append(Violation(ViolationKind.FOREIGN_ARC, str(a), index))
    for v, count in sorted(seen.items()):
        if count > 1:
            out.append(Violation(ViolationKind.OVERLAPPING_CYCLES,
                                 f"vertex {v} lies on {count} cycle positions", index))
    for v in sorted(host.vertices - set(seen)):
        out.append(Violation(ViolationKind.NOT_SPANNING, f"vertex {v} uncovered", index))
    got = sorted(len(c) for c in cycles)
    if got != sorted(lengths):
        out.append(Violation(ViolationKind.BAD_CYCLE_LENGTHS,
                             f"cycle lengths {got}, expected {sorted(lengths)}", index))
    return out, arcs


def verify_two_factor(factor, host, lengths: Sequence[int]) -> VerifyOutcome:
    """Arcs in host, cycles vertex-disjoint, spanning, and the length multiset matches."""
    h = _Host(_describe(host))
    violations, _ = _check_factor(_factor_cycles(factor), h, lengths, None)
    return VerifyOutcome(violations)


def verify_factorization(factors: Iterable, host, lengths: Sequence[int]) -> VerifyOutcome:
    """Per-factor checks plus an exact partition of the host's arc set."""
    h = _Host(_describe(host))
    factors = list(factors)
    violations: list[Violation] = []
    usage: dict[Arc, list[int]] = {}
    for i, f in enumerate(factors):
        v, arcs = _check_factor(_factor_cycles(f), h, lengths, i)
        violations.extend(v)
        for a in arcs:
            usage.setdefault(a, []).append(i)
    for a in sorted(usage):
        if len(usage[a]) > 1:
            violations.append(Violation(ViolationKind.DUPLICATE_ARC,
                                        f"{a} in factors {usage[a]}"))
    every = h.all_arcs()
    n = len(h.vertices)
    expected = len(every) // n if n else 0
    if len(factors) != expected or len(every) % max(n, 1):
        kind = (ViolationKind.MISSING_ARC if len(factors) < expected
                else ViolationKind.DUPLICATE_ARC)
        violations.append(Violation(kind, f"{len(factors)} factors, host needs "
                                          f"{len(every)}/{n} = {expected}"))
    for a in sorted(every - set(usage)):
        violations.append(Violation(ViolationKind.MISSING_ARC, str(a)))
    return VerifyOutcome(violations)


# ---------------------------------------------------------------------------
# exhaustive oracle on K*_n

@dataclass(frozen=True)
class Found:
    factors: list  # list of factors, each a list of cycles (vertex lists)
    nodes: int


@dataclass(frozen=True)
class ExhaustedNone:
    nodes: int


@dataclass(frozen=True)
class Timeout:
    nodes: int


def _factor_masks(n: int, lengths: Sequence[int]) -> list[tuple[int, tuple]]:
    """All directed 2-factors of K*_n with the given cycle type, as arc bitmasks.

    Vertices are 0..n-1 and arc (u, v) is bit u*n + v.  Each block is anchored
    at the smallest vertex not yet covered, so every factor appears once.
    """
    counts = Counter(lengths)
    out: list[tuple[int, tuple]] = []

    def cycles_on(block):
        if len(block) == 2:
            yield block
            return
        for perm in permutations(block[1:]):
            yield (block[0], *perm)

    def gen(remaining, acc):
        if not remaining:
            mask = 0
            for c in acc:
                for i in range(len(c)):
                    mask |= 1 << (c[i] * n + c[(i + 1) % len(c)])
            out.append((mask, tuple(acc)))
            return
        anchor = remaining[0]
        for L in sorted(counts):
            if counts[L] == 0 or L > len(remaining):
                continue
            counts[L] -= 1
            for others in combinations(remaining[1:], L - 1):
                block = (anchor, *others)
                left = [v for v in remaining if v not in block]
                for c in cycles_on(block):
                    gen(left, acc + [c])
            counts[L] += 1

    gen(list(range(n)), [])
    return out


def oracle_search(n: int, lengths: Sequence[int], budget: int = 10_000_000):
    """Exhaustive search for a (C_{l1}, ..., C_{ls})-factorization of K*_n.

    Exact cover on arcs: the search always branches on the lowest uncovered
    arc, which is (0, 1) at the root.  The factor containing 0 -> 1 is thus
    the first factor placed, and factor order is never permuted, so an
    exhausted search proves non-existence.  ``budget`` bounds the number of
    search nodes; running out yields Timeout, never ExhaustedNone.
    """
    if sum(lengths) != n or min(lengths) < 2:
        raise ValueError(f"cycle lengths {list(lengths)} do not partition {n} vertices")
    if n > 10:
        raise ValueError("oracle search is limited to n <= 10")
    full = 0
    for u in range(n):
        for v in range(n):
            if u != v:
                full |= 1 << (u * n + v)
    cands = _factor_masks(n, lengths)
    by_bit: dict[int, list[tuple[int, tuple]]] = {}
    for mask, cyc in cands:
        bits = mask
        while bits:
            low = bits & -bits
            by_bit.setdefault(low.bit_length() - 1, []).append((mask, cyc))
            bits ^= low

    nodes = 0
    chosen: list[tuple] = []

    class _Out(Exception):
        pass

    def search(covered: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _Out
        if covered == full:
            return True
        free = full & ~covered
        bit = (free & -free).bit_length() - 1
        for mask, cyc in by_bit.get(bit, ()):
            if mask & covered:
                continue
            chosen.append(cyc)
            if search(covered | mask):
                return True
            chosen.pop()
        return False

    try:
        ok = search(0)
    except _Out:
        return Timeout(nodes)
    if not ok:
        return ExhaustedNone(nodes)
    factors = [[[Vertex(v, "x") for v in c] for c in cyc] for cyc in chosen]
    return Found(factors, nodes)
