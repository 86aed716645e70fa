"""Splitting K_m into Hamilton cycles plus the reserved circulant G.

For odd m the circulant classes are paired as in the odd-order family and
each pair Circ(m, {a, b}) is split into two Hamilton cycles.  For even m no
closed form is used: Hamilton cycles are extracted from K_m - Circ(m, {1, 3e})
by a seeded search, and results are cached under data/km/.  Every result is
verified before it is returned.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from math import gcd
from pathlib import Path

from .digraph import Circulant, CirculantOneThreeEven, HostSpec
from .store import data_dir

log = logging.getLogger(__name__)

DEFAULT_SEED = 1729

Cycle = tuple[int, ...]


class SearchExhausted(RuntimeError):
    pass


class SplitError(ValueError):
    pass


@dataclass
class KmSplit:
    m: int
    G: HostSpec
    ham_cycles: list[Cycle]
    method: str = "construction"
    seed: int | None = None
    notes: list[str] = field(default_factory=list)

    def summary(self) -> dict:
        return {"m": self.m, "G": self.G.to_dict(), "hamilton_cycles": len(self.ham_cycles),
                "method": self.method, "seed": self.seed}


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def cycle_edges(cycle) -> set[tuple[int, int]]:
    n = len(cycle)
    return {_edge(cycle[i], cycle[(i + 1) % n]) for i in range(n)}


def is_hamilton_cycle(cycle, m: int) -> bool:
    return len(cycle) == m and set(cycle) == set(range(m)) and m >= 3


def check_split(split: KmSplit) -> list[str]:
    """Problems with an edge partition of K_m into G and the Hamilton cycles."""
    m = split.m
    problems = []
    owner: dict[tuple[int, int], str] = {}
    g_edges = {_edge(u.column, v.column) for u, v in split.G.edges()}
    for e in g_edges:
        owner[e] = "G"
    for i, c in enumerate(split.ham_cycles):
        if not is_hamilton_cycle(c, m):
            problems.append(f"cycle {i} is not a Hamilton cycle of K_{m}")
            continue
        for e in cycle_edges(c):
            if e in owner:
                problems.append(f"edge {e} in cycle {i} and {owner[e]}")
            owner[e] = f"cycle {i}"
    missing = m * (m - 1) // 2 - len(owner)
    if missing:
        problems.append(f"{missing} edges of K_{m} uncovered")
    return problems


def single_class_cycle(m: int, c: int) -> Cycle:
    """The Hamilton cycle 0, c, 2c, ... of Circ(m, {c})."""
    if gcd(c, m) != 1:
        raise SplitError(f"gcd({c}, {m}) = {gcd(c, m)}: Circ({m},{{{c}}}) is not a single cycle")
    return tuple((i * c) % m for i in range(m))


def _single_cycle(adj: dict[int, list[int]]) -> Cycle | None:
    """Walk a 2-regular graph from 0; return the cycle if it spans everything."""
    n = len(adj)
    if any(len(nb) != 2 for nb in adj.values()):
        return None
    walk = [0]
    prev, cur = None, 0
    while True:
        a, b = adj[cur]
        nxt = b if a == prev else a
        if nxt == 0:
            break
        walk.append(nxt)
        prev, cur = cur, nxt
        if len(walk) > n:
            return None
    return tuple(walk) if len(walk) == n else None


def _two_factor_cycles(edges, m: int) -> Cycle | None:
    adj: dict[int, list[int]] = {v: [] for v in range(m)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return _single_cycle(adj)


def _quad_swap_split(m: int, c: int) -> tuple[Cycle, Cycle] | None:
    """Hamilton pair for Circ(m, {1, c}) by swapping alternating 4-cycles.

    Start from the 1-edges (one Hamilton cycle) and the c-edges (g = gcd(c, m)
    cycles).  Swapping the quadrilateral at i = k(c+1), k = 0..g-2, exchanges
    {i,i+1}, {i+c,i+c+1} for {i,i+c}, {i+1,i+1+c} and merges c-cycle classes
    k and k+1.  The outcome is checked; None means the pattern did not apply.
    """
    ones = {_edge(i, (i + 1) % m) for i in range(m)}
    cs = {_edge(i, (i + c) % m) for i in range(m)}
    g = gcd(c, m)
    for k in range(g - 1):
        i = (k * (c + 1)) % m
        out1 = {_edge(i, (i + 1) % m), _edge((i + c) % m, (i + c + 1) % m)}
        out2 = {_edge(i, (i + c) % m), _edge((i + 1) % m, (i + 1 + c) % m)}
        if not (out1 <= ones and out2 <= cs):
            return None
        ones = (ones - out1) | out2
        cs = (cs - out2) | out1
    h1 = _two_factor_cycles(ones, m)
    h2 = _two_factor_cycles(cs, m)
    if h1 is None or h2 is None:
        return None
    return h1, h2


def find_hamilton_cycle(adj: dict[int, set[int]], rng: random.Random,
                        budget: int = 200_000) -> Cycle | None:
    """Randomized backtracking for a Hamilton cycle through vertex 0.

    Neighbours are tried fewest-onward-options first with random tie breaks;
    a branch is cut when an unvisited vertex keeps fewer than two usable
    neighbours.  Returns None when the node budget runs out.
    """
    n = len(adj)
    path = [0]
    on_path = [False] * n
    on_path[0] = True
    nodes = 0

    def usable(v: int) -> int:
        return sum(1 for w in adj[v] if not on_path[w] or w == path[-1] or w == 0)

    def dead_end() -> bool:
        for v in range(n):
            if not on_path[v] and usable(v) < 2:
                return True
        return False

    def rec() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchExhausted
        cur = path[-1]
        if len(path) == n:
            return 0 in adj[cur]
        options = [w for w in adj[cur] if not on_path[w]]
        rng.shuffle(options)
        options.sort(key=lambda w: sum(1 for z in adj[w] if not on_path[z]))
        for w in options:
            path.append(w)
            on_path[w] = True
            if not dead_end() and rec():
                return True
            on_path[w] = False
            path.pop()
        return False

    try:
        return tuple(path) if rec() else None
    except SearchExhausted:
        return None


def _adjacency(m: int, edges) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in range(m)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _component_count(edges, m: int) -> int:
    parent = list(range(m))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    count = m
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            count -= 1
    return count


def switch_search(m: int, a: int, b: int, rng: random.Random,
                  steps: int = 20_000) -> tuple[Cycle, Cycle] | None:
    """Hamilton pair for Circ(m, {a, b}) by switching on alternating squares.

    Start from F1 = a-edges and F2 = b-edges.  The square x, x+a, x+a+b, x+b
    is alternating when its two a-type edges share a colour and its two
    b-type edges carry the other colour; swapping the colours on it keeps
    both classes 2-regular.  Swaps that lower the total cycle count are
    always taken, level swaps with probability 1/2.
    """
    colour: dict[tuple[int, int], int] = {}
    for x in range(m):
        colour[_edge(x, (x + a) % m)] = 0
        colour[_edge(x, (x + b) % m)] = 1

    def factor(c):
        return [e for e, k in colour.items() if k == c]

    def score():
        return _component_count(factor(0), m) + _component_count(factor(1), m)

    squares = [(_edge(x, (x + a) % m), _edge((x + b) % m, (x + a + b) % m),
                _edge(x, (x + b) % m), _edge((x + a) % m, (x + a + b) % m))
               for x in range(m)]
    current = score()
    for _ in range(steps):
        if current == 2:
            break
        rng.shuffle(squares)
        moved = False
        for e1, e2, f1, f2 in squares:
            c = colour[e1]
            if colour[e2] != c or colour[f1] == c or colour[f2] == c:
                continue
            for e in (e1, e2, f1, f2):
                colour[e] ^= 1
            new = score()
            if new < current or (new == current and rng.random() < 0.5):
                current = new
                moved = True
                break
            for e in (e1, e2, f1, f2):
                colour[e] ^= 1
        if not moved:
            return None
    if current != 2:
        return None
    h1 = _two_factor_cycles(factor(0), m)
    h2 = _two_factor_cycles(factor(1), m)
    return (h1, h2) if h1 and h2 else None


def hamilton_pair(m: int, edges, rng: random.Random, attempts: int = 2000) -> tuple[Cycle, Cycle]:
    """Split a 4-regular graph on Z_m into two Hamilton cycles by search."""
    edges = set(edges)
    adj = _adjacency(m, edges)
    for _ in range(attempts):
        h = find_hamilton_cycle(adj, rng, budget=20 * m * m)
        if h is None:
            continue
        rest = _two_factor_cycles(edges - cycle_edges(h), m)
        if rest is not None:
            return h, rest
    raise SearchExhausted(f"no Hamilton pair found in {attempts} attempts (m={m})")


def ham_pair_circulant(m: int, a: int, b: int, seed: int = DEFAULT_SEED) -> tuple[Cycle, Cycle]:
    """Two edge-disjoint Hamilton cycles whose union is Circ(m, {a, b})."""
    top = (m - 1) // 2
    if not (1 <= a <= top and 1 <= b <= top) or a == b:
        raise SplitError(f"distances {a}, {b} must be distinct and within 1..{top}")
    if gcd(gcd(a, b), m) != 1:
        raise SplitError(f"gcd({a}, {b}, {m}) != 1")
    target = {_edge(u.column, v.column) for u, v in Circulant(m, {a, b}).edges()}

    pair = None
    for unit, other in ((a, b), (b, a)):
        if gcd(unit, m) != 1:
            continue
        inv = pow(unit, -1, m)
        c = (other * inv) % m
        c = min(c, m - c)
        base = _quad_swap_split(m, c)
        if base is not None:
            pair = tuple(tuple((v * unit) % m for v in h) for h in base)
            break
    if pair is None:
        rng = random.Random(seed * 100_003 + m * 1009 + a * 31 + b)
        for _ in range(50):
            pair = switch_search(m, a, b, rng)
            if pair is not None:
                break
        else:
            pair = hamilton_pair(m, target, rng)
    h1, h2 = pair
    if not (is_hamilton_cycle(h1, m) and is_hamilton_cycle(h2, m)
            and cycle_edges(h1) | cycle_edges(h2) == target
            and not cycle_edges(h1) & cycle_edges(h2)):
        raise SplitError(f"internal error: bad Hamilton pair for Circ({m},{{{a},{b}}})")
    return h1, h2


def odd_class_family(m: int) -> list[tuple[int, ...]]:
    """Distance classes (other than {1, 2}) grouped as in the odd-order family."""
    if m == 7:
        return [(3,)]
    top = (m - 1) // 2
    if m % 4 == 1:
        return [(s, s + 1) for s in range(3, top, 2)]
    return [(3, 5), (4,)] + [(s, s + 1) for s in range(6, top, 2)]


def decompose_k_odd(m: int, seed: int = DEFAULT_SEED) -> KmSplit:
    if m % 2 == 0 or m < 7:
        raise SplitError(f"decompose_k_odd needs odd m >= 7, got {m}")
    cycles: list[Cycle] = []
    for cls in odd_class_family(m):
        if len(cls) == 1:
            cycles.append(single_class_cycle(m, cls[0]))
        else:
            cycles.extend(ham_pair_circulant(m, *cls, seed=seed))
    split = KmSplit(m, Circulant(m, {1, 2}), cycles, "construction", seed)
    problems = check_split(split)
    if problems:
        raise SplitError(f"K_{m} split failed: {problems[:3]}")
    return split


def km_cache_path(m: int) -> Path:
    return data_dir() / "km" / f"km_{m}.txt"


def write_km_cache(split: KmSplit, path: Path | None = None) -> Path:
    path = path or km_cache_path(split.m)
    lines = [f"km {split.m}"] + [" ".join(map(str, c)) for c in split.ham_cycles]
    path.write_text("\n".join(lines) + "\n")
    return path


def read_km_cache(m: int, path: Path | None = None) -> list[Cycle] | None:
    path = path or km_cache_path(m)
    if not path.exists():
        return None
    lines = [ln.split("#", 1)[0].strip() for ln in path.read_text().splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or lines[0] != f"km {m}":
        log.warning("ignoring cache %s: bad header", path)
        return None
    try:
        return [tuple(int(t) for t in ln.split()) for ln in lines[1:]]
    except ValueError:
        log.warning("ignoring cache %s: bad vertex", path)
        return None


def _search_even(m: int, seed: int, restarts: int = 200) -> list[Cycle]:
    G = CirculantOneThreeEven(m)
    g_edges = {_edge(u.column, v.column) for u, v in G.edges()}
    all_edges = {(u, v) for u in range(m) for v in range(u + 1, m)}
    rng = random.Random(seed * 100_003 + m)
    for _ in range(restarts):
        residual = set(all_edges - g_edges)
        cycles: list[Cycle] = []
        ok = True
        while len(residual) > 2 * m:
            h = find_hamilton_cycle(_adjacency(m, residual), rng, budget=50 * m * m)
            if h is None:
                ok = False
                break
            cycles.append(h)
            residual -= cycle_edges(h)
        if not ok:
            continue
        try:
            cycles.extend(hamilton_pair(m, residual, rng, attempts=200))
        except SearchExhausted:
            continue
        return cycles
    raise SearchExhausted(f"no Hamilton decomposition of K_{m} - Circ({m},{{1,3e}}) "
                          f"after {restarts} restarts")


def decompose_k_even(m: int, seed: int = DEFAULT_SEED, use_cache: bool = True) -> KmSplit:
    """(m-4)/2 Hamilton cycles plus Circ(m, {1, 3e}).

    The shipped cache holds default-seed results and is consulted only for
    that seed; cached cycles are re-verified before use.
    """
    if m % 2 or m < 8:
        raise SplitError(f"decompose_k_even needs even m >= 8, got {m}")
    G = CirculantOneThreeEven(m)
    if use_cache and seed == DEFAULT_SEED:
        cached = read_km_cache(m)
        if cached is not None:
            split = KmSplit(m, G, cached, "cache", seed)
            if not check_split(split):
                return split
            log.warning("cached split for m=%d fails verification; searching", m)
    split = KmSplit(m, G, _search_even(m, seed), "search", seed)
    problems = check_split(split)
    if problems:
        raise SplitError(f"K_{m} split failed: {problems[:3]}")
    return split


def decompose_k(m: int, seed: int = DEFAULT_SEED) -> KmSplit:
    return decompose_k_odd(m, seed) if m % 2 else decompose_k_even(m, seed)
