"""Vertices, arcs and the algebraic host digraphs used by the constructions.

Every host here is the symmetric closure G* of an undirected graph G, so each
host exposes both its undirected ``edges()`` and its ``arcs()``.  Membership
is computed from the host parameters; nothing stores an adjacency structure
except :class:`BlownCycle`, which keeps its column order.
"""

from __future__ import annotations

import re
from abc import ABC, abstractmethod
from typing import ClassVar, Iterator, NamedTuple, Sequence

X = "x"
Y = "y"
ROWS = (X, Y)

_TOKEN = re.compile(r"^([xy])(-?\d+)$")


class Vertex(NamedTuple):
    """A vertex ``x_c`` or ``y_c``; tuples order by column first, then x < y."""

    column: int
    row: str = X

    def __str__(self) -> str:
        return f"{self.row}{self.column}"

    def shift(self, j: int, m: int | None = None) -> Vertex:
        c = self.column + j
        return Vertex(c % m if m else c, self.row)

    def reduce(self, m: int) -> Vertex:
        return Vertex(self.column % m, self.row)


class Arc(NamedTuple):
    tail: Vertex
    head: Vertex

    def __str__(self) -> str:
        return f"{self.tail}->{self.head}"


def parse_vertex(token: str) -> Vertex:
    match = _TOKEN.match(token.strip())
    if not match:
        raise ValueError(f"bad vertex token {token!r}")
    return Vertex(int(match.group(2)), match.group(1))


def vx(c: int) -> Vertex:
    return Vertex(c, X)


def vy(c: int) -> Vertex:
    return Vertex(c, Y)


class HostError(ValueError):
    pass


class HostSpec(ABC):
    """Algebraic description of a symmetric host digraph."""

    kind: ClassVar[str]

    @property
    @abstractmethod
    def m(self) -> int:
        """Number of columns (the modulus for subscripts)."""

    @abstractmethod
    def vertices(self) -> list[Vertex]:
        ...

    @abstractmethod
    def adjacent(self, u: Vertex, v: Vertex) -> bool:
        """Undirected adjacency of two vertices of the host."""

    @property
    @abstractmethod
    def edge_count(self) -> int:
        """Closed-form size of the underlying undirected graph."""

    @abstractmethod
    def params(self) -> dict:
        ...

    @property
    def vertex_count(self) -> int:
        return len(self.vertices())

    @property
    def arc_count(self) -> int:
        return 2 * self.edge_count

    def contains(self, v: Vertex) -> bool:
        return v in set(self.vertices())

    def has_arc(self, tail: Vertex, head: Vertex) -> bool:
        if tail == head:
            return False
        if not (self.contains(tail) and self.contains(head)):
            return False
        return self.adjacent(tail, head)

    def arcs(self) -> Iterator[Arc]:
        """All arcs in canonical (tail, head) order."""
        vs = sorted(self.vertices())
        for u in vs:
            for v in vs:
                if u != v and self.adjacent(u, v):
                    yield Arc(u, v)

    def edges(self) -> Iterator[tuple[Vertex, Vertex]]:
        for a in self.arcs():
            if a.tail < a.head:
                yield (a.tail, a.head)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "params": self.params()}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, HostSpec) and self.to_dict() == other.to_dict()

    def __hash__(self) -> int:
        return hash(repr(self.to_dict()))

    def __repr__(self) -> str:
        args = ", ".join(f"{k}={v!r}" for k, v in self.params().items())
        return f"{type(self).__name__}({args})"


class CompleteSymmetric(HostSpec):
    """K*_n.

    With ``two_row=True`` the n = 2m vertices are labelled x_a, y_a for
    a in Z_m, which is how K_m wr K_2 realizes K*_{2m}.  Otherwise the
    vertices are x_0 .. x_{n-1}.
    """

    kind = "complete_symmetric"

    def __init__(self, n: int, two_row: bool = False):
        if n < 2:
            raise HostError(f"complete symmetric digraph needs n >= 2, got {n}")
        if two_row and n % 2:
            raise HostError(f"two-row labelling needs even n, got {n}")
        self.n = n
        self.two_row = two_row

    @property
    def m(self) -> int:
        return self.n // 2 if self.two_row else self.n

    def vertices(self) -> list[Vertex]:
        if self.two_row:
            return [Vertex(c, r) for c in range(self.m) for r in ROWS]
        return [Vertex(c, X) for c in range(self.n)]

    def contains(self, v: Vertex) -> bool:
        if self.two_row:
            return 0 <= v.column < self.m and v.row in ROWS
        return 0 <= v.column < self.n and v.row == X

    def adjacent(self, u: Vertex, v: Vertex) -> bool:
        return u != v

    @property
    def vertex_count(self) -> int:
        return self.n

    @property
    def edge_count(self) -> int:
        return self.n * (self.n - 1) // 2

    def params(self) -> dict:
        p = {"n": self.n}
        if self.two_row:
            p["labels"] = "two_row"
        return p


class _ColumnHost(HostSpec):
    """Hosts on Z_m whose vertices all sit in row x."""

    def vertices(self) -> list[Vertex]:
        return [Vertex(c, X) for c in range(self._m)]

    def contains(self, v: Vertex) -> bool:
        return v.row == X and 0 <= v.column < self._m

    @property
    def m(self) -> int:
        return self._m

    @property
    def vertex_count(self) -> int:
        return self._m

    @abstractmethod
    def column_adjacent(self, a: int, b: int) -> bool:
        ...

    def adjacent(self, u: Vertex, v: Vertex) -> bool:
        return self.column_adjacent(u.column, v.column)

    def degree(self) -> int:
        return sum(1 for b in range(self._m) if b and self.column_adjacent(0, b))


class Circulant(_ColumnHost):
    """Circ(m, S): edges {i, i+s} for s in S."""

    kind = "circulant"

    def __init__(self, m: int, distances):
        if m < 3:
            raise HostError(f"circulant order must be >= 3, got {m}")
        distances = frozenset(int(s) for s in distances)
        bad = sorted(s for s in distances if not 1 <= s <= m // 2)
        if bad:
            raise HostError(f"distances {bad} outside 1..{m // 2} for order {m}")
        self._m = m
        self.distances = distances

    def column_adjacent(self, a: int, b: int) -> bool:
        d = (b - a) % self._m
        return min(d, self._m - d) in self.distances

    @property
    def edge_count(self) -> int:
        half = self._m % 2 == 0 and self._m // 2 in self.distances
        return self._m * len(self.distances) - (self._m // 2 if half else 0)

    def params(self) -> dict:
        return {"m": self._m, "S": sorted(self.distances)}


class CirculantOneThreeEven(_ColumnHost):
    """Circ(m, {1, 3e}): all distance-1 edges plus {i, i+3} for even i."""

    kind = "circulant_1_3e"

    def __init__(self, m: int):
        if m % 2 or m < 6:
            raise HostError(f"Circ(m,{{1,3e}}) needs even m >= 6, got {m}")
        self._m = m

    def column_adjacent(self, a: int, b: int) -> bool:
        d = (b - a) % self._m
        if d in (1, self._m - 1):
            return True
        if d == 3 and a % 2 == 0:
            return True
        return d == self._m - 3 and b % 2 == 0

    @property
    def edge_count(self) -> int:
        return self._m + self._m // 2

    def params(self) -> dict:
        return {"m": self._m}


class BlownCycle(HostSpec):
    """C wr E_2 along a column order (c_0, ..., c_{m-1}), taken cyclically.

    Both vertices of each column are joined to both vertices of the next
    column; there are no vertical edges.  ``directed`` records whether the
    symmetric digraph (C wr E_2)* is meant; the arc set is the same either way.
    """

    kind = "blown_cycle"

    def __init__(self, column_order: Sequence[int], directed: bool = True):
        order = tuple(int(c) for c in column_order)
        if len(order) < 3:
            raise HostError(f"blown cycle needs at least 3 columns, got {len(order)}")
        if len(set(order)) != len(order):
            dup = sorted({c for c in order if order.count(c) > 1})
            raise HostError(f"duplicate column labels {dup}")
        self.column_order = order
        self.directed = directed
        self._pos = {c: i for i, c in enumerate(order)}

    @property
    def m(self) -> int:
        return len(self.column_order)

    def vertices(self) -> list[Vertex]:
        return [Vertex(c, r) for c in self.column_order for r in ROWS]

    def contains(self, v: Vertex) -> bool:
        return v.column in self._pos and v.row in ROWS

    def adjacent(self, u: Vertex, v: Vertex) -> bool:
        d = (self._pos[v.column] - self._pos[u.column]) % self.m
        return d in (1, self.m - 1)

    @property
    def edge_count(self) -> int:
        return 4 * self.m

    def params(self) -> dict:
        return {"columns": list(self.column_order), "directed": self.directed}


class WStar(HostSpec):
    """W*_{2m}: the blown-up circulant with vertical edges, symmetrically oriented.

    The column graph is Circ(m, {1, 2}) for odd m and Circ(m, {1, 3e}) for
    even m.
    """

    kind = "w_star"

    def __init__(self, two_m: int):
        if two_m % 2:
            raise HostError(f"W* order must be even, got {two_m}")
        if two_m < 10:
            # below 10 the distance classes collide and the arc census breaks
            raise HostError(f"W* order must be >= 10, got {two_m}")
        self.two_m = two_m
        m = two_m // 2
        self.base: _ColumnHost = Circulant(m, {1, 2}) if m % 2 else CirculantOneThreeEven(m)

    @property
    def m(self) -> int:
        return self.two_m // 2

    def vertices(self) -> list[Vertex]:
        return [Vertex(c, r) for c in range(self.m) for r in ROWS]

    def contains(self, v: Vertex) -> bool:
        return 0 <= v.column < self.m and v.row in ROWS

    def adjacent(self, u: Vertex, v: Vertex) -> bool:
        if u.column == v.column:
            return u.row != v.row
        return self.base.column_adjacent(u.column, v.column)

    @property
    def vertex_count(self) -> int:
        return self.two_m

    @property
    def edge_count(self) -> int:
        return 4 * self.base.edge_count + self.m

    def vertical_arcs(self) -> list[Arc]:
        out = []
        for c in range(self.m):
            out.append(Arc(Vertex(c, X), Vertex(c, Y)))
            out.append(Arc(Vertex(c, Y), Vertex(c, X)))
        return out

    def params(self) -> dict:
        return {"order": self.two_m}


def complete_symmetric(n: int, two_row: bool = False) -> CompleteSymmetric:
    return CompleteSymmetric(n, two_row)


def circulant(m: int, distances) -> Circulant:
    return Circulant(m, distances)


def circulant_one_three_even(m: int) -> CirculantOneThreeEven:
    return CirculantOneThreeEven(m)


def host_w_star(two_m: int) -> WStar:
    return WStar(two_m)


def blown_cycle(column_order: Sequence[int], directed: bool = True) -> BlownCycle:
    return BlownCycle(column_order, directed)


def host_from_dict(data: dict) -> HostSpec:
    kind = data["kind"]
    p = data["params"]
    if kind == CompleteSymmetric.kind:
        return CompleteSymmetric(p["n"], p.get("labels") == "two_row")
    if kind == Circulant.kind:
        return Circulant(p["m"], p["S"])
    if kind == CirculantOneThreeEven.kind:
        return CirculantOneThreeEven(p["m"])
    if kind == BlownCycle.kind:
        return BlownCycle(p["columns"], p.get("directed", True))
    if kind == WStar.kind:
        return WStar(p["order"])
    raise HostError(f"unknown host kind {kind!r}")
