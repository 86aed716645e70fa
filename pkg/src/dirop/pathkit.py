"""Dipaths, directed cycles, translations and (cyclic) concatenation.

Paths keep appendix coordinates (plain integers) until they are reduced into
a host; ``translate`` and ``DiPath.reduce`` do the reduction mod m.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .digraph import Arc, HostSpec, Vertex, parse_vertex


class PathError(ValueError):
    pass


class ConcatenationError(PathError):
    def __init__(self, message: str, index: int, vertex: Vertex | None = None):
        super().__init__(message)
        self.index = index
        self.vertex = vertex


class TranslationError(PathError):
    pass


def _distinct(vertices: Sequence[Vertex], what: str) -> None:
    seen = set()
    for v in vertices:
        if v in seen:
            raise PathError(f"{what} repeats vertex {v}")
        seen.add(v)


@dataclass(frozen=True)
class DiPath:
    vertices: tuple[Vertex, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(self.vertices) < 2:
            raise PathError("a dipath needs at least one arc")
        _distinct(self.vertices, "dipath")

    @classmethod
    def parse(cls, text: str | Iterable[str]) -> DiPath:
        tokens = text.split() if isinstance(text, str) else list(text)
        return cls(tuple(parse_vertex(t) for t in tokens))

    @property
    def source(self) -> Vertex:
        return self.vertices[0]

    @property
    def terminal(self) -> Vertex:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.vertices) - 1

    def arcs(self) -> list[Arc]:
        return [Arc(u, v) for u, v in zip(self.vertices, self.vertices[1:])]

    def reduce(self, m: int) -> DiPath:
        return DiPath(tuple(v.reduce(m) for v in self.vertices))

    def tokens(self) -> list[str]:
        return [str(v) for v in self.vertices]

    def __str__(self) -> str:
        return " ".join(self.tokens())


@dataclass(frozen=True)
class DiCycle:
    """A directed cycle stored as its vertex sequence without the closing repeat."""

    vertices: tuple[Vertex, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(self.vertices) < 2:
            raise PathError("a directed cycle needs at least two vertices")
        _distinct(self.vertices, "directed cycle")

    @classmethod
    def parse(cls, text: str | Iterable[str]) -> DiCycle:
        """Parse vertex tokens; a closing repeat of the first vertex is optional."""
        tokens = text.split() if isinstance(text, str) else list(text)
        vs = [parse_vertex(t) for t in tokens]
        if len(vs) > 2 and vs[0] == vs[-1]:
            vs.pop()
        return cls(tuple(vs))

    def __len__(self) -> int:
        return len(self.vertices)

    def arcs(self) -> list[Arc]:
        vs = self.vertices
        return [Arc(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def canonical(self) -> DiCycle:
        i = self.vertices.index(min(self.vertices))
        return DiCycle(self.vertices[i:] + self.vertices[:i])

    def reversed(self) -> DiCycle:
        return DiCycle(tuple(reversed(self.vertices)))

    def reduce(self, m: int) -> DiCycle:
        return DiCycle(tuple(v.reduce(m) for v in self.vertices))

    def tokens(self) -> list[str]:
        return [str(v) for v in self.vertices]

    def __str__(self) -> str:
        return " ".join(self.tokens())


@dataclass(frozen=True)
class TwoFactor:
    """Cycles claimed to form a directed 2-factor of ``host``; see verify for checks."""

    cycles: tuple[DiCycle, ...]
    host: HostSpec | None = None

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(self.cycles))

    def arcs(self) -> list[Arc]:
        return [a for c in self.cycles for a in c.arcs()]

    def lengths(self) -> list[int]:
        return sorted(len(c) for c in self.cycles)

    def vertices(self) -> list[Vertex]:
        return [v for c in self.cycles for v in c.vertices]

    def canonical(self) -> TwoFactor:
        return TwoFactor(tuple(sorted((c.canonical() for c in self.cycles),
                                      key=lambda c: c.vertices)), self.host)


def translate(path: DiPath, j: int, m: int | None = None,
              host: HostSpec | None = None) -> DiPath:
    """Apply rho^j: x_i -> x_{i+j}, y_i -> y_{i+j}, reducing mod m when given.

    With a host, m defaults to host.m.  An odd shift is refused when m is
    even (it breaks the 3e pattern); for odd m every shift is an
    automorphism of W*, but arcs are still checked against ``host``.
    """
    if host is not None and m is None:
        m = host.m
    if m is not None and m % 2 == 0 and j % 2:
        raise TranslationError(f"odd shift {j} is not allowed with even m = {m}")
    out = DiPath(tuple(v.shift(j, m) for v in path.vertices))
    if host is not None and j % 2:
        for a in out.arcs():
            if not host.has_arc(*a):
                raise TranslationError(f"translated arc {a} is not in {host!r}")
    return out


def _check_sequence(seq: Sequence[DiPath], cyclic: bool) -> None:
    if not seq:
        raise ConcatenationError("empty sequence", 0)
    k = len(seq)
    links = k if cyclic else k - 1
    for i in range(links):
        a, b = seq[i], seq[(i + 1) % k]
        if a.terminal != b.source:
            raise ConcatenationError(
                f"endpoint mismatch at index {i}: t(P{i})={a.terminal} "
                f"but s(P{(i + 1) % k})={b.source}", i, a.terminal)
    # Every vertex is counted once per path; shared endpoints are allowed exactly once.
    owner: dict[Vertex, int] = {}
    for i, p in enumerate(seq):
        for pos, v in enumerate(p.vertices):
            if v not in owner:
                owner[v] = i
                continue
            prev = owner[v]
            shared = (pos == 0 and v == seq[i - 1].terminal and (i > 0 or cyclic)
                      and prev == (i - 1) % k)
            closing = (cyclic and i == k - 1 and pos == len(p.vertices) - 1
                       and prev == 0 and v == seq[0].source)
            if shared or closing:
                continue
            raise ConcatenationError(
                f"vertex {v} of path {i} already used by path {prev}", i, v)


def concatenate(seq: Sequence[DiPath]) -> DiPath:
    """Join paths end to start; apart from the joints no vertex may repeat."""
    seq = list(seq)
    _check_sequence(seq, cyclic=False)
    verts = list(seq[0].vertices)
    for p in seq[1:]:
        verts.extend(p.vertices[1:])
    return DiPath(tuple(verts))


def cyclic_concatenate(seq: Sequence[DiPath]) -> DiCycle:
    seq = list(seq)
    _check_sequence(seq, cyclic=True)
    verts = []
    for p in seq:
        verts.extend(p.vertices[:-1])
    return DiCycle(tuple(verts))


def concatenates(seq: Sequence[DiPath], cyclic: bool = False) -> bool:
    try:
        _check_sequence(list(seq), cyclic)
    except ConcatenationError:
        return False
    return True


def arc_census(items: Iterable) -> Counter:
    """Multiset of arcs over paths, cycles or factors."""
    out: Counter = Counter()
    for item in items:
        out.update(item.arcs())
    return out
