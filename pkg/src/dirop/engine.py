"""Base-tuple validation and the W*-factorizations built from base tuples."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .digraph import ROWS, Arc, Vertex, WStar
from .pathkit import (ConcatenationError, DiPath, TwoFactor, concatenate,
                      cyclic_concatenate, translate)
from .store import BaseTuple


class HypothesisError(ValueError):
    def __init__(self, message: str, pair=None, arc=None):
        super().__init__(message)
        self.pair = pair
        self.arc = arc


def _cols(lo: int, hi: int, m: int | None = None) -> frozenset[Vertex]:
    return frozenset(Vertex(i % m if m else i, r) for i in range(lo, hi + 1) for r in ROWS)


@dataclass(frozen=True)
class RegionSet:
    p: int
    k: int
    m: int
    V0: frozenset
    V0dag: frozenset
    V: tuple  # V[j-1] is V_j

    def region(self, i: int) -> frozenset:
        return self.V0 if i == 0 else self.V[i - 1]

    def intersections(self) -> dict[tuple[int, int], frozenset]:
        return {(i, j): self.region(i) & self.region(j)
                for i, j in combinations(range(self.k + 1), 2)}


def regions(p: int, k: int, m: int | None = None) -> RegionSet:
    """V_0, V_0-dagger and V_1..V_k inside W*_{2m}, m = p + 4k by default."""
    m = p + 4 * k if m is None else m
    V0 = _cols(0, p + 1, m)
    V0dag = _cols(2, p - 1, m)
    Vj = tuple(_cols(p + 4 * j - 4, p + 4 * j + 1, m) for j in range(1, k + 1))
    return RegionSet(p, k, m, V0, V0dag, Vj)


@dataclass
class ConditionResult:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"condition": self.name, "pass": self.passed, "detail": self.detail}


@dataclass
class ValidationReport:
    t1: int
    q: int
    index: int
    conditions: list[ConditionResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return len(self.conditions) == 6 and all(c.passed for c in self.conditions)

    def failures(self) -> list[ConditionResult]:
        return [c for c in self.conditions if not c.passed]

    def to_dict(self) -> dict:
        return {"t1": self.t1, "q": self.q, "tuple": self.index, "pass": self.passed,
                "conditions": [c.to_dict() for c in self.conditions]}


def _outside(vertices, allowed) -> list[Vertex]:
    return sorted(v for v in vertices if v not in allowed)


def _concat_detail(seq, cyclic=False) -> str:
    try:
        if cyclic:
            cyclic_concatenate(seq)
        else:
            concatenate(seq)
    except ConcatenationError as exc:
        return str(exc)
    return ""


def validate_base_tuple(bt: BaseTuple) -> ValidationReport:
    """Check conditions B1-B6 in the host W*_{t1+q+24} (m = p + 12)."""
    p = bt.p
    m = p + 12
    X = bt.X.reduce(m)
    Q, R, S, T = (getattr(bt, f).reduce(m) for f in "QRST")
    reg = regions(p, 3, m)
    rep = ValidationReport(bt.t1, bt.q, bt.index)

    bad = []
    for name, verts, allowed in (
        ("X", X.vertices, reg.V0dag),
        ("Q", Q.vertices, reg.V0 - _cols(0, 1, m)),
        ("R", R.vertices, reg.V0 - _cols(p, p + 1, m)),
        ("S", S.vertices, reg.region(1)),
        ("T", T.vertices, reg.region(1)),
    ):
        out = _outside(verts, allowed)
        if out:
            bad.append(f"{name} has {', '.join(map(str, out))} outside its region")
    rep.conditions.append(ConditionResult("B1", not bad, "; ".join(bad)))

    bad = []
    if len(Q) + len(R) != bt.q:
        bad.append(f"len(Q)+len(R) = {len(Q) + len(R)} != q = {bt.q}")
    if len(S) + len(T) != 8:
        bad.append(f"len(S)+len(T) = {len(S) + len(T)} != 8")
    if len(X) != bt.t1:
        bad.append(f"len(X) = {len(X)} != t1 = {bt.t1}")
    rep.conditions.append(ConditionResult("B2", not bad, "; ".join(bad)))

    bad = []
    for (a, va), (b, vb) in combinations(
            (("X", set(X.vertices)), ("Q", set(Q.vertices)), ("R", set(R.vertices))), 2):
        common = sorted(va & vb)
        if common:
            bad.append(f"{a} and {b} share {', '.join(map(str, common))}")
    rep.conditions.append(ConditionResult("B3", not bad, "; ".join(bad)))

    rho_p_R = translate(R, p, m)
    detail = _concat_detail([Q, rho_p_R], cyclic=True)
    rep.conditions.append(ConditionResult("B4", not detail, detail))

    back = -p - 4
    bad = []
    for label, seq in (("(T,Q,S)", [T, Q, S]),
                       ("(rho(S),R,rho(T))", [translate(S, back, m), R, translate(T, back, m)])):
        d = _concat_detail(seq)
        if d:
            bad.append(f"{label}: {d}")
    rep.conditions.append(ConditionResult("B5", not bad, "; ".join(bad)))

    # T pieces are traversed T^k, ..., T^1 in the long cycle, so the T chain
    # that must join is (rho^4(T), T).
    bad = []
    SS = [S, translate(S, 4, m)]
    TT = [translate(T, 4, m), T]
    for label, seq in (("(S,rho4(S))", SS), ("(rho4(T),T)", TT)):
        d = _concat_detail(seq)
        if d:
            bad.append(f"{label}: {d}")
    if not bad:
        common = sorted({v for P in SS for v in P.vertices} & {v for P in TT for v in P.vertices})
        if common:
            bad.append(f"S- and T-concatenations share {', '.join(map(str, common))}")
    rep.conditions.append(ConditionResult("B6", not bad, "; ".join(bad)))
    return rep


def cycle_sequence(bt: BaseTuple, k: int) -> list[DiPath]:
    """(Q, S^1..S^k, R, T^k..T^1) reduced into W*_{t1+q+8k}."""
    m = bt.p + 4 * k
    S = [translate(bt.S, 4 * (j - 1), m) for j in range(1, k + 1)]
    T = [translate(bt.T, 4 * (j - 1), m) for j in range(1, k + 1)]
    return [bt.Q.reduce(m), *S, bt.R.reduce(m), *reversed(T)]


def build_factor(bt: BaseTuple, k: int) -> TwoFactor:
    """X together with the cyclic concatenation of the translated pieces."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    host = WStar(bt.t1 + bt.q + 8 * k)
    big = cyclic_concatenate(cycle_sequence(bt, k))
    return TwoFactor((bt.X.reduce(host.m), big), host)


def expected_r(t1: int, q: int) -> int:
    return 9 if (t1 + q) % 4 == 2 else 7


def _first_shared_arc(a_arcs, b_arcs) -> Arc | None:
    common = set(a_arcs) & set(b_arcs)
    return min(common) if common else None


def check_hypotheses(tuples: list[BaseTuple]) -> list[str]:
    """Arc-disjointness hypotheses on a case set; returns problems (empty = all hold).

    (a) the r factors built at k = 2 are pairwise arc-disjoint;
    (b) every Q_a is arc-disjoint from every rho^p(R_b), in the k = 0 host W*_{t1+q}.
    """
    problems = []
    factors = {}
    for i, bt in enumerate(tuples):
        try:
            factors[i] = build_factor(bt, 2)
        except ConcatenationError as exc:
            problems.append(f"tuple {i}: k=2 factor cannot be built: {exc}")
    for a, b in combinations(sorted(factors), 2):
        arc = _first_shared_arc(factors[a].arcs(), factors[b].arcs())
        if arc:
            problems.append(f"k=2 factors {a} and {b} share arc {arc}")
    p = tuples[0].p
    m = p
    for a, ta in enumerate(tuples):
        qa = ta.Q.reduce(m).arcs()
        for b, tb in enumerate(tuples):
            arc = _first_shared_arc(qa, translate(tb.R, p, m).arcs())
            if arc:
                problems.append(f"Q_{a} and rho^p(R_{b}) share arc {arc}")
    return problems


def assemble_w_factorization(tuples: list[BaseTuple], k: int,
                             check: bool = True) -> list[TwoFactor]:
    """r factors of W*_{t1+q+8k}, one per base tuple.

    With ``check`` the case hypotheses are confirmed first and the result is
    verified directly as an arc partition of the target host.
    """
    if not tuples:
        raise HypothesisError("no base tuples")
    t1, q = tuples[0].t1, tuples[0].q
    r = expected_r(t1, q)
    if len(tuples) != r:
        raise HypothesisError(f"(t1, q) = ({t1}, {q}) needs r = {r} tuples, got {len(tuples)}")
    if check:
        problems = check_hypotheses(tuples)
        if problems:
            raise HypothesisError("; ".join(problems))
    factors = [build_factor(bt, k) for bt in tuples]
    if check:
        from .verify import verify_factorization
        outcome = verify_factorization(factors, factors[0].host, [t1, q + 8 * k])
        if not outcome.passed:
            raise HypothesisError(f"assembled factorization fails verification: "
                                  f"{outcome.summary()}")
    return factors


def validate_case(tuples: list[BaseTuple]) -> tuple[list[ValidationReport], list[str]]:
    return [validate_base_tuple(bt) for bt in tuples], check_hypotheses(tuples)
