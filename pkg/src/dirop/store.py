"""Plain-text storage for base tuples and special-case factorizations.

Case files::

    # comment
    case t1=4 q=10 r=9
    X: x4 x3 y5 y3
    Q: y7 x5 y6 y4 x6 x7
    R: ...
    S: ...
    T: ...
    (repeated r times; each tuple starts at its X: line)

Special files::

    special t1=4 t2=12
    F0: x5 x4 y3 y4 ; x0 x3 x2 ...

Cycles are written without the closing repeat of the first vertex (a closing
repeat is accepted on input).  ``OBK_DATA_DIR`` overrides the embedded data
directory.
"""

from __future__ import annotations

import hashlib
import os
import re
from dataclasses import dataclass
from pathlib import Path

from .digraph import WStar
from .pathkit import DiCycle, DiPath, PathError, TwoFactor

CASES = {
    (4, 10): 9, (4, 14): 9, (6, 16): 9, (6, 20): 9,
    (4, 16): 7, (4, 20): 7, (6, 14): 7, (6, 18): 7,
}
SPECIALS = {(4, 12): 7, (6, 8): 9, (6, 10): 7, (6, 12): 9}

_CASE_HEADER = re.compile(r"^case\s+t1=(\d+)\s+q=(\d+)\s+r=(\d+)$")
_SPECIAL_HEADER = re.compile(r"^special\s+t1=(\d+)\s+t2=(\d+)$")
_FACTOR_LINE = re.compile(r"^F(\d+):(.*)$")
FIELDS = ("X", "Q", "R", "S", "T")


class DataFormatError(ValueError):
    def __init__(self, message: str, source: str = "<string>", line: int | None = None):
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {message}")
        self.source = source
        self.line = line


class UnknownCaseError(KeyError):
    pass


@dataclass(frozen=True)
class BaseTuple:
    t1: int
    q: int
    index: int
    X: DiCycle
    Q: DiPath
    R: DiPath
    S: DiPath
    T: DiPath

    @property
    def p(self) -> int:
        return (self.t1 + self.q) // 2


@dataclass(frozen=True)
class CaseTable:
    t1: int
    q: int
    tuples: tuple[BaseTuple, ...]

    @property
    def r(self) -> int:
        return len(self.tuples)


@dataclass(frozen=True)
class SpecialCaseFactorization:
    t1: int
    t2: int
    factors: tuple[TwoFactor, ...]

    @property
    def host(self) -> WStar:
        return WStar(self.t1 + self.t2)


def data_dir() -> Path:
    env = os.environ.get("OBK_DATA_DIR")
    return Path(env) if env else Path(__file__).parent / "data"


def case_path(t1: int, q: int) -> Path:
    return data_dir() / "cases" / f"case_t{t1}_q{q}.txt"


def special_path(t1: int, t2: int) -> Path:
    return data_dir() / "special" / f"special_t{t1}_t{t2}.txt"


def file_checksum(path: Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _content_lines(text: str):
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield n, line


def parse_case(text: str, source: str = "<string>") -> CaseTable:
    header = None
    tuples: list[dict] = []
    for n, line in _content_lines(text):
        if header is None:
            m = _CASE_HEADER.match(line)
            if not m:
                raise DataFormatError(f"expected case header, got {line!r}", source, n)
            header = tuple(int(g) for g in m.groups())
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in FIELDS:
            raise DataFormatError(f"malformed line {line!r}", source, n)
        if key == "X":
            tuples.append({"_line": n})
        elif not tuples:
            raise DataFormatError(f"{key}: before any X: line", source, n)
        current = tuples[-1]
        if key in current:
            raise DataFormatError(f"duplicate {key}: in tuple {len(tuples) - 1}", source, n)
        try:
            current[key] = (DiCycle if key == "X" else DiPath).parse(rest)
        except (ValueError, PathError) as exc:
            raise DataFormatError(str(exc), source, n) from None
    if header is None:
        raise DataFormatError("zero tuples: missing case header", source)
    t1, q, r = header
    if not tuples:
        raise DataFormatError("zero tuples", source)
    if len(tuples) != r:
        raise DataFormatError(f"header says r={r} but {len(tuples)} tuples given", source)
    out = []
    for i, tp in enumerate(tuples):
        missing = [f for f in FIELDS if f not in tp]
        if missing:
            raise DataFormatError(f"tuple {i} lacks {missing}", source, tp["_line"])
        if len(tp["X"]) != t1:
            raise DataFormatError(f"tuple {i}: len(X)={len(tp['X'])} != t1={t1}",
                                  source, tp["_line"])
        if len(tp["Q"]) + len(tp["R"]) != q:
            raise DataFormatError(f"tuple {i}: B2 violated, len(Q)+len(R) != {q}",
                                  source, tp["_line"])
        if len(tp["S"]) + len(tp["T"]) != 8:
            raise DataFormatError(f"tuple {i}: B2 violated, len(S)+len(T) != 8",
                                  source, tp["_line"])
        out.append(BaseTuple(t1, q, i, *(tp[f] for f in FIELDS)))
    return CaseTable(t1, q, tuple(out))


def serialize_case(table: CaseTable) -> str:
    lines = [f"case t1={table.t1} q={table.q} r={table.r}"]
    for bt in table.tuples:
        lines.append("")
        for f in FIELDS:
            lines.append(f"{f}: {getattr(bt, f)}")
    return "\n".join(lines) + "\n"


def parse_special(text: str, source: str = "<string>") -> SpecialCaseFactorization:
    header = None
    factors: list[TwoFactor] = []
    for n, line in _content_lines(text):
        if header is None:
            m = _SPECIAL_HEADER.match(line)
            if not m:
                raise DataFormatError(f"expected special header, got {line!r}", source, n)
            header = (int(m.group(1)), int(m.group(2)))
            continue
        m = _FACTOR_LINE.match(line)
        if not m:
            raise DataFormatError(f"malformed line {line!r}", source, n)
        if int(m.group(1)) != len(factors):
            raise DataFormatError(f"expected F{len(factors)}, got F{m.group(1)}", source, n)
        try:
            cycles = tuple(DiCycle.parse(c) for c in m.group(2).split(";"))
        except (ValueError, PathError) as exc:
            raise DataFormatError(str(exc), source, n) from None
        factors.append(TwoFactor(cycles, WStar(sum(header))))
    if header is None or not factors:
        raise DataFormatError("zero factors", source)
    return SpecialCaseFactorization(header[0], header[1], tuple(factors))


def serialize_special(sp: SpecialCaseFactorization) -> str:
    lines = [f"special t1={sp.t1} t2={sp.t2}"]
    for i, f in enumerate(sp.factors):
        lines.append(f"F{i}: " + " ; ".join(str(c) for c in f.cycles))
    return "\n".join(lines) + "\n"


def _check_in_host(items, host: WStar, what: str) -> None:
    for name, item in items:
        for a in item.reduce(host.m).arcs():
            if not host.has_arc(*a):
                raise DataFormatError(f"{what} {name}: arc {a} not in W*_{host.two_m}")


def load_case(t1: int, q: int) -> list[BaseTuple]:
    if (t1, q) not in CASES:
        raise UnknownCaseError(f"unknown case (t1, q) = ({t1}, {q})")
    path = case_path(t1, q)
    table = parse_case(path.read_text(), str(path))
    if (table.t1, table.q) != (t1, q):
        raise DataFormatError(f"file holds case ({table.t1}, {table.q})", str(path))
    if table.r != CASES[(t1, q)]:
        raise DataFormatError(f"expected r={CASES[(t1, q)]}, file has {table.r}", str(path))
    host = WStar(t1 + q + 24)
    for bt in table.tuples:
        _check_in_host(((f, getattr(bt, f)) for f in FIELDS), host, f"{path} tuple {bt.index}")
    return list(table.tuples)


def load_special(t1: int, t2: int) -> SpecialCaseFactorization:
    if (t1, t2) not in SPECIALS:
        raise UnknownCaseError(f"({t1}, {t2}) is not a special case")
    path = special_path(t1, t2)
    sp = parse_special(path.read_text(), str(path))
    if (sp.t1, sp.t2) != (t1, t2):
        raise DataFormatError(f"file holds special ({sp.t1}, {sp.t2})", str(path))
    if len(sp.factors) != SPECIALS[(t1, t2)]:
        raise DataFormatError(f"expected {SPECIALS[(t1, t2)]} factors, file has "
                              f"{len(sp.factors)}", str(path))
    for i, f in enumerate(sp.factors):
        _check_in_host(((f"F{i}", c) for c in f.cycles), sp.host, str(path))
    return sp


def load_case_file(path) -> CaseTable:
    """Parse an arbitrary case file (used by round-trip and audit tools)."""
    path = Path(path)
    return parse_case(path.read_text(), str(path))
