"""End-to-end (C_t1, C_t2)-factorizations of K*_n for t1 in {4, 6}.

K*_{2m} is split as (G wr K_2)* plus one (C wr E_2)* per Hamilton cycle C of
K_m - G.  The first piece is W*_{2m} and is factored from base tuples or the
stored special-case data; each blown cycle contributes four factors.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field

from .digraph import CompleteSymmetric, HostSpec, host_from_dict, parse_vertex
from .engine import assemble_w_factorization
from .haggkvist import d_factorize_blowup_star
from .hamdecomp import DEFAULT_SEED, decompose_k, km_cache_path
from .pathkit import DiCycle, TwoFactor
from .store import (SPECIALS, case_path, file_checksum, load_case, load_special,
                    special_path)
from .verify import verify_factorization

log = logging.getLogger(__name__)

CERTIFICATE_VERSION = 1
Q_CHOICES = {4: (10, 14, 16, 20), 6: (14, 16, 18, 20)}


class OutOfScopeError(ValueError):
    pass


class VerificationError(RuntimeError):
    pass


class CertificateFormatError(ValueError):
    pass


@dataclass(frozen=True)
class SolveRequest:
    t1: int
    t2: int

    @property
    def n(self) -> int:
        return self.t1 + self.t2

    @property
    def m(self) -> int:
        return self.n // 2


@dataclass(frozen=True)
class Special:
    t1: int
    t2: int


@dataclass(frozen=True)
class OutOfScope:
    t1: int
    t2: int
    reason: str


def normalize(t1: int, t2: int) -> SolveRequest | OutOfScope:
    """Order the pair so a member of {4, 6} leads, or say why it is not handled."""
    if (t1, t2) == (3, 3):
        return OutOfScope(3, 3, "(3,3) is the one pair with no solution; "
                                "the exhaustive oracle confirms it on K*_6")
    if t1 < 2 or t2 < 2:
        return OutOfScope(t1, t2, "cycle lengths must be at least 2")
    if t1 % 2 or t2 % 2:
        return OutOfScope(t1, t2, "only even cycle lengths are constructed here")
    if t1 not in (4, 6) and t2 in (4, 6):
        t1, t2 = t2, t1
    if t1 not in (4, 6):
        return OutOfScope(t1, t2, "neither length is 4 or 6; such pairs need the "
                                  "recursive construction, which is not implemented")
    if t1 + t2 < 14:
        return OutOfScope(t1, t2, f"t1 + t2 = {t1 + t2} < 14 is below the range of "
                                  "the construction")
    return SolveRequest(t1, t2)


def q_and_k(req: SolveRequest) -> tuple[int, int] | Special | OutOfScope:
    if (req.t1, req.t2) in SPECIALS:
        return Special(req.t1, req.t2)
    if req.t1 not in Q_CHOICES or req.t2 % 2 or req.n < 14:
        return OutOfScope(req.t1, req.t2, "not a normalized in-scope pair")
    for q in Q_CHOICES[req.t1]:
        if (req.t2 - q) % 8 == 0:
            if q > req.t2:
                break
            return q, (req.t2 - q) // 8
    return OutOfScope(req.t1, req.t2, "no base-tuple case applies")


@dataclass
class Certificate:
    host: HostSpec
    factors: list[TwoFactor]
    lengths: tuple[int, int]
    provenance: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "version": CERTIFICATE_VERSION,
            "host": self.host.to_dict(),
            "lengths": list(self.lengths),
            "provenance": self.provenance,
            "factors": [[c.tokens() for c in f.cycles] for f in self.factors],
        }

    def dumps(self) -> str:
        """JSON text with one factor per line; identical certificates give identical bytes."""
        head = self.to_dict()
        factors = head.pop("factors")
        text = json.dumps(head, sort_keys=True, indent=2)
        rows = ",\n".join("    " + json.dumps(f) for f in factors)
        return text[:-2] + ',\n  "factors": [\n' + rows + "\n  ]\n}\n"

    @classmethod
    def from_dict(cls, data: dict) -> Certificate:
        try:
            if data["version"] != CERTIFICATE_VERSION:
                raise CertificateFormatError(f"unsupported version {data['version']!r}")
            host = host_from_dict(data["host"])
            lengths = tuple(int(x) for x in data["lengths"])
            factors = [TwoFactor([DiCycle(tuple(parse_vertex(t) for t in cyc)) for cyc in f], host)
                       for f in data["factors"]]
            provenance = dict(data.get("provenance", {}))
        except CertificateFormatError:
            raise
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise CertificateFormatError(f"malformed certificate: {exc}") from exc
        return cls(host, factors, lengths, provenance)

    @classmethod
    def loads(cls, text: str) -> Certificate:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CertificateFormatError(f"not valid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise CertificateFormatError("certificate must be a JSON object")
        return cls.from_dict(data)

    def verify(self):
        return verify_factorization(self.factors, self.host, self.lengths)


def _w_factors(req: SolveRequest, plan) -> tuple[list[TwoFactor], dict]:
    if isinstance(plan, Special):
        sp = load_special(req.t1, req.t2)
        path = special_path(req.t1, req.t2)
        return list(sp.factors), {"q": None, "k": None, "special": True,
                                  "data": {path.name: file_checksum(path)}}
    q, k = plan
    factors = assemble_w_factorization(load_case(req.t1, q), k)
    path = case_path(req.t1, q)
    return factors, {"q": q, "k": k, "special": False,
                     "data": {path.name: file_checksum(path)}}


def solve(req: SolveRequest, seed: int = DEFAULT_SEED) -> Certificate:
    """A verified certificate for OP*(t1, t2); raises rather than emit anything unverified."""
    if isinstance(req, OutOfScope):
        raise OutOfScopeError(f"({req.t1},{req.t2}): {req.reason}")
    norm = normalize(req.t1, req.t2)
    if isinstance(norm, OutOfScope):
        raise OutOfScopeError(f"({norm.t1},{norm.t2}): {norm.reason}")
    plan = q_and_k(norm)
    if isinstance(plan, OutOfScope):
        raise OutOfScopeError(f"({plan.t1},{plan.t2}): {plan.reason}")

    host = CompleteSymmetric(norm.n, two_row=True)
    w_factors, provenance = _w_factors(norm, plan)
    split = decompose_k(norm.m, seed)
    if split.method == "cache":
        path = km_cache_path(norm.m)
        provenance["data"][path.name] = file_checksum(path)

    factors = [TwoFactor(f.cycles, host) for f in w_factors]
    for cycle in split.ham_cycles:
        for f in d_factorize_blowup_star(list(cycle), norm.t1, norm.t2):
            factors.append(TwoFactor(f.cycles, host))

    provenance.update(seed=seed, r=len(w_factors), km_split=split.summary())
    cert = Certificate(host, factors, (norm.t1, norm.t2), provenance)
    outcome = cert.verify()
    if not outcome.passed:
        raise VerificationError(f"internal error, certificate for ({norm.t1},{norm.t2}) "
                                f"fails verification: {outcome.summary()}")
    log.info("solved (%d,%d): %d factors", norm.t1, norm.t2, len(factors))
    return cert
