import pytest

from dirop.hamdecomp import DEFAULT_SEED
from dirop.solver import (Certificate, CertificateFormatError, OutOfScope,
                          OutOfScopeError, Special, SolveRequest, normalize, q_and_k, solve)


def test_normalize_swaps():
    assert normalize(10, 4) == SolveRequest(4, 10)
    assert normalize(6, 14) == SolveRequest(6, 14)


@pytest.mark.parametrize("pair,fragment", [((3, 3), "(3,3)"), ((8, 12), "neither"),
                                           ((5, 9), "even"), ((4, 6), "< 14"),
                                           ((6, 6), "< 14")])
def test_out_of_scope(pair, fragment):
    res = normalize(*pair)
    assert isinstance(res, OutOfScope)
    assert fragment in res.reason


@pytest.mark.parametrize("pair,expected", [((4, 18), (10, 1)), ((6, 14), (14, 0)),
                                           ((4, 10), (10, 0)), ((4, 22), (14, 1)),
                                           ((6, 26), (18, 1)), ((6, 60), (20, 5))])
def test_q_and_k(pair, expected):
    assert q_and_k(normalize(*pair)) == expected


@pytest.mark.parametrize("pair", [(4, 12), (6, 8), (6, 10), (6, 12)])
def test_specials(pair):
    assert q_and_k(normalize(*pair)) == Special(*pair)


def test_every_even_t2_has_a_route():
    for t1 in (4, 6):
        for t2 in range(4, 120, 2):
            req = normalize(t1, t2)
            if isinstance(req, OutOfScope):
                assert t1 + t2 < 14
                continue
            plan = q_and_k(req)
            assert not isinstance(plan, OutOfScope), (t1, t2)
            if isinstance(plan, tuple):
                q, k = plan
                assert k >= 0 and q + 8 * k == t2


@pytest.mark.parametrize("pair,count,r", [((4, 10), 13, 9), ((6, 14), 19, 7), ((6, 8), 13, 9),
                                          ((4, 12), 15, 7)])
def test_factor_counts(pair, count, r):
    cert = solve(normalize(*pair))
    assert len(cert.factors) == count
    assert cert.provenance["r"] == r
    m = sum(pair) // 2
    assert r + 4 * cert.provenance["km_split"]["hamilton_cycles"] == 2 * m - 1


def test_special_flag_in_provenance():
    cert = solve(normalize(6, 12))
    assert cert.provenance["special"] is True
    assert "special_t6_t12.txt" in cert.provenance["data"]


def test_provenance_fields():
    cert = solve(normalize(4, 18))
    prov = cert.provenance
    assert (prov["q"], prov["k"], prov["seed"], prov["special"]) == (10, 1, DEFAULT_SEED, False)
    assert len(prov["data"]["case_t4_q10.txt"]) == 64
    assert prov["km_split"]["G"]["params"] == {"m": 11, "S": [1, 2]}


def test_even_m_records_cache_checksum():
    cert = solve(normalize(6, 14))
    assert "km_10.txt" in cert.provenance["data"]


def test_deterministic_bytes():
    assert solve(normalize(6, 22)).dumps() == solve(normalize(6, 22)).dumps()


def test_other_seed_still_verifies():
    cert = solve(normalize(6, 18), seed=7)
    assert cert.verify().passed
    assert cert.provenance["seed"] == 7


def test_solve_refuses_out_of_scope():
    with pytest.raises(OutOfScopeError, match="3,3"):
        solve(SolveRequest(3, 3))
    with pytest.raises(OutOfScopeError):
        solve(normalize(8, 12))


def test_certificate_parse_errors():
    with pytest.raises(CertificateFormatError):
        Certificate.loads("{")
    with pytest.raises(CertificateFormatError):
        Certificate.loads("[]")
    with pytest.raises(CertificateFormatError):
        Certificate.loads('{"version": 1, "host": {"kind": "nope", "params": {}}, '
                          '"lengths": [4, 10], "factors": []}')
    with pytest.raises(CertificateFormatError, match="version"):
        Certificate.loads('{"version": 99}')
