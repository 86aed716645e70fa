"""Property suites: translation, concatenation, verifier symmetry, certificate bytes."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from dirop.digraph import Vertex
from dirop.pathkit import (DiCycle, DiPath, TwoFactor, concatenate, cyclic_concatenate,
                           translate)
from dirop.solver import Certificate, normalize, solve
from dirop.verify import verify_factorization

vertices = st.builds(Vertex, st.integers(-40, 40), st.sampled_from("xy"))
paths = st.lists(vertices, min_size=2, max_size=20, unique=True).map(
    lambda vs: DiPath(tuple(vs)))


@given(paths, st.integers(-50, 50), st.integers(-50, 50))
def test_translation_additive(path, a, b):
    assert translate(translate(path, a), b) == translate(path, a + b)


@st.composite
def paths_mod(draw, moduli):
    m = draw(st.sampled_from(moduli))
    cells = st.builds(Vertex, st.integers(0, m - 1), st.sampled_from("xy"))
    vs = draw(st.lists(cells, min_size=2, max_size=2 * m, unique=True))
    return m, DiPath(tuple(vs))


@given(paths_mod([7, 9, 13, 31]), st.integers(-50, 50), st.integers(-50, 50))
def test_translation_additive_mod_odd_m(mp, a, b):
    m, p = mp
    assert translate(translate(p, a, m), b, m) == translate(p, a + b, m)


@given(paths_mod([8, 10, 16]), st.integers(-25, 25), st.integers(-25, 25))
def test_even_shifts_compose_mod_even_m(mp, a, b):
    m, p = mp
    assert translate(translate(p, 2 * a, m), 2 * b, m) == translate(p, 2 * (a + b), m)


@given(paths)
def test_translation_zero_is_identity(path):
    assert translate(path, 0) == path


@st.composite
def split_paths(draw):
    vs = draw(st.lists(vertices, min_size=3, max_size=25, unique=True))
    cuts = sorted(draw(st.sets(st.integers(1, len(vs) - 2), max_size=len(vs) - 2)))
    bounds = [0, *cuts, len(vs) - 1]
    pieces = [DiPath(tuple(vs[bounds[i]:bounds[i + 1] + 1])) for i in range(len(bounds) - 1)]
    return vs, pieces


@given(split_paths())
def test_concatenation_length_and_vertex_laws(data):
    vs, pieces = data
    joined = concatenate(pieces)
    assert len(joined) == sum(len(p) for p in pieces)
    assert len(joined.vertices) == sum(len(p.vertices) for p in pieces) - (len(pieces) - 1)
    assert joined.vertices == tuple(vs)


@given(split_paths())
def test_cyclic_concatenation_laws(data):
    vs, pieces = data
    closing = DiPath((vs[-1], vs[0]))
    cyc = cyclic_concatenate(pieces + [closing])
    assert len(cyc) == sum(len(p) for p in pieces) + 1
    assert cyc == DiCycle(tuple(vs))


IN_SCOPE = [(t1, t2) for t1 in (4, 6) for t2 in range(8, 40, 2) if t1 + t2 >= 14]


def _shuffled(cert: Certificate, rng: random.Random) -> list[TwoFactor]:
    factors = []
    for f in cert.factors:
        cycles = []
        for c in f.cycles:
            i = rng.randrange(len(c))
            cycles.append(DiCycle(c.vertices[i:] + c.vertices[:i]))
        rng.shuffle(cycles)
        factors.append(TwoFactor(cycles, f.host))
    rng.shuffle(factors)
    return factors


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(IN_SCOPE), st.integers(0, 2**32))
def test_verifier_order_insensitive(pair, seed):
    cert = solve(normalize(*pair))
    rng = random.Random(seed)
    assert verify_factorization(_shuffled(cert, rng), cert.host, cert.lengths).passed
    broken = Certificate(cert.host, cert.factors[:-1] + [cert.factors[0]], cert.lengths)
    base = verify_factorization(broken.factors, broken.host, broken.lengths)
    again = verify_factorization(_shuffled(broken, rng), broken.host, broken.lengths)
    assert not base.passed and not again.passed
    assert base.kinds() == again.kinds()


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(IN_SCOPE))
def test_certificate_roundtrip_bytes(pair):
    text = solve(normalize(*pair)).dumps()
    again = Certificate.loads(text)
    assert again.dumps() == text
    assert again.verify().passed
