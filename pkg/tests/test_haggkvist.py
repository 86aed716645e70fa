import pytest

from dirop.digraph import BlownCycle, Vertex, vx, vy
from dirop.haggkvist import (BlockError, BlockPlan, d_factorize_blowup_star,
                             f_factorize_blowup, plan_blocks)
from dirop.verify import verify_factorization


def undirected(cycles):
    out = set()
    for c in cycles:
        for i in range(len(c)):
            out.add(frozenset((c[i], c[(i + 1) % len(c)])))
    return out


def blowup_edges(columns):
    m = len(columns)
    return {frozenset((Vertex(columns[i], r), Vertex(columns[(i + 1) % m], s)))
            for i in range(m) for r in "xy" for s in "xy"}


def test_first_block_of_length_two():
    f1, f2 = f_factorize_blowup(range(5), [4, 6])
    assert f1[0] == [vx(0), vy(1), vy(2), vx(1)]
    assert f2[0] == [vy(0), vx(1), vx(2), vy(1)]


def test_m5_lengths_4_6():
    f1, f2 = f_factorize_blowup(range(5), [4, 6])
    for f in (f1, f2):
        assert sorted(len(c) for c in f) == [4, 6]
        assert sorted(v for c in f for v in c) == sorted(Vertex(c, r) for c in range(5) for r in "xy")
    e1, e2 = undirected(f1), undirected(f2)
    assert not e1 & e2
    assert e1 | e2 == blowup_edges(list(range(5)))
    assert len(e1 | e2) == 20


def test_three_blocks():
    cols = [4, 0, 3, 1, 2, 6, 5]
    f1, f2 = f_factorize_blowup(cols, [4, 4, 6])
    assert undirected(f1) | undirected(f2) == blowup_edges(cols)
    assert sorted(len(c) for c in f2) == [4, 4, 6]


def test_length_two_rejected():
    with pytest.raises(BlockError, match="at least 4"):
        f_factorize_blowup(range(5), [2, 8])
    with pytest.raises(BlockError):
        BlockPlan(tuple(range(5)), (1, 4))


def test_bad_sums_rejected():
    with pytest.raises(BlockError):
        plan_blocks(range(5), [4, 4])
    with pytest.raises(BlockError):
        d_factorize_blowup_star(range(7), 4, 8)


def test_plan_boundaries():
    plan = plan_blocks(range(7), [4, 10])
    assert plan.blocks == (2, 5)
    assert plan.starts() == [0, 2]
    assert plan.end_rows() == [("x", "y"), ("x", "y")]


@pytest.mark.parametrize("m,t1,t2", [(7, 4, 10), (7, 6, 8), (10, 4, 16), (4, 4, 4)])
def test_directed_lift(m, t1, t2):
    cols = list(range(m))
    fs = d_factorize_blowup_star(cols, t1, t2)
    assert len(fs) == 4
    assert sum(len(f.arcs()) for f in fs) == 8 * m
    assert all(f.lengths() == sorted([t1, t2]) for f in fs)
    assert verify_factorization(fs, BlownCycle(cols), [t1, t2]).passed


def test_orientations_are_complementary():
    fs = d_factorize_blowup_star([0, 3, 6, 2, 5, 1, 4], 6, 8)
    for a, b in ((fs[0], fs[1]), (fs[2], fs[3])):
        assert set(b.arcs()) == {(h, t) for t, h in a.arcs()}
        assert not set(a.arcs()) & set(b.arcs())


def test_no_vertical_arcs():
    for f in d_factorize_blowup_star(range(9), 6, 12):
        assert all(a.tail.column != a.head.column for a in f.arcs())
