import pytest

from dirop.digraph import (Arc, BlownCycle, HostError, Vertex, blown_cycle, circulant,
                           circulant_one_three_even, complete_symmetric, host_from_dict,
                           host_w_star, parse_vertex, vx, vy)


@pytest.mark.parametrize("n,arcs", [(3, 6), (6, 30), (14, 182)])
def test_complete_symmetric_arc_count(n, arcs):
    h = complete_symmetric(n)
    assert h.arc_count == arcs
    assert len(list(h.arcs())) == arcs


def test_two_row_complete_symmetric_uses_both_rows():
    h = complete_symmetric(6, two_row=True)
    assert sorted(h.vertices()) == sorted(Vertex(c, r) for c in range(3) for r in "xy")
    assert h.has_arc(vx(0), vy(0))
    assert h.arc_count == 30


def test_circulant_7_12_is_4_regular():
    h = circulant(7, {1, 2})
    assert h.edge_count == 14
    assert h.degree() == 4


def test_circ_7_3_is_one_cycle():
    h = circulant(7, {3})
    assert h.edge_count == 7
    # walk from 0 along +3 visits everything
    seen, c = [], 0
    for _ in range(7):
        seen.append(c)
        c = (c + 3) % 7
    assert sorted(seen) == list(range(7))
    assert all(h.has_arc(vx(a), vx((a + 3) % 7)) for a in range(7))


def test_circ_8_4_is_perfect_matching():
    h = circulant(8, {4})
    assert h.edge_count == 4
    assert h.degree() == 1


def test_one_three_even_only_from_even_start():
    h = circulant_one_three_even(8)
    assert h.has_arc(vx(2), vx(5)) and h.has_arc(vx(5), vx(2))
    assert not h.has_arc(vx(1), vx(4))
    assert h.edge_count == 8 + 4


def test_w_star_vertical_arc_and_census():
    w10 = host_w_star(10)
    assert w10.has_arc(vx(2), vy(2)) and w10.has_arc(vy(2), vx(2))
    assert host_w_star(14).arc_count == 126
    assert host_w_star(16).arc_count == 112


@pytest.mark.parametrize("two_m", range(10, 82, 2))
def test_w_star_census_18m_or_14m(two_m):
    m = two_m // 2
    h = host_w_star(two_m)
    assert h.arc_count == (18 * m if m % 2 else 14 * m)
    assert len(set(h.arcs())) == h.arc_count


def test_w_star_rejects_tiny_and_odd_orders():
    for bad in (6, 8, 11):
        with pytest.raises(HostError):
            host_w_star(bad)


def test_blown_cycle_counts():
    assert blown_cycle([0, 1, 2]).arc_count == 24
    assert blown_cycle([0, 1, 2], directed=False).edge_count == 12
    h = blown_cycle([0, 3, 6, 2, 5, 1, 4])
    assert h.m == 7
    assert h.has_arc(vx(0), vy(3)) and not h.has_arc(vx(0), vx(1))
    assert not h.has_arc(vx(0), vy(0))


def test_blown_cycle_rejects_duplicates():
    with pytest.raises(HostError):
        BlownCycle([0, 1, 1, 2])


def test_host_dict_roundtrip():
    for h in (complete_symmetric(5), complete_symmetric(8, True), circulant(9, {1, 3}),
              circulant_one_three_even(10), blown_cycle([2, 0, 1]), host_w_star(22)):
        assert host_from_dict(h.to_dict()) == h


def test_vertex_tokens():
    assert str(Vertex(7, "y")) == "y7"
    assert parse_vertex("x12") == vx(12)
    assert str(Arc(vx(0), vy(1))) == "x0->y1"
    with pytest.raises(ValueError):
        parse_vertex("z3")
