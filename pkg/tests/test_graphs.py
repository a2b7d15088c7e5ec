import random

import pytest

import oracles
from rank3affine.errors import (CapExceeded, Directed, NotSymmetric, TooLarge)
from rank3affine.families import (ConnectionSet, paley_connection_set,
                                  peisert_connection_set, vls_connection_set)
from rank3affine.fields import build_field
from rank3affine.graphs import (NotStronglyRegular, SrgParams, build_cayley,
                                export_edge_list, export_graph6,
                                is_isomorphic_small, paley_parameter_formula,
                                srg_params)


def paley_graph(p, r):
    f = build_field(p, r)
    return build_cayley(f, paley_connection_set(f))


def neighbor_sets(g):
    return [set(g.neighbors(x)) for x in range(g.q)]


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def test_gf5_squares_is_the_five_cycle():
    g = paley_graph(5, 1)
    assert export_edge_list(g) == "0 1\n0 4\n1 2\n2 3\n3 4\n"


def test_gf4_singleton_is_perfect_matching():
    f = build_field(2, 2)
    g = build_cayley(f, vls_connection_set(f, 3))
    assert [g.degree(x) for x in range(4)] == [1, 1, 1, 1]
    assert g.adjacent(0, 1) and g.adjacent(2, 3)


def test_directed_rejected_without_escape_hatch():
    f = build_field(7, 1)
    conn = vls_connection_set(f, 2, allow_directed=True)
    with pytest.raises(NotSymmetric):
        build_cayley(f, conn)
    g = build_cayley(f, conn, allow_directed=True)
    assert g.directed
    assert all(g.degree(x) == 3 for x in range(7))
    with pytest.raises(Directed):
        srg_params(g)
    with pytest.raises(Directed):
        export_graph6(g)
    with pytest.raises(Directed):
        export_edge_list(g)


def test_degree_equals_connection_size():
    for p, r in [(3, 2), (13, 1), (2, 4)]:
        f = build_field(p, r)
        conn = paley_connection_set(f) if p != 2 else vls_connection_set(f, 3)
        g = build_cayley(f, conn)
        assert all(g.degree(x) == len(conn) for x in range(g.q))


def test_translation_automorphism():
    rng = random.Random(3)
    for p, r in [(3, 2), (7, 2), (13, 1)]:
        f = build_field(p, r)
        g = build_cayley(f, paley_connection_set(f))
        for _ in range(100):
            c, x, y = (rng.randrange(f.q) for _ in range(3))
            assert g.adjacent(x, y) == g.adjacent(f.add(x, c), f.add(y, c))


def test_even_scaling_automorphism_of_paley():
    # multiplication by omega^2 preserves squares, hence adjacency
    for p, r in [(3, 2), (13, 1), (5, 2), (7, 2), (3, 4), (11, 2)]:
        f = build_field(p, r)
        g = build_cayley(f, paley_connection_set(f))
        w2 = f.exp(2)
        for x in range(f.q):
            for y in range(x + 1, f.q):
                assert g.adjacent(x, y) == g.adjacent(f.mul(w2, x), f.mul(w2, y))


# ---------------------------------------------------------------------------
# strong regularity
# ---------------------------------------------------------------------------

def test_srg_paley9():
    g = paley_graph(3, 2)
    res = srg_params(g)
    assert res.as_tuple() == (9, 4, 1, 2)
    assert oracles.brute_srg_params(neighbor_sets(g)) == (9, 4, 1, 2)


def test_srg_vls16_clebsch_parameters():
    f = build_field(2, 4)
    g = build_cayley(f, vls_connection_set(f, 3))
    res = srg_params(g)
    assert res.as_tuple() == (16, 5, 0, 2)
    assert oracles.brute_srg_params(neighbor_sets(g)) == (16, 5, 0, 2)


def test_srg_peisert49_has_paley_parameters():
    f = build_field(7, 2)
    g = build_cayley(f, peisert_connection_set(f, 1))
    res = srg_params(g)
    assert res.as_tuple() == (49, 24, 11, 12)
    assert res == paley_parameter_formula(49)
    assert oracles.brute_srg_params(neighbor_sets(g)) == (49, 24, 11, 12)


def test_not_strongly_regular_witness():
    # the 13-cycle: non-adjacent pairs share 0 or 1 neighbors
    f = build_field(13, 1)
    g = build_cayley(f, ConnectionSet(f, [f.dlog(1), f.dlog(12)]))
    res = srg_params(g)
    assert isinstance(res, NotStronglyRegular)
    x, y = res.witness
    assert not g.adjacent(x, y)


def test_srg_cap():
    g = paley_graph(3, 2)
    with pytest.raises(CapExceeded):
        srg_params(g, cap=8)


def test_feasibility_identity_enforced():
    with pytest.raises(AssertionError):
        SrgParams(9, 4, 1, 3)


def test_paley_formula():
    assert paley_parameter_formula(9).as_tuple() == (9, 4, 1, 2)
    assert paley_parameter_formula(49).as_tuple() == (49, 24, 11, 12)
    from rank3affine.errors import BadResidue
    with pytest.raises(BadResidue):
        paley_parameter_formula(7)


def test_complement_duality():
    for p, r in [(3, 2), (13, 1), (5, 2), (7, 2)]:
        f = build_field(p, r)
        g = build_cayley(f, paley_connection_set(f))
        v, k, lam, mu = srg_params(g).as_tuple()
        comp = srg_params(g.complement())
        assert comp.as_tuple() == (v, v - k - 1, v - 2 - 2 * k + mu, v - 2 * k + lam)


# ---------------------------------------------------------------------------
# isomorphism
# ---------------------------------------------------------------------------

def test_peisert9_isomorphic_to_paley9():
    f = build_field(3, 2)
    g1 = build_cayley(f, peisert_connection_set(f, 1))
    g2 = build_cayley(f, paley_connection_set(f))
    assert is_isomorphic_small(g1, g2)


def test_paley5_isomorphic_to_relabLed_five_cycle():
    f = build_field(5, 1)
    g1 = build_cayley(f, paley_connection_set(f))
    pentagram = build_cayley(f, ConnectionSet(f, [f.dlog(2), f.dlog(3)]))
    assert is_isomorphic_small(g1, pentagram)


def test_paley13_self_complementary():
    g = paley_graph(13, 1)
    assert is_isomorphic_small(g, g.complement())


def test_isomorphism_rejects_above_sixteen():
    g = paley_graph(17, 1)
    with pytest.raises(TooLarge):
        is_isomorphic_small(g, g)


def test_non_isomorphic_same_degree():
    # the Clebsch-parameter graph is triangle-free; a lexicographic
    # connection set of the same size is not
    f = build_field(2, 4)
    clebsch = build_cayley(f, vls_connection_set(f, 3))
    other = build_cayley(f, ConnectionSet(f, [f.dlog(x) for x in (1, 2, 3, 4, 5)]))
    assert not is_isomorphic_small(clebsch, other)


def test_isomorphism_quick_rejects():
    g5 = paley_graph(5, 1)
    g9 = paley_graph(3, 2)
    assert not is_isomorphic_small(g5, g9)


# ---------------------------------------------------------------------------
# exports
# ---------------------------------------------------------------------------

def test_graph6_five_cycle_bytes():
    assert export_graph6(paley_graph(5, 1)) == b"Dhc"


def test_graph6_single_edge():
    f = build_field(2, 1)
    k2 = build_cayley(f, ConnectionSet(f, [0]))
    assert export_graph6(k2) == b"A_"


def test_graph6_decoder_examples():
    assert oracles.decode_graph6(b"A?") == (2, set())
    assert oracles.decode_graph6(b"A_") == (2, {frozenset({0, 1})})


def test_graph6_roundtrip_small():
    for p, r in [(5, 1), (3, 2), (2, 4), (13, 1)]:
        f = build_field(p, r)
        conn = paley_connection_set(f) if p != 2 else vls_connection_set(f, 3)
        g = build_cayley(f, conn)
        v, edges = oracles.decode_graph6(export_graph6(g))
        assert v == g.q
        expected = {frozenset((i, j)) for i in range(g.q) for j in range(i + 1, g.q)
                    if g.adjacent(i, j)}
        assert edges == expected


def test_graph6_long_form_roundtrip():
    f = build_field(2, 6)
    g = build_cayley(f, vls_connection_set(f, 3))
    data = export_graph6(g)
    assert data[0] == 126  # long form marker for v > 62
    v, edges = oracles.decode_graph6(data)
    assert v == 64
    assert len(edges) == g.edge_count()


def test_edge_list_matches_adjacency():
    g = paley_graph(3, 2)
    lines = export_edge_list(g).splitlines()
    assert len(lines) == g.edge_count()
    for line in lines:
        i, j = map(int, line.split())
        assert i < j and g.adjacent(i, j)
