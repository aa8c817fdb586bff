from itertools import combinations

import pytest

from polygv.complexes import APEX, LinkConditionError, cvert, tvert
from polygv.constructions import (
    CyclicSpec,
    DiamondSpec,
    MWSpec,
    ball_boundary,
    block_decomposition,
    cyclic_facets,
    cyclic_is_face,
    diamond_boundary,
    diamond_g_closed,
    lex_mw_via_cyclic,
    lex_range,
    lex_subdivision,
    mw_boundary,
    mw_g_closed,
)
from polygv.vectors import check_simplicial_DS, f_to_h, h_to_g


def cface(*idx):
    return frozenset(cvert(i) for i in idx)


# -- cyclic polytopes ---------------------------------------------------------


def test_pentagon_facets():
    pent = cyclic_facets(2, 5)
    assert pent.facets == {cface(1, 2), cface(2, 3), cface(3, 4), cface(4, 5), cface(1, 5)}


def test_c47_counts():
    c = cyclic_facets(4, 7)
    assert len(c.facets) == 14
    assert c.f_vector().counts == (1, 7, 21, 28, 14)
    assert c.euler_characteristic() == 1 + (-1) ** 3


def test_c46_contains_1245():
    assert cface(1, 2, 4, 5) in cyclic_facets(4, 6).facets


def test_spec_validation():
    with pytest.raises(ValueError):
        CyclicSpec(3, 3)
    with pytest.raises(ValueError):
        MWSpec(0, 4, 7)
    with pytest.raises(ValueError):
        MWSpec(5, 4, 7)
    with pytest.raises(ValueError):
        MWSpec(2, 4, 4)
    with pytest.raises(ValueError):
        DiamondSpec(1, 3, 9, 1)
    with pytest.raises(ValueError):
        DiamondSpec(1, 6, 9, 5)


def test_block_decomposition():
    dec = block_decomposition({2, 3, 5, 7, 8, 9}, 10)
    assert [(b.start, b.end) for b in dec.blocks] == [(2, 3), (5, 5), (7, 9)]
    assert not dec.isolated
    assert dec.inner_odd_count() == 2
    assert block_decomposition({1, 4, 7}, 7).isolated


@pytest.mark.parametrize(
    "subset,K,m,want",
    [
        ({2, 4}, 2, 6, False),
        ({1, 6}, 2, 6, True),
        ({2, 3}, 2, 6, True),
        ({1, 5}, 2, 6, False),
        (set(), 2, 6, True),
    ],
)
def test_cyclic_is_face_examples(subset, K, m, want):
    assert cyclic_is_face(subset, K, m) is want


def test_cyclic_is_face_rejects_oversized():
    with pytest.raises(ValueError):
        cyclic_is_face({1, 2, 3}, 2, 6)


def test_gale_criterion_matches_downward_closure():
    for K in range(1, 6):
        for m in range(K + 1, 11):
            closure = cyclic_facets(K, m).faces
            for size in range(K + 1):
                for S in combinations(range(1, m + 1), size):
                    assert (cface(*S) in closure) == cyclic_is_face(S, K, m), (K, m, S)


# -- MW polytopes ---------------------------------------------------------------


def test_mw_247():
    mw = mw_boundary(MWSpec(2, 4, 7))
    assert len(mw.vertices) == 7
    assert len(mw.facets) == 11
    assert mw.f_vector().counts == (1, 7, 18, 22, 11)
    h = f_to_h(mw.f_vector(), 4)
    assert h.entries == (1, 3, 3, 3, 1)
    assert check_simplicial_DS(h)
    assert h_to_g(h).entries == (1, 2, 0)
    assert mw_g_closed(MWSpec(2, 4, 7)).entries == (1, 2, 0)


def test_mw_348_g():
    g = h_to_g(f_to_h(mw_boundary(MWSpec(3, 4, 8)).f_vector(), 4))
    assert g.entries == (1, 3, 0)
    assert mw_g_closed(MWSpec(3, 4, 8)).entries == (1, 3, 0)


def test_mw_closed_form_small_grid():
    for K in range(2, 5):
        for D in range(K, 7):
            for N in range(D + 1, 10):
                spec = MWSpec(K, D, N)
                b = mw_boundary(spec)
                assert b.is_pure() and b.dim == D - 1
                h = f_to_h(b.f_vector(), D)
                assert check_simplicial_DS(h), spec
                assert h_to_g(h) == mw_g_closed(spec), spec


def test_mw_vertex_link_reduction_k1_and_k2():
    cases = [(1, 4, 8), (1, 3, 7), (2, 5, 9), (2, 4, 8), (2, 6, 10)]
    for k, D, N in cases:
        big = mw_boundary(MWSpec(2 * k, D, N))
        link = big.link([cvert(1)])
        m = N - D + 2 * k
        shifted = link.relabel({cvert(i): cvert(i - 1) for i in range(2, m + 1)})
        assert shifted == mw_boundary(MWSpec(2 * k - 1, D - 1, N - 1)), (k, D, N)


def test_mw_degenerate_k_equals_d_is_cyclic():
    # T shrinks to a point standing in for the last cyclic vertex
    mw = mw_boundary(MWSpec(3, 3, 8))
    cyc = cyclic_facets(3, 8)
    relabeled = mw.relabel({tvert(1): cvert(8)})
    assert relabeled == cyc


# -- lexicographic subdivisions ----------------------------------------------


def test_lex_pentagon_examples():
    assert lex_subdivision(CyclicSpec(2, 5), 1).facets == {
        cface(1, 2, 3),
        cface(1, 3, 4),
        cface(1, 4, 5),
    }
    assert lex_subdivision(CyclicSpec(2, 5), 2).facets == {
        cface(1, 2, 5),
        cface(2, 3, 4),
        cface(2, 4, 5),
    }


def test_lex_range_and_validation():
    assert lex_range(CyclicSpec(2, 5)) == 3
    assert lex_range(MWSpec(2, 4, 8)) == 4
    with pytest.raises(ValueError):
        lex_subdivision(CyclicSpec(2, 5), 4)
    with pytest.raises(ValueError):
        lex_subdivision(CyclicSpec(2, 5), 0)


def test_lex_last_index_is_single_pull_into_simplex():
    spec = CyclicSpec(2, 5)
    ball = lex_subdivision(spec, 3)
    # pushes strip c1, c2; the pull acts on the triangle c3 c4 c5
    assert cface(3, 4, 5) in ball.facets


def test_lex_is_subdivision_of_base():
    for spec, amax in [(CyclicSpec(2, 6), 4), (MWSpec(2, 4, 8), 4), (MWSpec(4, 5, 9), 4)]:
        rim = (
            cyclic_facets(spec.K, spec.m)
            if isinstance(spec, CyclicSpec)
            else mw_boundary(spec)
        )
        dim = spec.K if isinstance(spec, CyclicSpec) else spec.D
        for a in range(1, amax + 1):
            ball = lex_subdivision(spec, a)
            assert ball.is_pure() and ball.dim == dim
            assert set(ball.vertices) == set(rim.vertices)
            assert ball_boundary(ball) == rim


def test_lex_commute_small_grid():
    for K, D, N in [(2, 4, 7), (2, 4, 8), (2, 5, 9), (4, 5, 9), (4, 6, 9), (3, 4, 8)]:
        spec = MWSpec(K, D, N)
        for a in range(1, lex_range(spec) + 1):
            assert lex_subdivision(spec, a) == lex_mw_via_cyclic(spec, a), (spec, a)


# -- diamonds --------------------------------------------------------------------


@pytest.mark.parametrize("a,want", [(1, (1, 3, 3)), (2, (1, 3, 2)), (4, (1, 3, 0))])
def test_diamond_g_at_169(a, want):
    dia = diamond_boundary(DiamondSpec(1, 6, 9, a))
    assert h_to_g(f_to_h(dia.f_vector(), 5)).entries == want
    assert diamond_g_closed(1, 6, 9, a).entries == want


def test_diamond_is_sphere():
    dia = diamond_boundary(DiamondSpec(1, 6, 9, 2))
    assert dia.is_pure() and dia.dim == 4
    assert len(dia.vertices) == 9
    assert dia.euler_characteristic() == 1 + (-1) ** 4


def test_diamond_f_relation():
    for a in range(1, 5):
        spec = DiamondSpec(1, 6, 9, a)
        dia = diamond_boundary(spec)
        ball = lex_subdivision(spec.base, a)
        rim = mw_boundary(spec.base)
        fd, fb, fr = dia.f_vector().counts, ball.f_vector().counts, rim.f_vector().counts
        for j in range(len(fd)):
            rhs = (fb[j] if j < len(fb) else 0) + (fr[j - 1] if 1 <= j <= len(fr) else 0)
            assert fd[j] == rhs


def test_diamond_contraction_is_previous_diamond():
    spec = DiamondSpec(1, 6, 9, 2)  # diamond over the (2,4,8) base
    dia = diamond_boundary(spec)
    contracted = dia.contract_edge(cvert(1), APEX)
    m = spec.n - spec.d + 2 * spec.k + 1
    relabeled = contracted.relabel(
        {cvert(1): APEX, **{cvert(i): cvert(i - 1) for i in range(2, m + 1)}}
    )
    assert relabeled == diamond_boundary(DiamondSpec(1, 6, 8, 1))


def test_diamond_contraction_h_relation():
    for a in (2, 3, 4):
        spec = DiamondSpec(1, 6, 9, a)
        dia = diamond_boundary(spec)
        contracted = dia.contract_edge(cvert(1), APEX)
        h_dia = f_to_h(dia.f_vector(), 5).entries
        h_con = f_to_h(contracted.f_vector(), 5).entries
        lk = mw_boundary(spec.base).link([cvert(1)])
        h_lk = f_to_h(lk.f_vector(), 3).entries
        for j in range(len(h_dia)):
            rhs = h_con[j] + (h_lk[j - 1] if 1 <= j <= len(h_lk) else 0)
            assert h_dia[j] == rhs, (a, j)


def test_diamond_a1_contraction_refused():
    dia = diamond_boundary(DiamondSpec(1, 6, 9, 1))
    with pytest.raises(LinkConditionError):
        dia.contract_edge(cvert(1), APEX)


def test_diamond_g_closed_validates():
    with pytest.raises(ValueError):
        diamond_g_closed(1, 6, 9, 5)
    with pytest.raises(ValueError):
        diamond_g_closed(2, 5, 9, 1)  # d < 2k+2
