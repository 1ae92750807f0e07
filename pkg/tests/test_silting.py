"""Silting objects, complements, completion and the exchange graph."""
import pytest

from tautilt.corpus import dual_numbers, linear_a, semisimple
from tautilt.errors import NotAlmostComplete, NotRigid, PoolExhausted
from tautilt.algebra import AlgebraSpec, Quiver, build_algebra
from tautilt.presentations import decompose, e_dim, g_vector, is_rigid, iso_test
from tautilt.rep import (direct_sum as rep_sum, is_isomorphic, min_presentation,
                         projective_as_rep, regular, simple, tau_rigid_pair_check)
from tautilt.silting import (SupportTauTiltingPair, complements, complete_to_silting,
                             complete_to_tau_tilting, exchange_graph, integer_det, is_silting,
                             make_silting, maximality_oracle, mutate, pair_to_silting,
                             silting_to_pair, SiltingEngine)
from tautilt.twoterm import Presentation, direct_sum


def P(A, v):
    return Presentation.projective(A, v)


def Sh(A, v):
    return Presentation.shifted(A, v)


def s0_pres(A):
    return min_presentation(simple(A, 0))


def test_is_silting_examples(field):
    A = linear_a(2, field)
    assert is_silting(direct_sum(P(A, 0), P(A, 1)))
    assert is_silting(direct_sum(Sh(A, 0), Sh(A, 1)))
    assert not is_silting(P(A, 0))
    assert not is_silting(direct_sum(P(A, 0), P(A, 0)))


def test_maximality_examples(field):
    A = linear_a(2, field)
    assert not maximality_oracle(P(A, 0), [P(A, 1)])
    assert maximality_oracle(P(A, 0), [])
    G = exchange_graph(A)
    for T in G.vertices:
        assert maximality_oracle(T.presentation(), G.pool())


def test_complements_a1(field):
    A = linear_a(1, field)
    data = complements(Presentation.zero(A))
    assert data.f_plus == P(A, 0) and data.f_minus == Sh(A, 0)
    assert data.d == 1 and data.verified


def test_complements_a2(field):
    A = linear_a(2, field)
    data = complements(P(A, 0))
    found = {g_vector(data.f_plus), g_vector(data.f_minus)}
    assert found == {(0, 1), (1, -1)}
    assert data.f_plus == P(A, 1)
    assert data.d == 1 and data.verified


def test_complements_errors(field):
    A = linear_a(2, field)
    with pytest.raises(NotAlmostComplete):
        complements(direct_sum(P(A, 0), P(A, 1)))
    with pytest.raises(NotRigid):
        complete_to_silting(direct_sum(P(A, 0), Sh(A, 0)))
    B = linear_a(3, field)
    with pytest.raises(NotRigid):
        complements(direct_sum(P(B, 0), Sh(B, 0)))


def test_completion_examples(field):
    A = linear_a(2, field)
    T = complete_to_silting(Presentation.zero(A))
    assert is_silting(T.presentation())
    T = complete_to_silting(P(A, 1))
    assert len(T.summands) == 2 and any(s == P(A, 1) for s in T.summands)
    V = direct_sum(P(A, 0), s0_pres(A))
    assert iso_test(complete_to_silting(V).presentation(), V)


def test_tau_tilting_completion_examples(field):
    A = linear_a(2, field)
    assert is_isomorphic(complete_to_tau_tilting(regular(A)), regular(A))
    S0, P0, P1 = simple(A, 0), projective_as_rep(A, 0), projective_as_rep(A, 1)
    assert is_isomorphic(complete_to_tau_tilting(S0), rep_sum(S0, P0))
    assert is_isomorphic(complete_to_tau_tilting(P1), rep_sum(P0, P1))


def test_completion_needs_rigid_module(field):
    A = linear_a(3, field)
    # tau S0 = S1, so S0 + S1 is not tau-rigid
    M = rep_sum(simple(A, 0), simple(A, 1))
    assert not tau_rigid_pair_check(M, [0, 0, 0])
    with pytest.raises(NotRigid):
        complete_to_tau_tilting(M)


def test_pair_examples(field):
    A = linear_a(2, field)
    p = silting_to_pair(make_silting([P(A, 0), P(A, 1)]))
    assert is_isomorphic(p.module, regular(A)) and p.support_proj == (0, 0)
    p = silting_to_pair(make_silting([Sh(A, 0), Sh(A, 1)]))
    assert p.module.is_zero and p.support_proj == (1, 1)
    p = silting_to_pair(make_silting([P(A, 0), s0_pres(A)]))
    assert is_isomorphic(p.module, rep_sum(projective_as_rep(A, 0), simple(A, 0)))
    T = pair_to_silting(SupportTauTiltingPair(simple(A, 0), (0, 1)))
    assert sorted(g_vector(s) for s in T.summands) == [(0, -1), (1, -1)]


def test_mutation_is_involution(field):
    A = linear_a(3, field)
    T0 = make_silting([P(A, v) for v in range(3)])
    for k in range(3):
        T1, data = mutate(T0, k)
        new = next(s for s in T1.summands if all(not iso_test(s, t) for t in T0.summands))
        k2 = T1.summands.index(new)
        T2, _ = mutate(T1, k2)
        assert T2.key == T0.key
        assert data.verified


def test_small_graphs(field):
    G = exchange_graph(linear_a(1, field))
    assert (len(G.vertices), len(G.edges)) == (2, 1)
    G = exchange_graph(dual_numbers(field))
    assert (len(G.vertices), len(G.edges)) == (2, 1)
    assert G.edges[0].data.d == 2
    G = exchange_graph(semisimple(2, field))
    assert (len(G.vertices), len(G.edges)) == (4, 4) and G.is_regular()


def test_g_matrices_unimodular(field):
    for A in (linear_a(3, field), linear_a(3, field, rad_square_zero=True)):
        G = exchange_graph(A)
        assert G.complete and G.is_regular()
        for T in G.vertices:
            assert abs(integer_det(T.g_matrix)) == 1


def test_cap_on_infinite_type():
    kronecker = build_algebra(AlgebraSpec(Quiver(2, ((0, 0, 1), (1, 0, 1))), (), 2))
    G = exchange_graph(kronecker, cap=12)
    assert not G.complete and len(G.vertices) <= 12
    # every enumerated vertex is still a valid silting object
    for T in G.vertices:
        assert is_silting(T.presentation())


def test_pool_exhausted_reports_partial():
    kronecker = build_algebra(AlgebraSpec(Quiver(2, ((0, 0, 1), (1, 0, 1))), (), 2))
    f = min_presentation(simple(kronecker, 0))
    # S0 sits three mutations away from the initial object
    eng = SiltingEngine(kronecker, cap_vertices=2, cap_pool=2, with_data=False)
    with pytest.raises(PoolExhausted) as info:
        complete_to_silting(f, eng)
    assert len(info.value.partial) == 1
    T = complete_to_silting(f)
    assert sorted(T.g_matrix) == [(0, -1), (1, -2)]
