from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matroidhopf import corpus, hopf
from matroidhopf.hopf import (
    Character,
    TensorSum,
    alpha,
    beta,
    commutator,
    convolve,
    coproduct,
    counit,
    delta_coloop,
    delta_loop,
    epsilon,
    exp_star,
    exp_star_series,
    flow_alpha_sides,
    flow_beta_sides,
    verify_flow_alpha,
    verify_flow_beta,
    verify_four_factor,
    verify_phi_morphism,
)
from matroidhopf.matroid import SizeCapError, direct_sum, empty, from_bases, graphic, uniform
from matroidhopf.poly import A, B, ONE, S, X, Y, ZERO, Poly
from matroidhopf.tutte import q_universal, tutte_rank_sum

K4 = corpus.named_graphs()["K4"]
SMALL = corpus.build(5)


def test_coproduct_of_empty():
    assert coproduct(empty()) == TensorSum([(ONE, empty(), empty())])


def test_coproduct_of_coloop():
    u = uniform(1, 1)
    assert coproduct(u) == TensorSum([(ONE, empty(), u), (ONE, u, empty())])


def test_coproduct_of_u12():
    u = uniform(1, 2)
    terms = coproduct(u).terms
    assert len(terms) == 4
    middle = [(l, r) for _, l, r in terms if l.size == 1]
    assert {l.labels for l, _ in middle} == {(0,), (1,)}
    for l, r in middle:
        assert l.rank() == 1 and r.rank() == 0 and l.ground | r.ground == u.ground


def test_tensor_sum_merges_and_drops():
    u = uniform(1, 1)
    t = TensorSum([(ONE, u, u), (X, u, u), (-ONE - X, u, empty()), (ONE + X, u, empty())])
    assert t.terms == [(ONE + X, u, u)]


def test_counit():
    assert counit(empty()) == ONE
    assert counit(uniform(1, 1)) == ZERO
    assert counit(uniform(2, 4)) == ZERO


def test_delta_values():
    assert delta_loop(uniform(0, 1)) == 1
    assert delta_loop(uniform(1, 1)) == 0
    assert delta_coloop(uniform(1, 1)) == 1
    # decided by the basis family, not the label or the backend
    assert delta_loop(from_bases(5, [[]], labels=[4])) == 1
    assert delta_loop(graphic(1, [(0, 0)])) == 1
    for m in (uniform(0, 2), uniform(1, 2), uniform(2, 2)):
        assert delta_coloop(m) == 0 and delta_loop(m) == 0


def test_convolution_examples():
    u = uniform(1, 2)
    # A = {0}: U(1,1) then U(0,1); A = {1} likewise
    assert convolve(delta_coloop, delta_loop)(u) == 2
    assert convolve(delta_loop, delta_loop)(u) == 0
    assert convolve(delta_loop, delta_coloop)(u) == 0


@pytest.mark.parametrize("name", sorted(SMALL))
def test_counit_is_two_sided_unit(name):
    m = SMALL[name]
    f = hopf.beta_character()
    assert convolve(epsilon, f)(m) == f(m) == convolve(f, epsilon)(m)


def test_exp_star_examples():
    d = A * delta_coloop + B * delta_loop
    e = exp_star(d)
    assert e(uniform(0, 1)) == B
    assert e(empty()) == ONE
    assert e(uniform(1, 2)) == A * B


def test_exp_star_by_hand_on_u12():
    # d*d(U12) sums two singleton chains, each a*b; the 1/2 halves it
    d = A * delta_coloop + B * delta_loop
    assert convolve(d, d)(uniform(1, 2)) == 2 * A * B
    assert exp_star_series(d)(uniform(1, 2)) == Fraction(1, 2) * 2 * A * B


def test_exp_star_rejects_characters():
    with pytest.raises(ValueError):
        exp_star(epsilon)


def test_exp_star_general_path_matches_series():
    # a map that is infinitesimal but not supported on single elements
    def two_point(m):
        return X if m.size == 2 and m.rank() == 1 else ZERO

    d = Character(two_point, hopf.INFINITESIMAL, "two_point") + delta_coloop
    assert not d.singleton
    for m in (uniform(1, 2), uniform(1, 3), direct_sum(uniform(1, 2), uniform(1, 1))):
        assert exp_star(d)(m) == exp_star_series(d)(m)


@pytest.mark.parametrize("name", [n for n, m in sorted(SMALL.items())])
def test_slow_and_fast_exp_agree(name):
    d = S * ((X - 1) * delta_coloop + delta_loop)
    m = SMALL[name]
    assert exp_star(d)(m) == exp_star_series(d)(m)


def test_alpha_examples():
    assert alpha(uniform(1, 1)) == S * X
    assert alpha(empty()) == ONE
    assert alpha(uniform(2, 3)) == S**3 * (X**2 + X + Y)


def test_beta_examples():
    assert beta(uniform(1, 2)) == S**2 * (A * X + B * Y)
    assert beta(empty()) == ONE
    assert beta(uniform(0, 1)) == S * Y


def test_flow_examples():
    assert flow_alpha_sides(empty()) == (ZERO, ZERO)
    assert flow_alpha_sides(uniform(1, 1)) == (X, X)
    lhs, rhs = flow_beta_sides(uniform(1, 2))
    assert lhs == rhs == 2 * S * (A * X + B * Y)
    assert verify_flow_alpha(K4) and verify_flow_beta(K4)
    assert verify_flow_beta(empty())


def test_alpha_flow_terms_on_coloop():
    u = uniform(1, 1)
    a = hopf.alpha_character()
    assert convolve(a, delta_coloop)(u) == 1
    assert convolve(delta_loop, a)(u) == 0
    assert commutator(delta_coloop, a)(u) == 0
    assert commutator(delta_loop, a)(u) == 0


def test_four_factor_examples():
    for m in (empty(), uniform(1, 1), uniform(2, 3)):
        assert verify_four_factor(m)


def test_middle_factors_cancel():
    mid = convolve(exp_star(S * (delta_loop - delta_coloop)), exp_star(S * (delta_coloop - delta_loop)))
    for m in SMALL.values():
        assert mid(m) == counit(m)


def test_phi_examples():
    for m in (empty(), uniform(1, 1), uniform(2, 4)):
        assert verify_phi_morphism(m)
    assert hopf.phi(uniform(1, 1)).terms == [(A, uniform(1, 1))]


def test_phi_coproduct_on_coloop_by_hand():
    u = uniform(1, 1)
    want = TensorSum([(A, empty(), u), (A, u, empty())])
    assert hopf.coproduct_sum(hopf.phi(u)) == want
    assert hopf.phi_tensor(coproduct(u)) == want


def test_caps():
    with pytest.raises(SizeCapError):
        coproduct(uniform(1, 15))
    with pytest.raises(SizeCapError):
        verify_flow_alpha(uniform(1, 13))
    with pytest.raises(SizeCapError):
        verify_four_factor(uniform(1, 11))
    with pytest.raises(SizeCapError):
        exp_star_series(A * delta_coloop)(uniform(1, 7))


pairs = st.tuples(st.sampled_from(sorted(SMALL)), st.sampled_from(sorted(SMALL)))


@settings(max_examples=30, deadline=None)
@given(pairs)
def test_character_laws(names):
    m1, m2 = SMALL[names[0]], SMALL[names[1]]
    d = S * (delta_coloop + (Y - 1) * delta_loop)
    for f in (hopf.alpha_character(), hopf.beta_character(), exp_star(d), convolve(exp_star(d), epsilon)):
        assert hopf.character_defect(f, [(m1, m2)]) == []
    for f in (delta_loop, delta_coloop, d):
        assert f.kind == hopf.INFINITESIMAL
        assert hopf.character_defect(f, [(m1, m2)]) == []


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(sorted(SMALL)))
def test_convolution_associative(name):
    m = SMALL[name]
    f, g = hopf.alpha_factors()
    h = Character(lambda n: Poly.monomial(n.rank() + 1, b=n.nullity()), hopf.LINEAR, "h")
    assert convolve(convolve(f, g), h)(m) == convolve(f, convolve(g, h))(m)


def test_kinds_of_combinations():
    assert (delta_loop + delta_coloop).kind == hopf.INFINITESIMAL
    assert convolve(epsilon, epsilon).kind == hopf.CHARACTER
    assert (epsilon - epsilon).kind == hopf.LINEAR


def test_beta_at_unit_weights_is_alpha():
    for m in SMALL.values():
        assert beta(m).subs(a=1, b=1) == alpha(m)
        assert q_universal(m).subs(a=1, b=1) == tutte_rank_sum(m)
