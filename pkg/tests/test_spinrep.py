"""Shape-model operators: Chevalley action, ladder operators, weights."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from halfspin.diagram import Sign, enumerate_diagrams
from halfspin.quiver import RankContext, state_u
from halfspin.spinrep import (
    SpinVector,
    highest_weight_vector,
    apply_E,
    apply_F,
    apply_H,
    kappa,
    geometric_a,
    geometric_b,
    fundamental_weight,
    simple_root,
    weight_eps,
    weight_eps_alpha,
    weight_eps_closed,
    weight_eps_halved_variant,
    format_basis_state,
    parse_basis_state,
    format_spin_vector,
    parse_spin_vector,
)


SIGNS = (Sign.PLUS, Sign.MINUS)
HALF = Fraction(1, 2)


def state(sign, *rows):
    return SpinVector.from_state(sign, rows)


def all_states(n):
    return [(sign, rows) for sign in SIGNS for rows in enumerate_diagrams(n)]


def test_vector_algebra():
    v = state(Sign.PLUS, 2) + state(Sign.PLUS, 2)
    assert v.terms == {(Sign.PLUS, (2,)): Fraction(2)}
    assert (v - v).is_zero()
    assert not SpinVector()
    assert (-v).terms == {(Sign.PLUS, (2,)): Fraction(-2)}
    assert (HALF * v).terms == {(Sign.PLUS, (2,)): Fraction(1)}
    assert v.scale(0).is_zero()
    assert v == SpinVector({(Sign.PLUS, (2,)): 2})
    assert hash(v) == hash(SpinVector({(Sign.PLUS, (2,)): 2}))


def test_highest_weight_vector_is_killed_by_raising():
    for n in (2, 3, 4, 5):
        ctx = RankContext(n)
        for sign in SIGNS:
            top = highest_weight_vector(sign, ctx)
            for k in range(1, n + 1):
                assert apply_E(k, top, ctx).is_zero()


def test_lowering_examples_n4():
    ctx = RankContext(4)
    top = highest_weight_vector(Sign.PLUS, ctx)
    assert apply_F(4, top, ctx) == state(Sign.PLUS, 1)
    for k in (1, 2, 3):
        assert apply_F(k, top, ctx).is_zero()
    assert apply_F(2, state(Sign.PLUS, 1), ctx) == state(Sign.PLUS, 2)
    assert apply_E(2, state(Sign.PLUS, 2), ctx) == state(Sign.PLUS, 1)
    # the minus family starts with F at the other tip
    assert apply_F(3, highest_weight_vector(Sign.MINUS, ctx), ctx) == state(Sign.MINUS, 1)
    assert apply_F(4, highest_weight_vector(Sign.MINUS, ctx), ctx).is_zero()
    with pytest.raises(ValueError):
        apply_F(5, top, ctx)
    with pytest.raises(ValueError):
        apply_E(0, top, ctx)


def test_h_scales_by_cartan_eigenvalue():
    for n in (2, 3, 4):
        ctx = RankContext(n)
        for sign, rows in all_states(n):
            u = state_u(rows, sign, ctx)
            x = state(sign, *rows)
            for k in range(1, n + 1):
                assert apply_H(k, x, ctx) == x.scale(u[k - 1])


def test_ef_move_along_dimension_vectors():
    # F_k raises v by the unit at k, E_k lowers it; both keep the family
    from halfspin.quiver import dim_vector, unit_vector

    for n in (3, 4):
        ctx = RankContext(n)
        for sign, rows in all_states(n):
            v = dim_vector(rows, sign, ctx)
            for k in range(1, n + 1):
                image = apply_F(k, state(sign, *rows), ctx)
                for (sign2, rows2), coeff in image.terms.items():
                    assert sign2 is sign
                    assert coeff == 1
                    assert dim_vector(rows2, sign2, ctx) == tuple(
                        a + b for a, b in zip(v, unit_vector(k, ctx))
                    )


def test_kappa_is_the_family_swap():
    ctx = RankContext(4)
    v = state(Sign.PLUS, 3, 1) - 2 * state(Sign.MINUS, 2)
    assert kappa(kappa(v, ctx), ctx) == v
    assert kappa(v, ctx) == state(Sign.MINUS, 3, 1) - 2 * state(Sign.PLUS, 2)


def test_kappa_conjugation_swaps_tip_operators():
    # conjugating by the family swap exchanges the two tip vertices
    for n in (2, 3, 4):
        ctx = RankContext(n)
        for op in (apply_E, apply_F, apply_H):
            for sign, rows in all_states(n):
                x = state(sign, *rows)
                assert kappa(op(n - 1, kappa(x, ctx), ctx), ctx) == op(n, x, ctx)
                for k in range(1, n - 1):
                    assert kappa(op(k, kappa(x, ctx), ctx), ctx) == op(k, x, ctx)


def test_ladder_examples_n4():
    ctx = RankContext(4)
    assert geometric_b(3, state(Sign.PLUS), ctx) == state(Sign.MINUS, 1)
    assert geometric_a(1, state(Sign.PLUS, 3, 1), ctx) == state(Sign.MINUS, 1)
    assert geometric_a(3, state(Sign.PLUS, 3, 1), ctx) == -state(Sign.MINUS, 3)
    assert geometric_a(4, state(Sign.PLUS), ctx).is_zero()
    assert geometric_b(4, state(Sign.PLUS), ctx) == state(Sign.MINUS)
    assert geometric_a(4, state(Sign.MINUS), ctx) == state(Sign.PLUS)
    assert geometric_b(4, state(Sign.MINUS), ctx).is_zero()
    # one-row states: mode 4 acts on plus iff the row count is odd
    assert geometric_a(4, state(Sign.PLUS, 2), ctx) == -state(Sign.MINUS, 2)
    with pytest.raises(ValueError):
        geometric_a(5, state(Sign.PLUS), ctx)


def test_ladder_anticommutators_exhaustive_n3():
    ctx = RankContext(3)
    states = [state(sign, *rows) for sign, rows in all_states(3)]
    for i in range(1, 4):
        for j in range(1, 4):
            for x in states:
                aa = geometric_a(i, geometric_a(j, x, ctx), ctx) + geometric_a(
                    j, geometric_a(i, x, ctx), ctx
                )
                bb = geometric_b(i, geometric_b(j, x, ctx), ctx) + geometric_b(
                    j, geometric_b(i, x, ctx), ctx
                )
                ab = geometric_a(i, geometric_b(j, x, ctx), ctx) + geometric_b(
                    j, geometric_a(i, x, ctx), ctx
                )
                assert aa.is_zero()
                assert bb.is_zero()
                assert ab == (x if i == j else SpinVector())


def test_fundamental_weights_and_roots_n4():
    ctx = RankContext(4)
    assert fundamental_weight(1, ctx) == (1, 0, 0, 0)
    assert fundamental_weight(2, ctx) == (1, 1, 0, 0)
    assert fundamental_weight(3, ctx) == (HALF, HALF, HALF, -HALF)
    assert fundamental_weight(4, ctx) == (HALF, HALF, HALF, HALF)
    assert simple_root(1, ctx) == (1, -1, 0, 0)
    assert simple_root(3, ctx) == (0, 0, 1, -1)
    assert simple_root(4, ctx) == (0, 0, 1, 1)
    with pytest.raises(ValueError):
        fundamental_weight(5, ctx)
    with pytest.raises(ValueError):
        simple_root(0, ctx)


def test_cartan_pairing_of_roots_and_weights():
    # <alpha_j, Lambda_i-dual> realized as u: weight routes must mirror the
    # Cartan matrix when a single root is subtracted
    for n in (3, 4, 5):
        ctx = RankContext(n)
        for i in range(1, n + 1):
            lam = fundamental_weight(i, ctx)
            for j in range(1, n + 1):
                root = simple_root(j, ctx)
                # epsilon coordinates are orthonormal for the ambient form
                pairing = sum(a * b for a, b in zip(lam, root))
                assert pairing == (1 if i == j else 0)


def test_weight_examples_n4():
    ctx = RankContext(4)
    assert weight_eps((Sign.PLUS, ()), ctx) == (HALF, HALF, HALF, HALF)
    assert weight_eps((Sign.MINUS, ()), ctx) == (HALF, HALF, HALF, -HALF)
    assert weight_eps((Sign.PLUS, (3, 1)), ctx) == (-HALF, HALF, -HALF, HALF)
    assert weight_eps((Sign.PLUS, (2,)), ctx) == (HALF, -HALF, HALF, -HALF)
    assert weight_eps((Sign.PLUS, (3, 2, 1)), ctx) == (-HALF, -HALF, -HALF, -HALF)


def test_weight_routes_agree():
    for n in (2, 3, 4, 5):
        ctx = RankContext(n)
        for st_ in all_states(n):
            ref = weight_eps(st_, ctx)
            assert weight_eps_alpha(st_, ctx) == ref
            assert weight_eps_closed(st_, ctx) == ref
            assert all(abs(c) == HALF for c in ref)


def test_halved_variant_is_wrong_everywhere_but_empty():
    # the near-miss variant agrees only on the empty shape
    ctx = RankContext(4)
    for st_ in all_states(4):
        correct = weight_eps(st_, ctx)
        variant = weight_eps_halved_variant(st_, ctx)
        if st_[1]:
            assert variant != correct
        else:
            assert variant == correct
    assert weight_eps_halved_variant((Sign.PLUS, (2,)), ctx) == (HALF, 0, HALF, -HALF)


def test_weights_shift_by_simple_roots():
    for n in (3, 4):
        ctx = RankContext(n)
        for st_ in all_states(n):
            x = SpinVector.from_state(*st_)
            w = weight_eps(st_, ctx)
            for k in range(1, n + 1):
                root = simple_root(k, ctx)
                down = apply_F(k, x, ctx)
                for target in down.terms:
                    assert weight_eps(target, ctx) == tuple(
                        a - b for a, b in zip(w, root)
                    )
                up = apply_E(k, x, ctx)
                for target in up.terms:
                    assert weight_eps(target, ctx) == tuple(
                        a + b for a, b in zip(w, root)
                    )


def test_ladders_shift_weights_by_epsilon():
    # a_k adds +eps_k to the weight, b_k subtracts it
    n = 4
    ctx = RankContext(n)
    for st_ in all_states(n):
        x = SpinVector.from_state(*st_)
        w = weight_eps(st_, ctx)
        for k in range(1, n + 1):
            eps_k = tuple(Fraction(1 if i == k else 0) for i in range(1, n + 1))
            for target in geometric_a(k, x, ctx).terms:
                assert weight_eps(target, ctx) == tuple(a + e for a, e in zip(w, eps_k))
            for target in geometric_b(k, x, ctx).terms:
                assert weight_eps(target, ctx) == tuple(a - e for a, e in zip(w, eps_k))


def test_state_text_forms():
    assert format_basis_state((Sign.PLUS, (3, 1))) == "(plus,3,1)"
    assert format_basis_state((Sign.MINUS, ())) == "(minus,-)"
    ctx = RankContext(4)
    assert parse_basis_state("(plus,3,1)", ctx) == (Sign.PLUS, (3, 1))
    assert parse_basis_state("( minus , - )") == (Sign.MINUS, ())
    with pytest.raises(ValueError):
        parse_basis_state("plus,3,1")
    with pytest.raises(ValueError):
        parse_basis_state("(plus,4,1)", ctx)


def test_vector_text_forms():
    v = state(Sign.PLUS, 3, 1) - 2 * state(Sign.MINUS, 2)
    assert format_spin_vector(v) == "(plus,3,1) - 2 * (minus,2)"
    assert format_spin_vector(SpinVector()) == "0"
    assert format_spin_vector(-state(Sign.PLUS)) == "-(plus,-)"
    assert format_spin_vector(HALF * state(Sign.PLUS, 1)) == "1/2 * (plus,1)"
    assert parse_spin_vector("0").is_zero()
    assert parse_spin_vector("(plus,1) + (plus,1)") == 2 * state(Sign.PLUS, 1)
    assert parse_spin_vector("- 3/2 * (minus,2,1)") == Fraction(-3, 2) * state(
        Sign.MINUS, 2, 1
    )
    with pytest.raises(ValueError):
        parse_spin_vector("(plus,1) (plus,2)")
    with pytest.raises(ValueError):
        parse_spin_vector("2 +")


@st.composite
def spin_vectors(draw):
    n = 4
    shapes = enumerate_diagrams(n)
    entries = draw(
        st.lists(
            st.tuples(
                st.sampled_from(SIGNS),
                st.sampled_from(shapes),
                st.fractions(min_value=-8, max_value=8, max_denominator=12),
            ),
            max_size=5,
        )
    )
    return SpinVector([((sign, rows), c) for sign, rows, c in entries])


@given(spin_vectors())
@settings(deadline=None)
def test_vector_text_round_trip(v):
    assert parse_spin_vector(format_spin_vector(v), RankContext(4)) == v


@given(spin_vectors(), spin_vectors())
@settings(deadline=None)
def test_operators_are_linear(v, w):
    ctx = RankContext(4)
    for op in (
        lambda x: apply_F(2, x, ctx),
        lambda x: apply_E(4, x, ctx),
        lambda x: apply_H(1, x, ctx),
        lambda x: geometric_a(3, x, ctx),
        lambda x: geometric_b(4, x, ctx),
        lambda x: kappa(x, ctx),
    ):
        assert op(v + w) == op(v) + op(w)
        assert op(v.scale(HALF)) == op(v).scale(HALF)
