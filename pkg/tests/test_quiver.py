"""Graph data, string dimension vectors, and the u = w - Cv bookkeeping."""

import pytest
from hypothesis import given, settings, strategies as st

from halfspin.diagram import Sign, enumerate_diagrams
from halfspin.quiver import (
    RankContext,
    StringInterval,
    validate_string_interval,
    string_dim_vector,
    a_sets,
    dim_vector,
    unit_vector,
    framing_vector,
    weight_u,
    state_u,
    y_vector,
    z_vector,
    star_involution,
    validate_orbit_function,
    format_dim_vector,
    parse_dim_vector,
    format_string_interval,
    parse_string_interval,
)


SIGNS = (Sign.PLUS, Sign.MINUS)


def test_rank_context_edges():
    assert RankContext(2).edges == ()
    assert RankContext(3).edges == ((1, 2), (1, 3))
    assert RankContext(4).edges == ((1, 2), (2, 3), (2, 4))
    assert RankContext(5).edges == ((1, 2), (2, 3), (3, 4), (3, 5))
    with pytest.raises(ValueError):
        RankContext(1)


def test_cartan_matrix():
    ctx = RankContext(4)
    assert ctx.cartan == (
        (2, -1, 0, 0),
        (-1, 2, -1, -1),
        (0, -1, 2, 0),
        (0, -1, 0, 2),
    )
    # symmetric, diagonal 2, off-diagonal -1 exactly on edges
    for n in (2, 3, 5, 6):
        c = RankContext(n).cartan
        edges = {frozenset(e) for e in RankContext(n).edges}
        for i in range(n):
            assert c[i][i] == 2
            for j in range(n):
                assert c[i][j] == c[j][i]
                if i != j:
                    assert c[i][j] == (-1 if frozenset((i + 1, j + 1)) in edges else 0)


def test_adjacent():
    ctx = RankContext(4)
    assert ctx.adjacent(2, 4)
    assert ctx.adjacent(4, 2)
    assert not ctx.adjacent(3, 4)  # the two branch tips are not joined
    assert not ctx.adjacent(1, 1)
    assert not RankContext(2).adjacent(1, 2)


def test_string_dim_vectors():
    ctx = RankContext(4)
    assert string_dim_vector(StringInterval("plain", 3, 3), ctx) == (0, 0, 1, 0)
    assert string_dim_vector(StringInterval("plain", 4, 4), ctx) == (0, 0, 0, 1)
    assert string_dim_vector(StringInterval("plain", 1, 4), ctx) == (1, 1, 0, 1)
    assert string_dim_vector(StringInterval("plain", 2, 4), ctx) == (0, 1, 0, 1)
    assert string_dim_vector(StringInterval("plain", 1, 3), ctx) == (1, 1, 1, 0)
    assert string_dim_vector(StringInterval("plain", 1, 5), ctx) == (1, 1, 1, 1)
    assert string_dim_vector(StringInterval("double", 1, 2), ctx) == (1, 2, 1, 1)


def test_string_interval_validation():
    ctx = RankContext(4)
    validate_string_interval(StringInterval("plain", 2, 2), ctx)
    validate_string_interval(StringInterval("double", 1, 2), ctx)
    with pytest.raises(ValueError):
        validate_string_interval(StringInterval("plain", 3, 2), ctx)
    with pytest.raises(ValueError):
        validate_string_interval(StringInterval("plain", 1, 6), ctx)
    with pytest.raises(ValueError):
        validate_string_interval(StringInterval("plain", 3, 4), ctx)  # start must be <= n-2 or == n
    with pytest.raises(ValueError):
        validate_string_interval(StringInterval("double", 1, 3), ctx)
    with pytest.raises(ValueError):
        validate_string_interval(StringInterval("weird", 1, 2), ctx)


def test_a_sets_examples():
    ctx = RankContext(4)
    assert a_sets((3, 1), Sign.PLUS, ctx) == [
        StringInterval("plain", 1, 4),
        StringInterval("plain", 3, 3),
    ]
    assert a_sets((1,), Sign.PLUS, ctx) == [StringInterval("plain", 4, 4)]
    assert a_sets((1,), Sign.MINUS, ctx) == [StringInterval("plain", 3, 3)]
    assert a_sets((), Sign.PLUS, ctx) == []
    # alternation: odd rows of the plus family end at n, even rows at n-1
    strings = a_sets((3, 2, 1), Sign.PLUS, ctx)
    assert strings == [
        StringInterval("plain", 1, 4),
        StringInterval("plain", 2, 3),
        StringInterval("plain", 4, 4),
    ]


# the full frozen state table at rank 4
N4_TABLE = {
    (Sign.PLUS, ()): ((0, 0, 0, 0), (0, 0, 0, 1)),
    (Sign.PLUS, (1,)): ((0, 0, 0, 1), (0, 1, 0, -1)),
    (Sign.PLUS, (2,)): ((0, 1, 0, 1), (1, -1, 1, 0)),
    (Sign.PLUS, (3,)): ((1, 1, 0, 1), (-1, 0, 1, 0)),
    (Sign.PLUS, (2, 1)): ((0, 1, 1, 1), (1, 0, -1, 0)),
    (Sign.PLUS, (3, 1)): ((1, 1, 1, 1), (-1, 1, -1, 0)),
    (Sign.PLUS, (3, 2)): ((1, 2, 1, 1), (0, -1, 0, 1)),
    (Sign.PLUS, (3, 2, 1)): ((1, 2, 1, 2), (0, 0, 0, -1)),
    (Sign.MINUS, ()): ((0, 0, 0, 0), (0, 0, 1, 0)),
    (Sign.MINUS, (1,)): ((0, 0, 1, 0), (0, 1, -1, 0)),
    (Sign.MINUS, (2,)): ((0, 1, 1, 0), (1, -1, 0, 1)),
    (Sign.MINUS, (3,)): ((1, 1, 1, 0), (-1, 0, 0, 1)),
    (Sign.MINUS, (2, 1)): ((0, 1, 1, 1), (1, 0, 0, -1)),
    (Sign.MINUS, (3, 1)): ((1, 1, 1, 1), (-1, 1, 0, -1)),
    (Sign.MINUS, (3, 2)): ((1, 2, 1, 1), (0, -1, 1, 0)),
    (Sign.MINUS, (3, 2, 1)): ((1, 2, 2, 1), (0, 0, -1, 0)),
}


def test_dim_vector_and_u_table_n4():
    ctx = RankContext(4)
    for (sign, rows), (v, u) in N4_TABLE.items():
        assert dim_vector(rows, sign, ctx) == v
        assert state_u(rows, sign, ctx) == u


def test_weight_u_direct():
    # u = w - Cv with the unit framing at vertex n
    ctx = RankContext(4)
    assert weight_u((0, 1, 0, 1), (0, 0, 0, 1), ctx) == (1, -1, 1, 0)
    assert weight_u((0, 0, 0, 0), (0, 0, 0, 1), ctx) == (0, 0, 0, 1)
    with pytest.raises(ValueError):
        weight_u((0, 0), (0, 0, 0, 1), ctx)


def test_framing_and_unit_vectors():
    ctx = RankContext(4)
    assert framing_vector(Sign.PLUS, ctx) == (0, 0, 0, 1)
    assert framing_vector(Sign.MINUS, ctx) == (0, 0, 1, 0)
    assert unit_vector(2, ctx) == (0, 1, 0, 0)
    with pytest.raises(ValueError):
        unit_vector(5, ctx)


def test_dim_vector_injective_per_family():
    for n in range(2, 7):
        ctx = RankContext(n)
        for sign in SIGNS:
            vs = [dim_vector(rows, sign, ctx) for rows in enumerate_diagrams(n)]
            assert len(set(vs)) == len(vs)


def test_tip_entries_count_rows():
    # v_{n-1} + v_n equals the number of rows, for every state
    for n in range(2, 7):
        ctx = RankContext(n)
        for sign in SIGNS:
            for rows in enumerate_diagrams(n):
                v = dim_vector(rows, sign, ctx)
                assert v[n - 2] + v[n - 1] == len(rows)


def test_star_involution_swaps_families():
    ctx = RankContext(4)
    assert star_involution((1, 2, 1, 2), ctx) == (1, 2, 2, 1)
    with pytest.raises(ValueError):
        star_involution((1, 2), ctx)
    for n in range(2, 7):
        c = RankContext(n)
        for sign in SIGNS:
            for rows in enumerate_diagrams(n):
                assert star_involution(dim_vector(rows, sign, c), c) == dim_vector(
                    rows, sign.flip(), c
                )


def test_y_z_vectors():
    ctx = RankContext(4)
    assert y_vector(3, ctx) == (0, 0, 1, 0)
    assert z_vector(3, ctx) == (0, 0, 0, 1)
    assert y_vector(1, ctx) == (1, 1, 1, 0)
    assert z_vector(1, ctx) == (1, 1, 0, 1)
    with pytest.raises(ValueError):
        y_vector(4, ctx)
    # the two row-addition directions differ only at the two tips
    for n in range(3, 7):
        c = RankContext(n)
        e_last = unit_vector(n, c)
        e_prev = unit_vector(n - 1, c)
        for k in range(1, n - 1):
            y = y_vector(k, c)
            z = z_vector(k, c)
            assert tuple(a + b for a, b in zip(z, e_prev)) == tuple(
                a + b for a, b in zip(y, e_last)
            )
            assert star_involution(y, c) == z


def test_validate_orbit_function():
    ctx = RankContext(4)
    f = {
        StringInterval("plain", 1, 4): 1,
        StringInterval("plain", 3, 3): 1,
    }
    assert validate_orbit_function(f, (1, 1, 1, 1), ctx)
    assert not validate_orbit_function(f, (1, 1, 0, 1), ctx)
    assert validate_orbit_function({}, (0, 0, 0, 0), ctx)
    assert validate_orbit_function({StringInterval("double", 1, 2): 2}, (2, 4, 2, 2), ctx)
    with pytest.raises(ValueError):
        validate_orbit_function({StringInterval("plain", 1, 1): -1}, (0, 0, 0, 0), ctx)


def test_a_sets_sum_matches_dim_vector():
    # the string multiset attached to a state is an orbit function for its v
    for n in range(2, 6):
        ctx = RankContext(n)
        for sign in SIGNS:
            for rows in enumerate_diagrams(n):
                f = {}
                for s in a_sets(rows, sign, ctx):
                    f[s] = f.get(s, 0) + 1
                assert validate_orbit_function(f, dim_vector(rows, sign, ctx), ctx)


def test_dim_vector_text_forms():
    ctx = RankContext(4)
    assert format_dim_vector((1, 2, 1, 2)) == "(1,2,1,2)"
    assert parse_dim_vector("(1,2,1,2)", ctx) == (1, 2, 1, 2)
    assert parse_dim_vector(" (0,0,0,0) ") == (0, 0, 0, 0)
    with pytest.raises(ValueError):
        parse_dim_vector("(1,2)", ctx)
    with pytest.raises(ValueError):
        parse_dim_vector("1,2,1,2")
    with pytest.raises(ValueError):
        parse_dim_vector("()")


def test_string_interval_text_forms():
    ctx = RankContext(4)
    assert format_string_interval(StringInterval("plain", 1, 4)) == "V(1,4)"
    assert format_string_interval(StringInterval("double", 1, 2)) == "V~(1,2)"
    assert parse_string_interval("V(3,3)", ctx) == StringInterval("plain", 3, 3)
    assert parse_string_interval("V~(1,2)", ctx) == StringInterval("double", 1, 2)
    with pytest.raises(ValueError):
        parse_string_interval("W(1,2)")
    with pytest.raises(ValueError):
        parse_string_interval("V(1,2,3)")
    with pytest.raises(ValueError):
        parse_string_interval("V~(1,3)", ctx)


@given(st.integers(2, 7), st.sets(st.integers(1, 6)))
@settings(deadline=None)
def test_u_is_affine_in_v(n, lengths):
    # weight_u is w - Cv, so u(v1) - u(v2) = -C (v1 - v2); check against unit bumps
    ctx = RankContext(n)
    v = [0] * n
    for l in lengths:
        v[l % n] += 1
    v = tuple(v)
    w = framing_vector(Sign.PLUS, ctx)
    base = weight_u(v, w, ctx)
    for k in range(1, n + 1):
        bumped = tuple(x + e for x, e in zip(v, unit_vector(k, ctx)))
        got = weight_u(bumped, w, ctx)
        diff = tuple(a - b for a, b in zip(got, base))
        assert diff == tuple(-ctx.cartan[i][k - 1] for i in range(n))
