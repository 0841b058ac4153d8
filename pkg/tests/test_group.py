from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from doa.group import (
    DomainError,
    Perm,
    Vect,
    act,
    classify,
    compose,
    fixed_space,
    generators,
    inverse,
    invariant_two_form_dim,
    symmetric_group,
    to_bar_coords,
    x_all,
    xbar,
)
from oracles import invariant_two_forms_by_solving
from strategies import perms, vects


def P(text, n=4):
    return Perm.parse(text, n)


def test_compose_examples():
    p = P("(1 3 4)")
    assert compose(Perm.identity(4), p) == p
    assert compose(P("(12)"), P("(23)")) == P("(123)")
    assert compose(P("(12)"), P("(12)")).is_identity()
    with pytest.raises(ValueError):
        compose(P("(12)"), Perm.identity(5))


def test_classify_examples():
    assert classify(Perm.identity(4)) == [1, 1, 1, 1]
    assert classify(P("(123)")) == [3, 1] and classify(P("(123)")).is_3cycle
    t = classify(P("(12)(34)"))
    assert t == [2, 2] and t.is_double_transposition and not t.is_transposition


def test_act_examples():
    n = 4
    assert act(P("(12)"), Vect.parse("x1", n)) == Vect.parse("x2", n)
    for g in symmetric_group(n):
        assert act(g, x_all(n)) == x_all(n)
    assert act(P("(123)"), xbar(1, n)) == xbar(2, n)


def test_fixed_space_examples():
    fs = fixed_space(P("(12)"))
    assert {str(v) for v in fs.basis} == {"x1 + x2", "x3", "x4", "y1 + y2", "y3", "y4"}
    assert fs.codim == 2
    assert fixed_space(Perm.identity(4)).codim == 0 and len(fixed_space(Perm.identity(4)).basis) == 8
    assert fixed_space(P("(123)")).codim == 4


def test_bar_coords_examples():
    n = 5
    std, triv = to_bar_coords(Vect.parse("x1", n), n)
    assert std == xbar(1, n) and triv == x_all(n) * Fraction(1, n)
    std, triv = to_bar_coords(x_all(n), n)
    assert not std and triv == x_all(n)


def test_small_n_rejected():
    for n in (2, 3):
        with pytest.raises(DomainError):
            invariant_two_form_dim(n)


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_invariant_dim_matches_linear_solve(n):
    assert invariant_two_form_dim(n) == 2 == invariant_two_forms_by_solving(n)


def test_generators_generate():
    n = 4
    seen = {Perm.identity(n)}
    frontier = list(seen)
    while frontier:
        g = frontier.pop()
        for s in generators(n):
            h = s * g
            if h not in seen:
                seen.add(h)
                frontier.append(h)
    assert len(seen) == 24


@st.composite
def perm_pair_vect(draw):
    n = draw(st.integers(4, 6))
    return draw(perms(n)), draw(perms(n)), draw(vects(n, symbolic=True))


@given(perm_pair_vect())
def test_action_law(data):
    p, q, v = data
    assert act(compose(p, q), v) == act(p, act(q, v))
    assert compose(p, inverse(p)).is_identity()


@given(st.integers(4, 7).flatmap(perms))
def test_fixed_space_is_fixed(g):
    fs = fixed_space(g)
    n = len(g)
    assert all(act(g, v) == v for v in fs.basis)
    assert len(fs.basis) + fs.codim == 2 * n
    assert all(fs.contains(v) for v in fs.basis)


@given(st.integers(4, 6).flatmap(lambda n: vects(n, symbolic=True)))
def test_bar_split(v):
    n = v.n
    std, triv = to_bar_coords(v, n)
    assert std + triv == v
    # zero block sums means the standard part splits off nothing trivial
    again_std, again_triv = to_bar_coords(std, n)
    assert again_std == std and not again_triv
    assert to_bar_coords(triv, n) == (Vect(n), triv)
