import pytest
from hypothesis import given, settings, strategies as st

from doa.cochains import TwoCochain
from doa.families import build, specialize
from doa.group import Perm, parse_basis, transpositions
from doa.poly import parse_poly
from doa.rewrite import (
    NCElement,
    SymbolicParameterError,
    build_rewrite,
    expected_normal_word_count,
    normal_form_nc,
    normal_word_count,
    oracle_report,
    overlap_check,
)

N = 4


def letter(rs, label):
    return parse_basis(label, rs.n)


def word(rs, *labels, g=None):
    return NCElement.word(rs, [letter(rs, s) for s in labels], g)


@pytest.fixture(scope="module")
def zero():
    return build_rewrite(TwoCochain(N), N)


@pytest.fixture(scope="module")
def rca():
    return build_rewrite(specialize(build("rca-perm", N), {"alpha": 1, "beta": 0, "c": 2}), N)


def test_zero_rules_are_transpositions(zero):
    for (j, i), rhs in zero.rules.items():
        assert rhs == NCElement.word(zero, (i, j))


def test_rca_rule(rca):
    one = Perm.identity(N)
    rhs = rca.rule(letter(rca, "y1"), letter(rca, "x1"))
    expect = word(rca, "x1", "y1") - NCElement(rca, {((), one): 1})
    for g in transpositions(N):
        if 0 in g.cycles()[0]:
            expect = expect - NCElement(rca, {((), g): 2})
    assert rhs == expect


def test_std_refl_rules_have_group_linear_tails():
    rs = build_rewrite(specialize(build("std-refl", N), {"aperp": 1, "bperp": 2, "c": 3}))
    assert rs.basis == "std" and rs.size == 2 * (N - 1)
    tails = [w for r in rs.rules.values() for (w, g) in r.terms if len(w) == 1 and not g.is_identity()]
    assert tails


def test_normal_form_examples(zero, rca):
    assert normal_form_nc(word(zero, "y1", "x1"), zero) == word(zero, "x1", "y1")
    g = Perm.parse("(12)", N)
    moved = NCElement.word(rca, (), g) * word(rca, "x1")
    assert normal_form_nc(moved, rca) == word(rca, "x2", g=g)
    assert normal_form_nc(word(rca, "x2", "x1"), rca) == word(rca, "x1", "x2")


def test_symbolic_cochain_rejected():
    with pytest.raises(SymbolicParameterError):
        build_rewrite(build("refl", N))
    with pytest.raises(ValueError):
        build_rewrite(TwoCochain(N), 5)


def test_overlap_examples(zero, rca):
    assert overlap_check(zero)[0]
    assert overlap_check(rca)[0]
    kappa = build("lie", N)
    point = {s: 0 for s in kappa.symbols()}
    point.update(b4=1, alpha=1)
    tagged = parse_poly("alpha*(a1 - b6 + b4 - b7) - beta*(a1 - b3 + b5 - (n-1)*(b4 - b7))", N)
    assert tagged.eval(point) != 0
    rep = oracle_report(build_rewrite(specialize(kappa, point)))
    assert not rep["pass"] and rep["witness"]["kind"] == "letters"
    assert len(rep["witness"]["triple"]) == 3 and rep["triples_checked"] >= 1


def test_descent_precondition_on_std_space():
    kappa = specialize(build("rca-perm", N), {"alpha": 1, "beta": 1, "c": 1}).with_space("std")
    ok, wit, _ = overlap_check(build_rewrite(kappa))
    assert not ok and wit["kind"] == "descent"


def test_word_count_matches_pbw_basis(zero):
    assert normal_word_count(zero, 2) == expected_normal_word_count(2 * N, 2, N) == 1080


def test_word_count_deformed_algebra(rca):
    assert normal_word_count(rca, 2) == expected_normal_word_count(2 * N, 2, N)


@settings(max_examples=30)
@given(st.lists(st.integers(0, 2 * N - 1), max_size=4), st.sampled_from(list(transpositions(N))))
def test_normal_form_is_idempotent(letters, g):
    rs = build_rewrite(specialize(build("refl-tri", N), {"a": 1, "aperp": -1, "b": 2, "bperp": 0, "c": 3}))
    e = NCElement.word(rs, letters, g) + NCElement.word(rs, letters[::-1])
    once = normal_form_nc(e, rs)
    assert normal_form_nc(once, rs) == once
    assert all(list(w) == sorted(w) for (w, _) in once.terms)
