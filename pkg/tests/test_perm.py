import pytest
from hypothesis import given, strategies as st

from dgroups.perm import (
    Permutation,
    PermutationError,
    compose,
    element_order,
    identity,
    inverse,
    parse_cycles,
)
from oracles import order_by_powers


def perms(max_degree=8):
    return st.integers(1, max_degree).flatmap(
        lambda n: st.permutations(range(n)).map(Permutation))


class TestParse:
    @pytest.mark.parametrize("text", ["()", "id", "", "  ( )  "])
    def test_identity_spellings(self, text):
        assert parse_cycles(text, 4) == identity(4)

    def test_three_cycle(self):
        assert parse_cycles("(1 2 3)", 3).one_based() == [2, 3, 1]

    def test_two_cycles(self):
        assert parse_cycles("(1 2)(3 4 5)", 5).one_based() == [2, 1, 4, 5, 3]

    def test_whitespace_and_commas(self):
        assert parse_cycles(" ( 1,2 ) (3  4 5) ", 5) == parse_cycles("(1 2)(3 4 5)", 5)

    @pytest.mark.parametrize("text, msg", [
        ("(1 6)", "out of range"),
        ("(1 2)(2 3)", "repeated"),
        ("(1 2", "unterminated"),
        ("1 2)", "outside"),
        ("((1 2))", "nested"),
        ("(1 x)", "unexpected"),
        ("(1 2))", "unmatched"),
    ])
    def test_errors(self, text, msg):
        with pytest.raises(PermutationError, match=msg):
            parse_cycles(text, 5)

    def test_bad_image_array(self):
        with pytest.raises(PermutationError):
            Permutation([0, 0, 1])


def test_compose_orientation():
    a = parse_cycles("(1 2)", 3)
    b = parse_cycles("(2 3)", 3)
    # 1 -> 2 -> 3, 2 -> 1 -> 1, 3 -> 3 -> 2
    assert compose(a, b) == parse_cycles("(1 3 2)", 3)
    assert (a * b)(1) == b(a(1))


def test_compose_identity_and_involution():
    x = parse_cycles("(1 4 2)", 4)
    assert compose(identity(4), x) == x
    t = parse_cycles("(1 2)", 4)
    assert compose(t, t) == identity(4)


def test_compose_degree_mismatch():
    with pytest.raises(PermutationError, match="degree"):
        compose(identity(3), identity(4))


@pytest.mark.parametrize("text, expected", [
    ("()", "()"), ("(1 2 3)", "(1 3 2)"), ("(1 2)(3 4)", "(1 2)(3 4)")])
def test_inverse_examples(text, expected):
    assert inverse(parse_cycles(text, 4)).to_cycles() == expected


@pytest.mark.parametrize("text, n, expected", [
    ("()", 1, 1),
    ("(1 2 3)(4 5)", 5, 6),
    ("(1 2 3 4)(5 6 7)(8 9)", 9, 12),
])
def test_element_order_examples(text, n, expected):
    p = parse_cycles(text, n)
    assert element_order(p) == expected == order_by_powers(p.images)


def test_canonical_printing():
    p = parse_cycles("(5 3)(4 2 1)", 6)
    assert p.to_cycles() == "(1 4 2)(3 5)"
    assert identity(3).to_cycles() == "()"


@given(perms())
def test_inverse_laws(a):
    e = identity(a.degree)
    assert a * inverse(a) == e == inverse(a) * a
    assert inverse(inverse(a)) == a


@given(perms())
def test_order_is_minimal_period(a):
    k = element_order(a)
    assert a**k == identity(a.degree)
    assert all(a**j != identity(a.degree) for j in range(1, k))
    assert k == order_by_powers(a.images)


@given(perms())
def test_cycle_round_trip(a):
    assert parse_cycles(a.to_cycles(), a.degree) == a


@given(st.integers(1, 7).flatmap(
    lambda n: st.tuples(*[st.permutations(range(n)).map(Permutation)] * 3)))
def test_associativity(abc):
    a, b, c = abc
    assert (a * b) * c == a * (b * c)
