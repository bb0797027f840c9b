from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from dgroups.families import (
    alternating,
    cyclic,
    dihedral,
    elementary_abelian,
    frobenius_pq,
    generalized_quaternion,
    mersenne_frobenius,
    symmetric,
)
from dgroups.group import (
    CapExceeded,
    Group,
    GroupError,
    all_subgroups,
    center,
    centralizer,
    conjugacy_classes,
    cyclic_subgroup,
    derived_subgroup,
    element_order_profile,
    frobenius_structure,
    generate,
    is_abelian,
    is_isomorphic,
    is_nilpotent,
    is_normal,
    is_simple,
    is_solvable,
    normal_subgroups,
    p_part,
    prime_factors,
    quotient,
    sylow_subgroup,
)
from dgroups.perm import Permutation, identity, parse_cycles
import oracles


def P(text, n):
    return parse_cycles(text, n)


def random_group(draw_n=st.integers(2, 6), k=2):
    return draw_n.flatmap(lambda n: st.lists(
        st.permutations(range(n)).map(Permutation), min_size=1, max_size=k,
    )).map(lambda gens: generate(gens))


class TestGenerate:
    def test_trivial(self):
        G = generate([], degree=1)
        assert G.order == 1 and G.elements[0] == identity(1)

    def test_s5(self):
        G = generate([P("(1 2 3 4 5)", 5), P("(1 2)", 5)])
        assert G.order == 120
        assert G.order == len(oracles.naive_closure([g.images for g in G.generators], 5))

    def test_a5(self):
        G = generate([P("(1 2 3 4 5)", 5), P("(3 4 5)", 5)])
        assert G.order == 60

    def test_degree_mismatch(self):
        with pytest.raises(GroupError):
            generate([P("(1 2)", 3), P("(1 2)", 4)])

    def test_cap(self):
        with pytest.raises(CapExceeded):
            generate([P("(1 2 3 4 5 6)", 6), P("(1 2)", 6)], cap=100)

    def test_deterministic_ordering(self):
        gens = [P("(1 2 3 4)", 4), P("(1 2)", 4)]
        assert generate(gens).elements == generate(list(gens)).elements

    def test_generators_and_identity_present(self):
        G = symmetric(5)
        assert G.elements[0] == identity(5)
        assert all(g in G for g in G.generators)

    def test_closed(self):
        G = dihedral(5)
        S = set(t.images for t in G)
        assert all(oracles.mul(a, b) in S for a in S for b in S)


class TestCentralizer:
    def test_identity(self, S4):
        assert centralizer(S4, identity(4)).order == 24

    def test_s3_three_cycle(self, S3):
        x = P("(1 2 3)", 3)
        C = centralizer(S3, x)
        assert C.order == 3
        assert set(t.images for t in C) == oracles.naive_centralizer(set(t.images for t in S3), x.images)

    def test_q8_central_involution(self, Q8):
        z = next(x for x in Q8 if x.order() == 2)
        assert centralizer(Q8, z).order == 8

    def test_not_in_group(self, S3):
        with pytest.raises(GroupError):
            centralizer(alternating(3), P("(1 2)", 3))


class TestCyclicSubgroup:
    def test_identity(self, S4):
        assert cyclic_subgroup(S4, identity(4)).order == 1

    def test_order_four(self, S4):
        assert cyclic_subgroup(S4, P("(1 2 3 4)", 4)).order == 4

    def test_square_in_c6(self):
        C6 = cyclic(6)
        x = C6.generators[0]
        assert cyclic_subgroup(C6, x * x).order == 3

    def test_not_in_group(self):
        with pytest.raises(GroupError):
            cyclic_subgroup(cyclic(4), P("(1 2)", 4))


class TestClasses:
    def test_trivial(self):
        assert len(conjugacy_classes(cyclic(1))) == 1

    def test_s3_sizes(self, S3):
        assert [c.size for c in conjugacy_classes(S3)] == [1, 3, 2]

    def test_a5_sizes(self, A5):
        assert sorted(c.size for c in conjugacy_classes(A5)) == sorted([1, 15, 20, 12, 12])

    @pytest.mark.parametrize("G", [symmetric(4), alternating(5), dihedral(9), generalized_quaternion(16)],
                             ids=["S4", "A5", "D18", "Q16"])
    def test_matches_all_pairs_oracle(self, G):
        mine = {frozenset(G.elements[i].images for i in c.members) for c in conjugacy_classes(G)}
        theirs = {frozenset(c) for c in oracles.naive_classes(set(t.images for t in G))}
        assert mine == theirs

    def test_identity_first_and_sorted(self, A5):
        cls = conjugacy_classes(A5)
        assert cls[0].representative == identity(5)
        reps = [c.representative for c in cls]
        assert reps == sorted(reps)

    def test_representative_is_class_minimum(self, S4):
        for c in conjugacy_classes(S4):
            assert c.representative == min(S4.elements[i] for i in c.members)

    def test_verify_mode(self):
        conjugacy_classes(mersenne_frobenius(3), verify=True)


class TestCenterProfile:
    def test_abelian_center(self):
        G = elementary_abelian(3, 2)
        assert center(G).order == G.order

    def test_s3_center(self, S3):
        assert center(S3).order == 1

    def test_q8_center(self, Q8):
        assert center(Q8).order == 2

    def test_profiles(self, A5, Q8):
        assert element_order_profile(cyclic(4)) == {1: 1, 2: 1, 4: 2}
        assert element_order_profile(A5) == {1: 1, 2: 15, 3: 20, 5: 24}
        assert element_order_profile(Q8) == {1: 1, 2: 1, 4: 6}


class TestSylow:
    def test_c6(self):
        assert sylow_subgroup(cyclic(6), 3).order == 3

    def test_s4_is_d8(self, S4):
        P2 = sylow_subgroup(S4, 2)
        assert P2.order == 8 and not is_abelian(P2)
        assert is_isomorphic(P2, dihedral(4))

    def test_a5_klein(self, A5):
        P2 = sylow_subgroup(A5, 2)
        assert P2.order == 4 and element_order_profile(P2) == {1: 1, 2: 3}

    def test_errors(self, S3):
        with pytest.raises(GroupError):
            sylow_subgroup(S3, 5)
        with pytest.raises(GroupError):
            sylow_subgroup(S3, 4)


class TestDerived:
    def test_abelian(self):
        assert derived_subgroup(cyclic(12)).order == 1

    def test_s3(self, S3):
        assert derived_subgroup(S3).order == 3

    def test_q8(self, Q8):
        D = derived_subgroup(Q8)
        assert D.order == 2 and D.same_elements(center(Q8))

    def test_solvable_nilpotent(self, S3, A5):
        assert is_solvable(cyclic(12)) and is_nilpotent(cyclic(12))
        assert is_solvable(S3) and not is_nilpotent(S3)
        assert not is_solvable(A5)


class TestNormal:
    def test_prime(self):
        assert len(normal_subgroups(cyclic(7))) == 2

    def test_s4(self, S4):
        assert [N.order for N in normal_subgroups(S4)] == [1, 4, 12, 24]

    def test_a5_simple(self, A5):
        assert [N.order for N in normal_subgroups(A5)] == [1, 60]

    @pytest.mark.parametrize("G", [symmetric(4), dihedral(6), generalized_quaternion(8),
                                   elementary_abelian(2, 3), frobenius_pq(7, 3), cyclic(12)],
                             ids=["S4", "D12", "Q8", "E8", "F21", "C12"])
    def test_matches_class_union_oracle(self, G):
        mine = {frozenset(t.images for t in N) for N in normal_subgroups(G)}
        assert mine == oracles.class_union_normal_subgroups(set(t.images for t in G))

    def test_is_simple(self, A5):
        assert not is_simple(cyclic(7))
        assert is_simple(A5)
        assert not is_simple(symmetric(5))

    def test_cap(self):
        with pytest.raises(CapExceeded):
            normal_subgroups(cyclic(12), cap=10)


class TestFrobenius:
    def test_s3(self, S3):
        fs = frobenius_structure(S3)
        assert (fs.kernel.order, fs.complement.order) == (3, 2)

    def test_c6(self):
        assert frobenius_structure(cyclic(6)) is None

    def test_a4(self):
        fs = frobenius_structure(alternating(4))
        assert (fs.kernel.order, fs.complement.order) == (4, 3)
        assert fs.congruence

    @pytest.mark.parametrize("G", [symmetric(4), alternating(5), generalized_quaternion(8), dihedral(4)],
                             ids=["S4", "A5", "Q8", "D8"])
    def test_not_frobenius(self, G):
        assert frobenius_structure(G) is None

    def test_complement_meets_kernel_trivially(self):
        G = frobenius_pq(13, 3)
        fs = frobenius_structure(G)
        K = set(t.images for t in fs.kernel)
        B = set(t.images for t in fs.complement)
        assert K & B == {identity(13).images}
        assert len(K) * len(B) == G.order


class TestSubgroups:
    def test_c6(self):
        assert sorted(H.order for H in all_subgroups(cyclic(6))) == [1, 2, 3, 6]

    def test_s3(self, S3):
        assert Counter(H.order for H in all_subgroups(S3)) == {1: 1, 2: 3, 3: 1, 6: 1}

    def test_s4_against_pairs_oracle(self, S4):
        subs = all_subgroups(S4)
        assert len(subs) == 30
        mine = {frozenset(t.images for t in H) for H in subs}
        assert mine == oracles.two_generated_subgroups(set(t.images for t in S4))

    def test_q8(self, Q8):
        assert len(all_subgroups(Q8)) == 6

    def test_cap(self):
        with pytest.raises(CapExceeded):
            all_subgroups(symmetric(7))

    @pytest.mark.parametrize("G", [symmetric(4), dihedral(6), generalized_quaternion(16),
                                   frobenius_pq(11, 5), alternating(5), elementary_abelian(2, 3)],
                             ids=["S4", "D12", "Q16", "F55", "A5", "E8"])
    def test_closure_and_prime_order_count(self, G):
        subs = all_subgroups(G)
        keys = [frozenset(t.images for t in H) for H in subs]
        assert len(set(keys)) == len(keys)
        for S in keys:
            assert all(oracles.mul(a, b) in S for a in S for b in S)
        prof = element_order_profile(G)
        for q in prime_factors(G.order):
            assert sum(1 for H in subs if H.order == q) == prof[q] // (q - 1)


class TestIsomorphism:
    def test_c4_vs_klein(self):
        assert not is_isomorphic(cyclic(4), elementary_abelian(2, 2))

    def test_q8_embeddings(self, Q8):
        g = Permutation([3, 0, 6, 1, 7, 2, 5, 4])
        other = generate([~g * x * g for x in Q8.generators])
        assert other.fingerprint() != Q8.fingerprint()
        assert is_isomorphic(Q8, other)

    def test_a4(self):
        assert is_isomorphic(mersenne_frobenius(2), alternating(4))

    def test_q8_vs_d8(self, Q8):
        assert not is_isomorphic(Q8, dihedral(4))

    def test_cap(self):
        with pytest.raises(CapExceeded):
            is_isomorphic(symmetric(7), symmetric(7))


def test_quotient_s4_by_klein(S4):
    V = normal_subgroups(S4)[1]
    Q = quotient(S4, V)
    assert Q.order == 6 and not is_abelian(Q)


@settings(max_examples=40, deadline=None)
@given(random_group())
def test_class_equation_and_orbit_stabilizer(G):
    classes = conjugacy_classes(G)
    assert sum(c.size for c in classes) == G.order
    for c in classes:
        assert c.size * c.centralizer_order == G.order
        assert centralizer(G, c.representative).order == c.centralizer_order


@settings(max_examples=40, deadline=None)
@given(random_group())
def test_center_is_singleton_classes(G):
    singles = {G.elements[c.members[0]].images for c in conjugacy_classes(G) if c.size == 1}
    assert set(t.images for t in center(G)) == singles
    assert singles == {x for x in (t.images for t in G)
                       if all(oracles.mul(x, g.images) == oracles.mul(g.images, x) for g in G)}


@settings(max_examples=30, deadline=None)
@given(random_group())
def test_sylow_exact_and_covering(G):
    for p in prime_factors(G.order):
        S = sylow_subgroup(G, p)
        assert S.order == p_part(G.order, p)
        covered = set()
        for g in G:
            gi = ~g
            covered |= {(gi * s * g).images for s in S}
        p_elements = {t.images for t in G if p_part(t.order(), p) == t.order()}
        assert covered == p_elements


@settings(max_examples=30, deadline=None)
@given(random_group())
def test_derived_normal_with_abelian_quotient(G):
    D = derived_subgroup(G)
    assert is_normal(G, D)
    assert is_abelian(quotient(G, D))
