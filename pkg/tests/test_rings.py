"""Ring layer: validation, decomposition, graded ideals, radicals, primes,
quotients.  Expected values are frozen from the brute-force oracles in
conftest (subset scans and raw-table definitions)."""

import itertools

import pytest

from gradedspectra.bitset import indices
from gradedspectra.errors import (
    ImproperIdeal,
    InvalidGrading,
    NonHomogeneousGenerator,
    NotARing,
    RingMismatch,
    ZeroRing,
)
from gradedspectra.groups import FiniteAbelianGroup
from gradedspectra.rings import (
    GradedRing,
    enumerate_graded_ideals,
    graded_jacobson_radical,
    graded_radical,
    hom_power_in,
    homogeneous_components,
    ideal_combine,
    ideal_generated,
    is_graded_field,
    is_graded_ideal,
    is_graded_prime,
    is_graded_prime_ideal_criterion,
    jacobson_radical_e,
    make_ideal,
    max_spectrum,
    quotient_ring,
)

from conftest import (
    brute_graded_ideal_masks,
    brute_is_graded_prime,
    brute_radical_mask,
)

Z2 = FiniteAbelianGroup([2])


# -- construction and validation ----------------------------------------------


def test_zero_ring_rejected():
    with pytest.raises(ZeroRing):
        GradedRing(Z2, [[0]], [[0]], 0, 0, {(0,): [0]})


def test_broken_associativity_rejected():
    add = [[0, 1], [1, 0]]
    mul = [[0, 0], [0, 1]]
    bad_add = [[0, 1], [1, 1]]  # not a group
    with pytest.raises(NotARing):
        GradedRing(Z2, bad_add, mul, 0, 1, {(0,): [0, 1]})


def test_noncommutative_mul_rejected():
    add = [[(a + b) % 3 for b in range(3)] for a in range(3)]
    mul = [[0, 0, 0], [0, 1, 2], [0, 2, 1]]
    mul[1][2] = 0  # breaks symmetry
    with pytest.raises(NotARing):
        GradedRing(FiniteAbelianGroup([1]), add, mul, 0, 1, {(0,): [0, 1, 2]})


def test_direct_sum_violation_rejected(ring_b):
    # components overlapping in a nonzero element are not a direct sum
    add, mul = ring_b.add, ring_b.mul
    with pytest.raises(InvalidGrading):
        GradedRing(Z2, add, mul, 0, 1, {(0,): [0, 1, 2], (1,): [0, 2]})


def test_degree_rule_violation_rejected():
    # put 1 of Z_4 in degree 1: then 1*1 = 1 must land in degree 0, it does not
    add = [[(a + b) % 4 for b in range(4)] for a in range(4)]
    mul = [[(a * b) % 4 for b in range(4)] for a in range(4)]
    with pytest.raises(InvalidGrading):
        GradedRing(Z2, add, mul, 0, 1, {(0,): [0, 2], (1,): [0, 1, 2, 3]})


def test_one_outside_identity_component_rejected():
    add = [[(a + b) % 2 for b in range(2)] for a in range(2)]
    mul = [[(a * b) % 2 for b in range(2)] for a in range(2)]
    with pytest.raises(InvalidGrading):
        GradedRing(Z2, add, mul, 0, 1, {(0,): [0], (1,): [0, 1]})


# -- decomposition --------------------------------------------------------------


def test_decomposition_unique_and_summing(ring_b):
    # independent re-derivation: decompositions found by scanning component combos
    comps = [indices(m) for m in ring_b.comp_masks]
    for x in range(ring_b.n):
        found = [
            combo for combo in itertools.product(*comps)
            if _fold_add(ring_b, combo) == x
        ]
        assert len(found) == 1
        assert tuple(found[0]) == ring_b.decomp[x]


def _fold_add(ring, combo):
    s = ring.zero
    for c in combo:
        s = ring.add[s][c]
    return s


def test_components_of_one_plus_u(ring_b):
    # 1+u has index 3: degree-0 part 1, degree-1 part u (index 2)
    parts = homogeneous_components(ring_b, 3)
    assert parts == {(0,): 1, (1,): 2}


def test_components_of_zero(ring_b):
    assert homogeneous_components(ring_b, 0) == {(0,): 0, (1,): 0}


def test_components_trivial_grading(ring_a):
    assert homogeneous_components(ring_a, 3) == {(0,): 3, (1,): 0}


def test_hom_elements(ring_b, ring_a):
    assert ring_b.hom_elements() == [0, 1, 2]   # 1+u is inhomogeneous
    assert ring_a.hom_elements() == [0, 1, 2, 3]


# -- ideal generation and the lattice -------------------------------------------


def test_ideal_generated_examples(ring_b, ring_d):
    assert sorted(ideal_generated(ring_b, [2]).indices) == [0, 2]
    assert sorted(ideal_generated(ring_b, []).indices) == [0]
    assert sorted(ideal_generated(ring_d, [2]).indices) == [0, 2, 4]


def test_ideal_generated_rejects_inhomogeneous(ring_b):
    with pytest.raises(NonHomogeneousGenerator):
        ideal_generated(ring_b, [3])


def test_lattice_matches_subset_scan(ring_a, ring_b, ring_c, ring_d):
    for ring in (ring_a, ring_b, ring_c, ring_d):
        got = [I.mask for I in enumerate_graded_ideals(ring)]
        assert sorted(got) == brute_graded_ideal_masks(ring)


def test_lattice_frozen_values(ring_b, ring_c, ring_d):
    assert [sorted(I.indices) for I in enumerate_graded_ideals(ring_b)] == \
        [[0], [0, 2], [0, 1, 2, 3]]
    assert [sorted(I.indices) for I in enumerate_graded_ideals(ring_c)] == \
        [[0], [0, 1, 2, 3]]
    assert [sorted(I.indices) for I in enumerate_graded_ideals(ring_d)] == \
        [[0], [0, 3], [0, 2, 4], [0, 1, 2, 3, 4, 5]]


def test_is_graded_ideal(ring_b, ring_c):
    # {0, 1+u} in the group algebra is an ideal but not graded
    assert not is_graded_ideal(ring_c, [0, 3])
    assert is_graded_ideal(ring_b, [0, 2])
    assert is_graded_ideal(ring_b, list(range(4)))
    assert not is_graded_ideal(ring_b, [0, 1])


def test_generator_witnesses_generate(ring_d):
    for I in enumerate_graded_ideals(ring_d):
        assert ideal_generated(ring_d, I.gens).mask == I.mask


# -- combinations ----------------------------------------------------------------


def test_ideal_combine(ring_b, ring_d):
    two = ideal_generated(ring_d, [2])
    three = ideal_generated(ring_d, [3])
    assert ideal_combine("intersection", two, three).indices == [0]
    assert ideal_combine("sum", two, three).mask == (1 << 6) - 1
    u = ideal_generated(ring_b, [2])
    assert ideal_combine("product", u, u).indices == [0]


def test_ideal_combine_mismatch(ring_b, ring_d):
    with pytest.raises(RingMismatch):
        ideal_combine("sum", ideal_generated(ring_b, []), ideal_generated(ring_d, []))


def test_sum_with_zero_is_identity(ring_d):
    zero = ideal_generated(ring_d, [])
    for I in enumerate_graded_ideals(ring_d):
        assert ideal_combine("sum", I, zero).mask == I.mask


# -- graded radical ---------------------------------------------------------------


def test_radical_matches_brute(ring_a, ring_b, ring_c, ring_d):
    for ring in (ring_a, ring_b, ring_c, ring_d):
        for I in enumerate_graded_ideals(ring):
            assert graded_radical(ring, I).mask == brute_radical_mask(ring, I.mask)


def test_radical_frozen_examples(ring_b, ring_c):
    zero_b = make_ideal(ring_b, 1, ())
    assert sorted(graded_radical(ring_b, zero_b).indices) == [0, 2]
    zero_c = make_ideal(ring_c, 1, ())
    # (1+u)^2 = 0 yet 1+u is not in the graded radical of 0
    assert ring_c.mul[3][3] == 0
    assert graded_radical(ring_c, zero_c).indices == [0]


def test_radical_of_whole_ring(ring_a):
    full = make_ideal(ring_a, ring_a.full_mask())
    assert graded_radical(ring_a, full).mask == ring_a.full_mask()


def test_radical_is_closure_operator(ring_a, ring_b, ring_c, ring_d):
    for ring in (ring_a, ring_b, ring_c, ring_d):
        lattice = enumerate_graded_ideals(ring)
        for I in lattice:
            gr = graded_radical(ring, I)
            assert I.mask & ~gr.mask == 0
            assert graded_radical(ring, gr).mask == gr.mask
            for J in lattice:
                if I.mask & ~J.mask == 0:
                    assert gr.mask & ~graded_radical(ring, J).mask == 0


def test_homogeneous_radical_agreement(ring_b, ring_c):
    # for homogeneous r: r in Gr(I) iff some power of r lies in I
    for ring in (ring_b, ring_c):
        for I in enumerate_graded_ideals(ring):
            gr = graded_radical(ring, I)
            for r in ring.hom_elements():
                assert ((gr.mask >> r) & 1) == hom_power_in(ring, r, I)


def test_radical_product_intersection_identity(ring_a, ring_b, ring_c, ring_d):
    # Gr(IJ) = Gr(I meet J) = Gr(I) meet Gr(J)
    for ring in (ring_a, ring_b, ring_c, ring_d):
        lattice = enumerate_graded_ideals(ring)
        for I in lattice:
            for J in lattice:
                a = graded_radical(ring, ideal_combine("product", I, J)).mask
                b = graded_radical(ring, ideal_combine("intersection", I, J)).mask
                c = graded_radical(ring, I).mask & graded_radical(ring, J).mask
                assert a == b == c


# -- primality ---------------------------------------------------------------------


def test_prime_examples(ring_b, ring_c):
    u_ideal = ideal_generated(ring_b, [2])
    assert is_graded_prime(ring_b, u_ideal)
    assert not is_graded_prime(ring_b, make_ideal(ring_b, 1, ()))
    # the zero ideal of the group algebra is graded prime despite (1+u)^2 = 0
    assert is_graded_prime(ring_c, make_ideal(ring_c, 1, ()))


def test_prime_matches_brute_and_ideal_criterion(ring_a, ring_b, ring_c, ring_d):
    for ring in (ring_a, ring_b, ring_c, ring_d):
        for I in enumerate_graded_ideals(ring):
            expected = brute_is_graded_prime(ring, I.mask)
            assert is_graded_prime(ring, I) == expected
            assert is_graded_prime_ideal_criterion(ring, I) == expected


def test_prime_radical_fixed(ring_a, ring_b, ring_c, ring_d):
    for ring in (ring_a, ring_b, ring_c, ring_d):
        for I in enumerate_graded_ideals(ring):
            if is_graded_prime(ring, I):
                assert graded_radical(ring, I).mask == I.mask


# -- maximal ideals and Jacobson radicals -------------------------------------------


def test_max_spectrum(ring_b, ring_c, ring_d):
    assert [sorted(p.indices) for p in max_spectrum(ring_c)] == [[0]]
    assert [sorted(p.indices) for p in max_spectrum(ring_d)] == [[0, 3], [0, 2, 4]]
    assert [sorted(p.indices) for p in max_spectrum(ring_b)] == [[0, 2]]


def test_graded_maximal_ideals_are_prime(ring_a, ring_b, ring_c, ring_d):
    for ring in (ring_a, ring_b, ring_c, ring_d):
        for p in max_spectrum(ring):
            assert is_graded_prime(ring, p)


def test_jacobson_radicals(ring_b, ring_c, ring_d):
    assert sorted(graded_jacobson_radical(ring_b).indices) == [0, 2]
    assert graded_jacobson_radical(ring_c).indices == [0]
    assert graded_jacobson_radical(ring_d).indices == [0]
    # identity-component radical: R_e of ring_b is the field {0, 1}
    assert jacobson_radical_e(ring_b) == 1
    # the hook between the two radicals
    for ring in (ring_b, ring_c, ring_d):
        assert jacobson_radical_e(ring) == \
            graded_jacobson_radical(ring).mask & ring.comp_masks[0]


# -- quotients ---------------------------------------------------------------------


def test_quotient_by_two(ring_a):
    q = quotient_ring(ring_a, ideal_generated(ring_a, [2]))
    assert q.ring.n == 2
    assert q.ring.comp_masks[1] == 1 << q.ring.zero  # degree-1 part collapses
    assert q.proj[2] == q.proj[0]


def test_quotient_by_zero_is_isomorphic(ring_d):
    q = quotient_ring(ring_d, ideal_generated(ring_d, []))
    assert q.ring.n == ring_d.n
    assert q.ring.add == ring_d.add and q.ring.mul == ring_d.mul


def test_quotient_by_u(ring_b):
    q = quotient_ring(ring_b, ideal_generated(ring_b, [2]))
    assert q.ring.n == 2
    assert q.ring.comp_masks[1] == 1 << q.ring.zero


def test_quotient_whole_ring_rejected(ring_a):
    with pytest.raises(ImproperIdeal):
        quotient_ring(ring_a, make_ideal(ring_a, ring_a.full_mask()))


def test_quotient_push_lift_roundtrip(ring_d):
    I = ideal_generated(ring_d, [3])
    q = quotient_ring(ring_d, I)
    for J in enumerate_graded_ideals(ring_d):
        if I.mask & ~J.mask == 0:
            assert q.lift_mask(q.push_mask(J.mask)) == J.mask


# -- graded fields ------------------------------------------------------------------


def test_graded_field_examples(ring_a, ring_c, field_2):
    assert is_graded_field(ring_c)       # not a field, but graded-simple
    assert is_graded_field(field_2)
    assert not is_graded_field(ring_a)


def test_ideal_combine_unknown_mode(ring_d):
    with pytest.raises(ValueError):
        ideal_combine("union", ideal_generated(ring_d, []), ideal_generated(ring_d, []))


def test_ideal_conveniences(ring_d):
    two = ideal_generated(ring_d, [2])
    assert 2 in two and 1 not in two
    assert len(two) == 3
    assert two.label() == "(2)"
    assert two.is_proper and not two.is_zero
    zero = ideal_generated(ring_d, [])
    assert zero.label() == "(0)" and zero.is_zero
    assert zero.issubset(two)
