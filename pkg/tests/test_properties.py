"""Property tests over randomly drawn constructor descriptions.

Hypothesis draws small ring/module descriptions; every law checked here is
an instance-independent invariant of the algebra layer.
"""

from hypothesis import given, settings, strategies as st

from gradedspectra.constructors import build_ring
from gradedspectra.groups import FiniteAbelianGroup
from gradedspectra.modules import (
    ann_in_ring,
    build_module,
    enumerate_graded_submodules,
    is_second,
    second_spectrum,
    zariski_socle,
)
from gradedspectra.rings import (
    enumerate_graded_ideals,
    graded_radical,
    hom_power_in,
    homogeneous_components,
    ideal_combine,
    is_graded_prime,
    is_graded_prime_ideal_criterion,
)
from gradedspectra.spectrum import graded_prime_spectrum, variety

GROUPS = st.sampled_from([(2,), (3,), (4,), (2, 2)])


@st.composite
def ring_descriptions(draw):
    kind = draw(st.sampled_from(["zmod", "truncated_poly", "group_algebra", "product"]))
    if kind == "zmod":
        return (2,), {"kind": "zmod", "modulus": draw(st.integers(2, 16)),
                      "grading": "trivial"}
    if kind == "truncated_poly":
        factors = draw(GROUPS)
        size = 1
        for f in factors:
            size *= f
        return factors, {
            "kind": "truncated_poly",
            "p": draw(st.sampled_from([2, 3])),
            "power": draw(st.sampled_from([2, 3])),
            "degree": [draw(st.integers(0, factors[0] - 1))] + [0] * (len(factors) - 1),
        }
    if kind == "group_algebra":
        factors = draw(st.sampled_from([(2,), (3,), (4,)]))
        return factors, {"kind": "group_algebra", "p": 2}
    parts = [
        {"kind": "zmod", "modulus": draw(st.sampled_from([2, 3, 4])), "grading": "trivial"}
        for _ in range(2)
    ]
    return (2,), {"kind": "product", "parts": parts}


def build(desc_pair):
    factors, desc = desc_pair
    return build_ring(FiniteAbelianGroup(factors), desc)


@given(ring_descriptions())
@settings(max_examples=40, deadline=None)
def test_decomposition_reassembles(desc_pair):
    ring = build(desc_pair)
    for x in range(ring.n):
        total = ring.zero
        for part in homogeneous_components(ring, x).values():
            total = ring.add[total][part]
        assert total == x


@given(ring_descriptions())
@settings(max_examples=30, deadline=None)
def test_radical_laws(desc_pair):
    ring = build(desc_pair)
    lattice = enumerate_graded_ideals(ring)
    for I in lattice:
        gr = graded_radical(ring, I)
        assert I.mask & ~gr.mask == 0
        assert graded_radical(ring, gr).mask == gr.mask
        for r in ring.hom_elements():
            assert ((gr.mask >> r) & 1) == hom_power_in(ring, r, I)
    for I in lattice:
        for J in lattice:
            prod = graded_radical(ring, ideal_combine("product", I, J)).mask
            meet = graded_radical(ring, ideal_combine("intersection", I, J)).mask
            both = graded_radical(ring, I).mask & graded_radical(ring, J).mask
            assert prod == meet == both


@given(ring_descriptions())
@settings(max_examples=30, deadline=None)
def test_primality_criteria_agree(desc_pair):
    ring = build(desc_pair)
    for I in enumerate_graded_ideals(ring):
        assert is_graded_prime(ring, I) == is_graded_prime_ideal_criterion(ring, I)


@given(ring_descriptions())
@settings(max_examples=30, deadline=None)
def test_primes_are_radical_fixed_with_full_varieties(desc_pair):
    ring = build(desc_pair)
    for p in graded_prime_spectrum(ring):
        assert graded_radical(ring, p).mask == p.mask
    # finite union law: the variety of an intersection of primes is the union
    spectrum = graded_prime_spectrum(ring)
    for i, p in enumerate(spectrum):
        for j, q in enumerate(spectrum):
            meet = ideal_combine("intersection", p, q)
            assert variety(ring, meet) == variety(ring, p) | variety(ring, q)


@given(ring_descriptions())
@settings(max_examples=25, deadline=None)
def test_regular_module_invariants(desc_pair):
    ring = build(desc_pair)
    module = build_module(ring, {"kind": "regular"})
    for S in second_spectrum(module):
        assert is_second(S)
        assert is_graded_prime(ring, ann_in_ring(S))
    for N in enumerate_graded_submodules(module):
        z = zariski_socle(module, N)
        assert zariski_socle(module, z).mask == z.mask


@st.composite
def graded_module_descriptions(draw):
    """A cyclic ring with a split module: each factor assigned a degree."""
    import itertools
    n = draw(st.sampled_from([2, 3, 4, 6, 8, 9, 12]))
    divisors = [d for d in range(2, n + 1) if n % d == 0]
    k = draw(st.integers(1, 3))
    factors = []
    size = 1
    for _ in range(k):
        f = draw(st.sampled_from(divisors))
        if size * f > 32:
            break
        factors.append(f)
        size *= f
    if not factors:
        factors = [divisors[0]]
    degrees = [draw(st.integers(0, 1)) for _ in range(len(factors))]
    components = []
    for g in (0, 1):
        # the component of degree g is the subproduct spanned by its factors
        ranges = [range(f) if d == g else range(1) for f, d in zip(factors, degrees)]
        members = set()
        for combo in itertools.product(*ranges):
            idx = 0
            for v, f in zip(combo, factors):
                idx = idx * f + v
            members.add(idx)
        components.append({"degree": [g], "elements": sorted(members)})
    return n, {"kind": "cyclic_product", "factors": factors,
               "action": "scalar-mod", "components": components}


@given(graded_module_descriptions())
@settings(max_examples=30, deadline=None)
def test_split_module_socle_laws(pair):
    n, desc = pair
    ring = build_ring(FiniteAbelianGroup([2]),
                      {"kind": "zmod", "modulus": n, "grading": "trivial"})
    module = build_module(ring, desc)
    lattice = enumerate_graded_submodules(module)
    from gradedspectra.kernels import backend as kern
    from gradedspectra.modules import make_submodule, second_socle
    for N in lattice:
        soc = second_socle(module, N)
        zsoc = zariski_socle(module, N)
        assert soc.mask & ~zsoc.mask == 0
        assert zariski_socle(module, zsoc).mask == zsoc.mask
        for N2 in lattice:
            total = make_submodule(
                module, kern.module_set_sums(module.tables, N.mask, N2.mask))
            lhs = zariski_socle(module, total).mask
            rhs = kern.module_set_sums(module.tables, zsoc.mask,
                                       zariski_socle(module, N2).mask)
            assert lhs == rhs
