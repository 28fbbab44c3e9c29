"""Module layer: validation, submodule lattices, annihilators, second
spectrum, socles, natural map, predicates, witnesses, decomposition."""

import pytest

from gradedspectra.bitset import mask_of
from gradedspectra.errors import (
    NonHomogeneousGenerator,
    NotAModule,
    PreconditionFailed,
    ZeroModule,
)
from gradedspectra.groups import FiniteAbelianGroup
from gradedspectra.modules import (
    ann_hom_mask,
    ann_in_module,
    ann_in_ring,
    annihilator_variety,
    build_module,
    containment_variety,
    enumerate_graded_submodules,
    graded_submodule_containing,
    is_cotop,
    is_comultiplication,
    is_faithful,
    is_second,
    is_secondful,
    is_secondless,
    is_graded_submodule,
    make_submodule,
    module_annihilator,
    module_predicates,
    natural_map,
    points_sum,
    quotient_module,
    quotient_spectrum_points,
    second_socle,
    second_spectrum,
    second_topology,
    submodule_generated,
    zariski_socle,
    zariski_socle_decomposition,
    zariski_socle_fg_witness,
)
from gradedspectra.rings import ideal_generated, make_ideal
from gradedspectra.topology import is_closed_family, is_noetherian_space

from conftest import (
    brute_graded_submodule_masks,
    brute_is_second,
)

Z2 = FiniteAbelianGroup([2])


@pytest.fixture(scope="module")
def regular_a(ring_a):
    return build_module(ring_a, {"kind": "regular"}, name="ra_reg")


@pytest.fixture(scope="module")
def zero_module(ring_a):
    return build_module(
        ring_a, {"kind": "quotient", "base": {"kind": "regular"}, "generators": [1]},
        name="zero",
    )


# -- construction and validation ------------------------------------------------


def test_bad_action_rejected(ring_a):
    # Z_4 acting on Z_3 by scalars is inconsistent: (1+3)*x = 0 but 1x+3x = x
    with pytest.raises(NotAModule):
        build_module(ring_a, {"kind": "cyclic_product", "factors": [3],
                              "action": "scalar-mod"})


def test_bad_module_grading_rejected(ring_a):
    with pytest.raises(Exception):
        build_module(ring_a, {
            "kind": "cyclic_product", "factors": [2, 2], "action": "scalar-mod",
            "components": [{"degree": [0], "elements": [0, 1, 2]},
                           {"degree": [1], "elements": [0, 3]}],
        })


def test_regular_module_mirrors_ring(ring_b, module_a):
    reg = build_module(ring_b, {"kind": "regular"})
    assert reg.m == ring_b.n
    assert reg.comp_masks == ring_b.comp_masks
    assert module_a.labels == ("(0,0)", "(0,1)", "(1,0)", "(1,1)")


def test_explicit_action_table(ring_a, module_a):
    # spelling out the scalar action as a table builds the same module
    desc = {
        "kind": "cyclic_product", "factors": [2, 2],
        "action": [list(row) for row in module_a.act],
        "components": [{"degree": [0], "elements": [0, 1]},
                       {"degree": [1], "elements": [0, 2]}],
    }
    explicit = build_module(ring_a, desc)
    assert explicit.act == module_a.act
    assert explicit.comp_masks == module_a.comp_masks


def test_zero_module(zero_module):
    assert zero_module.is_zero
    assert [N.indices for N in enumerate_graded_submodules(zero_module)] == [[0]]
    assert is_secondless(zero_module)
    with pytest.raises(ZeroModule):
        natural_map(zero_module)


# -- submodule lattice ------------------------------------------------------------


def test_lattice_matches_subset_scan(module_a, module_b, regular_a):
    for module in (module_a, module_b, regular_a):
        got = sorted(N.mask for N in enumerate_graded_submodules(module))
        assert got == brute_graded_submodule_masks(module)


def test_lattice_frozen_values(module_a, module_b):
    # four graded submodules; the diagonal {(0,0),(1,1)} is a submodule
    # but not graded
    for module in (module_a, module_b):
        assert [sorted(N.indices) for N in enumerate_graded_submodules(module)] == \
            [[0], [0, 1], [0, 2], [0, 1, 2, 3]]
    assert not is_graded_submodule(module_a, [0, 3])


def test_submodule_generated(module_a):
    assert sorted(submodule_generated(module_a, [1]).indices) == [0, 1]
    with pytest.raises(NonHomogeneousGenerator):
        submodule_generated(module_a, [3])
    # closure over components: the inhomogeneous diagonal element generates M
    assert graded_submodule_containing(module_a, [3]).mask == module_a.full_mask()


# -- annihilators -----------------------------------------------------------------


def test_annihilators(module_a, module_b, ring_a):
    ann = module_annihilator(module_a)
    assert sorted(ann.indices) == [0, 2]
    m0 = make_submodule(module_b, mask_of([0, 2]))
    assert ann_in_ring(m0).indices == [0]
    full = make_ideal(module_a.ring, module_a.ring.full_mask())
    assert ann_in_module(module_a, full).indices == [0]
    zero_ideal = make_ideal(module_a.ring, 1, ())
    assert ann_in_module(module_a, zero_ideal).mask == module_a.full_mask()
    assert ann_hom_mask(module_a) == mask_of([0, 2])


def test_annihilators_are_graded(module_a, module_b, regular_a):
    from gradedspectra.rings import enumerate_graded_ideals, is_graded_ideal
    for module in (module_a, module_b, regular_a):
        for N in enumerate_graded_submodules(module):
            assert is_graded_ideal(module.ring, ann_in_ring(N).mask)
        for I in enumerate_graded_ideals(module.ring):
            assert is_graded_submodule(module, ann_in_module(module, I).mask)


# -- second spectrum ---------------------------------------------------------------


def test_second_membership(module_a, regular_a):
    m0 = make_submodule(module_a, mask_of([0, 1]))
    assert is_second(m0)
    assert is_second(make_submodule(module_a, module_a.full_mask()))
    assert not is_second(make_submodule(module_a, 1, ()))
    # the ring as a module over itself: the whole module is not second
    assert not is_second(make_submodule(regular_a, regular_a.full_mask()))
    assert is_second(make_submodule(regular_a, mask_of([0, 2])))


def test_second_spectrum_matches_brute(module_a, module_b, regular_a):
    for module in (module_a, module_b, regular_a):
        got = {S.mask for S in second_spectrum(module)}
        expected = {m for m in brute_graded_submodule_masks(module)
                    if brute_is_second(module, m)}
        assert got == expected


def test_second_spectrum_frozen(module_a, module_b):
    for module in (module_a, module_b):
        assert [sorted(S.indices) for S in second_spectrum(module)] == \
            [[0, 1], [0, 2], [0, 1, 2, 3]]


# -- varieties and socles -----------------------------------------------------------


def test_varieties(module_a, module_b):
    m0a = make_submodule(module_a, mask_of([0, 1]))
    assert annihilator_variety(module_a, m0a) == frozenset([0, 1, 2])
    m0b = make_submodule(module_b, mask_of([0, 2]))
    assert annihilator_variety(module_b, m0b) == frozenset([0, 1, 2])
    zero = make_submodule(module_a, 1, ())
    assert annihilator_variety(module_a, zero) == frozenset()
    assert containment_variety(module_a, zero) == frozenset()
    assert containment_variety(module_a, m0a) == frozenset([0])
    assert containment_variety(module_b, m0b) <= annihilator_variety(module_b, m0b)


def test_socles_strict_inclusion(module_b):
    m0 = make_submodule(module_b, mask_of([0, 2]))
    soc = second_socle(module_b, m0)
    zsoc = zariski_socle(module_b, m0)
    assert soc.mask == m0.mask
    assert zsoc.mask == module_b.full_mask()
    assert soc.mask != zsoc.mask


def test_socle_conventions(module_a):
    zero = make_submodule(module_a, 1, ())
    assert zariski_socle(module_a, zero).is_zero
    assert second_socle(module_a, zero).is_zero
    assert points_sum(module_a, []).is_zero


def test_zariski_socle_of_m0(module_a):
    m0 = make_submodule(module_a, mask_of([0, 1]))
    assert zariski_socle(module_a, m0).mask == module_a.full_mask()


# -- natural map and secondful -------------------------------------------------------


def test_natural_map_and_secondful(module_a, module_b, regular_a):
    pairs = natural_map(module_a)
    assert all(sorted(ann.indices) == [0, 2] for _, ann in pairs)
    assert is_secondful(module_a)
    assert len(quotient_spectrum_points(module_a)) == 1
    assert is_secondful(module_b)
    assert is_secondful(regular_a)


def test_module_over_graded_field_secondful(ring_c):
    reg = build_module(ring_c, {"kind": "regular"})
    assert is_secondful(reg)
    assert module_annihilator(reg).indices == [0]


# -- topology on the second spectrum --------------------------------------------------


def test_second_topology(module_a, module_b):
    for module in (module_a, module_b):
        top = second_topology(module)
        assert is_closed_family(top)
        assert [sorted(c) for c in top.closed_sets] == [[], [0, 1, 2]]
        assert is_noetherian_space(top)


def test_cotop(module_a, module_b, regular_a):
    # both two-factor modules have containment varieties not closed under union
    assert not is_cotop(module_a)
    assert not is_cotop(module_b)
    assert is_cotop(regular_a)


# -- predicates ------------------------------------------------------------------------


def test_predicates(module_a, module_b, regular_a):
    assert module_predicates(module_a) == {
        "is_faithful": False,
        "is_comultiplication": False,
        "is_weak_comultiplication": False,
        "is_secondless": False,
    }
    # the annihilator of the degree-0 line cuts the whole module, so the
    # line is not an annihilator submodule: not (weak) comultiplication
    assert not is_comultiplication(module_b)
    assert module_predicates(regular_a) == {
        "is_faithful": True,
        "is_comultiplication": True,
        "is_weak_comultiplication": True,
        "is_secondless": False,
    }
    assert is_faithful(module_b)


# -- witnesses ---------------------------------------------------------------------------


def test_zariski_socle_fg_witness(module_a, module_b, regular_a):
    m0 = make_submodule(module_a, mask_of([0, 1]))
    w = zariski_socle_fg_witness(module_a, m0)
    assert w == ()   # the zero ideal already realizes the socle via Ann_M(0)=M
    I = ideal_generated(module_a.ring, w)
    assert zariski_socle(module_a, ann_in_module(module_a, I)).mask == \
        zariski_socle(module_a, m0).mask
    zero = make_submodule(regular_a, 1, ())
    wz = zariski_socle_fg_witness(regular_a, zero)
    Iz = ideal_generated(regular_a.ring, wz)
    assert zariski_socle(regular_a, ann_in_module(regular_a, Iz)).is_zero
    # module over a graded field: any nonzero submodule has the empty witness
    m0b = make_submodule(module_b, mask_of([0, 2]))
    assert zariski_socle_fg_witness(module_b, m0b) == ()


# -- decomposition ----------------------------------------------------------------------


def test_decomposition_on_regular_module(regular_a):
    two = make_submodule(regular_a, mask_of([0, 2]))
    parts = zariski_socle_decomposition(regular_a, two)
    assert [sorted(p.indices) for p in parts] == [[0, 2]]
    zero = make_submodule(regular_a, 1, ())
    assert zariski_socle_decomposition(regular_a, zero) == ()


def test_decomposition_preconditions(module_a, regular_a):
    # the two-factor module is not weak comultiplication
    with pytest.raises(PreconditionFailed):
        zariski_socle_decomposition(module_a, make_submodule(module_a, module_a.full_mask()))
    # the whole regular module is not a Zariski-socle fixed point
    with pytest.raises(PreconditionFailed):
        zariski_socle_decomposition(regular_a, make_submodule(regular_a, regular_a.full_mask()))


# -- quotient modules ----------------------------------------------------------------------


def test_quotient_module(module_a):
    m0 = make_submodule(module_a, mask_of([0, 1]))
    q = quotient_module(module_a, m0)
    assert q.module.m == 2
    assert q.proj[1] == q.proj[0]
    # the degree-0 component collapses in the quotient
    assert q.module.comp_masks[0] == 1 << q.module.zero


def test_second_closed_sets_equal_their_tag_varieties(module_a, module_b, regular_a):
    for module in (module_a, module_b, regular_a):
        top = second_topology(module)
        for c, tag in zip(top.closed_sets, top.closed_tags):
            assert annihilator_variety(module, tag) == c


def test_second_basis_covers_opens(module_a, module_b, regular_a):
    from gradedspectra.modules import second_basic_open_sets
    for module in (module_a, module_b, regular_a):
        top = second_topology(module)
        basis = second_basic_open_sets(module)
        full = frozenset(range(len(top.points)))
        for c in top.closed_sets:
            u = full - c
            union = frozenset()
            for _, b in basis:
                if b <= u:
                    union |= b
            assert union == u
