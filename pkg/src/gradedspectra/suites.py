"""The verification suite catalog and runner.

Each suite checks one law of the graded spectral theory on one instance,
quantified over that instance's enumerated ideals/submodules.  Suites
whose hypotheses fail report ``precondition-skipped``; suites whose
quantifier domain is empty report ``vacuous``; failures carry a replayable
counterexample payload of element lists.  Suite ids follow the library's
law-catalog numbering (section.item), stable across releases.
"""

from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .bitset import bits, indices, subset_key
from .errors import GradedAlgebraError
from .instances import Instance, instantiate
from .kernels import backend as kern
from .modules import (
    ann_in_module,
    ann_in_ring,
    annihilator_variety,
    containment_variety,
    enumerate_graded_submodules,
    is_comultiplication,
    is_faithful,
    is_second,
    is_secondful,
    is_weak_comultiplication,
    make_submodule,
    module_annihilator,
    points_sum,
    second_socle,
    second_spectrum,
    second_topology,
    zariski_socle,
    zariski_socle_decomposition,
    zariski_socle_fg_witness,
)
from .rings import (
    enumerate_graded_ideals,
    graded_jacobson_radical,
    graded_radical,
    ideal_combine,
    ideal_generated,
    is_graded_prime,
    jacobson_radical_e,
    make_ideal,
    max_spectrum,
    quotient_ring,
)
from .spectrum import (
    build_topology,
    graded_prime_spectrum,
    intersection_ideal,
    minimal_prime_divisors,
    radical_fg_witness,
    variety,
)
from .topology import (
    closure_in,
    descending_chains_terminate,
    every_open_compact,
    irreducible_components_within,
    is_irreducible_set,
    is_noetherian_space,
)

PASS = "pass"
FAIL = "fail"
VACUOUS = "vacuous"
SKIPPED = "precondition-skipped"

SUBSET_ENUM_LIMIT = 8   # exhaust subsets of point sets up to this size


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    instance: str
    status: str
    counterexample: dict | None
    millis: float

    def as_dict(self, timings: bool = False) -> dict:
        row = {"suite": self.suite, "instance": self.instance, "status": self.status}
        if self.counterexample is not None:
            row["counterexample"] = self.counterexample
        if timings:
            row["millis"] = round(self.millis, 3)
        return row


# -- payload helpers ----------------------------------------------------------


def _ideal_payload(I):
    return sorted(I.indices)


def _points_payload(ring_or_module_points, positions):
    return [sorted(ring_or_module_points[i].indices) for i in sorted(positions)]


def _chains_terminate(masks) -> bool:
    """Strict-inclusion chains in a finite explicit family always terminate;
    computing the longest one is the structural check."""
    ordered = sorted(masks, key=subset_key)
    depth: dict[int, int] = {}
    for i, mask in enumerate(ordered):
        best = 0
        for other in ordered[:i]:
            if other != mask and other & ~mask == 0:
                best = max(best, depth[other])
        depth[mask] = best + 1
    return max(depth.values(), default=0) <= len(ordered)


def _point_subsets(npoints):
    """All subsets when small, else a deterministic selection."""
    universe = list(range(npoints))
    if npoints <= SUBSET_ENUM_LIMIT:
        for k in range(npoints + 1):
            yield from (frozenset(c) for c in itertools.combinations(universe, k))
        return
    yield frozenset()
    yield frozenset(universe)
    for i in universe:
        yield frozenset([i])
        yield frozenset(universe) - {i}
    for i, j in itertools.combinations(universe, 2):
        yield frozenset([i, j])


def _radical_ideals(ring):
    return [I for I in enumerate_graded_ideals(ring)
            if graded_radical(ring, I).mask == I.mask]


# -- ring-side suites ---------------------------------------------------------


def suite_closure_formula(inst):
    """Closure of a point set is the variety of its intersection ideal."""
    ring = inst.ring
    top = build_topology(ring)
    for y in _point_subsets(len(top.points)):
        expected = closure_in(top, y)
        got = variety(ring, intersection_ideal(ring, y))
        if got != expected:
            return FAIL, {"subset": _points_payload(top.points, y),
                          "detail": "closure mismatch"}
    return PASS, None


def suite_radical_is_prime_intersection(inst):
    """The graded radical equals the intersection over its variety."""
    ring = inst.ring
    for I in enumerate_graded_ideals(ring):
        got = intersection_ideal(ring, variety(ring, I))
        if got.mask != graded_radical(ring, I).mask:
            return FAIL, {"ideal": _ideal_payload(I)}
    return PASS, None


def suite_radical_determines_variety(inst):
    """Two ideals share a graded radical exactly when they share a variety."""
    ring = inst.ring
    lattice = enumerate_graded_ideals(ring)
    for I in lattice:
        for J in lattice:
            same_radical = graded_radical(ring, I).mask == graded_radical(ring, J).mask
            same_variety = variety(ring, I) == variety(ring, J)
            if same_radical != same_variety:
                return FAIL, {"ideal": _ideal_payload(I), "other_ideal": _ideal_payload(J)}
    return PASS, None


def suite_quotient_spectrum_correspondence(inst):
    """Quotient spectra correspond to the primes over the ideal; chain
    conditions transfer."""
    ring = inst.ring
    base_noeth = is_noetherian_space(build_topology(ring))
    for I in enumerate_graded_ideals(ring):
        if not I.is_proper:
            continue
        q = quotient_ring(ring, I)
        lifted = {q.lift_mask(p.mask) for p in graded_prime_spectrum(q.ring)}
        over = {p.mask for p in graded_prime_spectrum(ring) if I.mask & ~p.mask == 0}
        if lifted != over:
            return FAIL, {"ideal": _ideal_payload(I),
                          "detail": "prime correspondence mismatch"}
        lifted_ideals = {q.lift_mask(J.mask) for J in enumerate_graded_ideals(q.ring)}
        over_ideals = {J.mask for J in enumerate_graded_ideals(ring)
                       if I.mask & ~J.mask == 0}
        if lifted_ideals != over_ideals:
            return FAIL, {"ideal": _ideal_payload(I),
                          "detail": "graded-ideal correspondence mismatch"}
        if is_noetherian_space(build_topology(q.ring)) != base_noeth:
            return FAIL, {"ideal": _ideal_payload(I),
                          "detail": "chain condition did not transfer"}
    return PASS, None


def suite_noetherian_iff_radical_acc(inst):
    """Chain condition on closed sets matches the one on radical ideals."""
    ring = inst.ring
    side_space = is_noetherian_space(build_topology(ring))
    side_acc = _chains_terminate([I.mask for I in _radical_ideals(ring)])
    if side_space != side_acc:
        return FAIL, {"detail": f"space={side_space}, radical-chains={side_acc}"}
    return PASS, None


def suite_noetherian_from_finite_chains(inst):
    """A ring with terminating graded-ideal chains has a Noetherian spectrum."""
    ring = inst.ring
    hypothesis = _chains_terminate([I.mask for I in enumerate_graded_ideals(ring)])
    if hypothesis and not is_noetherian_space(build_topology(ring)):
        return FAIL, {"detail": "graded chains terminate but spectrum is not Noetherian"}
    return PASS, None


def suite_irreducible_closed_are_prime_varieties(inst):
    """A closed set is irreducible exactly when it is a prime's variety."""
    ring = inst.ring
    top = build_topology(ring)
    prime_varieties = {variety(ring, p) for p in top.points}
    for c in top.closed_sets:
        irr = is_irreducible_set(top, c)
        is_prime_var = c in prime_varieties
        xi_prime = bool(c) and is_graded_prime(ring, intersection_ideal(ring, c))
        if not (irr == is_prime_var == xi_prime):
            return FAIL, {"subset": _points_payload(top.points, c),
                          "detail": f"irr={irr}, prime-variety={is_prime_var}, "
                                    f"prime-intersection={xi_prime}"}
    return PASS, None


def suite_components_are_minimal_divisor_varieties(inst):
    """Components of a variety come exactly from its minimal prime divisors."""
    ring = inst.ring
    top = build_topology(ring)
    for I in enumerate_graded_ideals(ring):
        sub = variety(ring, I)
        direct = irreducible_components_within(top, sub)
        from_divisors = sorted(
            {variety(ring, p) for p in minimal_prime_divisors(ring, I)},
            key=lambda s: (-len(s), tuple(sorted(s))),
        )
        if direct != from_divisors:
            return FAIL, {"ideal": _ideal_payload(I)}
    return PASS, None


def suite_finitely_many_minimal_divisors(inst):
    """Every proper ideal has at least one and finitely many minimal divisors,
    each genuinely minimal."""
    ring = inst.ring
    spectrum = graded_prime_spectrum(ring)
    for I in enumerate_graded_ideals(ring):
        divisors = minimal_prime_divisors(ring, I)
        if I.is_proper and not divisors:
            return FAIL, {"ideal": _ideal_payload(I), "detail": "no minimal divisor"}
        for p in divisors:
            for q in spectrum:
                if (q.mask != p.mask and I.mask & ~q.mask == 0
                        and q.mask & ~p.mask == 0):
                    return FAIL, {"ideal": _ideal_payload(I),
                                  "other_ideal": _ideal_payload(q),
                                  "detail": "divisor not minimal"}
    return PASS, None


def suite_spectrum_components(inst):
    """The whole spectrum's components come from the minimal primes."""
    ring = inst.ring
    top = build_topology(ring)
    zero = make_ideal(ring, 1 << ring.zero, ())
    direct = irreducible_components_within(top, frozenset(range(len(top.points))))
    from_minimal = sorted(
        {variety(ring, p) for p in minimal_prime_divisors(ring, zero)},
        key=lambda s: (-len(s), tuple(sorted(s))),
    )
    if direct != from_minimal:
        return FAIL, {"detail": "component mismatch on the full spectrum"}
    return PASS, None


def suite_finitely_many_minimal_primes(inst):
    """A Noetherian spectrum leaves only finitely many minimal primes."""
    ring = inst.ring
    if not is_noetherian_space(build_topology(ring)):
        return SKIPPED, None
    zero = make_ideal(ring, 1 << ring.zero, ())
    divisors = minimal_prime_divisors(ring, zero)
    if len(divisors) > len(graded_prime_spectrum(ring)):
        return FAIL, {"detail": "more minimal primes than primes"}
    return PASS, None


def suite_radical_ideal_decomposition(inst):
    """Every proper radical ideal is the intersection of its minimal divisors."""
    ring = inst.ring
    checked = 0
    for I in _radical_ideals(ring):
        if not I.is_proper:
            continue
        checked += 1
        divisors = minimal_prime_divisors(ring, I)
        if not divisors:
            return FAIL, {"ideal": _ideal_payload(I), "detail": "no divisors"}
        mask = ring.full_mask()
        for p in divisors:
            mask &= p.mask
        if mask != I.mask:
            return FAIL, {"ideal": _ideal_payload(I),
                          "detail": "divisor intersection differs"}
    return (PASS if checked else VACUOUS), None


def suite_fg_witness_closed_under_product(inst):
    """Products and intersections keep a finitely generated radical witness."""
    ring = inst.ring
    lattice = enumerate_graded_ideals(ring)
    for I in lattice:
        for J in lattice:
            for derived in (ideal_combine("product", I, J),
                            ideal_combine("intersection", I, J)):
                w = radical_fg_witness(ring, derived)
                generated = ideal_generated(ring, w)
                if graded_radical(ring, generated).mask != graded_radical(ring, derived).mask:
                    return FAIL, {"ideal": _ideal_payload(I),
                                  "other_ideal": _ideal_payload(J)}
    return PASS, None


def suite_fg_witness_inside_ideal(inst):
    """The radical witness can be chosen among the ideal's own homogeneous
    elements."""
    ring = inst.ring
    for I in enumerate_graded_ideals(ring):
        w = radical_fg_witness(ring, I)
        if any(not ((I.mask >> a) & 1) or not ring.is_homogeneous(a) for a in w):
            return FAIL, {"ideal": _ideal_payload(I), "detail": f"witness {list(w)}"}
        generated = ideal_generated(ring, w)
        if graded_radical(ring, generated).mask != graded_radical(ring, I).mask:
            return FAIL, {"ideal": _ideal_payload(I), "detail": f"witness {list(w)}"}
    return PASS, None


def suite_noetherian_iff_opens_compact(inst):
    """Chain condition on closed sets matches compactness of every open."""
    top = build_topology(inst.ring)
    dcc = descending_chains_terminate(top)
    compact = every_open_compact(top)
    if dcc != compact:
        return FAIL, {"detail": f"chains={dcc}, compact-opens={compact}"}
    return PASS, None


def suite_noetherian_iff_all_ideals_fg_radical(inst):
    """Noetherian spectrum matches every ideal having a radical witness."""
    ring = inst.ring
    noeth = is_noetherian_space(build_topology(ring))
    all_witnessed = True
    for I in enumerate_graded_ideals(ring):
        w = radical_fg_witness(ring, I)
        generated = ideal_generated(ring, w)
        if graded_radical(ring, generated).mask != graded_radical(ring, I).mask:
            all_witnessed = False
            break
    if noeth != all_witnessed:
        return FAIL, {"detail": f"noetherian={noeth}, witnessed={all_witnessed}"}
    return PASS, None


def suite_unwitnessed_family_empty(inst):
    """The family of ideals without a radical witness is empty on finite
    carriers; were it not, its maximal members would have to be prime."""
    ring = inst.ring
    bad = []
    for I in enumerate_graded_ideals(ring):
        w = radical_fg_witness(ring, I)
        generated = ideal_generated(ring, w)
        if graded_radical(ring, generated).mask != graded_radical(ring, I).mask:
            bad.append(I)
    if not bad:
        return VACUOUS, None
    maximal = [I for I in bad
               if not any(I.mask != J.mask and I.mask & ~J.mask == 0 for J in bad)]
    for I in maximal:
        if not is_graded_prime(ring, I):
            return FAIL, {"ideal": _ideal_payload(I),
                          "detail": "maximal unwitnessed ideal is not prime"}
    return PASS, None


def suite_noetherian_iff_primes_fg_radical(inst):
    """Noetherian spectrum matches every prime having a radical witness."""
    ring = inst.ring
    noeth = is_noetherian_space(build_topology(ring))
    all_witnessed = True
    for p in graded_prime_spectrum(ring):
        w = radical_fg_witness(ring, p)
        generated = ideal_generated(ring, w)
        if graded_radical(ring, generated).mask != graded_radical(ring, p).mask:
            all_witnessed = False
            break
    if noeth != all_witnessed:
        return FAIL, {"detail": f"noetherian={noeth}, witnessed={all_witnessed}"}
    return PASS, None


# -- module-side suites -------------------------------------------------------


def suite_annihilator_fixed_points(inst):
    """On a nonzero secondful module, a radical ideal is recovered from its
    annihilator submodule exactly when it contains the module annihilator."""
    module = inst.module
    if module.is_zero or not is_secondful(module):
        return SKIPPED, None
    ring = module.ring
    ann_m = module_annihilator(module)
    checked = 0
    for I in _radical_ideals(ring):
        checked += 1
        recovered = ann_in_ring(ann_in_module(module, I)).mask == I.mask
        contains = ann_m.mask & ~I.mask == 0
        if recovered != contains:
            return FAIL, {"ideal": _ideal_payload(I),
                          "detail": f"recovered={recovered}, contains-ann={contains}"}
    return (PASS if checked else VACUOUS), None


def suite_maximal_unit_witness(inst):
    """A graded maximal ideal killing nothing admits an identity-degree
    element x with (1+x) annihilating the module."""
    module = inst.module
    if not is_secondful(module):
        return SKIPPED, None
    ring = module.ring
    ann_m = module_annihilator(module)
    checked = 0
    for p in max_spectrum(ring):
        if not ann_in_module(module, p).is_zero:
            continue
        checked += 1
        found = False
        for x in bits(p.mask & ring.comp_masks[0]):
            if (ann_m.mask >> ring.add[ring.one][x]) & 1:
                found = True
                break
        if not found:
            return FAIL, {"ideal": _ideal_payload(p), "detail": "no unit witness"}
    return (PASS if checked else VACUOUS), None


def suite_radical_in_jacobson_kills(inst):
    """A radical ideal inside the graded Jacobson radical with zero
    annihilator submodule forces the zero module."""
    module = inst.module
    if not is_secondful(module):
        return SKIPPED, None
    ring = module.ring
    jg = graded_jacobson_radical(ring)
    checked = 0
    for I in _radical_ideals(ring):
        if I.mask & ~jg.mask:
            continue
        if not ann_in_module(module, I).is_zero:
            continue
        checked += 1
        if not module.is_zero:
            return FAIL, {"ideal": _ideal_payload(I)}
    return (PASS if checked else VACUOUS), None


def suite_radical_in_identity_jacobson_kills(inst):
    """Same with the identity-degree subring's Jacobson radical; also checks
    that radical against the graded one restricted to that subring."""
    module = inst.module
    if not is_secondful(module):
        return SKIPPED, None
    ring = module.ring
    je = jacobson_radical_e(ring)
    jg = graded_jacobson_radical(ring)
    if je != jg.mask & ring.comp_masks[0]:
        return FAIL, {"detail": "identity-degree radical mismatch"}
    checked = 0
    for I in _radical_ideals(ring):
        if I.mask & ~je:
            continue
        if not ann_in_module(module, I).is_zero:
            continue
        checked += 1
        if not module.is_zero:
            return FAIL, {"ideal": _ideal_payload(I)}
    return (PASS if checked else VACUOUS), None


def suite_second_socle_is_contained_sum(inst):
    """The second socle is the sum of the contained second points."""
    module = inst.module
    for N in enumerate_graded_submodules(module):
        direct = second_socle(module, N)
        via_points = points_sum(module, containment_variety(module, N))
        if direct.mask != via_points.mask:
            return FAIL, {"submodule": sorted(N.indices)}
    return PASS, None


def suite_zariski_socle_is_variety_sum(inst):
    """The Zariski socle is the sum over the annihilator variety."""
    module = inst.module
    spectrum = second_spectrum(module)
    for N in enumerate_graded_submodules(module):
        ann_n = ann_in_ring(N).mask
        mask = 1 << module.zero
        for S in spectrum:
            if ann_n & ~ann_in_ring(S).mask == 0:
                mask = kern.module_set_sums(module.tables, mask, S.mask)
        if mask != zariski_socle(module, N).mask:
            return FAIL, {"submodule": sorted(N.indices)}
    return PASS, None


def suite_second_closure_formula(inst):
    """Closure of a second-point set is the variety of its member sum."""
    module = inst.module
    top = second_topology(module)
    for y in _point_subsets(len(top.points)):
        expected = closure_in(top, y)
        got = annihilator_variety(module, points_sum(module, y))
        if got != expected:
            return FAIL, {"subset": _points_payload(top.points, y)}
    for N in enumerate_graded_submodules(module):
        if annihilator_variety(module, zariski_socle(module, N)) != \
                annihilator_variety(module, N):
            return FAIL, {"submodule": sorted(N.indices),
                          "detail": "socle changed the variety"}
    return PASS, None


def suite_annihilator_varieties_coincide(inst):
    """For annihilator submodules, both variety notions agree, with or
    without passing to the radical."""
    module = inst.module
    ring = module.ring
    for I in enumerate_graded_ideals(ring):
        a = ann_in_module(module, I)
        b = ann_in_module(module, graded_radical(ring, I))
        sets = {
            annihilator_variety(module, a),
            annihilator_variety(module, b),
            containment_variety(module, a),
            containment_variety(module, b),
        }
        if len(sets) != 1:
            return FAIL, {"ideal": _ideal_payload(I)}
    return PASS, None


def suite_variety_through_double_annihilator(inst):
    """V(N) survives replacing N by the annihilator of its annihilator."""
    module = inst.module
    ring = module.ring
    for N in enumerate_graded_submodules(module):
        ann = ann_in_ring(N)
        a = ann_in_module(module, ann)
        b = ann_in_module(module, graded_radical(ring, ann))
        sets = {
            annihilator_variety(module, N),
            annihilator_variety(module, a),
            annihilator_variety(module, b),
            containment_variety(module, a),
            containment_variety(module, b),
        }
        if len(sets) != 1:
            return FAIL, {"submodule": sorted(N.indices)}
    return PASS, None


def suite_socles_on_annihilator_submodules(inst):
    """Second and Zariski socles agree on annihilator submodules."""
    module = inst.module
    ring = module.ring
    for I in enumerate_graded_ideals(ring):
        a = ann_in_module(module, I)
        b = ann_in_module(module, graded_radical(ring, I))
        masks = {
            zariski_socle(module, a).mask,
            zariski_socle(module, b).mask,
            second_socle(module, a).mask,
            second_socle(module, b).mask,
        }
        if len(masks) != 1:
            return FAIL, {"ideal": _ideal_payload(I)}
    return PASS, None


def suite_socles_through_double_annihilator(inst):
    """The Zariski socle factors through the double annihilator."""
    module = inst.module
    ring = module.ring
    for N in enumerate_graded_submodules(module):
        ann = ann_in_ring(N)
        a = ann_in_module(module, ann)
        b = ann_in_module(module, graded_radical(ring, ann))
        masks = {
            zariski_socle(module, N).mask,
            zariski_socle(module, a).mask,
            zariski_socle(module, b).mask,
            second_socle(module, a).mask,
            second_socle(module, b).mask,
        }
        if len(masks) != 1:
            return FAIL, {"submodule": sorted(N.indices)}
    return PASS, None


def suite_second_socle_below_zariski(inst):
    """soc(N) sits inside the Zariski socle; equal on comultiplication
    modules."""
    module = inst.module
    comult = is_comultiplication(module)
    for N in enumerate_graded_submodules(module):
        soc = second_socle(module, N)
        zsoc = zariski_socle(module, N)
        if soc.mask & ~zsoc.mask:
            return FAIL, {"submodule": sorted(N.indices)}
        if comult and soc.mask != zsoc.mask:
            return FAIL, {"submodule": sorted(N.indices),
                          "detail": "socles differ on a comultiplication module"}
    return PASS, None


def suite_variety_monotone_socle(inst):
    """Variety containment pushes to socle containment."""
    module = inst.module
    lattice = enumerate_graded_submodules(module)
    for N in lattice:
        vn = annihilator_variety(module, N)
        zn = zariski_socle(module, N)
        for N2 in lattice:
            if vn <= annihilator_variety(module, N2):
                if zn.mask & ~zariski_socle(module, N2).mask:
                    return FAIL, {"submodule": sorted(N.indices),
                                  "other_submodule": sorted(N2.indices)}
    return PASS, None


def suite_variety_determines_socle(inst):
    """Equal varieties exactly when equal Zariski socles."""
    module = inst.module
    lattice = enumerate_graded_submodules(module)
    for N in lattice:
        vn = annihilator_variety(module, N)
        zn = zariski_socle(module, N).mask
        for N2 in lattice:
            same_v = vn == annihilator_variety(module, N2)
            same_z = zn == zariski_socle(module, N2).mask
            if same_v != same_z:
                return FAIL, {"submodule": sorted(N.indices),
                              "other_submodule": sorted(N2.indices)}
    return PASS, None


def suite_socle_of_zero(inst):
    """The Zariski socle of the zero submodule is zero."""
    module = inst.module
    zero = make_submodule(module, 1 << module.zero, ())
    if not zariski_socle(module, zero).is_zero:
        return FAIL, {"detail": "zero submodule has nonzero socle"}
    return PASS, None


def suite_socle_monotone(inst):
    """Submodule containment pushes to socle containment."""
    module = inst.module
    lattice = enumerate_graded_submodules(module)
    for N in lattice:
        zn = zariski_socle(module, N)
        for N2 in lattice:
            if N.mask & ~N2.mask == 0:
                if zn.mask & ~zariski_socle(module, N2).mask:
                    return FAIL, {"submodule": sorted(N.indices),
                                  "other_submodule": sorted(N2.indices)}
    return PASS, None


def suite_socle_idempotent(inst):
    """Taking the Zariski socle twice changes nothing."""
    module = inst.module
    for N in enumerate_graded_submodules(module):
        z = zariski_socle(module, N)
        if zariski_socle(module, z).mask != z.mask:
            return FAIL, {"submodule": sorted(N.indices)}
    return PASS, None


def suite_socle_additive(inst):
    """The Zariski socle of a sum is the sum of the Zariski socles."""
    module = inst.module
    lattice = enumerate_graded_submodules(module)
    for N in lattice:
        zn = zariski_socle(module, N).mask
        for N2 in lattice:
            total = make_submodule(
                module, kern.module_set_sums(module.tables, N.mask, N2.mask)
            )
            lhs = zariski_socle(module, total).mask
            rhs = kern.module_set_sums(module.tables, zn,
                                       zariski_socle(module, N2).mask)
            if lhs != rhs:
                return FAIL, {"submodule": sorted(N.indices),
                              "other_submodule": sorted(N2.indices)}
    return PASS, None


def suite_nonzero_iff_nonempty_variety(inst):
    """On secondful modules: nonzero submodule, nonempty variety and nonzero
    socle coincide."""
    module = inst.module
    if not is_secondful(module):
        return SKIPPED, None
    for N in enumerate_graded_submodules(module):
        nz = not N.is_zero
        nev = bool(annihilator_variety(module, N))
        nzs = not zariski_socle(module, N).is_zero
        if not (nz == nev == nzs):
            return FAIL, {"submodule": sorted(N.indices),
                          "detail": f"nonzero={nz}, variety={nev}, socle={nzs}"}
    return PASS, None


def suite_socle_annihilator_radical(inst):
    """Gr(Ann N) sits inside Ann(Z-socle N); equality on secondful modules."""
    module = inst.module
    ring = module.ring
    secondful = not module.is_zero and is_secondful(module)
    for N in enumerate_graded_submodules(module):
        lhs = graded_radical(ring, ann_in_ring(N)).mask
        rhs = ann_in_ring(zariski_socle(module, N)).mask
        if lhs & ~rhs:
            return FAIL, {"submodule": sorted(N.indices)}
        if secondful and lhs != rhs:
            return FAIL, {"submodule": sorted(N.indices),
                          "detail": "equality fails on a secondful module"}
    return PASS, None


def suite_second_noetherian_iff_socle_dcc(inst):
    """Noetherian second spectrum matches the chain condition on
    Zariski-socle submodules."""
    module = inst.module
    side_space = is_noetherian_space(second_topology(module))
    socle_masks = [N.mask for N in enumerate_graded_submodules(module)
                   if zariski_socle(module, N).mask == N.mask]
    side_dcc = _chains_terminate(socle_masks)
    if side_space != side_dcc:
        return FAIL, {"detail": f"space={side_space}, socle-chains={side_dcc}"}
    return PASS, None


def suite_artinian_second_noetherian(inst):
    """A module with terminating submodule chains has Noetherian second
    spectrum."""
    module = inst.module
    hypothesis = _chains_terminate([N.mask for N in enumerate_graded_submodules(module)])
    if hypothesis and not is_noetherian_space(second_topology(module)):
        return FAIL, {"detail": "chains terminate but second spectrum is not Noetherian"}
    return PASS, None


def suite_natural_map_preimage(inst):
    """Preimages of quotient varieties are annihilator-submodule varieties."""
    module = inst.module
    if module.is_zero:
        return SKIPPED, None
    ring = module.ring
    ann_m = module_annihilator(module)
    spectrum = second_spectrum(module)
    checked = 0
    for I in enumerate_graded_ideals(ring):
        if ann_m.mask & ~I.mask:
            continue
        checked += 1
        preimage = frozenset(
            i for i, S in enumerate(spectrum)
            if I.mask & ~ann_in_ring(S).mask == 0
        )
        direct = annihilator_variety(module, ann_in_module(module, I))
        if preimage != direct:
            return FAIL, {"ideal": _ideal_payload(I)}
    return (PASS if checked else VACUOUS), None


def suite_natural_map_closed(inst):
    """On secondful modules the natural map sends varieties to varieties."""
    module = inst.module
    if module.is_zero or not is_secondful(module):
        return SKIPPED, None
    ring = module.ring
    ann_m = module_annihilator(module)
    spectrum = second_spectrum(module)
    for N in enumerate_graded_submodules(module):
        image = {ann_in_ring(spectrum[i]).mask
                 for i in annihilator_variety(module, N)}
        ann_n = ann_in_ring(N)
        target = {p.mask for p in graded_prime_spectrum(ring)
                  if ann_n.mask & ~p.mask == 0 and ann_m.mask & ~p.mask == 0}
        if image != target:
            return FAIL, {"submodule": sorted(N.indices)}
    return PASS, None


def suite_annihilator_variety_collapse(inst):
    """On nonzero secondful modules, Ann(Ann_M(I)) and I cut the same
    varieties over the module annihilator."""
    module = inst.module
    if module.is_zero or not is_secondful(module):
        return SKIPPED, None
    ring = module.ring
    ann_m = module_annihilator(module)
    checked = 0
    for I in enumerate_graded_ideals(ring):
        if ann_m.mask & ~I.mask:
            continue
        checked += 1
        double = ann_in_ring(ann_in_module(module, I))
        if variety(ring, double) != variety(ring, I):
            return FAIL, {"ideal": _ideal_payload(I)}
    return (PASS if checked else VACUOUS), None


def suite_second_noetherian_iff_quotient_noetherian(inst):
    """Secondful: the second spectrum and the quotient prime spectrum are
    Noetherian together."""
    module = inst.module
    if module.is_zero:
        return SKIPPED, None
    if not is_secondful(module):
        return SKIPPED, None
    ring = module.ring
    ann_m = module_annihilator(module)
    side_module = is_noetherian_space(second_topology(module))
    q = quotient_ring(ring, ann_m)
    lifted = {q.lift_mask(p.mask) for p in graded_prime_spectrum(q.ring)}
    over = {p.mask for p in graded_prime_spectrum(ring) if ann_m.mask & ~p.mask == 0}
    if lifted != over:
        return FAIL, {"detail": "quotient prime correspondence mismatch"}
    side_quotient = is_noetherian_space(build_topology(q.ring))
    if side_module != side_quotient:
        return FAIL, {"detail": f"module={side_module}, quotient={side_quotient}"}
    return PASS, None


def suite_secondful_inherits_noetherian(inst):
    """Secondful over a Noetherian-spectrum ring: the second spectrum is
    Noetherian (and likewise under terminating ideal chains)."""
    module = inst.module
    if not is_secondful(module):
        return SKIPPED, None
    ring = module.ring
    ring_noeth = is_noetherian_space(build_topology(ring))
    chains = _chains_terminate([I.mask for I in enumerate_graded_ideals(ring)])
    second_noeth = is_noetherian_space(second_topology(module))
    if (ring_noeth or chains) and not second_noeth:
        return FAIL, {"detail": "ring side Noetherian, module side not"}
    return PASS, None


def suite_socle_of_product_annihilators(inst):
    """soc(Ann_M(I*J)) splits as soc(Ann_M(I)) + soc(Ann_M(J))."""
    module = inst.module
    ring = module.ring
    lattice = enumerate_graded_ideals(ring)
    for I in lattice:
        soc_i = second_socle(module, ann_in_module(module, I)).mask
        for J in lattice:
            product = ideal_combine("product", I, J)
            lhs = second_socle(module, ann_in_module(module, product)).mask
            rhs = kern.module_set_sums(
                module.tables, soc_i,
                second_socle(module, ann_in_module(module, J)).mask,
            )
            if lhs != rhs:
                return FAIL, {"ideal": _ideal_payload(I),
                              "other_ideal": _ideal_payload(J)}
    return PASS, None


def _decomposition_hypotheses(module):
    return (not module.is_zero
            and is_secondful(module)
            and is_weak_comultiplication(module)
            and is_noetherian_space(build_topology(module.ring)))


def suite_socle_submodules_decompose(inst):
    """Under the decomposition hypotheses, every Zariski-socle submodule is
    a finite sum of second submodules."""
    module = inst.module
    if not _decomposition_hypotheses(module):
        return SKIPPED, None
    checked = 0
    for N in enumerate_graded_submodules(module):
        if zariski_socle(module, N).mask != N.mask:
            continue
        checked += 1
        parts = zariski_socle_decomposition(module, N)
        total = 1 << module.zero
        for part in parts:
            if not is_second(part):
                return FAIL, {"submodule": sorted(N.indices)}
            total = kern.module_set_sums(module.tables, total, part.mask)
        if total != N.mask:
            return FAIL, {"submodule": sorted(N.indices)}
    return (PASS if checked else VACUOUS), None


def suite_socle_submodule_characterization(inst):
    """Zariski-socle submodules are exactly the sums of annihilators of
    primes over their own annihilator."""
    module = inst.module
    if not _decomposition_hypotheses(module):
        return SKIPPED, None
    ring = module.ring
    # forward: a nonzero socle submodule is such a sum (via its decomposition)
    for N in enumerate_graded_submodules(module):
        if zariski_socle(module, N).mask != N.mask or N.is_zero:
            continue
        parts = zariski_socle_decomposition(module, N)
        ann_n = ann_in_ring(N)
        for part in parts:
            p = ann_in_ring(part)
            if ann_n.mask & ~p.mask:
                return FAIL, {"submodule": sorted(N.indices),
                              "detail": "summand's annihilator misses Ann(N)"}
    # backward: any qualifying sum of prime annihilators is a socle submodule
    spectrum = graded_prime_spectrum(ring)
    for q in _point_subsets(len(spectrum)):
        if not q:
            continue
        mask = 1 << module.zero
        for i in q:
            mask = kern.module_set_sums(
                module.tables, mask, ann_in_module(module, spectrum[i]).mask
            )
        N = make_submodule(module, mask)
        ann_n = ann_in_ring(N)
        if any(ann_n.mask & ~spectrum[i].mask for i in q):
            continue  # the chosen primes do not sit over Ann(N)
        if zariski_socle(module, N).mask != N.mask:
            return FAIL, {"submodule": sorted(N.indices),
                          "detail": "prime-annihilator sum is not a socle submodule"}
    return PASS, None


def suite_second_noetherian_iff_socle_witnesses(inst):
    """Secondful: Noetherian second spectrum matches every submodule having
    a finitely generated Zariski-socle witness."""
    module = inst.module
    if not is_secondful(module):
        return SKIPPED, None
    noeth = is_noetherian_space(second_topology(module))
    witnessed = True
    for N in enumerate_graded_submodules(module):
        w = zariski_socle_fg_witness(module, N)
        I = ideal_generated(module.ring, w)
        if zariski_socle(module, ann_in_module(module, I)).mask != \
                zariski_socle(module, N).mask:
            witnessed = False
            break
    if noeth != witnessed:
        return FAIL, {"detail": f"noetherian={noeth}, witnessed={witnessed}"}
    return PASS, None


def suite_socle_witness_iff_radical_witness(inst):
    """Secondful faithful: a submodule has a socle witness exactly when its
    annihilator has a radical witness; both are produced and verified."""
    module = inst.module
    if not is_secondful(module) or not is_faithful(module):
        return SKIPPED, None
    ring = module.ring
    for N in enumerate_graded_submodules(module):
        w_socle = zariski_socle_fg_witness(module, N)
        I = ideal_generated(ring, w_socle)
        socle_ok = (zariski_socle(module, ann_in_module(module, I)).mask
                    == zariski_socle(module, N).mask)
        ann = ann_in_ring(N)
        w_rad = radical_fg_witness(ring, ann)
        radical_ok = (graded_radical(ring, ideal_generated(ring, w_rad)).mask
                      == graded_radical(ring, ann).mask)
        if socle_ok != radical_ok:
            return FAIL, {"submodule": sorted(N.indices),
                          "detail": f"socle={socle_ok}, radical={radical_ok}"}
    return PASS, None


def suite_second_noetherian_iff_second_witnesses(inst):
    """Secondful faithful: Noetherian second spectrum matches every second
    submodule having a socle witness."""
    module = inst.module
    if not is_secondful(module) or not is_faithful(module):
        return SKIPPED, None
    noeth = is_noetherian_space(second_topology(module))
    witnessed = True
    for S in second_spectrum(module):
        w = zariski_socle_fg_witness(module, S)
        I = ideal_generated(module.ring, w)
        if zariski_socle(module, ann_in_module(module, I)).mask != \
                zariski_socle(module, S).mask:
            witnessed = False
            break
    if noeth != witnessed:
        return FAIL, {"detail": f"noetherian={noeth}, witnessed={witnessed}"}
    return PASS, None


def suite_socle_witness_sum(inst):
    """Secondful faithful: witnesses survive submodule sums."""
    module = inst.module
    if not is_secondful(module) or not is_faithful(module):
        return SKIPPED, None
    lattice = enumerate_graded_submodules(module)
    for N in lattice:
        for N2 in lattice:
            total = make_submodule(
                module, kern.module_set_sums(module.tables, N.mask, N2.mask)
            )
            w = zariski_socle_fg_witness(module, total)
            I = ideal_generated(module.ring, w)
            if zariski_socle(module, ann_in_module(module, I)).mask != \
                    zariski_socle(module, total).mask:
                return FAIL, {"submodule": sorted(N.indices),
                              "other_submodule": sorted(N2.indices)}
    return PASS, None


def suite_second_points_have_prime_annihilators(inst):
    """Soundness: every second point's annihilator is graded prime."""
    module = inst.module
    for S in second_spectrum(module):
        if not is_graded_prime(module.ring, ann_in_ring(S)):
            return FAIL, {"submodule": sorted(S.indices)}
    return PASS, None


@dataclass(frozen=True)
class SuiteSpec:
    id: str
    needs_module: bool
    description: str
    fn: object


SUITES: tuple[SuiteSpec, ...] = (
    SuiteSpec("lemma-2.1.1", False, "closure equals variety of the intersection ideal", suite_closure_formula),
    SuiteSpec("lemma-2.1.2", False, "graded radical equals intersection over the variety", suite_radical_is_prime_intersection),
    SuiteSpec("lemma-2.1.3", False, "equal radicals exactly when equal varieties", suite_radical_determines_variety),
    SuiteSpec("lemma-2.1.4", False, "quotient spectra correspond and stay Noetherian", suite_quotient_spectrum_correspondence),
    SuiteSpec("prop-2.2.a", False, "Noetherian spectrum equals chain condition on radical ideals", suite_noetherian_iff_radical_acc),
    SuiteSpec("prop-2.2.b", False, "terminating ideal chains give a Noetherian spectrum", suite_noetherian_from_finite_chains),
    SuiteSpec("thm-2.3", False, "irreducible closed sets are prime varieties", suite_irreducible_closed_are_prime_varieties),
    SuiteSpec("thm-2.5.1", False, "variety components come from minimal prime divisors", suite_components_are_minimal_divisor_varieties),
    SuiteSpec("thm-2.5.2", False, "minimal prime divisors exist, finitely many, each minimal", suite_finitely_many_minimal_divisors),
    SuiteSpec("cor-2.6.i", False, "spectrum components come from minimal primes", suite_spectrum_components),
    SuiteSpec("cor-2.6.ii", False, "Noetherian spectrum leaves finitely many minimal primes", suite_finitely_many_minimal_primes),
    SuiteSpec("thm-2.7", False, "proper radical ideals are intersections of their minimal divisors", suite_radical_ideal_decomposition),
    SuiteSpec("prop-2.9.1", False, "radical witnesses survive products and intersections", suite_fg_witness_closed_under_product),
    SuiteSpec("prop-2.9.2", False, "radical witnesses can be chosen inside the ideal", suite_fg_witness_inside_ideal),
    SuiteSpec("lemma-2.10", False, "closed-set chains terminate exactly when all opens are compact", suite_noetherian_iff_opens_compact),
    SuiteSpec("thm-2.11", False, "Noetherian spectrum equals radical witnesses for all ideals", suite_noetherian_iff_all_ideals_fg_radical),
    SuiteSpec("prop-2.12", False, "the unwitnessed-ideal family is empty (else maximal members are prime)", suite_unwitnessed_family_empty),
    SuiteSpec("cor-2.13", False, "Noetherian spectrum equals radical witnesses for all primes", suite_noetherian_iff_primes_fg_radical),
    SuiteSpec("prop-3.3.1", True, "radical ideals over the module annihilator are annihilator-fixed", suite_annihilator_fixed_points),
    SuiteSpec("prop-3.3.2", True, "maximal ideals killing nothing admit a (1+x) annihilating witness", suite_maximal_unit_witness),
    SuiteSpec("prop-3.3.3", True, "radical ideals in the graded Jacobson radical with zero annihilator force M=0", suite_radical_in_jacobson_kills),
    SuiteSpec("prop-3.3.4", True, "same through the identity-degree Jacobson radical", suite_radical_in_identity_jacobson_kills),
    SuiteSpec("prop-3.4.1", True, "second socle is the sum of contained second points", suite_second_socle_is_contained_sum),
    SuiteSpec("prop-3.4.2", True, "Zariski socle is the sum over the annihilator variety", suite_zariski_socle_is_variety_sum),
    SuiteSpec("prop-3.4.3", True, "second-spectrum closure formula", suite_second_closure_formula),
    SuiteSpec("lemma-3.5.1", True, "variety notions coincide on annihilator submodules", suite_annihilator_varieties_coincide),
    SuiteSpec("lemma-3.5.2", True, "varieties factor through the double annihilator", suite_variety_through_double_annihilator),
    SuiteSpec("prop-3.6.1", True, "socles coincide on annihilator submodules", suite_socles_on_annihilator_submodules),
    SuiteSpec("prop-3.6.2", True, "socles factor through the double annihilator", suite_socles_through_double_annihilator),
    SuiteSpec("prop-3.6.3", True, "second socle inside Zariski socle; equal for comultiplication", suite_second_socle_below_zariski),
    SuiteSpec("prop-3.6.4", True, "variety containment pushes to socle containment", suite_variety_monotone_socle),
    SuiteSpec("prop-3.6.5", True, "equal varieties exactly when equal socles", suite_variety_determines_socle),
    SuiteSpec("prop-3.8.a", True, "Zariski socle of zero is zero", suite_socle_of_zero),
    SuiteSpec("prop-3.8.b", True, "Zariski socle is monotone", suite_socle_monotone),
    SuiteSpec("prop-3.8.c", True, "Zariski socle is idempotent", suite_socle_idempotent),
    SuiteSpec("prop-3.8.d", True, "Zariski socle is additive over sums", suite_socle_additive),
    SuiteSpec("prop-3.8.e", True, "secondful: nonzero, nonempty variety, nonzero socle coincide", suite_nonzero_iff_nonempty_variety),
    SuiteSpec("prop-3.8.f", True, "Gr(Ann N) inside Ann(socle); equality when secondful", suite_socle_annihilator_radical),
    SuiteSpec("thm-4.1", True, "Noetherian second spectrum equals socle-submodule chain condition", suite_second_noetherian_iff_socle_dcc),
    SuiteSpec("cor-4.2", True, "terminating submodule chains give a Noetherian second spectrum", suite_artinian_second_noetherian),
    SuiteSpec("lemma-4.3.1", True, "natural-map preimages of quotient varieties", suite_natural_map_preimage),
    SuiteSpec("lemma-4.3.2", True, "secondful: the natural map is closed", suite_natural_map_closed),
    SuiteSpec("lemma-4.4", True, "secondful: double annihilator cuts the same quotient variety", suite_annihilator_variety_collapse),
    SuiteSpec("thm-4.5", True, "secondful: second spectrum Noetherian iff quotient spectrum Noetherian", suite_second_noetherian_iff_quotient_noetherian),
    SuiteSpec("cor-4.6", True, "secondful modules inherit Noetherian spectra from the ring", suite_secondful_inherits_noetherian),
    SuiteSpec("lemma-4.7", True, "second socle splits over ideal products", suite_socle_of_product_annihilators),
    SuiteSpec("thm-4.8.1", True, "Zariski-socle submodules decompose into second submodules", suite_socle_submodules_decompose),
    SuiteSpec("thm-4.8.2", True, "socle submodules are sums of prime annihilators", suite_socle_submodule_characterization),
    SuiteSpec("thm-4.10", True, "secondful: Noetherian second spectrum equals socle witnesses everywhere", suite_second_noetherian_iff_socle_witnesses),
    SuiteSpec("lemma-4.11", True, "secondful faithful: socle witness equals radical witness of the annihilator", suite_socle_witness_iff_radical_witness),
    SuiteSpec("cor-4.12.1", True, "secondful faithful: Noetherian second spectrum equals witnesses on second points", suite_second_noetherian_iff_second_witnesses),
    SuiteSpec("cor-4.12.2", True, "secondful faithful: socle witnesses survive sums", suite_socle_witness_sum),
    SuiteSpec("soundness-second-primes", True, "annihilators of second points are graded prime", suite_second_points_have_prime_annihilators),
)

SUITE_IDS = tuple(spec.id for spec in SUITES)
_SUITE_ORDER = {spec.id: i for i, spec in enumerate(SUITES)}


def select_suites(suite_filter: str | None) -> tuple[SuiteSpec, ...]:
    """All suites, the exact id, or every part under a dotted prefix."""
    if not suite_filter:
        return SUITES
    wanted = suite_filter.lower()
    selected = tuple(
        spec for spec in SUITES
        if spec.id == wanted or spec.id.startswith(wanted + ".")
    )
    if not selected:
        raise ValueError(f"no suite matches {suite_filter!r}")
    return selected


def run_suites_on_instance(inst: Instance, specs=None) -> list[SuiteResult]:
    results = []
    for spec in specs or SUITES:
        start = time.perf_counter()
        if spec.needs_module and inst.module is None:
            status, payload = SKIPPED, None
        else:
            try:
                status, payload = spec.fn(inst)
            except GradedAlgebraError as e:
                status, payload = FAIL, {"detail": f"{type(e).__name__}: {e}"}
            except AssertionError as e:
                status, payload = FAIL, {"detail": f"internal check failed: {e}"}
        millis = (time.perf_counter() - start) * 1000.0
        results.append(SuiteResult(spec.id, inst.name, status, payload, millis))
    return results


def _run_worker(args):
    desc, suite_ids = args
    inst = instantiate(desc)
    specs = tuple(spec for spec in SUITES if spec.id in suite_ids)
    return run_suites_on_instance(inst, specs)


def run_suites(instances, suite_filter: str | None = None, jobs: int = 1) -> list[SuiteResult]:
    """Evaluate the suite x instance grid; results canonically sorted."""
    specs = select_suites(suite_filter)
    results: list[SuiteResult] = []
    if jobs > 1 and len(instances) > 1:
        suite_ids = {spec.id for spec in specs}
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk in pool.map(_run_worker,
                                  [(inst.desc, suite_ids) for inst in instances]):
                results.extend(chunk)
    else:
        for inst in instances:
            results.extend(run_suites_on_instance(inst, specs))
    results.sort(key=lambda r: (_SUITE_ORDER[r.suite], r.instance))
    return results


# -- report emission ----------------------------------------------------------


def totals_of(results) -> dict:
    totals = {"pass": 0, "fail": 0, "vacuous": 0, "skipped": 0}
    for r in results:
        if r.status == PASS:
            totals["pass"] += 1
        elif r.status == FAIL:
            totals["fail"] += 1
        elif r.status == VACUOUS:
            totals["vacuous"] += 1
        else:
            totals["skipped"] += 1
    return totals


def emit_report(results, fmt: str = "text", seed: int | None = None,
                timings: bool = False) -> tuple[str, int]:
    """Render results; exit code 0 iff no fail rows.

    JSON reports are byte-deterministic for identical inputs; per-row
    timings are only included on request since they are wall-clock.
    """
    totals = totals_of(results)
    code = 1 if totals["fail"] else 0
    if fmt == "json":
        doc = {
            "version": 1,
            "results": [r.as_dict(timings=timings) for r in results],
            "totals": totals,
        }
        if seed is not None:
            doc["seed"] = seed
        return json.dumps(doc, sort_keys=True, indent=2) + "\n", code
    width_suite = max([len(r.suite) for r in results], default=5)
    width_inst = max([len(r.instance) for r in results], default=8)
    lines = []
    for r in results:
        line = f"{r.suite:<{width_suite}}  {r.instance:<{width_inst}}  {r.status:<21}"
        if timings:
            line += f"  {r.millis:9.2f}ms"
        if r.counterexample is not None:
            line += f"  {json.dumps(r.counterexample, sort_keys=True)}"
        lines.append(line.rstrip())
    lines.append(
        f"totals: pass={totals['pass']} fail={totals['fail']} "
        f"vacuous={totals['vacuous']} skipped={totals['skipped']}"
    )
    return "\n".join(lines) + "\n", code
