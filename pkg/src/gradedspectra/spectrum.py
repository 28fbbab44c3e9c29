"""The graded prime spectrum and its Zariski topology.

Varieties and closures work positionally over the canonical prime list;
helper results are cached on the ring.
"""

from __future__ import annotations

import itertools

from .bitset import bits
from .errors import RingMismatch
from .kernels import backend as kern
from .rings import (
    GradedIdeal,
    GradedRing,
    enumerate_graded_ideals,
    graded_radical,
    ideal_generated,
    is_graded_prime,
    make_ideal,
)
from .topology import (
    SpectrumTopology,
    basis_covers,
    canonical_set_order,
    is_closed_family,
    is_irreducible_set,
    irreducible_components_within,
    is_noetherian_space,
)

__all__ = [
    "graded_prime_spectrum",
    "variety",
    "intersection_ideal",
    "spectrum_closure",
    "is_irreducible",
    "minimal_prime_divisors",
    "irreducible_components_of_variety",
    "radical_decomposition",
    "radical_fg_witness",
    "has_property_radical_fg",
    "build_topology",
    "basic_open_sets",
    "is_noetherian_space",
]


def graded_prime_spectrum(ring: GradedRing) -> tuple[GradedIdeal, ...]:
    """All graded prime ideals, canonically ordered."""
    cached = ring._cache.get("spectrum")
    if cached is None:
        cached = tuple(
            I for I in enumerate_graded_ideals(ring) if is_graded_prime(ring, I)
        )
        ring._cache["spectrum"] = cached
    return cached


def variety(ring: GradedRing, I: GradedIdeal) -> frozenset[int]:
    """Positions of the graded primes containing I."""
    if I.ring is not ring:
        raise RingMismatch("ideal belongs to a different ring")
    cache = ring._cache.setdefault("variety", {})
    got = cache.get(I.mask)
    if got is None:
        got = frozenset(
            i for i, p in enumerate(graded_prime_spectrum(ring))
            if I.mask & ~p.mask == 0
        )
        cache[I.mask] = got
    return got


def intersection_ideal(ring: GradedRing, points) -> GradedIdeal:
    """Intersection of the primes at the given positions; the whole ring if empty."""
    mask = ring.full_mask()
    spectrum = graded_prime_spectrum(ring)
    for i in points:
        mask &= spectrum[i].mask
    return make_ideal(ring, mask)


def spectrum_closure(ring: GradedRing, points) -> frozenset[int]:
    """Topological closure of a point set: the variety of its intersection."""
    return variety(ring, intersection_ideal(ring, points))


def build_topology(ring: GradedRing) -> SpectrumTopology:
    """Closed sets = varieties of graded ideals; basic opens from hom elements."""
    cached = ring._cache.get("topology")
    if cached is not None:
        return cached
    spectrum = graded_prime_spectrum(ring)
    lattice = enumerate_graded_ideals(ring)
    by_set: dict[frozenset, GradedIdeal] = {}
    for I in lattice:
        v = variety(ring, I)
        # canonical defining ideal: the largest with this variety (its xi)
        by_set[v] = intersection_ideal(ring, v)
    closed = canonical_set_order(by_set)
    tags = tuple(by_set[c] for c in closed)
    full = frozenset(range(len(spectrum)))
    basis = []
    for r in bits(ring.hom_mask):
        v = variety(ring, ideal_generated(ring, [r]))
        basis.append((r, full - v))
    top = SpectrumTopology(
        points=spectrum,
        closed_sets=tuple(closed),
        closed_tags=tags,
        basis=tuple(basis),
    )
    if not is_closed_family(top):
        raise AssertionError("variety family is not a topology")
    for c in closed:
        if not basis_covers(top, full - c):
            raise AssertionError("basic open sets do not form a base")
    ring._cache["topology"] = top
    return top


def basic_open_sets(ring: GradedRing) -> tuple[tuple[int, frozenset], ...]:
    return build_topology(ring).basis


def is_irreducible(ring: GradedRing, points) -> bool:
    """No pair of proper relatively-closed subsets covers the (nonempty) set."""
    return is_irreducible_set(build_topology(ring), points)


def minimal_prime_divisors(ring: GradedRing, I: GradedIdeal) -> tuple[GradedIdeal, ...]:
    """Graded primes minimal over I, canonically ordered."""
    spectrum = graded_prime_spectrum(ring)
    over = [spectrum[i] for i in sorted(variety(ring, I))]
    return tuple(
        p for p in over
        if not any(q.mask != p.mask and q.mask & ~p.mask == 0 for q in over)
    )


def irreducible_components_of_variety(ring: GradedRing, I: GradedIdeal):
    """Components of the subspace V(I): the varieties of its minimal divisors.

    Cross-checked against a direct maximal-irreducible search in the
    relative topology.
    """
    top = build_topology(ring)
    sub = variety(ring, I)
    from_divisors = sorted(
        {variety(ring, p) for p in minimal_prime_divisors(ring, I)},
        key=lambda s: (-len(s), tuple(sorted(s))),
    )
    direct = irreducible_components_within(top, sub)
    if from_divisors != direct:
        raise AssertionError("component characterization mismatch on V(I)")
    return tuple(from_divisors)


def radical_decomposition(ring: GradedRing, I: GradedIdeal) -> tuple[GradedIdeal, ...]:
    """Minimal graded prime divisors whose intersection is the graded radical.

    The whole ring decomposes as the intersection of the empty family.
    """
    if not I.is_proper:
        return ()
    divisors = minimal_prime_divisors(ring, I)
    mask = ring.full_mask()
    for p in divisors:
        mask &= p.mask
    if mask != graded_radical(ring, I).mask:
        raise AssertionError("divisor intersection does not match the graded radical")
    return divisors


def _distinct_principal_pool(ring: GradedRing, from_mask: int) -> list[int]:
    """Smallest representative per distinct principal ideal among the given elements."""
    seen = {}
    for a in bits(from_mask):
        if a == ring.zero:
            continue
        key = ring.principal_mask(a)
        if key not in seen:
            seen[key] = a
    return sorted(seen.values())


def radical_fg_witness(ring: GradedRing, I: GradedIdeal) -> tuple[int, ...]:
    """Minimal-cardinality homogeneous set in I whose ideal shares I's radical.

    On a finite carrier a witness always exists (all of h(I) works), so the
    search over cardinalities 0, 1, 2, ... terminates.
    """
    cache = ring._cache.setdefault("radical_fg", {})
    got = cache.get(I.mask)
    if got is not None:
        return got
    target = graded_radical(ring, I).mask
    pool = _distinct_principal_pool(ring, I.mask & ring.hom_mask)
    zero_mask = 1 << ring.zero
    for k in range(len(pool) + 1):
        for combo in itertools.combinations(pool, k):
            mask = zero_mask
            for a in combo:
                mask = kern.set_sums(ring.tables, mask, ring.principal_mask(a))
            if graded_radical(ring, make_ideal(ring, mask, combo)).mask == target:
                cache[I.mask] = combo
                return combo
    raise AssertionError("finite ideal has no finitely generated radical witness")


def has_property_radical_fg(ring: GradedRing, primes_only: bool = False) -> bool:
    """Every graded (prime) ideal admits a finitely generated radical witness."""
    candidates = graded_prime_spectrum(ring) if primes_only else enumerate_graded_ideals(ring)
    for I in candidates:
        witness = radical_fg_witness(ring, I)
        J = ideal_generated(ring, witness)
        if graded_radical(ring, J).mask != graded_radical(ring, I).mask:
            return False
    return True
