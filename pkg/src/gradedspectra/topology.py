"""Finite Zariski-style topologies shared by the prime and second spectra.

Points are referenced positionally; a topology holds the deduplicated
closed-set family (each tagged with its canonical defining object) and the
basic open sets with their defining homogeneous elements.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, eq=False)
class SpectrumTopology:
    points: tuple                # point payloads (ideals or submodules)
    closed_sets: tuple[frozenset, ...]
    closed_tags: tuple           # defining ideal/submodule per closed set
    basis: tuple[tuple[int, frozenset], ...]   # (hom element, basic open set)

    @property
    def npoints(self) -> int:
        return len(self.points)

    @property
    def full(self) -> frozenset:
        return frozenset(range(self.npoints))


def canonical_set_order(sets):
    return sorted(sets, key=lambda s: (len(s), tuple(sorted(s))))


def is_closed_family(top: SpectrumTopology) -> bool:
    """Axioms for closed sets: empty, full, pairwise unions and intersections."""
    family = set(top.closed_sets)
    if frozenset() not in family or top.full not in family:
        return False
    fam = list(family)
    for i, a in enumerate(fam):
        for b in fam[i:]:
            if a | b not in family or a & b not in family:
                return False
    return True


def closure_in(top: SpectrumTopology, subset) -> frozenset:
    """Smallest closed superset of the given point set."""
    subset = frozenset(subset)
    best = None
    for c in top.closed_sets:
        if subset <= c and (best is None or len(c) < len(best)):
            best = c
    if best is None:
        raise ValueError("closed family does not cover the given subset")
    return best


def relative_closed_sets(top: SpectrumTopology, subset) -> list[frozenset]:
    subset = frozenset(subset)
    return canonical_set_order({c & subset for c in top.closed_sets})


def is_irreducible_set(top: SpectrumTopology, subset) -> bool:
    """Nonempty, and no pair of proper relatively-closed subsets covers it."""
    subset = frozenset(subset)
    if not subset:
        return False
    rel = [c for c in relative_closed_sets(top, subset) if c != subset]
    for i, a in enumerate(rel):
        for b in rel[i:]:
            if a | b == subset:
                return False
    return True


def irreducible_components_within(top: SpectrumTopology, subset) -> list[frozenset]:
    """Maximal irreducible subsets of a subspace, largest first.

    In a finite space every maximal irreducible subset is relatively
    closed, so searching the relative closed sets is exhaustive.
    """
    subset = frozenset(subset)
    irr = [c for c in relative_closed_sets(top, subset) if is_irreducible_set(top, c)]
    maximal = [c for c in irr if not any(c < d for d in irr)]
    return sorted(maximal, key=lambda s: (-len(s), tuple(sorted(s))))


def longest_descending_chain(top: SpectrumTopology) -> int:
    """Length of the longest strictly descending chain of closed sets."""
    ordered = canonical_set_order(top.closed_sets)
    depth = {}
    for i, c in enumerate(ordered):
        best = 0
        for d in ordered[:i]:
            if d < c and depth[d] > best:
                best = depth[d]
        depth[c] = best + 1
    return max(depth.values(), default=0)


def open_sets(top: SpectrumTopology) -> list[frozenset]:
    full = top.full
    return canonical_set_order({full - c for c in top.closed_sets})


def basis_covers(top: SpectrumTopology, open_set) -> bool:
    """Every open set must be a union of basic opens (base property)."""
    open_set = frozenset(open_set)
    union = frozenset()
    for _, b in top.basis:
        if b <= open_set:
            union |= b
    return union == open_set


def has_finite_subcover(top: SpectrumTopology, open_set) -> bool:
    """Greedy finite subcover of an open set from its basic-open cover."""
    open_set = frozenset(open_set)
    remaining = set(open_set)
    cover = [b for _, b in top.basis if b <= open_set]
    while remaining:
        best = max(cover, key=lambda b: len(b & remaining), default=None)
        if best is None or not best & remaining:
            return False
        remaining -= best
    return True


def every_open_compact(top: SpectrumTopology) -> bool:
    return all(has_finite_subcover(top, u) for u in open_sets(top))


def descending_chains_terminate(top: SpectrumTopology) -> bool:
    """Structural chain condition over the explicit (finite) closed-set lattice."""
    return longest_descending_chain(top) <= len(top.closed_sets)


def is_noetherian_space(top: SpectrumTopology) -> bool:
    """Chain condition on closed sets, cross-checked against open compactness."""
    dcc = descending_chains_terminate(top)
    compact = every_open_compact(top)
    if dcc != compact:
        raise AssertionError(
            "chain condition and open-compactness disagree on a finite space"
        )
    return dcc
