"""Finite graded commutative rings and their graded ideals.

A ring is a finite carrier 0..n-1 with explicit addition/multiplication
tables, plus a validated grading: a family of additive subgroups indexed by
a finite abelian group whose direct sum is the carrier and whose pairwise
products land in the right component.  Graded ideals are bitmasks over the
carrier together with a homogeneous generator witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .bitset import bits, indices, mask_of, subset_key
from .errors import (
    ImproperIdeal,
    InvalidGrading,
    NonHomogeneousGenerator,
    NotARing,
    RingMismatch,
    SizeExceeded,
    ZeroRing,
)
from .groups import FiniteAbelianGroup
from .kernels import backend as kern

DEFAULT_MAX_ORDER = 256
DEFAULT_MAX_LATTICE = 4096


def _check_table(rows, n, what):
    if len(rows) != n:
        raise NotARing(f"{what} table has {len(rows)} rows, expected {n}")
    for row in rows:
        if len(row) != n:
            raise NotARing(f"{what} table row of length {len(row)}, expected {n}")
        for v in row:
            if not 0 <= v < n:
                raise NotARing(f"{what} table entry {v} out of range")


def _check_ring_axioms(add, mul, zero, one):
    """Exhaustive commutative-unital-ring check, vectorized per carrier row."""
    n = len(add)
    A = np.array(add, dtype=np.int16)
    M = np.array(mul, dtype=np.int16)
    idx = np.arange(n, dtype=np.int16)
    if not (A == A.T).all():
        raise NotARing("addition is not commutative")
    if not (M == M.T).all():
        raise NotARing("multiplication is not commutative")
    if not (A[zero] == idx).all():
        raise NotARing("zero is not an additive identity")
    if not (M[one] == idx).all():
        raise NotARing("one is not a multiplicative identity")
    if not (A == zero).any(axis=1).all():
        raise NotARing("some element has no additive inverse")
    for x in range(n):
        if not (A[A[x]] == A[x][A]).all():
            raise NotARing("addition is not associative")
        if not (M[M[x]] == M[x][M]).all():
            raise NotARing("multiplication is not associative")
        if not (M[x][A] == A[M[x][:, None], M[x][None, :]]).all():
            raise NotARing("multiplication does not distribute over addition")


class GradedRing:
    """Finite commutative ring with unity and a validated grading.

    Immutable after construction; derived structures (ideal lattice,
    spectrum, radicals) are memoized in ``_cache`` and safe to share
    across readers.
    """

    def __init__(self, group: FiniteAbelianGroup, add, mul, zero: int, one: int,
                 components, labels=None, name: str = "R"):
        n = len(add)
        _check_table(add, n, "addition")
        _check_table(mul, n, "multiplication")
        if not 0 <= zero < n or not 0 <= one < n:
            raise NotARing("zero/one index out of range")
        if zero == one:
            raise ZeroRing("the zero ring (1 = 0) is excluded")
        _check_ring_axioms(add, mul, zero, one)

        self.n = n
        self.group = group
        self.add = tuple(tuple(row) for row in add)
        self.mul = tuple(tuple(row) for row in mul)
        self.zero = zero
        self.one = one
        self.name = name
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        if len(self.labels) != n:
            raise NotARing("label list does not match carrier size")

        self.comp_masks = self._normalize_components(components)
        self.decomp = self._validate_grading()
        self.hom_mask = 0
        for m in self.comp_masks:
            self.hom_mask |= m
        # degree (group index) of each homogeneous element; zero gets the identity
        self.degree = {}
        for gi, m in enumerate(self.comp_masks):
            for x in bits(m):
                if x != zero and x not in self.degree:
                    self.degree[x] = gi
        self.degree[zero] = 0

        self.tables = kern.prepare_ring(self.add, self.mul)
        self._cache: dict = {}

    def _normalize_components(self, components):
        zero_mask = 1 << self.zero
        masks = [zero_mask] * len(self.group)
        seen = set()
        for g, members in dict(components).items():
            g = tuple(g)
            if g not in self.group.index:
                raise InvalidGrading(f"degree {g} is not a group element")
            gi = self.group.index[g]
            if gi in seen:
                raise InvalidGrading(f"degree {g} listed twice")
            seen.add(gi)
            m = 0
            for x in members:
                if not 0 <= x < self.n:
                    raise InvalidGrading(f"component of degree {g} has element {x} out of range")
                m |= 1 << x
            masks[gi] = m
        return tuple(masks)

    def _validate_grading(self):
        n, add, mul = self.n, self.add, self.mul
        zero_mask = 1 << self.zero
        # each component is an additive subgroup (finite: 0 in it, closed under +)
        for gi, m in enumerate(self.comp_masks):
            if not m & zero_mask:
                raise InvalidGrading(f"component {gi} does not contain 0")
            members = indices(m)
            for a in members:
                row = add[a]
                for b in members:
                    if not (m >> row[b]) & 1:
                        raise InvalidGrading(f"component {gi} is not closed under addition")
        # direct sum: the summation map over the components is a bijection
        nontrivial = [(gi, indices(m)) for gi, m in enumerate(self.comp_masks) if m != zero_mask]
        total = 1
        for _, members in nontrivial:
            total *= len(members)
        if total != n:
            raise InvalidGrading(
                f"component sizes multiply to {total}, carrier has {n} elements"
            )
        decomp = [None] * n
        for combo in itertools.product(*(members for _, members in nontrivial)):
            s = self.zero
            for x in combo:
                s = add[s][x]
            if decomp[s] is not None:
                raise InvalidGrading("carrier is not the direct sum of the components")
            row = [self.zero] * len(self.group)
            for (gi, _), x in zip(nontrivial, combo):
                row[gi] = x
            decomp[s] = tuple(row)
        if any(d is None for d in decomp):
            raise InvalidGrading("carrier is not the direct sum of the components")
        # degree rule: R_g * R_h inside R_{g+h}
        gadd = self.group.add_table
        for gi, m1 in enumerate(self.comp_masks):
            for gj, m2 in enumerate(self.comp_masks):
                target = self.comp_masks[gadd[gi][gj]]
                for a in bits(m1):
                    row = mul[a]
                    for b in bits(m2):
                        if not (target >> row[b]) & 1:
                            raise InvalidGrading(
                                f"product of degrees {self.group.elements[gi]} and "
                                f"{self.group.elements[gj]} leaves its component"
                            )
        if not (self.comp_masks[0] >> self.one) & 1:
            raise InvalidGrading("1 is not in the identity component")
        return tuple(decomp)

    # -- simple queries ----------------------------------------------------

    def is_homogeneous(self, x: int) -> bool:
        return bool((self.hom_mask >> x) & 1)

    def hom_elements(self) -> list[int]:
        return indices(self.hom_mask)

    def component(self, g) -> int:
        """Mask of the component of degree ``g`` (a group element tuple)."""
        return self.comp_masks[self.group.index[tuple(g)]]

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def label_of(self, x: int) -> str:
        return self.labels[x]

    def principal_mask(self, a: int) -> int:
        """Mask of the principal ideal R*a (valid for any a: r*a+s*a=(r+s)*a)."""
        cache = self._cache.setdefault("principal", {})
        m = cache.get(a)
        if m is None:
            m = cache[a] = kern.ring_orbit(self.tables, a)
        return m

    def power_mask(self, a: int) -> int:
        """Mask of {a^k : k >= 1}; the power sequence cycles within |R| steps."""
        cache = self._cache.setdefault("powers", {})
        m = cache.get(a)
        if m is None:
            m = 0
            x = a
            while not (m >> x) & 1:
                m |= 1 << x
                x = self.mul[x][a]
            cache[a] = m
        return m

    def __repr__(self):
        return f"GradedRing({self.name!r}, order={self.n}, group={self.group.factors})"


@dataclass(frozen=True, eq=False)
class GradedIdeal:
    """Graded ideal as a bitmask plus a homogeneous generator witness."""

    ring: GradedRing
    mask: int
    gens: tuple[int, ...] = ()

    @property
    def indices(self) -> list[int]:
        return indices(self.mask)

    @property
    def is_proper(self) -> bool:
        return self.mask != self.ring.full_mask()

    @property
    def is_zero(self) -> bool:
        return self.mask == (1 << self.ring.zero)

    def __contains__(self, x: int) -> bool:
        return bool((self.mask >> x) & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def issubset(self, other: "GradedIdeal") -> bool:
        return self.mask & ~other.mask == 0

    def __eq__(self, other):
        return (
            isinstance(other, GradedIdeal)
            and self.ring is other.ring
            and self.mask == other.mask
        )

    def __hash__(self):
        return hash((id(self.ring), self.mask))

    def label(self) -> str:
        if not self.gens:
            return "(0)"
        return "(" + ",".join(self.ring.labels[g] for g in self.gens) + ")"

    def __repr__(self):
        return f"GradedIdeal({self.ring.name}, {sorted(self.indices)})"


def make_ideal(ring: GradedRing, mask: int, gens=None) -> GradedIdeal:
    """Wrap a known graded-ideal mask, deriving a generator witness if needed."""
    if gens is None:
        gens = hom_generating_set(ring, mask)
    return GradedIdeal(ring, mask, tuple(gens))


def hom_generating_set(ring: GradedRing, mask: int) -> tuple[int, ...]:
    """Greedy homogeneous generating set of a graded-ideal mask."""
    span = 1 << ring.zero
    gens = []
    for a in bits(mask & ring.hom_mask):
        if a == ring.zero:
            continue
        if not (span >> a) & 1:
            gens.append(a)
            span = kern.set_sums(ring.tables, span, ring.principal_mask(a))
            if span == mask:
                break
    if span != mask:
        raise InvalidGrading("subset is not generated by its homogeneous elements")
    return tuple(gens)


def homogeneous_components(ring: GradedRing, x: int) -> dict[tuple, int]:
    """The unique decomposition of x as a sum of homogeneous pieces, one per degree."""
    row = ring.decomp[x]
    return {g: row[gi] for gi, g in enumerate(ring.group.elements)}


def ideal_generated(ring: GradedRing, gens) -> GradedIdeal:
    """Smallest (graded) ideal containing the given homogeneous elements."""
    gens = tuple(sorted(set(gens)))
    mask = 1 << ring.zero
    for a in gens:
        if not ring.is_homogeneous(a):
            raise NonHomogeneousGenerator(
                f"generator {ring.labels[a]} (index {a}) is not homogeneous"
            )
        mask = kern.set_sums(ring.tables, mask, ring.principal_mask(a))
    return GradedIdeal(ring, mask, gens)


def is_ideal_mask(ring: GradedRing, mask: int) -> bool:
    """Ideal check only (additive closure + absorbs multiplication)."""
    if not (mask >> ring.zero) & 1:
        return False
    members = indices(mask)
    for a in members:
        row = ring.add[a]
        for b in members:
            if not (mask >> row[b]) & 1:
                return False
    for r in range(ring.n):
        row = ring.mul[r]
        for a in members:
            if not (mask >> row[a]) & 1:
                return False
    return True


def is_graded_ideal(ring: GradedRing, subset) -> bool:
    """True iff the subset is an ideal containing every member's components."""
    mask = subset if isinstance(subset, int) else mask_of(subset)
    if not is_ideal_mask(ring, mask):
        return False
    for x in bits(mask):
        for c in ring.decomp[x]:
            if not (mask >> c) & 1:
                return False
    return True


def enumerate_graded_ideals(ring: GradedRing, max_lattice: int = DEFAULT_MAX_LATTICE):
    """Complete graded-ideal lattice, canonically ordered.

    Computed as the ideal-sum closure of the homogeneous principal ideals
    together with {0}; every graded ideal is the sum of the principal
    ideals of its homogeneous members, so nothing is missed.
    """
    cached = ring._cache.get("lattice")
    if cached is not None:
        return cached
    zero_mask = 1 << ring.zero
    principals = sorted(
        {ring.principal_mask(a) for a in bits(ring.hom_mask)}, key=subset_key
    )
    seen = {zero_mask}
    frontier = [zero_mask]
    while frontier:
        cur = frontier.pop()
        for p in principals:
            if p & ~cur == 0:
                continue
            s = kern.set_sums(ring.tables, cur, p)
            if s not in seen:
                seen.add(s)
                if len(seen) > max_lattice:
                    raise SizeExceeded(
                        f"graded-ideal lattice of {ring.name} exceeds {max_lattice}"
                    )
                frontier.append(s)
    lattice = tuple(make_ideal(ring, m) for m in sorted(seen, key=subset_key))
    ring._cache["lattice"] = lattice
    return lattice


def _require_same_ring(I: GradedIdeal, J: GradedIdeal):
    if I.ring is not J.ring:
        raise RingMismatch("ideals belong to different rings")


def ideal_combine(mode: str, I: GradedIdeal, J: GradedIdeal) -> GradedIdeal:
    """Ideal sum, product, or intersection; all three stay graded."""
    _require_same_ring(I, J)
    ring = I.ring
    if mode == "sum":
        mask = kern.set_sums(ring.tables, I.mask, J.mask)
    elif mode == "intersection":
        mask = I.mask & J.mask
    elif mode == "product":
        pairs = kern.set_products(ring.tables, I.mask, J.mask)
        mask = kern.additive_closure(ring.tables, pairs)
    else:
        raise ValueError(f"unknown combine mode {mode!r}")
    return make_ideal(ring, mask)


def hom_power_in(ring: GradedRing, r: int, I: GradedIdeal) -> bool:
    """For homogeneous r: does some positive power of r lie in I?"""
    if not ring.is_homogeneous(r):
        raise NonHomogeneousGenerator(f"element {r} is not homogeneous")
    return ring.power_mask(r) & I.mask != 0


def graded_radical(ring: GradedRing, I: GradedIdeal) -> GradedIdeal:
    """Elements all of whose homogeneous components have a power in I."""
    cache = ring._cache.setdefault("radical", {})
    got = cache.get(I.mask)
    if got is not None:
        return got
    mask = 0
    for x in range(ring.n):
        if all(ring.power_mask(c) & I.mask for c in ring.decomp[x]):
            mask |= 1 << x
    result = make_ideal(ring, mask)
    cache[I.mask] = result
    return result


def is_graded_prime(ring: GradedRing, I: GradedIdeal) -> bool:
    """Proper, and ab in I forces a or b in I for homogeneous a, b."""
    if not I.is_proper:
        return False
    outside = ring.hom_mask & ~I.mask
    for a in bits(outside):
        row = ring.mul[a]
        for b in bits(outside):
            if (I.mask >> row[b]) & 1:
                return False
    return True


def is_graded_prime_ideal_criterion(ring: GradedRing, I: GradedIdeal) -> bool:
    """Ideal-level primality: AB in I forces A in I or B in I over graded ideals."""
    if not I.is_proper:
        return False
    lattice = enumerate_graded_ideals(ring)
    out = [J for J in lattice if J.mask & ~I.mask]
    for A in out:
        for B in out:
            P = ideal_combine("product", A, B)
            if P.mask & ~I.mask == 0:
                return False
    return True


def max_spectrum(ring: GradedRing) -> tuple[GradedIdeal, ...]:
    """Graded ideals maximal among the proper ones."""
    cached = ring._cache.get("max_spectrum")
    if cached is not None:
        return cached
    proper = [I for I in enumerate_graded_ideals(ring) if I.is_proper]
    maximal = tuple(
        I for I in proper
        if not any(I.mask != J.mask and I.mask & ~J.mask == 0 for J in proper)
    )
    ring._cache["max_spectrum"] = maximal
    return maximal


def graded_jacobson_radical(ring: GradedRing) -> GradedIdeal:
    mask = ring.full_mask()
    for I in max_spectrum(ring):
        mask &= I.mask
    return make_ideal(ring, mask)


def _subring_ideal_lattice(ring: GradedRing, sub_mask: int) -> list[int]:
    """All ideals of a unital subring given by ``sub_mask`` (ungraded)."""
    zero_mask = 1 << ring.zero
    members = indices(sub_mask)
    principals = set()
    for a in members:
        m = 0
        for r in members:
            m |= 1 << ring.mul[r][a]
        principals.add(m)
    seen = {zero_mask}
    frontier = [zero_mask]
    while frontier:
        cur = frontier.pop()
        for p in principals:
            if p & ~cur == 0:
                continue
            s = kern.set_sums(ring.tables, cur, p)
            if s not in seen:
                seen.add(s)
                frontier.append(s)
    return sorted(seen, key=subset_key)


def jacobson_radical_e(ring: GradedRing) -> int:
    """Mask of the Jacobson radical of the identity-degree subring."""
    sub = ring.comp_masks[0]
    ideals = _subring_ideal_lattice(ring, sub)
    proper = [m for m in ideals if m != sub]
    maximal = [
        m for m in proper
        if not any(m != o and m & ~o == 0 for o in proper)
    ]
    out = sub
    for m in maximal:
        out &= m
    return out


@dataclass(frozen=True, eq=False)
class Quotient:
    """A quotient ring together with the projection map from its base."""

    ring: GradedRing
    base: GradedRing
    ideal: GradedIdeal
    proj: tuple[int, ...]

    def push_mask(self, mask: int) -> int:
        out = 0
        for x in bits(mask):
            out |= 1 << self.proj[x]
        return out

    def lift_mask(self, qmask: int) -> int:
        out = 0
        for x in range(self.base.n):
            if (qmask >> self.proj[x]) & 1:
                out |= 1 << x
        return out


def quotient_ring(ring: GradedRing, I: GradedIdeal) -> Quotient:
    """R/I with components the images of the base components."""
    if I.ring is not ring:
        raise RingMismatch("ideal belongs to a different ring")
    if not I.is_proper:
        raise ImproperIdeal("cannot quotient by the whole ring")
    cache = ring._cache.setdefault("quotients", {})
    got = cache.get(I.mask)
    if got is not None:
        return got
    rep_of = [-1] * ring.n
    for x in range(ring.n):
        if rep_of[x] < 0:
            coset = kern.set_sums(ring.tables, 1 << x, I.mask)
            rep = next(bits(coset))
            for y in bits(coset):
                rep_of[y] = rep
    reps = sorted(set(rep_of))
    new_index = {rep: i for i, rep in enumerate(reps)}
    proj = tuple(new_index[rep_of[x]] for x in range(ring.n))
    add_q = [[proj[ring.add[a][b]] for b in reps] for a in reps]
    mul_q = [[proj[ring.mul[a][b]] for b in reps] for a in reps]
    components = {
        g: sorted({proj[x] for x in bits(ring.comp_masks[gi])})
        for gi, g in enumerate(ring.group.elements)
    }
    labels = tuple(ring.labels[rep] for rep in reps)
    q = GradedRing(
        ring.group, add_q, mul_q, proj[ring.zero], proj[ring.one], components,
        labels=labels, name=f"{ring.name}/{I.label()}",
    )
    result = Quotient(ring=q, base=ring, ideal=I, proj=proj)
    cache[I.mask] = result
    return result


def is_graded_field(ring: GradedRing) -> bool:
    """Only graded ideals are {0} and the ring (the ring need not be a field)."""
    return len(enumerate_graded_ideals(ring)) == 2
