"""Finite graded modules: submodule lattices, annihilators, second spectrum,
second/Zariski socles, the natural map, and the module-side predicates."""

from __future__ import annotations

import itertools

import numpy as np

from .bitset import bits, indices, mask_of, subset_key
from .errors import (
    InvalidGrading,
    NonHomogeneousGenerator,
    NotAModule,
    PreconditionFailed,
    RingMismatch,
    SizeExceeded,
    ZeroModule,
)
from .kernels import backend as kern
from .rings import (
    DEFAULT_MAX_LATTICE,
    DEFAULT_MAX_ORDER,
    GradedIdeal,
    GradedRing,
    graded_radical,
    ideal_generated,
    is_graded_prime,
    make_ideal,
)
from .spectrum import graded_prime_spectrum, minimal_prime_divisors
from .topology import (
    SpectrumTopology,
    basis_covers,
    canonical_set_order,
    is_closed_family,
)

from dataclasses import dataclass


def _check_module_axioms(ring: GradedRing, madd, act):
    m = len(madd)
    MA = np.array(madd, dtype=np.int16)
    if MA.shape != (m, m) or (MA < 0).any() or (MA >= m).any():
        raise NotAModule("malformed module addition table")
    ACT = np.array(act, dtype=np.int16)
    if ACT.shape != (ring.n, m) or (ACT < 0).any() or (ACT >= m).any():
        raise NotAModule("malformed action table")
    idx = np.arange(m, dtype=np.int16)
    if not (MA == MA.T).all():
        raise NotAModule("module addition is not commutative")
    zeros = np.where((MA == idx).all(axis=1))[0]
    if len(zeros) == 0:
        raise NotAModule("module addition has no identity")
    zero = int(zeros[0])
    if not (MA == zero).any(axis=1).all():
        raise NotAModule("some module element has no additive inverse")
    for x in range(m):
        if not (MA[MA[x]] == MA[x][MA]).all():
            raise NotAModule("module addition is not associative")
    if not (ACT[ring.one] == idx).all():
        raise NotAModule("1 does not act as the identity")
    A = np.array(ring.add, dtype=np.int16)
    M = np.array(ring.mul, dtype=np.int16)
    for r in range(ring.n):
        if not (ACT[r][MA] == MA[ACT[r][:, None], ACT[r][None, :]]).all():
            raise NotAModule("action does not distribute over module addition")
        if not (ACT[A[r]] == MA[ACT[r][None, :], ACT]).all():
            raise NotAModule("action does not distribute over ring addition")
        if not (ACT[M[r]] == ACT[r][ACT]).all():
            raise NotAModule("action is not associative with ring multiplication")
    return zero


class GradedModule:
    """Finite module over a graded ring with a validated compatible grading."""

    def __init__(self, ring: GradedRing, madd, act, components, labels=None, name: str = "M"):
        self.ring = ring
        self.m = len(madd)
        self.zero = _check_module_axioms(ring, madd, act)
        self.madd = tuple(tuple(row) for row in madd)
        self.act = tuple(tuple(row) for row in act)
        self.name = name
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(self.m))
        if len(self.labels) != self.m:
            raise NotAModule("label list does not match carrier size")

        self.comp_masks = self._normalize_components(components)
        self.decomp = self._validate_grading()
        self.hom_mask = 0
        for mask in self.comp_masks:
            self.hom_mask |= mask
        self.degree = {}
        for gi, mask in enumerate(self.comp_masks):
            for x in bits(mask):
                if x != self.zero and x not in self.degree:
                    self.degree[x] = gi
        self.degree[self.zero] = 0

        self.tables = kern.prepare_module(self.madd, self.act)
        self._cache: dict = {}

    def _normalize_components(self, components):
        zero_mask = 1 << self.zero
        masks = [zero_mask] * len(self.ring.group)
        seen = set()
        for g, members in dict(components).items():
            g = tuple(g)
            if g not in self.ring.group.index:
                raise InvalidGrading(f"degree {g} is not a group element")
            gi = self.ring.group.index[g]
            if gi in seen:
                raise InvalidGrading(f"degree {g} listed twice")
            seen.add(gi)
            mask = 0
            for x in members:
                if not 0 <= x < self.m:
                    raise InvalidGrading(f"component of degree {g} has element {x} out of range")
                mask |= 1 << x
            masks[gi] = mask
        return tuple(masks)

    def _validate_grading(self):
        zero_mask = 1 << self.zero
        madd = self.madd
        for gi, mask in enumerate(self.comp_masks):
            if not mask & zero_mask:
                raise InvalidGrading(f"module component {gi} does not contain 0")
            members = indices(mask)
            for a in members:
                row = madd[a]
                for b in members:
                    if not (mask >> row[b]) & 1:
                        raise InvalidGrading(f"module component {gi} is not closed under addition")
        nontrivial = [(gi, indices(mask)) for gi, mask in enumerate(self.comp_masks)
                      if mask != zero_mask]
        total = 1
        for _, members in nontrivial:
            total *= len(members)
        if total != self.m:
            raise InvalidGrading(
                f"module component sizes multiply to {total}, carrier has {self.m}"
            )
        decomp = [None] * self.m
        for combo in itertools.product(*(members for _, members in nontrivial)):
            s = self.zero
            for x in combo:
                s = madd[s][x]
            if decomp[s] is not None:
                raise InvalidGrading("module carrier is not the direct sum of its components")
            row = [self.zero] * len(self.ring.group)
            for (gi, _), x in zip(nontrivial, combo):
                row[gi] = x
            decomp[s] = tuple(row)
        if any(d is None for d in decomp):
            raise InvalidGrading("module carrier is not the direct sum of its components")
        gadd = self.ring.group.add_table
        for gi, rmask in enumerate(self.ring.comp_masks):
            for gj, mmask in enumerate(self.comp_masks):
                target = self.comp_masks[gadd[gi][gj]]
                for r in bits(rmask):
                    row = self.act[r]
                    for x in bits(mmask):
                        if not (target >> row[x]) & 1:
                            raise InvalidGrading(
                                f"action of degree {self.ring.group.elements[gi]} on degree "
                                f"{self.ring.group.elements[gj]} leaves its component"
                            )
        return tuple(decomp)

    # -- simple queries ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.m == 1

    def is_homogeneous(self, x: int) -> bool:
        return bool((self.hom_mask >> x) & 1)

    def hom_elements(self) -> list[int]:
        return indices(self.hom_mask)

    def full_mask(self) -> int:
        return (1 << self.m) - 1

    def orbit_mask(self, x: int) -> int:
        """Mask of R*x; already a submodule (r1*x + r2*x = (r1+r2)*x)."""
        cache = self._cache.setdefault("orbit", {})
        got = cache.get(x)
        if got is None:
            got = cache[x] = kern.module_orbit(self.tables, x)
        return got

    def __repr__(self):
        return (f"GradedModule({self.name!r}, order={self.m}, "
                f"over={self.ring.name!r})")


@dataclass(frozen=True, eq=False)
class GradedSubmodule:
    """Graded submodule as a bitmask plus a homogeneous generator witness."""

    module: GradedModule
    mask: int
    gens: tuple[int, ...] = ()

    @property
    def indices(self) -> list[int]:
        return indices(self.mask)

    @property
    def is_zero(self) -> bool:
        return self.mask == (1 << self.module.zero)

    def __contains__(self, x: int) -> bool:
        return bool((self.mask >> x) & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def issubset(self, other: "GradedSubmodule") -> bool:
        return self.mask & ~other.mask == 0

    def __eq__(self, other):
        return (
            isinstance(other, GradedSubmodule)
            and self.module is other.module
            and self.mask == other.mask
        )

    def __hash__(self):
        return hash((id(self.module), self.mask))

    def label(self) -> str:
        if not self.gens:
            return "<0>"
        return "<" + ",".join(self.module.labels[g] for g in self.gens) + ">"

    def __repr__(self):
        return f"GradedSubmodule({self.module.name}, {sorted(self.indices)})"


# -- construction ------------------------------------------------------------


def _parse_module_components(desc, m, group):
    if desc == "trivial" or desc is None:
        return {group.identity: range(m)}
    out = {}
    for entry in desc:
        out[tuple(entry["degree"])] = list(entry["elements"])
    return out


def _cyclic_product_module(ring, desc, name):
    factors = [int(f) for f in desc["factors"]]
    if any(f < 1 for f in factors):
        raise ValueError("module factors must be >= 1")
    combos = list(itertools.product(*(range(f) for f in factors)))
    index = {c: i for i, c in enumerate(combos)}
    madd = [
        [index[tuple((a + b) % f for a, b, f in zip(u, v, factors))] for v in combos]
        for u in combos
    ]
    action = desc.get("action", "scalar-mod")
    if action == "scalar-mod":
        act = [
            [index[tuple((r * x) % f for x, f in zip(v, factors))] for v in combos]
            for r in range(ring.n)
        ]
    else:
        act = [[int(v) for v in row] for row in action]
    comps = _parse_module_components(desc.get("components"), len(combos), ring.group)
    if len(factors) == 1:
        labels = [str(c[0]) for c in combos]
    else:
        labels = ["(" + ",".join(str(a) for a in c) + ")" for c in combos]
    return GradedModule(ring, madd, act, comps, labels=labels, name=name)


def build_module(ring: GradedRing, desc, max_order: int = DEFAULT_MAX_ORDER,
                 name: str = "M") -> GradedModule:
    """Build and validate a module from a description tree."""
    kind = desc.get("kind")
    if kind == "regular":
        comps = {
            g: indices(ring.comp_masks[gi])
            for gi, g in enumerate(ring.group.elements)
        }
        module = GradedModule(ring, ring.add, ring.mul, comps,
                              labels=ring.labels, name=name)
    elif kind == "cyclic_product":
        module = _cyclic_product_module(ring, desc, name)
    elif kind == "quotient":
        base = build_module(ring, desc["base"], max_order=max_order, name=f"{name}.base")
        gens = [int(g) for g in desc["generators"]]
        sub = submodule_generated(base, gens)
        module = quotient_module(base, sub).module
        module.name = name
    else:
        raise ValueError(f"unknown module constructor kind {kind!r}")
    if module.m > max_order:
        raise SizeExceeded(f"module order {module.m} exceeds bound {max_order}")
    return module


# -- submodules --------------------------------------------------------------


def hom_generating_set_module(module: GradedModule, mask: int) -> tuple[int, ...]:
    span = 1 << module.zero
    gens = []
    for x in bits(mask & module.hom_mask):
        if x == module.zero:
            continue
        if not (span >> x) & 1:
            gens.append(x)
            span = kern.module_set_sums(module.tables, span, module.orbit_mask(x))
            if span == mask:
                break
    if span != mask:
        raise InvalidGrading("subset is not generated by its homogeneous elements")
    return tuple(gens)


def make_submodule(module: GradedModule, mask: int, gens=None) -> GradedSubmodule:
    if gens is None:
        gens = hom_generating_set_module(module, mask)
    return GradedSubmodule(module, mask, tuple(gens))


def submodule_generated(module: GradedModule, gens) -> GradedSubmodule:
    """Smallest (graded) submodule containing the given homogeneous elements."""
    gens = tuple(sorted(set(gens)))
    mask = 1 << module.zero
    for x in gens:
        if not module.is_homogeneous(x):
            raise NonHomogeneousGenerator(
                f"generator {module.labels[x]} (index {x}) is not homogeneous"
            )
        mask = kern.module_set_sums(module.tables, mask, module.orbit_mask(x))
    return GradedSubmodule(module, mask, gens)


def graded_submodule_containing(module: GradedModule, elements) -> GradedSubmodule:
    """Smallest graded submodule containing arbitrary elements.

    A graded submodule containing x contains all homogeneous components of
    x, so it is generated by those components.
    """
    gens = set()
    for x in elements:
        if not 0 <= x < module.m:
            raise ValueError(f"element index {x} out of range")
        gens.update(module.decomp[x])
    gens.discard(module.zero)
    return submodule_generated(module, sorted(gens))


def is_graded_submodule(module: GradedModule, subset) -> bool:
    mask = subset if isinstance(subset, int) else mask_of(subset)
    if not (mask >> module.zero) & 1:
        return False
    members = indices(mask)
    for a in members:
        row = module.madd[a]
        for b in members:
            if not (mask >> row[b]) & 1:
                return False
    for r in range(module.ring.n):
        row = module.act[r]
        for a in members:
            if not (mask >> row[a]) & 1:
                return False
    for x in members:
        for c in module.decomp[x]:
            if not (mask >> c) & 1:
                return False
    return True


def enumerate_graded_submodules(module: GradedModule,
                                max_lattice: int = DEFAULT_MAX_LATTICE):
    """Complete graded-submodule lattice: sum closure of homogeneous cyclics."""
    cached = module._cache.get("lattice")
    if cached is not None:
        return cached
    zero_mask = 1 << module.zero
    cyclics = sorted(
        {module.orbit_mask(x) for x in bits(module.hom_mask)}, key=subset_key
    )
    seen = {zero_mask}
    frontier = [zero_mask]
    while frontier:
        cur = frontier.pop()
        for p in cyclics:
            if p & ~cur == 0:
                continue
            s = kern.module_set_sums(module.tables, cur, p)
            if s not in seen:
                seen.add(s)
                if len(seen) > max_lattice:
                    raise SizeExceeded(
                        f"graded-submodule lattice of {module.name} exceeds {max_lattice}"
                    )
                frontier.append(s)
    lattice = tuple(make_submodule(module, m) for m in sorted(seen, key=subset_key))
    module._cache["lattice"] = lattice
    return lattice


# -- annihilators ------------------------------------------------------------


def ann_in_ring(N: GradedSubmodule) -> GradedIdeal:
    """Ann_R(N) = {r : rN = 0}; always a graded ideal."""
    module = N.module
    cache = module._cache.setdefault("ann_ring", {})
    got = cache.get(N.mask)
    if got is None:
        mask = kern.ann_in_ring(module.tables, N.mask)
        got = cache[N.mask] = make_ideal(module.ring, mask)
    return got


def ann_in_module(module: GradedModule, I: GradedIdeal) -> GradedSubmodule:
    """Ann_M(I) = {x : Ix = 0}; always a graded submodule."""
    if I.ring is not module.ring:
        raise RingMismatch("ideal belongs to a different ring")
    cache = module._cache.setdefault("ann_module", {})
    got = cache.get(I.mask)
    if got is None:
        mask = kern.ann_in_module(module.tables, I.mask)
        got = cache[I.mask] = make_submodule(module, mask)
    return got


def module_annihilator(module: GradedModule) -> GradedIdeal:
    return ann_in_ring(make_submodule(module, module.full_mask()))


def ann_hom_mask(module: GradedModule) -> int:
    """Mask of the homogeneous scalars killing the whole module."""
    return module_annihilator(module).mask & module.ring.hom_mask


# -- second spectrum ---------------------------------------------------------


def is_second(S: GradedSubmodule) -> bool:
    """Nonzero, and every homogeneous scalar maps S onto S or onto 0."""
    module = S.module
    result = kern.is_second_set(module.tables, module.ring.hom_mask, S.mask)
    if result:
        # the annihilator of a second submodule is graded prime
        assert is_graded_prime(module.ring, ann_in_ring(S))
    return result


def second_spectrum(module: GradedModule) -> tuple[GradedSubmodule, ...]:
    """All graded second submodules, canonically ordered (empty: secondless)."""
    cached = module._cache.get("second_spectrum")
    if cached is None:
        cached = tuple(
            S for S in enumerate_graded_submodules(module) if is_second(S)
        )
        module._cache["second_spectrum"] = cached
    return cached


def is_secondless(module: GradedModule) -> bool:
    return not second_spectrum(module)


def annihilator_variety(module: GradedModule, N: GradedSubmodule) -> frozenset[int]:
    """Positions of the second submodules S with Ann(N) inside Ann(S)."""
    cache = module._cache.setdefault("ann_variety", {})
    got = cache.get(N.mask)
    if got is None:
        ann_n = ann_in_ring(N).mask
        got = frozenset(
            i for i, S in enumerate(second_spectrum(module))
            if ann_n & ~ann_in_ring(S).mask == 0
        )
        cache[N.mask] = got
    return got


def containment_variety(module: GradedModule, N: GradedSubmodule) -> frozenset[int]:
    """Positions of the second submodules contained in N."""
    return frozenset(
        i for i, S in enumerate(second_spectrum(module))
        if S.mask & ~N.mask == 0
    )


def points_sum(module: GradedModule, positions) -> GradedSubmodule:
    """Sum of the second submodules at the given positions; 0 if empty."""
    spectrum = second_spectrum(module)
    mask = 1 << module.zero
    for i in positions:
        mask = kern.module_set_sums(module.tables, mask, spectrum[i].mask)
    return make_submodule(module, mask)


def second_socle(module: GradedModule, N: GradedSubmodule) -> GradedSubmodule:
    """Sum of the second submodules contained in N."""
    mask = 1 << module.zero
    for S in second_spectrum(module):
        if S.mask & ~N.mask == 0:
            mask = kern.module_set_sums(module.tables, mask, S.mask)
    return make_submodule(module, mask)


def zariski_socle(module: GradedModule, N: GradedSubmodule) -> GradedSubmodule:
    """Sum of the second submodules whose annihilator contains Ann(N)."""
    cache = module._cache.setdefault("zariski_socle", {})
    got = cache.get(N.mask)
    if got is None:
        got = points_sum(module, annihilator_variety(module, N))
        cache[N.mask] = got
    return got


# -- natural map and secondfulness -------------------------------------------


def natural_map(module: GradedModule):
    """Pairs (S, Ann(S)) for every second point.

    Following the stored-representative convention, the target point of S
    is recorded as the graded prime Ann(S) of the base ring (it contains
    the module annihilator, matching a point of the quotient spectrum).
    """
    if module.is_zero:
        raise ZeroModule("the natural map's codomain is undefined for the zero module")
    return tuple((S, ann_in_ring(S)) for S in second_spectrum(module))


def quotient_spectrum_points(module: GradedModule) -> tuple[GradedIdeal, ...]:
    """Graded primes of the base ring containing the module annihilator."""
    ann = module_annihilator(module)
    return tuple(
        p for p in graded_prime_spectrum(module.ring)
        if ann.mask & ~p.mask == 0
    )


def is_secondful(module: GradedModule) -> bool:
    """The natural map is onto the quotient-ring spectrum."""
    image = {ann.mask for _, ann in natural_map(module)}
    target = {p.mask for p in quotient_spectrum_points(module)}
    assert image <= target  # annihilators of seconds are primes over Ann(M)
    return image >= target


# -- the topology on the second spectrum -------------------------------------


def second_topology(module: GradedModule) -> SpectrumTopology:
    """Closed sets are the annihilator varieties; basic opens from hom scalars."""
    cached = module._cache.get("topology")
    if cached is not None:
        return cached
    points = second_spectrum(module)
    by_set = {}
    for N in enumerate_graded_submodules(module):
        v = annihilator_variety(module, N)
        # canonical defining submodule: the sum of the variety's members
        by_set[v] = points_sum(module, v)
    closed = canonical_set_order(by_set)
    tags = tuple(by_set[c] for c in closed)
    full = frozenset(range(len(points)))
    basis = []
    for r in bits(module.ring.hom_mask):
        killed = ann_in_module(module, ideal_generated(module.ring, [r]))
        basis.append((r, full - annihilator_variety(module, killed)))
    top = SpectrumTopology(
        points=points, closed_sets=tuple(closed), closed_tags=tags, basis=tuple(basis)
    )
    if not is_closed_family(top):
        raise AssertionError("annihilator varieties do not form a topology")
    for c in closed:
        if not basis_covers(top, full - c):
            raise AssertionError("scalar basic opens do not form a base")
    module._cache["topology"] = top
    return top


def second_basic_open_sets(module: GradedModule):
    return second_topology(module).basis


def is_cotop(module: GradedModule) -> bool:
    """Containment varieties closed under pairwise union."""
    family = {containment_variety(module, N)
              for N in enumerate_graded_submodules(module)}
    fam = list(family)
    for i, a in enumerate(fam):
        for b in fam[i:]:
            if a | b not in family:
                return False
    return True


# -- predicates ---------------------------------------------------------------


def is_faithful(module: GradedModule) -> bool:
    """No nonzero homogeneous scalar kills the whole module."""
    return ann_hom_mask(module) == 1 << module.ring.zero


def is_comultiplication(module: GradedModule) -> bool:
    """Every graded submodule is the module annihilator of some graded ideal."""
    from .rings import enumerate_graded_ideals

    realizable = {ann_in_module(module, I).mask
                  for I in enumerate_graded_ideals(module.ring)}
    for N in enumerate_graded_submodules(module):
        direct = N.mask in realizable
        double_ann = ann_in_module(module, ann_in_ring(N)).mask == N.mask
        assert direct == double_ann  # the double-annihilator criterion
        if not direct:
            return False
    return True


def is_weak_comultiplication(module: GradedModule) -> bool:
    """Every second submodule is an annihilator submodule (vacuous if secondless)."""
    for S in second_spectrum(module):
        if ann_in_module(module, ann_in_ring(S)).mask != S.mask:
            return False
    return True


def module_predicates(module: GradedModule) -> dict:
    return {
        "is_faithful": is_faithful(module),
        "is_comultiplication": is_comultiplication(module),
        "is_weak_comultiplication": is_weak_comultiplication(module),
        "is_secondless": is_secondless(module),
    }


# -- finitely generated witnesses and the socle decomposition -----------------


def _distinct_principal_pool(ring: GradedRing) -> list[int]:
    seen = {}
    for a in bits(ring.hom_mask):
        if a == ring.zero:
            continue
        key = ring.principal_mask(a)
        if key not in seen:
            seen[key] = a
    return sorted(seen.values())


def zariski_socle_fg_witness(module: GradedModule, N: GradedSubmodule) -> tuple[int, ...]:
    """Minimal-cardinality homogeneous generators of an ideal I with
    Z-socle(N) = Z-socle(Ann_M(I)).

    Always succeeds on a finite carrier: I = Ann(N) works, and every ideal
    here is finitely generated.
    """
    cache = module._cache.setdefault("socle_fg", {})
    got = cache.get(N.mask)
    if got is not None:
        return got
    ring = module.ring
    target = zariski_socle(module, N).mask
    pool = _distinct_principal_pool(ring)
    for k in range(len(pool) + 1):
        for combo in itertools.combinations(pool, k):
            I = ideal_generated(ring, combo)
            if zariski_socle(module, ann_in_module(module, I)).mask == target:
                cache[N.mask] = combo
                return combo
    raise AssertionError("no finitely generated Zariski-socle witness found")


def has_property_zariski_socle_fg(module: GradedModule, second_only: bool = False) -> bool:
    candidates = (second_spectrum(module) if second_only
                  else enumerate_graded_submodules(module))
    for N in candidates:
        combo = zariski_socle_fg_witness(module, N)
        I = ideal_generated(module.ring, combo)
        if zariski_socle(module, ann_in_module(module, I)).mask != zariski_socle(module, N).mask:
            return False
    return True


def zariski_socle_decomposition(module: GradedModule, N: GradedSubmodule):
    """Write a Zariski-socle submodule as a finite sum of second submodules.

    The summands are Ann_M(p) over the minimal graded prime divisors p of
    the graded radical of Ann(N); hypotheses are checked, not assumed.
    """
    if module.is_zero:
        raise PreconditionFailed("zero module")
    if not is_secondful(module):
        raise PreconditionFailed("module is not secondful")
    if not is_weak_comultiplication(module):
        raise PreconditionFailed("module is not weak comultiplication")
    from .spectrum import build_topology
    from .topology import is_noetherian_space
    if not is_noetherian_space(build_topology(module.ring)):
        raise PreconditionFailed("ring spectrum chain condition fails")
    if zariski_socle(module, N).mask != N.mask:
        raise PreconditionFailed("submodule is not its own Zariski socle")
    if N.is_zero:
        return ()
    ring = module.ring
    ann = ann_in_ring(N)
    divisors = minimal_prime_divisors(ring, graded_radical(ring, ann))
    parts = tuple(ann_in_module(module, p) for p in divisors)
    total = 1 << module.zero
    for part in parts:
        assert is_second(part)
        total = kern.module_set_sums(module.tables, total, part.mask)
    if total != N.mask:
        raise AssertionError("socle decomposition does not sum back to the input")
    return parts


# -- quotient modules ---------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ModuleQuotient:
    """A quotient module together with the projection from its base."""

    module: GradedModule
    base: GradedModule
    sub: GradedSubmodule
    proj: tuple[int, ...]

    def push_mask(self, mask: int) -> int:
        out = 0
        for x in bits(mask):
            out |= 1 << self.proj[x]
        return out

    def lift_mask(self, qmask: int) -> int:
        out = 0
        for x in range(self.base.m):
            if (qmask >> self.proj[x]) & 1:
                out |= 1 << x
        return out


def quotient_module(module: GradedModule, N: GradedSubmodule) -> ModuleQuotient:
    """M/N with components the images of the base components."""
    if N.module is not module:
        raise RingMismatch("submodule belongs to a different module")
    rep_of = [-1] * module.m
    for x in range(module.m):
        if rep_of[x] < 0:
            coset = kern.module_set_sums(module.tables, 1 << x, N.mask)
            rep = next(bits(coset))
            for y in bits(coset):
                rep_of[y] = rep
    reps = sorted(set(rep_of))
    new_index = {rep: i for i, rep in enumerate(reps)}
    proj = tuple(new_index[rep_of[x]] for x in range(module.m))
    madd_q = [[proj[module.madd[a][b]] for b in reps] for a in reps]
    act_q = [[proj[module.act[r][b]] for b in reps] for r in range(module.ring.n)]
    comps = {
        g: sorted({proj[x] for x in bits(module.comp_masks[gi])})
        for gi, g in enumerate(module.ring.group.elements)
    }
    labels = tuple(module.labels[rep] for rep in reps)
    q = GradedModule(module.ring, madd_q, act_q, comps, labels=labels,
                     name=f"{module.name}/{N.label()}")
    return ModuleQuotient(module=q, base=module, sub=N, proj=proj)
