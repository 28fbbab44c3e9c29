"""Deterministic corpus generation: systematic constructor families first,
then seeded random candidates; invalid candidates are discarded and counted."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from .errors import GradedAlgebraError, ValidationError
from .instances import FIXTURE_NAMES, Instance, fixture_document, instantiate
from .modules import enumerate_graded_submodules
from .rings import enumerate_graded_ideals

DEFAULT_MAX_LATTICE = 256


@dataclass(frozen=True)
class CorpusBounds:
    max_ring_order: int = 32
    max_module_order: int = 64
    max_group_order: int = 8
    count: int = 100

    @classmethod
    def parse(cls, text: str) -> "CorpusBounds":
        """Parse 'RING,MODULE,GROUP,COUNT' (e.g. '32,64,8,100')."""
        parts = [int(p) for p in text.split(",")]
        if len(parts) != 4:
            raise ValueError("corpus bounds must be RING,MODULE,GROUP,COUNT")
        return cls(*parts)


@dataclass
class CorpusStats:
    requested: int = 0
    produced: int = 0
    fixtures: int = 0
    discarded: int = 0
    shortfall: int = 0
    discard_reasons: dict = field(default_factory=dict)

    def note_discard(self, reason: str):
        self.discarded += 1
        self.discard_reasons[reason] = self.discard_reasons.get(reason, 0) + 1

    def as_dict(self) -> dict:
        return {
            "requested": self.requested,
            "produced": self.produced,
            "fixtures": self.fixtures,
            "discarded": self.discarded,
            "shortfall": self.shortfall,
            "discard_reasons": dict(sorted(self.discard_reasons.items())),
        }


def _divisor_pairs(n, max_product):
    out = []
    for a in range(2, n + 1):
        if n % a:
            continue
        for b in range(2, n + 1):
            if n % b or a * b > max_product:
                continue
            out.append((a, b))
    return out


def _systematic_documents(bounds: CorpusBounds):
    """Fixed family of constructor documents, in a deterministic order."""
    docs = []

    def add(name, group, ring, module=None):
        doc = {"name": name, "group": {"cyclic_factors": list(group)}, "ring": ring}
        if module is not None:
            doc["module"] = module
        docs.append(doc)

    regular = {"kind": "regular"}
    # cyclic rings with their regular modules and split two-factor modules
    for n in range(2, bounds.max_ring_order + 1):
        ring = {"kind": "zmod", "modulus": n, "grading": "trivial"}
        add(f"zmod{n}", [2], ring, regular)
        for a, b in _divisor_pairs(n, bounds.max_module_order)[:2]:
            module = {
                "kind": "cyclic_product", "factors": [a, b], "action": "scalar-mod",
                "components": [
                    {"degree": [0], "elements": sorted({0} | {b * i for i in range(a)})},
                    {"degree": [1], "elements": list(range(b))},
                ],
            }
            add(f"zmod{n}-split{a}x{b}", [2], ring, module)
    # truncated polynomial rings, generator in degree 1
    for p, d in ((2, 2), (3, 2), (2, 3), (5, 2), (2, 4), (3, 3), (2, 5)):
        if p ** d > bounds.max_ring_order:
            continue
        ring = {"kind": "truncated_poly", "p": p, "power": d, "degree": [1]}
        add(f"tp{p}-{d}-z2", [2], ring, regular)
        if 4 <= bounds.max_group_order:
            ring4 = {"kind": "truncated_poly", "p": p, "power": d, "degree": [1]}
            add(f"tp{p}-{d}-z4", [4], ring4, regular)
    # group algebras (grading forced by the group)
    for factors in ([2], [3], [4], [2, 2]):
        size = 1
        for f in factors:
            size *= f
        if size > bounds.max_group_order:
            continue
        for p in (2, 3, 5):
            if p ** size > bounds.max_ring_order:
                continue
            gname = "x".join(str(f) for f in factors)
            add(f"ga{p}-c{gname}", factors, {"kind": "group_algebra", "p": p}, regular)
    # products
    z2 = {"kind": "zmod", "modulus": 2, "grading": "trivial"}
    z3 = {"kind": "zmod", "modulus": 3, "grading": "trivial"}
    z4 = {"kind": "zmod", "modulus": 4, "grading": "trivial"}
    tp22 = {"kind": "truncated_poly", "p": 2, "power": 2, "degree": [1]}
    ga2 = {"kind": "group_algebra", "p": 2}
    products = [
        ("prod-z2z2", [2], [z2, z2]),
        ("prod-z2z3", [2], [z2, z3]),
        ("prod-z4z2", [2], [z4, z2]),
        ("prod-z2z2z2", [2], [z2, z2, z2]),
        ("prod-tp22-z2", [2], [tp22, z2]),
        ("prod-ga2-z2", [2], [ga2, z2]),
        ("prod-tp22-tp22", [2], [tp22, tp22]),
    ]
    for name, group, parts in products:
        order = 1
        ok = True
        for part in parts:
            if part.get("kind") == "zmod":
                order *= part["modulus"]
            elif part.get("kind") == "truncated_poly":
                order *= part["p"] ** part["power"]
            else:
                order *= 2 ** len(group)
        if order > bounds.max_ring_order:
            continue
        add(name, group, {"kind": "product", "parts": parts}, regular)
    # quotients
    if bounds.max_ring_order >= 8:
        add("quot-z8-4", [2],
            {"kind": "quotient",
             "base": {"kind": "zmod", "modulus": 8, "grading": "trivial"},
             "generators": [4]},
            regular)
    if bounds.max_ring_order >= 8:
        add("quot-tp23-u2", [2],
            {"kind": "quotient",
             "base": {"kind": "truncated_poly", "p": 2, "power": 3, "degree": [1]},
             "generators": [4]},
            regular)
    # quotient modules over small rings
    add("zmod4-quotmod", [2],
        {"kind": "zmod", "modulus": 4, "grading": "trivial"},
        {"kind": "quotient", "base": {"kind": "regular"}, "generators": [2]})
    add("tp22-quotmod", [2],
        {"kind": "truncated_poly", "p": 2, "power": 2, "degree": [1]},
        {"kind": "quotient", "base": {"kind": "regular"}, "generators": [2]})
    return docs


def _random_document(rng: random.Random, bounds: CorpusBounds, tag: str):
    """One seeded random candidate document; may fail validation downstream."""
    groups = [[2], [3], [4], [2, 2]]
    group = rng.choice([g for g in groups
                        if _group_size(g) <= bounds.max_group_order] or [[2]])
    style = rng.randrange(4)
    if style == 0:
        n = rng.randrange(2, bounds.max_ring_order + 1)
        ring = {"kind": "zmod", "modulus": n, "grading": "trivial"}
        module = _random_module(rng, n, group, bounds)
        return {"name": tag, "group": {"cyclic_factors": group},
                "ring": ring, "module": module}
    if style == 1:
        choices = [(p, d) for p in (2, 3, 5) for d in (2, 3, 4)
                   if p ** d <= bounds.max_ring_order]
        if not choices:
            return None
        p, d = rng.choice(choices)
        ring = {"kind": "truncated_poly", "p": p, "power": d,
                "degree": [rng.randrange(1, _group_size(group))] if _group_size(group) > 1 else [0]}
        return {"name": tag, "group": {"cyclic_factors": group},
                "ring": ring, "module": {"kind": "regular"}}
    if style == 2:
        base_n = rng.choice([n for n in (4, 8, 9, 16, 27)
                             if n <= bounds.max_ring_order] or [4])
        gens = sorted(rng.sample(range(1, base_n), k=min(rng.randrange(1, 3), base_n - 1)))
        ring = {"kind": "quotient",
                "base": {"kind": "zmod", "modulus": base_n, "grading": "trivial"},
                "generators": gens}
        return {"name": tag, "group": {"cyclic_factors": [2]},
                "ring": ring, "module": {"kind": "regular"}}
    parts = []
    order = 1
    for _ in range(2):
        n = rng.choice([2, 3, 4])
        order *= n
        parts.append({"kind": "zmod", "modulus": n, "grading": "trivial"})
    if order > bounds.max_ring_order:
        return None
    return {"name": tag, "group": {"cyclic_factors": [2]},
            "ring": {"kind": "product", "parts": parts},
            "module": {"kind": "regular"}}


def _group_size(factors):
    size = 1
    for f in factors:
        size *= f
    return size


def _random_module(rng, n, group, bounds):
    divisors = [d for d in range(2, n + 1) if n % d == 0]
    if not divisors or rng.random() < 0.3:
        return {"kind": "regular"}
    k = rng.randrange(1, 4)
    factors = [rng.choice(divisors) for _ in range(k)]
    size = 1
    for f in factors:
        size *= f
    if size > bounds.max_module_order:
        return {"kind": "regular"}
    gsize = _group_size(group)
    degrees = [rng.randrange(gsize) for _ in factors]
    group_elements = _group_elements(group)
    components: dict[tuple, set] = {}
    for fi, (f, gi) in enumerate(zip(factors, degrees)):
        members = set()
        for v in range(f):
            vec = [0] * len(factors)
            vec[fi] = v
            members.add(_mixed_radix_index(vec, factors))
        components.setdefault(group_elements[gi], set()).update(members)
    comp_list = [{"degree": list(g), "elements": sorted(m | {0})}
                 for g, m in sorted(components.items())]
    return {"kind": "cyclic_product", "factors": factors, "action": "scalar-mod",
            "components": comp_list}


def _group_elements(factors):
    import itertools
    return [tuple(g) for g in itertools.product(*(range(f) for f in factors))]


def _mixed_radix_index(vec, factors):
    idx = 0
    for v, f in zip(vec, factors):
        idx = idx * f + v
    return idx


def _acceptable(doc, bounds: CorpusBounds, max_lattice: int):
    """Instantiate and pre-enumerate lattices; None when out of bounds/invalid."""
    inst = instantiate(doc, max_ring_order=bounds.max_ring_order,
                       max_module_order=bounds.max_module_order)
    enumerate_graded_ideals(inst.ring, max_lattice=max_lattice)
    if inst.module is not None:
        enumerate_graded_submodules(inst.module, max_lattice=max_lattice)
    return inst


def generate_corpus(bounds: CorpusBounds, seed: int,
                    max_lattice: int = DEFAULT_MAX_LATTICE,
                    include_fixtures: bool = True):
    """Deterministic-for-seed corpus of validated instances.

    Returns (instances, stats).  The curated fixtures come first, then the
    systematic families, then seeded random candidates until the requested
    count is reached or the attempt budget runs out.
    """
    rng = random.Random(seed)
    stats = CorpusStats(requested=bounds.count)
    out: list[Instance] = []
    used_names = set()
    seen_content = set()

    def push(doc) -> bool:
        if len(out) >= bounds.count:
            return False
        name = doc["name"]
        if name in used_names:
            return False
        # dedupe by content so random duplicates never pad the corpus
        key = json.dumps({k: v for k, v in doc.items() if k != "name"}, sort_keys=True)
        if key in seen_content:
            stats.note_discard("duplicate")
            return False
        try:
            inst = _acceptable(doc, bounds, max_lattice)
        except (GradedAlgebraError, ValidationError, ValueError) as e:
            stats.note_discard(type(e).__name__)
            return False
        used_names.add(name)
        seen_content.add(key)
        out.append(inst)
        return True

    if include_fixtures:
        for name in FIXTURE_NAMES:
            if push(fixture_document(name)):
                stats.fixtures += 1
    for doc in _systematic_documents(bounds):
        if len(out) >= bounds.count:
            break
        push(doc)
    attempts = 0
    budget = bounds.count * 40
    while len(out) < bounds.count and attempts < budget:
        attempts += 1
        doc = _random_document(rng, bounds, f"rnd{attempts:04d}")
        if doc is None:
            stats.note_discard("unbuildable")
            continue
        push(doc)
    stats.produced = len(out)
    stats.shortfall = max(0, bounds.count - len(out))
    return out, stats
