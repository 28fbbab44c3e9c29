"""Ring construction from closed description trees.

A description is a JSON-shaped dict with a ``kind`` key; every constructor
output passes full :class:`~gradedspectra.rings.GradedRing` validation or
construction fails.  Malformed descriptions raise ``ValueError``.
"""

from __future__ import annotations

import itertools

from .errors import SizeExceeded
from .groups import FiniteAbelianGroup
from .rings import DEFAULT_MAX_ORDER, GradedRing, ideal_generated, quotient_ring

DEFAULT_MAX_GROUP = 16


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _parse_components(desc, n, group):
    if desc == "trivial" or desc is None:
        return {group.identity: range(n)}
    out = {}
    for entry in desc:
        out[tuple(entry["degree"])] = list(entry["elements"])
    return out


def _zmod(group, desc, name):
    n = int(desc["modulus"])
    if n < 2:
        raise ValueError("zmod modulus must be >= 2")
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    comps = _parse_components(desc.get("grading"), n, group)
    labels = [str(i) for i in range(n)]
    return GradedRing(group, add, mul, 0, 1 % n, comps, labels=labels, name=name)


def _basis_label(group, gi):
    g = group.elements[gi]
    if gi == 0:
        return "1"
    if len(group.factors) == 1:
        k = g[0]
        return "u" if k == 1 else f"u^{k}"
    return "u(" + ",".join(str(a) for a in g) + ")"


def _vector_label(coeffs, basis):
    terms = []
    for c, b in zip(coeffs, basis):
        if c == 0:
            continue
        if b == "1":
            terms.append(str(c))
        elif c == 1:
            terms.append(b)
        else:
            terms.append(f"{c}*{b}")
    return "+".join(terms) if terms else "0"


def _group_algebra(group, desc, name):
    p = int(desc["p"])
    if not _is_prime(p):
        raise ValueError("group algebra coefficients must come from a prime field")
    k = len(group)
    n = p ** k
    vectors = list(itertools.product(range(p), repeat=k))
    # index of a coefficient vector: little-endian base-p over group positions
    index = {v: sum(c * p**i for i, c in enumerate(v)) for v in vectors}
    ordered = sorted(vectors, key=lambda v: index[v])
    gadd = group.add_table

    def add_vec(u, v):
        return tuple((a + b) % p for a, b in zip(u, v))

    def mul_vec(u, v):
        out = [0] * k
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                t = gadd[i][j]
                out[t] = (out[t] + a * b) % p
        return tuple(out)

    add = [[index[add_vec(u, v)] for v in ordered] for u in ordered]
    mul = [[index[mul_vec(u, v)] for v in ordered] for u in ordered]
    comps = {}
    for gi, g in enumerate(group.elements):
        members = [0]
        for c in range(1, p):
            vec = tuple(c if i == gi else 0 for i in range(k))
            members.append(index[vec])
        comps[g] = members
    basis = [_basis_label(group, gi) for gi in range(k)]
    labels = [_vector_label(v, basis) for v in ordered]
    one = index[tuple(1 if i == 0 else 0 for i in range(k))]
    return GradedRing(group, add, mul, 0, one, comps, labels=labels, name=name)


def _truncated_poly(group, desc, name):
    p = int(desc["p"])
    d = int(desc["power"])
    if not _is_prime(p):
        raise ValueError("truncated polynomial coefficients must come from a prime field")
    if d < 2:
        raise ValueError("truncation power must be >= 2")
    deg = tuple(desc["degree"])
    if deg not in group.index:
        raise ValueError(f"degree {deg} is not an element of the grading group")
    n = p ** d
    vectors = list(itertools.product(range(p), repeat=d))
    index = {v: sum(c * p**i for i, c in enumerate(v)) for v in vectors}
    ordered = sorted(vectors, key=lambda v: index[v])

    def add_vec(u, v):
        return tuple((a + b) % p for a, b in zip(u, v))

    def mul_vec(u, v):
        out = [0] * d
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0 or i + j >= d:  # u^d = 0 truncation
                    continue
                out[i + j] = (out[i + j] + a * b) % p
        return tuple(out)

    add = [[index[add_vec(u, v)] for v in ordered] for u in ordered]
    mul = [[index[mul_vec(u, v)] for v in ordered] for u in ordered]
    # monomial u^i sits in degree i*deg; components collect matching supports
    comps = {g: set([0]) for g in group.elements}
    mono_degree = [group.identity]
    for i in range(1, d):
        mono_degree.append(group.add(mono_degree[-1], deg))
    for g in group.elements:
        support = [i for i in range(d) if mono_degree[i] == g]
        members = set()
        for combo in itertools.product(range(p), repeat=len(support)):
            vec = [0] * d
            for pos, c in zip(support, combo):
                vec[pos] = c
            members.add(index[tuple(vec)])
        comps[g] |= members
    basis = ["1"] + ["u" if i == 1 else f"u^{i}" for i in range(1, d)]
    labels = [_vector_label(v, basis) for v in ordered]
    return GradedRing(group, add, mul, 0, index[(1,) + (0,) * (d - 1)], comps,
                      labels=labels, name=name)


def _product(group, desc, name, max_order):
    parts = [
        build_ring(group, part, max_order=max_order, name=f"{name}.{i}")
        for i, part in enumerate(desc["parts"])
    ]
    if len(parts) < 2:
        raise ValueError("product needs at least two parts")
    n = 1
    for part in parts:
        n *= part.n
    if n > max_order:
        raise SizeExceeded(f"product ring order {n} exceeds bound {max_order}")
    combos = list(itertools.product(*(range(part.n) for part in parts)))
    index = {c: i for i, c in enumerate(combos)}

    def tab(op):
        return [
            [index[tuple(op(part)[a][b] for part, a, b in zip(parts, u, v))]
             for v in combos]
            for u in combos
        ]

    add = tab(lambda part: part.add)
    mul = tab(lambda part: part.mul)
    zero = index[tuple(part.zero for part in parts)]
    one = index[tuple(part.one for part in parts)]
    comps = {}
    for gi, g in enumerate(group.elements):
        part_members = [
            [x for x in range(part.n) if (part.comp_masks[gi] >> x) & 1]
            for part in parts
        ]
        comps[g] = [index[c] for c in itertools.product(*part_members)]
    labels = [
        "(" + ",".join(part.labels[i] for part, i in zip(parts, c)) + ")"
        for c in combos
    ]
    return GradedRing(group, add, mul, zero, one, comps, labels=labels, name=name)


def _tables(group, desc, name):
    add = desc["add"]
    mul = desc["mul"]
    comps = _parse_components(desc.get("components"), len(add), group)
    return GradedRing(
        group, add, mul, int(desc["zero"]), int(desc["one"]), comps,
        labels=desc.get("labels"), name=name,
    )


def _quotient(group, desc, name, max_order):
    base = build_ring(group, desc["base"], max_order=max_order, name=f"{name}.base")
    gens = [int(g) for g in desc["generators"]]
    ideal = ideal_generated(base, gens)
    q = quotient_ring(base, ideal)
    ring = q.ring
    ring.name = name
    return ring


_BUILDERS = {
    "zmod": lambda group, desc, name, max_order: _zmod(group, desc, name),
    "group_algebra": lambda group, desc, name, max_order: _group_algebra(group, desc, name),
    "truncated_poly": lambda group, desc, name, max_order: _truncated_poly(group, desc, name),
    "product": _product,
    "tables": lambda group, desc, name, max_order: _tables(group, desc, name),
    "quotient": _quotient,
}


def expected_order(group: FiniteAbelianGroup, desc) -> int | None:
    """Carrier size a description will produce, when cheap to predict."""
    kind = desc.get("kind")
    if kind == "zmod":
        return int(desc["modulus"])
    if kind == "group_algebra":
        return int(desc["p"]) ** len(group)
    if kind == "truncated_poly":
        return int(desc["p"]) ** int(desc["power"])
    if kind == "product":
        total = 1
        for part in desc["parts"]:
            sub = expected_order(group, part)
            if sub is None:
                return None
            total *= sub
        return total
    if kind == "tables":
        return len(desc["add"])
    return None


def build_ring(group: FiniteAbelianGroup, desc, max_order: int = DEFAULT_MAX_ORDER,
               name: str = "R") -> GradedRing:
    """Build and validate a ring from a description tree."""
    kind = desc.get("kind")
    if kind not in _BUILDERS:
        raise ValueError(f"unknown ring constructor kind {kind!r}")
    order = expected_order(group, desc)
    if order is not None and order > max_order:
        raise SizeExceeded(f"ring order {order} exceeds bound {max_order}")
    ring = _BUILDERS[kind](group, desc, name, max_order)
    if ring.n > max_order:
        raise SizeExceeded(f"ring order {ring.n} exceeds bound {max_order}")
    return ring
