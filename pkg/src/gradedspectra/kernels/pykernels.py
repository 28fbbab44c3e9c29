"""Pure-Python kernels for subset algebra over finite operation tables.

Subsets travel as int bitmasks (bit i = carrier element i).  Tables are
prepared once per carrier by :func:`prepare_ring` / :func:`prepare_module`
and reused by every kernel call.  The compiled backend in ``_ckernels``
implements the identical interface.
"""

from __future__ import annotations

NAME = "python"


class RingTables:
    __slots__ = ("n", "add", "mul", "zero")

    def __init__(self, n, add, mul, zero):
        self.n = n
        self.add = add
        self.mul = mul
        self.zero = zero


class ModuleTables:
    __slots__ = ("n", "m", "madd", "act", "zero")

    def __init__(self, n, m, madd, act, zero):
        self.n = n
        self.m = m
        self.madd = madd
        self.act = act
        self.zero = zero


def _find_zero(add_rows):
    n = len(add_rows)
    for z in range(n):
        row = add_rows[z]
        if all(row[x] == x for x in range(n)):
            return z
    raise ValueError("no additive identity in table")


def prepare_ring(add_rows, mul_rows) -> RingTables:
    add = tuple(tuple(row) for row in add_rows)
    mul = tuple(tuple(row) for row in mul_rows)
    return RingTables(len(add), add, mul, _find_zero(add))


def prepare_module(madd_rows, act_rows) -> ModuleTables:
    madd = tuple(tuple(row) for row in madd_rows)
    act = tuple(tuple(row) for row in act_rows)
    return ModuleTables(len(act), len(madd), madd, act, _find_zero(madd))


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def ring_orbit(rt: RingTables, a: int) -> int:
    """Mask of R*a.  In a commutative unital ring this is the principal ideal."""
    out = 0
    for r in range(rt.n):
        out |= 1 << rt.mul[r][a]
    return out


def set_sums(rt: RingTables, amask: int, bmask: int) -> int:
    """Mask of pairwise sums {a + b}.  For two ideals this is the ideal sum."""
    out = 0
    add = rt.add
    for a in _bits(amask):
        row = add[a]
        for b in _bits(bmask):
            out |= 1 << row[b]
    return out


def set_products(rt: RingTables, amask: int, bmask: int) -> int:
    out = 0
    mul = rt.mul
    for a in _bits(amask):
        row = mul[a]
        for b in _bits(bmask):
            out |= 1 << row[b]
    return out


def additive_closure(rt: RingTables, seed: int) -> int:
    """Smallest subset containing ``seed`` and the zero that is closed under +."""
    closed = seed | (1 << rt.zero)
    add = rt.add
    frontier = list(_bits(closed))
    while frontier:
        x = frontier.pop()
        row = add[x]
        for y in list(_bits(closed)):
            s = row[y]
            if not (closed >> s) & 1:
                closed |= 1 << s
                frontier.append(s)
    return closed


def module_orbit(mt: ModuleTables, x: int) -> int:
    """Mask of R*x, the cyclic submodule generated by x."""
    out = 0
    act = mt.act
    for r in range(mt.n):
        out |= 1 << act[r][x]
    return out


def module_set_sums(mt: ModuleTables, amask: int, bmask: int) -> int:
    out = 0
    madd = mt.madd
    for a in _bits(amask):
        row = madd[a]
        for b in _bits(bmask):
            out |= 1 << row[b]
    return out


def scalar_image(mt: ModuleTables, r: int, smask: int) -> int:
    out = 0
    row = mt.act[r]
    for x in _bits(smask):
        out |= 1 << row[x]
    return out


def ann_in_ring(mt: ModuleTables, smask: int) -> int:
    """Mask (over the ring carrier) of {r : r*s = 0 for all s in S}."""
    out = 0
    zero = mt.zero
    act = mt.act
    members = list(_bits(smask))
    for r in range(mt.n):
        row = act[r]
        if all(row[x] == zero for x in members):
            out |= 1 << r
    return out


def ann_in_module(mt: ModuleTables, imask: int) -> int:
    """Mask (over the module carrier) of {x : r*x = 0 for all r in I}."""
    out = 0
    zero = mt.zero
    act = mt.act
    scalars = list(_bits(imask))
    for x in range(mt.m):
        if all(act[r][x] == zero for r in scalars):
            out |= 1 << x
    return out


def is_second_set(mt: ModuleTables, hom_mask: int, smask: int) -> bool:
    """True iff r*S is S or {0} for every r in the given scalar set."""
    zero_mask = 1 << mt.zero
    if smask == 0 or smask == zero_mask:
        return False
    act = mt.act
    members = list(_bits(smask))
    for r in _bits(hom_mask):
        row = act[r]
        image = 0
        for x in members:
            image |= 1 << row[x]
        if image != smask and image != zero_mask:
            return False
    return True
