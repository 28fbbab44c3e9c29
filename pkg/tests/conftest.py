"""Shared test fixtures and independent brute-force oracles.

The oracles deliberately avoid the library's closure/enumeration paths:
they scan all subsets of small carriers and re-derive definitions from the
raw operation tables, so the fast implementations are checked against
something that cannot share their bugs.
"""

from __future__ import annotations

import itertools

import pytest

from gradedspectra.bitset import bits, indices, mask_of
from gradedspectra.constructors import build_ring
from gradedspectra.groups import FiniteAbelianGroup
from gradedspectra.modules import build_module

Z2 = FiniteAbelianGroup([2])


@pytest.fixture(scope="session")
def ring_a():
    """Order-4 cyclic ring, trivially graded."""
    return build_ring(Z2, {"kind": "zmod", "modulus": 4, "grading": "trivial"}, name="r_a")


@pytest.fixture(scope="session")
def ring_b():
    """F_2[u]/(u^2) with u in degree 1: 0, 1, u, 1+u and u*u = 0."""
    return build_ring(Z2, {"kind": "truncated_poly", "p": 2, "power": 2, "degree": [1]},
                      name="r_b")


@pytest.fixture(scope="session")
def ring_c():
    """Group algebra F_2[C_2]: 0, 1, u, 1+u with u*u = 1."""
    return build_ring(Z2, {"kind": "group_algebra", "p": 2}, name="r_c")


@pytest.fixture(scope="session")
def ring_d():
    """Order-6 cyclic ring, trivially graded."""
    return build_ring(Z2, {"kind": "zmod", "modulus": 6, "grading": "trivial"}, name="r_d")


@pytest.fixture(scope="session")
def field_2():
    return build_ring(Z2, {"kind": "zmod", "modulus": 2, "grading": "trivial"}, name="f2")


MODULE_A_DESC = {
    "kind": "cyclic_product", "factors": [2, 2], "action": "scalar-mod",
    "components": [{"degree": [0], "elements": [0, 1]},
                   {"degree": [1], "elements": [0, 2]}],
}

MODULE_B_DESC = {
    "kind": "cyclic_product", "factors": [2, 2], "action": "scalar-mod",
    "components": [{"degree": [0], "elements": [0, 2]},
                   {"degree": [1], "elements": [0, 1]}],
}


@pytest.fixture(scope="session")
def module_a(ring_a):
    """Z_2 x Z_2 over the order-4 ring: degree-0 part {0}xZ_2, degree-1 part Z_2x{0}."""
    return build_module(ring_a, MODULE_A_DESC, name="m_a")


@pytest.fixture(scope="session")
def module_b(field_2):
    """F x F over F_2: degree-0 part Fx{0}, degree-1 part {0}xF."""
    return build_module(field_2, MODULE_B_DESC, name="m_b")


# -- brute-force oracles -------------------------------------------------------


def subsets_containing_zero(n, zero):
    others = [i for i in range(n) if i != zero]
    for k in range(len(others) + 1):
        for combo in itertools.combinations(others, k):
            yield mask_of(combo) | (1 << zero)


def brute_is_ideal(ring, mask) -> bool:
    members = indices(mask)
    if ring.zero not in members:
        return False
    for a in members:
        for b in members:
            if not (mask >> ring.add[a][b]) & 1:
                return False
    for r in range(ring.n):
        for a in members:
            if not (mask >> ring.mul[r][a]) & 1:
                return False
    return True


def brute_components_in(ring, mask) -> bool:
    return all(
        (mask >> c) & 1
        for x in bits(mask)
        for c in ring.decomp[x]
    )


def brute_graded_ideal_masks(ring):
    """Every graded ideal, found by scanning all subsets (tiny rings only)."""
    return sorted(
        m for m in subsets_containing_zero(ring.n, ring.zero)
        if brute_is_ideal(ring, m) and brute_components_in(ring, m)
    )


def brute_is_graded_prime(ring, mask) -> bool:
    if mask == (1 << ring.n) - 1:
        return False
    hom = [a for a in ring.hom_elements() if not (mask >> a) & 1]
    for a in hom:
        for b in hom:
            if (mask >> ring.mul[a][b]) & 1:
                return False
    return True


def brute_radical_mask(ring, imask) -> int:
    """Componentwise power membership with the exhaustive exponent bound."""
    out = 0
    for x in range(ring.n):
        good = True
        for c in ring.decomp[x]:
            power = c
            hit = False
            for _ in range(ring.n):
                if (imask >> power) & 1:
                    hit = True
                    break
                power = ring.mul[power][c]
            if not hit:
                good = False
                break
        if good:
            out |= 1 << x
    return out


def brute_is_submodule(module, mask) -> bool:
    members = indices(mask)
    if module.zero not in members:
        return False
    for a in members:
        for b in members:
            if not (mask >> module.madd[a][b]) & 1:
                return False
    for r in range(module.ring.n):
        for a in members:
            if not (mask >> module.act[r][a]) & 1:
                return False
    return True


def brute_graded_submodule_masks(module):
    return sorted(
        m for m in subsets_containing_zero(module.m, module.zero)
        if brute_is_submodule(module, m)
        and all((m >> c) & 1 for x in bits(m) for c in module.decomp[x])
    )


def brute_is_second(module, mask) -> bool:
    zero_mask = 1 << module.zero
    if mask == zero_mask:
        return False
    for r in module.ring.hom_elements():
        image = 0
        for x in bits(mask):
            image |= 1 << module.act[r][x]
        if image != mask and image != zero_mask:
            return False
    return True
