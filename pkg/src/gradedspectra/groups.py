"""Finite abelian grading groups as products of cyclic factors."""

from __future__ import annotations

import itertools


class FiniteAbelianGroup:
    """Z_{n1} x ... x Z_{nk}, written additively.

    Elements are tuples reduced mod the factors, listed in lexicographic
    order, so index 0 is the identity (the all-zero tuple).
    """

    def __init__(self, factors):
        factors = tuple(int(f) for f in factors)
        if not factors:
            factors = (1,)
        if any(f < 1 for f in factors):
            raise ValueError("cyclic factors must be integers >= 1")
        self.factors = factors
        self.elements: tuple[tuple[int, ...], ...] = tuple(
            itertools.product(*(range(f) for f in factors))
        )
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.identity = self.elements[0]
        n = len(self.elements)
        # index-level addition table; grading groups are small (<= 16 by default)
        self.add_table = tuple(
            tuple(self.index[self.add(g, h)] for h in self.elements)
            for g in self.elements
        )

    def add(self, g, h):
        return tuple((a + b) % f for a, b, f in zip(g, h, self.factors))

    def neg(self, g):
        return tuple((-a) % f for a, f in zip(g, self.factors))

    def scale(self, k: int, g):
        return tuple((k * a) % f for a, f in zip(g, self.factors))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return g in self.index

    def __eq__(self, other):
        return isinstance(other, FiniteAbelianGroup) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return f"FiniteAbelianGroup{self.factors}"
