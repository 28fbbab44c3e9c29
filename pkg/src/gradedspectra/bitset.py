"""Subsets of an indexed carrier as int bitmasks (bit i = element i)."""

from __future__ import annotations

from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(items: Iterable[int]) -> int:
    m = 0
    for i in items:
        m |= 1 << i
    return m


def indices(mask: int) -> list[int]:
    return list(bits(mask))


def subset_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Canonical sort key: cardinality, then the sorted index tuple."""
    idx = tuple(bits(mask))
    return (len(idx), idx)
