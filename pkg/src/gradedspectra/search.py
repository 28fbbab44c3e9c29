"""Bounded counterexample searches over generated corpora.

These searches are sampled, not exhaustive: a miss within the bounds is
reported as exactly that and decides nothing beyond them.
"""

from __future__ import annotations

from .corpus import CorpusBounds, generate_corpus
from .instances import Instance
from .modules import is_cotop, is_secondful, is_secondless

SEARCH_PROPERTIES = ("non-secondful", "secondless", "non-cotop")


def _exhibits(prop: str, inst: Instance) -> bool:
    module = inst.module
    if module is None or module.is_zero:
        return False
    if prop == "non-secondful":
        return not is_secondful(module)
    if prop == "secondless":
        return is_secondless(module)
    if prop == "non-cotop":
        return not is_cotop(module)
    raise ValueError(f"unknown search property {prop!r}")


def search_counterexample(prop: str, bounds: CorpusBounds, seed: int):
    """First corpus instance (in generation order) exhibiting the property.

    Returns (instance_or_None, summary).  The summary records the sampled
    space so a miss is never mistaken for a proof of absence.
    """
    if prop not in SEARCH_PROPERTIES:
        raise ValueError(f"unknown search property {prop!r}")
    instances, stats = generate_corpus(bounds, seed)
    checked = []
    found = None
    for inst in instances:
        if inst.module is None or inst.module.is_zero:
            continue
        checked.append(inst.name)
        if _exhibits(prop, inst):
            found = inst
            break
    summary = {
        "property": prop,
        "bounds": {
            "max_ring_order": bounds.max_ring_order,
            "max_module_order": bounds.max_module_order,
            "max_group_order": bounds.max_group_order,
            "count": bounds.count,
        },
        "seed": seed,
        "generation": stats.as_dict(),
        "checked_count": len(checked),
        "checked": checked,
        "found": found.name if found else None,
        "exhaustive": False,
        "note": (
            "sampled search over finite instances within the stated bounds; "
            "a miss here does not settle the property in general"
        ),
    }
    return found, summary
