"""Instance files: a JSON document per (ring, optional module) instance.

Schema (informal)::

    {"name": str,
     "notes": str?,
     "group": {"cyclic_factors": [int]},
     "ring": {<constructor tree>},
     "module": {<constructor tree>}?}

Documents normalize to a canonical form (sorted keys, sorted subsets,
materialized defaults) so that serialize(parse(f)) == normalize(f).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .constructors import build_ring
from .errors import GradedAlgebraError, ParseError, ValidationError
from .groups import FiniteAbelianGroup
from .modules import GradedModule, build_module
from .rings import DEFAULT_MAX_ORDER, GradedRing

FIXTURE_NAMES = ("r_a", "r_b", "r_c", "r_d", "m_a", "m_b")


@dataclass(frozen=True, eq=False)
class Instance:
    name: str
    desc: dict
    ring: GradedRing
    module: GradedModule | None = None
    notes: str = ""

    @property
    def has_module(self) -> bool:
        return self.module is not None

    def __repr__(self):
        mod = f", module order {self.module.m}" if self.module else ""
        return f"Instance({self.name!r}, ring order {self.ring.n}{mod})"


def _fail(location, message):
    raise ValidationError(location, message)


def _require(cond, location, message):
    if not cond:
        _fail(location, message)


def _int_list(value, location):
    _require(isinstance(value, (list, tuple)), location, "expected a list of integers")
    out = []
    for i, v in enumerate(value):
        _require(isinstance(v, int) and not isinstance(v, bool),
                 f"{location}[{i}]", "expected an integer")
        out.append(v)
    return out


def _normalize_components(value, location):
    if value in (None, "trivial"):
        return "trivial"
    _require(isinstance(value, list), location, "expected 'trivial' or a list of components")
    out = []
    for i, entry in enumerate(value):
        loc = f"{location}[{i}]"
        _require(isinstance(entry, dict), loc, "expected an object")
        _require("degree" in entry, loc, "missing field 'degree'")
        _require("elements" in entry, loc, "missing field 'elements'")
        out.append({
            "degree": _int_list(entry["degree"], f"{loc}.degree"),
            "elements": sorted(set(_int_list(entry["elements"], f"{loc}.elements"))),
        })
    out.sort(key=lambda e: e["degree"])
    return out


def _normalize_table(value, location):
    _require(isinstance(value, list), location, "expected a table (list of rows)")
    return [_int_list(row, f"{location}[{i}]") for i, row in enumerate(value)]


def normalize_ring_desc(desc, location="ring"):
    _require(isinstance(desc, dict), location, "expected an object")
    kind = desc.get("kind")
    if kind == "zmod":
        _require("modulus" in desc, location, "missing field 'modulus'")
        return {
            "kind": "zmod",
            "modulus": int(desc["modulus"]),
            "grading": _normalize_components(desc.get("grading"), f"{location}.grading"),
        }
    if kind == "group_algebra":
        _require("p" in desc, location, "missing field 'p'")
        return {"kind": "group_algebra", "p": int(desc["p"])}
    if kind == "truncated_poly":
        for key in ("p", "power", "degree"):
            _require(key in desc, location, f"missing field '{key}'")
        return {
            "kind": "truncated_poly",
            "p": int(desc["p"]),
            "power": int(desc["power"]),
            "degree": _int_list(desc["degree"], f"{location}.degree"),
        }
    if kind == "product":
        _require(isinstance(desc.get("parts"), list), location, "missing list field 'parts'")
        return {
            "kind": "product",
            "parts": [
                normalize_ring_desc(part, f"{location}.parts[{i}]")
                for i, part in enumerate(desc["parts"])
            ],
        }
    if kind == "tables":
        for key in ("add", "mul", "zero", "one"):
            _require(key in desc, location, f"missing field '{key}'")
        out = {
            "kind": "tables",
            "add": _normalize_table(desc["add"], f"{location}.add"),
            "mul": _normalize_table(desc["mul"], f"{location}.mul"),
            "zero": int(desc["zero"]),
            "one": int(desc["one"]),
            "components": _normalize_components(desc.get("components"), f"{location}.components"),
        }
        if desc.get("labels") is not None:
            out["labels"] = [str(s) for s in desc["labels"]]
        return out
    if kind == "quotient":
        _require("base" in desc, location, "missing field 'base'")
        _require("generators" in desc, location, "missing field 'generators'")
        return {
            "kind": "quotient",
            "base": normalize_ring_desc(desc["base"], f"{location}.base"),
            "generators": sorted(set(_int_list(desc["generators"], f"{location}.generators"))),
        }
    _fail(location, f"unknown ring constructor kind {kind!r}")


def normalize_module_desc(desc, location="module"):
    _require(isinstance(desc, dict), location, "expected an object")
    kind = desc.get("kind")
    if kind == "regular":
        return {"kind": "regular"}
    if kind == "cyclic_product":
        _require("factors" in desc, location, "missing field 'factors'")
        action = desc.get("action", "scalar-mod")
        if action != "scalar-mod":
            action = _normalize_table(action, f"{location}.action")
        return {
            "kind": "cyclic_product",
            "factors": _int_list(desc["factors"], f"{location}.factors"),
            "action": action,
            "components": _normalize_components(desc.get("components"), f"{location}.components"),
        }
    if kind == "quotient":
        _require("base" in desc, location, "missing field 'base'")
        _require("generators" in desc, location, "missing field 'generators'")
        return {
            "kind": "quotient",
            "base": normalize_module_desc(desc["base"], f"{location}.base"),
            "generators": sorted(set(_int_list(desc["generators"], f"{location}.generators"))),
        }
    _fail(location, f"unknown module constructor kind {kind!r}")


def normalize_instance_desc(doc) -> dict:
    _require(isinstance(doc, dict), "$", "expected a JSON object")
    name = doc.get("name")
    _require(isinstance(name, str) and name, "name", "missing or empty instance name")
    group = doc.get("group")
    _require(isinstance(group, dict) and "cyclic_factors" in group,
             "group", "missing field 'cyclic_factors'")
    out = {
        "name": name,
        "group": {"cyclic_factors": _int_list(group["cyclic_factors"], "group.cyclic_factors")},
        "ring": normalize_ring_desc(doc.get("ring"), "ring"),
    }
    if doc.get("module") is not None:
        out["module"] = normalize_module_desc(doc["module"], "module")
    if doc.get("notes"):
        out["notes"] = str(doc["notes"])
    return out


DEFAULT_MAX_GROUP = 16


def instantiate(doc, max_ring_order: int = DEFAULT_MAX_ORDER,
                max_module_order: int = DEFAULT_MAX_ORDER,
                max_group_order: int = DEFAULT_MAX_GROUP) -> Instance:
    """Build and validate an instance from a (raw or normalized) document."""
    desc = normalize_instance_desc(doc)
    factors = desc["group"]["cyclic_factors"]
    try:
        group = FiniteAbelianGroup(factors)
    except ValueError as e:
        _fail("group.cyclic_factors", str(e))
    if len(group) > max_group_order:
        _fail("group.cyclic_factors",
              f"grading group of order {len(group)} exceeds bound {max_group_order}")
    try:
        ring = build_ring(group, desc["ring"], max_order=max_ring_order,
                          name=desc["name"])
    except (GradedAlgebraError, ValueError) as e:
        if isinstance(e, ValidationError):
            raise
        _fail("ring", str(e))
    module = None
    if "module" in desc:
        try:
            module = build_module(ring, desc["module"], max_order=max_module_order,
                                  name=f"{desc['name']}.module")
        except (GradedAlgebraError, ValueError) as e:
            if isinstance(e, ValidationError):
                raise
            _fail("module", str(e))
    return Instance(name=desc["name"], desc=desc, ring=ring, module=module,
                    notes=desc.get("notes", ""))


def serialize_instance(desc_or_instance) -> str:
    """Canonical JSON for an instance document."""
    desc = (desc_or_instance.desc if isinstance(desc_or_instance, Instance)
            else normalize_instance_desc(desc_or_instance))
    return json.dumps(desc, sort_keys=True, indent=2) + "\n"


def parse_instance(path, max_ring_order: int = DEFAULT_MAX_ORDER,
                   max_module_order: int = DEFAULT_MAX_ORDER) -> Instance:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise ParseError(f"{path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON ({e})") from e
    return instantiate(doc, max_ring_order=max_ring_order,
                       max_module_order=max_module_order)


def fixture_document(name: str) -> dict:
    ref = resources.files("gradedspectra").joinpath(f"fixtures/{name}.json")
    return json.loads(ref.read_text(encoding="utf-8"))


def load_fixture(name: str) -> Instance:
    return instantiate(fixture_document(name))


def load_all_fixtures() -> list[Instance]:
    return [load_fixture(name) for name in FIXTURE_NAMES]
