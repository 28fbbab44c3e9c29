"""Command-line interface: validate/spec/sspec/socle dumps, the verification
runner, bounded counterexample searches, and corpus generation.

Exit codes: 0 success (and all suites green), 1 failing suite rows,
2 usage, parse or validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import modules as mod
from . import rings, spectrum
from .corpus import CorpusBounds, generate_corpus
from .errors import GradedAlgebraError, ParseError, ValidationError
from .instances import (
    Instance,
    load_all_fixtures,
    parse_instance,
    serialize_instance,
)
from .search import SEARCH_PROPERTIES, search_counterexample
from .suites import emit_report, run_suites
from .topology import is_noetherian_space


def _print_json(doc) -> None:
    print(json.dumps(doc, sort_keys=True, indent=2))


def _load(args) -> Instance:
    return parse_instance(args.file, max_ring_order=args.max_ring_order,
                          max_module_order=args.max_module_order)


def _cmd_validate(args) -> int:
    inst = _load(args)
    if args.json:
        doc = {"ok": True, "name": inst.name, "ring_order": inst.ring.n}
        if inst.module is not None:
            doc["module_order"] = inst.module.m
        _print_json(doc)
    else:
        extra = f", module order {inst.module.m}" if inst.module else ""
        print(f"ok: {inst.name} (ring order {inst.ring.n}{extra})")
    return 0


def _spec_document(inst: Instance) -> dict:
    ring = inst.ring
    points = spectrum.graded_prime_spectrum(ring)
    top = spectrum.build_topology(ring)
    return {
        "instance": inst.name,
        "ring_order": ring.n,
        "homogeneous_elements": ring.hom_elements(),
        "graded_ideal_count": len(rings.enumerate_graded_ideals(ring)),
        "points": [
            {"elements": sorted(p.indices), "generators": list(p.gens),
             "label": p.label()}
            for p in points
        ],
        "closed_sets": [
            {"points": sorted(c), "defining_ideal": sorted(tag.indices)}
            for c, tag in zip(top.closed_sets, top.closed_tags)
        ],
        "basic_opens": [
            {"element": r, "label": ring.labels[r], "points": sorted(open_set)}
            for r, open_set in top.basis
        ],
        "noetherian": is_noetherian_space(top),
        "maximal_ideals": [sorted(p.indices) for p in rings.max_spectrum(ring)],
        "graded_jacobson_radical": sorted(rings.graded_jacobson_radical(ring).indices),
    }


def _cmd_spec(args) -> int:
    inst = _load(args)
    doc = _spec_document(inst)
    if args.json:
        _print_json(doc)
        return 0
    print(f"{inst.name}: graded prime spectrum of a ring of order {doc['ring_order']}")
    for i, p in enumerate(doc["points"]):
        print(f"  point {i}: {p['label']} = {p['elements']}")
    print(f"  closed sets: {[c['points'] for c in doc['closed_sets']]}")
    print(f"  noetherian: {doc['noetherian']}")
    print(f"  maximal ideals: {doc['maximal_ideals']}")
    print(f"  graded jacobson radical: {doc['graded_jacobson_radical']}")
    return 0


def _sspec_document(inst: Instance) -> dict:
    module = inst.module
    points = mod.second_spectrum(module)
    doc = {
        "instance": inst.name,
        "module_order": module.m,
        "secondless": mod.is_secondless(module),
        "points": [{"elements": sorted(S.indices)} for S in points],
        "module_annihilator": sorted(mod.module_annihilator(module).indices),
        "predicates": mod.module_predicates(module),
        "cotop": mod.is_cotop(module),
    }
    top = mod.second_topology(module)
    doc["closed_sets"] = [{"points": sorted(c)} for c in top.closed_sets]
    doc["noetherian"] = is_noetherian_space(top)
    if module.is_zero:
        doc["secondful"] = None
    else:
        doc["secondful"] = mod.is_secondful(module)
        doc["natural_map"] = [
            {"point": i, "annihilator": sorted(ann.indices)}
            for i, (_, ann) in enumerate(mod.natural_map(module))
        ]
        doc["quotient_spectrum_size"] = len(mod.quotient_spectrum_points(module))
    return doc


def _cmd_sspec(args) -> int:
    inst = _load(args)
    if inst.module is None:
        print("error: instance has no module", file=sys.stderr)
        return 2
    doc = _sspec_document(inst)
    if args.json:
        _print_json(doc)
        return 0
    print(f"{inst.name}: graded second spectrum of a module of order {doc['module_order']}")
    for i, p in enumerate(doc["points"]):
        print(f"  point {i}: {p['elements']}")
    print(f"  module annihilator: {doc['module_annihilator']}")
    print(f"  secondful: {doc['secondful']}  secondless: {doc['secondless']}")
    print(f"  closed sets: {[c['points'] for c in doc['closed_sets']]}")
    print(f"  noetherian: {doc['noetherian']}  cotop: {doc['cotop']}")
    return 0


def _cmd_socle(args) -> int:
    inst = _load(args)
    if inst.module is None:
        print("error: instance has no module", file=sys.stderr)
        return 2
    module = inst.module
    try:
        elements = [int(s) for s in args.submodule.split(",") if s != ""]
    except ValueError:
        print("error: --submodule expects comma-separated element indices",
              file=sys.stderr)
        return 2
    # the smallest graded submodule containing the listed elements
    N = mod.graded_submodule_containing(module, elements)
    soc = mod.second_socle(module, N)
    zsoc = mod.zariski_socle(module, N)
    doc = {
        "instance": inst.name,
        "given_elements": sorted(set(elements)),
        "submodule": sorted(N.indices),
        "second_socle": sorted(soc.indices),
        "zariski_socle": sorted(zsoc.indices),
        "is_zariski_socle_submodule": zsoc.mask == N.mask,
    }
    if args.json:
        _print_json(doc)
    else:
        print(f"{inst.name}: submodule generated by components of {doc['given_elements']}")
        print(f"  submodule:     {doc['submodule']}")
        print(f"  second socle:  {doc['second_socle']}")
        print(f"  zariski socle: {doc['zariski_socle']}")
        print(f"  fixed point of the zariski socle: {doc['is_zariski_socle_submodule']}")
    return 0


def _corpus_instances(args):
    if args.corpus:
        bounds = CorpusBounds.parse(args.corpus)
        instances, stats = generate_corpus(bounds, args.seed or 0)
        return instances, stats
    return load_all_fixtures(), None


def _cmd_verify(args) -> int:
    instances, stats = _corpus_instances(args)
    results = run_suites(instances, suite_filter=args.suite, jobs=args.jobs)
    text, code = emit_report(
        results, fmt="json" if args.json else "text",
        seed=args.seed, timings=args.timings,
    )
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        if not args.json:
            print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    if stats is not None and not args.json and not args.out:
        print(f"corpus: {stats.as_dict()}")
    return code


def _cmd_search(args) -> int:
    bounds = (CorpusBounds.parse(args.corpus) if args.corpus
              else CorpusBounds(16, 32, 8, 150))
    found, summary = search_counterexample(args.property, bounds, args.seed or 0)
    if args.json:
        doc = {"summary": summary}
        if found is not None:
            doc["instance_document"] = found.desc
        _print_json(doc)
        return 0
    if found is not None:
        print(f"found {args.property} instance: {found.name}")
        sys.stdout.write(serialize_instance(found))
    else:
        print(f"no {args.property} instance found "
              f"(checked {summary['checked_count']} candidates)")
    print(f"note: {summary['note']}")
    return 0


def _cmd_gen(args) -> int:
    bounds = CorpusBounds.parse(args.corpus) if args.corpus else CorpusBounds()
    instances, stats = generate_corpus(bounds, args.seed or 0)
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        for inst in instances:
            (outdir / f"{inst.name}.json").write_text(
                serialize_instance(inst), encoding="utf-8"
            )
        print(f"wrote {len(instances)} instance files to {outdir}")
        print(f"generation: {stats.as_dict()}")
    else:
        _print_json({
            "generation": stats.as_dict(),
            "instances": [inst.desc for inst in instances],
        })
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gspec",
        description="graded prime/second spectra of finite graded rings and modules",
    )
    parser.add_argument("--max-ring-order", type=int, default=256,
                        help="largest permitted ring carrier (default 256)")
    parser.add_argument("--max-module-order", type=int, default=256,
                        help="largest permitted module carrier (default 256)")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(p):
        p.add_argument("file", help="instance JSON file")
        p.add_argument("--json", action="store_true", help="JSON output")
        return p

    with_file(sub.add_parser("validate", help="parse and validate an instance file"))
    with_file(sub.add_parser("spec", help="graded prime spectrum and topology dump"))
    with_file(sub.add_parser("sspec", help="graded second spectrum dump"))
    socle = with_file(sub.add_parser("socle", help="second and Zariski socles"))
    socle.add_argument("--submodule", required=True,
                       help="comma-separated element indices; the smallest graded "
                            "submodule containing them is used")

    verify = sub.add_parser("verify", help="run verification suites")
    verify.add_argument("--suite", help="suite id or id prefix filter")
    verify.add_argument("--corpus",
                        help="generate a corpus RING,MODULE,GROUP,COUNT "
                             "(fixtures only when omitted)")
    verify.add_argument("--seed", type=int, help="corpus seed (recorded in reports)")
    verify.add_argument("--jobs", type=int, default=1, help="parallel workers")
    verify.add_argument("--json", action="store_true", help="JSON report")
    verify.add_argument("--timings", action="store_true",
                        help="include wall-clock row timings (breaks byte determinism)")
    verify.add_argument("--out", help="write the report to a file")

    search = sub.add_parser("search", help="bounded counterexample search")
    search.add_argument("property", choices=SEARCH_PROPERTIES)
    search.add_argument("--corpus", help="bounds RING,MODULE,GROUP,COUNT")
    search.add_argument("--seed", type=int, help="corpus seed")
    search.add_argument("--json", action="store_true", help="JSON output")

    gen = sub.add_parser("gen", help="generate corpus instance files")
    gen.add_argument("--corpus", help="bounds RING,MODULE,GROUP,COUNT")
    gen.add_argument("--seed", type=int, help="corpus seed")
    gen.add_argument("--out", help="directory for instance files (stdout JSON if omitted)")

    return parser


_COMMANDS = {
    "validate": _cmd_validate,
    "spec": _cmd_spec,
    "sspec": _cmd_sspec,
    "socle": _cmd_socle,
    "verify": _cmd_verify,
    "search": _cmd_search,
    "gen": _cmd_gen,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ParseError, ValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except GradedAlgebraError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
