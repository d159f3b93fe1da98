"""Command-line interface: every operation, machine-readable certificates.

Each verifying subcommand prints a JSON certificate with stable key
order.  Exit codes: 0 all checks passed, 1 a mathematical certificate
failed (including a flip-uniqueness violation), 2 bad input or usage.

Commands that draw random samples require an explicit --seed; identical
arguments and seed give byte-identical output regardless of the worker
count.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
import time
from typing import Optional

import numpy as np

from . import __version__, algebra, catalog, symmetry
from .context import standard_context
from .enumeration import enumerate_partitions
from .flips import (
    AnchorConflictError,
    FlipUniquenessError,
    OddCycleWitness,
    check_bipartite,
    check_connected,
    flip,
    standard_anchors,
    verify_flip_soundness,
)
from .model import EdgePartition

PASS, FAIL = "pass", "fail"
EXIT_OK, EXIT_CERT_FAIL, EXIT_USAGE = 0, 1, 2


def _certificate(command, parameters, outcome, numbers, witnesses, t0) -> dict:
    return {
        "command": command,
        "library_version": __version__,
        "numbers": numbers,
        "outcome": outcome,
        "parameters": parameters,
        "wall_time_s": round(time.time() - t0, 3),
        "witnesses": witnesses,
    }


def _emit(cert: dict):
    print(json.dumps(cert, sort_keys=True))


def _load_partition(path: str) -> EdgePartition:
    with open(path) as fh:
        return EdgePartition.from_json_dict(json.load(fh))


def _load_anchors(path: Optional[str], pset):
    if path is None:
        return standard_anchors(pset)
    with open(path) as fh:
        docs = json.load(fh)
    return [
        (EdgePartition.from_json_dict(doc["partition"]), int(doc["sign"])) for doc in docs
    ]


def _partition_line(p: EdgePartition) -> str:
    return json.dumps(p.to_json_dict(), sort_keys=True, separators=(",", ":"))


# --------------------------------------------------------------------------
# subcommand handlers

def cmd_enumerate(args) -> int:
    t0 = time.time()
    pset = enumerate_partitions(
        args.d, cycle_free=args.cycle_free, workers=args.workers, allow_large=args.force
    )
    if args.count_only:
        print(len(pset))
        return EXIT_OK
    lines = (_partition_line(p) for p in pset)
    if args.out:
        with open(args.out, "w") as fh:
            for line in lines:
                fh.write(line + "\n")
        _emit(
            _certificate(
                "enumerate",
                {"d": args.d, "cycle_free": args.cycle_free, "out": args.out},
                PASS,
                {"count": len(pset)},
                [],
                t0,
            )
        )
    else:
        for line in lines:
            print(line)
    return EXIT_OK


def cmd_flip(args) -> int:
    partition = _load_partition(args.partition)
    if partition.d != args.d:
        raise ValueError(f"partition has d={partition.d}, command asked for d={args.d}")
    flipped = flip(partition, tuple(args.face))
    print(_partition_line(flipped))
    return EXIT_OK


def cmd_flip_graph(args) -> int:
    t0 = time.time()
    checks = [c.strip() for c in args.check.split(",") if c.strip()]
    unknown = set(checks) - {"bipartite", "connected"}
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    ctx = standard_context(args.d, workers=args.workers)
    soundness = verify_flip_soundness(ctx.pset)
    numbers = {
        "nodes": len(ctx.pset),
        "faces": ctx.graph.adjacency.shape[1],
        "flip_pairs_checked": soundness.pairs_checked,
        "flips_changing_two_edges": soundness.diff_two,
        "flips_changing_three_edges": soundness.diff_three,
    }
    witnesses = []
    outcome = PASS if soundness.ok else FAIL
    if not soundness.ok:
        witnesses.append({"property": "flip_uniqueness_and_involution"})
    if "bipartite" in checks:
        anchors = _load_anchors(args.anchors, ctx.pset)
        result = check_bipartite(ctx.graph, anchors)
        if isinstance(result, OddCycleWitness):
            outcome = FAIL
            numbers["bipartite"] = 0
            witnesses.append(
                {
                    "property": "signature_existence",
                    "odd_cycle_codes": [
                        int(ctx.pset.codes[i]) for i in result.nodes
                    ],
                }
            )
        else:
            plus, minus = result.class_sizes()
            numbers["bipartite"] = 1
            numbers["class_plus"] = plus
            numbers["class_minus"] = minus
            alternating = bool(
                (result.signs[ctx.graph.adjacency] == -result.signs[:, None]).all()
            )
            numbers["alternating_edges"] = int(ctx.graph.adjacency.size)
            if not alternating:
                outcome = FAIL
                witnesses.append({"property": "signature_alternation"})
    if "connected" in checks:
        conn = check_connected(ctx.graph)
        numbers["components"] = conn.n_components
        numbers["dimension_upper_bound_certified"] = int(conn.transitive)
    _emit(
        _certificate(
            "flip-graph",
            {"d": args.d, "check": checks, "anchors": args.anchors},
            outcome,
            numbers,
            witnesses,
            t0,
        )
    )
    return EXIT_OK if outcome == PASS else EXIT_CERT_FAIL


def cmd_orbits(args) -> int:
    t0 = time.time()
    pset = standard_context(args.d, workers=args.workers).pset
    table = symmetry.orbit_decomposition(pset)
    group_order = math.factorial(2 * args.d) * math.factorial(args.d)
    identity_ok = all(e.size * e.stabilizer_order == group_order for e in table.entries)
    sizes_ok = sum(e.size for e in table.entries) == len(pset)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(
                ["orbit_id", "rep_code", "size", "stab_order", "type1", "type2", "type3"]
            )
            for e in table.entries:
                shapes = list(e.type_triple) or ["", "", ""]
                writer.writerow(
                    [e.orbit_id, e.representative.canonical_code(), e.size, e.stabilizer_order]
                    + shapes
                )
    outcome = PASS if (identity_ok and sizes_ok) else FAIL
    _emit(
        _certificate(
            "orbits",
            {"d": args.d, "out": args.out},
            outcome,
            {
                "orbits": len(table.entries),
                "members": len(pset),
                "orbit_stabilizer_identity": int(identity_ok),
                "sizes_sum_to_members": int(sizes_ok),
            },
            [] if outcome == PASS else [{"property": "orbit_stabilizer_identity"}],
            t0,
        )
    )
    return EXIT_OK if outcome == PASS else EXIT_CERT_FAIL


def cmd_verify_appendix(args) -> int:
    t0 = time.time()
    ctx = standard_context(3, workers=args.workers)
    table = symmetry.orbit_decomposition(ctx.pset)
    match = symmetry.match_catalog(table)
    eps = symmetry.epsilon_formula_check(ctx.signature, args.samples, args.seed)
    outcome = PASS if (match.ok and eps.ok) else FAIL
    witnesses = []
    if not match.ok:
        witnesses.append({"property": "orbit_catalog_match", "diffs": match.mismatches})
    if not eps.ok:
        witnesses.append(
            {
                "property": "signature_parity_formula",
                "violations": [
                    {"sigma": list(s), "tau": list(t), "reference": i, "got": g, "expected": e}
                    for (s, t, i, g, e) in eps.violations
                ],
            }
        )
    _emit(
        _certificate(
            "verify-appendix",
            {"samples": args.samples, "seed": args.seed},
            outcome,
            {
                "references_checked": match.checked,
                "catalog_mismatches": len(match.mismatches),
                "epsilon_samples": eps.samples,
                "epsilon_violations": len(eps.violations),
            },
            witnesses,
            t0,
        )
    )
    return EXIT_OK if outcome == PASS else EXIT_CERT_FAIL


def cmd_signature(args) -> int:
    partition = _load_partition(args.partition)
    if partition.d != args.d:
        raise ValueError(f"partition has d={partition.d}, command asked for d={args.d}")
    ctx = standard_context(partition.d)
    table = ctx.signature
    if args.anchors:
        anchors = _load_anchors(args.anchors, ctx.pset)
        table = check_bipartite(ctx.graph, anchors)
        if isinstance(table, OddCycleWitness):  # pragma: no cover
            raise RuntimeError("flip graph unexpectedly not two-colorable")
    value = table.signature(partition)
    print(f"{value:+d}")
    return EXIT_OK


def cmd_det(args) -> int:
    with open(args.input) as fh:
        vectors, d, p = algebra.tensor_from_json(json.load(fh))
    ctx = standard_context(d)
    result = algebra.det_eval(vectors, ctx.pset, ctx.signature, p=p)
    print(algebra.format_scalar(result))
    return EXIT_OK


def cmd_verify_relations(args) -> int:
    t0 = time.time()
    ctx = standard_context(args.d, workers=args.workers)
    report = algebra.verify_relations(
        ctx.pset, ctx.signature, sample=args.sample, seed=args.seed
    )
    outcome = PASS if report.ok else FAIL
    witnesses = (
        []
        if report.ok
        else [
            {
                "property": "relation_vanishing",
                "instances": [
                    {
                        "face": list(w.face),
                        "color_multiset": list(w.color_multiset),
                        "context": list(w.context),
                    }
                    for w in report.witnesses
                ],
            }
        ]
    )
    _emit(
        _certificate(
            "verify-relations",
            {"d": args.d, "sample": args.sample, "seed": args.seed},
            outcome,
            {"instances_checked": report.instances_checked, "violations": report.violations},
            witnesses,
            t0,
        )
    )
    return EXIT_OK if outcome == PASS else EXIT_CERT_FAIL


def cmd_rank(args) -> int:
    if args.d != 2:
        raise ValueError("the rank certificate is implemented for d = 2 only")
    print(algebra.rank_certify_d2(args.p))
    return EXIT_OK


def cmd_emat(args) -> int:
    partition = algebra.unit_partition(args.d)
    print(_partition_line(partition))
    print(algebra.unit_matrix_text(args.d))
    if args.det_input:
        doc = algebra.tensor_to_json(algebra.unit_tensor(args.d), args.d, 2 * args.d)
        with open(args.det_input, "w") as fh:
            json.dump(doc, fh, sort_keys=True)
    return EXIT_OK


def cmd_certify_all(args) -> int:
    failures = 0

    def stage(cert: dict):
        nonlocal failures
        _emit(cert)
        if cert["outcome"] != PASS:
            failures += 1

    d = args.d
    t0 = time.time()
    pset_all = enumerate_partitions(d, workers=args.workers)
    pset = enumerate_partitions(d, cycle_free=True, workers=args.workers)
    expected = {2: (20, 12), 3: (756756, 66240)}.get(d)
    counts_ok = expected is None or (len(pset_all), len(pset)) == expected
    stage(
        _certificate(
            "certify-all/enumerate",
            {"d": d},
            PASS if counts_ok else FAIL,
            {"homogeneous": len(pset_all), "cycle_free": len(pset)},
            [] if counts_ok else [{"property": "enumeration_counts", "expected": list(expected)}],
            t0,
        )
    )

    t0 = time.time()
    ctx = standard_context(d, workers=args.workers)
    soundness = verify_flip_soundness(ctx.pset)
    stage(
        _certificate(
            "certify-all/flip-graph",
            {"d": d},
            PASS if soundness.ok else FAIL,
            {
                "flip_pairs_checked": soundness.pairs_checked,
                "flips_changing_two_edges": soundness.diff_two,
                "flips_changing_three_edges": soundness.diff_three,
                "involution": int(soundness.involution_ok),
            },
            [],
            t0,
        )
    )

    t0 = time.time()
    plus, minus = ctx.signature.class_sizes()
    alternating = bool(
        (ctx.signature.signs[ctx.graph.adjacency] == -ctx.signature.signs[:, None]).all()
    )
    conn = check_connected(ctx.graph)
    stage(
        _certificate(
            "certify-all/bipartite-connected",
            {"d": d},
            PASS if alternating else FAIL,
            {
                "class_plus": plus,
                "class_minus": minus,
                "components": conn.n_components,
                "dimension_upper_bound_certified": int(conn.transitive),
            },
            [],
            t0,
        )
    )

    t0 = time.time()
    table = symmetry.orbit_decomposition(ctx.pset)
    group_order = math.factorial(2 * d) * math.factorial(d)
    identity_ok = all(e.size * e.stabilizer_order == group_order for e in table.entries)
    stage(
        _certificate(
            "certify-all/orbits",
            {"d": d},
            PASS if identity_ok else FAIL,
            {"orbits": len(table.entries), "orbit_stabilizer_identity": int(identity_ok)},
            [],
            t0,
        )
    )

    if d == 3:
        t0 = time.time()
        match = symmetry.match_catalog(table)
        stage(
            _certificate(
                "certify-all/catalog-match",
                {"d": d},
                PASS if match.ok else FAIL,
                {"references_checked": match.checked, "mismatches": len(match.mismatches)},
                [] if match.ok else [{"property": "orbit_catalog_match", "diffs": match.mismatches}],
                t0,
            )
        )

        t0 = time.time()
        eps = symmetry.epsilon_formula_check(ctx.signature, args.samples, args.seed)
        stage(
            _certificate(
                "certify-all/epsilon-formula",
                {"samples": args.samples, "seed": args.seed},
                PASS if eps.ok else FAIL,
                {"epsilon_samples": eps.samples, "epsilon_violations": len(eps.violations)},
                [],
                t0,
            )
        )

    t0 = time.time()
    det_value = algebra.det_eval(algebra.unit_tensor(d), ctx.pset, ctx.signature)
    stage(
        _certificate(
            "certify-all/determinant",
            {"d": d},
            PASS if det_value == 1 else FAIL,
            {"det_of_generator": algebra.format_scalar(det_value)},
            [] if det_value == 1 else [{"property": "determinant_normalization"}],
            t0,
        )
    )

    t0 = time.time()
    report = algebra.verify_relations(
        ctx.pset, ctx.signature, sample=args.sample_relations, seed=args.seed
    )
    stage(
        _certificate(
            "certify-all/relations",
            {"d": d, "sample": args.sample_relations},
            PASS if report.ok else FAIL,
            {"instances_checked": report.instances_checked, "violations": report.violations},
            [],
            t0,
        )
    )
    return EXIT_OK if failures == 0 else EXIT_CERT_FAIL


# --------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treedet",
        description="Certified combinatorics of homogeneous cycle-free edge "
        "partitions of complete graphs.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_workers(p):
        p.add_argument(
            "--workers",
            type=int,
            default=os.cpu_count() or 1,
            help="worker count (default: available parallelism); results are "
            "identical for any value",
        )

    p = sub.add_parser("enumerate", help="enumerate homogeneous d-partitions of K_{2d}")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--cycle-free", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--out", help="write JSONL partition objects here")
    p.add_argument("--force", action="store_true", help="override the d <= 3 feasibility guard")
    add_workers(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("flip", help="flip a partition across a face")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--partition", required=True, help="partition JSON file")
    p.add_argument("--face", type=int, nargs=3, required=True, metavar=("X", "Y", "Z"))
    p.set_defaults(func=cmd_flip)

    p = sub.add_parser("flip-graph", help="build the flip graph and emit certificates")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--check", default="bipartite,connected")
    p.add_argument("--anchors", help="JSON list of {partition, sign} anchor objects")
    add_workers(p)
    p.set_defaults(func=cmd_flip_graph)

    p = sub.add_parser("orbits", help="orbit decomposition under vertex and color relabeling")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--out", help="write the orbit table as CSV here")
    add_workers(p)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser(
        "verify-appendix",
        help="check the d = 3 orbit catalog and the parity form of the signature",
    )
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, required=True)
    add_workers(p)
    p.set_defaults(func=cmd_verify_appendix)

    p = sub.add_parser("signature", help="sign of one partition")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--partition", required=True)
    p.add_argument("--anchors")
    p.set_defaults(func=cmd_signature)

    p = sub.add_parser("det", help="evaluate the determinant form on a tensor file")
    p.add_argument("--input", required=True, help="tensor JSON file")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("verify-relations", help="sweep the face relations")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--sample", type=int, help="sampled mode instead of the full sweep")
    p.add_argument("--seed", type=int, help="seed, required in sampled mode")
    add_workers(p)
    p.set_defaults(func=cmd_verify_relations)

    p = sub.add_parser("rank", help="quotient dimension at d = 2 by elimination over GF(p)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("emat", help="print the nested generator partition and matrix")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--det-input", help="also write the generator tensor JSON here")
    p.set_defaults(func=cmd_emat)

    p = sub.add_parser("certify-all", help="run the whole certificate pipeline")
    p.add_argument("--d", type=int, default=3, choices=(2, 3))
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--samples", type=int, default=10000, help="signature-formula samples")
    p.add_argument(
        "--sample-relations",
        type=int,
        default=None,
        dest="sample_relations",
        help="sampled relation sweep instead of the full one",
    )
    add_workers(p)
    p.set_defaults(func=cmd_certify_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "sample", None) is not None and getattr(args, "seed", None) is None:
        print("error: --sample requires --seed", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (FlipUniquenessError, AnchorConflictError) as exc:
        _emit(
            _certificate(
                args.command,
                {},
                FAIL,
                {},
                [{"property": "flip_uniqueness" if isinstance(exc, FlipUniquenessError) else "anchor_consistency", "detail": str(exc)}],
                time.time(),
            )
        )
        return EXIT_CERT_FAIL
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
