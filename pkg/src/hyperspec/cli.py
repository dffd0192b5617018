"""Command-line front end.

Every subcommand reads hypergraphs in the line-based text format,
computes exactly, and emits JSON (machine format, byte-deterministic)
or a flat table (human convenience).  Exit codes: 0 success, 2 bad
input, 3 a configured cap refused the work, 4 a mathematical
precondition failed; the failing condition and witness go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

from .analysis import (
    are_cospectral,
    are_e_cospectral,
    cospectral_invariant_scan,
    ds_verify,
    simplex_destruction_min,
)
from .config import RunConfig, config_from_env
from .errors import CapExceeded, HyperspecError, InputError, MathError
from .hypergraph import (
    Hypergraph,
    adjacency_tensor,
    count_simplices,
    format_hypergraph,
    parse_hypergraph,
    simplices,
)
from .polynomial import UniPoly
from .spectra import char_poly, e_char_poly
from .switching import (
    SwitchingPartition,
    example_pair,
    switch,
    validate,
    verify_similarity,
)


def _read_hypergraph(path: str) -> Hypergraph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_hypergraph(text)


def _poly_payload(poly: UniPoly) -> dict[str, Any]:
    return {
        "degree": poly.degree,
        "coefficients": list(poly.to_coeff_strings()),
    }


def _as_table(payload: dict[str, Any], indent: int = 0) -> str:
    lines: list[str] = []
    pad = "  " * indent
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_as_table(value, indent + 1).rstrip("\n"))
        elif isinstance(value, list):
            rendered = " ".join(
                json.dumps(v, sort_keys=True) if isinstance(v, (dict, list)) else str(v)
                for v in value
            )
            lines.append(f"{pad}{key}: [{rendered}]")
        else:
            lines.append(f"{pad}{key}: {value}")
    return "\n".join(lines) + "\n"


def _emit(payload: dict[str, Any], args: argparse.Namespace) -> None:
    if args.format == "json":
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        text = _as_table(payload)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_vertex_list(raw: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in raw.split(",") if part.strip())
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {raw!r}") from None


def _cmd_charpoly(args: argparse.Namespace, cfg: RunConfig) -> int:
    h = _read_hypergraph(args.file)
    poly = char_poly(adjacency_tensor(h), cfg)
    _emit(_poly_payload(poly), args)
    return 0


def _cmd_echarpoly(args: argparse.Namespace, cfg: RunConfig) -> int:
    h = _read_hypergraph(args.file)
    poly = e_char_poly(adjacency_tensor(h), cfg, normalize=not args.raw)
    _emit(_poly_payload(poly), args)
    return 0


def _cmd_cospectral(args: argparse.Namespace, cfg: RunConfig) -> int:
    g = _read_hypergraph(args.first)
    h = _read_hypergraph(args.second)
    payload: dict[str, Any] = {"cospectral": are_cospectral(g, h, cfg)}
    if args.e_char:
        payload["e_cospectral"] = are_e_cospectral(g, h, cfg)
    _emit(payload, args)
    return 0


def _cmd_simplices(args: argparse.Namespace, cfg: RunConfig) -> int:
    h = _read_hypergraph(args.file)
    found = list(simplices(h))
    _emit({"count": len(found), "simplices": [list(s) for s in found]}, args)
    return 0


def _cmd_verify_switch(args: argparse.Namespace, cfg: RunConfig) -> int:
    h = _read_hypergraph(args.file)
    p = SwitchingPartition.from_v1(h.n, _parse_vertex_list(args.v1))
    report = validate(h, p)
    g = switch(h, p)
    similarity = verify_similarity(h, g, p)
    payload: dict[str, Any] = {
        "verdict": similarity.ok,
        "switched_sets": [list(s) for s in report.switched_sets],
        "counts": {str(c): occurrences for c, occurrences in report.counts},
        "switched_text": format_hypergraph(g),
    }
    if args.expect:
        expected = _read_hypergraph(args.expect)
        payload["matches_expected"] = g == expected
    if not similarity.ok:
        payload["mismatch_index"] = list(similarity.first_mismatch or ())
    _emit(payload, args)
    return 0


def _cmd_example_pair(args: argparse.Namespace, cfg: RunConfig) -> int:
    family = (
        [_parse_vertex_list(raw) for raw in args.family_edge]
        if args.family_edge
        else None
    )
    h, g, p = example_pair(args.n, family)
    out_dir = args.dir or "."
    os.makedirs(out_dir, exist_ok=True)
    h_path = os.path.join(out_dir, "H.hg")
    g_path = os.path.join(out_dir, "G.hg")
    p_path = os.path.join(out_dir, "partition.json")
    with open(h_path, "w", encoding="utf-8") as fh:
        fh.write(format_hypergraph(h))
    with open(g_path, "w", encoding="utf-8") as fh:
        fh.write(format_hypergraph(g))
    with open(p_path, "w", encoding="utf-8") as fh:
        json.dump(
            {"v1": sorted(p.v1), "v2": sorted(p.v2)},
            fh,
            indent=2,
            sort_keys=True,
        )
        fh.write("\n")
    _emit(
        {
            "h_file": h_path,
            "g_file": g_path,
            "partition_file": p_path,
            "vertices": h.n,
            "h_edges": h.edge_count,
            "g_edges": g.edge_count,
        },
        args,
    )
    return 0


def _cmd_ds(args: argparse.Namespace, cfg: RunConfig) -> int:
    h = _read_hypergraph(args.file)
    fields = tuple(part for part in args.fingerprint.split(",") if part)
    verdict = ds_verify(
        h,
        cfg,
        fingerprint_fields=fields,
        checkpoint_path=args.checkpoint,
    )
    _emit(
        {
            "all_isomorphic": verdict.all_isomorphic,
            "mates": [sorted(map(list, g.edges)) for g in verdict.cospectral_mates],
            "candidates": verdict.candidates,
            "pruned": verdict.pruned,
            "polynomials_computed": verdict.polynomials_computed,
        },
        args,
    )
    return 0


def _cmd_invariant_scan(args: argparse.Namespace, cfg: RunConfig) -> int:
    report = cospectral_invariant_scan(
        args.n, args.k, cfg, checkpoint_path=args.checkpoint
    )
    _emit(
        {
            "total": report.total,
            "classes": report.class_count,
            "groups": [list(group) for group in report.groups],
            "violations": [
                {
                    "field": v.field,
                    "mask_a": v.mask_a,
                    "mask_b": v.mask_b,
                    "value_a": v.value_a,
                    "value_b": v.value_b,
                }
                for v in report.violations
            ],
            "polynomials_computed": report.polynomials_computed,
        },
        args,
    )
    return 0


def _cmd_simplex_bound(args: argparse.Namespace, cfg: RunConfig) -> int:
    report = simplex_destruction_min(args.n, args.k, args.r, cfg)
    _emit(
        {
            "minimum": report.minimum,
            "expected_minimum": report.expected_minimum,
            "matches_expected": report.matches_expected,
            "achiever_count": len(report.achievers),
            "achievers_are_exactly_common_core": report.achievers_are_exactly_common_core,
            "achievers": [
                [list(edge) for edge in chosen] for chosen in report.achievers
            ],
            "subsets_checked": report.subsets_checked,
        },
        args,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperspec",
        description="Exact spectra of uniform hypergraph adjacency tensors.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=1, help="worker count")
    common.add_argument("--degree-cap", type=int, default=RunConfig.degree_cap)
    common.add_argument("--dim-cap", type=int, default=RunConfig.dim_cap)
    common.add_argument(
        "--format", choices=("json", "table"), default="json", help="output format"
    )
    common.add_argument("--out", help="write output to this file instead of stdout")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "charpoly", parents=[common], help="characteristic polynomial of a file"
    )
    p.add_argument("file")
    p.set_defaults(func=_cmd_charpoly)

    p = sub.add_parser(
        "echarpoly", parents=[common], help="E-characteristic polynomial of a file"
    )
    p.add_argument("file")
    p.add_argument("--raw", action="store_true", help="skip content normalization")
    p.set_defaults(func=_cmd_echarpoly)

    p = sub.add_parser(
        "cospectral", parents=[common], help="compare two files' spectra"
    )
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument(
        "--e-char", action="store_true", help="also compare E-characteristic polynomials"
    )
    p.set_defaults(func=_cmd_cospectral)

    p = sub.add_parser("simplices", parents=[common], help="count and list simplices")
    p.add_argument("file")
    p.set_defaults(func=_cmd_simplices)

    p = sub.add_parser(
        "verify-switch",
        parents=[common],
        help="validate a partition, switch, and certify the similarity",
    )
    p.add_argument("file")
    p.add_argument("--v1", required=True, help="comma-separated vertex ids")
    p.add_argument("--expect", help="file the switched hypergraph must equal")
    p.set_defaults(func=_cmd_verify_switch)

    p = sub.add_parser(
        "example-pair",
        parents=[common],
        help="write a built-in switched pair H.hg / G.hg / partition.json",
    )
    p.add_argument("--n", type=int, required=True, help="chain length (>= 3)")
    p.add_argument("--dir", help="output directory (default: current)")
    p.add_argument(
        "--family-edge",
        action="append",
        help="replace the default chain family; repeatable, e.g. --family-edge 5,6,7",
    )
    p.set_defaults(func=_cmd_example_pair)

    p = sub.add_parser(
        "ds", parents=[common], help="search the universe for cospectral mates"
    )
    p.add_argument("file")
    p.add_argument("--checkpoint", help="JSON checkpoint path for resumable runs")
    p.add_argument(
        "--fingerprint",
        default="edges,simplices",
        help="comma list of pruning counts: edges,simplices",
    )
    p.set_defaults(func=_cmd_ds)

    p = sub.add_parser(
        "invariant-scan",
        parents=[common],
        help="verify cospectral mates share edge and simplex counts",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--checkpoint", help="JSON checkpoint path for resumable runs")
    p.set_defaults(func=_cmd_invariant_scan)

    p = sub.add_parser(
        "simplex-bound",
        parents=[common],
        help="minimum simplices destroyed by deleting r edges from the complete hypergraph",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=_cmd_simplex_bound)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    base = RunConfig(
        threads=max(1, args.threads),
        degree_cap=args.degree_cap,
        dim_cap=args.dim_cap,
    )
    try:
        cfg = config_from_env(base)
        return args.func(args, cfg)
    except InputError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except MathError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 4
    except HyperspecError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())
