"""Batch command line: JSON in, one JSON document out.

Every subcommand reads its payloads from flag values (inline JSON, ``@file``,
or ``-`` for stdin), runs the corresponding library operation, and prints a
single JSON document to stdout. ``--pretty`` adds aligned tables on stderr.
Output is deterministic: identical invocations produce identical bytes.

Exit codes: 0 success, 1 invalid input, 2 guard exceeded, 3 verification
failure (a checked identity did not hold exactly).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .checks import SUITES, run_suite
from .enumerator import (
    EXPANSION_GUARD,
    linear_enumerator,
    macwilliams_transform,
    product_enumerator,
    product_transform,
    symmetrized_enumerator,
    symmetrized_transform,
)
from .errors import GuardExceeded, InputError, VerificationFailure
from .group import ELEMENT_GUARD, SUBGROUP_GUARD, all_subgroups, dual_code
from .induced import (
    check_product_duality,
    check_symmetrized_duality,
    power_group,
    product_partition,
    symmetrized_partition,
)
from .partition import (
    Partition,
    dual_partition,
    is_reflexive,
    krawtchouk,
)
from .poset import (
    hierarchical_krawtchouk,
    is_hierarchical,
    poset_duality_check,
    poset_krawtchouk_bruteforce,
    poset_partition,
    poset_weight,
)
from .serialization import (
    code_from_json,
    code_to_json,
    element_to_json,
    group_from_json,
    group_to_json,
    krawtchouk_to_json,
    linear_enumerator_to_json,
    partition_from_json,
    partition_to_json,
    poset_from_json,
    poset_to_json,
    product_enumerator_to_json,
    symmetrized_enumerator_to_json,
)


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors, which collides with the
    # guard-exceeded code; route everything through InputError instead
    def error(self, message: str) -> None:  # type: ignore[override]
        raise InputError(message)


def _load_json(text: str) -> Any:
    if text == "-":
        text = sys.stdin.read()
    elif text.startswith("@"):
        try:
            with open(text[1:], "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {text[1:]}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc


def _group(args: argparse.Namespace):
    return group_from_json(_load_json(args.group))


def _element_guard(args: argparse.Namespace) -> int:
    return args.max_group if args.max_group else ELEMENT_GUARD


def _subgroup_guard(args: argparse.Namespace) -> int:
    return args.max_group if args.max_group else SUBGROUP_GUARD


def _expansion_guard_value(args: argparse.Namespace) -> int:
    return args.max_expansion if getattr(args, "max_expansion", None) else EXPANSION_GUARD


# ---------------------------------------------------------------------------
# handlers; each returns (document, exit_code)


def _cmd_dual(args) -> tuple[dict, int]:
    grp = _group(args)
    part = partition_from_json(_load_json(args.partition), grp)
    ms = _element_guard(args)
    dual = dual_partition(part, ms)
    matrix = krawtchouk(part, dual, max_size=ms)
    return {
        "command": "dual",
        "group": group_to_json(grp),
        "partition": partition_to_json(part),
        "dual": partition_to_json(dual),
        "reflexive": dual.num_blocks == part.num_blocks,
        "krawtchouk": krawtchouk_to_json(matrix),
    }, 0


def _cmd_bidual(args) -> tuple[dict, int]:
    grp = _group(args)
    part = partition_from_json(_load_json(args.partition), grp)
    ms = _element_guard(args)
    dual = dual_partition(part, ms)
    dd = dual_partition(dual, ms)
    return {
        "command": "bidual",
        "group": group_to_json(grp),
        "partition": partition_to_json(part),
        "dual": partition_to_json(dual),
        "bidual": partition_to_json(dd),
        "reflexive": dd == part,
    }, 0


def _cmd_reflexive(args) -> tuple[dict, int]:
    grp = _group(args)
    part = partition_from_json(_load_json(args.partition), grp)
    ms = _element_guard(args)
    dual = dual_partition(part, ms)
    dd = dual_partition(dual, ms)
    return {
        "command": "reflexive",
        "group": group_to_json(grp),
        "partition": partition_to_json(part),
        "reflexive": dual.num_blocks == part.num_blocks,
        "partition_blocks": part.num_blocks,
        "dual_blocks": dual.num_blocks,
        "bidual": partition_to_json(dd),
    }, 0


def _cmd_krawtchouk(args) -> tuple[dict, int]:
    grp = _group(args)
    part = partition_from_json(_load_json(args.partition), grp)
    ms = _element_guard(args)
    if args.char_partition:
        char_part = partition_from_json(_load_json(args.char_partition), grp)
    else:
        char_part = dual_partition(part, ms)
    matrix = krawtchouk(part, char_part, max_size=ms)
    return {
        "command": "krawtchouk",
        "group": group_to_json(grp),
        "partition": partition_to_json(part),
        "char_partition": partition_to_json(char_part),
        "krawtchouk": krawtchouk_to_json(matrix),
    }, 0


def _cmd_macwilliams(args) -> tuple[dict, int]:
    grp = _group(args)
    char_part = partition_from_json(_load_json(args.partition), grp)
    code = code_from_json(_load_json(args.code), grp)
    ms = _element_guard(args)
    prim = dual_partition(char_part, ms)
    matrix = krawtchouk(char_part, prim, max_size=ms)
    counts = linear_enumerator(code, prim)
    out = macwilliams_transform(counts, matrix, code.size)
    perp = dual_code(grp, code, ms)
    direct = linear_enumerator(perp, char_part)
    if out != direct:
        raise VerificationFailure("transformed distribution differs from the dual code's")
    return {
        "command": "macwilliams",
        "group": group_to_json(grp),
        "char_partition": partition_to_json(char_part),
        "primal_partition": partition_to_json(prim),
        "code": code_to_json(code, include_elements=True),
        "a": linear_enumerator_to_json(counts),
        "krawtchouk": krawtchouk_to_json(matrix),
        "b": linear_enumerator_to_json(out),
        "dual_code": code_to_json(perp, include_elements=True),
        "verified": True,
    }, 0


def _induced_transform_fields(args, base: Partition, copies: int, induced_kind: str,
                              doc: dict) -> None:
    """Shared --code handling for product and symmetrize."""
    ms = _element_guard(args)
    big = power_group(base.group, copies)
    code = code_from_json(_load_json(args.code), big)
    if not is_reflexive(base, ms):
        raise InputError("the base partition must be reflexive to transform a code")
    dual_base = dual_partition(base, ms)
    matrix = krawtchouk(dual_base, base, max_size=ms)
    perp = dual_code(big, code, ms)
    guard = _expansion_guard_value(args)
    if induced_kind == "product":
        counts = product_enumerator(code, [base] * copies)
        out = product_transform(counts, [matrix] * copies, code.size, guard)
        direct = product_enumerator(perp, [dual_base] * copies)
        to_json = product_enumerator_to_json
    else:
        counts = symmetrized_enumerator(code, base, copies)
        out = symmetrized_transform(counts, matrix, code.size, guard)
        direct = symmetrized_enumerator(perp, dual_base, copies)
        to_json = symmetrized_enumerator_to_json
    if out.counts != direct.counts:
        raise VerificationFailure("transformed distribution differs from the dual code's")
    doc["code"] = code_to_json(code, include_elements=False)
    doc["code_size"] = code.size
    doc["enumerator"] = to_json(counts)
    doc["factor_krawtchouk"] = krawtchouk_to_json(matrix)
    doc["transform"] = to_json(out)
    doc["verified"] = True


def _cmd_product(args) -> tuple[dict, int]:
    grp = _group(args)
    base = partition_from_json(_load_json(args.partition), grp)
    copies = args.copies
    if copies < 1:
        raise InputError("--copies must be at least 1")
    ms = _element_guard(args)
    parts = [base] * copies
    induced = product_partition(parts, ms)
    doc = {
        "command": "product",
        "base_group": group_to_json(grp),
        "base_partition": partition_to_json(base),
        "copies": copies,
        "group": group_to_json(induced.group),
        "partition": partition_to_json(induced),
    }
    if args.check:
        witness = check_product_duality(parts, ms)
        doc["duality"] = {
            "commutes": witness is None,
            "witness": None if witness is None else [element_to_json(x) for x in witness],
        }
    if args.code:
        _induced_transform_fields(args, base, copies, "product", doc)
    return doc, 0


def _cmd_symmetrize(args) -> tuple[dict, int]:
    grp = _group(args)
    base = partition_from_json(_load_json(args.partition), grp)
    copies = args.copies
    if copies < 1:
        raise InputError("--copies must be at least 1")
    ms = _element_guard(args)
    induced = symmetrized_partition(base, copies, ms)
    doc = {
        "command": "symmetrize",
        "base_group": group_to_json(grp),
        "base_partition": partition_to_json(base),
        "copies": copies,
        "group": group_to_json(induced.group),
        "partition": partition_to_json(induced),
    }
    if args.check:
        witness = check_symmetrized_duality(base, copies, ms)
        doc["duality"] = {
            "commutes": witness is None,
            "witness": None if witness is None else [element_to_json(x) for x in witness],
        }
    if args.code:
        _induced_transform_fields(args, base, copies, "symmetrized", doc)
    return doc, 0


def _cmd_poset_partition(args) -> tuple[dict, int]:
    grp = _group(args)
    p = poset_from_json(_load_json(args.poset))
    ms = _element_guard(args)
    part = poset_partition(p, grp, ms)
    by_weight: dict[int, list] = {}
    for block in part.blocks:
        w = poset_weight(p, grp, block[0])
        by_weight[w] = [element_to_json(g) for g in block]
    return {
        "command": "poset-partition",
        "group": group_to_json(grp),
        "poset": poset_to_json(p),
        "partition": partition_to_json(part),
        "by_weight": [by_weight[w] for w in sorted(by_weight)],
    }, 0


def _cmd_poset_krawtchouk(args) -> tuple[dict, int]:
    grp = _group(args)
    p = poset_from_json(_load_json(args.poset))
    ms = _element_guard(args)
    prim = poset_partition(p, grp, ms)
    report = poset_duality_check(p, grp, ms)
    if not report.transposed_refines_dual:
        raise InputError(
            "the transposed order's weight partition does not refine the dual; "
            "the matrix is not well defined for this poset and carrier"
        )
    brute = poset_krawtchouk_bruteforce(p, grp, ms)
    doc: dict[str, Any] = {
        "command": "poset-krawtchouk",
        "group": group_to_json(grp),
        "poset": poset_to_json(p),
        "matrix": [list(row) for row in brute],
        "closed_form": None,
        "closed_form_matches": None,
    }
    shape = is_hierarchical(p)
    if shape is not None and report.levels_equal_order:
        qs = []
        for lv in range(len(shape.levels)):
            coord = shape.level_of.index(lv)
            qs.append(grp.orders[coord])
        closed = hierarchical_krawtchouk(shape.levels, tuple(qs))
        doc["closed_form"] = [list(row) for row in closed]
        doc["closed_form_matches"] = closed == brute
        if closed != brute:
            raise VerificationFailure("closed-form matrix differs from brute force")
    return doc, 0


def _cmd_poset_check(args) -> tuple[dict, int]:
    grp = _group(args)
    p = poset_from_json(_load_json(args.poset))
    ms = _element_guard(args)
    report = poset_duality_check(p, grp, ms)
    return {
        "command": "poset-check",
        "group": group_to_json(grp),
        "poset": poset_to_json(p),
        "equal": report.equal,
        "dual_refines_transposed": report.dual_refines_transposed,
        "transposed_refines_dual": report.transposed_refines_dual,
        "hierarchical": report.shape is not None,
        "levels": None if report.shape is None else list(report.shape.levels),
        "levels_equal_order": report.levels_equal_order,
    }, 0


def _cmd_subgroups(args) -> tuple[dict, int]:
    grp = _group(args)
    subs = all_subgroups(grp, _subgroup_guard(args))
    rows = []
    for code in subs:
        perp = dual_code(grp, code)
        row = code_to_json(code, include_elements=args.include_elements)
        row["size"] = code.size
        row["dual_generators"] = [element_to_json(g) for g in perp.generators]
        rows.append(row)
    return {
        "command": "subgroups",
        "group": group_to_json(grp),
        "count": len(subs),
        "subgroups": rows,
    }, 0


def _cmd_check(args) -> tuple[dict, int]:
    results = run_suite(args.suite)
    failed = sum(1 for r in results if not r.passed)
    doc = {
        "command": "check",
        "suite": args.suite,
        "results": [
            {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
        ],
        "failed": failed,
    }
    return doc, (3 if failed else 0)


# ---------------------------------------------------------------------------
# pretty tables


def _fmt_element(g: tuple) -> str:
    if len(g) == 1:
        return str(g[0])
    return "(" + ",".join(str(x) for x in g) + ")"


def _fmt_blocks(blocks: list) -> str:
    return " | ".join(
        "{" + ",".join(_fmt_element(tuple(g)) for g in b) + "}" for b in blocks
    )


def _fmt_matrix(rows: list) -> list[str]:
    cells = [[str(x) if not isinstance(x, dict) else "~" for x in row] for row in rows]
    if not cells:
        return []
    widths = [max(len(r[j]) for r in cells) for j in range(len(cells[0]))]
    return [
        "[ " + "  ".join(c.rjust(w) for c, w in zip(row, widths)) + " ]" for row in cells
    ]


def _pretty(doc: dict, out) -> None:
    for key in ("partition", "base_partition", "dual", "bidual", "char_partition",
                "primal_partition"):
        if key in doc and isinstance(doc[key], dict):
            print(f"{key:<18} {_fmt_blocks(doc[key]['blocks'])}", file=out)
    for key in ("krawtchouk", "factor_krawtchouk"):
        if key in doc and isinstance(doc[key], dict):
            print(f"{key}:", file=out)
            for line in _fmt_matrix(doc[key]["entries"]):
                print("  " + line, file=out)
    for key in ("matrix", "closed_form"):
        if isinstance(doc.get(key), list):
            print(f"{key}:", file=out)
            for line in _fmt_matrix(doc[key]):
                print("  " + line, file=out)
    for key in ("reflexive", "equal", "hierarchical", "verified", "failed"):
        if key in doc:
            print(f"{key:<18} {doc[key]}", file=out)
    if "a" in doc and "b" in doc:
        print(f"{'a':<18} {doc['a']}", file=out)
        print(f"{'b':<18} {doc['b']}", file=out)
    for row in doc.get("results", []):
        mark = "PASS" if row["passed"] else "FAIL"
        print(f"{mark} {row['name']} ({row['detail']})", file=out)


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dualpart", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="cmd", required=True)

    def common(p, group=True, partition=False, poset=False, expansion=False):
        if group:
            p.add_argument("--group", required=True,
                           help="carrier JSON, e.g. '{\"orders\":[6]}'")
        if partition:
            p.add_argument("--partition", required=True,
                           help="partition JSON: {\"blocks\":[[[0]],[[1],[2]]]}")
        if poset:
            p.add_argument("--poset", required=True,
                           help="poset JSON: {\"n\":2, \"cover\":[[1,2]]} (1-based)")
        if expansion:
            p.add_argument("--max-expansion", type=int, default=None,
                           help="override the monomial-expansion guard")
        p.add_argument("--max-group", type=int, default=None,
                       help="override the element/subgroup enumeration guards")
        p.add_argument("--pretty", action="store_true",
                       help="also print aligned tables on stderr")

    p = sub.add_parser("dual", help="dual partition, Krawtchouk matrix, reflexivity")
    common(p, partition=True)
    p.set_defaults(handler=_cmd_dual)

    p = sub.add_parser("bidual", help="dual applied twice")
    common(p, partition=True)
    p.set_defaults(handler=_cmd_bidual)

    p = sub.add_parser("reflexive", help="reflexivity test with bidual witness")
    common(p, partition=True)
    p.set_defaults(handler=_cmd_reflexive)

    p = sub.add_parser("krawtchouk", help="block-sum matrix of a partition pair")
    common(p, partition=True)
    p.add_argument("--char-partition", default=None,
                   help="character-side partition JSON (default: the dual)")
    p.set_defaults(handler=_cmd_krawtchouk)

    p = sub.add_parser("macwilliams",
                       help="distribution transform of a code, verified against its dual")
    common(p, partition=True)
    p.add_argument("--code", required=True,
                   help="code JSON: {\"generators\":[[3]]}")
    p.set_defaults(handler=_cmd_macwilliams)

    p = sub.add_parser("product", help="product partition on n copies of a carrier")
    common(p, partition=True, expansion=True)
    p.add_argument("--copies", type=int, required=True)
    p.add_argument("--check", action="store_true",
                   help="report whether dualization commutes with the construction")
    p.add_argument("--code", default=None,
                   help="optional code JSON on the induced carrier; runs the transform")
    p.set_defaults(handler=_cmd_product)

    p = sub.add_parser("symmetrize",
                       help="symmetrized partition on n copies of a carrier")
    common(p, partition=True, expansion=True)
    p.add_argument("--copies", type=int, required=True)
    p.add_argument("--check", action="store_true",
                   help="report whether dualization commutes with the construction")
    p.add_argument("--code", default=None,
                   help="optional code JSON on the induced carrier; runs the transform")
    p.set_defaults(handler=_cmd_symmetrize)

    p = sub.add_parser("poset-partition", help="weight-fiber partition of a poset order")
    common(p, poset=True)
    p.set_defaults(handler=_cmd_poset_partition)

    p = sub.add_parser("poset-krawtchouk",
                       help="weight-order matrix, with closed form when hierarchical")
    common(p, poset=True)
    p.set_defaults(handler=_cmd_poset_krawtchouk)

    p = sub.add_parser("poset-check",
                       help="compare the dualized weight partition with the transposed order's")
    common(p, poset=True)
    p.set_defaults(handler=_cmd_poset_check)

    p = sub.add_parser("subgroups", help="enumerate subgroups with dual generators")
    common(p)
    p.add_argument("--include-elements", action="store_true")
    p.set_defaults(handler=_cmd_subgroups)

    p = sub.add_parser("check", help="run the built-in verification suites")
    p.add_argument("--suite", default="all", choices=["all", *SUITES])
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(handler=_cmd_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        doc, code = args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return 2
    except VerificationFailure as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 3
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")
    if args.pretty:
        _pretty(doc, sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
