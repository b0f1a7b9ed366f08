"""Command-line frontend: verification batteries and matrix dumps.

Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage
errors.  With --json the output is a stable-ordered document carrying a
schema version, so CI diffs stay meaningful.
"""

import argparse
import json
import sys

from . import fm, koszul, superrep

ALGEBRA_CAP = 6
GEOMETRY_CAP = 5
INTERTWINER_CAP = 4
KOSZUL_RANK_CAP = 5
DEFAULT_SEED = 0xC0FFEE


def _usage_error(msg):
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _print_json(payload):
    payload["schema"] = 1
    print(json.dumps(payload, sort_keys=True, indent=2))


def cmd_verify(args):
    n = args.n
    if n < 1 or n > ALGEBRA_CAP:
        return _usage_error(f"--n must be between 1 and {ALGEBRA_CAP}")
    if args.max_weight is not None and args.max_weight < 0:
        return _usage_error("--max-weight must be nonnegative")

    reports = [
        superrep.verify_relations(n),
        superrep.weight_structure_report(n),
        superrep.antipode_report(),
    ]
    notes = []
    if n <= GEOMETRY_CAP:
        reports.append(fm.nilpotency_report(n, args.max_weight))
        reports.append(fm.commutator_report(n, args.max_weight))
        reports.append(fm.normalized_rep_report(n, args.max_weight))
    else:
        notes.append(f"geometry battery skipped: n={n} exceeds the cap {GEOMETRY_CAP}")
    if n <= INTERTWINER_CAP:
        reports.append(fm.intertwiner_report(n, seed=args.seed))
    else:
        notes.append(
            f"intertwiner solve skipped: n={n} exceeds the cap {INTERTWINER_CAP}"
        )
    reports.append(koszul.endpoint_report(n))

    passed = all(r.passed for r in reports)
    if args.json:
        _print_json(
            {
                "command": "verify",
                "parameters": {
                    "n": n,
                    "max_weight": args.max_weight,
                    "seed": args.seed,
                },
                "passed": passed,
                "skipped": notes,
                "reports": [r.to_dict() for r in reports],
            }
        )
    else:
        for r in reports:
            print("\n".join(r.summary_lines()))
        for note in notes:
            print(f"note: {note}")
        print("ALL CHECKS PASSED" if passed else "CHECKS FAILED")
    return 0 if passed else 1


def _algebra_blocks(n, weight):
    return {g: superrep.block_matrix(n, g, weight) for g in ("E", "F", "K", "H")}


def _geometry_blocks(n, weight):
    return {
        "E": fm.raising_matrix(n, weight),
        "F": fm.lowering_matrix(n, weight),
        "K": fm.scalar_block(n, weight, n),
        "H": fm.scalar_block(n, weight, weight),
    }


def cmd_matrices(args):
    n, w = args.n, args.weight
    if n < 1 or n > ALGEBRA_CAP:
        return _usage_error(f"--n must be between 1 and {ALGEBRA_CAP}")
    if (n - w) % 2:
        return _usage_error(f"weight {w} has the wrong parity for n={n}")
    k = (n - w) // 2
    if not 0 <= k <= n:
        return _usage_error(f"weight {w} is outside [-{n}, {n}]")
    if args.side == "geometry" and n > GEOMETRY_CAP:
        return _usage_error(f"geometry side is capped at n={GEOMETRY_CAP}")

    blocks = _algebra_blocks(n, w) if args.side == "algebra" else _geometry_blocks(n, w)
    if args.json:
        _print_json(
            {
                "command": "matrices",
                "parameters": {"n": n, "weight": w, "side": args.side},
                "blocks": {g: b.to_json() for g, b in blocks.items()},
            }
        )
    else:
        for g in ("E", "F", "K", "H"):
            print(f"-- {g} on the weight-{w} block (n={n}, {args.side}) --")
            print(blocks[g])
    return 0


def cmd_koszul(args):
    r, k = args.rank, args.k
    if r < 0 or r > KOSZUL_RANK_CAP:
        return _usage_error(
            f"--rank must be between 0 and {KOSZUL_RANK_CAP} (symbolic blow-up guard)"
        )
    if not 0 <= k <= r:
        return _usage_error(f"--k must be between 0 and the rank {r}")
    rep = koszul.koszul_battery_report(r, k)
    if args.json:
        _print_json(
            {
                "command": "koszul",
                "parameters": {"rank": r, "k": k},
                "passed": rep.passed,
                "reports": [rep.to_dict()],
            }
        )
    else:
        print("\n".join(rep.summary_lines()))
        print("ALL CHECKS PASSED" if rep.passed else "CHECKS FAILED")
    return 0 if rep.passed else 1


def _seed(text):
    return int(text, 0)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qglk",
        description=(
            "Exact checks that the quantum-supergroup action on tensor space "
            "agrees with its localized geometric realization"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="run the relation and intertwiner batteries")
    pv.add_argument("--n", type=int, required=True, help="number of tensor factors")
    pv.add_argument(
        "--max-weight",
        dest="max_weight",
        type=int,
        default=None,
        help="restrict geometry checks to |weight| <= this",
    )
    pv.add_argument("--json", action="store_true", help="machine-readable output")
    pv.add_argument(
        "--seed",
        type=_seed,
        default=DEFAULT_SEED,
        help="seed for the random-point invertibility certificates",
    )
    pv.set_defaults(func=cmd_verify)

    pm = sub.add_parser("matrices", help="dump E, F, K, H on one weight block")
    pm.add_argument("--n", type=int, required=True)
    pm.add_argument("--weight", type=int, required=True)
    pm.add_argument("--side", choices=("algebra", "geometry"), required=True)
    pm.add_argument("--json", action="store_true")
    pm.set_defaults(func=cmd_matrices)

    pk = sub.add_parser("koszul", help="check the graded-complex identities")
    pk.add_argument("--rank", type=int, required=True)
    pk.add_argument("--k", type=int, required=True)
    pk.add_argument("--json", action="store_true")
    pk.set_defaults(func=cmd_koszul)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
