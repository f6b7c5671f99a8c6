"""Batch command-line front end.

Subcommands: group-info, classify, check-stability, iso-test, verify.  All
output is deterministic JSON (rationals as "p/q" strings); exit status 0 on
success, 1 on verification failure, 2 on input errors, 3 when the Weyl-group
size guard is exceeded.  The guard defaults to 10000 and can be overridden
with the TROPGROUPS_GUARD environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import circles, semiring, stability, verify
from .groups import build_group, center_basis
from .rootdata import FAMILIES
from .weyl import GuardExceededError

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_PARSE = 2
EXIT_GUARD = 3


def _guard_default() -> int:
    return int(os.environ.get("TROPGROUPS_GUARD", "10000"))


def _emit(data, out_path) -> None:
    text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_cocycles(args, group):
    if args.infile:
        with open(args.infile) as fh:
            data = json.load(fh)
    elif args.cocycle:
        data = json.loads(args.cocycle)
    else:
        raise ValueError("provide --in or --cocycle")
    if isinstance(data, dict):
        data = [data]
    out = []
    for entry in data:
        if "j" not in entry and args.j is not None:
            entry = {**entry, "j": args.j}
        out.append(circles.cocycle_from_json(group, entry))
    return out


def _build(args):
    family = args.family
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}")
    return build_group(family, args.n or 0, guard=args.guard)


def _add_group_args(p):
    p.add_argument("family", nargs="?", help="GL|SL|PGL|Sp|SO_odd|SO_even|G2")
    p.add_argument("n", nargs="?", type=int, default=None, help="rank parameter")
    p.add_argument("--family", dest="family_flag", help=argparse.SUPPRESS)
    p.add_argument("--n", dest="n_flag", type=int, help=argparse.SUPPRESS)
    p.add_argument("--guard", type=int, default=None)
    p.add_argument("--out", dest="out", default=None)


def _resolve_group_args(args):
    if getattr(args, "family_flag", None):
        args.family = args.family_flag
    if getattr(args, "n_flag", None) is not None:
        args.n = args.n_flag
    if args.guard is None:
        args.guard = _guard_default()
    if not args.family:
        raise ValueError("a group family is required")


def cmd_group_info(args) -> int:
    _resolve_group_args(args)
    g = _build(args)
    report = {
        "family": args.family,
        "n": args.n or 0,
        "weyl_order": len(g.weyl),
        "pi1": list(g.pi1().invariant_factors),
        "center_rank": len(center_basis(g)),
        "num_roots": len(g.datum.roots),
    }
    _emit(report, args.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    _resolve_group_args(args)
    g = _build(args)
    comps = circles.classify_components(g, semiring.rational_from_str(str(args.j)))
    report = {
        "family": args.family,
        "n": args.n or 0,
        "j": str(args.j),
        "components": [c.to_json() for c in comps],
    }
    _emit(report, args.out)
    return EXIT_OK


def cmd_check_stability(args) -> int:
    _resolve_group_args(args)
    g = _build(args)
    out = []
    for c in _load_cocycles(args, g):
        out.append(stability.stability_verdict(c).to_json())
    _emit(out if len(out) > 1 else out[0], args.out)
    return EXIT_OK


def cmd_iso_test(args) -> int:
    _resolve_group_args(args)
    g = _build(args)
    cocycles = _load_cocycles(args, g)
    if len(cocycles) != 2:
        raise ValueError("iso-test needs exactly two cocycles")
    witness = circles.isomorphism_witness(cocycles[0], cocycles[1])
    report = {"isomorphic": witness is not None}
    if witness is not None:
        report["witness"] = witness.to_json()
    _emit(report, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    suite = args.suite
    if suite not in verify.SUITES:
        raise ValueError(f"suite must be one of {sorted(verify.SUITES)}")
    if suite == "sl-count":
        report = verify.sl_count(args.n, args.j)
    elif suite == "pgl-count":
        report = verify.pgl_count(args.n, args.j)
    elif suite == "det-homeo":
        report = verify.det_homeo(args.n, args.d, samples=args.samples, seed=args.seed, j=args.j)
    else:
        report = verify.relative_weyl()
    _emit(report, args.out)
    return EXIT_OK if report["pass"] else EXIT_VERIFY_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tropgroups", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group-info", help="Weyl order, fundamental group, center rank")
    _add_group_args(p)
    p.set_defaults(fn=cmd_group_info)

    p = sub.add_parser("classify", help="components of the circle moduli space")
    _add_group_args(p)
    p.add_argument("--j", default="1", help="circle length, rational p/q")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("check-stability", help="slope stability of circle cocycles")
    _add_group_args(p)
    p.add_argument("--j", default=None)
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--cocycle", default=None, help="inline cocycle JSON")
    p.set_defaults(fn=cmd_check_stability)

    p = sub.add_parser("iso-test", help="decide isomorphism of two cocycles")
    _add_group_args(p)
    p.add_argument("--j", default=None)
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--cocycle", dest="cocycle", default=None, help="inline JSON list of two cocycles")
    p.set_defaults(fn=cmd_iso_test)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", help="sl-count|pgl-count|det-homeo|relative-weyl")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--degree", "--d", dest="d", type=int, default=1)
    p.add_argument("--j", default="1")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except GuardExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
