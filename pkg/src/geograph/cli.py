"""Command-line front end.

Exit codes: 0 success / verified, 1 not admissible or verification failed,
2 search exhausted or internal error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional, Sequence

from . import certificate
from .admissibility import ChernQuintuple, ParamVector, chern_to_params, is_admissible, params_to_chern
from .errors import MalformedPlan, Mod3Violation, NotAdmissible, SearchExhausted
from .lattice import catalog
from .planner import BetaConfig, SearchBudget, realize
from .verifier import enumerate_box, verify_plan

EXIT_OK, EXIT_REJECTED, EXIT_ERROR = 0, 1, 2

# let "-3", "-10:10" and "-2,-1,0" through as values rather than flags
_NEGATIVE_VALUE = re.compile(r"^-\d[\d:,\-]*$")


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NEGATIVE_VALUE


def _range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(-?\d+):(-?\d+)\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}")
    return int(m.group(1)), int(m.group(2))


def _int_list(values: Sequence[str]) -> list[int]:
    out = []
    for v in values:
        out.extend(int(x) for x in v.split(",") if x.strip())
    return out


def _params_dict(p: ParamVector) -> dict:
    return {"a": p.a, "m": p.m, "j": p.j, "k": p.k, "b": p.b}


def _chern_dict(q: ChernQuintuple) -> dict:
    return dict(zip(("c4", "c1c3", "c2sq", "c1sq_c2", "c1_4"), q.as_tuple()))


def _cmd_check(args) -> int:
    report = is_admissible(ChernQuintuple(*args.chern))
    if args.json:
        print(json.dumps({"admissible": report.admissible, "residues": report.residues,
                          "violations": [list(v) for v in report.violations]}, indent=2))
    else:
        for rel, res in report.residues.items():
            print(f"{rel:>7}: residue {res}")
        print("admissible" if report.admissible else "NOT admissible")
    return EXIT_OK if report.admissible else EXIT_REJECTED


def _cmd_convert(args) -> int:
    if args.inverse:
        out = _chern_dict(params_to_chern(ParamVector(*args.values)))
    else:
        out = _params_dict(chern_to_params(ChernQuintuple(*args.values)))
    print(json.dumps(out, indent=2))
    return EXIT_OK


def _budget(args) -> SearchBudget:
    env = SearchBudget.from_env()
    return SearchBudget(
        lambda_max=args.lambda_max if args.lambda_max is not None else env.lambda_max,
        v_max=args.v_max if args.v_max is not None else env.v_max,
    )


def _cmd_realize(args) -> int:
    if args.params is not None:
        target = ParamVector(*args.params)
    elif args.chern and len(args.chern) == 5:
        target = ChernQuintuple(*args.chern)
    else:
        print("realize: give five Chern numbers or --params a m j k b", file=sys.stderr)
        return EXIT_ERROR
    beta = BetaConfig(beta_sq=args.beta_sq)
    plan = realize(target, K=args.K, beta=beta, budget=_budget(args))
    report = verify_plan(plan)
    if not report.passed:
        print(f"internal error: plan does not replay ({report.mismatches})", file=sys.stderr)
        return EXIT_ERROR
    text = certificate.dumps(plan)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        c = plan.counts
        print(f"wrote {args.output}: branch {plan.branch}, n={plan.n}, lambda={plan.lam}, "
              f"counts x={c.x} y={c.y} z={c.z} u={c.u} v={c.v}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_verify(args) -> int:
    plan = certificate.load(args.plan)
    report = verify_plan(plan)
    if args.json:
        print(json.dumps({
            "pass": report.passed,
            "recomputed_base": _params_dict(report.recomputed_base),
            "final": _params_dict(report.final),
            "target": _params_dict(report.target),
            "steps": [{"centre": lab, "count": c, "delta": _params_dict(d)} for lab, c, d in report.steps],
            "errata_notes": report.errata_notes,
        }, indent=2))
    else:
        print(f"recomputed base {report.recomputed_base.as_tuple()}")
        for lab, c, d in report.steps:
            print(f"  {lab:<15} x{c:<8} delta {d.as_tuple()}")
        print(f"final  {report.final.as_tuple()}")
        print(f"target {report.target.as_tuple()}")
        for note in report.errata_notes:
            print(f"note: {note}")
        print("PASS" if report.passed else f"FAIL: mismatch {report.mismatches}")
    return EXIT_OK if report.passed else EXIT_REJECTED


def _cmd_enumerate(args) -> int:
    a_r, m_r, k_r, b_r = args.box
    summary = enumerate_box(a_r, m_r, k_r, b_r, _int_list(args.j), parallel=args.parallel,
                            K=args.K, beta=BetaConfig(beta_sq=args.beta_sq), budget=_budget(args))
    print(json.dumps(summary.as_dict(), indent=2))
    return EXIT_OK if summary.failed == 0 else EXIT_REJECTED


def _cmd_blocks(args) -> int:
    out = []
    for blk in catalog(tuple(args.n)):
        entry = {
            "name": blk.name,
            "c1sq": blk.c1sq,
            "c2": blk.c2,
            "used_by_planner": blk.used_by_planner,
            "notes": list(blk.notes),
        }
        if blk.lattice is not None:
            entry["lattice"] = {
                "rank": blk.lattice.rank,
                "det": blk.lattice.det(),
                "full": blk.closed,
                "labels": list(blk.lattice.labels),
                "gram": [list(r) for r in blk.lattice.gram],
            }
        if blk.c1 is not None:
            entry["c1"] = list(blk.c1.coeffs)
        if blk.c1_pairings is not None:
            entry["c1_pairings"] = list(blk.c1_pairings)
        out.append(entry)
    print(json.dumps(out, indent=1 if args.pretty else None))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="geograph", description="Symplectic realisations of 8-dimensional Chern numbers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test the congruences on five Chern numbers")
    p.add_argument("chern", type=int, nargs=5, metavar="C")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("convert", help="Chern numbers -> (a, m, j, k, b), or back with --inverse")
    p.add_argument("values", type=int, nargs=5)
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(func=_cmd_convert)

    def search_opts(p):
        p.add_argument("--lambda-max", type=int, default=None)
        p.add_argument("--v-max", type=int, default=None)
        p.add_argument("--K", type=int, default=1)
        p.add_argument("--beta-sq", type=int, default=2)

    p = sub.add_parser("realize", help="find and verify a construction plan")
    p.add_argument("chern", type=int, nargs="*", metavar="C")
    p.add_argument("--params", type=int, nargs=5, metavar=("A", "M", "J", "K_PARAM", "B"))
    p.add_argument("-o", "--output")
    search_opts(p)
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("verify", help="replay a plan certificate")
    p.add_argument("plan")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("enumerate", help="realize and verify every target in a box")
    p.add_argument("--box", type=_range, nargs=4, required=True, metavar=("A0:A1", "M0:M1", "K0:K1", "B0:B1"))
    p.add_argument("--j", nargs="+", required=True)
    p.add_argument("--parallel", type=int, default=0)
    search_opts(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("blocks", help="dump the building-block catalog as JSON")
    p.add_argument("--n", type=int, nargs="+", default=[1, 2, 3])
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_blocks)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (NotAdmissible, Mod3Violation, MalformedPlan) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REJECTED
    except SearchExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
