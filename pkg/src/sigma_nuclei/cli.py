"""Command-line front end: ``sigma-nuclei <command> FILE [options]``."""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional, Sequence

from .bench import run_bench
from .corpus import random_isostrophism
from .errors import DegreeMismatch, OrderTooLarge, SigmaNucleiError
from .inverse_props import classify, verify_inverse_class_claims
from .nuclei import ALL_KINDS, compute_all_nuclei, compute_sigma_nucleus, oracle_sigma_nucleus, parse_kind
from .perm import Perm, format_perm, parse_perm
from .quasigroup import load_quasigroup, parastrophe
from .relations import (
    VerificationReport, verify_inverse_relations, verify_product_relations, verify_isostrophe_relations, verify_parastrophe_relations,
)
from .s3 import ALL_S3, parse_s3
from .strophism import Isostrophism, IsotopyTriple, apply_isostrophism

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _out(text: str = "") -> None:
    sys.stdout.write(text + "\n")


def _member_json(m) -> dict:
    return {"sigma": m.sigma.literal, "triple": [list(p) for p in m.triple]}


def _nucleus_json(nuc) -> dict:
    return {"sigma": nuc.sigma.literal, "kind": nuc.kind.value, "size": len(nuc),
            "members": [_member_json(m) for m in nuc]}


def _report_json(report: VerificationReport) -> dict:
    return {
        "table": report.table_id, "total": report.total, "passed": report.passed,
        "vacuous": report.vacuous, "failed": len(report.failures), "by_level": report.by_level,
        "failures": [f.describe() for f in report.failures],
    }


def _sigmas(text: str):
    return list(ALL_S3) if text == "all" else [parse_s3(text)]


def _kinds(text: str):
    return list(ALL_KINDS) if text == "all" else [parse_kind(text)]


def _theta_from_args(args, n: int) -> Optional[Isostrophism]:
    given = [args.alpha, args.beta, args.gamma]
    if args.tau is None and all(g is None for g in given):
        return None
    ident = Perm.identity(n)
    perms = [ident if g is None else parse_perm(g, n) for g in given]
    tau = parse_s3(args.tau) if args.tau is not None else ALL_S3[0]
    return Isostrophism(tau, IsotopyTriple(*perms))


def _print_table(q) -> None:
    _out(q.to_text().rstrip("\n"))


def cmd_validate(args) -> int:
    q = load_quasigroup(args.file)
    if args.json:
        _out(json.dumps({"valid": True, "order": q.order}))
    else:
        _out(f"valid quasigroup of order {q.order}")
    return EXIT_OK


def cmd_nuclei(args) -> int:
    q = load_quasigroup(args.file)
    results = []
    status = EXIT_OK
    for s in _sigmas(args.sigma):
        for k in _kinds(args.kind):
            nuc = compute_sigma_nucleus(q, s, k)
            if args.oracle and oracle_sigma_nucleus(q, s, k) != nuc:
                status = EXIT_FAIL
                sys.stderr.write(f"oracle disagrees on sigma={s.literal} kind={k.value}\n")
            results.append(nuc)
    if args.json:
        _out(json.dumps({"order": q.order, "nuclei": [_nucleus_json(n) for n in results]}, indent=2))
    else:
        for nuc in results:
            _out(f"sigma={nuc.sigma.literal} kind={nuc.kind.value} size={len(nuc)}")
            for m in nuc:
                _out("  " + " | ".join(format_perm(p) for p in m.triple))
    return status


def cmd_parastrophe(args) -> int:
    q = load_quasigroup(args.file)
    _print_table(parastrophe(q, parse_s3(args.tau)))
    return EXIT_OK


def cmd_isostrophe(args) -> int:
    q = load_quasigroup(args.file)
    theta = _theta_from_args(args, q.order)
    if theta is None:
        raise InputError("give at least one of --tau/--alpha/--beta/--gamma")
    _print_table(apply_isostrophism(q, theta))
    return EXIT_OK


def cmd_verify_tables(args) -> int:
    q = load_quasigroup(args.file)
    tables = [2, 3, 4, 5, 6] if args.table == "all" else [int(args.table)]
    nuclei = compute_all_nuclei(q)
    reports = []
    explicit = _theta_from_args(args, q.order)
    rng = random.Random(args.seed)
    if any(t in (2, 5) for t in tables) and explicit is None and not args.json:
        _out(f"seed {args.seed}")
    for table in tables:
        if table == 3:
            reports.append(verify_inverse_relations(q, nuclei))
        elif table == 4:
            reports.append(verify_product_relations(q, nuclei))
        elif table in (2, 5):
            thetas = [explicit] if explicit is not None else [random_isostrophism(q.order, rng) for _ in range(args.trials)]
            combined = VerificationReport(table)
            for theta in thetas:
                combined.merge(verify_isostrophe_relations(q, theta, nuclei, only_table=table))
            reports.append(combined)
        elif table == 6:
            taus = [parse_s3(args.tau)] if args.tau else list(ALL_S3)
            combined = VerificationReport(6)
            for tau in taus:
                combined.merge(verify_parastrophe_relations(q, tau, nuclei))
            reports.append(combined)
        else:
            raise InputError(f"unknown table {table}")
    ok = all(r.ok for r in reports)
    if args.json:
        _out(json.dumps({"seed": args.seed, "reports": [_report_json(r) for r in reports]}, indent=2))
    else:
        for r in reports:
            _out(r.summary())
            for f in r.failures:
                _out("  FAIL " + f.describe())
    return EXIT_OK if ok else EXIT_FAIL


def cmd_classify(args) -> int:
    q = load_quasigroup(args.file)
    report = classify(q)
    claims = verify_inverse_class_claims(q, report=report) if args.claims else None
    lits = lambda ps: [format_perm(p) for p in ps]
    if args.json:
        payload = {
            "order": q.order, "classes": report.classes(),
            "witnesses": {
                "WIP": lits(report.wip), "CI": lits(report.ci), "LIP": lits(report.lip),
                "RIP": lits(report.rip), "WCIP": lits(report.wcip),
                "abg_inverse": [lits(t) for t in report.abg_triples],
                "lambda_inverse": [lits(t) for t in report.lambda_family],
                "rho_inverse": [lits(t) for t in report.rho_family],
                "mu_inverse": [lits(t) for t in report.mu_family],
                "rst_inverse": [[format_perm(j), r, s, t] for j, r, s, t in report.rst_hits],
                "m_inverse": [[format_perm(j), m] for j, m in report.m_hits],
            },
            "exhaustive": {"shape_classes": True, "rst_and_m": report.rst_exhaustive},
        }
        if claims is not None:
            payload["claims"] = _report_json(claims)
        _out(json.dumps(payload, indent=2))
    else:
        for name, flag in report.classes().items():
            _out(f"{name:15s} {'yes' if flag else 'no'}")
        if not report.rst_exhaustive:
            _out("(r,s,t) and m search was bounded; a 'no' there is not conclusive")
        for name in ("wip", "ci", "lip", "rip", "wcip"):
            ws = getattr(report, name)
            if ws:
                _out(f"{name.upper()} witnesses: " + "  ".join(lits(ws)))
        if claims is not None:
            _out(claims.summary())
            for f in claims.failures:
                _out("  FAIL " + f.describe())
    return EXIT_OK if claims is None or claims.ok else EXIT_FAIL


def cmd_bench(args) -> int:
    q = load_quasigroup(args.file)
    theta = _theta_from_args(args, q.order)
    if theta is None:
        theta = random_isostrophism(q.order, random.Random(args.seed))
        _out(f"seed {args.seed}")
    result = run_bench(q, theta, oracle=not args.skip_oracle, repeat=args.repeat)
    _out(f"order {q.order}, theta = {theta}")
    for label, value in result.rows():
        _out(f"  {label:40s} {value}")
    if result.oracle_speedup is not None:
        _out(f"  oracle / fast = {result.oracle_speedup:.1f}x")
    _out(f"  direct / derived = {result.derive_speedup:.1f}x")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sigma-nuclei", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="Cayley-table file")
        p.set_defaults(fn=fn)
        return p

    def theta_flags(p):
        p.add_argument("--tau", help="S3 part: e, 12, 13, 23, 123, 132")
        for name in ("alpha", "beta", "gamma"):
            p.add_argument(f"--{name}", help="permutation literal such as 2,0,1")

    p = add("validate", cmd_validate, "check the Latin-square property")
    p.add_argument("--json", action="store_true")
    p = add("nuclei", cmd_nuclei, "compute sigma-nuclei")
    p.add_argument("--sigma", default="all", choices=["e", "12", "13", "23", "123", "132", "all"])
    p.add_argument("--kind", default="all", choices=["l", "r", "m", "all"])
    p.add_argument("--json", action="store_true")
    p.add_argument("--oracle", action="store_true", help="cross-check against the brute-force oracle")
    p = add("parastrophe", cmd_parastrophe, "print a parastrophe")
    p.add_argument("--tau", required=True)
    p = add("isostrophe", cmd_isostrophe, "print an isostrophic image")
    theta_flags(p)
    p = add("verify-tables", cmd_verify_tables, "check the relation tables on this quasigroup")
    p.add_argument("--table", default="all", choices=["2", "3", "4", "5", "6", "all"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=10, help="random isostrophisms for tables 2/5")
    p.add_argument("--json", action="store_true")
    theta_flags(p)
    p = add("classify", cmd_classify, "inverse-property classes")
    p.add_argument("--json", action="store_true")
    p.add_argument("--claims", action="store_true", help="also verify the normalizer and isomorphism claims")
    p = add("bench", cmd_bench, "time fast, oracle and derived paths")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--skip-oracle", action="store_true")
    theta_flags(p)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.fn(args)
    except (OSError, ValueError, InputError, DegreeMismatch, OrderTooLarge) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except SigmaNucleiError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
