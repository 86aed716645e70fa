"""Command-line front end: solve, verify, check-tuples, export-dot, km-cache.

Exit codes: 0 pass, 1 verification or validation failure, 2 malformed input
or bad arguments, 3 request out of scope.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import engine, hamdecomp, store
from .solver import (Certificate, CertificateFormatError, OutOfScope,
                     OutOfScopeError, normalize, solve)
from .verify import verify_factorization

EXIT_OK, EXIT_FAIL, EXIT_MALFORMED, EXIT_SCOPE = 0, 1, 2, 3

PALETTE = ("red", "blue", "darkgreen", "orange", "purple", "brown", "magenta",
           "cyan", "gold", "gray", "black", "navy")


def cmd_solve(args) -> int:
    req = normalize(args.t1, args.t2)
    if isinstance(req, OutOfScope):
        print(f"out of scope: ({req.t1},{req.t2}): {req.reason}", file=sys.stderr)
        return EXIT_SCOPE
    try:
        cert = solve(req, seed=args.seed)
    except OutOfScopeError as exc:
        print(f"out of scope: {exc}", file=sys.stderr)
        return EXIT_SCOPE
    except (store.DataFormatError, OSError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    text = cert.dumps()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    n = cert.host.vertex_count
    arcs = sum(len(f.arcs()) for f in cert.factors)
    how = "special-case data" if cert.provenance.get("special") else (
        f"q={cert.provenance['q']} k={cert.provenance['k']}")
    print(f"OP*({req.t1},{req.t2}): {len(cert.factors)} factors over K*_{n}, "
          f"{arcs} arcs of {n * (n - 1)} ({how})", file=sys.stderr)
    return EXIT_OK


def _load_certificate(path: str) -> Certificate:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CertificateFormatError(f"cannot read {path}: {exc}") from exc
    return Certificate.loads(text)


def cmd_verify(args) -> int:
    try:
        cert = _load_certificate(args.path)
    except CertificateFormatError as exc:
        print(f"malformed: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    outcome = verify_factorization(cert.factors, cert.host, cert.lengths)
    if outcome.passed:
        print(f"pass: {len(cert.factors)} factors partition "
              f"{cert.host.arc_count} arcs, lengths {list(cert.lengths)}")
        return EXIT_OK
    print(f"FAIL: {len(outcome.violations)} violations "
          f"({', '.join(sorted(k.value for k in outcome.kinds()))})")
    for v in outcome.violations[:args.limit]:
        print(f"  {v}")
    return EXIT_FAIL


def _parse_case(text: str) -> tuple[int, int]:
    try:
        t1, q = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected t1,q such as 4,10, got {text!r}")
    return t1, q


def cmd_check_tuples(args) -> int:
    cases = [args.case] if args.case else sorted(store.CASES)
    report: dict = {"cases": [], "specials": []}
    ok = True
    for t1, q in cases:
        if (t1, q) not in store.CASES:
            print(f"unknown case ({t1},{q}); known: {sorted(store.CASES)}", file=sys.stderr)
            return EXIT_MALFORMED
        entry: dict = {"t1": t1, "q": q}
        try:
            tuples = store.load_case(t1, q)
        except (ValueError, OSError) as exc:
            entry["error"] = str(exc)
            report["cases"].append(entry)
            print(f"case ({t1},{q}): data error: {exc}")
            ok = False
            continue
        reports, problems = engine.validate_case(tuples)
        entry["tuples"] = [r.to_dict() for r in reports]
        entry["hypotheses"] = problems
        passed = sum(r.passed for r in reports)
        print(f"case ({t1},{q}): {passed}/{len(reports)} tuples pass B1-B6, "
              f"hypotheses {'hold' if not problems else 'FAIL'}")
        for r in reports:
            for c in r.failures():
                print(f"  tuple {r.index} {c.name}: {c.detail}")
        for p in problems:
            print(f"  {p}")
        ok &= passed == len(reports) and not problems
        report["cases"].append(entry)
    if not args.case:
        for t1, t2 in sorted(store.SPECIALS):
            entry = {"t1": t1, "t2": t2}
            try:
                sp = store.load_special(t1, t2)
                outcome = verify_factorization(sp.factors, sp.host, [t1, t2])
                entry["pass"] = outcome.passed
                entry["detail"] = outcome.summary()
            except (ValueError, OSError) as exc:
                entry["pass"] = False
                entry["detail"] = str(exc)
            print(f"special ({t1},{t2}): {'pass' if entry['pass'] else 'FAIL ' + entry['detail']}")
            ok &= entry["pass"]
            report["specials"].append(entry)
    report["pass"] = ok
    Path(args.report).write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def _dot(cert: Certificate, indices: list[int]) -> str:
    lines = ["digraph factors {", '  node [shape=circle];']
    for i in indices:
        colour = PALETTE[i % len(PALETTE)]
        for a in cert.factors[i].arcs():
            lines.append(f'  "{a.tail}" -> "{a.head}" [color={colour}, label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_export_dot(args) -> int:
    try:
        cert = _load_certificate(args.path)
    except CertificateFormatError as exc:
        print(f"malformed: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    if args.factor is None:
        indices = list(range(len(cert.factors)))
    elif 0 <= args.factor < len(cert.factors):
        indices = [args.factor]
    else:
        print(f"factor index {args.factor} out of range 0..{len(cert.factors) - 1}",
              file=sys.stderr)
        return EXIT_MALFORMED
    text = _dot(cert, indices)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_km_cache(args) -> int:
    for m in args.m or range(8, 41, 2):
        if m % 2 or m < 8:
            print(f"m={m}: cache holds even m >= 8 only", file=sys.stderr)
            return EXIT_MALFORMED
        split = hamdecomp.decompose_k_even(m, use_cache=False)
        path = hamdecomp.write_km_cache(split)
        print(f"m={m}: {len(split.ham_cycles)} Hamilton cycles -> {path}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dirop", description=(
        "Directed Oberwolfach factorizations of K*_n with two cycle lengths."))
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="build and verify a certificate for OP*(t1,t2)")
    p.add_argument("--t1", type=int, required=True)
    p.add_argument("--t2", type=int, required=True)
    p.add_argument("--out", help="certificate path (default: stdout)")
    p.add_argument("--seed", type=int, default=hamdecomp.DEFAULT_SEED)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="independently verify a certificate file")
    p.add_argument("path")
    p.add_argument("--limit", type=int, default=20, help="violations to print")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check-tuples", help="audit the stored base tuples and special cases")
    p.add_argument("--case", type=_parse_case, help="a single case t1,q such as 4,10")
    p.add_argument("--report", default="check_tuples_report.json")
    p.set_defaults(func=cmd_check_tuples)

    p = sub.add_parser("export-dot", help="write a certificate's factors as Graphviz DOT")
    p.add_argument("path")
    p.add_argument("--factor", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("km-cache", help="regenerate the even-m K_m split cache")
    p.add_argument("--m", type=int, action="append")
    p.set_defaults(func=cmd_km_cache)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_MALFORMED if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
