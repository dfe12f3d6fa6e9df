"""
higherkm run <suite> [flags]   run a verification suite and write its report
higherkm explain <check>       describe what a check verifies

Exit codes: 0 all checks pass, 1 some check fails, 2 configuration, window
or tolerance error.
"""

import argparse
import csv
import io
import json
import sys

from .suites import SUITES, SuiteError, SuiteSpec, explain, run


def build_parser():
    p = argparse.ArgumentParser(prog="higherkm", description="Higher Kac-Moody verification suites")
    sub = p.add_subparsers(dest="command", required=True)
    r = sub.add_parser("run", help="run a suite")
    r.add_argument("suite", choices=sorted(SUITES))
    r.add_argument("--dim", type=int, help="dimension d (for clifford: dim V)")
    r.add_argument("--lie", help="built-in name (sl2, glN, abelianN) or a .json file")
    r.add_argument("--rep", help="fundamental, adjoint, trivial, weights:a,b,... or a name from the file")
    r.add_argument("--theta", help="killing, trace, zero or thetaKN")
    r.add_argument("--weight-box", type=int, help="weights in [-r, r]^d")
    r.add_argument("--kmax", type=int, help="levels above the lowest nonempty one")
    r.add_argument("--deg-max", type=int, help="cap on numerator degree")
    r.add_argument("--sym-cutoff", type=int, help="largest Sym-degree")
    r.add_argument("--cutoff", type=int, help="mode cutoff for free fields")
    r.add_argument("--samples", type=int, help="random tuples per check")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--out", help="write the report here instead of stdout")
    r.add_argument("--format", choices=("json", "csv", "text"), default="json")
    e = sub.add_parser("explain", help="describe a check")
    e.add_argument("check")
    return p


COLUMNS = ("name", "pass", "provenance", "expected", "actual", "inputs", "anchor")


def render(report, fmt):
    recs = report["records"]
    if fmt == "json":
        lines = [json.dumps({"suite": report["suite"], "params": report["params"]},
                            sort_keys=True, ensure_ascii=False)]
        lines += [json.dumps(r, sort_keys=True, ensure_ascii=False) for r in recs]
        lines.append(json.dumps({"pass": report["pass"], "checks": len(recs)}, sort_keys=True))
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(COLUMNS)
        for r in recs:
            w.writerow([json.dumps(r[c], ensure_ascii=False) if not isinstance(r[c], str) else r[c]
                        for c in COLUMNS])
        return buf.getvalue()
    out = ["suite %s (%d checks)" % (report["suite"], len(recs))]
    for r in recs:
        out.append("%s  %-36s expected %s, got %s  [%s]" % (
            "PASS" if r["pass"] else "FAIL", r["name"], r["expected"], r["actual"], r["provenance"]))
    out.append("overall: %s" % ("PASS" if report["pass"] else "FAIL"))
    return "\n".join(out) + "\n"


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == "explain":
        try:
            sys.stdout.write(explain(args.check))
        except KeyError as e:
            sys.stderr.write("error: %s\n" % e.args[0])
            return 2
        return 0
    spec = SuiteSpec(args.suite, dim=args.dim, lie=args.lie, rep=args.rep, theta=args.theta,
                     weight_box=args.weight_box, kmax=args.kmax, deg_max=args.deg_max,
                     sym_cutoff=args.sym_cutoff, cutoff=args.cutoff, samples=args.samples,
                     seed=args.seed)
    try:
        report = run(spec)
    except (SuiteError, OSError) as e:
        sys.stderr.write(json.dumps({"error": str(e), "check": getattr(e, "check", args.suite)},
                                    ensure_ascii=False) + "\n")
        return 2
    text = render(report, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report["pass"] else 1


if __name__ == "__main__":
    sys.exit(main())
