"""Command-line front end.

Subcommands: bound, extremal, verify, table, oracle-compare. All floating
output is printed with 17 significant digits; exit status is 0 on pass,
1 on an inequality/suite violation, 2 on invalid input.
"""

import argparse
import json
import math
import sys

import numpy as np

from . import analysis
from .envelopes import (ConeTriple, carlen_bound, classify, eval_F, eval_G,
                        lower_envelope, scalar_three_term, sum_bound,
                        upper_envelope)
from .extremal import extremal_F, extremal_G
from .oracle import EnvelopeOracle
from .sampling import random_pair, random_step_function, substreams
from .stepfun import (StepFunction, overlap_norm, pth_power_norm, refine,
                      sum_and_report, sum_norm)

P_GRID = (-2.0, -1.0, -0.5, 0.5, 1.0, 1.3, 1.5, 1.7, 2.0, 3.0, 5.0)


def fmt(v):
    return format(float(v), ".17g")


def _dump(obj):
    print(json.dumps(obj, indent=2, default=lambda v: float(v)))


def cmd_bound(args):
    p = classify(args.p)
    if args.files:
        with open(args.files[0]) as fh:
            f = StepFunction.from_json(fh.read())
        with open(args.files[1]) as fh:
            g = StepFunction.from_json(fh.read())
        report = sum_and_report(f, g, p)
        _dump(report.to_dict())
        return 0 if report.ok() else 1
    if len(args.triple) != 3:
        raise ValueError("need x y z or --files F G")
    # with only a triple there is no actual norm; report the bounds there
    t = ConeTriple(*args.triple)
    _dump({
        "p": p.p,
        "triple": {"x": t.x, "y": t.y, "z": t.z},
        "upper": upper_envelope(p, t),
        "lower": lower_envelope(p, t),
        "carlen": carlen_bound(p, t),
    })
    return 0


def cmd_extremal(args):
    p = classify(args.p)
    t = ConeTriple(*args.triple)
    if args.which == "F":
        f, g = extremal_F(p, t)
        target = eval_F(p, t)
    else:
        f, g = extremal_G(p, t)
        target = eval_G(p, t)
    achieved = sum_norm(f, g, p.p)
    out = {
        "f": json.loads(f.to_json()),
        "g": json.loads(g.to_json()),
        "achieved": achieved,
        "target": target,
    }
    _dump(out)
    dev = abs(achieved - target) / max(1.0, abs(target))
    return 0 if dev <= 1e-9 else 1


def _verify_pair(seed, samples):
    rngs = substreams(seed, len(P_GRID))
    per = max(1, samples // len(P_GRID))
    violations = 0
    worst = math.inf
    for p_val, rng in zip(P_GRID, rngs):
        p = classify(p_val)
        for _ in range(per):
            f, g = random_pair(rng, p.p)
            try:
                report = sum_and_report(f, g, p)
            except ValueError:
                continue  # infinite norms (planted degenerate atoms)
            m = min(report.margins["upper"], report.margins["lower"])
            worst = min(worst, m)
            if m < -1e-9:
                violations += 1
    return violations, worst


def _verify_sum(seed, samples, p_neg):
    if p_neg:
        # three unit constants at p = -1: lhs = 1/3, bound = 3 + (2^-1 - 2)*3
        lhs = pth_power_norm(StepFunction.constant(3.0), -1.0)
        rhs = 3.0 + (2.0 ** -1.0 - 2.0) * 3.0
        print("p=-1 three unit constants: lhs=%s bound=%s lhs<=bound: %s"
              % (fmt(lhs), fmt(rhs), lhs <= rhs))
        # the counterexample is reproduced when the bound FAILS
        return (0 if lhs > rhs else 1), lhs - rhs
    upper_ps = (1.0, 1.5, 2.0)
    lower_ps = (0.5, 1.0, 2.0, 3.0)
    rngs = substreams(seed, 2)
    violations = 0
    worst = math.inf
    per = max(1, samples // (len(upper_ps) + len(lower_ps)))
    for ps, sign, rng in ((upper_ps, 1.0, rngs[0]), (lower_ps, -1.0, rngs[1])):
        for p_val in ps:
            p = classify(p_val)
            for _ in range(per):
                n = int(rng.integers(3, 9))
                fs = [random_step_function(rng, p.p) for _ in range(n)]
                moments = [pth_power_norm(f, p.p) for f in fs]
                overlaps = sum(
                    overlap_norm(fs[i], fs[j], p.p)
                    for i in range(n) for j in range(i + 1, n)
                )
                total = fs[0]
                for f in fs[1:]:
                    merged, av, bv = refine(total, f)
                    total = StepFunction(merged, [a + b for a, b in zip(av, bv)])
                actual = pth_power_norm(total, p.p)
                bound = sum_bound(moments, overlaps, p)
                scale = max(1.0, abs(actual))
                m = sign * (bound - actual) / scale
                worst = min(worst, m)
                if m < -1e-9:
                    violations += 1
    return violations, worst


def _verify_analysis():
    exponents = (-2.0, -0.5, 0.5, 0.9, 1.3, 1.7, 2.5, 4.0)
    xs = np.linspace(1e-3, 1.0, 1000)
    violations = 0
    for p_val in exponents:
        p = classify(p_val)
        rows = []
        for x in xs:
            sv = analysis.sign_of(analysis.v_fn(float(x), p))
            sg = analysis.sign_of(analysis.g_fn(float(x), p))
            rows.append((sv, sg))
        v_signs = {r[0] for r in rows}
        g_signs = {r[1] for r in rows}
        v_ok = v_signs <= ({0, -1} if (0 < p_val < 1 or p_val > 2) else {0, 1})
        if p_val > 0:
            g_ok = g_signs <= ({0, -1} if 1 < p_val < 2 else {0, 1})
            h2 = {analysis.sign_of(analysis.h_fn_d2(float(t), p))
                  for t in np.linspace(1e-3, 1.0, 1000)}
            h_ok = h2 <= ({0, -1} if 1 < p_val < 2 else {0, 1})
        else:
            g_ok = True
            h2 = {analysis.sign_of(analysis.h_tilde_fn_d2(float(t), p))
                  for t in np.linspace(1e-3, 1.0, 1000)}
            h_ok = h2 <= {0, -1}
        ok = v_ok and g_ok and h_ok
        if not ok:
            violations += 1
        print("p=%s  v:%s g:%s h'':%s  %s"
              % (fmt(p_val), "ok" if v_ok else "FAIL", "ok" if g_ok else "FAIL",
                 "ok" if h_ok else "FAIL", "pass" if ok else "VIOLATION"))
    for p_val in (-1.0, 0.5, 1.5, 3.0):
        rep = analysis.torsion_sign_changes(classify(p_val))
        expect = ("minus_to_plus" if (0 < p_val < 1 or p_val > 2)
                  else "plus_to_minus")
        ok = rep.count == 1 and rep.direction == expect and abs(rep.location) <= 1e-2
        if not ok:
            violations += 1
        print("torsion p=%s: count=%d location=%s direction=%s  %s"
              % (fmt(p_val), rep.count, fmt(rep.location), rep.direction,
                 "pass" if ok else "VIOLATION"))
    return violations, 0.0


def _verify_oracle(n):
    violations = 0
    worst = 0.0
    for p_val in P_GRID:
        p = classify(p_val)
        for kind, closed in (("concave", upper_envelope), ("convex", lower_envelope)):
            oc = EnvelopeOracle(p, kind, n)
            err = 0.0
            for s, z in _interior_grid():
                ov = float(oc.evaluate(np.array(s), np.array(z)))
                cf = closed(p, ConeTriple(1.0 + s, 1.0 - s, z))
                err = max(err, abs(ov - cf) / max(1.0, abs(cf)))
            worst = max(worst, err)
            if err > 2e-2:
                violations += 1
            print("p=%s %s: max rel err %s" % (fmt(p_val), kind, fmt(err)))
    return violations, worst


def _interior_grid(m=20, margin=0.02):
    pts = []
    for s in np.linspace(-1.0 + margin, 1.0 - margin, m):
        zmax = math.sqrt(1.0 - s * s)
        for z in np.linspace(margin, zmax - margin, m):
            if z > 0.0 and s * s + z * z < (1.0 - margin) ** 2:
                pts.append((float(s), float(z)))
    return pts


def cmd_verify(args):
    if args.suite == "pair":
        violations, worst = _verify_pair(args.seed, args.samples)
    elif args.suite == "sum":
        violations, worst = _verify_sum(args.seed, args.samples, args.p_neg)
    elif args.suite == "analysis":
        violations, worst = _verify_analysis()
    elif args.suite == "oracle":
        violations, worst = _verify_oracle(args.n)
    else:
        raise ValueError("unknown suite %r" % (args.suite,))
    print("violations=%d worst_margin=%s" % (violations, fmt(worst)))
    return 1 if violations else 0


def cmd_table(args):
    if args.grid < 2:
        raise ValueError("grid must be at least 2")
    ps = [classify(float(v)) for v in args.p_list.split(",")]
    rows = ["p,s,z,F,G,upper,lower,carlen"]
    for p in ps:
        for s in np.linspace(-1.0, 1.0, args.grid):
            zmax = math.sqrt(max(0.0, 1.0 - s * s))
            for frac in np.linspace(0.0, 1.0, args.grid):
                z = frac * zmax
                t = ConeTriple(1.0 + s, 1.0 - s, z)
                rows.append(",".join(fmt(v) for v in (
                    p.p, s, z, eval_F(p, t), eval_G(p, t),
                    upper_envelope(p, t), lower_envelope(p, t),
                    carlen_bound(p, t),
                )))
    text = "\n".join(rows) + "\n"
    if args.out:
        try:
            with open(args.out, "w", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print("cannot write %s: %s" % (args.out, exc), file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return 0


def cmd_oracle_compare(args):
    p = classify(args.p)
    closed = upper_envelope if args.kind == "concave" else lower_envelope
    oc = EnvelopeOracle(p, args.kind, args.n)
    rows = ["p,s,z,closed_form,oracle,abs_err,N"]
    for s, z in _interior_grid(args.grid):
        cf = closed(p, ConeTriple(1.0 + s, 1.0 - s, z))
        ov = float(oc.evaluate(np.array(s), np.array(z)))
        rows.append(",".join(
            fmt(v) for v in (p.p, s, z, cf, ov, abs(ov - cf))) + ",%d" % args.n)
    text = "\n".join(rows) + "\n"
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="lpenv")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bound", help="evaluate the bounds at a triple or a pair of files")
    b.add_argument("-p", type=float, required=True)
    b.add_argument("triple", nargs="*", type=float)
    b.add_argument("--files", nargs=2, metavar=("F", "G"))
    b.set_defaults(func=cmd_bound)

    e = sub.add_parser("extremal", help="construct an equality-achieving pair")
    e.add_argument("-p", type=float, required=True)
    e.add_argument("triple", nargs=3, type=float)
    e.add_argument("--which", choices=("F", "G"), required=True)
    e.set_defaults(func=cmd_extremal)

    v = sub.add_parser("verify", help="run an invariant suite")
    v.add_argument("suite", choices=("pair", "sum", "analysis", "oracle"))
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=10000)
    v.add_argument("--n", type=int, default=512)
    v.add_argument("--p-neg", action="store_true",
                   help="reproduce the p<0 many-function counterexample")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="sample the envelopes over a grid, CSV out")
    t.add_argument("--p-list", required=True)
    t.add_argument("--grid", type=int, default=16)
    t.add_argument("--out")
    t.set_defaults(func=cmd_table)

    o = sub.add_parser("oracle-compare", help="closed form vs numerical oracle, CSV out")
    o.add_argument("-p", type=float, required=True)
    o.add_argument("--kind", choices=("concave", "convex"), default="concave")
    o.add_argument("--n", type=int, default=512)
    o.add_argument("--grid", type=int, default=20)
    o.add_argument("--out")
    o.set_defaults(func=cmd_oracle_compare)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
