"""Command-line front end.

Exit codes: 0 success/PASS, 1 FAIL or NOT_UNIVALENT, 2 usage or
configuration error, 3 UNCERTAIN.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

import numpy as np

from . import scanner, trig_core, univalence, variation
from .errors import BombieriError, ConfigError, DegenerateError
from .quadrature import QuadratureConfig

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNCERTAIN = 0, 1, 2, 3
STATUS_EXIT = {
    univalence.UnivalenceStatus.UNIVALENT_SAMPLED: EXIT_OK,
    univalence.UnivalenceStatus.NOT_UNIVALENT: EXIT_FAIL,
    univalence.UnivalenceStatus.UNCERTAIN: EXIT_UNCERTAIN,
}


def parse_coeffs(text: str, normalized: bool = False) -> univalence.ComplexPolynomial:
    """Comma-separated c_1..c_d (or c_2..c_d with ``normalized``); complex as a+bi."""
    items = [s.strip() for s in text.split(",") if s.strip()]
    try:
        values = [complex(s.replace("i", "j").replace(" ", "")) for s in items]
    except ValueError as exc:
        raise ConfigError(f"bad coefficient list {text!r}") from exc
    head = [0, 1] if normalized else [0]
    return univalence.ComplexPolynomial(tuple(head + values))


def _phi_weight(spec: str) -> variation.PhiWeight:
    if spec == "linear":
        return variation.LINEAR
    if spec.startswith("const:"):
        try:
            return variation.LINEAR.scaled(float(spec.split(":", 1)[1]))
        except ValueError:
            pass
    raise argparse.ArgumentTypeError(f"--phi must be 'linear' or 'const:C', got {spec!r}")


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x)
    return "inf" if x == math.inf else f"{x:.17g}"


def cmd_bnum(args) -> int:
    cfg = trig_core.MinimizeConfig(grid_mult=args.grid_mult)
    res = trig_core.minimize_B(args.m, args.n, cfg)
    expected = Fraction(args.n**3 - args.n, args.m**3 - args.m)
    verdict = scanner.judge(res.value, expected, args.tol)
    if args.json:
        print(json.dumps({
            "m": args.m, "n": args.n, "B": res.value, "argmin_t": res.endpoint or res.argmin,
            "margin": res.margin if math.isfinite(res.margin) else "inf",
            "expected": str(expected), "verdict": verdict.value, "grid_points": res.grid_points,
        }))
    else:
        print(f"B={res.value:.17g}")
        print(f"argmin={res.argmin_label}")
        print(f"margin={_fmt(res.margin)}")
        print(f"expected={expected} ({float(expected):.17g})")
        print(f"verdict={verdict.value}")
    return EXIT_OK


def cmd_scan(args) -> int:
    cfg = trig_core.MinimizeConfig()
    records = scanner.scan(args.max, cfg, args.tol, workers=args.threads)
    text = scanner.records_to_json(records) if args.format == "json" else scanner.records_to_csv(records)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.max >= 9:
        print(scanner.conjecture_report(records).table(), file=sys.stderr)
    return EXIT_OK


def cmd_dieudonne(args) -> int:
    p = parse_coeffs(args.coeffs, args.normalized)
    verdict = univalence.dieudonne_check(p, args.samples)
    print(f"status={verdict.status.value}")
    print(f"samples={verdict.samples}")
    print(f"worst_margin={verdict.worst_margin:.6g}")
    if verdict.witness_t is not None:
        print(f"witness_t={verdict.witness_t:.17g}")
    return STATUS_EXIT[verdict.status]


def cmd_family(args) -> int:
    n = args.n
    f = univalence.family_poly(n)
    exact = univalence.family_coefficients(n)
    print("f(z) = " + " + ".join(f"({c})*z^{k}" for k, c in sorted(exact.items())))
    if args.check == "roots":
        closed = univalence.family_root_modulus(n)
        numeric = univalence.zeros_in_unit_disk(f.shift_down()).min_root_modulus
        print(f"closed_modulus={closed:.17g}")
        print(f"numeric_modulus={numeric:.17g}")
        ok = abs(closed - numeric) <= 1e-8 and closed > 1
        print("PASS" if ok else "FAIL")
        return EXIT_OK if ok else EXIT_FAIL
    if args.check == "dieudonne":
        verdict = univalence.dieudonne_check(f)
        print(f"status={verdict.status.value} worst_margin={verdict.worst_margin:.6g}")
        return STATUS_EXIT[verdict.status]
    verdict = univalence.starlike_check(f)
    print(f"min_re={verdict.margin:.6g} at theta={verdict.witness:.6g}")
    print("PASS" if verdict.passed else "FAIL")
    return EXIT_OK if verdict.passed else EXIT_FAIL


def cmd_qn(args) -> int:
    if args.max < 2:
        raise BombieriError("--max must be >= 2")
    series = variation.q_series_coefficients(args.max)
    print("n,q_n(Leung)" if args.leung else "n,q_n,q_n(Leung)")
    for n, q in zip(range(2, args.max + 1), series):
        if args.leung:
            print(f"{n},{variation.leung_qn(n)}")
        else:
            print(f"{n},{q},{variation.leung_qn(n)}")
    return EXIT_OK


def cmd_qq(args) -> int:
    phi = args.phi
    w = args.w
    closed = phi.scale**2 * variation.Q_closed(w)
    print(f"w={w:.17g}")
    print(f"Q_closed={closed:.17g}")
    if args.numeric:
        numeric = variation.Q_numeric(w, phi, QuadratureConfig())
        print(f"Q_numeric={numeric:.17g}")
        print(f"difference={numeric - closed:.3g}")
    return EXIT_OK


def cmd_lemma3(args) -> int:
    rep = trig_core.check_lemma3(args.n, args.grid)
    print(f"n={rep.n} grid={rep.grid_points}")
    print(f"ratio_margin={rep.ratio_margin:.6g} at t={rep.ratio_witness:.17g}")
    print(f"Phi_min={rep.phi_margin:.6g} at t={rep.phi_witness:.17g}")
    print("PASS" if rep.passed else "FAIL")
    return EXIT_OK if rep.passed else EXIT_FAIL


def phi_plot_rows(m: int, n: int, samples: int) -> list:
    """[(t, phi)] with t tagged "0" / "pi" for the endpoint limits."""
    if samples < 100:
        raise BombieriError("--samples must be >= 100")
    profile = trig_core.RatioProfile(m, n)
    limit0, limit_pi = trig_core.endpoint_limits(m, n)
    t = np.arange(1, samples + 1) * (math.pi / (samples + 1))
    values = trig_core.eval_phi(profile, t)
    rows = [("0", float(limit0))]
    rows.extend((f"{ti:.17g}", float(v)) for ti, v in zip(t, values))
    rows.append(("pi", float(limit_pi)))
    return rows


def cmd_phi_plot(args) -> int:
    rows = phi_plot_rows(args.m, args.n, args.samples)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write("t,phi\n")
        for t, v in rows:
            fh.write(f"{t},{_fmt(v)}\n")
    print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bombieri", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bnum", help="compute B_mn")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--grid-mult", type=int, default=64)
    p.add_argument("--tol", type=float, default=scanner.DEFAULT_TOL)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bnum)

    p = sub.add_parser("scan", help="sweep all pairs 2 <= n < m <= M")
    p.add_argument("--max", type=int, default=scanner.DEFAULT_MAX)
    p.add_argument("--out")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--tol", type=float, default=scanner.DEFAULT_TOL)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("dieudonne", help="sampled Dieudonne criterion")
    p.add_argument("--coeffs", required=True, help="c_1,...,c_d (c_2,... with --normalized)")
    p.add_argument("--normalized", action="store_true")
    p.add_argument("--samples", type=int, default=None)
    p.set_defaults(func=cmd_dieudonne)

    p = sub.add_parser("family", help="checks on z - 4/(3n-1) z^n + (n+1)/((2n-1)(3n-1)) z^(2n-1)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", choices=["roots", "dieudonne", "starlike"], required=True)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("qn", help="second-variation coefficients q_n")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--leung", action="store_true", help="only the -(4/9)(n-1)(2n^2-4n+3) normalization")
    p.set_defaults(func=cmd_qn)

    p = sub.add_parser("qq", help="Q(w) in closed form and by quadrature")
    p.add_argument("--w", type=float, required=True)
    p.add_argument("--numeric", action="store_true")
    p.add_argument("--phi", type=_phi_weight, default=variation.LINEAR)
    p.set_defaults(func=cmd_qq)

    p = sub.add_parser("lemma3", help="grid check of the n -> n+2 inequality")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--grid", type=int, default=100_000)
    p.set_defaults(func=cmd_lemma3)

    p = sub.add_parser("phi-plot", help="write t,phi samples for plotting")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=4096)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_phi_plot)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DegenerateError as exc:
        print(f"uncertain: {exc}", file=sys.stderr)
        return EXIT_UNCERTAIN
    except BombieriError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
