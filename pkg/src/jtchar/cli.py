"""Command-line front end: verify identities, print complexes, tables and decompositions.

Exit codes: 0 when the compared sides agree, 1 on a mismatch, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .charring import HalvingError, SeriesSpace, format_key
from .engine import (CaseId, DomainError, as_weight, complex_lines, det_formula, det_shape, entry_labels,
                     euler_raw, normalize_label)
from .oracle import hwv_char, lhs_partition_sum, skew_lr_check, use_cache
from .poly import Alphabet
from .symfun import schur_decompose, schur_polynomial, tableau_schur_polynomial

CASES = ("jacobi-trudi", "gessel", "generic", "skew", "sym-even", "sym-odd", "spinor-odd", "spinor-even", "skew-lr")
ENGINE_NAME = {"gessel": "generic", "skew-lr": "generic"}


class UsageError(Exception):
    pass


def parse_weight(text: str | None) -> tuple:
    if text is None or not text.strip():
        return ()
    try:
        return tuple(Fraction(t.strip()) for t in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse weight {text!r}") from exc


def _fmt_weight(vals) -> list:
    return [str(Fraction(v)) for v in vals]


def _case(args) -> CaseId:
    if args.case == "jacobi-trudi":
        raise UsageError("jacobi-trudi has no Zelevinsky complex")
    return CaseId(ENGINE_NAME.get(args.case, args.case), args.k)


def _space(args, case: CaseId | None, warn) -> SeriesSpace:
    cap = args.degree
    nx = args.vars_x if args.vars_x is not None else max(cap, 1)
    ny = args.vars_y if args.vars_y is not None else max(cap, 1)
    for label, n in (("--vars-x", nx), ("--vars-y", ny)):
        if n < 1:
            raise UsageError(f"{label} must be positive")
    two = case is not None and case.mode == "two"
    if nx < cap or (two and ny < cap):
        warn(f"warning: alphabet size below the degree cap {cap}; the comparison is not faithful")
    if two:
        return SeriesSpace.two(cap, cap, nx, ny)
    return SeriesSpace.single(cap, nx)


def _write(args, text: str):
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


# verify


def run_verify(args, warn=None) -> tuple[int, dict]:
    warn = warn or (lambda msg: print(msg, file=sys.stderr))
    timings = {}
    lam_vals = parse_weight(args.lam)
    if args.case == "jacobi-trudi":
        return _verify_jacobi_trudi(args, lam_vals, warn)
    case = _case(args)
    space = _space(args, case, warn)
    t0 = time.perf_counter()
    if args.case == "skew-lr":
        mu_vals = parse_weight(args.mu)
        rhs, lhs = skew_lr_check(case.k, lam_vals, mu_vals, space)
        reference = "oracle"
        timings["total"] = time.perf_counter() - t0
        lam = as_weight(lam_vals, case.k)
    else:
        lam = as_weight(lam_vals, case.k) if lam_vals else case.base_weight()
        variant = args.variant or "proposition"
        rhs = det_formula(case, lam, space, variant)
        timings["determinant"] = time.perf_counter() - t0
        t1 = time.perf_counter()
        if args.oracle:
            lhs, reference = hwv_char(case, lam, space), "oracle"
        elif lam == case.base_weight() and space.faithful:
            lhs, reference = lhs_partition_sum(case, space), "partition-sum"
        else:
            lhs, reference = euler_raw(case, lam, space), "euler"
        timings["reference"] = time.perf_counter() - t1
    diff = lhs.first_difference(rhs)
    report = {
        "case": args.case,
        "k": case.k,
        "lambda": _fmt_weight(lam.values),
        "degree": args.degree,
        "vars": list(space.nvars),
        "variant": None if args.case == "skew-lr" else (args.variant or "proposition"),
        "reference": reference,
        "oracle_used": reference == "oracle",
        "equal": diff is None,
        "first_mismatch": None if diff is None else
        {"monomial": format_key(diff[0], space), "lhs": diff[1], "rhs": diff[2]},
        "timings": {k: round(v, 6) for k, v in timings.items()},
        "faithful": space.faithful,
    }
    if args.case == "skew-lr":
        report["mu"] = _fmt_weight(as_weight(parse_weight(args.mu), case.k).values)
    return (0 if diff is None else 1), report


def _verify_jacobi_trudi(args, lam_vals, warn) -> tuple[int, dict]:
    if any(Fraction(v).denominator != 1 or v < 0 for v in lam_vals):
        raise UsageError("jacobi-trudi needs a partition")
    lam = tuple(int(v) for v in lam_vals)
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise UsageError(f"{lam} is not a partition")
    n = args.vars_x if args.vars_x is not None else max(sum(lam), 1)
    if n < 1:
        raise UsageError("--vars-x must be positive")
    if n < len(lam):
        warn(f"warning: {n} variables cannot see partitions with {len(lam)} rows")
    a = Alphabet("x", n)
    t0 = time.perf_counter()
    jt = schur_polynomial(lam, a)
    t1 = time.perf_counter()
    tab = tableau_schur_polynomial(lam, a)
    t2 = time.perf_counter()
    diff = None
    for mono in sorted(set(jt.terms) | set(tab.terms), reverse=True):
        if jt.coefficient(mono) != tab.coefficient(mono):
            diff = {"monomial": jt._mono_str(mono) or "1", "lhs": tab.coefficient(mono),
                    "rhs": jt.coefficient(mono)}
            break
    report = {
        "case": "jacobi-trudi", "k": len(lam), "lambda": [str(x) for x in lam], "degree": sum(lam),
        "vars": [n], "variant": None, "reference": "tableaux", "oracle_used": False,
        "equal": diff is None, "first_mismatch": diff,
        "timings": {"determinant": round(t1 - t0, 6), "reference": round(t2 - t1, 6)},
        "faithful": n >= sum(lam),
    }
    return (0 if diff is None else 1), report


def _report_text(r: dict) -> str:
    lines = [
        f"case {r['case']}  k={r['k']}  lambda=({', '.join(r['lambda'])})  degree<={r['degree']}  vars={r['vars']}",
        f"reference: {r['reference']}" + (f"  variant: {r['variant']}" if r.get("variant") else ""),
    ]
    if r["equal"]:
        lines.append("EQUAL")
    else:
        m = r["first_mismatch"]
        lines.append(f"MISMATCH at {m['monomial']}: lhs {m['lhs']}, rhs {m['rhs']}")
    if not r["faithful"]:
        lines.append("(not faithful: fewer variables than the degree cap)")
    return "\n".join(lines)


def _report_latex(r: dict) -> str:
    status = r"\text{equal}" if r["equal"] else (
        r"\text{mismatch at }" + r["first_mismatch"]["monomial"].replace("*", " "))
    return (r"\begin{tabular}{ll}" "\n"
            f"case & {r['case']} \\\\\n"
            f"$k$ & {r['k']} \\\\\n"
            f"$\\lambda$ & $({', '.join(r['lambda'])})$ \\\\\n"
            f"degree & {r['degree']} \\\\\n"
            f"result & ${status}$ \\\\\n"
            r"\end{tabular}")


# complex / table / decompose


def run_complex(args) -> str:
    case = _case(args)
    lam = as_weight(parse_weight(args.lam), case.k) if args.lam else case.base_weight()
    parity = None if args.parity is None else (1 if args.parity == "+" else -1)
    lines = complex_lines(case, lam, parity)
    if args.normalize:
        if case.mode != "single":
            raise UsageError("--normalize only applies to single-alphabet cases")
        lines = [(d, [normalize_label(s) for s in labels]) for d, labels in lines]
    if args.format == "json":
        return json.dumps({"case": args.case, "k": case.k, "lambda": _fmt_weight(lam.values),
                           "terms": [{"degree": d, "labels": labels} for d, labels in lines]},
                          sort_keys=True)
    if args.format == "latex":
        def cell(labels):
            tex = [s.replace("⊗", r" \otimes ").replace("SymE", r"\Sym E") for s in labels]
            tex = [_latex_subscripts(s) for s in tex]
            if len(tex) == 1:
                return tex[0]
            return r"{\begin{array}{c} " + r" \\ ".join(tex) + r" \end{array}}"
        return r"0 \to " + r" \to ".join(cell(labels) for _, labels in lines)
    return "\n".join(f"F{d}: " + " ⊕ ".join(labels) for d, labels in lines)


def _latex_subscripts(s: str) -> str:
    import re

    return re.sub(r"([LM])_(-?\d+)", r"\1_{\2}", s)


def _table_variant(args, case: CaseId, lam) -> str:
    if args.variant:
        return args.variant
    return "display" if lam == case.base_weight() else "proposition"


def run_table(args) -> str:
    case = _case(args)
    lam = as_weight(parse_weight(args.lam), case.k) if args.lam else case.base_weight()
    variant = _table_variant(args, case, lam)
    shape = det_shape(case, lam, variant)
    labels = entry_labels(shape)
    prefix = ("1/2 " if shape.halve and shape.entries else "") + ("[Sym(E)] " if shape.symE else "")
    if args.format == "json":
        return json.dumps({"case": args.case, "k": case.k, "lambda": _fmt_weight(lam.values),
                           "variant": variant, "halve": shape.halve, "symE": shape.symE,
                           "entries": [[[list(t) for t in e] for e in row] for row in shape.entries]},
                          sort_keys=True)
    if args.format == "latex":
        body = r" \\ ".join(" & ".join(_latex_entry(e) for e in row) for row in shape.entries)
        pre = (r"\frac12 " if shape.halve and shape.entries else "") + (r"[\Sym(E)] " if shape.symE else "")
        return pre + r"\det\begin{bmatrix} " + body + r" \end{bmatrix}"
    width = max((len(s) for row in labels for s in row), default=0)
    rows = ["  ".join(s.rjust(width) for s in row) for row in labels]
    head = f"{prefix}det of the {case.k}x{case.k} matrix ({variant}):"
    return "\n".join([head] + rows)


def _latex_entry(entry) -> str:
    out = ""
    for sign, n in entry:
        out += ("-" if sign < 0 else ("+" if out else "")) + f"[L_{{{n}}}]"
    return out


def run_decompose(args) -> str:
    case = _case(args)
    lam = as_weight(parse_weight(args.lam), case.k) if args.lam else case.base_weight()
    space = _space(args, case, lambda msg: print(msg, file=sys.stderr))
    series = hwv_char(case, lam, space)
    expansion = schur_decompose(series)
    entries = [(key, c) for key, c in expansion.items()]
    if args.format == "json":
        return json.dumps({"case": args.case, "k": case.k, "lambda": _fmt_weight(lam.values),
                           "degree": args.degree,
                           "multiplicities": [{"partitions": [list(p) for p in key], "multiplicity": c}
                                              for key, c in entries]}, sort_keys=True)
    if args.format == "latex":
        return " + ".join((f"{c}" if c != 1 else "") + "".join(
            r"s_{(" + ",".join(map(str, p)) + ")}" for p in key) for key, c in entries) or "0"
    lines = [f"V[{', '.join(_fmt_weight(lam.values))}] for {case}, degree <= {args.degree}:"]
    for key, c in entries:
        deg = "+".join(str(sum(p)) for p in key)
        shapes = " ".join("(" + ",".join(map(str, p)) + ")" for p in key)
        lines.append(f"  degree {deg}: s{shapes}  x{c}")
    return "\n".join(lines)


# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jtchar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, degree=True):
        p.add_argument("--case", required=True, choices=CASES)
        p.add_argument("--k", type=int, default=None, help="rank of the Weyl group (default: length of --lambda)")
        p.add_argument("--lambda", dest="lam", default=None, help="comma list, halves as 1/2")
        p.add_argument("--format", choices=("text", "json", "latex"), default="text")
        p.add_argument("--output", default=None, help="write to this file instead of stdout")
        p.add_argument("--cache", default=None, help="JSON memo file for irreducible characters")
        p.add_argument("--variant", default=None,
                       choices=("proposition", "display", "display-plus", "display-minus",
                                "unsimplified", "column-reduced", "printed"))
        if degree:
            p.add_argument("--degree", type=int, default=4, help="degree cap (default 4)")
            p.add_argument("--vars-x", type=int, default=None)
            p.add_argument("--vars-y", type=int, default=None)

    v = sub.add_parser("verify", help="compare a closed form against an independent reference")
    common(v)
    v.add_argument("--mu", default=None, help="second weight for skew-lr")
    v.add_argument("--oracle", action="store_true", help="use the highest-weight decomposition oracle")

    c = sub.add_parser("complex", help="print the terms of the Zelevinsky complex")
    common(c, degree=False)
    c.add_argument("--parity", choices=("+", "-"), default=None, help="sym-odd: tag terms with M_0/M_1")
    c.add_argument("--normalize", action="store_true", help="print L_-n as L_n")

    t = sub.add_parser("table", help="print the determinant's entry matrix")
    common(t, degree=False)

    d = sub.add_parser("decompose", help="list oracle multiplicities in the Schur basis")
    common(d)
    return parser


def _fill_k(args):
    if args.k is None:
        args.k = len(parse_weight(args.lam)) if args.lam else None
    if args.k is None and args.case != "jacobi-trudi":
        raise UsageError("--k is required when --lambda is not given")
    if args.k is not None and args.k < 0:
        raise UsageError("--k must be nonnegative")
    if getattr(args, "degree", 0) is not None and getattr(args, "degree", 0) < 0:
        raise UsageError("--degree must be nonnegative")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cache = None
    try:
        _fill_k(args)
        cache = use_cache(args.cache)
        if args.command == "verify":
            code, report = run_verify(args)
            if args.format == "json":
                text = json.dumps(report, sort_keys=True)
            elif args.format == "latex":
                text = _report_latex(report)
            else:
                text = _report_text(report)
            _write(args, text)
            return code
        if args.command == "complex":
            _write(args, run_complex(args))
        elif args.command == "table":
            _write(args, run_table(args))
        else:
            _write(args, run_decompose(args))
        return 0
    except HalvingError as exc:
        print(f"{parser.prog}: halving failed: {exc}", file=sys.stderr)
        return 1
    except (UsageError, DomainError, ValueError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    finally:
        if cache is not None:
            cache.save()
        use_cache(None)


if __name__ == "__main__":
    sys.exit(main())
