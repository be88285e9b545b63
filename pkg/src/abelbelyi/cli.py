"""Command-line interface.

Subcommands
-----------
counts     closed-form counts of toric Abel-Belyi pairs (C or F_p-bar)
enumerate  cyclic classes of hex/box dessins with automorphisms and powers
total      (n-1)!/n, optionally checked against the orbit-enumeration oracle
cusps      cusp catalog of kappa_n on X_1(n) and deg kappa_n
genus      genus of X_1(n), standard formula next to the squarefree shortcut
kappa6     the degree-6 family: kappa_6 at t, its reduction mod p, the census
pade       Pade construction of p - q y on y^2 = 1 + a x + b x^2 + c x^3

Every command prints a report with the command, its inputs, exact results
(rationals as "p/q", polynomials as {"degree k": "coeff"}) and notes, either
as JSON (``--format json``) or as aligned text.  Exit status is 0 on
success, 2 when the input violates a hypothesis, 3 on a degenerate outcome.

Examples::

    python -m abelbelyi counts --n 6 --char 5
    python -m abelbelyi enumerate --n 6 --shape box
    python -m abelbelyi kappa6 --reduce 5
    python -m abelbelyi pade --n 3 --curve 2,1,-4
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import counts, dessins, family6
from .abelforms import Degenerate
from .arith import field_of
from .pade import CubicCurve, DegeneratePade, abel_candidate, torsion_order

EXIT_OK, EXIT_INPUT, EXIT_DEGENERATE = 0, 2, 3


class DegenerateOutcome(Exception):
    """A computation finished without a usable answer; carries the partial report."""

    def __init__(self, message: str, report: dict | None = None):
        super().__init__(message)
        self.report = report


def _report(command: str, inputs: dict, results: dict, notes=()) -> dict:
    return {"command": command, "inputs": inputs, "results": results, "notes": list(notes)}


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc


def _curve_arg(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError("--curve expects a,b,c")
    return tuple(_rational(p) for p in parts)


def cmd_counts(args) -> dict:
    rep = counts.count_closed(args.n, args.char)
    notes = list(rep.notes)
    notes.append("m_hex, m_box weighted by 1/|Aut|; primitive counts are not powers of another Abel function")
    return _report("counts", {"n": args.n, "char": args.char}, rep.to_dict(), notes)


def cmd_enumerate(args) -> dict:
    classes = dessins.enumerate_shape(args.n, args.shape)
    if args.primitive:
        classes = [c for c in classes if dessins.is_primitive(c)]
    rows = [
        {
            "class": str(c),
            "parts": list(c.parts),
            "aut_order": dessins.aut_order(c),
            "power_orders": dessins.power_orders(c),
            "primitive": dessins.is_primitive(c),
        }
        for c in classes
    ]
    weighted = sum((Fraction(1, r["aut_order"]) for r in rows), Fraction(0))
    results = {"classes": rows, "number_of_classes": len(rows), "weighted_count": str(weighted)}
    return _report(
        "enumerate",
        {"n": args.n, "shape": args.shape, "primitive": args.primitive},
        results,
        ["power_orders lists m > 1 for which the Belyi function is an m-th power"],
    )


def cmd_total(args) -> dict:
    value = dessins.total_abel_belyi(args.n)
    results = {"total": str(value)}
    notes = ["weighted count of Abel-Belyi pairs of degree n over all genera"]
    if args.oracle:
        oracle = dessins.total_abel_belyi_oracle(args.n)
        results["oracle"] = str(oracle)
        results["agree"] = oracle == value
        if oracle != value:
            raise DegenerateOutcome("closed form disagrees with the oracle", _report("total", {"n": args.n}, results))
    return _report("total", {"n": args.n, "oracle": args.oracle}, results, notes)


def cmd_cusps(args) -> dict:
    counts.check_char(args.char, args.n)
    catalog = counts.cusp_catalog(args.n, args.char)
    results = {
        "cusps": [c.to_dict() for c in catalog],
        "number_of_cusps": str(sum((c.count for c in catalog), Fraction(0))),
        "pole_degree_from_catalog": str(counts.deg_kappa_from_catalog(args.n, args.char)),
    }
    if args.n >= 4:
        results["deg_kappa"] = str(counts.deg_kappa_charp(args.n, args.char))
    return _report("cusps", {"n": args.n, "char": args.char}, results)


def cmd_genus(args) -> dict:
    results = {"genus": counts.genus_X1_standard(args.n)}
    notes = []
    try:
        results["squarefree_shortcut"] = counts.genus_X1(args.n)
    except ArithmeticError as exc:
        results["squarefree_shortcut"] = None
        notes.append(str(exc))
    if results["squarefree_shortcut"] not in (None, results["genus"]):
        notes.append("shortcut phi*psi/24 - phi*sigma0/4 + 1 is only valid for squarefree n")
    return _report("genus", {"n": args.n}, results, notes)


def cmd_kappa6(args) -> dict:
    if args.t is not None:
        F = field_of(args.char)
        t = _rational(args.t)
        value = family6.kappa6_via_resultant(t, F)
        inputs = {"t": args.t, "char": args.char}
        if isinstance(value, Degenerate):
            raise DegenerateOutcome(value.reason, _report("kappa6", inputs, {"degenerate": value.reason}))
        closed = family6.kappa6_closed(F)(F(t))
        results = {"kappa_resultant": str(value), "kappa_closed_form": str(closed), "agree": value == closed}
        return _report("kappa6", inputs, results)
    if args.reduce is not None:
        F = field_of(args.reduce)
        k = family6.kappa6_closed(F)
        results = {"field": F.tag, "kappa": k.to_dict(), "kappa_text": k.pretty("t"), "kappa_factored": k.factored("t")}
        return _report("kappa6", {"reduce": args.reduce}, results)
    report = family6.kappa6_census(field_of(args.char))
    results = report.to_dict()
    results["kappa_factored"] = report.kappa.factored("t")
    hexes, boxes = family6.census_totals(report)
    results["m_hex"], results["m_box"] = str(hexes), str(boxes)
    notes = ["simple zeros at type-(i) cusps are removed before reading multiplicities"]
    if report.unexplained:
        raise DegenerateOutcome("zeros of unexpected multiplicity", _report("kappa6", {"census": True}, results))
    return _report("kappa6", {"census": True, "char": args.char}, results, notes)


def cmd_pade(args) -> dict:
    F = field_of(args.char)
    a, b, c = _curve_arg(args.curve)
    curve = CubicCurve(a, b, c, F)
    inputs = {"curve": [str(curve.a), str(curve.b), str(curve.c)], "char": args.char}
    if args.torsion is not None:
        res = torsion_order(curve, args.torsion)
        inputs["n_max"] = args.torsion
        results = {
            "order": res.order,
            "indeterminate": list(res.indeterminate),
        }
        notes = [] if res.order is not None else [f"A - B has no order <= {args.torsion} detected"]
        return _report("pade", inputs, results, notes)
    if args.n is None:
        raise ValueError("pade needs --n or --torsion")
    inputs["n"] = args.n
    try:
        cand = abel_candidate(curve, args.n)
    except DegeneratePade as exc:
        raise DegenerateOutcome(str(exc), _report("pade", inputs, {"degenerate": str(exc)})) from exc
    return _report("pade", inputs, cand.to_dict(), ["divisor of p - q y is (n-1)A + C - nB"])


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="abelbelyi", description="Abel and Abel-Belyi pairs of genus 1, exactly.")
    ap.add_argument("--format", choices=("json", "text"), default="text")
    ap.add_argument("--out", metavar="FILE", help="write the report to FILE instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        # accept the common options after the subcommand too
        p.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
        p.add_argument("--out", metavar="FILE", default=argparse.SUPPRESS)
        return p

    p = add("counts", cmd_counts, "closed-form counts m_hex, m_box and primitive counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--char", type=int, default=0)

    p = add("enumerate", cmd_enumerate, "list dessin classes of one shape")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--shape", choices=sorted(dessins.SHAPES), required=True)
    p.add_argument("--primitive", action="store_true")

    p = add("total", cmd_total, "total weighted number of Abel-Belyi pairs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--oracle", action="store_true")

    p = add("cusps", cmd_cusps, "cusp catalog of kappa_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--char", type=int, default=0)

    p = add("genus", cmd_genus, "genus of X_1(n)")
    p.add_argument("--n", type=int, required=True)

    p = add("kappa6", cmd_kappa6, "the explicit degree-6 family")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--t", help="evaluate kappa_6 at this rational t both ways")
    g.add_argument("--reduce", type=int, metavar="P", help="reduce kappa_6 mod P")
    g.add_argument("--census", action="store_true", help="primitive census from the zeros of kappa_6")
    p.add_argument("--char", type=int, default=0)

    p = add("pade", cmd_pade, "Pade construction of Abel functions on a cubic")
    p.add_argument("--curve", required=True, metavar="A,B,C")
    p.add_argument("--n", type=int)
    p.add_argument("--torsion", type=int, metavar="N_MAX", help="order of A - B, searched up to N_MAX")
    p.add_argument("--char", type=int, default=0)
    return ap


def _validate(args) -> None:
    n = getattr(args, "n", None)
    if args.command == "counts" and n is not None and n <= 3:
        raise ValueError("n must be > 3")
    if args.command in ("enumerate", "total", "cusps") and n is not None and n < 3:
        raise ValueError("n must be >= 3")
    if args.command == "genus" and n < 5:
        raise ValueError("n must be >= 5")
    char = getattr(args, "char", 0)
    counts.check_char(char, n if args.command in ("counts", "cusps") else None)
    if args.command == "kappa6":
        p = args.reduce if args.reduce is not None else char
        counts.check_char(p, family6.N)


def _text(value, indent: int = 0) -> list:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        width = max((len(str(k)) for k in value), default=0)
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{str(k).ljust(width)}  {_scalar(v)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, dict):
                lines.append(f"{pad}- " + ", ".join(f"{k}={_scalar(v)}" for k, v in item.items()))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(pad + _scalar(value))
    return lines


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=False)
    return str(v)


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2)
    return "\n".join(_text(report))


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _validate(args)
        report = args.func(args)
    except DegenerateOutcome as exc:
        if exc.report is not None:
            _emit(render(exc.report, args.format), args.out)
        print(f"degenerate: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(render(report, args.format), args.out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
