"""Command-line front end.

One verb per invocation; results go to stdout, diagnostics to stderr.
Exit status 0 on success, 1 on a usage error, 2 on a mathematical error
(e.g. extracting a B-sequence from a series that has none).

Coefficients are comma-separated exact rationals ("1,1/2,-3").  Wherever a
series is expected, the named builtins "pascal" (1/(1-x)), "catalan",
"motzkin" and "gbs:r:m" are accepted too.  Output formats: plain (default),
json (compact, rationals as strings) and csv.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from .array import RiordanArray, is_pseudo_involution
from .expansion import (
    a_coeff,
    all_partitions,
    b_coeff,
    binomial_series,
    binomial_type_checks,
    lagrange_check,
    odd_partitions,
    pascal_table,
)
from .poly import MU, MuPoly
from .sequences import (
    ASequence,
    BSequence,
    a_from_g,
    b_from_factorization,
    b_from_g,
    factorize,
    g_from_a,
    g_from_b,
    verify_a_recurrence,
    verify_b_recurrence,
)
from .series import Series, mul_inverse


class UsageError(Exception):
    """Bad flag values discovered after argparse; maps to exit status 1."""


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract here is 1."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


# -- flag value parsing ----------------------------------------------------


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text.strip()!r}")


def _coeff_list(text: str) -> list[Fraction]:
    items = text.split(",")
    if not any(item.strip() for item in items):
        raise argparse.ArgumentTypeError("empty coefficient list")
    return [_fraction(item) for item in items]


def _series_spec(text: str):
    """A coefficient list or a builtin name; resolved against --order later."""
    t = text.strip()
    if t in ("pascal", "catalan", "motzkin"):
        return ("builtin", t)
    if t.startswith("gbs:"):
        parts = t.split(":")
        if len(parts) != 3:
            raise argparse.ArgumentTypeError("builtin series syntax is gbs:r:m")
        try:
            r, m = int(parts[1]), int(parts[2])
        except ValueError:
            raise argparse.ArgumentTypeError("gbs:r:m needs integer r and m")
        if r < 1:
            raise argparse.ArgumentTypeError("gbs needs r >= 1")
        return ("gbs", r, m)
    return ("coeffs", _coeff_list(t))


def _letters(prefix: str):
    """Converter for expand inputs: symbolic letter names or numeric values."""

    start = 0 if prefix == "b" else 1

    def convert(text: str):
        items = [item.strip() for item in text.split(",")]
        if items and all(re.fullmatch(rf"{prefix}\d+", item) for item in items):
            indices = [int(item[1:]) for item in items]
            if indices != list(range(start, start + len(indices))):
                raise argparse.ArgumentTypeError(
                    f"symbolic letters must be {prefix}{start},{prefix}{start + 1},... in order"
                )
            return ("symbolic", len(indices))
        return ("coeffs", _coeff_list(text))

    return convert


def _power(text: str):
    t = text.strip()
    if t == "m":
        return "m"
    try:
        return int(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"power must be an integer or 'm', got {t!r}")


def _positive_int(name: str):
    def convert(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer")
        if value < 1:
            raise argparse.ArgumentTypeError(f"{name} must be at least 1")
        return value

    return convert


def _resolve_series(spec, order: int) -> Series:
    kind = spec[0]
    if kind == "builtin":
        name = spec[1]
        if name == "pascal":
            return mul_inverse(Series([1, -1], order=order))
        if name == "catalan":
            return binomial_series(2, 1, order)
        return g_from_a(ASequence([1, 1, 1]), order)
    if kind == "gbs":
        return binomial_series(spec[1], spec[2], order)
    return Series(spec[1], order=order)


# -- result payloads and rendering -----------------------------------------


@dataclass
class Result:
    kind: str
    data: dict


def _rat(value: Fraction) -> str:
    return str(value)


def _poly_dense(p: MuPoly) -> list[str]:
    dense = [str(c) for c in p.dense()]
    return dense if dense else ["0"]


def _coeff_plain(c) -> str:
    return str(c)


def _series_fields(coeffs) -> list[str]:
    """csv/json fields: rationals directly, polynomials space-joined dense."""
    out = []
    for c in coeffs:
        if isinstance(c, MuPoly):
            out.append(" ".join(_poly_dense(c)))
        else:
            out.append(_rat(c))
    return out


def _series_json_coeffs(coeffs):
    out = []
    for c in coeffs:
        if isinstance(c, MuPoly):
            out.append(_poly_dense(c))
        else:
            out.append(_rat(c))
    return out


def _json(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def format_output(result: Result, fmt: str) -> str:
    """Render a verb result in the requested format; byte-deterministic."""
    if fmt not in ("plain", "json", "csv"):
        raise UsageError(f"unknown format {fmt!r}")
    kind, data = result.kind, result.data

    if kind == "series":
        coeffs = data["coefficients"]
        if fmt == "plain":
            sep = "; " if any(isinstance(c, MuPoly) for c in coeffs) else ", "
            return sep.join(_coeff_plain(c) for c in coeffs)
        if fmt == "json":
            return _json({"order": data["order"], "coefficients": _series_json_coeffs(coeffs)})
        return ",".join(_series_fields(coeffs))

    if kind == "sequence":
        coeffs = data["coefficients"]
        if fmt == "plain":
            return ", ".join(_rat(c) for c in coeffs)
        if fmt == "json":
            return _json({"coefficients": [_rat(c) for c in coeffs]})
        return ",".join(_rat(c) for c in coeffs)

    if kind == "bool":
        text = "true" if data["value"] else "false"
        if fmt == "json":
            return _json({"pseudo_involution": data["value"]})
        return text

    if kind == "factorization":
        names = ("sqrt_g", "h", "s")
        if fmt == "plain":
            return "\n".join(
                f"{name}: " + ", ".join(_rat(c) for c in data[name]) for name in names
            )
        if fmt == "json":
            obj = {"order": data["order"]}
            for name in names:
                obj[name] = [_rat(c) for c in data[name]]
            return _json(obj)
        return "\n".join(
            ",".join([name] + [_rat(c) for c in data[name]]) for name in names
        )

    if kind == "table":
        rows = data["rows"]
        if fmt == "plain":
            return "\n".join(", ".join(_rat(c) for c in row) for row in rows)
        if fmt == "json":
            obj = {key: data[key] for key in data if key != "rows"}
            obj["rows"] = [[_rat(c) for c in row] for row in rows]
            return _json(obj)
        return "\n".join(",".join(_rat(c) for c in row) for row in rows)

    if kind == "expansion":
        rows = data["rows"]
        if fmt == "json":
            return _json(
                [
                    {
                        "exponents": list(row["exponents"]),
                        "n": row["n"],
                        "k": row["k"],
                        "q": row["q"],
                        "coefficient_poly": _poly_dense(row["poly"]),
                    }
                    for row in rows
                ]
            )
        if fmt == "csv":
            lines = []
            for row in rows:
                lines.append(
                    ",".join(
                        [
                            " ".join(str(e) for e in row["exponents"]),
                            str(row["n"]),
                            str(row["k"]),
                            str(row["q"]),
                            " ".join(_poly_dense(row["poly"])),
                        ]
                    )
                )
            return "\n".join(lines)
        lines = [
            f"{row['label']} : k={row['k']} q={row['q']} : {row['poly']}" for row in rows
        ]
        if data.get("total") is not None:
            lines.append(f"total : {data['total']}")
        return "\n".join(lines)

    if kind == "verify":
        checks = data["checks"]
        pseudo = "yes" if data["pseudo"] else "no"
        if fmt == "plain":
            lines = [f"pseudo-involution: {pseudo}"]
            lines += [f"{name}: {outcome}" for name, outcome in checks]
            return "\n".join(lines)
        if fmt == "json":
            return _json(
                {
                    "pseudo_involution": data["pseudo"],
                    "checks": [{"name": n, "result": r} for n, r in checks],
                }
            )
        lines = [f"pseudo-involution,{pseudo}"]
        lines += [f"{name},{outcome}" for name, outcome in checks]
        return "\n".join(lines)

    raise UsageError(f"unknown result kind {kind!r}")


# -- verb handlers ---------------------------------------------------------


def _do_g_from_b(args) -> Result:
    g = g_from_b(BSequence(args.b), args.order)
    return Result("series", {"order": g.order, "coefficients": list(g.coefficients)})


def _do_g_from_a(args) -> Result:
    g = g_from_a(ASequence(args.a), args.order)
    return Result("series", {"order": g.order, "coefficients": list(g.coefficients)})


def _do_b_from_g(args) -> Result:
    g = _resolve_series(args.g, args.order)
    b = b_from_g(g)
    return Result("sequence", {"coefficients": list(b.coefficients)})


def _do_a_from_g(args) -> Result:
    g = _resolve_series(args.g, args.order)
    a = a_from_g(g)
    return Result("sequence", {"coefficients": list(a.coefficients)})


def _expansion_rows(args):
    symbolic_power = args.power == "m"
    if args.b is not None:
        mode, payload = args.b
        partitions = odd_partitions(args.n)
        letters = "b"
    else:
        mode, payload = args.a
        partitions = all_partitions(args.n)
        letters = "a"
    seq = None
    if mode == "coeffs":
        seq = BSequence(payload) if letters == "b" else ASequence(payload)
        if letters == "a" and seq[0] != 1:
            raise ValueError("A-letter expansion requires a0 = 1")
    rows = []
    total = MuPoly()
    for pt in partitions:
        poly = b_coeff(pt) if letters == "b" else a_coeff(pt)
        k = pt.k if letters == "b" else pt.n
        if seq is not None:
            total = total + poly * pt.monomial_value(seq)
        if not symbolic_power:
            poly = MuPoly((poly(args.power),))
        rows.append(
            {
                "exponents": pt.exponents,
                "n": args.n,
                "k": k,
                "q": pt.q,
                "poly": poly,
                "label": pt.monomial_label(letters),
            }
        )
    total_out = None
    if seq is not None:
        total_out = total if symbolic_power else total(args.power)
    return rows, total_out


def _do_expand(args) -> Result:
    rows, total = _expansion_rows(args)
    return Result("expansion", {"n": args.n, "rows": rows, "total": total})


def _do_check_pseudo(args) -> Result:
    g = _resolve_series(args.g, args.order)
    return Result("bool", {"value": is_pseudo_involution(g)})


def _do_factorize(args) -> Result:
    g = _resolve_series(args.g, args.order)
    fact = factorize(g)
    return Result(
        "factorization",
        {
            "order": g.order,
            "sqrt_g": list(fact.sqrt_g.coefficients),
            "h": list(fact.h.coefficients),
            "s": list(fact.s.coefficients),
        },
    )


def _do_gbs(args) -> Result:
    m = MU if args.power == "m" else args.power
    s = binomial_series(args.r, m, args.order)
    return Result("series", {"order": s.order, "coefficients": list(s.coefficients)})


def _do_gpt(args) -> Result:
    table = pascal_table(args.r, args.rows + 1, args.cols)
    return Result("table", {"r": args.r, "rows": table[1:]})


def _do_matrix(args) -> Result:
    f = _resolve_series(args.f, args.order)
    g = _resolve_series(args.g, args.order)
    array = RiordanArray(f, g)
    rows = [array.row(n) for n in range(array.order + 1)]
    return Result("table", {"order": array.order, "rows": rows})


def _do_verify(args) -> Result:
    g = _resolve_series(args.g, args.order)
    pseudo = is_pseudo_involution(g)
    array = RiordanArray(Series.one(args.order), g)
    checks: list[tuple[str, str]] = []

    a = a_from_g(g)
    checks.append(("a-recurrence", "ok" if verify_a_recurrence(array, a) else "fail"))
    if pseudo:
        b = b_from_g(g)
        checks.append(("b-recurrence", "ok" if verify_b_recurrence(array, b) else "fail"))
        fact = factorize(g)
        same = b_from_factorization(fact) == b
        checks.append(("factorization-consistency", "ok" if same else "fail"))
    else:
        checks.append(("b-recurrence", "skipped"))
        checks.append(("factorization-consistency", "skipped"))

    depth = min(args.depth if args.depth is not None else 6, args.order)
    lagrange_ok = all(lagrange_check(g, n) for n in range(1, depth + 1))
    checks.append(("lagrange", "ok" if lagrange_ok else "fail"))
    binom_ok = all(binomial_type_checks(g, n) for n in range(1, depth + 1))
    checks.append(("binomial-type", "ok" if binom_ok else "fail"))
    return Result("verify", {"pseudo": pseudo, "checks": checks})


_HANDLERS = {
    "g-from-b": _do_g_from_b,
    "g-from-a": _do_g_from_a,
    "b-from-g": _do_b_from_g,
    "a-from-g": _do_a_from_g,
    "expand": _do_expand,
    "check-pseudo": _do_check_pseudo,
    "factorize": _do_factorize,
    "gbs": _do_gbs,
    "gpt": _do_gpt,
    "matrix": _do_matrix,
    "verify": _do_verify,
}


# -- parser ----------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="riordan", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    order_type = _positive_int("order")

    def add_format(p) -> None:
        p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")

    p = sub.add_parser("g-from-b", help="solve g = 1 + x*g*B(x^2*g)")
    p.add_argument("--b", type=_coeff_list, required=True, metavar="COEFFS")
    p.add_argument("--order", type=order_type, required=True)
    add_format(p)

    p = sub.add_parser("g-from-a", help="solve g = A(x*g)")
    p.add_argument("--a", type=_coeff_list, required=True, metavar="COEFFS")
    p.add_argument("--order", type=order_type, required=True)
    add_format(p)

    p = sub.add_parser("b-from-g", help="extract the B-sequence of g")
    p.add_argument("--g", type=_series_spec, required=True, metavar="SERIES")
    p.add_argument("--order", type=order_type, required=True)
    add_format(p)

    p = sub.add_parser("a-from-g", help="extract the A-sequence of g")
    p.add_argument("--g", type=_series_spec, required=True, metavar="SERIES")
    p.add_argument("--order", type=order_type, required=True)
    add_format(p)

    p = sub.add_parser("expand", help="partition table for [x^n] g^m")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--b", type=_letters("b"), metavar="LETTERS")
    group.add_argument("--a", type=_letters("a"), metavar="LETTERS")
    p.add_argument("--n", type=_positive_int("n"), required=True)
    p.add_argument("--power", type=_power, default="m")
    add_format(p)

    p = sub.add_parser("check-pseudo", help="test the pseudo-involution condition")
    p.add_argument("--g", type=_series_spec, required=True, metavar="SERIES")
    p.add_argument("--order", type=order_type, required=True)
    add_format(p)

    p = sub.add_parser("factorize", help="split (1, x*g) into square-root and odd parts")
    p.add_argument("--g", type=_series_spec, required=True, metavar="SERIES")
    p.add_argument("--order", type=order_type, required=True)
    add_format(p)

    p = sub.add_parser("gbs", help="generalized binomial series to a power")
    p.add_argument("--r", type=_positive_int("r"), required=True)
    p.add_argument("--power", type=_power, default="m")
    p.add_argument("--order", type=order_type, required=True)
    add_format(p)

    p = sub.add_parser("gpt", help="generalized Pascal table rows 1..R")
    p.add_argument("--r", type=_positive_int("r"), required=True)
    p.add_argument("--rows", type=_positive_int("rows"), required=True)
    p.add_argument("--cols", type=_positive_int("cols"), required=True)
    add_format(p)

    p = sub.add_parser("matrix", help="triangular rows of the array (f, x*g)")
    p.add_argument("--g", type=_series_spec, required=True, metavar="SERIES")
    p.add_argument("--f", type=_series_spec, default=("coeffs", [Fraction(1)]), metavar="SERIES")
    p.add_argument("--order", type=order_type, required=True)
    add_format(p)

    p = sub.add_parser("verify", help="run the identity checks against one g")
    p.add_argument("--g", type=_series_spec, required=True, metavar="SERIES")
    p.add_argument("--order", type=order_type, required=True)
    p.add_argument("--depth", type=_positive_int("depth"), default=None,
                   help="largest n for the coefficient identities (default min(order, 6))")
    add_format(p)

    return parser


def parse_args(argv: list[str]) -> argparse.Namespace:
    return build_parser().parse_args(argv)


def run(args: argparse.Namespace) -> int:
    result = _HANDLERS[args.verb](args)
    print(format_output(result, args.format))
    if result.kind == "verify" and any(r == "fail" for _, r in result.data["checks"]):
        return 2
    return 0


def main(argv: list[str] | None = None) -> int:
    try:
        args = parse_args(sys.argv[1:] if argv is None else list(argv))
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 1
    try:
        return run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ArithmeticError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
