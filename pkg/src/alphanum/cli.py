"""Command-line surface. Exit codes: 0 success, 1 usage error,
2 a verification or audit found a failure, 3 resource cap exceeded."""

from __future__ import annotations

import contextlib
import io
import sys
import time

import click

from .classify import (
    Order,
    Verdict,
    classify_exact,
    classify_rounded,
    partial_alpha,
)
from .errors import DegenerateDenominatorError, ResourceCapError
from .exact import factorize, sigma_k_exact
from .hyper import DEFAULT_PRECISION, Precision, format_quaternion, parse_quaternion, sigma_general
from .reports import (
    build_manifest,
    canonical_json_bytes,
    emit_report,
    record_to_dict,
)
from .search import (
    audit_tables,
    count_alpha,
    enumerate_alpha,
    has_mismatch,
    seed_search_odd,
    verify_theorem,
)
from .search.theorems import THEOREM_IDS

_CLASS_NAMES = {
    "strong": Verdict.STRONG,
    "weak": Verdict.WEAK,
    "very-weak": Verdict.VERY_WEAK,
    "veryweak": Verdict.VERY_WEAK,
    "not-alpha": Verdict.NOT_ALPHA,
    "notalpha": Verdict.NOT_ALPHA,
}


def _parse_order(order: str | None, under: str | None, upper: str | None) -> Order:
    if order is not None and (under is not None or upper is not None):
        raise click.UsageError("give either --order or --under/--upper, not both")
    if order is not None:
        try:
            a, b = order.split(",")
            return Order.exact(int(a), int(b))
        except (ValueError, TypeError) as exc:
            raise click.UsageError(f"malformed --order {order!r}; expected 'a,b'") from exc
    if under is None and upper is None:
        return Order.exact(1, 1)
    try:
        return Order(
            parse_quaternion(under if under is not None else "1"),
            parse_quaternion(upper if upper is not None else "1"),
        )
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


def _parse_classes(classes: str) -> frozenset[Verdict]:
    wanted = set()
    for name in classes.split(","):
        key = name.strip().lower()
        if key not in _CLASS_NAMES:
            raise click.UsageError(f"unknown class {name!r}")
        wanted.add(_CLASS_NAMES[key])
    return frozenset(wanted)


def _precision(eps: float | None) -> Precision:
    if eps is None:
        return DEFAULT_PRECISION
    return Precision(eps_rel=eps, boundary_eps=min(max(eps * 1000.0, 1e-9), 0.5))


def _emit_json(command: str, params: dict, result, started: float) -> None:
    manifest = build_manifest(command, params, result, started)
    click.echo(canonical_json_bytes({"manifest": manifest.to_dict(), "result": result}).decode())


format_opts = [
    click.option("--json", "as_json", is_flag=True, help="canonical JSON output"),
    click.option("--csv", "as_csv", is_flag=True, help="fixed-column CSV output"),
]


def _add_opts(opts):
    def wrap(fn):
        for opt in reversed(opts):
            fn = opt(fn)
        return fn

    return wrap


@click.group()
def cli() -> None:
    """Divisor-sum computation, banded classification, searches, and audits."""


@cli.command("sigma")
@click.argument("n", type=int)
@click.option("--exponent", "-x", default="1", help="integer, real, complex, or quaternion literal")
@click.option("--precision", type=float, default=None, help="relative tolerance for float paths")
@_add_opts(format_opts)
def sigma_cmd(n: int, exponent: str, precision: float | None, as_json: bool, as_csv: bool) -> int:
    """Sum of d**exponent over the divisors of N."""
    started = time.perf_counter()
    if n < 1:
        raise click.UsageError("n must be >= 1")
    if as_csv:
        raise click.UsageError("sigma has no CSV form")
    f = factorize(n)
    x = parse_quaternion(exponent)
    exact = x.is_real and x.a >= 0 and x.a == int(x.a)
    if exact:
        value = sigma_k_exact(f, int(x.a))
        result = {"n": str(n), "exponent": exponent, "exact": True, "value": str(value)}
        display = str(value)
    else:
        q = sigma_general(f, x, _precision(precision))
        result = {
            "n": str(n), "exponent": exponent, "exact": False,
            "value": {"a": q.a, "b": q.b, "c": q.c, "d": q.d},
        }
        display = format_quaternion(q, digits=6)
    if as_json:
        _emit_json("sigma", {"n": n, "exponent": exponent}, result, started)
    else:
        click.echo(f"sigma_{exponent}({n}) = {display}")
    return 0


@cli.command("classify")
@click.argument("n", type=int)
@click.option("--order", default=None, help="integer order 'a,b'")
@click.option("--under", default=None, help="under exponent literal (e.g. 'i', '0.5')")
@click.option("--upper", default=None, help="upper exponent literal")
@click.option("--variant", type=click.Choice(["exact", "floored", "ceiled"]), default="exact")
@click.option("--precision", type=float, default=None)
@click.option("--partial", is_flag=True, help="also print the partial alpha value")
@_add_opts(format_opts)
def classify_cmd(n, order, under, upper, variant, precision, partial, as_json, as_csv) -> int:
    """Classify N into the strong/weak/very-weak bands."""
    started = time.perf_counter()
    if n < 1:
        raise click.UsageError("n must be >= 1")
    if as_csv:
        raise click.UsageError("classify has no CSV form; use enumerate")
    ord_ = _parse_order(order, under, upper)
    prec = _precision(precision)
    f = factorize(n)
    if variant == "exact":
        if not ord_.is_exact_integer:
            raise click.UsageError(
                "exact classification needs a nonnegative integer order; "
                "use --variant floored or ceiled for general orders"
            )
        cls = classify_exact(f, ord_)
    else:
        mode = "floor" if variant == "floored" else "ceiling"
        cls = classify_rounded(f, ord_, mode, prec)
    result = {
        "n": str(n),
        "factorization": str(f),
        "order": {"under": format_quaternion(ord_.under), "upper": format_quaternion(ord_.upper)},
        "variant": cls.variant,
        "verdict": cls.verdict.value,
        "alpha1": str(cls.ratio.num),
        "alpha2": str(cls.ratio.den),
        "omega": cls.omega,
        "tau": cls.tau,
        "boundary": cls.boundary_flag,
    }
    if partial:
        value = partial_alpha(f, ord_, prec)
        result["partial_alpha"] = {"a": value.a, "b": value.b, "c": value.c, "d": value.d}
    if as_json:
        _emit_json("classify", {"n": n, "order": str(ord_), "variant": variant}, result, started)
    else:
        flag = " [boundary]" if cls.boundary_flag else ""
        click.echo(
            f"{n} = {f}: {cls.verdict} ({cls.ratio.num},{cls.ratio.den}) "
            f"omega={cls.omega} tau={cls.tau} variant={cls.variant}{flag}"
        )
        if partial:
            click.echo(f"partial alpha = {format_quaternion(partial_alpha(f, ord_, prec), digits=6)}")
    return 0


@cli.command("enumerate")
@click.option("--bound", type=int, required=True)
@click.option("--order", default="1,1", help="integer order 'a,b'")
@click.option("--classes", default="strong,weak,very-weak")
@click.option("--parity", type=click.Choice(["odd", "even", "all"]), default="all")
@_add_opts(format_opts)
def enumerate_cmd(bound, order, classes, parity, as_json, as_csv) -> int:
    """List every n <= bound whose verdict is in --classes."""
    started = time.perf_counter()
    ord_ = _parse_order(order, None, None)
    records = enumerate_alpha(bound, ord_, _parse_classes(classes), parity)
    if as_json:
        _emit_json(
            "enumerate",
            {"bound": bound, "order": str(ord_), "classes": classes, "parity": parity},
            [record_to_dict(r) for r in records],
            started,
        )
    else:
        click.echo(emit_report(records, "csv" if as_csv else "table").decode(), nl=False)
    return 0


@cli.command("count")
@click.option("--bound", type=int, required=True)
@click.option("--order", default="1,1")
@click.option("--parity", type=click.Choice(["odd", "even", "all"]), default="all")
@_add_opts(format_opts)
def count_cmd(bound, order, parity, as_json, as_csv) -> int:
    """Per-band counts up to the bound."""
    started = time.perf_counter()
    if as_csv:
        raise click.UsageError("count has no CSV form")
    ord_ = _parse_order(order, None, None)
    counts = count_alpha(bound, ord_, parity)
    result = {
        "bound": str(bound), "order": str(ord_), "parity": parity,
        "strong": counts.strong, "weak": counts.weak,
        "very_weak": counts.very_weak, "not_alpha": counts.not_alpha,
    }
    if as_json:
        _emit_json("count", {"bound": bound, "order": str(ord_), "parity": parity}, result, started)
    else:
        click.echo(
            f"n <= {bound} ({parity}): strong={counts.strong} weak={counts.weak} "
            f"very-weak={counts.very_weak} not-alpha={counts.not_alpha}"
        )
    return 0


@cli.command("search-odd")
@click.option("--bound", type=int, required=True)
@click.option("--cross-check", is_flag=True, help="also run the sieve enumeration and compare")
@_add_opts(format_opts)
def search_odd_cmd(bound, cross_check, as_json, as_csv) -> int:
    """Seed-pruned search for odd strong hits of order (1,1)."""
    started = time.perf_counter()
    records = seed_search_odd(bound)
    agree = None
    if cross_check:
        sieve_records = enumerate_alpha(bound, Order.exact(1, 1), {Verdict.STRONG}, "odd")
        agree = [r.n for r in records] == [r.n for r in sieve_records]
    result = {
        "bound": str(bound),
        "found": [record_to_dict(r) for r in records],
        "cross_check": agree,
    }
    if as_json:
        _emit_json("search-odd", {"bound": bound, "cross_check": cross_check}, result, started)
    elif as_csv:
        click.echo(emit_report(records, "csv").decode(), nl=False)
    else:
        line = f"{len(records)} found"
        if cross_check:
            line += "; methods agree" if agree else "; METHODS DISAGREE"
        click.echo(line)
        if records:
            click.echo(emit_report(records, "table").decode(), nl=False)
    return 0 if agree in (None, True) else 2


@cli.command("verify")
@click.argument("theorem", type=click.Choice(THEOREM_IDS))
@click.option("--bound", type=int, required=True)
@_add_opts(format_opts)
def verify_cmd(theorem, bound, as_json, as_csv) -> int:
    """Exhaustively check one proved result up to the bound."""
    started = time.perf_counter()
    if as_csv:
        raise click.UsageError("verify has no CSV form")
    report = verify_theorem(theorem, bound)
    result = {
        "theorem": report.theorem_id, "bound": str(report.bound),
        "checked": report.checked, "passed": report.passed,
        "counterexample": None if report.counterexample is None else str(report.counterexample),
        "detail": report.detail,
    }
    if as_json:
        _emit_json("verify", {"theorem": theorem, "bound": bound}, result, started)
    else:
        status = "pass" if report.passed else f"FAIL at n={report.counterexample}"
        click.echo(f"{report.theorem_id} over n <= {bound}: {status} ({report.checked} checked; {report.detail})")
    return 0 if report.passed else 2


@cli.command("audit-tables")
@click.option("--bound", type=int, default=10**5, show_default=True)
@_add_opts(format_opts)
def audit_cmd(bound, as_json, as_csv) -> int:
    """Recompute every reference-table row; mismatches force exit code 2."""
    started = time.perf_counter()
    rows = audit_tables(bound)
    if as_json:
        from .reports import audit_row_to_dict

        _emit_json("audit-tables", {"bound": bound}, [audit_row_to_dict(r) for r in rows], started)
    else:
        click.echo(emit_report(rows, "csv" if as_csv else "table").decode(), nl=False)
    return 2 if has_mismatch(rows) else 0


def main(argv: list[str] | None = None) -> int:
    """Invoke the CLI; maps exceptions onto the documented exit codes."""
    try:
        result = cli.main(args=argv, standalone_mode=False)
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except click.exceptions.Abort:
        return 130
    except ResourceCapError as exc:
        click.echo(f"resource cap exceeded: {exc}", err=True)
        return 3
    except (DegenerateDenominatorError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    return result if isinstance(result, int) else 0


def run_command(argv: list[str]) -> tuple[int, bytes]:
    """Run one CLI invocation in-process, capturing stdout bytes."""
    buffer = io.StringIO()
    with contextlib.redirect_stdout(buffer):
        code = main(list(argv))
    return code, buffer.getvalue().encode()


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
