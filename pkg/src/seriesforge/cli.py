"""Command-line front end.

Subcommands: ``count`` (one exact value), ``table`` (whole tables, with
``--check-paper`` validation against the embedded reference values),
``gf`` (series coefficients as exact JSON), ``verify`` (compare a family
against an OEIS b-file).

Exit codes: 0 success, 1 usage error, 2 verification mismatch.  The env
var SERIESFORGE_MAX_ORDER caps the series order (default 16).
"""

from __future__ import annotations

import csv
import io
import json
import os
import sys

import click

from . import labeled, reference, unlabeled

DEFAULT_MAX_ORDER = 16


class VerificationFailure(Exception):
    """Computed values disagree with a fixture or b-file."""


def _max_order() -> int:
    raw = os.environ.get("SERIESFORGE_MAX_ORDER")
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        return int(raw)
    except ValueError:
        raise click.UsageError(f"SERIESFORGE_MAX_ORDER is not an integer: {raw!r}")


def _json_int(v: int):
    return v if abs(v) < 2 ** 53 else str(v)


def _emit(text: str, output):
    if output is None:
        click.echo(text)
    else:
        with open(output, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


COUNT_FAMILIES = {
    "ultrametrics": (labeled.count_ultrametrics, True),
    "fully-colored-labeled": (labeled.count_fully_colored_labeled, True),
    "mobiles": (labeled.count_mobiles, True),
    "chain-increasing": (labeled.chain_increasing_count, True),
    "processes": (labeled.count_processes, False),
    "unlabeled": (unlabeled.unlabeled_count, False),
    "multipartite-unlabeled": (unlabeled.multipartite_unlabeled, True),
    "fully-colored-unlabeled": (unlabeled.fully_colored_unlabeled, True),
}


@click.group()
def cli():
    """Exact counts of multipartite series-reduced trees and friends."""


@cli.command("count")
@click.argument("family", type=click.Choice(sorted(COUNT_FAMILIES)))
@click.option("--s", "s", type=int, required=True, help="size parameter (leaves/chains/actions)")
@click.option("--m", "m", type=int, default=None, help="number of colors/symbols")
@click.option("--format", "fmt", type=click.Choice(["plain", "json", "csv"]), default="plain")
@click.option("-o", "--output", type=click.Path(), default=None)
def cmd_count(family, s, m, fmt, output):
    """Print one exact count."""
    fn, needs_m = COUNT_FAMILIES[family]
    if needs_m and m is None:
        raise click.UsageError(f"family {family!r} requires --m")
    if not needs_m and m is not None:
        raise click.UsageError(f"family {family!r} does not take --m")
    try:
        value = fn(s, m) if needs_m else fn(s)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if fmt == "plain":
        _emit(str(value), output)
    elif fmt == "json":
        _emit(json.dumps({"family": family, "s": s, "m": m, "value": _json_int(value)}), output)
    else:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["family", "s", "m", "value"])
        w.writerow([family, s, "" if m is None else m, value])
        _emit(buf.getvalue().rstrip("\n"), output)


TABLE_FAMILIES = {
    "symbolic": (labeled.count_ultrametrics, reference.ULTRAMETRIC_TABLE),
    "fully-colored-labeled": (
        labeled.count_fully_colored_labeled,
        reference.FULLY_COLORED_LABELED_TABLE,
    ),
    "mobiles": (labeled.count_mobiles, reference.MOBILES_TABLE),
    "multipartite-unlabeled": (
        unlabeled.multipartite_unlabeled,
        reference.MULTIPARTITE_UNLABELED_TABLE,
    ),
    "fully-colored-unlabeled": (
        unlabeled.fully_colored_unlabeled,
        reference.FULLY_COLORED_UNLABELED_TABLE,
    ),
}


def _render_grid(rows, fmt) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        for row in rows:
            w.writerow(row)
        return buf.getvalue().rstrip("\n")
    if fmt == "json":
        header, *body = rows
        return json.dumps(
            [{str(h): (_json_int(c) if isinstance(c, int) else c)
              for h, c in zip(header, row)} for row in body]
        )
    widths = [max(len(str(r[i])) for r in rows) for i in range(len(rows[0]))]
    return "\n".join(
        "  ".join(str(c).rjust(w) for c, w in zip(row, widths)) for row in rows
    )


@cli.command("table")
@click.argument(
    "name", type=click.Choice(sorted(TABLE_FAMILIES) + ["riordan-triangle"])
)
@click.option("--max-s", type=int, default=8)
@click.option("--max-m", type=int, default=8)
@click.option("--max-n", type=int, default=10, help="riordan-triangle only")
@click.option("--check-paper", is_flag=True, help="compare against the embedded reference values")
@click.option("--format", "fmt", type=click.Choice(["plain", "json", "csv"]), default="plain")
@click.option("-o", "--output", type=click.Path(), default=None)
def cmd_table(name, max_s, max_m, max_n, check_paper, fmt, output):
    """Emit one of the count tables."""
    mismatches = []
    if name == "riordan-triangle":
        tri = unlabeled.riordan_triangle(max_n)
        header = ["k\\n"] + list(range(2, max_n + 1))
        rows = [header]
        for k in range(1, max_n):
            rows.append([k] + [tri.get((k, n), "") for n in range(2, max_n + 1)])
        sums = [unlabeled.unlabeled_count(n) for n in range(2, max_n + 1)]
        rows.append(["sum"] + sums)
        if check_paper:
            for (k, n), ref in reference.RIORDAN_TRIANGLE.items():
                if n <= max_n and tri.get((k, n)) != ref:
                    mismatches.append(((k, n), tri.get((k, n)), ref))
            for n in range(1, max_n + 1):
                ref = reference.UNLABELED_SEQUENCE[n - 1]
                got = unlabeled.unlabeled_count(n)
                if got != ref:
                    mismatches.append((("sum", n), got, ref))
    else:
        fn, ref_table = TABLE_FAMILIES[name]
        header = ["m\\s"] + list(range(1, max_s + 1))
        rows = [header]
        for m in range(1, max_m + 1):
            rows.append([m] + [fn(s, m) for s in range(1, max_s + 1)])
        if check_paper:
            for m, ref_row in ref_table.items():
                if m > max_m:
                    continue
                for s, ref in enumerate(ref_row[:max_s], start=1):
                    got = fn(s, m)
                    if got != ref:
                        mismatches.append(((m, s), got, ref))
    _emit(_render_grid(rows, fmt), output)
    if check_paper:
        if mismatches:
            for cell, got, ref in mismatches:
                click.echo(f"MISMATCH at {cell}: computed {got}, reference {ref}", err=True)
            raise VerificationFailure(f"{len(mismatches)} cell(s) differ")
        click.echo("all checked cells match the reference values", err=True)


GF_KINDS = ("P", "A", "G", "Y")


@cli.command("gf")
@click.argument("kind", type=click.Choice(GF_KINDS))
@click.option("--m", "m", type=int, required=True)
@click.option("--order", type=int, default=8)
@click.option("--spec", "spec_kind", type=click.Choice(["symbolic", "ones", "factorial"]),
              default="symbolic", help="degree-coefficient assignment for P")
@click.option("-o", "--output", type=click.Path(), default=None)
def cmd_gf(kind, m, order, spec_kind, output):
    """Emit series coefficients as exact JSON."""
    cap = _max_order()
    if order > cap:
        raise click.UsageError(f"order {order} exceeds the cap {cap}")
    if order < 1:
        raise click.UsageError("order must be >= 1")
    if kind == "P":
        if m < 1:
            raise click.UsageError("P needs m >= 1")
        series = labeled.p_series(labeled.DegreeSpec(m, spec_kind), order)
        payload = {
            "kind": "P", "m": m, "order": order,
            "coeffs": [series[n].to_jsonable() for n in range(order + 1)],
        }
        _emit(json.dumps(payload), output)
        return
    if kind == "A":
        if m < 1:
            raise click.UsageError("A needs m >= 1")
        series = labeled.labeled_series(m, order)
    elif kind == "G":
        if m < 1:
            raise click.UsageError("G needs m >= 1")
        series = labeled.mobiles_series(m, order)
    else:
        if m < 0:
            raise click.UsageError("Y needs m >= 0")
        series = labeled.chain_increasing_series(m, order)
    _emit(series.to_json(), output)


def parse_bfile(path: str):
    """OEIS b-file: '#' comment lines, then 'index value' per line, with
    strictly increasing indices."""
    entries = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: malformed line {line!r}")
            try:
                idx, val = int(parts[0]), int(parts[1])
            except ValueError:
                raise ValueError(f"{path}:{lineno}: non-integer entry {line!r}")
            if entries and idx <= entries[-1][0]:
                raise ValueError(f"{path}:{lineno}: indices not strictly increasing")
            entries.append((idx, val))
    return entries


@cli.command("verify")
@click.argument("family", type=click.Choice(sorted(COUNT_FAMILIES)))
@click.option("--m", "m", type=int, default=None)
@click.option("--bfile", type=click.Path(exists=True, dir_okay=False), required=True)
def cmd_verify(family, m, bfile):
    """Compare computed values against a b-file over its index range."""
    fn, needs_m = COUNT_FAMILIES[family]
    if needs_m and m is None:
        raise click.UsageError(f"family {family!r} requires --m")
    try:
        entries = parse_bfile(bfile)
    except (ValueError, OSError) as exc:
        raise click.UsageError(str(exc))
    checked = 0
    for idx, val in entries:
        if idx < 1:
            continue
        got = fn(idx, m) if needs_m else fn(idx)
        if got != val:
            click.echo(f"mismatch at index {idx}: computed {got}, b-file {val}")
            raise VerificationFailure(f"index {idx}")
        checked += 1
    click.echo(f"OK ({checked} entries)")


def main(argv=None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except click.exceptions.Abort:
        return 1
    except VerificationFailure as exc:
        click.echo(f"verification failed: {exc}", err=True)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
