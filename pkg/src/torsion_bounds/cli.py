"""Command-line surface: compute, verify, and report.

Subcommands: lie-rank, roots, bound, bezout, dgl, report, verify.
Output is deterministic (fixed precision, fixed ordering, no timestamps);
exit codes: 0 success, 1 invalid input, 2 verification failure,
3 numeric failure.
"""

from __future__ import annotations

import functools
import sys
from fractions import Fraction

import click
import mpmath

from . import verify as verify_mod
from .bounds import bezout_cover, f_q, homology_params, ktheory_lower, ktheory_params, weak_lower
from .charpoly import GeneratorSet, char_poly, precision_for_exponent, root_profile
from .dgl_fp import WeightedAlphabet, subspace_dims
from .errors import (
    CoverageViolation,
    DimensionMismatch,
    InternalError,
    InvalidArgument,
    NumericFailure,
    OracleInconsistency,
    ParameterMismatch,
    RootStructureViolation,
    TorsionBoundsError,
)
from .lie_rank import babenko_ranks
from .render import decimal_str, report_rows, to_csv, to_json
from .spaces import report as space_report
from .spaces import space_by_name

REPORT_FIELDS = ["degree", "bound", "exact_rank", "theorem", "vacuous", "precision_bits"]

_EXIT_INVALID = 1
_EXIT_VERIFICATION = 2
_EXIT_NUMERIC = 3


def _handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (InvalidArgument, ParameterMismatch) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(_EXIT_INVALID)
        except NumericFailure as exc:
            click.echo(f"numeric failure: {exc}", err=True)
            sys.exit(_EXIT_NUMERIC)
        except (
            CoverageViolation,
            DimensionMismatch,
            InternalError,
            OracleInconsistency,
            RootStructureViolation,
        ) as exc:
            click.echo(f"verification failure: {exc}", err=True)
            sys.exit(_EXIT_VERIFICATION)
        except TorsionBoundsError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(_EXIT_INVALID)

    return wrapper


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


_format_option = click.option(
    "--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True
)
_out_option = click.option("--out", type=click.Path(dir_okay=False), default=None)


@click.group()
def main():
    """Exact free-Lie-algebra ranks and guaranteed homotopy torsion bounds."""


@main.command("lie-rank")
@click.option("--degrees", required=True, help="generator degrees, e.g. 2:1,3:1")
@click.option("--upto", type=int, required=True)
@click.option("--oracle-check", is_flag=True, help="cross-check against the series oracle")
@_format_option
@_out_option
@_handle_errors
def lie_rank_cmd(degrees, upto, oracle_check, fmt, out):
    """Exact rank(L_N) for N = 1..UPTO."""
    gen = GeneratorSet.parse(degrees)
    if upto < 1:
        raise InvalidArgument(f"--upto must be >= 1, got {upto}")
    ranks = babenko_ranks(gen, upto)
    if oracle_check:
        from .lie_rank import pbw_ranks

        if pbw_ranks(gen, upto) != ranks:
            raise OracleInconsistency("series oracle disagrees with the rank formula")
    rows = [{"N": n, "rank": str(r)} for n, r in enumerate(ranks, start=1)]
    if fmt == "csv":
        _emit(to_csv(rows, ["N", "rank"]), out)
    else:
        _emit(to_json([{"degree": n, "rank": str(r)} for n, r in enumerate(ranks, start=1)]), out)


@main.command("roots")
@click.option("--degrees", required=True, help="generator degrees, e.g. 2:1,3:1")
@click.option("--precision-bits", type=int, default=None, help="certified bits for phi")
@_format_option
@_out_option
@_handle_errors
def roots_cmd(degrees, precision_bits, fmt, out):
    """Certified root profile (phi, |psi|, g) of the characteristic polynomial."""
    gen = GeneratorSet.parse(degrees)
    poly = char_poly(gen)
    bits = precision_bits if precision_bits is not None else precision_for_exponent(1, poly.coeff_bound())
    profile = root_profile(poly, gen.g, bits)
    summary = {
        "degrees": gen.spec_string(),
        "phi": decimal_str(profile.phi),
        "psi_abs": None if profile.psi_abs is None else decimal_str(profile.psi_abs),
        "g": profile.g,
        "poly_degree": poly.degree,
        "precision_bits": profile.precision_bits,
    }
    if fmt == "csv":
        _emit(to_csv([summary], list(summary)), out)
    else:
        with mpmath.mp.workprec(64):
            summary["roots"] = [
                {
                    "re": decimal_str(z.real),
                    "im": decimal_str(z.imag),
                    "residual": mpmath.nstr(res, 6),
                }
                for z, res in zip(profile.roots, profile.residuals)
            ]
        _emit(to_json(summary), out)


@main.command("bound")
@click.option("--homology", "route", flag_value="homology")
@click.option("--ktheory", "route", flag_value="ktheory")
@click.option("--q", type=int, default=None, help="homology route: degree parameter")
@click.option("--p", type=int, required=True, help="odd prime")
@click.option("--degrees", default=None, help="ktheory route: wedge degrees q_i:m_i")
@click.option("--conn", type=int, default=None, help="ktheory route: p-local connectivity")
@click.option("--dim", type=int, default=None, help="ktheory route: rational cohomological dimension")
@click.option("--eps", default="1/2", show_default=True, help="ktheory route: weak-bound epsilon")
@click.option("--from", "from_", type=int, default=None)
@click.option("--upto", type=int, required=True)
@_format_option
@_out_option
@_handle_errors
def bound_cmd(route, q, p, degrees, conn, dim, eps, from_, upto, fmt, out):
    """Guaranteed lower bounds: boundary-rank route or K-theory route."""
    if route is None:
        raise InvalidArgument("choose one of --homology or --ktheory")
    reports = []
    if route == "homology":
        if q is None:
            raise InvalidArgument("--homology requires --q")
        start = from_ if from_ is not None else 2
        for n in range(start, upto + 1):
            value = f_q(q, n, p)
            reports.append(
                _plain_report(n, value, "homology_boundary", homology_params(q, p, n).precision_bits)
            )
    else:
        if degrees is None or conn is None or dim is None:
            raise InvalidArgument("--ktheory requires --degrees, --conn and --dim")
        gen = GeneratorSet.parse(degrees)
        kt = ktheory_params(p, gen, conn, dim, upto)
        start = from_ if from_ is not None else kt.g_prime
        for m in range(start, upto + 1):
            if m % kt.g_prime:
                continue
            reports.append(ktheory_lower(kt, m))
            value = weak_lower(kt, m, Fraction(eps))
            reports.append(_plain_report(m, value, "ktheory_weak", reports[-1].precision_bits))
    rows = report_rows(reports)
    if fmt == "csv":
        _emit(to_csv(rows, REPORT_FIELDS), out)
    else:
        _emit(to_json(rows), out)


def _plain_report(degree, value, theorem, bits):
    from .bounds import BoundReport

    return BoundReport(
        degree=degree,
        bound=value,
        theorem=theorem,
        vacuous=bool(value <= 0),
        precision_bits=bits,
    )


@main.command("bezout")
@click.option("--alpha", type=int, required=True)
@click.option("--beta", type=int, required=True)
@click.option("--a", "a_", required=True, help="slope, a rational like 1/2")
@click.option("--b", "b_", default="0", show_default=True, help="offset, rational")
@click.option("--n", "ns", type=int, multiple=True, required=True, help="base index (repeatable)")
@click.option("--cap", type=int, required=True, help="verify multiples up to this value")
@click.option("--witnesses", is_flag=True, help="include the witness map (json only)")
@_format_option
@_out_option
@_handle_errors
def bezout_cmd(alpha, beta, a_, b_, ns, cap, witnesses, fmt, out):
    """Brute-force-verified covering certificate for the sets S_n."""
    cert = bezout_cover(alpha, beta, Fraction(a_), Fraction(b_), list(ns), cap)
    rows = []
    for entry in cert.entries:
        rows.append(
            {
                "n": entry.n,
                "alpha": alpha,
                "beta": beta,
                "a": str(cert.a),
                "b": str(cert.b),
                "g_prime": cert.g_prime,
                "B": str(cert.bound_b),
                "min_Sn": entry.min_value,
                "first_checked": "" if entry.first_checked is None else entry.first_checked,
                "checked": entry.checked,
                "i_window": f"{entry.i_window[0]}..{entry.i_window[1] - 1}",
            }
        )
    if fmt == "csv":
        _emit(to_csv(rows, list(rows[0])), out)
    else:
        payload = {"certificate": rows}
        if witnesses:
            payload["witnesses"] = {
                str(entry.n): {str(v): i for v, i in sorted(cert.witness_map(entry.n).items())}
                for entry in cert.entries
            }
        _emit(to_json(payload), out)


@main.command("dgl")
@click.option("--q", type=int, required=True, help="lower generator degree (x has degree q+1)")
@click.option("--p", type=int, required=True, help="odd prime")
@click.option("--upto", type=int, default=12, show_default=True)
@_format_option
@_out_option
@_handle_errors
def dgl_cmd(q, p, upto, fmt, out):
    """Brute-force dims of L_n, cycles, boundaries, homology over F_p."""
    dims = subspace_dims(WeightedAlphabet.moore(q), {"x": "y", "y": None}, p, upto)
    rows = [
        {
            "degree": n,
            "dim": dims["dim"][n - 1],
            "cycles": dims["cycles"][n - 1],
            "boundaries": dims["boundaries"][n - 1],
            "homology": dims["homology"][n - 1],
        }
        for n in range(1, upto + 1)
    ]
    if fmt == "csv":
        _emit(to_csv(rows, ["degree", "dim", "cycles", "boundaries", "homology"]), out)
    else:
        _emit(to_json(rows), out)


@main.command("report")
@click.option("--space", "space_name", required=True)
@click.option("--q", type=int, default=None)
@click.option("--p", type=int, required=True)
@click.option("--r", type=int, default=None)
@click.option("--n", type=int, default=None)
@click.option("--k", type=int, default=None)
@click.option("--l", type=int, default=None)
@click.option("--eps", default="1/2", show_default=True)
@click.option("--from", "from_", type=int, default=None)
@click.option("--upto", type=int, required=True)
@_format_option
@_out_option
@_handle_errors
def report_cmd(space_name, q, p, r, n, k, l, eps, from_, upto, fmt, out):
    """Guaranteed lower-bound table for a catalog space."""
    space = space_by_name(space_name)
    supplied = {"q": q, "p": p, "r": r, "n": n, "k": k, "l": l}
    params = {key: val for key, val in supplied.items() if val is not None}
    if space.route == "homology":
        start = from_ if from_ is not None else 2
        degree_range = range(start, upto + 1)
    else:
        gp = space.g_prime(p)
        start = from_ if from_ is not None else gp
        start += (-start) % gp
        degree_range = range(start, upto + 1, gp)
    reports = space_report(space, params, degree_range, eps=Fraction(eps))
    rows = report_rows(reports)
    if fmt == "csv":
        _emit(to_csv(rows, REPORT_FIELDS), out)
    else:
        _emit(to_json(rows), out)


@main.command("verify")
@click.option(
    "--suite",
    default="all",
    show_default=True,
    type=click.Choice(["all", *verify_mod.SUITES]),
)
@_handle_errors
def verify_cmd(suite):
    """Run the invariant suites and print a summary table."""
    failures = 0
    rows = []
    for suite_name, label, fails in verify_mod.run_suite(suite):
        status = "ok" if not fails else "FAIL"
        failures += len(fails)
        rows.append((suite_name, label, status, "" if not fails else fails[0]))
    width = max(len(r[1]) for r in rows)
    for suite_name, label, status, detail in rows:
        line = f"{suite_name:10s} {label:{width}s} {status}"
        if detail:
            line += f"  {detail}"
        click.echo(line)
    click.echo(f"{len(rows)} checks, {failures} failures")
    if failures:
        sys.exit(_EXIT_VERIFICATION)


if __name__ == "__main__":
    main()
