"""Command-line front end.

Every subcommand renders through one emitter so that identical argv and
precision produce byte-identical output.  JSON payloads always carry
{command, params, precision, value|values}; CSV always starts with a header
row; complex scalars appear as {"re": ..., "im": ...} objects in JSON and as
re/im column pairs in CSV.  High-precision numbers are serialized as decimal
strings so no digits are lost in transit.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification failure.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import click
import mpmath
import numpy as np
from mpmath import mp

from . import angular, binomials, calculus, core, oscillator, verify
from .core import DEFAULT_DPS, DomainError, ZPhi

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_VERIFY = 3


@dataclass(frozen=True)
class OutputRecord:
    """One rendered command result."""

    format: str
    payload: str
    command: str
    params: dict
    precision: int


# ---------------------------------------------------------------------------
# Serialization helpers
# ---------------------------------------------------------------------------

def _frac_str(fr: Fraction) -> str:
    """Exact decimal string when the denominator is 2^a 5^b, else 'p/q'."""
    num, den = fr.numerator, fr.denominator
    if den == 1:
        return str(num)
    twos = fives = 0
    d = den
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return f"{num}/{den}"
    digits = max(twos, fives)
    scaled = num * 10 ** digits // den
    sign = "-" if scaled < 0 else ""
    text = str(abs(scaled)).rjust(digits + 1, "0")
    out = f"{sign}{text[:-digits]}.{text[-digits:]}" if digits else f"{sign}{text}"
    return out.rstrip("0").rstrip(".") if "." in out else out


def _num_str(v, dps: int) -> str:
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        return _frac_str(v)
    return mp.nstr(mpmath.mpmathify(v), dps, strip_zeros=True)


def _json_scalar(v, dps: int):
    """JSON-ready scalar; complex becomes {'re': ..., 'im': ...}."""
    if isinstance(v, bool):
        return v
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        return _frac_str(v)
    if isinstance(v, ZPhi):
        return {"unit_part": v.a, "phi_part": v.b}
    if isinstance(v, (complex, mpmath.mpc)) or (hasattr(v, "imag") and v.imag != 0):
        return {"re": _num_str(v.real, dps), "im": _num_str(v.imag, dps)}
    if hasattr(v, "real") and not isinstance(v, float):
        return _num_str(v.real, dps)
    if isinstance(v, float):
        return _num_str(v, dps)
    return str(v)


def _csv_cells(v, dps: int) -> list[str]:
    j = _json_scalar(v, dps)
    if isinstance(j, dict) and "re" in j:
        return [j["re"], j["im"]]
    if isinstance(j, dict):
        return [str(x) for x in j.values()]
    return [str(j)]


def _render_csv(header: list[str], rows: list[list[str]]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(r) for r in rows)
    return "\n".join(lines) + "\n"


def _emit(ctx: click.Context, command: str, params: dict, *,
          value=None, values=None,
          plain: str, csv_header: list[str] | None = None,
          csv_rows: list[list[str]] | None = None,
          json_extra: dict | None = None) -> None:
    opts = ctx.obj
    dps = opts["precision"]
    fmt = opts["format"]
    if fmt == "json":
        body: dict = {"command": command, "params": params, "precision": dps}
        if values is not None:
            body["values"] = values
        else:
            body["value"] = value
        if json_extra:
            body.update(json_extra)
        payload = json.dumps(body, indent=2, sort_keys=True) + "\n"
    elif fmt == "csv":
        if csv_header is None:
            csv_header, csv_rows = ["value"], [[str(value)]]
        payload = _render_csv(csv_header, csv_rows or [])
    else:
        payload = plain if plain.endswith("\n") else plain + "\n"
    opts["record"] = OutputRecord(format=fmt, payload=payload, command=command,
                                  params=params, precision=dps)


# ---------------------------------------------------------------------------
# Command group
# ---------------------------------------------------------------------------

class _FractionParam(click.ParamType):
    name = "fraction"

    def convert(self, value, param, ctx):
        try:
            return Fraction(str(value))
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not a rational number", param, ctx)


FRACTION = _FractionParam()


def _common_params() -> list[click.Option]:
    return [
        click.Option(["--precision"], type=int, default=None,
                     help="Working precision in decimal digits."),
        click.Option(["--tol"], type=float, default=None,
                     help="Override the default tolerance where residuals are checked."),
        click.Option(["--format", "fmt"], type=click.Choice(["plain", "json", "csv"]),
                     default=None, help="Output format."),
        click.Option(["--seed"], type=int, default=None,
                     help="Seed for randomized verification suites."),
    ]


class CommonCommand(click.Command):
    """Command accepting the global options after the subcommand name too.

    Unknown option-looking tokens fall through as arguments so that negative
    numbers ("fib -3", "fibx -0.5") parse without a "--" separator.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.params = list(self.params) + _common_params()
        self.context_settings.setdefault("ignore_unknown_options", True)

    def invoke(self, ctx: click.Context):
        for param, key in (("precision", "precision"), ("tol", "tol"),
                           ("fmt", "format"), ("seed", "seed")):
            value = ctx.params.pop(param, None)
            if value is not None:
                ctx.obj[key] = value
        return super().invoke(ctx)


@click.group()
@click.option("--precision", type=int, default=DEFAULT_DPS, show_default=True,
              help="Working precision in decimal digits.")
@click.option("--tol", type=float, default=None,
              help="Override the default tolerance where a command checks residuals.")
@click.option("--format", "fmt", type=click.Choice(["plain", "json", "csv"]),
              default="plain", show_default=True, help="Output format.")
@click.option("--seed", type=int, default=0, show_default=True,
              help="Seed for randomized verification suites.")
@click.pass_context
def cli(ctx: click.Context, precision: int, tol: float | None, fmt: str, seed: int) -> None:
    """Golden (Binet-Fibonacci) calculus and the Golden quantum oscillator."""
    ctx.ensure_object(dict)
    ctx.obj.update({"precision": precision, "tol": tol, "format": fmt, "seed": seed,
                    "record": None, "exit_code": EXIT_OK})


@cli.command(cls=CommonCommand)
@click.argument("n", type=int)
@click.pass_context
def fib(ctx, n: int) -> None:
    """Exact Fibonacci number F_N (negative indices allowed)."""
    value = core.fib_exact(n)
    _emit(ctx, "fib", {"n": n}, value=value, plain=str(value),
          csv_header=["n", "F_n"], csv_rows=[[str(n), str(value)]])


@cli.command(cls=CommonCommand)
@click.argument("re", type=str)
@click.argument("im", type=str, default="0")
@click.pass_context
def fibx(ctx, re: str, im: str) -> None:
    """Analytic Fibonacci value F_z at complex z = RE + IM*i."""
    dps = ctx.obj["precision"]
    with mp.workdps(dps):
        z = mp.mpc(mp.mpf(re), mp.mpf(im))
    gv = core.fib_extended(z, dps)
    _emit(ctx, "fibx", {"re": re, "im": im},
          value=_json_scalar(gv.value, dps),
          plain=_num_str(gv.value, dps),
          csv_header=["re", "im"], csv_rows=[_csv_cells(gv.value, dps)])


@cli.command("fibonomial", cls=CommonCommand)
@click.argument("n", type=int)
@click.argument("k", type=int)
@click.pass_context
def fibonomial_cmd(ctx, n: int, k: int) -> None:
    """Fibonomial coefficient [N K]_F."""
    value = binomials.fibonomial(n, k)
    _emit(ctx, "fibonomial", {"n": n, "k": k}, value=value, plain=str(value),
          csv_header=["n", "k", "coefficient"], csv_rows=[[str(n), str(k), str(value)]])


@cli.command(cls=CommonCommand)
@click.argument("n", type=int)
@click.option("--form", type=click.Choice(["product", "expansion"]), default="product",
              show_default=True)
@click.pass_context
def binom(ctx, n: int, form: str) -> None:
    """Golden binomial (x+y)_F^N as an exact polynomial."""
    poly = binomials.golden_binomial(n, form)
    dps = ctx.obj["precision"]
    monos = list(poly.monomials())
    values = [{"x_power": i, "y_power": j, "coefficient": _json_scalar(c, dps)}
              for (i, j), c in monos]
    rows = [[str(i), str(j), str(c.a), str(c.b)] for (i, j), c in monos]
    _emit(ctx, "binom", {"n": n, "form": form}, values=values, plain=str(poly),
          csv_header=["x_power", "y_power", "coeff_unit", "coeff_phi"], csv_rows=rows)


@cli.command(cls=CommonCommand)
@click.argument("n", type=int)
@click.option("--a", type=FRACTION, default=Fraction(1), help="Shift parameter a.")
@click.pass_context
def poly(ctx, n: int, a: Fraction) -> None:
    """Golden polynomial P_N(x) = (x-a)_F^N / F_N!."""
    p = binomials.golden_polynomial(n, a)
    values = [_frac_str(c) for c in p.coeffs]
    rows = [[str(k), _frac_str(c)] for k, c in enumerate(p.coeffs)]
    _emit(ctx, "poly", {"n": n, "a": _frac_str(a)}, values=values, plain=str(p),
          csv_header=["degree", "coefficient"], csv_rows=rows)


def _parse_coeffs(text: str) -> binomials.UnivarPoly:
    try:
        coeffs = tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise click.UsageError(f"cannot parse coefficient list {text!r}: {exc}")
    if not coeffs:
        raise click.UsageError("coefficient list is empty")
    return binomials.UnivarPoly(coeffs=coeffs)


@cli.command(cls=CommonCommand)
@click.argument("coeffs", type=str)
@click.option("--x", "x_at", type=str, default=None,
              help="Evaluate the derivative at this point instead of printing coefficients.")
@click.pass_context
def deriv(ctx, coeffs: str, x_at: str | None) -> None:
    """Golden derivative of a polynomial given by ascending COEFFS (comma-separated)."""
    p = _parse_coeffs(coeffs)
    d = calculus.derive_poly(p)
    dps = ctx.obj["precision"]
    if x_at is not None:
        with mp.workdps(dps):
            value = d.evaluate(mp.mpf(x_at))
        _emit(ctx, "deriv", {"coeffs": coeffs, "x": x_at},
              value=_json_scalar(value, dps), plain=_num_str(value, dps),
              csv_header=["value"], csv_rows=[_csv_cells(value, dps)])
        return
    values = [_frac_str(c) for c in d.coeffs]
    _emit(ctx, "deriv", {"coeffs": coeffs}, values=values,
          plain=",".join(values),
          csv_header=["degree", "coefficient"],
          csv_rows=[[str(k), v] for k, v in enumerate(values)])


@cli.command("exp", cls=CommonCommand)
@click.argument("x", type=str)
@click.option("--kind", type=click.Choice(["small_e", "big_E"]), default="small_e",
              show_default=True)
@click.option("--terms", type=int, default=120, show_default=True)
@click.pass_context
def exp_cmd(ctx, x: str, kind: str, terms: int) -> None:
    """Golden exponential e_F^x or E_F^x."""
    dps = ctx.obj["precision"]
    with mp.workdps(dps):
        xv = mp.mpf(x)
    sv = calculus.golden_exp(xv, kind, n_terms=terms, precision=dps)
    _emit(ctx, "exp", {"x": x, "kind": kind, "terms": terms},
          value=_json_scalar(sv.value, dps),
          json_extra={"terms_used": sv.terms_used, "tail_bound": _num_str(sv.tail_bound, dps)},
          plain=f"{_num_str(sv.value, dps)} (terms used: {sv.terms_used}, "
                f"tail bound: {_num_str(sv.tail_bound, 6)})",
          csv_header=["re", "im", "terms_used", "tail_bound"],
          csv_rows=[_csv_cells(sv.value, dps) + [str(sv.terms_used), _num_str(sv.tail_bound, dps)]])


@cli.command(cls=CommonCommand)
@click.argument("x", type=str)
@click.option("--kind", type=click.Choice(["cos_F", "sin_F", "Cosh_F", "Sinh_F"]),
              required=True)
@click.option("--terms", type=int, default=120, show_default=True)
@click.pass_context
def trig(ctx, x: str, kind: str, terms: int) -> None:
    """Golden trigonometric value at x."""
    dps = ctx.obj["precision"]
    with mp.workdps(dps):
        xv = mp.mpf(x)
    sv = calculus.golden_trig(xv, kind, n_terms=terms, precision=dps)
    _emit(ctx, "trig", {"x": x, "kind": kind, "terms": terms},
          value=_json_scalar(sv.value, dps),
          json_extra={"terms_used": sv.terms_used, "tail_bound": _num_str(sv.tail_bound, dps)},
          plain=_num_str(sv.value, dps),
          csv_header=["re", "im"], csv_rows=[_csv_cells(sv.value, dps)])


@cli.command(cls=CommonCommand)
@click.argument("coeffs", type=str)
@click.option("--x", "x_at", type=str, required=True, help="Evaluation point (nonzero).")
@click.option("--terms", type=int, default=200, show_default=True)
@click.pass_context
def integrate(ctx, coeffs: str, x_at: str, terms: int) -> None:
    """Golden antiderivative of the polynomial COEFFS, evaluated at --x."""
    p = _parse_coeffs(coeffs)
    dps = ctx.obj["precision"]
    with mp.workdps(dps):
        xv = mp.mpf(x_at)
    value = calculus.jackson_antiderivative(p, xv, n_terms=terms, precision=dps)
    _emit(ctx, "integrate", {"coeffs": coeffs, "x": x_at, "terms": terms},
          value=_json_scalar(value, dps), plain=_num_str(value, dps),
          csv_header=["re", "im"], csv_rows=[_csv_cells(value, dps)])


@cli.command(cls=CommonCommand)
@click.option("--n-max", type=int, required=True)
@click.option("--hbar-omega", type=FRACTION, default=Fraction(1), show_default="1")
@click.pass_context
def spectrum(ctx, n_max: int, hbar_omega: Fraction) -> None:
    """Golden oscillator energy levels E_n = (hbar*omega/2) F_{n+2}."""
    table = oscillator.spectrum(n_max, hbar_omega)
    values = [{"n": n, "energy": _frac_str(e)} for n, e in table.levels]
    rows = [[str(n), _frac_str(e)] for n, e in table.levels]
    plain = "\n".join(f"E_{n} = {_frac_str(e)}" for n, e in table.levels)
    _emit(ctx, "spectrum", {"n_max": n_max, "hbar_omega": _frac_str(hbar_omega)},
          values=values, plain=plain, csv_header=["n", "E_n"], csv_rows=rows)


@cli.command(cls=CommonCommand)
@click.option("--n-max", type=int, required=True)
@click.pass_context
def ratios(ctx, n_max: int) -> None:
    """Fibonacci convergents F_{n+1}/F_n for n = 1..n_max."""
    dps = ctx.obj["precision"]
    seq = core.ratio_sequence(n_max, dps)
    values = [_num_str(r, dps) for r in seq]
    rows = [[str(n + 1), values[n]] for n in range(len(seq))]
    _emit(ctx, "ratios", {"n_max": n_max}, values=values,
          plain="\n".join(values), csv_header=["n", "ratio"], csv_rows=rows)


def _matrix_json(mat: np.ndarray, dps: int) -> list:
    return [[_json_scalar(complex(mat[r, c]), dps) for c in range(mat.shape[1])]
            for r in range(mat.shape[0])]


@cli.command(cls=CommonCommand)
@click.option("--j", "j_str", type=str, required=True, help="Spin label (integer or half-integer).")
@click.option("--variant", type=click.Choice(["standard", "symmetric", "tilde"]),
              default="standard", show_default=True)
@click.pass_context
def angmom(ctx, j_str: str, variant: str) -> None:
    """Deformed angular-momentum matrices and diagnostics at spin j."""
    try:
        j = Fraction(j_str)
    except (ValueError, ZeroDivisionError):
        raise click.UsageError(f"invalid spin label {j_str!r}")
    dps = ctx.obj["precision"]
    variant_full = {"standard": "standard_F", "symmetric": "symmetric_iphi",
                    "tilde": "tilde_F"}[variant]
    rep = angular.build_representation(j, variant_full)
    extra: dict = {}
    plain_lines = [f"variant {variant_full}, j = {j}",
                   f"J+ =\n{np.array_str(rep.j_plus, precision=6)}",
                   f"J- =\n{np.array_str(rep.j_minus, precision=6)}",
                   f"Jz =\n{np.array_str(rep.j_z, precision=6)}"]
    if variant == "standard":
        cas = angular.casimir_suF2(j)
        extra["casimir_eigenvalue"] = _json_scalar(cas.eigenvalue, dps)
        extra["casimir_form_difference"] = cas.form_difference
        plain_lines.append(f"Casimir eigenvalue = {cas.eigenvalue:.12g} "
                           f"(form difference {cas.form_difference:.3e})")
    elif variant == "symmetric":
        srep = angular.verify_symmetric(j)
        extra["commutator_residual"] = srep.residual_plain
        plain_lines.append(str(srep))
    else:
        trep = angular.verify_tilde(j)
        extra["anticommutator_residual"] = trep.anticommutator_residual
        extra["casimir_form_difference"] = trep.casimir_form_difference
        plain_lines.append(
            f"tilde j={j}: anti-commutator residual {trep.anticommutator_residual:.3e}, "
            f"Casimir form difference {trep.casimir_form_difference:.3e}")
    values = {
        "j_plus": _matrix_json(rep.j_plus, dps),
        "j_minus": _matrix_json(rep.j_minus, dps),
        "j_z": _matrix_json(rep.j_z, dps),
    }
    rows = []
    for name, mat in (("j_plus", rep.j_plus), ("j_minus", rep.j_minus), ("j_z", rep.j_z)):
        for r in range(mat.shape[0]):
            for c in range(mat.shape[1]):
                if mat[r, c] != 0:
                    cells = _csv_cells(complex(mat[r, c]), dps)
                    rows.append([name, str(r), str(c)] + cells)
    _emit(ctx, "angmom", {"j": j_str, "variant": variant},
          values=values, json_extra=extra, plain="\n".join(plain_lines),
          csv_header=["operator", "row", "col", "re", "im"], csv_rows=rows)


@cli.command("invert-n", cls=CommonCommand)
@click.argument("fib_value", type=int)
@click.option("--parity", type=click.Choice(["even", "odd"]), required=True)
@click.pass_context
def invert_n(ctx, fib_value: int, parity: str) -> None:
    """Recover the index n from a Fibonacci number and the parity of n."""
    n = oscillator.invert_number(fib_value, parity, ctx.obj["precision"])
    _emit(ctx, "invert-n", {"fib_value": fib_value, "parity": parity},
          value=n, plain=str(n),
          csv_header=["fib_value", "parity", "n"],
          csv_rows=[[str(fib_value), parity, str(n)]])


@cli.command(cls=CommonCommand)
@click.argument("y", type=str)
@click.option("--n", type=int, default=80, show_default=True)
@click.pass_context
def limit(ctx, y: str, n: int) -> None:
    """Finite Golden-binomial value (1 + y/phi^n)_F^n vs its Jackson-exponential limit."""
    dps = ctx.obj["precision"]
    with mp.workdps(dps):
        yv = mp.mpf(y)
        lhs = binomials.remarkable_limit_lhs(yv, n, dps)
        rhs = binomials.jackson_exp(binomials.golden_base(dps), yv / mp.sqrt(5),
                                     min(n, binomials.MAX_SERIES_TERMS), dps)
        diff = abs(lhs - rhs)
    _emit(ctx, "limit", {"y": y, "n": n},
          value={"finite": _json_scalar(lhs, dps), "jackson": _json_scalar(rhs, dps),
                 "difference": _num_str(diff, 6)},
          plain=(f"finite:  {_num_str(lhs, dps)}\n"
                 f"jackson: {_num_str(rhs, dps)}\n"
                 f"difference: {_num_str(diff, 6)}"),
          csv_header=["finite", "jackson", "difference"],
          csv_rows=[[_num_str(lhs, dps), _num_str(rhs, dps), _num_str(diff, 6)]])


@cli.command("verify", cls=CommonCommand)
@click.option("--profile", type=click.Choice(["default", "strict"]), default="default",
              show_default=True)
@click.option("--only", multiple=True, help="Run only suites matching this id prefix.")
@click.option("--inject-fault", type=str, default=None,
              help="Perturb the named fault-capable suite (testing hook).")
@click.option("--report", "report_path", type=click.Path(dir_okay=False, writable=True),
              default=None, help="Also write the JSON report to this file.")
@click.pass_context
def verify_cmd(ctx, profile: str, only: tuple[str, ...], inject_fault: str | None,
               report_path: str | None) -> None:
    """Run the identity verification suites and emit the report."""
    known = verify.suite_ids()
    if only and not any(s == f or s.startswith(f) for s in known for f in only):
        raise click.UsageError(f"no verification suites match {list(only)!r}")
    rep = verify.verify_all(profile=profile, seed=ctx.obj["seed"],
                            only=list(only) or None, inject_fault=inject_fault,
                            precision=ctx.obj["precision"],
                            tol_override=ctx.obj["tol"])
    params = {"profile": profile, "only": list(only), "seed": ctx.obj["seed"]}
    envelope = {"command": "verify", "params": params,
                "precision": ctx.obj["precision"], "value": rep.to_dict()}
    payload_json = json.dumps(envelope, indent=2, sort_keys=True) + "\n"
    if report_path:
        with open(report_path, "w", encoding="utf-8") as fh:
            fh.write(payload_json)
    summary = rep.summary
    plain_lines = [
        f"{e.status.upper():15s} {e.id:40s} "
        + (f"residual {e.max_residual:.3e}" if e.max_residual is not None else "exact")
        for e in rep.entries
    ]
    plain_lines.append(f"pass {summary['pass']}  fail {summary['fail']}  "
                       f"known-deviation {summary['known_deviation']}")
    fmt = ctx.obj["format"]
    if fmt == "csv":
        rows = [[e.id, e.status, "" if e.max_residual is None else repr(e.max_residual)]
                for e in rep.entries]
        _emit(ctx, "verify", params, values=None, plain="\n".join(plain_lines),
              csv_header=["id", "status", "max_residual"], csv_rows=rows)
    elif fmt == "json":
        ctx.obj["record"] = OutputRecord(format="json", payload=payload_json,
                                         command="verify", params=params,
                                         precision=ctx.obj["precision"])
    else:
        _emit(ctx, "verify", params, value=None, plain="\n".join(plain_lines))
    if rep.failed:
        ctx.obj["exit_code"] = EXIT_VERIFY


@cli.command("plot-data", cls=CommonCommand)
@click.argument("kind", type=click.Choice(["ratios", "spectrum", "casimir_ratios"]))
@click.option("--n-max", type=int, required=True)
@click.option("--output", type=click.Path(dir_okay=False, writable=True), required=True)
@click.pass_context
def plot_data(ctx, kind: str, n_max: int, output: str) -> None:
    """Write convergence/spectrum data as CSV with a header row."""
    dps = ctx.obj["precision"]
    if kind == "ratios":
        seq = core.ratio_sequence(n_max, dps)
        header = ["n", "value"]
        rows = [[str(n + 1), _num_str(r, dps)] for n, r in enumerate(seq)]
    elif kind == "spectrum":
        table = oscillator.spectrum(n_max, 1)
        header = ["n", "E_n"]
        rows = [[str(n), _frac_str(e)] for n, e in table.levels]
    else:
        seq = angular.casimir_ratio(max(n_max, 3), dps)[: max(n_max - 1, 0)]
        header = ["n", "value"]  # n is the spin label of the numerator eigenvalue
        rows = [[str(j + 2), _num_str(r, dps)] for j, r in enumerate(seq)]
    content = _render_csv(header, rows)
    try:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(content)
    except OSError as exc:
        raise DomainError(f"cannot write {output!r}: {exc}")
    _emit(ctx, "plot-data", {"kind": kind, "n_max": n_max, "output": output},
          value={"path": output, "rows": len(rows)},
          plain=f"wrote {len(rows)} rows to {output}",
          csv_header=header, csv_rows=rows)


# ---------------------------------------------------------------------------
# Entry points
# ---------------------------------------------------------------------------

def run_command(argv: Sequence[str]) -> tuple[int, OutputRecord | None]:
    """Execute one CLI invocation programmatically.

    Returns (exit_code, record); the record holds the exact payload the
    command would print.  Usage problems give exit 1, domain errors 2,
    verification failures 3.
    """
    obj: dict = {}
    try:
        cli.main(args=list(argv), prog_name="goldencalc", standalone_mode=False, obj=obj)
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return EXIT_USAGE, None
    except click.exceptions.Exit as exc:  # --help and friends
        return (EXIT_OK if exc.exit_code == 0 else EXIT_USAGE), None
    except click.Abort:
        return EXIT_USAGE, None
    except DomainError as exc:
        click.echo(f"domain error: {exc}", err=True)
        return EXIT_DOMAIN, None
    record = obj.get("record")
    return obj.get("exit_code", EXIT_OK), record


def main() -> None:
    code, record = run_command(sys.argv[1:])
    if record is not None:
        sys.stdout.write(record.payload)
    sys.exit(code)


if __name__ == "__main__":
    main()
