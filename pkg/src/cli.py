"""
Command-line front end.

Usage:
    uv run regcyclo phi --system U --set one --n 12
    uv run regcyclo factor --system D --set squares --range 1..20 --format json
    uv run regcyclo verify --identity construction,kappa --range 1..120 --workers 4
    uv run regcyclo table --system U --set squares --range 1..50 --k 2

Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 internal identity violation.
"""

from __future__ import annotations

import json
import logging
from collections.abc import Callable
from typing import Literal

import pandas as pd
import typer
from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from src.config import Settings, load_env, load_settings
from src.divisor_sets import h_AS, mobius_AS, euler_phi_AS, ramanujan_AS, resolve_set
from src.errors import IdentityViolation, OutOfRange, RouteMismatch, SetExcludesOne
from src.identities.reports import STATUS_PASS, VerificationReport
from src.identities.sweeps import SweepOptions, resolve_identities, run_sweep
from src.polynomials.cyclotomic import cyclotomic_product
from src.polynomials.generalized import factor_indices, phi_AS
from src.regular_systems import BUILTIN_SYSTEMS, get_system
from src.schemas import TABLE_COLUMNS, arithmetic_table_schema
from src.utils.poly_display import format_coefficients, format_factorization

logger = logging.getLogger("cyclo:cli")

EXIT_PASS = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_IDENTITY_VIOLATION = 3

FORMAT_TEXT = "text"
FORMAT_JSON = "json"

COMMAND_VERIFY = "verify"

app = typer.Typer(help="Generalized cyclotomic polynomials over regular systems of divisors.", no_args_is_help=True)


def parse_range(text: str) -> list[int]:
    """'A..B' (inclusive) -> [A, ..., B]."""
    start, sep, stop = text.partition("..")
    if not sep:
        raise ValueError(f"range must look like A..B, got '{text}'")
    try:
        low, high = int(start), int(stop)
    except ValueError as exc:
        raise ValueError(f"range bounds must be integers, got '{text}'") from exc
    if low < 1 or high < low:
        raise ValueError(f"range must satisfy 1 <= A <= B, got '{text}'")
    return list(range(low, high + 1))


class CliConfig(BaseModel):
    command: str
    system: str = "D"
    set_spec: str = "one"
    n_values: list[int] = Field(..., min_length=1)
    output_format: Literal["text", "json"] = FORMAT_TEXT
    precision_bits: int = Field(128, ge=64)
    identities: list[str] = Field(default_factory=lambda: ["all"])
    systems: list[str] = Field(default_factory=list)
    sets: list[str] = Field(default_factory=list)
    workers: int = Field(1, ge=1)
    k: int = Field(1, ge=0)
    max_n: int = Field(..., ge=1)

    @field_validator("system")
    @classmethod
    def _known_system(cls, value: str) -> str:
        return get_system(value).name

    @field_validator("set_spec")
    @classmethod
    def _known_set(cls, value: str) -> str:
        return resolve_set(value).name

    @field_validator("systems")
    @classmethod
    def _known_systems(cls, value: list[str]) -> list[str]:
        return [get_system(v).name for v in value]

    @field_validator("sets")
    @classmethod
    def _known_sets(cls, value: list[str]) -> list[str]:
        return [resolve_set(v).name for v in value]

    @field_validator("identities")
    @classmethod
    def _known_identities(cls, value: list[str]) -> list[str]:
        return resolve_identities(value)

    @model_validator(mode="after")
    def _within_cap(self) -> CliConfig:
        if max(self.n_values) > self.max_n:
            env_name = "CYCLO_VERIFY_MAX_N or CYCLO_MAX_N" if self.command == COMMAND_VERIFY else "CYCLO_MAX_N"
            raise OutOfRange(f"n = {max(self.n_values)} exceeds the cap {self.max_n} (set {env_name} to raise it)")
        return self


class PolynomialPayload(BaseModel):
    n: int
    system: str
    set: str
    degree: int
    coeffs: list[str]


class FactorPayload(BaseModel):
    n: int
    system: str
    set: str
    factors: list[tuple[int, int]]


def _n_values(n: int | None, range_text: str | None) -> list[int]:
    if (n is None) == (range_text is None):
        raise ValueError("give exactly one of --n or --range")
    if n is not None:
        if n < 1:
            raise ValueError(f"--n must be >= 1, got {n}")
        return [n]
    return parse_range(range_text)


def _split(text: str) -> list[str]:
    return [item.strip() for item in text.split(",") if item.strip()]


def _run(body: Callable[[Settings], int]) -> None:
    """Run a command body and map failures onto exit codes."""
    try:
        code = body(load_settings())
    except IdentityViolation as exc:
        logger.error("internal identity violation: %s", exc)
        typer.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        raise typer.Exit(EXIT_IDENTITY_VIOLATION) from exc
    except ValidationError as exc:
        typer.echo(f"error: {exc}", err=True)
        raise typer.Exit(EXIT_USAGE) from exc
    except ValueError as exc:
        typer.echo(f"error: {exc}", err=True)
        raise typer.Exit(EXIT_USAGE) from exc
    raise typer.Exit(code)


@app.callback()
def main(
    env: str | None = typer.Option(None, "--env", help="Load .env.<name> on top of .env."),
    log_level: str | None = typer.Option(None, "--log-level", help="Logging level (default CYCLO_LOG_LEVEL or INFO)."),
) -> None:
    try:
        load_env(env)
        level = (log_level or load_settings().log_level).upper()
    except (FileNotFoundError, ValueError) as exc:
        typer.echo(f"error: {exc}", err=True)
        raise typer.Exit(EXIT_USAGE) from exc
    if level not in logging.getLevelNamesMapping():
        typer.echo(f"error: unknown log level '{level}'", err=True)
        raise typer.Exit(EXIT_USAGE)
    logging.basicConfig(level=level, format="%(asctime)s %(name)s %(levelname)s %(message)s")


SYSTEM_OPTION = typer.Option("D", "--system", help=f"Regular system: {'|'.join(BUILTIN_SYSTEMS)}.")
SET_OPTION = typer.Option("one", "--set", help="one|nonone|squares|primes|list:<csv>.")
N_OPTION = typer.Option(None, "--n", help="A single n.")
RANGE_OPTION = typer.Option(None, "--range", help="Inclusive range A..B.")
FORMAT_OPTION = typer.Option(FORMAT_TEXT, "--format", help="text|json.")


@app.command()
def phi(
    system: str = SYSTEM_OPTION,
    set_spec: str = SET_OPTION,
    n: int | None = N_OPTION,
    range_text: str | None = RANGE_OPTION,
    output_format: str = FORMAT_OPTION,
) -> None:
    """Print Phi_{A,S,n}: coefficients ascending and the expanded polynomial."""

    def body(settings: Settings) -> int:
        config = CliConfig(
            command="phi",
            system=system,
            set_spec=set_spec,
            n_values=_n_values(n, range_text),
            output_format=output_format,
            max_n=settings.max_n,
        )
        A, S = get_system(config.system), resolve_set(config.set_spec)
        payloads = []
        for m in config.n_values:
            poly = phi_AS(A, S, m)
            if config.output_format == FORMAT_JSON:
                payloads.append(
                    PolynomialPayload(
                        n=m, system=A.name, set=S.name, degree=poly.degree(), coeffs=[str(c) for c in poly.coeffs]
                    ).model_dump()
                )
            else:
                typer.echo(f"Phi_{{{A.name},{S.name},{m}}}(x) = {poly}")
                typer.echo(f"  coeffs = {format_coefficients(poly.coeffs)}")
        if config.output_format == FORMAT_JSON:
            typer.echo(json.dumps(payloads[0] if len(payloads) == 1 else payloads))
        return EXIT_PASS

    _run(body)


@app.command()
def factor(
    system: str = SYSTEM_OPTION,
    set_spec: str = SET_OPTION,
    n: int | None = N_OPTION,
    range_text: str | None = RANGE_OPTION,
    output_format: str = FORMAT_OPTION,
) -> None:
    """Factor Phi_{A,S,n} into classical cyclotomic polynomials Phi_d."""

    def body(settings: Settings) -> int:
        config = CliConfig(
            command="factor",
            system=system,
            set_spec=set_spec,
            n_values=_n_values(n, range_text),
            output_format=output_format,
            max_n=settings.max_n,
        )
        A, S = get_system(config.system), resolve_set(config.set_spec)
        payloads = []
        for m in config.n_values:
            indices = factor_indices(A, S, m)
            if cyclotomic_product(indices) != phi_AS(A, S, m):
                raise RouteMismatch(f"classical factors {list(indices)} do not multiply to Phi_{{{A.name},{S.name},{m}}}")
            multiplicities = sorted({d: indices.count(d) for d in indices}.items())
            if config.output_format == FORMAT_JSON:
                payloads.append(FactorPayload(n=m, system=A.name, set=S.name, factors=multiplicities).model_dump())
            else:
                typer.echo(f"Phi_{{{A.name},{S.name},{m}}}(x) = {format_factorization(indices)}")
        if config.output_format == FORMAT_JSON:
            typer.echo(json.dumps(payloads[0] if len(payloads) == 1 else payloads))
        return EXIT_PASS

    _run(body)


@app.command()
def verify(
    identity: str = typer.Option("all", "--identity", help="Comma-separated identity ids, or 'all'."),
    system: str = typer.Option("D,U,E", "--system", help="Comma-separated systems."),
    set_spec: str = typer.Option("one,nonone,squares,primes", "--set", help="Comma-separated sets (list sets use ';')."),
    n: int | None = N_OPTION,
    range_text: str | None = RANGE_OPTION,
    output_format: str = FORMAT_OPTION,
    precision_bits: int | None = typer.Option(None, "--precision-bits", help="Oracle precision (default CYCLO_PRECISION_BITS)."),
    workers: int | None = typer.Option(None, "--workers", help="Worker processes (default CYCLO_WORKERS)."),
    seed: int = typer.Option(0, "--seed", help="Seed for the random arithmetic functions."),
) -> None:
    """Run verification sweeps; exit 0 iff every report passes.

    n is capped by CYCLO_VERIFY_MAX_N (default 120); an explicit CYCLO_MAX_N raises the cap when that is unset.
    """

    def body(settings: Settings) -> int:
        config = CliConfig(
            command=COMMAND_VERIFY,
            n_values=_n_values(n, range_text),
            output_format=output_format,
            precision_bits=precision_bits or settings.precision_bits,
            identities=_split(identity),
            systems=_split(system),
            # list sets carry commas, so several sets are separated by ';' when any is a list
            sets=[s.strip() for s in set_spec.split(";")] if ";" in set_spec else _split(set_spec),
            workers=workers or settings.workers,
            max_n=settings.verify_max_n,
        )
        options = SweepOptions(precision_bits=config.precision_bits, seed=seed)
        reports = run_sweep(
            config.identities, config.systems, config.sets, config.n_values, workers=config.workers, options=options
        )
        _emit_reports(reports, config.output_format)
        return EXIT_PASS if all(r.status == STATUS_PASS for r in reports) else EXIT_VERIFICATION_FAILED

    _run(body)


def _emit_reports(reports: list[VerificationReport], output_format: str) -> None:
    if output_format == FORMAT_JSON:
        typer.echo(json.dumps([r.model_dump() for r in reports]))
        return
    for report in reports:
        typer.echo(report.to_line())
    passed = sum(1 for r in reports if r.passed)
    typer.echo("")
    typer.echo(f"Results: {passed} passed, {len(reports) - passed} failed out of {len(reports)} reports")


def build_table(system: str, set_spec: str, n_values: list[int], k: int) -> pd.DataFrame:
    A, S = get_system(system), resolve_set(set_spec)
    rows = []
    for m in n_values:
        try:
            h = h_AS(A, S, m)
        except SetExcludesOne:
            h = None
        rows.append(
            {
                "n": m,
                "system": A.name,
                "set": S.name,
                "phi_AS": euler_phi_AS(A, S, m),
                "mu_AS": mobius_AS(A, S, m),
                "h_AS": h,
                "k": k,
                "c_AS_k": ramanujan_AS(A, S, m, k),
            }
        )
    frame = pd.DataFrame(rows, columns=TABLE_COLUMNS)
    frame["h_AS"] = frame["h_AS"].astype("Int64")
    return arithmetic_table_schema.validate(frame)


@app.command()
def table(
    system: str = SYSTEM_OPTION,
    set_spec: str = SET_OPTION,
    n: int | None = N_OPTION,
    range_text: str | None = RANGE_OPTION,
    k: int = typer.Option(1, "--k", help="Argument k of c_{A,S,n}(k)."),
    output_format: str = FORMAT_OPTION,
) -> None:
    """Tabulate phi_{A,S}, mu_{A,S}, h_{A,S} and c_{A,S,n}(k) over a range."""

    def body(settings: Settings) -> int:
        config = CliConfig(
            command="table",
            system=system,
            set_spec=set_spec,
            n_values=_n_values(n, range_text),
            output_format=output_format,
            k=k,
            max_n=settings.max_n,
        )
        frame = build_table(config.system, config.set_spec, config.n_values, config.k)
        if config.output_format == FORMAT_JSON:
            typer.echo(frame.to_json(orient="records"))
        else:
            typer.echo(frame.to_string(index=False))
        return EXIT_PASS

    _run(body)


if __name__ == "__main__":
    app()
