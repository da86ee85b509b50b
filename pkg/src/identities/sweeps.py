"""
Verification sweeps.

A sweep is a list of plain tuples (identity, system, set, n) dispatched to handlers by identity id.
Tasks pickle cleanly, so they fan out over a process pool when more than one worker is requested;
reports are sorted by (identity, system, set, n) whatever the schedule.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from src.characters import enumerate_characters
from src.config import DEFAULT_PRECISION_BITS
from src.divisor_sets import DivisorValueSet, resolve_set
from src.errors import IdentityViolation, PrecisionExhausted
from src.identities import checks
from src.identities.reports import NO_SET, NO_SYSTEM, VerificationReport, failed, passed
from src.regular_systems import RegularSystem, get_system, mobius_A

logger = logging.getLogger("cyclo:verify")

SCOPE_SYSTEM_AND_SET = "system+set"
SCOPE_SYSTEM = "system"
SCOPE_N = "n"

DEFAULT_EXP_POINTS = ("1/2", "1/3")
DEFAULT_EXP_ORDER = 200


@dataclass(frozen=True)
class SweepOptions:
    precision_bits: int = DEFAULT_PRECISION_BITS
    seed: int = 0
    exp_points: tuple[str, ...] = DEFAULT_EXP_POINTS
    exp_order: int = DEFAULT_EXP_ORDER


SweepTask = tuple[str, str, str, int, SweepOptions]
Handler = Callable[[RegularSystem | None, DivisorValueSet | None, int, SweepOptions], VerificationReport | None]


def _first_failure(reports: Iterable[VerificationReport]) -> VerificationReport | None:
    for report in reports:
        if not report.passed:
            return report
    return None


def handle_construction(
    A: RegularSystem, S: DivisorValueSet, n: int, options: SweepOptions
) -> VerificationReport | None:
    return checks.verify_construction(A, S, n, options.precision_bits)


def handle_product_xn(
    A: RegularSystem, S: None, n: int, options: SweepOptions
) -> VerificationReport | None:
    return checks.verify_product_xn_minus_1(A, n)


def handle_gen3(
    A: RegularSystem, S: DivisorValueSet, n: int, options: SweepOptions
) -> VerificationReport | None:
    return checks.verify_gen3(A, S, n)


def handle_xn_via_h(
    A: RegularSystem, S: DivisorValueSet, n: int, options: SweepOptions
) -> VerificationReport | None:
    if not S.member(1):
        return None
    return checks.verify_xn_via_h(A, S, n)


def handle_kappa(
    A: RegularSystem, S: None, n: int, options: SweepOptions
) -> VerificationReport | None:
    return checks.verify_kappa(A, n)


def handle_gamma_lift(
    A: RegularSystem, S: None, n: int, options: SweepOptions
) -> VerificationReport | None:
    return checks.verify_gamma_lift(A, n, options.seed)


def handle_ramanujan(
    A: RegularSystem, S: None, n: int, options: SweepOptions
) -> VerificationReport | None:
    return checks.verify_ramanujan(A, n)


def handle_ramanujan_AS(
    A: RegularSystem, S: DivisorValueSet, n: int, options: SweepOptions
) -> VerificationReport | None:
    return checks.verify_ramanujan_AS(A, S, n)


def handle_dft(
    A: RegularSystem, S: None, n: int, options: SweepOptions
) -> VerificationReport | None:
    functions = checks.sample_functions(options.seed + n)
    failure = _first_failure(
        checks.verify_dft(A, f, n, k) for f in functions.values() for k in range(n)
    )
    return failure or passed(checks.ID_DFT, n, system=A.name, functions=",".join(functions), k=f"0..{n - 1}")


def handle_cos_product(
    A: RegularSystem, S: None, n: int, options: SweepOptions
) -> VerificationReport | None:
    if n < 2:
        return None
    return checks.verify_cos_product(A, n)


def handle_menon_sum(
    A: RegularSystem, S: None, n: int, options: SweepOptions
) -> VerificationReport | None:
    functions = checks.sample_functions(options.seed + n)
    failure = _first_failure(checks.verify_menon_sum(A, f, n) for f in functions.values())
    return failure or passed(checks.ID_MENON_SUM, n, system=A.name, functions=",".join(functions))


def handle_menon_poly(
    A: RegularSystem, S: None, n: int, options: SweepOptions
) -> VerificationReport | None:
    return checks.verify_menon_poly(A, n)


def handle_menon_char(
    A: RegularSystem, S: None, n: int, options: SweepOptions
) -> VerificationReport | None:
    return checks.verify_menon_char(A, n, options.seed)


def handle_menon_char_product(
    A: RegularSystem, S: None, n: int, options: SweepOptions
) -> VerificationReport | None:
    characters = enumerate_characters(n)
    failure = _first_failure(checks.verify_menon_char_product(A, n, chi) for chi in characters)
    return failure or passed(checks.ID_MENON_CHAR_PRODUCT, n, system=A.name, characters=len(characters))


def handle_exp_series(
    A: RegularSystem, S: None, n: int, options: SweepOptions
) -> VerificationReport | None:
    if n < 2:
        return None
    failure = _first_failure(
        checks.verify_exp_series(A, n, Fraction(point), options.exp_order) for point in options.exp_points
    )
    return failure or passed(
        checks.ID_EXP_SERIES, n, system=A.name, x=",".join(options.exp_points), K=options.exp_order
    )


def handle_coefficients(
    A: RegularSystem, S: DivisorValueSet, n: int, options: SweepOptions
) -> VerificationReport | None:
    return checks.verify_coefficients(A, S, n)


def handle_recursion(
    A: RegularSystem, S: None, n: int, options: SweepOptions
) -> VerificationReport | None:
    if mobius_A(A, n) == 0:
        return None
    return checks.verify_recursion(A, n)


def handle_hurwitz(
    A: RegularSystem, S: DivisorValueSet, n: int, options: SweepOptions
) -> VerificationReport | None:
    return checks.verify_hurwitz(A, S, n, options.seed)


def handle_exp_odd(
    A: None, S: None, n: int, options: SweepOptions
) -> VerificationReport | None:
    return checks.verify_exponentially_odd(n)


def handle_characters(
    A: None, S: None, n: int, options: SweepOptions
) -> VerificationReport | None:
    return checks.verify_characters(n)


IDENTITY_SCOPES: dict[str, str] = {
    checks.ID_CONSTRUCTION: SCOPE_SYSTEM_AND_SET,
    checks.ID_PRODUCT_XN: SCOPE_SYSTEM,
    checks.ID_GEN3: SCOPE_SYSTEM_AND_SET,
    checks.ID_XN_VIA_H: SCOPE_SYSTEM_AND_SET,
    checks.ID_KAPPA: SCOPE_SYSTEM,
    checks.ID_GAMMA_LIFT: SCOPE_SYSTEM,
    checks.ID_RAMANUJAN: SCOPE_SYSTEM,
    checks.ID_RAMANUJAN_AS: SCOPE_SYSTEM_AND_SET,
    checks.ID_DFT: SCOPE_SYSTEM,
    checks.ID_COS_PRODUCT: SCOPE_SYSTEM,
    checks.ID_MENON_SUM: SCOPE_SYSTEM,
    checks.ID_MENON_POLY: SCOPE_SYSTEM,
    checks.ID_MENON_CHAR: SCOPE_SYSTEM,
    checks.ID_MENON_CHAR_PRODUCT: SCOPE_SYSTEM,
    checks.ID_EXP_SERIES: SCOPE_SYSTEM,
    checks.ID_COEFFICIENTS: SCOPE_SYSTEM_AND_SET,
    checks.ID_RECURSION: SCOPE_SYSTEM,
    checks.ID_HURWITZ: SCOPE_SYSTEM_AND_SET,
    checks.ID_EXP_ODD: SCOPE_N,
    checks.ID_CHARACTERS: SCOPE_N,
}

IDENTITY_IDS: tuple[str, ...] = tuple(IDENTITY_SCOPES)


def get_handler(identity: str) -> Handler | None:
    handlers: dict[str, Handler] = {
        checks.ID_CONSTRUCTION: handle_construction,
        checks.ID_PRODUCT_XN: handle_product_xn,
        checks.ID_GEN3: handle_gen3,
        checks.ID_XN_VIA_H: handle_xn_via_h,
        checks.ID_KAPPA: handle_kappa,
        checks.ID_GAMMA_LIFT: handle_gamma_lift,
        checks.ID_RAMANUJAN: handle_ramanujan,
        checks.ID_RAMANUJAN_AS: handle_ramanujan_AS,
        checks.ID_DFT: handle_dft,
        checks.ID_COS_PRODUCT: handle_cos_product,
        checks.ID_MENON_SUM: handle_menon_sum,
        checks.ID_MENON_POLY: handle_menon_poly,
        checks.ID_MENON_CHAR: handle_menon_char,
        checks.ID_MENON_CHAR_PRODUCT: handle_menon_char_product,
        checks.ID_EXP_SERIES: handle_exp_series,
        checks.ID_COEFFICIENTS: handle_coefficients,
        checks.ID_RECURSION: handle_recursion,
        checks.ID_HURWITZ: handle_hurwitz,
        checks.ID_EXP_ODD: handle_exp_odd,
        checks.ID_CHARACTERS: handle_characters,
    }
    return handlers.get(identity)


def resolve_identities(spec: str | Sequence[str]) -> list[str]:
    """'all', a comma-separated string, or a list of identity ids."""
    raw = spec.split(",") if isinstance(spec, str) else list(spec)
    ids = [item.strip() for item in raw if item.strip()]
    if any(item == "all" for item in ids):
        return list(IDENTITY_IDS)
    unknown = [item for item in ids if item not in IDENTITY_SCOPES]
    if unknown:
        raise ValueError(f"Unknown identity id(s): {', '.join(unknown)}. Expected 'all' or: {', '.join(IDENTITY_IDS)}")
    if not ids:
        raise ValueError("no identity ids given")
    return ids


def build_tasks(
    identities: Sequence[str],
    systems: Sequence[str],
    sets: Sequence[str],
    n_values: Iterable[int],
    options: SweepOptions,
) -> list[SweepTask]:
    n_list = list(n_values)
    tasks: list[SweepTask] = []
    for identity in identities:
        scope = IDENTITY_SCOPES[identity]
        if scope == SCOPE_N:
            combos = [(NO_SYSTEM, NO_SET)]
        elif scope == SCOPE_SYSTEM:
            combos = [(system, NO_SET) for system in systems]
        else:
            combos = [(system, set_spec) for system in systems for set_spec in sets]
        tasks.extend((identity, system, set_spec, n, options) for system, set_spec in combos for n in n_list)
    return tasks


def run_instance(task: SweepTask) -> VerificationReport | None:
    identity, system_name, set_spec, n, options = task
    handler = get_handler(identity)
    if handler is None:
        raise ValueError(f"Unsupported identity id: {identity}")
    A = None if system_name == NO_SYSTEM else get_system(system_name)
    S = None if set_spec == NO_SET else resolve_set(set_spec)
    try:
        report = handler(A, S, n, options)
    except (IdentityViolation, PrecisionExhausted) as exc:
        report = failed(
            identity,
            n,
            {"error": type(exc).__name__, "message": str(exc)},
            system=system_name,
            set_name=S.name if S is not None else NO_SET,
        )
    if report is not None and not report.passed:
        logger.warning("identity failed: %s", report.to_line())
    return report


def run_sweep(
    identity_ids: Sequence[str],
    systems: Sequence[str],
    sets: Sequence[str],
    n_values: Iterable[int],
    workers: int = 1,
    options: SweepOptions | None = None,
) -> list[VerificationReport]:
    tasks = build_tasks(identity_ids, systems, sets, n_values, options or SweepOptions())
    logger.info("sweep: %d task(s), identities=%s, workers=%d", len(tasks), ",".join(identity_ids), workers)
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_instance, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        results = [run_instance(task) for task in tasks]

    reports = sorted((r for r in results if r is not None), key=VerificationReport.sort_key)
    failures = sum(1 for r in reports if not r.passed)
    logger.info("sweep done: %d report(s), %d failure(s)", len(reports), failures)
    return reports


def recheck(report: VerificationReport, options: SweepOptions | None = None) -> VerificationReport:
    """Re-run the instance a report came from."""
    set_spec = report.set
    result = run_instance((report.identity, report.system, set_spec, report.n, options or SweepOptions()))
    if result is None:
        raise ValueError(f"identity {report.identity} does not apply at n = {report.n}")
    return result
