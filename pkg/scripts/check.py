"""Import, definition and route-agreement smoke check.

Usage:
    uv run python scripts/check.py                              # import every src/ module, then check definitions and routes
    uv run python scripts/check.py src.characters src.cli       # import only the given modules
    uv run python scripts/check.py --max-n 60                   # widen the route smoke test
"""

import importlib
import pkgutil

import typer

app = typer.Typer(help="Validate that modules import and that every construction route agrees.")


def discover_modules(package_name: str = "src") -> list[str]:
    """Walk the src package tree and return all importable module paths."""
    package = importlib.import_module(package_name)
    modules = [package_name]
    if hasattr(package, "__path__"):
        for info in pkgutil.walk_packages(package.__path__, prefix=f"{package_name}."):
            modules.append(info.name)
    return sorted(modules)


def check_module(module: str) -> bool:
    try:
        importlib.import_module(module)
        typer.echo(f"  OK    {module}")
        return True
    except Exception as e:
        typer.echo(f"  FAIL  {module}: {e}")
        return False


def check_routes(max_n: int) -> tuple[int, int]:
    """Build Phi_{A,S,n} through every route for the built-in systems and sets; returns (passed, failed)."""
    from src.divisor_sets import BUILTIN_SETS
    from src.polynomials.generalized import phi_AS_routes
    from src.regular_systems import BUILTIN_SYSTEMS

    passed = failed = 0
    for A in BUILTIN_SYSTEMS.values():
        for S in BUILTIN_SETS.values():
            mismatches = [n for n in range(1, max_n + 1) if len(set(phi_AS_routes(A, S, n).values())) != 1]
            if mismatches:
                failed += 1
                typer.echo(f"  FAIL  routes A={A.name} S={S.name}: disagree at n={mismatches[:5]}")
            else:
                passed += 1
                typer.echo(f"  OK    routes A={A.name} S={S.name} n<={max_n}")
    return passed, failed



def check_definitions(max_n: int) -> tuple[int, int]:
    """Regularity of the built-in systems and the multiplicativity claims of the built-in sets up to max_n."""
    from src.divisor_sets import BUILTIN_SETS, validate_set
    from src.regular_systems import BUILTIN_SYSTEMS, validate_system

    passed = failed = 0
    problems = [(f"system {A.name}", validate_system(A, max_n)) for A in BUILTIN_SYSTEMS.values()]
    problems += [(f"set {S.name}", validate_set(S, max_n)) for S in BUILTIN_SETS.values()]
    for label, problem in problems:
        if problem is None:
            passed += 1
            typer.echo(f"  OK    {label} n<={max_n}")
        else:
            failed += 1
            typer.echo(f"  FAIL  {label}: {problem}")
    return passed, failed

@app.command()
def main(
    modules: list[str] = typer.Argument(
        default=None,
        help="Module paths to import (e.g. src.characters). Omit to import all src/ modules and run the route check.",
    ),
    max_n: int = typer.Option(30, "--max-n", help="Largest n for the route smoke test."),
) -> None:
    targets = modules if modules else discover_modules()

    passed = 0
    failed = 0
    for mod in targets:
        if check_module(mod):
            passed += 1
        else:
            failed += 1

    if not modules and not failed:
        for check in (check_definitions, check_routes):
            check_passed, check_failed = check(max_n)
            passed += check_passed
            failed += check_failed

    typer.echo("")
    typer.echo(f"Results: {passed} passed, {failed} failed out of {passed + failed} checks")

    if failed:
        raise SystemExit(1)


if __name__ == "__main__":
    app()
