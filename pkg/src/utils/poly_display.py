"""Helpers for human-readable polynomial and factorization labels."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence


def _format_term(c: int, degree: int, variable: str) -> str:
    """Return the unsigned body of one term, e.g. ``3x^2``, ``x``, ``7``."""
    magnitude = abs(c)
    if degree == 0:
        return str(magnitude)
    power = variable if degree == 1 else f"{variable}^{degree}"
    return power if magnitude == 1 else f"{magnitude}{power}"


def format_polynomial(coeffs: Sequence[int], *, variable: str = "x") -> str:
    """Render ascending coefficients highest degree first.

    Examples:
    - ``(-1, 1, -1, 1)`` -> ``x^3 - x^2 + x - 1``
    - ``()`` -> ``0``
    - ``(1, 0, -2)`` -> ``-2x^2 + 1``
    """
    parts: list[str] = []
    for degree in range(len(coeffs) - 1, -1, -1):
        c = coeffs[degree]
        if c == 0:
            continue
        body = _format_term(c, degree, variable)
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts) if parts else "0"


def format_factorization(indices: Iterable[int], *, symbol: str = "Phi") -> str:
    """Render a multiset of classical cyclotomic indices, e.g. ``Phi_1^2 * Phi_4``."""
    counts = Counter(indices)
    if not counts:
        return "1"
    parts = []
    for index in sorted(counts):
        label = f"{symbol}_{index}"
        if counts[index] > 1:
            label += f"^{counts[index]}"
        parts.append(label)
    return " * ".join(parts)


def format_coefficients(coeffs: Sequence[int]) -> str:
    return "[" + ", ".join(str(c) for c in coeffs) + "]"
