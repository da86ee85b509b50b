"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations

from dataclasses import dataclass

REASON_TYPE_NOT_DIVISOR = "type-not-divisor"
REASON_CHAIN_BROKEN = "chain-broken"
REASON_NOT_POSITIVE = "type-not-positive"


class CycloError(Exception):
    pass


@dataclass(frozen=True)
class RegularityViolation:
    p: int
    a: int
    reason: str
    detail: str = ""

    def __str__(self) -> str:
        suffix = f": {self.detail}" if self.detail else ""
        return f"({self.p}, {self.a}) {self.reason}{suffix}"


class InvalidRegularSystem(CycloError, ValueError):
    def __init__(self, system_name: str, violation: RegularityViolation) -> None:
        super().__init__(f"system '{system_name}' is not regular at p^a = {violation.p}^{violation.a}: {violation}")
        self.system_name = system_name
        self.violation = violation


class SetExcludesOne(CycloError, ValueError):
    """mu_{A,S}(1) = 0, so mu_{A,S} has no inverse under A-convolution."""


class NotPrimitiveProduct(CycloError, ValueError):
    """n is not a product of A-primitive prime powers (mu_A(n) = 0)."""


class OutOfRange(CycloError, ValueError):
    pass


class IdentityViolation(CycloError, RuntimeError):
    """An exact identity failed; indicates a bug rather than bad input."""


class InexactDivision(IdentityViolation):
    def __init__(self, message: str, remainder: tuple[int, ...] = ()) -> None:
        super().__init__(message)
        self.remainder = remainder


class RouteMismatch(IdentityViolation):
    pass


class NonRationalResult(IdentityViolation):
    pass


class NonIntegerClassSum(IdentityViolation):
    pass


class InternalInconsistency(IdentityViolation):
    pass


class PrecisionExhausted(CycloError, RuntimeError):
    pass
