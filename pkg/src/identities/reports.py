"""Verification report models."""

from __future__ import annotations

from pydantic import BaseModel, Field, model_validator

STATUS_PASS = "pass"
STATUS_FAIL = "fail"

# Placeholders for identities that do not depend on A or S.
NO_SYSTEM = "-"
NO_SET = "-"


class Counterexample(BaseModel):
    n: int
    details: dict[str, str] = Field(default_factory=dict)


class VerificationReport(BaseModel):
    identity: str = Field(..., min_length=1)
    system: str = NO_SYSTEM
    set: str = NO_SET
    n: int = Field(..., ge=1)
    params: dict[str, str] = Field(default_factory=dict)
    status: str = STATUS_PASS
    counterexample: Counterexample | None = None

    @model_validator(mode="after")
    def _fail_carries_counterexample(self) -> VerificationReport:
        if self.status not in (STATUS_PASS, STATUS_FAIL):
            raise ValueError(f"status must be '{STATUS_PASS}' or '{STATUS_FAIL}', got '{self.status}'")
        if self.status == STATUS_FAIL and self.counterexample is None:
            raise ValueError("a failing report must carry a counterexample")
        return self

    @property
    def passed(self) -> bool:
        return self.status == STATUS_PASS

    def sort_key(self) -> tuple[str, str, str, int]:
        return (self.identity, self.system, self.set, self.n)

    def to_line(self) -> str:
        """Stable one-line text rendering."""
        line = f"{self.status.upper():4} {self.identity} system={self.system} set={self.set} n={self.n}"
        for key in sorted(self.params):
            line += f" {key}={self.params[key]}"
        if self.counterexample is not None:
            details = "; ".join(f"{k}: {v}" for k, v in sorted(self.counterexample.details.items()))
            line += f" :: {details}"
        return line


def passed(identity: str, n: int, *, system: str = NO_SYSTEM, set_name: str = NO_SET, **params: object) -> VerificationReport:
    return VerificationReport(
        identity=identity,
        system=system,
        set=set_name,
        n=n,
        params={k: str(v) for k, v in params.items()},
    )


def failed(
    identity: str,
    n: int,
    details: dict[str, object],
    *,
    system: str = NO_SYSTEM,
    set_name: str = NO_SET,
    **params: object,
) -> VerificationReport:
    return VerificationReport(
        identity=identity,
        system=system,
        set=set_name,
        n=n,
        params={k: str(v) for k, v in params.items()},
        status=STATUS_FAIL,
        counterexample=Counterexample(n=n, details={k: str(v) for k, v in details.items()}),
    )
