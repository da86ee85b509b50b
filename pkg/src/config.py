"""Runtime settings read from CYCLO_* environment variables."""

from __future__ import annotations

import os
from dataclasses import dataclass

from dotenv import load_dotenv

from src.utils.env_vars import get_int_env, get_positive_int_env, get_str_env

DEFAULT_MAX_N = 500
DEFAULT_VERIFY_MAX_N = 120
DEFAULT_ORACLE_MAX_N = 200
DEFAULT_PRECISION_BITS = 128
DEFAULT_CACHE_SIZE = 8192
DEFAULT_WORKERS = 1
DEFAULT_LOG_LEVEL = "INFO"


@dataclass(frozen=True)
class Settings:
    max_n: int
    verify_max_n: int
    oracle_max_n: int
    precision_bits: int
    cache_size: int
    workers: int
    log_level: str


def load_env(env_name: str | None = None) -> None:
    """Load `.env` and, when given, `.env.<env_name>` on top of it."""
    if os.path.exists(".env"):
        load_dotenv(".env")
    if env_name is None:
        return
    env_file = f".env.{env_name}"
    if not os.path.exists(env_file):
        raise FileNotFoundError(f"{env_file} not found")
    load_dotenv(env_file, override=True)


def load_settings() -> Settings:
    precision_bits = get_positive_int_env("CYCLO_PRECISION_BITS", DEFAULT_PRECISION_BITS)
    if precision_bits < 64:
        raise ValueError(f"CYCLO_PRECISION_BITS must be >= 64, got {precision_bits}")
    max_n = get_positive_int_env("CYCLO_MAX_N", DEFAULT_MAX_N)
    # an explicit CYCLO_MAX_N also moves the verify cap unless CYCLO_VERIFY_MAX_N is set
    verify_default = max_n if get_int_env("CYCLO_MAX_N") is not None else DEFAULT_VERIFY_MAX_N
    return Settings(
        max_n=max_n,
        verify_max_n=get_positive_int_env("CYCLO_VERIFY_MAX_N", verify_default),
        oracle_max_n=get_positive_int_env("CYCLO_ORACLE_MAX_N", DEFAULT_ORACLE_MAX_N),
        precision_bits=precision_bits,
        cache_size=get_positive_int_env("CYCLO_CACHE_SIZE", DEFAULT_CACHE_SIZE),
        workers=get_positive_int_env("CYCLO_WORKERS", DEFAULT_WORKERS),
        log_level=(get_str_env("CYCLO_LOG_LEVEL", DEFAULT_LOG_LEVEL)).upper(),
    )


# Memo caches are sized once at import time.
CACHE_SIZE = get_positive_int_env("CYCLO_CACHE_SIZE", DEFAULT_CACHE_SIZE)
