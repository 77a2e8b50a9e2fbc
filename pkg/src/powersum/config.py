from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_MAX_ORDER = 10_000
ENV_MAX_ORDER = "POWERSUM_MAX_ORDER_CAP"


@dataclass(frozen=True)
class Settings:
    max_order_cap: int = DEFAULT_MAX_ORDER

    @classmethod
    def from_env(cls, environ=None) -> "Settings":
        environ = os.environ if environ is None else environ
        raw = environ.get(ENV_MAX_ORDER)
        if raw is None or raw == "":
            return cls()
        return cls(max_order_cap=int(raw))
