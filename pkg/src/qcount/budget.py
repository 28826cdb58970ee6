"""Enumeration caps shared by the enumeration oracles and the CLI.

The object cap defaults to 10**7 and can be overridden with the
``QCOUNT_BUDGET`` environment variable.
"""

import os

from .errors import BudgetExceeded

DEFAULT_ENUM_BUDGET = 10**7
DEFAULT_PERM_MAX_N = 14
ENV_VAR = "QCOUNT_BUDGET"


def enum_budget() -> int:
    raw = os.environ.get(ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_ENUM_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError(f"{ENV_VAR} must be nonnegative, got {value}")
    return value


def check_count(predicted: int, budget: int | None = None, what: str = "objects") -> None:
    cap = enum_budget() if budget is None else budget
    if predicted > cap:
        raise BudgetExceeded(f"{what}: {predicted} exceeds enumeration budget {cap}")


def check_perm_degree(n: int, max_n: int | None = None) -> None:
    cap = DEFAULT_PERM_MAX_N if max_n is None else max_n
    if n > cap:
        raise BudgetExceeded(f"permutation route limited to n <= {cap}, got n={n}")
