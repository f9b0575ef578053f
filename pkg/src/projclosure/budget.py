"""Wall-clock budget shared by the long-running loops."""

from __future__ import annotations

import contextlib
import contextvars
import time

_deadline: contextvars.ContextVar = contextvars.ContextVar("projclosure_deadline", default=None)


class BudgetExceeded(RuntimeError):
    pass


@contextlib.contextmanager
def engine_budget(seconds: float | None):
    if seconds is None:
        yield
        return
    token = _deadline.set(time.monotonic() + seconds)
    try:
        yield
    finally:
        _deadline.reset(token)


def check() -> None:
    d = _deadline.get()
    if d is not None and time.monotonic() > d:
        raise BudgetExceeded("engine time budget exceeded")
