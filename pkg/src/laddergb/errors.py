"""Typed errors shared across modules."""


class LadderError(ValueError):
    """Invalid ladder/instance data; maps to CLI exit code 2."""


class PreconditionError(ValueError):
    """An operation's precondition failed; reported with a reason."""


class BudgetExceeded(RuntimeError):
    """A configured resource budget ran out; maps to CLI exit code 3."""

    def __init__(self, what: str, limit: int):
        super().__init__("budget exhausted: %s (limit %d)" % (what, limit))
        self.what = what
        self.limit = limit
