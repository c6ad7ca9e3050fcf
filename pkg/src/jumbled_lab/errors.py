"""Exception hierarchy shared by every module."""


class JumbledLabError(Exception):
    pass


class UsageError(JumbledLabError, ValueError):
    """Caller passed arguments outside an operation's contract."""


class RangeError(JumbledLabError, IndexError):
    """A 1-based position range falls outside the text."""


class GuardError(JumbledLabError):
    """A construction or index would exceed its configured size cap."""


class RetryBudgetExhausted(JumbledLabError):
    pass


class VerificationError(JumbledLabError):
    """A construction check failed; carries the check name and a counterexample."""

    def __init__(self, check, message, counterexample=None):
        super().__init__(f"{check}: {message}")
        self.check = check
        self.counterexample = counterexample
