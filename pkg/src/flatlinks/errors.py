"""Exception types shared across the package."""


class CodeSyntaxError(ValueError):
    """A code document contains a malformed token."""


class ValidationError(ValueError):
    """A structurally invalid Gauss code (label counts, sign mismatch, ...)."""


class IllegalMove(ValueError):
    """A move whose site no longer matches the code it is applied to."""


class NotASelfCrossing(ValueError):
    """Smoothing requested at a crossing whose passages lie on two components."""


class UnknownComponent(KeyError):
    """A component name that does not occur in the code."""


class IdentityInput(ValueError):
    """An operation that requires a nontrivial group element got the identity."""


class BudgetExhausted(RuntimeError):
    """A search ran out of budget; carries the partial outcome."""

    def __init__(self, message, outcome=None):
        super().__init__(message)
        self.outcome = outcome
