"""Exception hierarchy shared by the ledger, transfer engine, vault, and harness."""


class ColorFloatError(Exception):
    """Base class for every error raised by this package."""


class InsufficientBalanceError(ColorFloatError):
    """A debit, transfer, burn, or bridge asked for more than the wallet holds."""


class LedgerUnderflowError(ColorFloatError):
    """A burn would push a color's mint below its wrapped float balance."""


class FloatInvariantError(ColorFloatError):
    """A wrap would push a color's float balance above its mint."""


class EmptyFloatError(ColorFloatError):
    """A color draw was requested while no color has a nonzero float balance."""


class InsufficientFloatError(ColorFloatError):
    """A defloat or unwrap asked for more float than is available."""


class UndefinedAttributionError(ColorFloatError):
    """Attribution is requested while total circulation is zero."""


class ScenarioError(ColorFloatError):
    """Base class for scenario text problems."""


class ScenarioParseError(ScenarioError):
    """Malformed scenario line; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ScenarioSemanticError(ScenarioError):
    """Well-formed action that references something never introduced; carries the action index."""

    def __init__(self, index: int, message: str):
        super().__init__(f"action {index}: {message}")
        self.index = index


class InvariantViolation(ColorFloatError):
    """A cross-cutting system invariant failed during a verified run."""
