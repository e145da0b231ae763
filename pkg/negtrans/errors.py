"""Error types and their mapping onto command-line exit statuses."""

from typing import Iterable, Optional

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64


class NegtransError(Exception):
    """Base class for every error raised by the package."""

    exit_code = EXIT_USAGE


class FormulaSyntaxError(NegtransError):
    def __init__(self, message: str, line: int, column: int, text: str = ""):
        self.line = line
        self.column = column
        self.text = text
        super().__init__(f"{message} at line {line}, column {column}")


class ArityError(NegtransError):
    """A predicate or function symbol is used with two different arities."""


class UnboundVariableError(NegtransError):
    pass


class UnsupportedTermError(NegtransError):
    """Raised by Kripke forcing for terms it cannot interpret."""


class QuantifiedInputError(NegtransError):
    """A propositional decider was handed a formula with quantifiers."""


class _UnknownNameError(NegtransError):
    kind = "name"

    def __init__(self, name: str, valid: Iterable[str]):
        self.name = name
        self.valid = sorted(valid)
        super().__init__(
            f"unknown {self.kind} '{name}'; valid options: {', '.join(self.valid)}"
        )


class UnknownTranslationError(_UnknownNameError):
    kind = "translation"


class UnknownRuleSetError(_UnknownNameError):
    kind = "rule set"


class UnknownLogicError(_UnknownNameError):
    kind = "logic"


class UnknownCheckError(_UnknownNameError):
    kind = "check"


class RuleFormatError(NegtransError):
    def __init__(self, message: str, line_no: Optional[int] = None):
        self.line_no = line_no
        prefix = f"line {line_no}: " if line_no is not None else ""
        super().__init__(f"{prefix}{message}")


class InvalidRuleSetError(NegtransError):
    """Rules disagree on side or N, or two rules share a symbol."""


class NotARedexError(NegtransError):
    pass


class BudgetExceededError(NegtransError):
    exit_code = EXIT_UNKNOWN


class ConfigError(NegtransError):
    pass


def exit_code_for(error: BaseException) -> int:
    """Exit status for an exception escaping a command."""
    if isinstance(error, NegtransError):
        return error.exit_code
    return EXIT_USAGE
