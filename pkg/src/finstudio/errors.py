"""Exception types shared by every calculator.

Each error carries a machine-readable ``code`` (the closed set exposed by
the HTTP API), the human-readable message, and optionally the offending
input field path.
"""

from __future__ import annotations


class FinstudioError(Exception):
    """Base class for calculator errors."""

    code = "error"

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.message = message
        self.field = field


class ParseError(FinstudioError):
    """A configuration or fixture document could not be parsed."""

    code = "parse_error"


class ValidationError(FinstudioError):
    """A rule-set violates one of its invariants.

    ``violations`` holds every violation in field-declaration order; the
    exception message names the first one.
    """

    code = "invalid_ruleset"

    def __init__(self, violations):
        self.violations = list(violations)
        first = self.violations[0]
        super().__init__(str(first), field=first.field)


class InvalidInput(FinstudioError):
    """An input value is outside the calculator's domain."""

    code = "invalid_input"


class ServiceTooShort(InvalidInput):
    """Qualifying service below the pensionable minimum."""

    code = "service_too_short"

    def __init__(self, message: str, field: str = "qualifying_service",
                 title: str = "Incorrect value"):
        super().__init__(message, field=field)
        self.title = title


class NotANumber(InvalidInput):
    """A numeric field does not parse as a number."""

    code = "not_a_number"

    def __init__(self, message: str, field: str, title: str):
        super().__init__(message, field=field)
        self.title = title


class EmptyInput(InvalidInput):
    """No data points were supplied."""

    code = "empty_input"


class NoCategories(InvalidInput):
    """A zakat declaration with no asset category filled in."""

    code = "no_categories"


class UnknownRuleset(FinstudioError):
    """The requested rule-set id is not loaded."""

    code = "unknown_ruleset"

    def __init__(self, ruleset_id: str):
        super().__init__(f"unknown rule-set id: {ruleset_id!r}", field="ruleset")
        self.ruleset_id = ruleset_id
