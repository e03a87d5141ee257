"""Loan payment amounts from principal, annual rate, and period count.

Simple interest, taken literally: one year of interest is amount x
rate / 100; the monthly figure is that twelfth times the period count,
the yearly figure the full amount times the period count. No
amortization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .display import fmt2
from .errors import InvalidInput, NotANumber

NOT_A_NUMBER_MESSAGES = {
    "amount": "Enter a number for Loan Amount",
    "annual_rate_percent": "Enter a number for rate of interest",
    "periods": "Enter a number for number of months/years",
}

NOT_A_NUMBER_TITLES = {
    "amount": "Loan Amount Entry error",
    "annual_rate_percent": "Rate of interest Entry error",
    "periods": "Number of months/years Entry error",
}


@dataclass(frozen=True)
class LoanInput:
    amount: float
    annual_rate_percent: float
    periods: float

    @classmethod
    def from_raw(cls, amount, annual_rate_percent, periods) -> "LoanInput":
        """Coerce raw (possibly string) values, with a per-field dialog on failure."""
        return cls(
            amount=_as_number("amount", amount),
            annual_rate_percent=_as_number("annual_rate_percent", annual_rate_percent),
            periods=_as_number("periods", periods),
        )


@dataclass(frozen=True)
class LoanSchedule:
    monthly_payment: float
    yearly_payment: float

    def to_dict(self) -> dict:
        return {
            "monthly_payment": self.monthly_payment,
            "yearly_payment": self.yearly_payment,
            "display": {
                "monthly_payment": fmt2(self.monthly_payment),
                "yearly_payment": fmt2(self.yearly_payment),
            },
        }


def compute_loan(loan_input: LoanInput) -> LoanSchedule:
    """monthly = amount x rate% / 12 x periods; yearly = amount x rate% x periods."""
    for name in ("amount", "annual_rate_percent", "periods"):
        if getattr(loan_input, name) < 0:
            raise InvalidInput(f"{name} must be non-negative", field=name)
    yearly_interest = loan_input.amount * loan_input.annual_rate_percent / 100
    return LoanSchedule(
        monthly_payment=yearly_interest / 12 * loan_input.periods,
        yearly_payment=yearly_interest * loan_input.periods,
    )


def _as_number(name: str, raw) -> float:
    failure = NotANumber(NOT_A_NUMBER_MESSAGES[name], field=name,
                         title=NOT_A_NUMBER_TITLES[name])
    if isinstance(raw, bool) or raw is None:
        raise failure
    try:
        value = float(raw)
    except (TypeError, ValueError):
        raise failure from None
    if math.isnan(value) or math.isinf(value):
        raise failure
    return value
