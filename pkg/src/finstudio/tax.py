"""Income tax assessment for salaried profiles.

Annual tax starts from a progressive bracket schedule, is reduced by the
teacher rebate when it applies, and then by withholding already paid
through utility channels. The rebate is applied before the credits are
subtracted, and the payable amount is never clamped: credits larger than
the liability leave a negative payable with ``overpaid`` set.
"""

from __future__ import annotations

import math
import re
from bisect import bisect_right
from dataclasses import dataclass
from datetime import date

from .display import fmt2
from .errors import InvalidInput
from .rules import RuleSet, TaxRules

_CNIC = re.compile(r"[0-9]{13}")

_PAID_FIELDS = ("electricity", "telephone", "mobile", "others")


@dataclass(frozen=True)
class AlreadyPaidTaxes:
    """Withholding credits already paid through utility channels."""

    electricity: float = 0.0
    telephone: float = 0.0
    mobile: float = 0.0
    others: float = 0.0

    @property
    def total(self) -> float:
        # fsum keeps the total independent of component ordering
        return math.fsum(getattr(self, name) for name in _PAID_FIELDS)


@dataclass(frozen=True)
class TaxProfile:
    monthly_income: float
    is_teacher: bool = False
    already_paid: AlreadyPaidTaxes | None = None
    # informational metadata, echoed but never used in a formula
    name: str = ""
    cnic: str = ""
    ntn: str = ""
    designation: str = ""
    posting_city: str = ""
    employer_ntn: str = ""
    tax_year: str = ""
    assessment_date: date | None = None


@dataclass(frozen=True)
class TaxAssessment:
    annual_salary: float
    take_home_monthly: float
    gross_annual_tax: float
    teacher_exemption: float
    net_tax_after_exemption: float
    total_already_paid: float
    annual_tax_payable: float
    overpaid: bool

    _MONEY = ("annual_salary", "take_home_monthly", "gross_annual_tax",
              "teacher_exemption", "net_tax_after_exemption",
              "total_already_paid", "annual_tax_payable")

    def to_dict(self) -> dict:
        out: dict = {name: getattr(self, name) for name in self._MONEY}
        out["overpaid"] = self.overpaid
        out["display"] = {name: fmt2(getattr(self, name)) for name in self._MONEY}
        return out


def slab_tax(annual_income: float, rules: TaxRules) -> float:
    """Tax owed on ``annual_income`` under a progressive bracket schedule.

    Picks the highest bracket whose lower bound does not exceed the
    income and charges its base tax plus its marginal rate on the excess.
    """
    if annual_income < 0:
        raise InvalidInput("annual income must be non-negative", field="annual_income")
    bounds = [b.lower_bound for b in rules.brackets]
    bracket = rules.brackets[bisect_right(bounds, annual_income) - 1]
    return bracket.base_tax + bracket.marginal_rate * (annual_income - bracket.lower_bound)


def assess_tax(profile: TaxProfile, ruleset: RuleSet) -> TaxAssessment:
    """Full assessment: annualize, slab tax, teacher rebate, paid credits."""
    _check_profile(profile)
    rules = ruleset.tax
    annual_salary = profile.monthly_income * rules.months_per_year
    gross = slab_tax(annual_salary, rules)
    exemption = gross * rules.teacher_rebate_fraction if profile.is_teacher else 0.0
    net = gross - exemption
    paid = profile.already_paid.total if profile.already_paid is not None else 0.0
    payable = net - paid
    return TaxAssessment(
        annual_salary=annual_salary,
        take_home_monthly=profile.monthly_income,  # reported as entered, tax not deducted
        gross_annual_tax=gross,
        teacher_exemption=exemption,
        net_tax_after_exemption=net,
        total_already_paid=paid,
        annual_tax_payable=payable,
        overpaid=payable < 0,
    )


def _check_profile(profile: TaxProfile) -> None:
    if profile.monthly_income < 0:
        raise InvalidInput("monthly income must be non-negative", field="monthly_income")
    if profile.cnic and not _CNIC.fullmatch(profile.cnic):
        raise InvalidInput("CNIC must be exactly 13 digits", field="cnic")
    if profile.already_paid is not None:
        for name in _PAID_FIELDS:
            if getattr(profile.already_paid, name) < 0:
                raise InvalidInput(f"{name} credit must be non-negative",
                                   field=f"already_paid.{name}")
