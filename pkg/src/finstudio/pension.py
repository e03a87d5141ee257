"""Pension award computation for a retiring government employee.

The award derives everything from the last basic pay and the years of
qualifying service:

    gross pension  = last basic pay x 7 x creditable service / 300
    commuted part  = gross x 35 / 300
    net pension    = gross - commuted part
    total gratuity = commuted part x 148.4628
    increases      = 15/15/20/15/10/10 % of net (AR2010..AR2015)
    medical        = 25 % of net
    total monthly  = net + all increases + medical

The factors shown are the shipped defaults; each comes from the rule-set.
Creditable service is capped at 30 years and anything under 10 years is
rejected outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date

from .display import fmt2
from .errors import InvalidInput, ServiceTooShort
from .rules import PensionRules, RuleSet

SERVICE_TOO_SHORT_MESSAGE = "Please Enter >= 10 Years qualifying Service"
SERVICE_TOO_SHORT_TITLE = "Incorrect value"
SUPERANNUATION_AGE_YEARS = 60


@dataclass(frozen=True)
class PensionInput:
    last_basic_pay: float
    qualifying_service: float
    # informational metadata; never read by a formula
    pensioner_name: str = ""
    date_of_birth: date | None = None
    date_of_appointment: date | None = None
    date_of_retirement: date | None = None
    bps: int | None = None


@dataclass(frozen=True)
class PensionAward:
    creditable_service: float
    gross_pension: float
    commuted_portion: float
    net_pension: float
    total_gratuity: float
    increases: tuple[tuple[str, float], ...]
    medical_allowance: float
    total_pension_per_month: float
    advisories: tuple[str, ...] = ()

    _MONEY = ("gross_pension", "commuted_portion", "net_pension", "total_gratuity",
              "medical_allowance", "total_pension_per_month")

    def to_dict(self) -> dict:
        out: dict = {"creditable_service": self.creditable_service}
        for name in self._MONEY:
            out[name] = getattr(self, name)
        out["increases"] = [{"label": label, "amount": amount}
                            for label, amount in self.increases]
        out["advisories"] = list(self.advisories)
        display = {"creditable_service": fmt2(self.creditable_service)}
        display.update({name: fmt2(getattr(self, name)) for name in self._MONEY})
        display["increases"] = [fmt2(amount) for _, amount in self.increases]
        out["display"] = display
        return out


def compute_pension(pension_input: PensionInput, ruleset: RuleSet) -> PensionAward:
    rules = ruleset.pension
    _check_input(pension_input, rules)
    creditable = min(pension_input.qualifying_service, rules.max_creditable_service)
    gross = (pension_input.last_basic_pay * rules.gross_factor_numerator * creditable
             / rules.gross_factor_denominator)
    commuted = gross * rules.commutation_numerator / rules.commutation_denominator
    net = gross - commuted
    gratuity = commuted * rules.gratuity_factor
    increases = tuple((label, net * fraction) for label, fraction in rules.increases)
    medical = net * rules.medical_allowance_fraction
    total = net + sum(amount for _, amount in increases) + medical
    return PensionAward(
        creditable_service=creditable,
        gross_pension=gross,
        commuted_portion=commuted,
        net_pension=net,
        total_gratuity=gratuity,
        increases=increases,
        medical_allowance=medical,
        total_pension_per_month=total,
        advisories=_advisories(pension_input),
    )


def _check_input(pension_input: PensionInput, rules: PensionRules) -> None:
    if pension_input.last_basic_pay < 0:
        raise InvalidInput("last basic pay must be non-negative", field="last_basic_pay")
    if pension_input.qualifying_service < 0:
        raise InvalidInput("qualifying service must be non-negative",
                           field="qualifying_service")
    if pension_input.qualifying_service < rules.min_qualifying_service:
        raise ServiceTooShort(SERVICE_TOO_SHORT_MESSAGE, title=SERVICE_TOO_SHORT_TITLE)
    born = pension_input.date_of_birth
    appointed = pension_input.date_of_appointment
    retired = pension_input.date_of_retirement
    if born and appointed and retired:
        if not born < appointed:
            raise InvalidInput("date of appointment must follow date of birth",
                               field="date_of_appointment")
        if not appointed < retired:
            raise InvalidInput("date of retirement must follow date of appointment",
                               field="date_of_retirement")


def _advisories(pension_input: PensionInput) -> tuple[str, ...]:
    born = pension_input.date_of_birth
    retired = pension_input.date_of_retirement
    if born is None or retired is None:
        return ()
    age = _full_years(born, retired)
    if age == SUPERANNUATION_AGE_YEARS:
        return ()
    return (f"Age at retirement is {age} years; the usual superannuation age is "
            f"{SUPERANNUATION_AGE_YEARS}",)


def _full_years(start: date, end: date) -> int:
    years = end.year - start.year
    if (end.month, end.day) < (start.month, start.day):
        years -= 1
    return years
