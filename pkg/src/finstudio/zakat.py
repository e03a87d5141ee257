"""Zakat assessment over gold, silver, cash, business, and property.

Every category is gated by a nisab threshold before it counts toward the
total: gold and silver by weight (rule-set constants, inclusive ">="),
the money categories by a threshold amount supplied with the declaration.
A category below its gate contributes nothing and produces a notice with
its canonical dialog text. Zakat due is the rate (2.5 % by default) times
the sum of counted categories.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .display import fmt2
from .errors import InvalidInput, NoCategories
from .rules import RuleSet

CATEGORIES = ("gold", "silver", "cash", "business", "property")

# Canonical notice strings; fixed verbatim (including the "Bussiness"
# spelling) so UIs and tests can match them bit-exact.
NOTICES = {
    "gold": "The total weight & Price of Gold is less than nisab for zakat deduction",
    "silver": "The total weight & Price of Silver is less than nisab for zakat deduction",
    "cash": "The total cash is less than nisab for zakat deduction",
    "business": "The total Bussiness is less than nisab for zakat deduction",
    "property": "The total Property is less than nisab for zakat deduction",
}

NOTICE_TITLE = "wrong Entery"


@dataclass(frozen=True)
class MetalHolding:
    """Gold or silver: weight in tola plus market price per tola."""

    weight: float = 0.0
    price_per_tola: float = 0.0


@dataclass(frozen=True)
class CashHolding:
    """Five cash line items plus the declarer's nisab threshold amount.

    Line items keep their short form-field names: cash in hand and at
    bank (chb), balances (bas), savings (sss), money you hold or lent
    (myhl), other cash and money (ocm). The long readings are
    best-effort expansions of the abbreviations.
    """

    chb: float = 0.0
    bas: float = 0.0
    sss: float = 0.0
    myhl: float = 0.0
    ocm: float = 0.0
    nisab_amount: float = 0.0

    _ITEMS = ("chb", "bas", "sss", "myhl", "ocm")

    @property
    def total(self) -> float:
        return math.fsum(getattr(self, name) for name in self._ITEMS)


@dataclass(frozen=True)
class BusinessHolding:
    """Four business line items plus the nisab threshold amount.

    Short names as on the form: business income (bi), profit from
    investments (pfi), business stock (bs), other funds in business
    (ofb); the long readings are best-effort expansions.
    """

    bi: float = 0.0
    pfi: float = 0.0
    bs: float = 0.0
    ofb: float = 0.0
    nisab_amount: float = 0.0

    _ITEMS = ("bi", "pfi", "bs", "ofb")

    @property
    def total(self) -> float:
        return math.fsum(getattr(self, name) for name in self._ITEMS)


@dataclass(frozen=True)
class PropertyHolding:
    net_property: float = 0.0
    other_property: float = 0.0
    nisab_amount: float = 0.0

    _ITEMS = ("net_property", "other_property")

    @property
    def total(self) -> float:
        return math.fsum((self.net_property, self.other_property))


@dataclass(frozen=True)
class ZakatDeclaration:
    gold: MetalHolding | None = None
    silver: MetalHolding | None = None
    cash: CashHolding | None = None
    business: BusinessHolding | None = None
    property: PropertyHolding | None = None


@dataclass(frozen=True)
class ZakatAssessment:
    counted: Mapping[str, float]
    notices: tuple[tuple[str, str], ...]
    total_assets: float
    zakat_due: float

    def to_dict(self) -> dict:
        return {
            "counted": dict(self.counted),
            "notices": [{"category": category, "message": message}
                        for category, message in self.notices],
            "total_assets": self.total_assets,
            "zakat_due": self.zakat_due,
            "display": {
                "counted": {name: fmt2(value) for name, value in self.counted.items()},
                "total_assets": fmt2(self.total_assets),
                "zakat_due": fmt2(self.zakat_due),
            },
        }


def assess_zakat(declaration: ZakatDeclaration, ruleset: RuleSet) -> ZakatAssessment:
    """Count each provided category against its nisab gate and levy the rate.

    Absent categories contribute zero with no notice; provided categories
    below their gate contribute zero with exactly one notice.
    """
    _check_declaration(declaration)
    rules = ruleset.zakat
    counted = {name: 0.0 for name in CATEGORIES}
    notices: list[tuple[str, str]] = []

    def gate(name: str, value: float, passes: bool) -> None:
        if passes:
            counted[name] = value
        else:
            notices.append((name, NOTICES[name]))

    if declaration.gold is not None:
        gold = declaration.gold
        gate("gold", gold.weight * gold.price_per_tola,
             gold.weight >= rules.gold_nisab_weight)
    if declaration.silver is not None:
        silver = declaration.silver
        gate("silver", silver.weight * silver.price_per_tola,
             silver.weight >= rules.silver_nisab_weight)
    if declaration.cash is not None:
        gate("cash", declaration.cash.total,
             declaration.cash.total >= declaration.cash.nisab_amount)
    if declaration.business is not None:
        gate("business", declaration.business.total,
             declaration.business.total >= declaration.business.nisab_amount)
    if declaration.property is not None:
        gate("property", declaration.property.total,
             declaration.property.total >= declaration.property.nisab_amount)

    total_assets = math.fsum(counted.values())
    return ZakatAssessment(
        counted=counted,
        notices=tuple(notices),
        total_assets=total_assets,
        zakat_due=total_assets * rules.zakat_rate,
    )


def _check_declaration(declaration: ZakatDeclaration) -> None:
    if all(getattr(declaration, name) is None for name in CATEGORIES):
        raise NoCategories("provide at least one asset category")
    for name in ("gold", "silver"):
        metal = getattr(declaration, name)
        if metal is None:
            continue
        if metal.weight < 0:
            raise InvalidInput("weight must be non-negative", field=f"{name}.weight")
        if metal.price_per_tola < 0:
            raise InvalidInput("price per tola must be non-negative",
                               field=f"{name}.price_per_tola")
    for name in ("cash", "business", "property"):
        holding = getattr(declaration, name)
        if holding is None:
            continue
        for item in (*holding._ITEMS, "nisab_amount"):
            if getattr(holding, item) < 0:
                raise InvalidInput(f"{item} must be non-negative", field=f"{name}.{item}")
