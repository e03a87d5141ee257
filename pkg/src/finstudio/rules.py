"""Versioned rule-set configuration consumed by every engine.

A rule-set bundles all rates, brackets, factors, and thresholds into one
immutable value. Engines never mutate a rule-set, so instances are safe
to share across threads.

The on-disk format is a UTF-8 JSON document:

    {
      "id": "pk-fy2014-15",
      "currency": "PKR",
      "tax": {
        "brackets": [
          {"lower_bound": 0, "base_tax": 0, "marginal_rate": 0},
          ...
        ],
        "teacher_rebate_fraction": 0.40,
        "months_per_year": 12
      },
      "pension": {"gross_factor_numerator": 7, ...,
                  "increases": [["AR2010", 0.15], ...]},
      "zakat": {"gold_nisab_weight": 7.5, ...}
    }

``tax.brackets`` must be present; every other engine field falls back to
the defaults declared on the dataclasses below. ``pension.increases`` is
an array of ``[label, fraction]`` pairs. The package ships the default
document ``pk-fy2014-15.rules.json`` (also available at ``rules/`` in the
source tree); its bracket table is ordinary configuration data, not an
authoritative rate schedule.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Any

from .errors import ParseError, ValidationError

DEFAULT_RULESET_ID = "pk-fy2014-15"

DEFAULT_INCREASES = (
    ("AR2010", 0.15),
    ("AR2011", 0.15),
    ("AR2012", 0.20),
    ("AR2013", 0.15),
    ("AR2014", 0.10),
    ("AR2015", 0.10),
)

# Continuity slack at bracket boundaries, in currency units.
BRACKET_CONTINUITY_TOLERANCE = 0.01


@dataclass(frozen=True)
class TaxBracket:
    """One slab: ``base_tax`` owed at ``lower_bound``, plus ``marginal_rate`` above it."""

    lower_bound: float
    base_tax: float
    marginal_rate: float


@dataclass(frozen=True)
class TaxRules:
    brackets: tuple[TaxBracket, ...]
    teacher_rebate_fraction: float = 0.40
    months_per_year: int = 12


@dataclass(frozen=True)
class PensionRules:
    gross_factor_numerator: int = 7
    gross_factor_denominator: int = 300
    max_creditable_service: float = 30
    min_qualifying_service: float = 10
    commutation_numerator: int = 35
    commutation_denominator: int = 300
    gratuity_factor: float = 148.4628
    increases: tuple[tuple[str, float], ...] = DEFAULT_INCREASES
    medical_allowance_fraction: float = 0.25


@dataclass(frozen=True)
class ZakatRules:
    gold_nisab_weight: float = 7.5
    silver_nisab_weight: float = 52.5
    zakat_rate: float = 0.025


@dataclass(frozen=True)
class RuleSet:
    id: str
    currency: str
    tax: TaxRules
    pension: PensionRules
    zakat: ZakatRules


@dataclass(frozen=True)
class Violation:
    """One failed invariant: the field, the rule, and the offending value."""

    field: str
    rule: str
    value: Any

    def __str__(self) -> str:
        return f"{self.field}: {self.rule} (got {self.value!r})"


def validate_ruleset(ruleset: RuleSet) -> list[Violation]:
    """Every invariant violation in field-declaration order; empty when valid."""
    violations: list[Violation] = []
    if not ruleset.id:
        violations.append(Violation("id", "must be non-empty", ruleset.id))
    violations.extend(_validate_tax(ruleset.tax))
    violations.extend(_validate_pension(ruleset.pension))
    violations.extend(_validate_zakat(ruleset.zakat))
    return violations


def _validate_tax(tax: TaxRules) -> list[Violation]:
    out: list[Violation] = []
    if not tax.brackets:
        out.append(Violation("tax.brackets", "at least one bracket is required", tax.brackets))
    else:
        for i, bracket in enumerate(tax.brackets):
            where = f"tax.brackets[{i}]"
            if bracket.lower_bound < 0:
                out.append(Violation(f"{where}.lower_bound", "must be >= 0", bracket.lower_bound))
            if bracket.base_tax < 0:
                out.append(Violation(f"{where}.base_tax", "must be >= 0", bracket.base_tax))
            if not 0 <= bracket.marginal_rate <= 1:
                out.append(Violation(f"{where}.marginal_rate", "must be in [0, 1]",
                                     bracket.marginal_rate))
        if tax.brackets[0].lower_bound != 0:
            out.append(Violation("tax.brackets[0].lower_bound", "first bracket must start at 0",
                                 tax.brackets[0].lower_bound))
        for i in range(len(tax.brackets) - 1):
            lower, upper = tax.brackets[i], tax.brackets[i + 1]
            if upper.lower_bound <= lower.lower_bound:
                out.append(Violation(f"tax.brackets[{i + 1}].lower_bound",
                                     "lower bounds must be strictly ascending",
                                     upper.lower_bound))
                continue
            implied = lower.base_tax + lower.marginal_rate * (upper.lower_bound - lower.lower_bound)
            if abs(implied - upper.base_tax) > BRACKET_CONTINUITY_TOLERANCE:
                out.append(Violation(
                    f"tax.brackets[{i + 1}].base_tax",
                    f"tax must be continuous at {upper.lower_bound:g} (expected {implied:.2f})",
                    upper.base_tax))
    if not 0 <= tax.teacher_rebate_fraction <= 1:
        out.append(Violation("tax.teacher_rebate_fraction", "must be in [0, 1]",
                             tax.teacher_rebate_fraction))
    if tax.months_per_year < 1:
        out.append(Violation("tax.months_per_year", "must be a positive integer",
                             tax.months_per_year))
    return out


def _validate_pension(pension: PensionRules) -> list[Violation]:
    out: list[Violation] = []
    if pension.gross_factor_denominator <= 0:
        out.append(Violation("pension.gross_factor_denominator", "must be > 0",
                             pension.gross_factor_denominator))
    if pension.max_creditable_service < pension.min_qualifying_service:
        out.append(Violation("pension.max_creditable_service",
                             "must be >= min_qualifying_service",
                             pension.max_creditable_service))
    if pension.min_qualifying_service <= 0:
        out.append(Violation("pension.min_qualifying_service", "must be > 0",
                             pension.min_qualifying_service))
    if pension.commutation_denominator <= 0:
        out.append(Violation("pension.commutation_denominator", "must be > 0",
                             pension.commutation_denominator))
    if pension.gratuity_factor <= 0:
        out.append(Violation("pension.gratuity_factor", "must be > 0",
                             pension.gratuity_factor))
    for i, (label, fraction) in enumerate(pension.increases):
        if not 0 <= fraction <= 1:
            out.append(Violation(f"pension.increases[{i}].fraction", "must be in [0, 1]",
                                 fraction))
    if not 0 <= pension.medical_allowance_fraction <= 1:
        out.append(Violation("pension.medical_allowance_fraction", "must be in [0, 1]",
                             pension.medical_allowance_fraction))
    return out


def _validate_zakat(zakat: ZakatRules) -> list[Violation]:
    out: list[Violation] = []
    if zakat.gold_nisab_weight <= 0:
        out.append(Violation("zakat.gold_nisab_weight", "must be > 0", zakat.gold_nisab_weight))
    if zakat.silver_nisab_weight <= 0:
        out.append(Violation("zakat.silver_nisab_weight", "must be > 0",
                             zakat.silver_nisab_weight))
    if not 0 < zakat.zakat_rate < 1:
        out.append(Violation("zakat.zakat_rate", "must be in (0, 1)", zakat.zakat_rate))
    return out


def load_ruleset(document: str) -> RuleSet:
    """Parse and validate one rule-set document.

    Raises ParseError for malformed JSON or a structurally wrong document,
    ValidationError naming the first violated invariant otherwise.
    """
    try:
        raw = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ParseError("top level must be a JSON object")
    ruleset = RuleSet(
        id=_as_str(raw.get("id", ""), "id"),
        currency=_as_str(raw.get("currency", ""), "currency"),
        tax=_build_tax(_section(raw, "tax")),
        pension=_build_pension(_section(raw, "pension")),
        zakat=_build_zakat(_section(raw, "zakat")),
    )
    violations = validate_ruleset(ruleset)
    if violations:
        raise ValidationError(violations)
    return ruleset


def serialize(ruleset: RuleSet) -> str:
    """JSON document for ``ruleset``; inverse of :func:`load_ruleset`."""
    doc = {
        "id": ruleset.id,
        "currency": ruleset.currency,
        "tax": {
            "brackets": [
                {"lower_bound": b.lower_bound, "base_tax": b.base_tax,
                 "marginal_rate": b.marginal_rate}
                for b in ruleset.tax.brackets
            ],
            "teacher_rebate_fraction": ruleset.tax.teacher_rebate_fraction,
            "months_per_year": ruleset.tax.months_per_year,
        },
        "pension": {
            "gross_factor_numerator": ruleset.pension.gross_factor_numerator,
            "gross_factor_denominator": ruleset.pension.gross_factor_denominator,
            "max_creditable_service": ruleset.pension.max_creditable_service,
            "min_qualifying_service": ruleset.pension.min_qualifying_service,
            "commutation_numerator": ruleset.pension.commutation_numerator,
            "commutation_denominator": ruleset.pension.commutation_denominator,
            "gratuity_factor": ruleset.pension.gratuity_factor,
            "increases": [[label, fraction] for label, fraction in ruleset.pension.increases],
            "medical_allowance_fraction": ruleset.pension.medical_allowance_fraction,
        },
        "zakat": {
            "gold_nisab_weight": ruleset.zakat.gold_nisab_weight,
            "silver_nisab_weight": ruleset.zakat.silver_nisab_weight,
            "zakat_rate": ruleset.zakat.zakat_rate,
        },
    }
    return json.dumps(doc, indent=2) + "\n"


@lru_cache(maxsize=1)
def default_ruleset() -> RuleSet:
    """The rule-set shipped with the package (id ``pk-fy2014-15``)."""
    return load_ruleset(default_ruleset_text())


def default_ruleset_text() -> str:
    return (resources.files(__package__) / "data" / f"{DEFAULT_RULESET_ID}.rules.json"
            ).read_text("utf-8")


def load_ruleset_file(path: str | Path) -> RuleSet:
    return load_ruleset(Path(path).read_text("utf-8"))


def load_rules_dir(path: str | Path) -> list[RuleSet]:
    """Load every ``*.rules.json`` document in ``path``, sorted by filename."""
    directory = Path(path)
    if not directory.is_dir():
        raise FileNotFoundError(f"rules directory not found: {directory}")
    rulesets: list[RuleSet] = []
    seen: dict[str, str] = {}
    for file in sorted(directory.glob("*.rules.json")):
        ruleset = load_ruleset(file.read_text("utf-8"))
        if ruleset.id in seen:
            raise ParseError(
                f"duplicate rule-set id {ruleset.id!r} in {file.name} and {seen[ruleset.id]}")
        seen[ruleset.id] = file.name
        rulesets.append(ruleset)
    if not rulesets:
        raise ParseError(f"no *.rules.json files in {directory}")
    return rulesets


def _section(raw: dict, key: str) -> dict:
    value = raw.get(key, {})
    if not isinstance(value, dict):
        raise ParseError(f"{key} must be an object")
    return value


def _build_tax(section: dict) -> TaxRules:
    raw_brackets = section.get("brackets", [])
    if not isinstance(raw_brackets, list):
        raise ParseError("tax.brackets must be an array")
    brackets = []
    for i, item in enumerate(raw_brackets):
        where = f"tax.brackets[{i}]"
        if not isinstance(item, dict):
            raise ParseError(f"{where} must be an object")
        brackets.append(TaxBracket(
            lower_bound=_require_number(item, "lower_bound", where),
            base_tax=_require_number(item, "base_tax", where),
            marginal_rate=_require_number(item, "marginal_rate", where),
        ))
    return TaxRules(
        brackets=tuple(brackets),
        teacher_rebate_fraction=_as_float(
            section.get("teacher_rebate_fraction", TaxRules.teacher_rebate_fraction),
            "tax.teacher_rebate_fraction"),
        months_per_year=_as_int(
            section.get("months_per_year", TaxRules.months_per_year),
            "tax.months_per_year"),
    )


def _build_pension(section: dict) -> PensionRules:
    raw_increases = section.get("increases")
    if raw_increases is None:
        increases = DEFAULT_INCREASES
    else:
        if not isinstance(raw_increases, list):
            raise ParseError("pension.increases must be an array of [label, fraction] pairs")
        pairs = []
        for i, item in enumerate(raw_increases):
            where = f"pension.increases[{i}]"
            if not isinstance(item, list) or len(item) != 2:
                raise ParseError(f"{where} must be a [label, fraction] pair")
            pairs.append((_as_str(item[0], f"{where}[0]"), _as_float(item[1], f"{where}[1]")))
        increases = tuple(pairs)

    def field(name: str, default, reader):
        return reader(section.get(name, default), f"pension.{name}")

    return PensionRules(
        gross_factor_numerator=field("gross_factor_numerator",
                                     PensionRules.gross_factor_numerator, _as_int),
        gross_factor_denominator=field("gross_factor_denominator",
                                       PensionRules.gross_factor_denominator, _as_int),
        max_creditable_service=field("max_creditable_service",
                                     PensionRules.max_creditable_service, _as_float),
        min_qualifying_service=field("min_qualifying_service",
                                     PensionRules.min_qualifying_service, _as_float),
        commutation_numerator=field("commutation_numerator",
                                    PensionRules.commutation_numerator, _as_int),
        commutation_denominator=field("commutation_denominator",
                                      PensionRules.commutation_denominator, _as_int),
        gratuity_factor=field("gratuity_factor", PensionRules.gratuity_factor, _as_float),
        increases=increases,
        medical_allowance_fraction=field("medical_allowance_fraction",
                                         PensionRules.medical_allowance_fraction, _as_float),
    )


def _build_zakat(section: dict) -> ZakatRules:
    return ZakatRules(
        gold_nisab_weight=_as_float(
            section.get("gold_nisab_weight", ZakatRules.gold_nisab_weight),
            "zakat.gold_nisab_weight"),
        silver_nisab_weight=_as_float(
            section.get("silver_nisab_weight", ZakatRules.silver_nisab_weight),
            "zakat.silver_nisab_weight"),
        zakat_rate=_as_float(
            section.get("zakat_rate", ZakatRules.zakat_rate), "zakat.zakat_rate"),
    )


def _require_number(obj: dict, key: str, where: str) -> float:
    if key not in obj:
        raise ParseError(f"{where}.{key} is missing")
    return _as_float(obj[key], f"{where}.{key}")


def _as_float(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"{where} must be a number")
    return float(value)


def _as_int(value, where: str) -> int:
    if isinstance(value, bool):
        raise ParseError(f"{where} must be an integer")
    if isinstance(value, int):
        return value
    if isinstance(value, float) and value.is_integer():
        return int(value)
    raise ParseError(f"{where} must be an integer")


def _as_str(value, where: str) -> str:
    if not isinstance(value, str):
        raise ParseError(f"{where} must be a string")
    return value
