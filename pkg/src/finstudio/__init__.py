"""Rule-driven financial calculators.

Income tax, pension, zakat, and loan engines sharing one versioned
rule-set format, plus a descriptive-statistics helper for coded survey
responses. The same engines back the ``finstudio`` CLI and the HTTP
service in :mod:`finstudio.service`.
"""

from .errors import (EmptyInput, FinstudioError, InvalidInput, NoCategories,
                     NotANumber, ParseError, ServiceTooShort, UnknownRuleset,
                     ValidationError)
from .loan import LoanInput, LoanSchedule, compute_loan
from .pension import PensionAward, PensionInput, compute_pension
from .rules import (RuleSet, PensionRules, TaxBracket, TaxRules, Violation,
                    ZakatRules, default_ruleset, load_rules_dir, load_ruleset,
                    load_ruleset_file, serialize, validate_ruleset)
from .stats import CodedResponses, SurveySummary, packaged_counts, parse_counts, summarize
from .tax import AlreadyPaidTaxes, TaxAssessment, TaxProfile, assess_tax, slab_tax
from .zakat import (BusinessHolding, CashHolding, MetalHolding, PropertyHolding,
                    ZakatAssessment, ZakatDeclaration, assess_zakat)

__version__ = "0.1.0"

__all__ = [
    "AlreadyPaidTaxes", "BusinessHolding", "CashHolding", "CodedResponses",
    "EmptyInput", "FinstudioError", "InvalidInput", "LoanInput", "LoanSchedule",
    "MetalHolding", "NoCategories", "NotANumber", "ParseError", "PensionAward",
    "PensionInput", "PensionRules", "PropertyHolding", "RuleSet", "ServiceTooShort",
    "SurveySummary", "TaxAssessment", "TaxBracket", "TaxProfile", "TaxRules",
    "UnknownRuleset", "ValidationError", "Violation", "ZakatAssessment",
    "ZakatDeclaration", "ZakatRules", "assess_tax", "assess_zakat", "compute_loan",
    "compute_pension", "default_ruleset", "load_rules_dir", "load_ruleset",
    "load_ruleset_file", "packaged_counts", "parse_counts", "serialize", "slab_tax",
    "summarize", "validate_ruleset",
]
