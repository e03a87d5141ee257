"""HTTP JSON API over the calculators.

All computation lives in the engine modules; this layer parses request
bodies, picks a rule-set, and serializes results (raw numbers plus a
``display`` block of 2-decimal strings, so clients never re-round).

Error responses share one shape:

    {"code": "<machine code>", "message": "<human text>", "field": "<input path>"}

with ``code`` drawn from the closed set: ``invalid_input``,
``service_too_short``, ``not_a_number``, ``empty_input``,
``no_categories``, ``unknown_ruleset``. Engine validation failures map
to 400, an unknown rule-set id to 404; requests that do not match the
endpoint schema get FastAPI's standard 422.
"""

from __future__ import annotations

from datetime import date

from fastapi import FastAPI
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel

from .errors import FinstudioError, UnknownRuleset
from .loan import LoanInput, compute_loan
from .pension import PensionInput, compute_pension
from .rules import RuleSet, default_ruleset
from .stats import CodedResponses, summarize
from .tax import AlreadyPaidTaxes, TaxProfile, assess_tax
from .zakat import (BusinessHolding, CashHolding, MetalHolding, PropertyHolding,
                    ZakatDeclaration, assess_zakat)

DEFAULT_PORT = 8080


class RulesetRegistry:
    """Immutable id -> RuleSet mapping, fixed at startup."""

    def __init__(self, rulesets: list[RuleSet] | None = None,
                 default_id: str | None = None):
        if not rulesets:
            rulesets = [default_ruleset()]
        self._by_id = {ruleset.id: ruleset for ruleset in rulesets}
        self.default_id = default_id if default_id is not None else rulesets[0].id
        if self.default_id not in self._by_id:
            raise UnknownRuleset(self.default_id)

    def get(self, ruleset_id: str | None) -> RuleSet:
        wanted = ruleset_id if ruleset_id is not None else self.default_id
        try:
            return self._by_id[wanted]
        except KeyError:
            raise UnknownRuleset(wanted) from None

    def list_metadata(self) -> list[dict]:
        return [{"id": ruleset.id, "currency": ruleset.currency,
                 "default": ruleset.id == self.default_id}
                for ruleset in self._by_id.values()]


class AlreadyPaidBody(BaseModel):
    electricity: float = 0.0
    telephone: float = 0.0
    mobile: float = 0.0
    others: float = 0.0


class TaxBody(BaseModel):
    monthly_income: float
    is_teacher: bool = False
    already_paid: AlreadyPaidBody | None = None
    name: str = ""
    cnic: str = ""
    ntn: str = ""
    designation: str = ""
    posting_city: str = ""
    employer_ntn: str = ""
    tax_year: str = ""
    assessment_date: date | None = None
    ruleset: str | None = None


class PensionBody(BaseModel):
    last_basic_pay: float
    qualifying_service: float
    pensioner_name: str = ""
    date_of_birth: date | None = None
    date_of_appointment: date | None = None
    date_of_retirement: date | None = None
    bps: int | None = None
    ruleset: str | None = None


class MetalBody(BaseModel):
    weight: float = 0.0
    price_per_tola: float = 0.0


class CashBody(BaseModel):
    chb: float = 0.0
    bas: float = 0.0
    sss: float = 0.0
    myhl: float = 0.0
    ocm: float = 0.0
    nisab_amount: float = 0.0


class BusinessBody(BaseModel):
    bi: float = 0.0
    pfi: float = 0.0
    bs: float = 0.0
    ofb: float = 0.0
    nisab_amount: float = 0.0


class PropertyBody(BaseModel):
    net_property: float = 0.0
    other_property: float = 0.0
    nisab_amount: float = 0.0


class ZakatBody(BaseModel):
    gold: MetalBody | None = None
    silver: MetalBody | None = None
    cash: CashBody | None = None
    business: BusinessBody | None = None
    property: PropertyBody | None = None
    ruleset: str | None = None


class LoanBody(BaseModel):
    # strings allowed on purpose: non-numeric text must reach the engine's
    # per-field dialogs instead of dying in schema validation
    amount: float | str
    annual_rate_percent: float | str
    periods: float | str


class StatsBody(BaseModel):
    counts: list[tuple[int, int]]


def create_app(registry: RulesetRegistry | None = None,
               static_dir: str | None = None) -> FastAPI:
    """Build the application; ``registry`` defaults to the shipped rule-set."""
    registry = registry if registry is not None else RulesetRegistry()
    app = FastAPI(title="finstudio", version="0.1.0")

    @app.exception_handler(UnknownRuleset)
    async def _unknown_ruleset(request, exc: UnknownRuleset):
        return JSONResponse(status_code=404, content=_api_error(exc))

    @app.exception_handler(FinstudioError)
    async def _engine_error(request, exc: FinstudioError):
        return JSONResponse(status_code=400, content=_api_error(exc))

    @app.get("/healthz", response_class=PlainTextResponse)
    def healthz() -> str:
        return "ok"

    @app.get("/api/v1/rulesets")
    def rulesets() -> list[dict]:
        """Loaded rule-set ids and metadata."""
        return registry.list_metadata()

    @app.post("/api/v1/tax/assess")
    def tax_assess(body: TaxBody) -> dict:
        """Annual income tax for a salaried profile."""
        ruleset = registry.get(body.ruleset)
        paid = (AlreadyPaidTaxes(**body.already_paid.model_dump())
                if body.already_paid is not None else None)
        profile = TaxProfile(
            monthly_income=body.monthly_income,
            is_teacher=body.is_teacher,
            already_paid=paid,
            name=body.name,
            cnic=body.cnic,
            ntn=body.ntn,
            designation=body.designation,
            posting_city=body.posting_city,
            employer_ntn=body.employer_ntn,
            tax_year=body.tax_year,
            assessment_date=body.assessment_date,
        )
        return assess_tax(profile, ruleset).to_dict()

    @app.post("/api/v1/pension/compute")
    def pension_compute(body: PensionBody) -> dict:
        """Pension award for a retiring employee."""
        ruleset = registry.get(body.ruleset)
        pension_input = PensionInput(
            last_basic_pay=body.last_basic_pay,
            qualifying_service=body.qualifying_service,
            pensioner_name=body.pensioner_name,
            date_of_birth=body.date_of_birth,
            date_of_appointment=body.date_of_appointment,
            date_of_retirement=body.date_of_retirement,
            bps=body.bps,
        )
        return compute_pension(pension_input, ruleset).to_dict()

    @app.post("/api/v1/zakat/assess")
    def zakat_assess(body: ZakatBody) -> dict:
        """Zakat due over the declared asset categories."""
        ruleset = registry.get(body.ruleset)
        declaration = ZakatDeclaration(
            gold=_holding(MetalHolding, body.gold),
            silver=_holding(MetalHolding, body.silver),
            cash=_holding(CashHolding, body.cash),
            business=_holding(BusinessHolding, body.business),
            property=_holding(PropertyHolding, body.property),
        )
        return assess_zakat(declaration, ruleset).to_dict()

    @app.post("/api/v1/loan/compute")
    def loan_compute(body: LoanBody) -> dict:
        """Monthly and yearly loan payment amounts."""
        loan_input = LoanInput.from_raw(body.amount, body.annual_rate_percent,
                                        body.periods)
        return compute_loan(loan_input).to_dict()

    @app.post("/api/v1/stats/summarize")
    def stats_summarize(body: StatsBody) -> dict:
        """Descriptive summary of coded survey responses."""
        return summarize(CodedResponses.from_pairs(body.counts)).to_dict()

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")

    return app


def _holding(cls, body: BaseModel | None):
    return cls(**body.model_dump()) if body is not None else None


def _api_error(exc: FinstudioError) -> dict:
    return {"code": exc.code, "message": exc.message, "field": exc.field}
