"""Acceptance suite.

One test per release criterion; each prints a PASS/FAIL line (visible
with ``pytest tests/test_acceptance.py -s``) and enforces its runtime
budget.
"""

import functools
import json
import random
import time

import pytest
from fastapi.testclient import TestClient

from finstudio.cli import main as cli_main
from finstudio.loan import LoanInput, compute_loan
from finstudio.pension import PensionInput, compute_pension
from finstudio.rules import default_ruleset
from finstudio.service import create_app
from finstudio.stats import packaged_counts, summarize
from finstudio.tax import AlreadyPaidTaxes, TaxProfile, assess_tax, slab_tax
from finstudio.zakat import (NOTICES, BusinessHolding, CashHolding, MetalHolding,
                             PropertyHolding, ZakatDeclaration, assess_zakat)

RULESET = default_ruleset()
CLIENT = TestClient(create_app())


def criterion(name, budget_seconds):
    def decorator(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            started = time.perf_counter()
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"FAIL  {name}")
                raise
            elapsed = time.perf_counter() - started
            if elapsed >= budget_seconds:
                print(f"FAIL  {name} (took {elapsed:.2f}s, budget {budget_seconds}s)")
                raise AssertionError(f"runtime budget exceeded: {elapsed:.2f}s")
            print(f"PASS  {name} ({elapsed:.2f}s)")
        return wrapper
    return decorator


@criterion("survey-table reproduction (tables 1-7)", 1.0)
def test_survey_table_reproduction():
    expected = {
        "table1": ("1.00", "2.00", "1.50", "1.50", "0.50"),
        "table2": ("1.00", "3.00", "2.00", "1.69", "0.63"),
        "table3": ("1.00", "2.00", "1.00", "1.06", "0.24"),
        "table4": ("1.00", "3.00", "1.00", "1.65", "0.78"),
        "table5": ("1.00", "3.00", "1.00", "1.63", "0.78"),
        "table6": ("1.00", "3.00", "2.00", "2.00", "0.44"),
        "table7": ("1.00", "3.00", "1.00", "1.66", "0.77"),
    }
    for table, values in expected.items():
        display = summarize(packaged_counts(table)).to_dict()["display"]
        got = (display["minimum"], display["maximum"], display["median"],
               display["mean"], display["std_dev"])
        assert got == values, f"{table}: {got} != {values}"


def pension_oracle(last_basic_pay, qualifying_service):
    creditable = 30 if qualifying_service >= 30 else qualifying_service
    gross = last_basic_pay * 7 * creditable / 300
    commuted = gross * 35 / 300
    net = gross - commuted
    return {
        "creditable_service": creditable,
        "gross_pension": gross,
        "commuted_portion": commuted,
        "net_pension": net,
        "total_gratuity": commuted * 148.4628,
        "increases": [net * 15 / 100, net * 15 / 100, net * 20 / 100,
                      net * 15 / 100, net * 10 / 100, net * 10 / 100],
        "medical_allowance": net * 25 / 100,
        "total_pension_per_month": (net * 15 / 100 + net * 15 / 100 + net * 20 / 100
                                    + net * 15 / 100 + net * 10 / 100 + net * 10 / 100
                                    + net * 25 / 100 + net),
    }


@criterion("pension oracle suite (1000 random inputs + worked example)", 1.0)
def test_pension_oracle_suite():
    rng = random.Random(148462)
    for _ in range(1000):
        pay = rng.uniform(1, 1_000_000)
        service = rng.uniform(10, 45)
        award = compute_pension(PensionInput(last_basic_pay=pay,
                                             qualifying_service=service), RULESET)
        expected = pension_oracle(pay, service)
        for name in ("creditable_service", "gross_pension", "commuted_portion",
                     "net_pension", "total_gratuity", "medical_allowance",
                     "total_pension_per_month"):
            assert abs(getattr(award, name) - expected[name]) <= 0.01, name
        for (_, amount), reference in zip(award.increases, expected["increases"]):
            assert abs(amount - reference) <= 0.01

    display = compute_pension(PensionInput(last_basic_pay=20000,
                                           qualifying_service=30),
                              RULESET).to_dict()["display"]
    assert display["gross_pension"] == "14000.00"
    assert display["commuted_portion"] == "1633.33"
    assert display["net_pension"] == "12366.67"
    assert display["total_gratuity"] == "242489.24"
    assert display["increases"] == ["1855.00", "1855.00", "2473.33", "1855.00",
                                    "1236.67", "1236.67"]
    assert display["medical_allowance"] == "3091.67"
    assert display["total_pension_per_month"] == "25970.00"


@criterion("zakat properties (rate identity, inclusive gates, notices)", 1.0)
def test_zakat_properties():
    rng = random.Random(2500)
    for _ in range(1000):
        gold = MetalHolding(rng.uniform(0, 20), rng.uniform(0, 100000)) \
            if rng.random() < 0.7 else None
        silver = MetalHolding(rng.uniform(0, 120), rng.uniform(0, 5000)) \
            if rng.random() < 0.7 else None
        cash = CashHolding(*(rng.uniform(0, 100000) for _ in range(5)),
                           nisab_amount=rng.uniform(0, 200000)) \
            if rng.random() < 0.7 else None
        business = BusinessHolding(*(rng.uniform(0, 100000) for _ in range(4)),
                                   nisab_amount=rng.uniform(0, 200000)) \
            if rng.random() < 0.7 else None
        prop = PropertyHolding(rng.uniform(0, 1e6), rng.uniform(0, 1e6),
                               nisab_amount=rng.uniform(0, 2e6)) \
            if rng.random() < 0.7 else None
        if all(h is None for h in (gold, silver, cash, business, prop)):
            gold = MetalHolding(10, 1000)
        assessment = assess_zakat(ZakatDeclaration(gold=gold, silver=silver,
                                                   cash=cash, business=business,
                                                   property=prop), RULESET)
        assert assessment.zakat_due == pytest.approx(0.025 * assessment.total_assets,
                                                     rel=1e-9, abs=1e-12)

    at_gold_gate = assess_zakat(ZakatDeclaration(gold=MetalHolding(7.5, 40000)), RULESET)
    assert at_gold_gate.counted["gold"] == pytest.approx(300000)
    assert at_gold_gate.notices == ()
    at_silver_gate = assess_zakat(ZakatDeclaration(silver=MetalHolding(52.5, 100)),
                                  RULESET)
    assert at_silver_gate.counted["silver"] == pytest.approx(5250)
    assert at_silver_gate.notices == ()

    below = assess_zakat(ZakatDeclaration(
        gold=MetalHolding(7.49, 40000),
        silver=MetalHolding(52.49, 100),
        cash=CashHolding(chb=100, nisab_amount=101),
        business=BusinessHolding(bi=100, nisab_amount=101),
        property=PropertyHolding(net_property=100, nisab_amount=101)), RULESET)
    assert below.notices == (
        ("gold", "The total weight & Price of Gold is less than nisab for zakat deduction"),
        ("silver", "The total weight & Price of Silver is less than nisab for zakat deduction"),
        ("cash", "The total cash is less than nisab for zakat deduction"),
        ("business", "The total Bussiness is less than nisab for zakat deduction"),
        ("property", "The total Property is less than nisab for zakat deduction"),
    )


@criterion("loan identity (10000 random inputs + worked example)", 1.0)
def test_loan_identity():
    rng = random.Random(1440)
    for _ in range(10000):
        schedule = compute_loan(LoanInput(amount=rng.uniform(0, 10_000_000),
                                          annual_rate_percent=rng.uniform(0, 50),
                                          periods=rng.uniform(0, 600)))
        assert schedule.yearly_payment == pytest.approx(12 * schedule.monthly_payment,
                                                        rel=1e-9, abs=1e-12)
    display = compute_loan(LoanInput(100000, 12, 12)).to_dict()["display"]
    assert display["monthly_payment"] == "12000.00"
    assert display["yearly_payment"] == "144000.00"


@criterion("tax slab correctness (oracle, continuity, rebate, branch order)", 1.0)
def test_tax_slab_correctness():
    brackets = RULESET.tax.brackets

    def oracle(income):
        total = brackets[0].base_tax
        for i, bracket in enumerate(brackets):
            upper = brackets[i + 1].lower_bound if i + 1 < len(brackets) else float("inf")
            overlap = min(income, upper) - bracket.lower_bound
            if overlap > 0:
                total += bracket.marginal_rate * overlap
        return total

    rng = random.Random(4000)
    for _ in range(1000):
        income = rng.uniform(0, 12_000_000)
        assert abs(slab_tax(income, RULESET.tax) - oracle(income)) <= 0.01

    epsilon = 0.01
    for i in range(1, len(brackets)):
        boundary = brackets[i].lower_bound
        jump = abs(slab_tax(boundary - epsilon, RULESET.tax)
                   - slab_tax(boundary, RULESET.tax))
        assert jump < brackets[i - 1].marginal_rate * epsilon + 0.01

    for monthly in (10000, 100000, 333333.33, 750000):
        assessment = assess_tax(TaxProfile(monthly_income=monthly, is_teacher=True),
                                RULESET)
        assert assessment.net_tax_after_exemption == pytest.approx(
            0.6 * assessment.gross_annual_tax, rel=1e-9, abs=1e-12)

    combined = assess_tax(TaxProfile(monthly_income=100000, is_teacher=True,
                                     already_paid=AlreadyPaidTaxes(electricity=10000)),
                          RULESET)
    assert combined.gross_annual_tax == pytest.approx(62500)
    assert combined.teacher_exemption == pytest.approx(25000)
    assert combined.annual_tax_payable == pytest.approx(27500)


@criterion("error-message fidelity (engine, CLI exit 2, HTTP 400)", 1.0)
def test_error_message_fidelity(capsys):
    pension_message = "Please Enter >= 10 Years qualifying Service"
    loan_messages = {
        "amount": "Enter a number for Loan Amount",
        "annual_rate_percent": "Enter a number for rate of interest",
    }

    # engine surfaces
    with pytest.raises(Exception) as info:
        compute_pension(PensionInput(last_basic_pay=20000, qualifying_service=5),
                        RULESET)
    assert info.value.message == pension_message
    with pytest.raises(Exception) as info:
        LoanInput.from_raw("abc", 12, 12)
    assert info.value.message == loan_messages["amount"]
    with pytest.raises(Exception) as info:
        LoanInput.from_raw(100, "abc", 12)
    assert info.value.message == loan_messages["annual_rate_percent"]
    engine_notices = assess_zakat(ZakatDeclaration(
        gold=MetalHolding(1, 1), silver=MetalHolding(1, 1),
        cash=CashHolding(chb=1, nisab_amount=2),
        business=BusinessHolding(bi=1, nisab_amount=2),
        property=PropertyHolding(net_property=1, nisab_amount=2)), RULESET).notices
    assert [message for _, message in engine_notices] == [NOTICES[c] for c in
                                                          ("gold", "silver", "cash",
                                                           "business", "property")]

    # CLI surfaces
    code = cli_main(["pension", "--last-basic-pay", "20000",
                     "--qualifying-service", "5"])
    captured = capsys.readouterr()
    assert code == 2 and pension_message in captured.err
    code = cli_main(["loan", "--amount", "abc", "--rate", "12", "--periods", "12"])
    captured = capsys.readouterr()
    assert code == 2 and loan_messages["amount"] in captured.err
    code = cli_main(["zakat", "--gold-tola", "1", "--gold-price", "1",
                     "--silver-tola", "1", "--silver-price", "1",
                     "--cash", "chb=1", "--cash-nisab", "2",
                     "--business", "bi=1", "--business-nisab", "2",
                     "--property-net", "1", "--property-nisab", "2"])
    captured = capsys.readouterr()
    assert code == 0
    for category in ("gold", "silver", "cash", "business", "property"):
        assert NOTICES[category] in captured.out

    # HTTP surfaces
    response = CLIENT.post("/api/v1/pension/compute",
                           json={"last_basic_pay": 20000, "qualifying_service": 5})
    assert response.status_code == 400
    assert response.json()["message"] == pension_message
    response = CLIENT.post("/api/v1/loan/compute",
                           json={"amount": "abc", "annual_rate_percent": 12,
                                 "periods": 12})
    assert response.status_code == 400
    assert response.json()["message"] == loan_messages["amount"]
    response = CLIENT.post("/api/v1/zakat/assess", json={
        "gold": {"weight": 1, "price_per_tola": 1},
        "silver": {"weight": 1, "price_per_tola": 1},
        "cash": {"chb": 1, "nisab_amount": 2},
        "business": {"bi": 1, "nisab_amount": 2},
        "property": {"net_property": 1, "nisab_amount": 2}})
    assert response.status_code == 200
    assert [n["message"] for n in response.json()["notices"]] == [
        NOTICES[c] for c in ("gold", "silver", "cash", "business", "property")]


def golden_cases():
    """20 inputs spanning all four calculators, with the engine call, the CLI
    argv, and the HTTP request for each."""
    cases = []

    def tax(monthly, teacher=False, paid=None):
        argv = ["tax", "--monthly-income", repr(monthly)]
        body = {"monthly_income": monthly, "is_teacher": teacher}
        if teacher:
            argv.append("--teacher")
        if paid is not None:
            body["already_paid"] = paid
            for key, value in paid.items():
                argv += [f"--paid-{key}", repr(value)]
        credits = AlreadyPaidTaxes(**paid) if paid is not None else None
        profile = TaxProfile(monthly_income=float(monthly), is_teacher=teacher,
                             already_paid=credits)
        cases.append((lambda p=profile: assess_tax(p, RULESET).to_dict(),
                      argv, "/api/v1/tax/assess", body))

    def pension(pay, service):
        profile = PensionInput(last_basic_pay=float(pay),
                               qualifying_service=float(service))
        cases.append((lambda p=profile: compute_pension(p, RULESET).to_dict(),
                      ["pension", "--last-basic-pay", repr(pay),
                       "--qualifying-service", repr(service)],
                      "/api/v1/pension/compute",
                      {"last_basic_pay": pay, "qualifying_service": service}))

    def zakat(declaration, argv_tail, body):
        cases.append((lambda d=declaration: assess_zakat(d, RULESET).to_dict(),
                      ["zakat"] + argv_tail, "/api/v1/zakat/assess", body))

    def loan(amount, rate, periods):
        loan_input = LoanInput(float(amount), float(rate), float(periods))
        cases.append((lambda i=loan_input: compute_loan(i).to_dict(),
                      ["loan", "--amount", repr(amount), "--rate", repr(rate),
                       "--periods", repr(periods)],
                      "/api/v1/loan/compute",
                      {"amount": amount, "annual_rate_percent": rate,
                       "periods": periods}))

    tax(100000, teacher=True, paid={"electricity": 10000})
    tax(30000)
    tax(0)
    tax(250000, teacher=True)
    tax(145678.9, paid={"telephone": 1200.5, "mobile": 300, "others": 99.99})

    pension(20000, 30)
    pension(15000, 25)
    pension(99999.5, 10)
    pension(20000, 45)
    pension(1234.56, 33.5)

    zakat(ZakatDeclaration(gold=MetalHolding(10, 50000),
                           cash=CashHolding(chb=120000, nisab_amount=52000)),
          ["--gold-tola", "10", "--gold-price", "50000",
           "--cash", "chb=120000", "--cash-nisab", "52000"],
          {"gold": {"weight": 10, "price_per_tola": 50000},
           "cash": {"chb": 120000, "nisab_amount": 52000}})
    zakat(ZakatDeclaration(silver=MetalHolding(52.5, 1000)),
          ["--silver-tola", "52.5", "--silver-price", "1000"],
          {"silver": {"weight": 52.5, "price_per_tola": 1000}})
    zakat(ZakatDeclaration(gold=MetalHolding(7.5, 40000)),
          ["--gold-tola", "7.5", "--gold-price", "40000"],
          {"gold": {"weight": 7.5, "price_per_tola": 40000}})
    zakat(ZakatDeclaration(silver=MetalHolding(40, 99999)),
          ["--silver-tola", "40", "--silver-price", "99999"],
          {"silver": {"weight": 40, "price_per_tola": 99999}})
    zakat(ZakatDeclaration(business=BusinessHolding(bi=20000, pfi=5000, bs=1000,
                                                    nisab_amount=20000),
                           property=PropertyHolding(net_property=500000,
                                                    nisab_amount=400000)),
          ["--business", "bi=20000", "--business", "pfi=5000", "--business", "bs=1000",
           "--business-nisab", "20000", "--property-net", "500000",
           "--property-nisab", "400000"],
          {"business": {"bi": 20000, "pfi": 5000, "bs": 1000, "nisab_amount": 20000},
           "property": {"net_property": 500000, "nisab_amount": 400000}})

    loan(100000, 12, 12)
    loan(500000, 8, 5)
    loan(0, 10, 3)
    loan(750000, 0, 10)
    loan(123456.78, 9.25, 18)

    assert len(cases) == 20
    return cases


@criterion("cross-surface consistency (20 golden inputs)", 5.0)
def test_cross_surface_consistency(capsys):
    for engine_call, argv, endpoint, body in golden_cases():
        expected = engine_call()

        code = cli_main(argv + ["--format", "json"])
        captured = capsys.readouterr()
        assert code == 0, captured.err
        cli_payload = json.loads(captured.out)
        assert cli_payload == expected, argv

        response = CLIENT.post(endpoint, json=body)
        assert response.status_code == 200, response.text
        assert response.json() == expected, endpoint
