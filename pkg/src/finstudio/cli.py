"""Command-line front door to all calculators.

Exit codes: 0 success, 2 validation error (engine message on stderr),
64 usage error, 66 missing input file.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from datetime import date

from .errors import FinstudioError, NotANumber
from .loan import LoanInput, compute_loan
from .pension import PensionInput, compute_pension
from .rules import RuleSet, default_ruleset, load_rules_dir, load_ruleset_file
from .service import DEFAULT_PORT, RulesetRegistry, create_app
from .stats import CodedResponses, parse_counts, summarize
from .tax import AlreadyPaidTaxes, TaxProfile, assess_tax
from .zakat import (BusinessHolding, CashHolding, MetalHolding, PropertyHolding,
                    ZakatDeclaration, assess_zakat)

EX_OK = 0
EX_VALIDATION = 2
EX_USAGE = 64
EX_NOFILE = 66


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EX_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="finstudio",
                     description="Tax, pension, zakat, and loan calculators")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    tax = sub.add_parser("tax", help="income tax assessment")
    tax.add_argument("--monthly-income", required=True, metavar="N")
    tax.add_argument("--teacher", action="store_true", help="apply the teacher rebate")
    tax.add_argument("--paid-electricity", metavar="N")
    tax.add_argument("--paid-telephone", metavar="N")
    tax.add_argument("--paid-mobile", metavar="N")
    tax.add_argument("--paid-others", metavar="N")
    tax.add_argument("--name", default="")
    tax.add_argument("--cnic", default="")
    tax.add_argument("--ntn", default="")
    tax.add_argument("--designation", default="")
    tax.add_argument("--posting-city", default="")
    tax.add_argument("--employer-ntn", default="")
    tax.add_argument("--tax-year", default="")
    tax.add_argument("--date", default="", metavar="YYYY-MM-DD",
                     help="assessment date")
    _common_flags(tax)
    tax.set_defaults(handler=_cmd_tax)

    pension = sub.add_parser("pension", help="pension award")
    pension.add_argument("--last-basic-pay", required=True, metavar="N")
    pension.add_argument("--qualifying-service", required=True, metavar="N")
    pension.add_argument("--name", default="")
    pension.add_argument("--date-of-birth", default="", metavar="YYYY-MM-DD")
    pension.add_argument("--date-of-appointment", default="", metavar="YYYY-MM-DD")
    pension.add_argument("--date-of-retirement", default="", metavar="YYYY-MM-DD")
    pension.add_argument("--bps", default="", metavar="GRADE")
    _common_flags(pension)
    pension.set_defaults(handler=_cmd_pension)

    zakat = sub.add_parser("zakat", help="zakat assessment")
    zakat.add_argument("--gold-tola", metavar="N")
    zakat.add_argument("--gold-price", metavar="N")
    zakat.add_argument("--silver-tola", metavar="N")
    zakat.add_argument("--silver-price", metavar="N")
    zakat.add_argument("--cash", action="append", default=[], metavar="ITEM=N",
                       help="cash line item (chb, bas, sss, myhl, ocm); repeatable")
    zakat.add_argument("--cash-nisab", metavar="N")
    zakat.add_argument("--business", action="append", default=[], metavar="ITEM=N",
                       help="business line item (bi, pfi, bs, ofb); repeatable")
    zakat.add_argument("--business-nisab", metavar="N")
    zakat.add_argument("--property-net", metavar="N")
    zakat.add_argument("--property-other", metavar="N")
    zakat.add_argument("--property-nisab", metavar="N")
    _common_flags(zakat)
    zakat.set_defaults(handler=_cmd_zakat)

    loan = sub.add_parser("loan", help="loan payment amounts")
    loan.add_argument("--amount", required=True, metavar="N")
    loan.add_argument("--rate", required=True, metavar="N",
                      help="annual rate of interest in percent")
    loan.add_argument("--periods", required=True, metavar="N",
                      help="number of months/years")
    loan.add_argument("--format", choices=("text", "json"), default="text")
    loan.set_defaults(handler=_cmd_loan)

    stats = sub.add_parser("stats", help="survey response summary")
    group = stats.add_mutually_exclusive_group(required=True)
    group.add_argument("--counts", metavar="CODE:COUNT[,CODE:COUNT...]")
    group.add_argument("--counts-file", metavar="PATH")
    stats.add_argument("--format", choices=("text", "json"), default="text")
    stats.set_defaults(handler=_cmd_stats)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int,
                       default=int(os.environ.get("FINSTUDIO_PORT", DEFAULT_PORT)))
    serve.add_argument("--rules", metavar="DIR",
                       default=os.environ.get("FINSTUDIO_RULES"),
                       help="directory of *.rules.json files")
    serve.add_argument("--static", metavar="DIR",
                       help="also serve static files (the web UI build) at /")
    serve.set_defaults(handler=_cmd_serve)

    return parser


def _common_flags(parser) -> None:
    parser.add_argument("--ruleset", metavar="PATH", help="rule-set file to use")
    parser.add_argument("--format", choices=("text", "json"), default="text")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except FileNotFoundError as exc:
        print(f"finstudio: {exc}", file=sys.stderr)
        return EX_NOFILE
    except FinstudioError as exc:
        print(exc.message, file=sys.stderr)
        return EX_VALIDATION


def run() -> None:
    raise SystemExit(main(sys.argv[1:]))


def _cmd_tax(args) -> int:
    ruleset = _ruleset(args)
    paid_flags = (args.paid_electricity, args.paid_telephone, args.paid_mobile,
                  args.paid_others)
    already_paid = None
    if any(flag is not None for flag in paid_flags):
        already_paid = AlreadyPaidTaxes(
            electricity=_number(args.paid_electricity, "electricity", default=0.0),
            telephone=_number(args.paid_telephone, "telephone", default=0.0),
            mobile=_number(args.paid_mobile, "mobile", default=0.0),
            others=_number(args.paid_others, "others", default=0.0),
        )
    profile = TaxProfile(
        monthly_income=_number(args.monthly_income, "monthly income"),
        is_teacher=args.teacher,
        already_paid=already_paid,
        name=args.name,
        cnic=args.cnic,
        ntn=args.ntn,
        designation=args.designation,
        posting_city=args.posting_city,
        employer_ntn=args.employer_ntn,
        tax_year=args.tax_year,
        assessment_date=_date(args.date, "date"),
    )
    assessment = assess_tax(profile, ruleset)
    _emit(args, assessment.to_dict(), _tax_text)
    return EX_OK


def _cmd_pension(args) -> int:
    ruleset = _ruleset(args)
    pension_input = PensionInput(
        last_basic_pay=_number(args.last_basic_pay, "last basic pay"),
        qualifying_service=_number(args.qualifying_service, "qualifying service"),
        pensioner_name=args.name,
        date_of_birth=_date(args.date_of_birth, "date of birth"),
        date_of_appointment=_date(args.date_of_appointment, "date of appointment"),
        date_of_retirement=_date(args.date_of_retirement, "date of retirement"),
        bps=int(_number(args.bps, "BPS")) if args.bps else None,
    )
    award = compute_pension(pension_input, ruleset)
    _emit(args, award.to_dict(), _pension_text)
    return EX_OK


def _cmd_zakat(args) -> int:
    ruleset = _ruleset(args)
    gold = silver = cash = business = prop = None
    if args.gold_tola is not None or args.gold_price is not None:
        gold = MetalHolding(weight=_number(args.gold_tola, "gold tola", default=0.0),
                            price_per_tola=_number(args.gold_price, "gold price", default=0.0))
    if args.silver_tola is not None or args.silver_price is not None:
        silver = MetalHolding(weight=_number(args.silver_tola, "silver tola", default=0.0),
                              price_per_tola=_number(args.silver_price, "silver price",
                                                     default=0.0))
    if args.cash or args.cash_nisab is not None:
        cash = CashHolding(**_items(args.cash, CashHolding._ITEMS, "--cash"),
                           nisab_amount=_number(args.cash_nisab, "cash nisab", default=0.0))
    if args.business or args.business_nisab is not None:
        business = BusinessHolding(**_items(args.business, BusinessHolding._ITEMS,
                                            "--business"),
                                   nisab_amount=_number(args.business_nisab,
                                                        "business nisab", default=0.0))
    if (args.property_net is not None or args.property_other is not None
            or args.property_nisab is not None):
        prop = PropertyHolding(
            net_property=_number(args.property_net, "net property", default=0.0),
            other_property=_number(args.property_other, "other property", default=0.0),
            nisab_amount=_number(args.property_nisab, "property nisab", default=0.0),
        )
    declaration = ZakatDeclaration(gold=gold, silver=silver, cash=cash,
                                   business=business, property=prop)
    assessment = assess_zakat(declaration, ruleset)
    _emit(args, assessment.to_dict(), _zakat_text)
    return EX_OK


def _cmd_loan(args) -> int:
    loan_input = LoanInput.from_raw(args.amount, args.rate, args.periods)
    schedule = compute_loan(loan_input)
    _emit(args, schedule.to_dict(), _loan_text)
    return EX_OK


def _cmd_stats(args) -> int:
    if args.counts_file is not None:
        with open(args.counts_file, encoding="utf-8") as handle:
            responses = parse_counts(handle.read())
    else:
        responses = _parse_counts_flag(args.counts)
    summary = summarize(responses)
    _emit(args, summary.to_dict(), _stats_text)
    return EX_OK


def _cmd_serve(args) -> int:
    import uvicorn

    registry = RulesetRegistry(load_rules_dir(args.rules)) if args.rules \
        else RulesetRegistry()
    app = create_app(registry, static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port)
    return EX_OK


def _ruleset(args) -> RuleSet:
    if args.ruleset:
        return load_ruleset_file(args.ruleset)
    return default_ruleset()


def _number(raw: str | None, label: str, default: float | None = None) -> float:
    if raw is None or raw == "":
        if default is not None:
            return default
        raise NotANumber(f"Enter a number for {label}", field=label.replace(" ", "_"),
                         title=f"{label} Entry error")
    try:
        return float(raw)
    except ValueError:
        raise NotANumber(f"Enter a number for {label}", field=label.replace(" ", "_"),
                         title=f"{label} Entry error") from None


def _date(raw: str, label: str) -> date | None:
    if not raw:
        return None
    try:
        return date.fromisoformat(raw)
    except ValueError:
        raise NotANumber(f"Enter a date (YYYY-MM-DD) for {label}",
                         field=label.replace(" ", "_"),
                         title=f"{label} Entry error") from None


def _items(flags: list[str], allowed: tuple[str, ...], flag_name: str) -> dict:
    items: dict[str, float] = {}
    for raw in flags:
        key, sep, value = raw.partition("=")
        key = key.strip().lower()
        if not sep or key not in allowed:
            raise NotANumber(
                f"{flag_name} expects ITEM=N with ITEM one of {', '.join(allowed)}",
                field=flag_name.lstrip("-"), title="Entry error")
        items[key] = _number(value, key)
    return items


def _emit(args, payload: dict, text_renderer) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(text_renderer(payload))


def _tax_text(payload: dict) -> str:
    d = payload["display"]
    lines = [
        f"Your Annual Salary {d['annual_salary']}",
        f"Your Take Home Salary {d['take_home_monthly']}",
        f"Gross Annual Tax {d['gross_annual_tax']}",
        f"Teacher Exemption {d['teacher_exemption']}",
        f"Net Tax After Exemption {d['net_tax_after_exemption']}",
        f"Your Total Already Paid Tax {d['total_already_paid']}",
        f"Your Annual Tax {d['annual_tax_payable']}",
    ]
    if payload["overpaid"]:
        lines.append("Overpaid yes")
    return "\n".join(lines)


def _pension_text(payload: dict) -> str:
    d = payload["display"]
    lines = [
        f"Creditable Service {d['creditable_service']}",
        f"Gross Pension {d['gross_pension']}",
        f"Commuted Portion {d['commuted_portion']}",
        f"Net pension {d['net_pension']}",
        f"Total Gratuity {d['total_gratuity']}",
    ]
    for entry, display in zip(payload["increases"], d["increases"]):
        lines.append(f"{entry['label']} {display}")
    lines.append(f"Medical Allowance {d['medical_allowance']}")
    lines.append(f"Total pension per month {d['total_pension_per_month']}")
    for advisory in payload["advisories"]:
        lines.append(f"Advisory: {advisory}")
    return "\n".join(lines)


def _zakat_text(payload: dict) -> str:
    d = payload["display"]
    lines = [f"{category.capitalize()} {d['counted'][category]}"
             for category in payload["counted"]]
    for notice in payload["notices"]:
        lines.append(notice["message"])
    lines.append(f"Total assets {d['total_assets']}")
    lines.append(f"Zakat due {d['zakat_due']}")
    return "\n".join(lines)


def _loan_text(payload: dict) -> str:
    d = payload["display"]
    return "\n".join([
        f"Monthly payment Amount {d['monthly_payment']}",
        f"Yearly payment Amount {d['yearly_payment']}",
    ])


def _stats_text(payload: dict) -> str:
    d = payload["display"]
    return "\n".join([
        f"Min {d['minimum']}",
        f"Max {d['maximum']}",
        f"Median {d['median']}",
        f"Mean {d['mean']}",
        f"StdDev {d['std_dev']}",
    ])


def _parse_counts_flag(spec: str) -> CodedResponses:
    pairs = []
    for chunk in spec.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        code, sep, count = chunk.partition(":")
        if not sep:
            raise NotANumber("Enter counts as CODE:COUNT pairs separated by commas",
                             field="counts", title="Counts Entry error")
        try:
            pairs.append((int(code), int(count)))
        except ValueError:
            raise NotANumber("Enter counts as CODE:COUNT pairs separated by commas",
                             field="counts", title="Counts Entry error") from None
    return CodedResponses.from_pairs(pairs)


if __name__ == "__main__":
    run()
