/**
 * Form descriptors for the four calculators. Field names mirror the
 * service request schemas one to one; the renderer in app.ts builds the
 * DOM and the request body from these specs.
 */

export type FieldKind = "number" | "text" | "date" | "checkbox";

export interface FieldSpec {
  name: string;
  label: string;
  kind: FieldKind;
  required?: boolean;
}

/** A block of fields revealed by a toggle; unchecked groups are omitted
 * from the request entirely. */
export interface GroupSpec {
  name: string;
  toggleLabel: string;
  fields: FieldSpec[];
}

export type CalculatorId = "tax" | "pension" | "zakat" | "loan";

export interface CalculatorSpec {
  id: CalculatorId;
  title: string;
  endpoint: string;
  fields: FieldSpec[];
  groups: GroupSpec[];
}

const number = (name: string, label: string, required = false): FieldSpec => ({
  name,
  label,
  kind: "number",
  required,
});
const text = (name: string, label: string): FieldSpec => ({ name, label, kind: "text" });
const dateField = (name: string, label: string): FieldSpec => ({
  name,
  label,
  kind: "date",
});
const checkbox = (name: string, label: string): FieldSpec => ({
  name,
  label,
  kind: "checkbox",
});

export const TAX: CalculatorSpec = {
  id: "tax",
  title: "Tax Calculator",
  endpoint: "/api/v1/tax/assess",
  fields: [
    text("name", "Name"),
    text("cnic", "CNIC"),
    text("ntn", "NTN"),
    text("designation", "Designation"),
    text("posting_city", "Posting city"),
    text("employer_ntn", "Employer NTN"),
    text("tax_year", "Tax year"),
    dateField("assessment_date", "Date"),
    number("monthly_income", "Monthly income", true),
    checkbox("is_teacher", "Teacher exemption"),
  ],
  groups: [
    {
      name: "already_paid",
      toggleLabel: "Already paid tax",
      fields: [
        number("electricity", "Electricity"),
        number("telephone", "Telephone"),
        number("mobile", "Mobile"),
        number("others", "Others"),
      ],
    },
  ],
};

export const PENSION: CalculatorSpec = {
  id: "pension",
  title: "Pension Calculator",
  endpoint: "/api/v1/pension/compute",
  fields: [
    text("pensioner_name", "Name of pensioner"),
    dateField("date_of_birth", "Date of birth"),
    dateField("date_of_appointment", "Date of appointment"),
    dateField("date_of_retirement", "Date of retirement"),
    number("bps", "BPS"),
    number("last_basic_pay", "Last basic pay", true),
    number("qualifying_service", "Qualifying service (years)", true),
  ],
  groups: [],
};

export const ZAKAT: CalculatorSpec = {
  id: "zakat",
  title: "Zakat Calculator",
  endpoint: "/api/v1/zakat/assess",
  fields: [],
  groups: [
    {
      name: "gold",
      toggleLabel: "Gold",
      fields: [
        number("weight", "Weight of gold (tola)"),
        number("price_per_tola", "Price of gold per tola"),
      ],
    },
    {
      name: "silver",
      toggleLabel: "Silver",
      fields: [
        number("weight", "Weight of silver (tola)"),
        number("price_per_tola", "Price of silver per tola"),
      ],
    },
    {
      name: "cash",
      toggleLabel: "Cash",
      fields: [
        number("chb", "Cash in hand and at bank"),
        number("bas", "Balances"),
        number("sss", "Savings"),
        number("myhl", "Money you hold or lent"),
        number("ocm", "Other cash and money"),
        number("nisab_amount", "Cash amount for zakat (nisab)"),
      ],
    },
    {
      name: "business",
      toggleLabel: "Business",
      fields: [
        number("bi", "Business income"),
        number("pfi", "Profit from investments"),
        number("bs", "Business stock"),
        number("ofb", "Other funds in business"),
        number("nisab_amount", "Business amount for zakat (nisab)"),
      ],
    },
    {
      name: "property",
      toggleLabel: "Property",
      fields: [
        number("net_property", "Net property"),
        number("other_property", "Other property"),
        number("nisab_amount", "Property amount for zakat (nisab)"),
      ],
    },
  ],
};

export const LOAN: CalculatorSpec = {
  id: "loan",
  title: "Loan Calculator",
  endpoint: "/api/v1/loan/compute",
  fields: [
    number("amount", "Loan amount", true),
    number("annual_rate_percent", "Rate of interest (annually, %)", true),
    number("periods", "Number of months/years", true),
  ],
  groups: [],
};

export const CALCULATORS: CalculatorSpec[] = [TAX, PENSION, ZAKAT, LOAN];
