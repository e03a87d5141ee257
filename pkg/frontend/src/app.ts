/**
 * Single-page app: a main menu dispatching to the tax, pension, zakat,
 * and loan forms. Each form submits to the calculation service and
 * renders the response's display strings verbatim; service errors
 * surface as dialogs, transport errors as a retryable banner.
 */

import {
  ApiClientError,
  FetchLike,
  LoanResult,
  PensionResult,
  RequestCancelled,
  TaxResult,
  ZakatResult,
  postJson,
} from "./api.js";
import { CALCULATORS, CalculatorSpec, FieldSpec, GroupSpec } from "./forms.js";

/** Dialog titles per service error code; every code in the closed set has
 * a rendering path. */
export const ERROR_DIALOG_TITLES: Record<string, string> = {
  invalid_input: "Invalid input",
  service_too_short: "Incorrect value",
  not_a_number: "Entry error",
  empty_input: "No responses",
  no_categories: "Nothing to assess",
  unknown_ruleset: "Unknown rule-set",
};

export interface AppOptions {
  fetchFn?: FetchLike;
  baseUrl?: string;
}

export interface AppHandle {
  root: HTMLElement;
  navigate(route: string): void;
  /** Submit the active form programmatically (same path as the button). */
  submit(): Promise<void>;
  activeCalculator(): string | null;
}

export function initApp(root: HTMLElement, options: AppOptions = {}): AppHandle {
  const fetchFn: FetchLike =
    options.fetchFn ?? ((url, init) => fetch(url, init));
  const baseUrl = options.baseUrl ?? "";

  let active: CalculatorSpec | null = null;
  let form: HTMLFormElement | null = null;
  let resultPanel: HTMLElement | null = null;
  let controller: AbortController | null = null;

  function navigate(route: string): void {
    controller?.abort();
    controller = null;
    const spec = CALCULATORS.find((calculator) => calculator.id === route);
    if (spec) {
      renderCalculator(spec);
    } else {
      renderMenu();
    }
  }

  function renderMenu(): void {
    active = null;
    form = null;
    resultPanel = null;
    root.innerHTML = "";
    const page = el("div", "page menu-page");
    page.append(el("h1", "app-title", "finstudio"));
    page.append(el("p", "app-subtitle", "Tax, pension, zakat, and loan calculators"));
    const menu = el("nav", "menu");
    for (const spec of CALCULATORS) {
      const button = el("button", "menu-button", spec.title) as HTMLButtonElement;
      button.type = "button";
      button.dataset.route = spec.id;
      button.addEventListener("click", () => {
        if (typeof window !== "undefined" && "location" in window) {
          window.location.hash = `#/${spec.id}`;
        }
        navigate(spec.id);
      });
      menu.append(button);
    }
    page.append(menu);
    root.append(page);
  }

  function renderCalculator(spec: CalculatorSpec): void {
    active = spec;
    root.innerHTML = "";
    const page = el("div", "page calculator-page");
    const header = el("header", "calculator-header");
    const home = el("button", "link-button", "Menu") as HTMLButtonElement;
    home.type = "button";
    home.dataset.route = "menu";
    home.addEventListener("click", () => {
      if (typeof window !== "undefined" && "location" in window) {
        window.location.hash = "";
      }
      navigate("");
    });
    header.append(home, el("h1", "calculator-title", spec.title));
    page.append(header);

    form = document.createElement("form");
    form.className = "calculator-form";
    form.noValidate = true;
    for (const field of spec.fields) {
      form.append(fieldRow(field));
    }
    for (const group of spec.groups) {
      form.append(groupBlock(group));
    }
    const submitButton = el("button", "submit-button",
                            `Calculate ${spec.id}`) as HTMLButtonElement;
    submitButton.type = "submit";
    form.append(submitButton);
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      void submit();
    });
    page.append(form);

    resultPanel = el("section", "result-panel");
    resultPanel.hidden = true;
    page.append(resultPanel);
    root.append(page);
  }

  function fieldRow(field: FieldSpec): HTMLElement {
    const row = el("div", "field-row");
    row.dataset.name = field.name;
    const id = `field-${field.name}`;
    const label = el("label", "field-label", field.label) as HTMLLabelElement;
    label.htmlFor = id;
    const input = document.createElement("input");
    input.id = id;
    input.name = field.name;
    if (field.kind === "checkbox") {
      input.type = "checkbox";
      row.append(input, label);
    } else {
      input.type = field.kind === "date" ? "date" : "text";
      if (field.kind === "number") {
        input.inputMode = "decimal";
      }
      row.append(label, input, el("span", "field-error"));
    }
    return row;
  }

  function groupBlock(group: GroupSpec): HTMLElement {
    const block = el("fieldset", "group-block");
    block.dataset.group = group.name;
    const toggleRow = el("div", "group-toggle");
    const toggle = document.createElement("input");
    toggle.type = "checkbox";
    toggle.id = `toggle-${group.name}`;
    toggle.dataset.toggle = group.name;
    const label = el("label", "group-label", group.toggleLabel) as HTMLLabelElement;
    label.htmlFor = toggle.id;
    toggleRow.append(toggle, label);
    const body = el("div", "group-fields");
    body.hidden = true;
    for (const field of group.fields) {
      const row = fieldRow(field);
      const input = row.querySelector("input") as HTMLInputElement;
      input.name = `${group.name}.${field.name}`;
      row.dataset.name = input.name;
      body.append(row);
    }
    toggle.addEventListener("change", () => {
      body.hidden = !toggle.checked;
    });
    block.append(toggleRow, body);
    return block;
  }

  function collectBody(spec: CalculatorSpec): Record<string, unknown> | null {
    if (!form) {
      return null;
    }
    clearFieldErrors();
    const body: Record<string, unknown> = {};
    let valid = true;

    const readNumber = (input: HTMLInputElement, field: FieldSpec,
                        blankIsZero: boolean): number | undefined => {
      const raw = input.value.trim();
      if (raw === "") {
        if (field.required) {
          markFieldError(input, "Required");
          valid = false;
          return undefined;
        }
        return blankIsZero ? 0 : undefined;
      }
      const value = Number(raw);
      if (!Number.isFinite(value)) {
        markFieldError(input, `Enter a number for ${field.label}`);
        valid = false;
        return undefined;
      }
      return value;
    };

    for (const field of spec.fields) {
      const input = form.querySelector(
        `input[name="${field.name}"]`) as HTMLInputElement;
      if (field.kind === "checkbox") {
        body[field.name] = input.checked;
      } else if (field.kind === "number") {
        const value = readNumber(input, field, false);
        if (value !== undefined) {
          body[field.name] = value;
        }
      } else {
        const raw = input.value.trim();
        if (raw !== "") {
          body[field.name] = raw;
        } else if (field.required) {
          markFieldError(input, "Required");
          valid = false;
        }
      }
    }

    for (const group of spec.groups) {
      const toggle = form.querySelector(
        `input[data-toggle="${group.name}"]`) as HTMLInputElement;
      if (!toggle.checked) {
        continue; // hidden groups are not sent at all
      }
      const groupBody: Record<string, unknown> = {};
      for (const field of group.fields) {
        const input = form.querySelector(
          `input[name="${group.name}.${field.name}"]`) as HTMLInputElement;
        const value = readNumber(input, field, true); // blank item means zero
        if (value !== undefined) {
          groupBody[field.name] = value;
        }
      }
      body[group.name] = groupBody;
    }

    return valid ? body : null;
  }

  function markFieldError(input: HTMLInputElement, message: string): void {
    const row = input.closest(".field-row");
    const slot = row?.querySelector(".field-error");
    if (slot) {
      slot.textContent = message;
    }
  }

  function clearFieldErrors(): void {
    if (!form) {
      return;
    }
    for (const slot of Array.from(form.querySelectorAll(".field-error"))) {
      slot.textContent = "";
    }
  }

  async function submit(): Promise<void> {
    if (!active || !form) {
      return;
    }
    const spec = active;
    clearBanner();
    const body = collectBody(spec);
    if (body === null) {
      return;
    }
    controller?.abort();
    const myController = new AbortController();
    controller = myController;
    try {
      const payload = await postJson<Record<string, unknown>>(
        fetchFn, baseUrl + spec.endpoint, body, myController.signal);
      if (controller !== myController) {
        return; // superseded by a newer submission
      }
      showResult(spec, payload, body);
    } catch (err) {
      if (err instanceof RequestCancelled || controller !== myController) {
        return;
      }
      if (err instanceof ApiClientError) {
        showDialog(ERROR_DIALOG_TITLES[err.error.code] ?? "Error",
                   err.error.message);
        return;
      }
      showBanner(err instanceof Error ? err.message : String(err));
    } finally {
      if (controller === myController) {
        controller = null;
      }
    }
  }

  function showResult(spec: CalculatorSpec, payload: Record<string, unknown>,
                      requestBody: Record<string, unknown>): void {
    if (!form || !resultPanel) {
      return;
    }
    resultPanel.innerHTML = "";
    resultPanel.append(renderResult(spec, payload, requestBody));
    const back = el("button", "back-button", "Back") as HTMLButtonElement;
    back.type = "button";
    back.addEventListener("click", () => {
      if (form && resultPanel) {
        resultPanel.hidden = true;
        form.hidden = false; // inputs kept as entered
      }
    });
    resultPanel.append(back);
    form.hidden = true;
    resultPanel.hidden = false;
  }

  function renderResult(spec: CalculatorSpec, payload: Record<string, unknown>,
                        requestBody: Record<string, unknown>): HTMLElement {
    switch (spec.id) {
      case "loan":
        return renderLoan(payload as unknown as LoanResult);
      case "pension":
        return renderPension(payload as unknown as PensionResult);
      case "zakat":
        return renderZakat(payload as unknown as ZakatResult);
      case "tax":
      default:
        return renderTax(payload as unknown as TaxResult, requestBody);
    }
  }

  function showDialog(title: string, message: string): void {
    closeDialog();
    const backdrop = el("div", "dialog-backdrop");
    const dialog = el("div", "dialog");
    dialog.setAttribute("role", "dialog");
    dialog.append(el("h2", "dialog-title", title));
    dialog.append(el("p", "dialog-message", message));
    const ok = el("button", "dialog-ok", "Ok") as HTMLButtonElement;
    ok.type = "button";
    ok.addEventListener("click", closeDialog);
    dialog.append(ok);
    backdrop.append(dialog);
    root.append(backdrop);
  }

  function closeDialog(): void {
    root.querySelector(".dialog-backdrop")?.remove();
  }

  function showBanner(message: string): void {
    clearBanner();
    const banner = el("div", "error-banner");
    banner.append(el("span", "error-banner-message",
                     `Request failed: ${message}`));
    const retry = el("button", "error-banner-retry", "Retry") as HTMLButtonElement;
    retry.type = "button";
    retry.addEventListener("click", () => {
      void submit();
    });
    banner.append(retry);
    root.append(banner);
  }

  function clearBanner(): void {
    root.querySelector(".error-banner")?.remove();
  }

  renderMenu();

  if (typeof window !== "undefined" && "addEventListener" in window) {
    window.addEventListener("hashchange", () => {
      navigate(routeFromHash(window.location.hash));
    });
    const initial = routeFromHash(window.location.hash);
    if (initial) {
      navigate(initial);
    }
  }

  return {
    root,
    navigate,
    submit,
    activeCalculator: () => (active ? active.id : null),
  };
}

function routeFromHash(hash: string): string {
  return hash.replace(/^#\/?/, "");
}

function el(tag: string, className: string, text?: string): HTMLElement {
  const element = document.createElement(tag);
  element.className = className;
  if (text !== undefined) {
    element.textContent = text;
  }
  return element;
}

function resultRow(field: string, label: string, value: string): HTMLElement {
  const row = el("div", "result-row");
  row.dataset.field = field;
  row.append(el("span", "label", label));
  row.append(el("span", "value", value));
  return row;
}

function renderLoan(result: LoanResult): HTMLElement {
  const panel = el("div", "result-body");
  panel.append(resultRow("monthly_payment", "Monthly payment Amount",
                         result.display.monthly_payment));
  panel.append(resultRow("yearly_payment", "Yearly payment Amount",
                         result.display.yearly_payment));
  return panel;
}

function renderTax(result: TaxResult,
                   requestBody: Record<string, unknown>): HTMLElement {
  const panel = el("div", "result-body");
  const d = result.display;
  panel.append(resultRow("annual_salary", "Your Annual Salary", d.annual_salary));
  panel.append(resultRow("take_home_monthly", "Your Take Home Salary",
                         d.take_home_monthly));
  panel.append(resultRow("gross_annual_tax", "Gross Annual Tax", d.gross_annual_tax));
  if (result.teacher_exemption !== 0) {
    panel.append(resultRow("teacher_exemption", "Teacher Exemption",
                           d.teacher_exemption));
  }
  panel.append(resultRow("net_tax_after_exemption", "Net Tax After Exemption",
                         d.net_tax_after_exemption));
  if ("already_paid" in requestBody) {
    panel.append(resultRow("total_already_paid", "Your Total Already Paid Tax",
                           d.total_already_paid));
  }
  panel.append(resultRow("annual_tax_payable", "Your Annual Tax",
                         d.annual_tax_payable));
  if (result.overpaid) {
    panel.append(el("p", "overpaid-note",
                    "Already paid tax exceeds the liability."));
  }
  return panel;
}

function renderPension(result: PensionResult): HTMLElement {
  const panel = el("div", "result-body");
  const d = result.display;
  panel.append(resultRow("creditable_service", "Creditable Service",
                         d.creditable_service));
  panel.append(resultRow("gross_pension", "Gross Pension", d.gross_pension));
  panel.append(resultRow("commuted_portion", "Commuted Portion", d.commuted_portion));
  panel.append(resultRow("net_pension", "Net pension", d.net_pension));
  panel.append(resultRow("total_gratuity", "Total Gratuity", d.total_gratuity));
  result.increases.forEach((increase, index) => {
    panel.append(resultRow(`increase_${increase.label}`, increase.label,
                           d.increases[index]));
  });
  panel.append(resultRow("medical_allowance", "Medical Allowance",
                         d.medical_allowance));
  panel.append(resultRow("total_pension_per_month", "Total pension per month",
                         d.total_pension_per_month));
  for (const advisory of result.advisories) {
    panel.append(el("p", "advisory", advisory));
  }
  return panel;
}

function renderZakat(result: ZakatResult): HTMLElement {
  const panel = el("div", "result-body");
  for (const [category, display] of Object.entries(result.display.counted)) {
    const label = category.charAt(0).toUpperCase() + category.slice(1);
    panel.append(resultRow(`counted_${category}`, label, display));
  }
  for (const notice of result.notices) {
    const line = el("p", "zakat-notice", notice.message);
    line.dataset.category = notice.category;
    panel.append(line);
  }
  panel.append(resultRow("total_assets", "Total assets", result.display.total_assets));
  panel.append(resultRow("zakat_due", "Zakat due", result.display.zakat_due));
  return panel;
}

declare global {
  interface Window {
    __finstudioApp?: AppHandle;
  }
}

if (typeof document !== "undefined") {
  const mountPoint = document.getElementById("app");
  if (mountPoint) {
    window.__finstudioApp = initApp(mountPoint);
  }
}
