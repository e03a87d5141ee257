import { describe, expect, it } from "vitest";

import { jsonResponse, makeFetch, mount, setChecked } from "./helpers.js";

describe("menu and routing", () => {
  it("shows a four-way menu mirroring the calculator set", () => {
    const { fetchFn } = makeFetch(() => jsonResponse(200, {}));
    const handle = mount(fetchFn);
    const buttons = Array.from(
      handle.root.querySelectorAll(".menu-button"),
      (node) => node.textContent,
    );
    expect(buttons).toEqual([
      "Tax Calculator",
      "Pension Calculator",
      "Zakat Calculator",
      "Loan Calculator",
    ]);
  });

  it("navigates to each calculator form and back to the menu", () => {
    const { fetchFn } = makeFetch(() => jsonResponse(200, {}));
    const handle = mount(fetchFn);
    for (const id of ["tax", "pension", "zakat", "loan"]) {
      handle.navigate(id);
      expect(handle.activeCalculator()).toBe(id);
      expect(handle.root.querySelector("form")).not.toBeNull();
    }
    handle.navigate("");
    expect(handle.activeCalculator()).toBeNull();
    expect(handle.root.querySelector(".menu")).not.toBeNull();
  });

  it("zakat form exposes all five category toggles, collapsed by default", () => {
    const { fetchFn } = makeFetch(() => jsonResponse(200, {}));
    const handle = mount(fetchFn);
    handle.navigate("zakat");
    const groups = Array.from(
      handle.root.querySelectorAll(".group-block"),
      (node) => (node as HTMLElement).dataset.group,
    );
    expect(groups).toEqual(["gold", "silver", "cash", "business", "property"]);
    for (const group of groups) {
      const fields = handle.root.querySelector(
        `[data-group="${group}"] .group-fields`) as HTMLElement;
      expect(fields.hidden).toBe(true);
    }
    setChecked(handle, "gold", true);
    const goldFields = handle.root.querySelector(
      '[data-group="gold"] .group-fields') as HTMLElement;
    expect(goldFields.hidden).toBe(false);
  });

  it("sends only the toggled zakat categories", async () => {
    const result = {
      counted: { gold: 500000, silver: 0, cash: 0, business: 0, property: 0 },
      notices: [],
      total_assets: 500000,
      zakat_due: 12500,
      display: {
        counted: {
          gold: "500000.00", silver: "0.00", cash: "0.00",
          business: "0.00", property: "0.00",
        },
        total_assets: "500000.00",
        zakat_due: "12500.00",
      },
    };
    const { fetchFn, calls } = makeFetch(() => jsonResponse(200, result));
    const handle = mount(fetchFn);
    handle.navigate("zakat");
    setChecked(handle, "gold", true);
    const weight = handle.root.querySelector(
      'input[name="gold.weight"]') as HTMLInputElement;
    weight.value = "10";
    const price = handle.root.querySelector(
      'input[name="gold.price_per_tola"]') as HTMLInputElement;
    price.value = "50000";
    await handle.submit();

    expect(calls[0].body).toEqual({ gold: { weight: 10, price_per_tola: 50000 } });
    const notice = handle.root.querySelector(".zakat-notice");
    expect(notice).toBeNull();
  });

  it("renders zakat notices verbatim", async () => {
    const result = {
      counted: { gold: 0, silver: 0, cash: 0, business: 0, property: 0 },
      notices: [{
        category: "silver",
        message: "The total weight & Price of Silver is less than nisab for zakat deduction",
      }],
      total_assets: 0,
      zakat_due: 0,
      display: {
        counted: {
          gold: "0.00", silver: "0.00", cash: "0.00",
          business: "0.00", property: "0.00",
        },
        total_assets: "0.00",
        zakat_due: "0.00",
      },
    };
    const { fetchFn } = makeFetch(() => jsonResponse(200, result));
    const handle = mount(fetchFn);
    handle.navigate("zakat");
    setChecked(handle, "silver", true);
    await handle.submit();

    const notice = handle.root.querySelector(".zakat-notice") as HTMLElement;
    expect(notice.textContent).toBe(
      "The total weight & Price of Silver is less than nisab for zakat deduction");
    expect(notice.dataset.category).toBe("silver");
  });
});
