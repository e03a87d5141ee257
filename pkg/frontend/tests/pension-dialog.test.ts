import { describe, expect, it } from "vitest";

import {
  dialogMessage,
  dialogTitle,
  jsonResponse,
  makeFetch,
  mount,
  setValue,
} from "./helpers.js";

describe("pension form", () => {
  it("shows the service dialog verbatim for short qualifying service", async () => {
    const { fetchFn } = makeFetch(() =>
      jsonResponse(400, {
        code: "service_too_short",
        message: "Please Enter >= 10 Years qualifying Service",
        field: "qualifying_service",
      }),
    );
    const handle = mount(fetchFn);
    handle.navigate("pension");

    setValue(handle, "last_basic_pay", "20000");
    setValue(handle, "qualifying_service", "5");
    await handle.submit();

    expect(dialogMessage(handle)).toBe("Please Enter >= 10 Years qualifying Service");
    expect(dialogTitle(handle)).toBe("Incorrect value");

    // the input panel stays up so the user can correct the value
    const form = handle.root.querySelector("form") as HTMLFormElement;
    expect(form.hidden).toBe(false);

    (handle.root.querySelector(".dialog-ok") as HTMLButtonElement).click();
    expect(handle.root.querySelector(".dialog-backdrop")).toBeNull();
  });

  it("renders a full award, increases and advisories included", async () => {
    const award = {
      creditable_service: 30,
      gross_pension: 14000,
      commuted_portion: 1633.3333333333333,
      net_pension: 12366.666666666666,
      total_gratuity: 242489.24,
      increases: [
        { label: "AR2010", amount: 1855 },
        { label: "AR2011", amount: 1855 },
        { label: "AR2012", amount: 2473.33 },
        { label: "AR2013", amount: 1855 },
        { label: "AR2014", amount: 1236.67 },
        { label: "AR2015", amount: 1236.67 },
      ],
      medical_allowance: 3091.67,
      total_pension_per_month: 25970,
      advisories: ["Age at retirement is 65 years; the usual superannuation age is 60"],
      display: {
        creditable_service: "30.00",
        gross_pension: "14000.00",
        commuted_portion: "1633.33",
        net_pension: "12366.67",
        total_gratuity: "242489.24",
        medical_allowance: "3091.67",
        total_pension_per_month: "25970.00",
        increases: ["1855.00", "1855.00", "2473.33", "1855.00", "1236.67", "1236.67"],
      },
    };
    const { fetchFn } = makeFetch(() => jsonResponse(200, award));
    const handle = mount(fetchFn);
    handle.navigate("pension");

    setValue(handle, "last_basic_pay", "20000");
    setValue(handle, "qualifying_service", "30");
    await handle.submit();

    const values = Array.from(
      handle.root.querySelectorAll(".result-row .value"),
      (node) => node.textContent,
    );
    expect(values).toEqual([
      "30.00", "14000.00", "1633.33", "12366.67", "242489.24",
      "1855.00", "1855.00", "2473.33", "1855.00", "1236.67", "1236.67",
      "3091.67", "25970.00",
    ]);
    const advisory = handle.root.querySelector(".advisory") as HTMLElement;
    expect(advisory.textContent).toContain("65 years");
  });
});
