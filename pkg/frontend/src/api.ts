/**
 * Typed client for the calculation service.
 *
 * The UI performs no financial arithmetic: every number it shows comes
 * from a response's `display` block verbatim.
 */

export interface ApiError {
  code: string;
  message: string;
  field: string | null;
}

/** Closed set of machine codes the service can return. */
export const KNOWN_ERROR_CODES = [
  "invalid_input",
  "service_too_short",
  "not_a_number",
  "empty_input",
  "no_categories",
  "unknown_ruleset",
] as const;

export interface TaxResult {
  annual_salary: number;
  take_home_monthly: number;
  gross_annual_tax: number;
  teacher_exemption: number;
  net_tax_after_exemption: number;
  total_already_paid: number;
  annual_tax_payable: number;
  overpaid: boolean;
  display: Record<string, string>;
}

export interface PensionResult {
  creditable_service: number;
  gross_pension: number;
  commuted_portion: number;
  net_pension: number;
  total_gratuity: number;
  increases: { label: string; amount: number }[];
  medical_allowance: number;
  total_pension_per_month: number;
  advisories: string[];
  display: {
    creditable_service: string;
    gross_pension: string;
    commuted_portion: string;
    net_pension: string;
    total_gratuity: string;
    medical_allowance: string;
    total_pension_per_month: string;
    increases: string[];
  };
}

export interface ZakatResult {
  counted: Record<string, number>;
  notices: { category: string; message: string }[];
  total_assets: number;
  zakat_due: number;
  display: {
    counted: Record<string, string>;
    total_assets: string;
    zakat_due: string;
  };
}

export interface LoanResult {
  monthly_payment: number;
  yearly_payment: number;
  display: { monthly_payment: string; yearly_payment: string };
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

/** Service rejected the input; carries the ApiError payload verbatim. */
export class ApiClientError extends Error {
  constructor(readonly error: ApiError) {
    super(error.message);
    this.name = "ApiClientError";
  }
}

/** Transport-level failure (connection refused, unexpected status...). */
export class NetworkError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "NetworkError";
  }
}

/** The request was superseded by a newer submission. */
export class RequestCancelled extends Error {
  constructor() {
    super("request cancelled");
    this.name = "RequestCancelled";
  }
}

function isApiError(payload: unknown): payload is ApiError {
  return (
    typeof payload === "object" &&
    payload !== null &&
    typeof (payload as ApiError).code === "string" &&
    typeof (payload as ApiError).message === "string"
  );
}

export async function postJson<T>(
  fetchFn: FetchLike,
  url: string,
  body: unknown,
  signal?: AbortSignal,
): Promise<T> {
  let response: Response;
  try {
    response = await fetchFn(url, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
      signal,
    });
  } catch (err) {
    if (err instanceof Error && err.name === "AbortError") {
      throw new RequestCancelled();
    }
    throw new NetworkError(err instanceof Error ? err.message : String(err));
  }
  if (!response.ok) {
    let payload: unknown = null;
    try {
      payload = await response.json();
    } catch {
      // non-JSON error body; fall through to NetworkError
    }
    if (isApiError(payload)) {
      throw new ApiClientError(payload);
    }
    throw new NetworkError(`unexpected response ${response.status}`);
  }
  return (await response.json()) as T;
}
