import { AppHandle, initApp } from "../src/app.js";
import { FetchLike } from "../src/api.js";

export interface RecordedCall {
  url: string;
  body: unknown;
  init: RequestInit;
}

export interface FetchStub {
  fetchFn: FetchLike;
  calls: RecordedCall[];
}

/** Fetch stub that records every call and answers via ``handler``. */
export function makeFetch(
  handler: (call: RecordedCall, index: number) => Response | Promise<Response>,
): FetchStub {
  const calls: RecordedCall[] = [];
  const fetchFn: FetchLike = async (url, init) => {
    const call: RecordedCall = {
      url,
      body: init?.body ? JSON.parse(init.body as string) : null,
      init: init ?? {},
    };
    calls.push(call);
    return handler(call, calls.length - 1);
  };
  return { fetchFn, calls };
}

export function jsonResponse(status: number, payload: unknown): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { "content-type": "application/json" },
  });
}

export function mount(fetchFn: FetchLike): AppHandle {
  document.body.innerHTML = '<div id="root"></div>';
  const root = document.getElementById("root") as HTMLElement;
  return initApp(root, { fetchFn });
}

export function setValue(handle: AppHandle, name: string, value: string): void {
  const input = handle.root.querySelector(
    `input[name="${name}"]`) as HTMLInputElement | null;
  if (!input) {
    throw new Error(`no input named ${name}`);
  }
  input.value = value;
}

export function setChecked(handle: AppHandle, name: string, checked: boolean): void {
  const input = handle.root.querySelector(
    `input[name="${name}"], input[data-toggle="${name}"]`,
  ) as HTMLInputElement | null;
  if (!input) {
    throw new Error(`no checkbox named ${name}`);
  }
  input.checked = checked;
  input.dispatchEvent(new Event("change"));
}

export function resultValue(handle: AppHandle, field: string): string | null {
  const slot = handle.root.querySelector(`[data-field="${field}"] .value`);
  return slot ? slot.textContent : null;
}

export function dialogMessage(handle: AppHandle): string | null {
  const slot = handle.root.querySelector(".dialog-message");
  return slot ? slot.textContent : null;
}

export function dialogTitle(handle: AppHandle): string | null {
  const slot = handle.root.querySelector(".dialog-title");
  return slot ? slot.textContent : null;
}
