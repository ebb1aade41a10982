// Secondary acceptance: live dependency feedback with a mocked gateway.
// Setting immutability=Required disables modifiability within one round
// trip and re-enables it on toggle-off; out-of-order responses never
// regress the displayed state.

import { beforeEach, describe, expect, it } from "vitest";

import { GatewayClient } from "../src/api.js";
import { AppStore } from "../src/store.js";
import { renderRequirementEditor } from "../src/views/requirementEditor.js";
import {
  ATTRIBUTES,
  ERROR_CONFLICT,
  flush,
  MockGateway,
  MODIFIABILITY_BLOCKED,
  NO_CONFLICTS,
  NOTHING_BLOCKED,
} from "./mockGateway.js";

describe("live dependency feedback", () => {
  let gateway: MockGateway;
  let store: AppStore;

  beforeEach(() => {
    gateway = new MockGateway();
    store = new AppStore(new GatewayClient(gateway.fetch));
    store.attributes = ATTRIBUTES;
  });

  it("disables modifiability within one round trip of requiring immutability", async () => {
    const edit = store.setRequired("immutability", true);
    await flush();
    expect(gateway.callsTo("/api/conflicts")).toBe(1);
    expect(gateway.callsTo("/api/blocked")).toBe(1);

    gateway.respondTo("/api/conflicts", NO_CONFLICTS);
    gateway.respondTo("/api/blocked", MODIFIABILITY_BLOCKED);
    await edit; // the single round trip completes

    expect(store.isBlocked("modifiability")).toBe(true);
    expect(store.blockedExplanations("modifiability")).toEqual([
      "A ledger cannot be both tamper-proof and easy to change.",
    ]);
    expect(store.validationStale).toBe(false);
  });

  it("renders the blocked attribute disabled with the rule explanation", async () => {
    const edit = store.setRequired("immutability", true);
    await flush();
    gateway.respondTo("/api/conflicts", NO_CONFLICTS);
    gateway.respondTo("/api/blocked", MODIFIABILITY_BLOCKED);
    await edit;

    const root = document.createElement("div");
    renderRequirementEditor(root, store);
    const row = root.querySelector('tr[data-attribute="modifiability"]') as HTMLElement;
    expect(row.classList.contains("blocked")).toBe(true);
    expect((row.querySelector("select") as HTMLSelectElement).disabled).toBe(true);
    expect(row.querySelector(".block-note")?.textContent).toContain("tamper-proof");

    const untouched = root.querySelector('tr[data-attribute="latency"] select') as HTMLSelectElement;
    expect(untouched.disabled).toBe(false);
  });

  it("re-enables modifiability when the requirement is toggled off", async () => {
    const on = store.setRequired("immutability", true);
    await flush();
    gateway.respondTo("/api/conflicts", NO_CONFLICTS);
    gateway.respondTo("/api/blocked", MODIFIABILITY_BLOCKED);
    await on;
    expect(store.isBlocked("modifiability")).toBe(true);

    const off = store.setRequired("immutability", false);
    await flush();
    gateway.respondTo("/api/conflicts", NO_CONFLICTS);
    gateway.respondTo("/api/blocked", NOTHING_BLOCKED);
    await off;
    expect(store.isBlocked("modifiability")).toBe(false);

    const root = document.createElement("div");
    renderRequirementEditor(root, store);
    const select = root.querySelector('tr[data-attribute="modifiability"] select') as HTMLSelectElement;
    expect(select.disabled).toBe(false);
  });

  it("discards out-of-order responses instead of regressing state", async () => {
    // edit 1: require immutability; edit 2: toggle it off again
    const first = store.setRequired("immutability", true);
    await flush();
    const second = store.setRequired("immutability", false);
    await flush();
    expect(gateway.callsTo("/api/blocked")).toBe(2);

    // newer responses land first
    gateway.respondTo("/api/conflicts", NO_CONFLICTS, 200, 1);
    gateway.respondTo("/api/blocked", NOTHING_BLOCKED, 200, 1);
    await flush();
    expect(store.isBlocked("modifiability")).toBe(false);

    // the stale responses from edit 1 arrive late and must be ignored
    gateway.respondTo("/api/conflicts", ERROR_CONFLICT, 200, 0);
    gateway.respondTo("/api/blocked", MODIFIABILITY_BLOCKED, 200, 0);
    await Promise.all([first, second]);

    expect(store.isBlocked("modifiability")).toBe(false);
    expect(store.conflicts.violations).toEqual([]);
    expect(store.validationStale).toBe(false);
  });

  it("marks validation stale and keeps editing on network failure", async () => {
    const failing = new MockGateway();
    const offlineStore = new AppStore(
      new GatewayClient(() => Promise.reject(new TypeError("network down"))),
    );
    offlineStore.attributes = ATTRIBUTES;
    await offlineStore.setLevel("latency", "desirable");
    expect(offlineStore.offline).toBe(true);
    expect(offlineStore.draft("latency").level).toBe("desirable"); // local edit kept
    expect(failing.callsTo("/api/conflicts")).toBe(0);
  });
});
