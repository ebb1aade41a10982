// Configurator behavior: preselection, tri-state clicks with server-side
// propagation, contradiction rejection, and generation results.

import { beforeEach, describe, expect, it } from "vitest";

import { GatewayClient } from "../src/api.js";
import { AppStore } from "../src/store.js";
import { renderConfiguratorView } from "../src/views/configuratorView.js";
import { ATTRIBUTES, BASE_REPORT, FEATURE_MODEL, MockGateway } from "./mockGateway.js";
import type { ConfigurationDoc } from "../src/types.js";

describe("configurator", () => {
  let gateway: MockGateway;
  let store: AppStore;

  beforeEach(async () => {
    gateway = new MockGateway();
    store = new AppStore(new GatewayClient(gateway.fetch));
    store.attributes = ATTRIBUTES;
    store.featureModel = FEATURE_MODEL;
    gateway.answerWith("/api/recommend", BASE_REPORT);
    await store.recommend();
  });

  it("apply recommendation preselects and completes", async () => {
    gateway.answerWith("/api/preselect", {
      selected: ["platform-chain-c"],
      deselected: [],
      open: ["app", "platform", "platform-chain-b", "extras"],
    });
    gateway.answerWith("/api/configure/complete", {
      selected: ["app", "platform", "platform-chain-c"],
      deselected: ["platform-chain-b"],
      open: ["extras"],
    });
    await store.applyRecommendation();
    expect(store.featureState("platform-chain-c")).toBe("selected");
    expect(store.featureState("platform-chain-b")).toBe("deselected");
    expect(store.featureState("extras")).toBe("open");
    expect(gateway.callsTo("/api/preselect")).toBe(1);
    expect(gateway.callsTo("/api/configure/complete")).toBe(1);
  });

  it("every click round-trips through /configure/complete", async () => {
    gateway.answer("/api/configure/complete", (body) => {
      const doc = body as ConfigurationDoc;
      return {
        payload: {
          selected: [...new Set(["app", ...doc.selected])].sort(),
          deselected: doc.deselected,
          open: ["leftover"],
        },
      };
    });
    await store.clickFeature("extras");
    expect(gateway.callsTo("/api/configure/complete")).toBe(1);
    expect(store.featureState("extras")).toBe("selected");

    await store.clickFeature("extras"); // selected -> deselected
    expect(gateway.callsTo("/api/configure/complete")).toBe(2);
    expect(store.featureState("extras")).toBe("deselected");
  });

  it("a contradictory click is rejected and state kept", async () => {
    gateway.answerWith("/api/configure/complete", {
      selected: ["app", "platform", "platform-chain-c"],
      deselected: ["platform-chain-b"],
      open: ["extras"],
    });
    await store.clickFeature("platform-chain-c");
    const before = store.configuration;

    gateway.answerWith(
      "/api/configure/complete",
      { error: { code: "contradiction", message: "propagation forces conflicting decisions on: x", details: {} } },
      422,
    );
    await store.clickFeature("platform-chain-b");
    expect(store.configuration).toEqual(before); // click rejected
    expect(store.lastRejection).toContain("contradiction");

    const root = document.createElement("div");
    renderConfiguratorView(root, store);
    expect(root.querySelector("#click-rejection")?.textContent).toContain("contradiction");
  });

  it("generate stores manifest and archive for download", async () => {
    store.configuration = {
      selected: ["app", "platform", "platform-chain-c"],
      deselected: ["platform-chain-b", "extras"],
      open: [],
    };
    gateway.answerWith("/api/generate", {
      manifest: {
        entries: [{ path: "contracts/demo_app.sol", bytes: 607, sha256: "ab".repeat(32) }],
        config_digest: "cd".repeat(32),
        kb_version: "1.0.0",
      },
      archive_base64: "UEsFBgAAAAAAAAAAAAAAAAAAAAAAAA==",
    });
    await store.generate({ project: "demo", "node-count": "3" });
    expect(store.generation?.manifest.entries[0]?.path).toBe("contracts/demo_app.sol");

    const root = document.createElement("div");
    renderConfiguratorView(root, store);
    expect(root.querySelector("table.manifest")?.textContent).toContain("contracts/demo_app.sol");
    const link = root.querySelector("#download-archive") as HTMLAnchorElement;
    expect(link.href).toContain("base64,UEsFBg");
    // the generate request body carries configuration + variables only
    const call = gateway.calls.find((c) => c.path === "/api/generate");
    expect(Object.keys(call?.body as object).sort()).toEqual(["configuration", "variables"]);
  });

  it("generate button disabled until the configuration is complete", () => {
    store.configuration = { selected: ["app"], deselected: [], open: ["extras"] };
    const root = document.createElement("div");
    renderConfiguratorView(root, store);
    expect((root.querySelector("#generate") as HTMLButtonElement).disabled).toBe(true);

    store.configuration = { selected: ["app"], deselected: ["extras"], open: [] };
    renderConfiguratorView(root, store);
    expect((root.querySelector("#generate") as HTMLButtonElement).disabled).toBe(false);
  });
});
