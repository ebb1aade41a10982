// Tri-state feature tree with preselection, propagation on every click,
// and generation with manifest table + archive download.

import type { AppStore } from "../store.js";
import type { FeatureNode } from "../types.js";

export function renderConfiguratorView(root: HTMLElement, store: AppStore): void {
  root.replaceChildren();

  const heading = document.createElement("h2");
  heading.textContent = "Configuration";
  root.appendChild(heading);

  const apply = document.createElement("button");
  apply.id = "apply-recommendation";
  apply.textContent = "Apply recommendation";
  apply.disabled = store.report?.ranking == null;
  apply.addEventListener("click", () => void store.applyRecommendation());
  root.appendChild(apply);

  if (store.lastRejection) {
    const banner = document.createElement("p");
    banner.className = "banner-error";
    banner.id = "click-rejection";
    banner.textContent = `Rejected: ${store.lastRejection}`;
    root.appendChild(banner);
  }

  const model = store.featureModel;
  if (!model) {
    const note = document.createElement("p");
    note.textContent = "Feature model not loaded.";
    root.appendChild(note);
    return;
  }

  const childrenOf = new Map<string, FeatureNode[]>();
  let rootFeature: FeatureNode | null = null;
  for (const feature of model.features) {
    if (feature.parent === null) {
      rootFeature = feature;
    } else {
      const siblings = childrenOf.get(feature.parent) ?? [];
      siblings.push(feature);
      childrenOf.set(feature.parent, siblings);
    }
  }
  if (rootFeature) {
    root.appendChild(renderNode(rootFeature, childrenOf, store));
  }

  const generateRow = document.createElement("div");
  generateRow.className = "generate-row";
  const project = document.createElement("input");
  project.id = "var-project";
  project.placeholder = "project name";
  project.value = "demo";
  generateRow.appendChild(project);
  const nodes = document.createElement("input");
  nodes.id = "var-node-count";
  nodes.placeholder = "node count";
  nodes.value = "3";
  generateRow.appendChild(nodes);
  const generate = document.createElement("button");
  generate.id = "generate";
  generate.textContent = "Generate";
  generate.disabled = !store.configurationComplete();
  generate.addEventListener("click", () =>
    void store.generate({ project: project.value, "node-count": nodes.value }),
  );
  generateRow.appendChild(generate);
  root.appendChild(generateRow);

  if (store.generation) {
    const manifest = store.generation.manifest;
    const table = document.createElement("table");
    table.className = "manifest";
    const head = document.createElement("tr");
    for (const label of ["path", "bytes", "sha256"]) {
      const cell = document.createElement("th");
      cell.textContent = label;
      head.appendChild(cell);
    }
    table.appendChild(head);
    for (const entry of manifest.entries) {
      const row = document.createElement("tr");
      for (const text of [entry.path, String(entry.bytes), entry.sha256.slice(0, 12)]) {
        const cell = document.createElement("td");
        cell.textContent = text;
        row.appendChild(cell);
      }
      table.appendChild(row);
    }
    root.appendChild(table);

    const download = document.createElement("a");
    download.id = "download-archive";
    download.textContent = "Download product archive";
    download.download = "product.zip";
    download.href = `data:application/zip;base64,${store.generation.archive_base64}`;
    root.appendChild(download);
  }
}

function renderNode(
  feature: FeatureNode,
  childrenOf: Map<string, FeatureNode[]>,
  store: AppStore,
): HTMLElement {
  const container = document.createElement("div");
  container.className = "feature-node";

  const button = document.createElement("button");
  button.className = `feature tri-${store.featureState(feature.id)}`;
  button.dataset.feature = feature.id;
  const marker = { selected: "[x]", deselected: "[-]", open: "[ ]" }[store.featureState(feature.id)];
  const groupNote = feature.group === "none" ? "" : ` (${feature.group})`;
  button.textContent = `${marker} ${feature.name}${groupNote}`;
  button.addEventListener("click", () => void store.clickFeature(feature.id));
  container.appendChild(button);

  const children = childrenOf.get(feature.id) ?? [];
  if (children.length > 0) {
    const list = document.createElement("div");
    list.className = "feature-children";
    for (const child of children) {
      list.appendChild(renderNode(child, childrenOf, store));
    }
    container.appendChild(list);
  }
  return container;
}
