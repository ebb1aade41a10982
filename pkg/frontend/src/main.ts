// Entry point: wire the store to the three views and re-render on change.

import { GatewayClient } from "./api.js";
import { AppStore } from "./store.js";
import { renderConfiguratorView } from "./views/configuratorView.js";
import { renderRankingView } from "./views/rankingView.js";
import { renderRequirementEditor } from "./views/requirementEditor.js";

const client = new GatewayClient((url, init) => fetch(url, init));
const store = new AppStore(client);

function renderAll(): void {
  const editor = document.getElementById("editor");
  const ranking = document.getElementById("ranking");
  const configurator = document.getElementById("configurator");
  if (editor) renderRequirementEditor(editor, store);
  if (ranking) renderRankingView(ranking, store);
  if (configurator) renderConfiguratorView(configurator, store);
  const banner = document.getElementById("banner");
  if (banner) {
    banner.textContent = store.errorBanner ?? "";
    banner.hidden = store.errorBanner === null;
  }
}

store.subscribe(renderAll);
void store.bootstrap().then(renderAll);
