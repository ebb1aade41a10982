// One row per catalog attribute: level selector, Required toggle, min-level
// picker. Blocked attributes render disabled with the rule explanations,
// mirroring the /blocked response exactly.

import type { AppStore } from "../store.js";
import { LEVEL_LABELS, LEVEL_NAMES, type PreferenceLevelLabel } from "../types.js";

export function renderRequirementEditor(root: HTMLElement, store: AppStore): void {
  root.replaceChildren();

  const heading = document.createElement("h2");
  heading.textContent = "Requirements";
  root.appendChild(heading);

  const status = document.createElement("p");
  status.className = "validation-status";
  if (store.offline) {
    status.textContent = "Server unreachable: validation is stale, editing continues locally.";
    status.classList.add("banner-error");
  } else if (store.validationStale) {
    status.textContent = "Validating...";
  } else {
    status.textContent = " ";
  }
  root.appendChild(status);

  const table = document.createElement("table");
  table.className = "requirements";
  for (const attribute of store.attributes) {
    const row = document.createElement("tr");
    row.dataset.attribute = attribute.id;
    const blocked = store.isBlocked(attribute.id);
    if (blocked) row.classList.add("blocked");

    const name = document.createElement("td");
    name.textContent = attribute.name;
    name.title = attribute.description;
    row.appendChild(name);

    const levelCell = document.createElement("td");
    const select = document.createElement("select");
    select.disabled = blocked;
    for (const label of LEVEL_LABELS) {
      const option = document.createElement("option");
      option.value = label;
      option.textContent = LEVEL_NAMES[label];
      option.selected = store.draft(attribute.id).level === label;
      select.appendChild(option);
    }
    select.addEventListener("change", () => {
      void store.setLevel(attribute.id, select.value as PreferenceLevelLabel);
    });
    levelCell.appendChild(select);
    row.appendChild(levelCell);

    const requiredCell = document.createElement("td");
    const toggle = document.createElement("input");
    toggle.type = "checkbox";
    toggle.checked = store.draft(attribute.id).required;
    toggle.disabled = blocked;
    toggle.addEventListener("change", () => {
      void store.setRequired(attribute.id, toggle.checked);
    });
    requiredCell.appendChild(toggle);
    const minLevel = document.createElement("input");
    minLevel.type = "number";
    minLevel.min = String(attribute.scale_min);
    minLevel.max = String(attribute.scale_max);
    minLevel.value = String(store.draft(attribute.id).minLevel);
    minLevel.disabled = blocked || !store.draft(attribute.id).required;
    minLevel.addEventListener("change", () => {
      void store.setRequired(attribute.id, true, Number(minLevel.value));
    });
    requiredCell.appendChild(minLevel);
    row.appendChild(requiredCell);

    const noteCell = document.createElement("td");
    noteCell.className = "block-note";
    if (blocked) {
      noteCell.textContent = store.blockedExplanations(attribute.id).join(" ");
    }
    row.appendChild(noteCell);

    table.appendChild(row);
  }
  root.appendChild(table);

  const conflictList = document.createElement("ul");
  conflictList.className = "conflicts";
  for (const violation of store.conflicts.violations) {
    const item = document.createElement("li");
    item.className = `conflict-${violation.severity}`;
    item.textContent =
      `${violation.severity}: ${violation.rule.left} vs ${violation.rule.right} - ${violation.rule.explanation}`;
    conflictList.appendChild(item);
  }
  root.appendChild(conflictList);

  const recommendButton = document.createElement("button");
  recommendButton.id = "recommend";
  recommendButton.textContent = "Recommend";
  recommendButton.disabled = !store.hasActiveCriteria() || store.hasErrorConflicts();
  if (!store.hasActiveCriteria()) recommendButton.title = "no active criteria";
  if (store.hasErrorConflicts()) recommendButton.title = "resolve error conflicts first";
  recommendButton.addEventListener("click", () => void store.recommend());
  root.appendChild(recommendButton);
}
