// Closeness table with per-criterion contribution bars, a disqualification
// strip, the pattern list, and the what-if drawer (old/new ranks side by
// side from a second /recommend call).

import type { AppStore } from "../store.js";
import { LEVEL_LABELS, LEVEL_NAMES, type PreferenceLevelLabel } from "../types.js";

export function renderRankingView(root: HTMLElement, store: AppStore): void {
  root.replaceChildren();

  const heading = document.createElement("h2");
  heading.textContent = "Ranking";
  root.appendChild(heading);

  const ranking = store.visibleRanking();
  if (store.hasErrorConflicts()) {
    const note = document.createElement("p");
    note.className = "banner-error";
    note.textContent = "Ranking withheld while error-severity conflicts exist.";
    root.appendChild(note);
    return;
  }
  if (!ranking) {
    const note = document.createElement("p");
    note.textContent = "No recommendation yet.";
    root.appendChild(note);
    return;
  }

  const table = document.createElement("table");
  table.className = "ranking";
  const head = document.createElement("tr");
  for (const label of ["#", "blockchain", "closeness", "contributions"]) {
    const cell = document.createElement("th");
    cell.textContent = label;
    head.appendChild(cell);
  }
  table.appendChild(head);

  const maxWeighted = Math.max(
    1e-12,
    ...ranking.entries.flatMap((entry) =>
      Object.values(entry.per_criterion_contribution).map((c) => c.weighted_value),
    ),
  );

  ranking.entries.forEach((entry, index) => {
    const row = document.createElement("tr");
    row.dataset.blockchain = entry.blockchain_id;

    const rank = document.createElement("td");
    rank.textContent = String(index + 1);
    row.appendChild(rank);

    const name = document.createElement("td");
    name.textContent = entry.blockchain_id;
    row.appendChild(name);

    const closeness = document.createElement("td");
    closeness.textContent = entry.closeness.toFixed(4);
    row.appendChild(closeness);

    const bars = document.createElement("td");
    bars.className = "bars";
    for (const [attributeId, contribution] of Object.entries(entry.per_criterion_contribution)) {
      const bar = document.createElement("div");
      bar.className = "bar";
      bar.title = `${attributeId}: ${contribution.weighted_value.toFixed(4)} ` +
        `(gap to ideal ${contribution.ideal_gap.toFixed(4)})`;
      bar.style.width = `${Math.round((contribution.weighted_value / maxWeighted) * 100)}px`;
      bar.textContent = attributeId;
      bars.appendChild(bar);
    }
    row.appendChild(bars);
    table.appendChild(row);
  });
  root.appendChild(table);

  if (ranking.disqualified.length > 0) {
    const strip = document.createElement("ul");
    strip.className = "disqualified";
    for (const record of ranking.disqualified) {
      const item = document.createElement("li");
      item.textContent =
        `${record.blockchain_id}: ${record.attribute_id} scores ${record.actual_score}, ` +
        `required at least ${record.min_level}`;
      strip.appendChild(item);
    }
    root.appendChild(strip);
  }

  if (store.report?.patterns) {
    const patterns = document.createElement("ul");
    patterns.className = "patterns";
    for (const pattern of store.report.patterns) {
      const item = document.createElement("li");
      if (pattern.excluded_reason !== undefined) {
        item.textContent = `${pattern.pattern_id}: excluded (${pattern.excluded_reason})`;
        item.classList.add("excluded");
      } else {
        const conflictNote = pattern.conflicts_with?.length
          ? ` [conflicts with ${pattern.conflicts_with.join(", ")}]`
          : "";
        item.textContent = `${pattern.pattern_id}: score ${pattern.score}${conflictNote}`;
      }
      patterns.appendChild(item);
    }
    root.appendChild(patterns);
  }

  renderWhatIfDrawer(root, store);
}

function renderWhatIfDrawer(root: HTMLElement, store: AppStore): void {
  const drawer = document.createElement("section");
  drawer.className = "whatif";

  if (!store.whatIf) {
    const open = document.createElement("button");
    open.id = "whatif-open";
    open.textContent = "What if...";
    open.addEventListener("click", () => store.openWhatIf());
    drawer.appendChild(open);
    root.appendChild(drawer);
    return;
  }

  const heading = document.createElement("h3");
  heading.textContent = "What-if comparison";
  drawer.appendChild(heading);

  for (const attribute of store.attributes) {
    const current = store.whatIf.profile.get(attribute.id);
    const row = document.createElement("div");
    row.className = "whatif-row";
    const label = document.createElement("span");
    label.textContent = attribute.name;
    row.appendChild(label);
    const select = document.createElement("select");
    select.dataset.attribute = attribute.id;
    for (const levelLabel of LEVEL_LABELS) {
      const option = document.createElement("option");
      option.value = levelLabel;
      option.textContent = LEVEL_NAMES[levelLabel];
      option.selected = (current?.level ?? "indifferent") === levelLabel;
      select.appendChild(option);
    }
    select.addEventListener("change", () => {
      void store.whatIfSetLevel(attribute.id, select.value as PreferenceLevelLabel);
    });
    row.appendChild(select);
    drawer.appendChild(row);
  }

  const deltas = document.createElement("table");
  deltas.className = "deltas";
  const head = document.createElement("tr");
  for (const label of ["blockchain", "old rank", "new rank", "delta", "closeness"]) {
    const cell = document.createElement("th");
    cell.textContent = label;
    head.appendChild(cell);
  }
  deltas.appendChild(head);
  for (const delta of store.whatIf.deltas) {
    const row = document.createElement("tr");
    row.dataset.blockchain = delta.blockchain_id;
    const cells = [
      delta.blockchain_id,
      delta.baseRank === null ? "-" : String(delta.baseRank),
      String(delta.newRank),
      delta.delta === null ? "new" : delta.delta > 0 ? `+${delta.delta}` : String(delta.delta),
      delta.closeness.toFixed(4),
    ];
    for (const text of cells) {
      const cell = document.createElement("td");
      cell.textContent = text;
      row.appendChild(cell);
    }
    deltas.appendChild(row);
  }
  drawer.appendChild(deltas);

  const close = document.createElement("button");
  close.id = "whatif-close";
  close.textContent = "Close";
  close.addEventListener("click", () => store.closeWhatIf());
  drawer.appendChild(close);

  root.appendChild(drawer);
}
