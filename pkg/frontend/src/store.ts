// Application state and gateway interactions.
//
// Every verdict shown in the UI (conflicts, blocked attributes, rankings,
// validity, manifests) is taken verbatim from a gateway response; this
// module only tracks which response is current. Responses are applied
// under a monotonic sequence rule: each edit bumps a sequence number,
// requests carry the number they were issued under, and a response is
// applied only if it is newer than the one currently displayed, so
// out-of-order arrivals can never regress the visible state.

import { GatewayClient, GatewayError } from "./api.js";
import type {
  AttributeDefinition,
  BlockedMap,
  ConfigurationDoc,
  ConflictReport,
  FeatureModelDoc,
  GenerateResponse,
  PreferenceLevelLabel,
  ProfileDoc,
  RankingEntry,
  RecommendationReport,
  RequirementDoc,
} from "./types.js";

export interface RequirementDraft {
  level: PreferenceLevelLabel;
  required: boolean;
  minLevel: number;
}

export interface WhatIfDelta {
  blockchain_id: string;
  baseRank: number | null;
  newRank: number;
  delta: number | null; // positive = moved up; null when not in the base ranking
  closeness: number;
  baseCloseness: number | null;
}

export interface WhatIfState {
  profile: Map<string, RequirementDraft>;
  report: RecommendationReport | null;
  deltas: WhatIfDelta[];
}

const DEFAULT_DRAFT: RequirementDraft = { level: "indifferent", required: false, minLevel: 3 };

export class AppStore {
  attributes: AttributeDefinition[] = [];
  featureModel: FeatureModelDoc | null = null;

  profile = new Map<string, RequirementDraft>();
  conflicts: ConflictReport = { violations: [] };
  blocked: BlockedMap = { blocked: {} };
  validationStale = false;
  offline = false;

  report: RecommendationReport | null = null;
  whatIf: WhatIfState | null = null;

  configuration: ConfigurationDoc | null = null;
  lastRejection: string | null = null;
  generation: GenerateResponse | null = null;
  errorBanner: string | null = null;

  // sequence bookkeeping (see module comment)
  private editSeq = 0;
  private appliedConflictsSeq = 0;
  private appliedBlockedSeq = 0;
  private recommendSeq = 0;
  private appliedRecommendSeq = 0;
  private whatIfSeq = 0;
  private appliedWhatIfSeq = 0;

  private listeners = new Set<() => void>();

  constructor(private readonly client: GatewayClient) {}

  subscribe(listener: () => void): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }

  private notify(): void {
    for (const listener of this.listeners) listener();
  }

  async bootstrap(): Promise<void> {
    const [attributes, model] = await Promise.all([
      this.client.attributes(),
      this.client.featureModel(),
    ]);
    this.attributes = attributes.attributes;
    this.featureModel = model;
    this.notify();
  }

  // --- requirement editor ----------------------------------------------

  draft(attributeId: string): RequirementDraft {
    return this.profile.get(attributeId) ?? DEFAULT_DRAFT;
  }

  profileDoc(profile: Map<string, RequirementDraft> = this.profile): ProfileDoc {
    const requirements: Record<string, RequirementDoc> = {};
    for (const [attributeId, draft] of profile) {
      if (draft.level === "indifferent" && !draft.required) continue;
      const doc: RequirementDoc = { level: draft.level, required: draft.required };
      if (draft.required) doc.min_level = draft.minLevel;
      requirements[attributeId] = doc;
    }
    return { requirements };
  }

  hasActiveCriteria(): boolean {
    // form-emptiness check for the Recommend button; the engine remains
    // the authority and returns no-active-criteria if bypassed
    return Object.keys(this.profileDoc().requirements).length > 0;
  }

  setLevel(attributeId: string, level: PreferenceLevelLabel): Promise<void> {
    const current = this.draft(attributeId);
    this.profile.set(attributeId, { ...current, level });
    return this.revalidate();
  }

  setRequired(attributeId: string, required: boolean, minLevel?: number): Promise<void> {
    const current = this.draft(attributeId);
    this.profile.set(attributeId, {
      ...current,
      required,
      minLevel: minLevel ?? current.minLevel,
    });
    return this.revalidate();
  }

  isBlocked(attributeId: string): boolean {
    return attributeId in this.blocked.blocked;
  }

  blockedExplanations(attributeId: string): string[] {
    return (this.blocked.blocked[attributeId] ?? []).map((rule) => rule.explanation);
  }

  /** POST /conflicts and /blocked for the current draft (one round trip). */
  private async revalidate(): Promise<void> {
    const seq = ++this.editSeq;
    this.validationStale = true;
    this.notify();
    const doc = this.profileDoc();
    await Promise.all([
      this.client
        .conflicts(doc)
        .then((report) => this.applyConflicts(seq, report))
        .catch((error) => this.networkTrouble(error)),
      this.client
        .blocked(doc)
        .then((map) => this.applyBlocked(seq, map))
        .catch((error) => this.networkTrouble(error)),
    ]);
  }

  private applyConflicts(seq: number, report: ConflictReport): void {
    if (seq <= this.appliedConflictsSeq) return; // stale: a newer response already applied
    this.appliedConflictsSeq = seq;
    this.conflicts = report;
    this.offline = false;
    this.refreshStaleness();
    this.notify();
  }

  private applyBlocked(seq: number, map: BlockedMap): void {
    if (seq <= this.appliedBlockedSeq) return;
    this.appliedBlockedSeq = seq;
    this.blocked = map;
    this.offline = false;
    this.refreshStaleness();
    this.notify();
  }

  private refreshStaleness(): void {
    this.validationStale =
      this.appliedConflictsSeq < this.editSeq || this.appliedBlockedSeq < this.editSeq;
  }

  private networkTrouble(error: unknown): void {
    if (error instanceof GatewayError) {
      this.errorBanner = `${error.code}: ${error.message}`;
    } else {
      this.offline = true; // editing continues locally, validation marked stale
    }
    this.notify();
  }

  hasErrorConflicts(): boolean {
    return this.conflicts.violations.some((violation) => violation.severity === "error");
  }

  /** The ranking the UI may show: suppressed while the latest conflict
   * report carries an error-severity violation. */
  visibleRanking(): RecommendationReport["ranking"] {
    if (this.hasErrorConflicts()) return null;
    return this.report?.ranking ?? null;
  }

  // --- recommendation -----------------------------------------------------

  async recommend(): Promise<void> {
    const seq = ++this.recommendSeq;
    try {
      const report = await this.client.recommend(this.profileDoc());
      if (seq <= this.appliedRecommendSeq) return;
      this.appliedRecommendSeq = seq;
      this.report = report;
      this.whatIf = null;
      this.notify();
    } catch (error) {
      this.networkTrouble(error);
    }
  }

  // --- what-if drawer ------------------------------------------------------

  openWhatIf(): void {
    const clone = new Map<string, RequirementDraft>();
    for (const [attributeId, draft] of this.profile) clone.set(attributeId, { ...draft });
    this.whatIf = { profile: clone, report: null, deltas: [] };
    this.notify();
  }

  closeWhatIf(): void {
    this.whatIf = null;
    this.notify();
  }

  /** One edit in the drawer = exactly one additional /recommend call. */
  async whatIfSetLevel(attributeId: string, level: PreferenceLevelLabel): Promise<void> {
    if (!this.whatIf) return;
    const current = this.whatIf.profile.get(attributeId) ?? DEFAULT_DRAFT;
    this.whatIf.profile.set(attributeId, { ...current, level });
    const seq = ++this.whatIfSeq;
    try {
      const report = await this.client.recommend(this.profileDoc(this.whatIf.profile));
      if (seq <= this.appliedWhatIfSeq || !this.whatIf) return;
      this.appliedWhatIfSeq = seq;
      this.whatIf.report = report;
      this.whatIf.deltas = computeRankDeltas(this.report?.ranking?.entries ?? [], report.ranking?.entries ?? []);
      this.notify();
    } catch (error) {
      this.networkTrouble(error);
    }
  }

  // --- configurator ---------------------------------------------------------

  featureState(featureId: string): "selected" | "deselected" | "open" {
    if (!this.configuration) return "open";
    if (this.configuration.selected.includes(featureId)) return "selected";
    if (this.configuration.deselected.includes(featureId)) return "deselected";
    return "open";
  }

  async applyRecommendation(): Promise<void> {
    if (!this.report) return;
    try {
      const preselected = await this.client.preselect(this.report);
      this.configuration = await this.client.configureComplete(preselected);
      this.lastRejection = null;
      this.notify();
    } catch (error) {
      this.rejectClick(error);
    }
  }

  /** Tri-state click: open -> selected -> deselected -> open; the modified
   * document goes to /configure/complete and the propagated result becomes
   * the new state. A contradiction rejects the click and keeps the state. */
  async clickFeature(featureId: string): Promise<void> {
    const base: ConfigurationDoc = this.configuration ?? { selected: [], deselected: [] };
    const state = this.featureState(featureId);
    const selected = new Set(base.selected);
    const deselected = new Set(base.deselected);
    if (state === "open") {
      selected.add(featureId);
    } else if (state === "selected") {
      selected.delete(featureId);
      deselected.add(featureId);
    } else {
      deselected.delete(featureId);
    }
    const next: ConfigurationDoc = {
      selected: [...selected].sort(),
      deselected: [...deselected].sort(),
    };
    try {
      this.configuration = await this.client.configureComplete(next);
      this.lastRejection = null;
      this.notify();
    } catch (error) {
      this.rejectClick(error);
    }
  }

  private rejectClick(error: unknown): void {
    if (error instanceof GatewayError) {
      this.lastRejection = `${error.code}: ${error.message}`;
      this.notify();
    } else {
      this.networkTrouble(error);
    }
  }

  configurationComplete(): boolean {
    return this.configuration !== null && (this.configuration.open ?? []).length === 0;
  }

  async generate(variables: Record<string, string>): Promise<void> {
    if (!this.configuration) return;
    try {
      this.generation = await this.client.generate(
        { selected: this.configuration.selected, deselected: this.configuration.deselected },
        variables,
      );
      this.notify();
    } catch (error) {
      this.rejectClick(error);
    }
  }
}

export function computeRankDeltas(
  baseEntries: RankingEntry[],
  newEntries: RankingEntry[],
): WhatIfDelta[] {
  const basePosition = new Map<string, number>();
  baseEntries.forEach((entry, index) => basePosition.set(entry.blockchain_id, index + 1));
  const baseCloseness = new Map<string, number>();
  baseEntries.forEach((entry) => baseCloseness.set(entry.blockchain_id, entry.closeness));

  return newEntries.map((entry, index) => {
    const newRank = index + 1;
    const baseRank = basePosition.get(entry.blockchain_id) ?? null;
    return {
      blockchain_id: entry.blockchain_id,
      baseRank,
      newRank,
      delta: baseRank === null ? null : baseRank - newRank,
      closeness: entry.closeness,
      baseCloseness: baseCloseness.get(entry.blockchain_id) ?? null,
    };
  });
}
