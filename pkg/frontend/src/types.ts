// Payload types mirroring the gateway schemas (docs/schemas/) 1:1.
// The UI never computes these shapes itself; they only arrive from the API.

export type PreferenceLevelLabel =
  | "indifferent"
  | "slightly-desirable"
  | "desirable"
  | "highly-desirable"
  | "extremely-desirable";

export const LEVEL_LABELS: PreferenceLevelLabel[] = [
  "indifferent",
  "slightly-desirable",
  "desirable",
  "highly-desirable",
  "extremely-desirable",
];

export const LEVEL_NAMES: Record<PreferenceLevelLabel, string> = {
  indifferent: "Indifferent",
  "slightly-desirable": "Slightly Desirable",
  desirable: "Desirable",
  "highly-desirable": "Highly Desirable",
  "extremely-desirable": "Extremely Desirable",
};

export interface AttributeDefinition {
  id: string;
  name: string;
  description: string;
  direction: "benefit" | "cost";
  scale_min: number;
  scale_max: number;
}

export interface RequirementDoc {
  level?: PreferenceLevelLabel;
  required?: boolean;
  min_level?: number;
}

export interface ProfileDoc {
  requirements: Record<string, RequirementDoc>;
}

export interface ConflictRule {
  left: string;
  right: string;
  threshold: PreferenceLevelLabel;
  explanation: string;
}

export interface ConflictViolation {
  rule: ConflictRule;
  left: { attribute_id: string; level: PreferenceLevelLabel; required: boolean };
  right: { attribute_id: string; level: PreferenceLevelLabel; required: boolean };
  severity: "error" | "warning";
}

export interface ConflictReport {
  violations: ConflictViolation[];
}

export interface BlockedMap {
  blocked: Record<string, ConflictRule[]>;
}

export interface Contribution {
  weighted_value: number;
  ideal_gap: number;
  anti_ideal_gap: number;
}

export interface RankingEntry {
  blockchain_id: string;
  closeness: number;
  d_plus: number;
  d_minus: number;
  per_criterion_contribution: Record<string, Contribution>;
}

export interface Disqualification {
  blockchain_id: string;
  attribute_id: string;
  actual_score: number;
  min_level: number;
}

export interface Ranking {
  entries: RankingEntry[];
  disqualified: Disqualification[];
}

export interface PatternRecommendation {
  pattern_id: string;
  score?: number;
  matched_attributes?: string[];
  conflicts_with?: string[];
  excluded_reason?: string;
}

export interface RecommendationReport {
  conflicts: ConflictReport;
  ranking: Ranking | null;
  patterns: PatternRecommendation[] | null;
}

export interface FeatureNode {
  id: string;
  name: string;
  parent: string | null;
  variability: "mandatory" | "optional";
  group: "none" | "xor" | "or";
}

export interface FeatureModelDoc {
  version: string;
  features: FeatureNode[];
  constraints: { kind: "requires" | "excludes"; from: string; to: string }[];
  blockchain_feature_map: Record<string, string>;
  pattern_feature_map: Record<string, string>;
}

export interface ConfigurationDoc {
  selected: string[];
  deselected: string[];
  open?: string[];
}

export interface ValidityReport {
  status: "valid" | "invalid" | "incomplete";
  violations: { rule: string; features: string[]; message: string }[];
  open: string[];
}

export interface ManifestEntry {
  path: string;
  bytes: number;
  sha256: string;
}

export interface GenerateResponse {
  manifest: {
    entries: ManifestEntry[];
    config_digest: string;
    kb_version: string;
  };
  archive_base64: string;
}

export interface ApiErrorBody {
  error: { code: string; message: string; details: Record<string, unknown> };
}
