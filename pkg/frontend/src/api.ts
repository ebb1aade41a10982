// Thin typed client over the gateway. The fetch implementation is injected
// so tests can mock the network and control response ordering.

import type {
  ApiErrorBody,
  AttributeDefinition,
  BlockedMap,
  ConfigurationDoc,
  ConflictReport,
  FeatureModelDoc,
  GenerateResponse,
  ProfileDoc,
  RecommendationReport,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class GatewayError extends Error {
  readonly code: string;
  readonly details: Record<string, unknown>;

  constructor(body: ApiErrorBody, readonly status: number) {
    super(body.error.message);
    this.code = body.error.code;
    this.details = body.error.details;
  }
}

export class GatewayClient {
  constructor(
    private readonly fetchImpl: FetchLike,
    private readonly baseUrl: string = "",
  ) {}

  private async request<T>(path: string, body?: unknown): Promise<T> {
    const response = await this.fetchImpl(this.baseUrl + path, {
      method: body === undefined ? "GET" : "POST",
      headers: body === undefined ? undefined : { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const payload = await response.json();
    if (!response.ok) {
      throw new GatewayError(payload as ApiErrorBody, response.status);
    }
    return payload as T;
  }

  attributes(): Promise<{ version: string; attributes: AttributeDefinition[] }> {
    return this.request("/api/attributes");
  }

  featureModel(): Promise<FeatureModelDoc> {
    return this.request("/api/feature-model");
  }

  conflicts(profile: ProfileDoc): Promise<ConflictReport> {
    return this.request("/api/conflicts", profile);
  }

  blocked(profile: ProfileDoc): Promise<BlockedMap> {
    return this.request("/api/blocked", profile);
  }

  recommend(profile: ProfileDoc): Promise<RecommendationReport> {
    return this.request("/api/recommend", profile);
  }

  preselect(report: RecommendationReport): Promise<ConfigurationDoc> {
    return this.request("/api/preselect", report);
  }

  configureComplete(config: ConfigurationDoc): Promise<ConfigurationDoc> {
    return this.request("/api/configure/complete", config);
  }

  generate(config: ConfigurationDoc, variables: Record<string, string>): Promise<GenerateResponse> {
    return this.request("/api/generate", { configuration: config, variables });
  }
}
