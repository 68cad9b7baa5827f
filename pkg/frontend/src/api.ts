/** Typed client for the engine's studio endpoints. */

export interface GenerateParamsWire {
  seed: string;
  start: number;
  step: number;
  stop: number;
  mode: string;
}

export interface ArtworkConfig {
  format_version: string;
  f1: string;
  f2: string;
  func_seed?: string;
  generate: GenerateParamsWire;
  plot: Record<string, unknown>;
}

export interface GenerateResponse {
  token: string;
  config: ArtworkConfig;
  points_preview: [number, number][];
  dropped: number;
  svg: string;
}

export interface PlotOverrides {
  color?: string | number[];
  cmap?: string[];
  bgcolor?: string;
  spot_size?: number;
  marker?: string;
  linewidth?: number;
  alpha?: number;
  projection?: string;
  rotation?: number;
}

export interface GenerateRequest {
  func_seed?: string;
  seed?: string;
  generate?: Partial<Omit<GenerateParamsWire, "seed">> & { seed?: string };
  plot?: PlotOverrides;
  downsample?: number;
  width?: number;
  height?: number;
}

export type ExportFormat = "svg" | "png" | "config" | "data";

export class ApiError extends Error {
  constructor(public status: number, detail: string) {
    super(detail);
  }
}

async function parseError(response: Response): Promise<ApiError> {
  let detail = `${response.status}`;
  try {
    const body = await response.json();
    detail = typeof body.detail === "string" ? body.detail : JSON.stringify(body.detail);
  } catch {
    /* non-JSON error body */
  }
  return new ApiError(response.status, detail);
}

export class ApiClient {
  constructor(private readonly baseUrl: string = "") {}

  private async post<T>(path: string, body: unknown, signal?: AbortSignal): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
      signal,
    });
    if (!response.ok) throw await parseError(response);
    return (await response.json()) as T;
  }

  generate(request: GenerateRequest, signal?: AbortSignal): Promise<GenerateResponse> {
    return this.post("/api/generate", request, signal);
  }

  render(
    config: ArtworkConfig,
    plot: PlotOverrides = {},
    signal?: AbortSignal,
  ): Promise<GenerateResponse> {
    return this.post("/api/render", { config, plot }, signal);
  }

  exportUrl(token: string, format: ExportFormat): string {
    return `${this.baseUrl}/api/export?token=${encodeURIComponent(token)}&format=${format}`;
  }

  async exportBytes(token: string, format: ExportFormat): Promise<Blob> {
    const response = await fetch(this.exportUrl(token, format));
    if (!response.ok) throw await parseError(response);
    return response.blob();
  }

  async health(): Promise<{ version: string }> {
    const response = await fetch(this.baseUrl + "/api/health");
    if (!response.ok) throw await parseError(response);
    return response.json();
  }
}
