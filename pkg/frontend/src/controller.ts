/** Orchestrates the studio loop: randomize, tweak, export, load config.
 *
 * At most one generate/render request is in flight; a newer action aborts
 * and supersedes an older one (latest wins). Slider tweaks are debounced.
 */

import { ApiClient, ApiError } from "./api.js";
import type { ArtworkConfig, ExportFormat, GenerateResponse, PlotOverrides } from "./api.js";
import { StudioState } from "./state.js";

export interface StudioView {
  showArtwork(svg: string, dropped: number): void;
  showConfig(config: ArtworkConfig): void;
  showHistory(thumbnails: string[]): void;
  showPending(pending: boolean): void;
  showError(message: string): void;
  deliverDownload(name: string, payload: Blob): void;
}

export interface ControllerOptions {
  debounceMs?: number;
  previewStep?: number;
  downsample?: number;
  random?: () => number;
}

const DEFAULT_DEBOUNCE_MS = 150;
const DEFAULT_PREVIEW_STEP = 0.05;

export class StudioController {
  readonly state = new StudioState();
  private readonly debounceMs: number;
  private readonly previewStep: number;
  private readonly downsample: number | undefined;
  private readonly random: () => number;
  private sequence = 0;
  private inflight: AbortController | null = null;
  private debounceTimer: ReturnType<typeof setTimeout> | null = null;

  constructor(
    private readonly api: ApiClient,
    private readonly view: StudioView,
    options: ControllerOptions = {},
  ) {
    this.debounceMs = options.debounceMs ?? DEFAULT_DEBOUNCE_MS;
    this.previewStep = options.previewStep ?? DEFAULT_PREVIEW_STEP;
    this.downsample = options.downsample;
    this.random = options.random ?? Math.random;
  }

  setLock(which: "funcSeed" | "seed", locked: boolean): void {
    this.state.locks[which] = locked;
  }

  /** New artwork; locked seeds are carried over unchanged. */
  async randomize(): Promise<void> {
    const seeds = this.state.nextSeeds(this.random);
    await this.submit((signal) =>
      this.api.generate(
        {
          func_seed: seeds.func_seed,
          seed: seeds.seed,
          generate: { step: this.previewStep },
          downsample: this.downsample,
        },
        signal,
      ),
    );
  }

  /** Same artwork, new look; seeds untouched. Debounced for sliders. */
  tweak(overrides: PlotOverrides): Promise<void> {
    const config = this.state.config;
    if (!config) return Promise.resolve();
    if (this.debounceTimer !== null) clearTimeout(this.debounceTimer);
    return new Promise((resolve) => {
      this.debounceTimer = setTimeout(() => {
        this.debounceTimer = null;
        this.submit((signal) => this.api.render(config, overrides, signal)).then(resolve);
      }, this.debounceMs);
    });
  }

  /** Re-render an uploaded config as-is (the "load config" control). */
  async loadConfig(config: ArtworkConfig): Promise<void> {
    await this.submit((signal) => this.api.render(config, {}, signal));
  }

  /** Download the displayed artwork; regenerates if the token expired. */
  async exportArtwork(format: ExportFormat): Promise<void> {
    const { config, exportToken } = this.state;
    if (!config || !exportToken) {
      this.view.showError("nothing to export yet");
      return;
    }
    try {
      let payload: Blob;
      try {
        payload = await this.api.exportBytes(exportToken, format);
      } catch (error) {
        if (error instanceof ApiError && error.status === 404) {
          // Token fell out of the server cache: regenerate, then retry.
          await this.loadConfig(config);
          payload = await this.api.exportBytes(this.state.exportToken!, format);
        } else {
          throw error;
        }
      }
      const extension = format === "config" || format === "data" ? "json" : format;
      this.view.deliverDownload(`artwork-${Date.now()}.${extension}`, payload);
    } catch (error) {
      this.view.showError(describe(error));
    }
  }

  /** Single-flight request wrapper: newest submission wins. */
  private async submit(
    call: (signal: AbortSignal) => Promise<GenerateResponse>,
  ): Promise<void> {
    const ticket = ++this.sequence;
    this.inflight?.abort();
    const aborter = new AbortController();
    this.inflight = aborter;
    this.state.pending = true;
    this.view.showPending(true);
    try {
      const response = await call(aborter.signal);
      if (ticket !== this.sequence) return; // superseded
      this.state.adopt(response);
      this.view.showArtwork(response.svg, response.dropped);
      this.view.showConfig(response.config);
      this.view.showHistory(this.state.history.map((entry) => entry.thumbnail));
    } catch (error) {
      if (ticket !== this.sequence) return; // abort of a superseded request
      this.view.showError(describe(error));
    } finally {
      if (ticket === this.sequence) {
        this.state.pending = false;
        this.view.showPending(false);
        this.inflight = null;
      }
    }
  }
}

function describe(error: unknown): string {
  if (error instanceof ApiError) return `engine error: ${error.message}`;
  if (error instanceof Error) return error.message;
  return String(error);
}
