/** Studio state: the displayed artwork, seed locks, bounded history. */

import type { ArtworkConfig, GenerateResponse } from "./api.js";

export const HISTORY_LIMIT = 50;

export interface SeedLocks {
  funcSeed: boolean;
  seed: boolean;
}

export interface HistoryEntry {
  config: ArtworkConfig;
  thumbnail: string; // the artwork's SVG text
}

const TOKEN_ALPHABET = "abcdefghjkmnpqrstuvwxyz23456789";

export function freshSeedToken(length = 6, random: () => number = Math.random): string {
  let token = "";
  for (let i = 0; i < length; i++) {
    token += TOKEN_ALPHABET[Math.floor(random() * TOKEN_ALPHABET.length)];
  }
  return token;
}

export class StudioState {
  config: ArtworkConfig | null = null;
  exportToken: string | null = null;
  svg = "";
  dropped = 0;
  locks: SeedLocks = { funcSeed: false, seed: false };
  history: HistoryEntry[] = [];
  pending = false;

  /** Seeds for the next generate call: locked ones stay, others refresh. */
  nextSeeds(random: () => number = Math.random): { func_seed: string; seed: string } {
    const current = this.config;
    const funcSeed =
      this.locks.funcSeed && current?.func_seed
        ? current.func_seed
        : freshSeedToken(6, random);
    const seed =
      this.locks.seed && current ? current.generate.seed : freshSeedToken(6, random);
    return { func_seed: funcSeed, seed };
  }

  adopt(response: GenerateResponse): void {
    this.config = response.config;
    this.exportToken = response.token;
    this.svg = response.svg;
    this.dropped = response.dropped;
    this.history.push({ config: response.config, thumbnail: response.svg });
    if (this.history.length > HISTORY_LIMIT) {
      this.history.splice(0, this.history.length - HISTORY_LIMIT);
    }
  }
}
