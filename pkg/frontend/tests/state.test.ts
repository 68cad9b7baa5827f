import { describe, expect, it } from "vitest";

import type { GenerateResponse } from "../src/api.js";
import { HISTORY_LIMIT, StudioState, freshSeedToken } from "../src/state.js";

function response(funcSeed: string, seed: string, n: number): GenerateResponse {
  return {
    token: `tok-${n}`,
    config: {
      format_version: "1",
      f1: `f1-of-${funcSeed}`,
      f2: `f2-of-${funcSeed}`,
      func_seed: funcSeed,
      generate: { seed, start: -3.14, step: 0.05, stop: 3.14, mode: "f1_vs_f2" },
      plot: { color: "black" },
    },
    points_preview: [],
    dropped: 0,
    svg: `<svg>${n}</svg>`,
  };
}

describe("freshSeedToken", () => {
  it("is short alphanumeric", () => {
    for (let i = 0; i < 50; i++) {
      expect(freshSeedToken()).toMatch(/^[a-z0-9]{6}$/);
    }
  });

  it("draws from the injected randomness", () => {
    expect(freshSeedToken(4, () => 0)).toBe("aaaa");
  });
});

describe("StudioState.nextSeeds", () => {
  it("refreshes both seeds when unlocked", () => {
    const state = new StudioState();
    state.adopt(response("F", "S", 1));
    const seeds = state.nextSeeds(() => 0.5);
    expect(seeds.func_seed).not.toBe("F");
    expect(seeds.seed).not.toBe("S");
  });

  it("never changes a locked seed", () => {
    const state = new StudioState();
    state.adopt(response("F", "S", 1));
    state.locks.funcSeed = true;
    for (let i = 0; i < 20; i++) {
      expect(state.nextSeeds().func_seed).toBe("F");
    }
    state.locks.seed = true;
    for (let i = 0; i < 20; i++) {
      const seeds = state.nextSeeds();
      expect(seeds.func_seed).toBe("F");
      expect(seeds.seed).toBe("S");
    }
  });

  it("generates fresh tokens before any artwork exists", () => {
    const state = new StudioState();
    state.locks.funcSeed = true;
    const seeds = state.nextSeeds();
    expect(seeds.func_seed).toMatch(/^[a-z0-9]{6}$/);
  });
});

describe("StudioState.adopt", () => {
  it("tracks the displayed artwork", () => {
    const state = new StudioState();
    state.adopt(response("F", "S", 1));
    expect(state.svg).toBe("<svg>1</svg>");
    expect(state.exportToken).toBe("tok-1");
    expect(state.config?.generate.seed).toBe("S");
  });

  it("bounds history at the limit", () => {
    const state = new StudioState();
    for (let i = 0; i < HISTORY_LIMIT + 17; i++) {
      state.adopt(response("F", `S${i}`, i));
    }
    expect(state.history.length).toBe(HISTORY_LIMIT);
    expect(state.history[0].config.generate.seed).toBe("S17");
    expect(state.history.at(-1)?.config.generate.seed).toBe(`S${HISTORY_LIMIT + 16}`);
  });
});
