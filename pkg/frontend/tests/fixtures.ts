import { GameResource } from "../src/types.js";

export function resource(overrides: Partial<GameResource> = {}): GameResource {
  return {
    id: "t-fixture",
    a: 6,
    b: 5,
    variant: "avoidance",
    to_move: 1,
    transcript: [],
    shape: [0, 0, 0, 0],
    legal_cells: [[1, 1]],
    legal_digits: [1],
    completing_digits: [],
    shaded_cells: [],
    status: { state: "in-progress", winner: null, reason: null },
    engine: "none",
    engine_player: null,
    ...overrides,
  };
}

/** Deterministic float generator in [0, 1) for reproducible playthroughs. */
export function mulberry32(seed: number): () => number {
  let t = seed >>> 0;
  return () => {
    t = (t + 0x6d2b79f5) >>> 0;
    let x = t;
    x = Math.imul(x ^ (x >>> 15), x | 1);
    x ^= x + Math.imul(x ^ (x >>> 7), x | 61);
    return ((x ^ (x >>> 14)) >>> 0) / 4294967296;
  };
}
