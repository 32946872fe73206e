// App state and its transitions. Everything the page shows is a pure
// function of this record, so the flow is easy to test headless.

import { GameResource, Hint } from "./types.js";

export interface AppState {
  game: GameResource | null;
  hint: Hint | null;
  /** True while a mutation is in flight; clicks are ignored meanwhile. */
  pending: boolean;
  error: string | null;
}

export function initialState(): AppState {
  return { game: null, hint: null, pending: false, error: null };
}

/** New resource arrived: hints are opt-in per move, so drop any shown. */
export function withGame(s: AppState, game: GameResource): AppState {
  return { ...s, game, hint: null, error: null };
}

export function withHint(s: AppState, hint: Hint): AppState {
  return { ...s, hint };
}

export function withPending(s: AppState, pending: boolean): AppState {
  return { ...s, pending };
}

export function withError(s: AppState, error: string): AppState {
  return { ...s, error, pending: false };
}

export function closedGame(): AppState {
  return initialState();
}

/** Digit to submit for a click on (c, r), or null when the click must be
    ignored (no game, engine thinking, game over, or a non-legal cell). */
export function digitForClick(s: AppState, c: number, r: number): number | null {
  if (!s.game || s.pending || s.game.status.state === "finished") return null;
  const i = s.game.legal_cells.findIndex(([cc, rr]) => cc === c && rr === r);
  return i === -1 ? null : s.game.legal_digits[i];
}
