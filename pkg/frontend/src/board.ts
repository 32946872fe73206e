// Pure view-model: GameResource (+ optional hint) in, cell grid out.
// All legality comes from the service's legal_cells/legal_digits pairing;
// nothing here re-derives game rules.

import { GameResource, Hint, Player } from "./types.js";

export type CellState = "shaded" | "eliminated" | "legal" | "open";

export interface CellView {
  c: number;
  r: number;
  state: CellState;
  /** Digit this cell realizes, for legal cells only. */
  digit: number | null;
  hint: boolean;
  lastMove: boolean;
}

export interface BoardView {
  width: number;
  height: number;
  /** height rows of width cells, row 1 (top) first. */
  rows: CellView[][];
  banner: string;
  finished: boolean;
  winner: Player | null;
  toMove: Player | null;
  transcript: string;
  /** Digits that end the game right now (forced or voluntary). */
  completingDigits: number[];
}

const key = (c: number, r: number) => `${c},${r}`;

function reasonText(g: GameResource): string {
  if (g.status.reason === "I_a") return `increasing run of ${g.a}`;
  if (g.status.reason === "J_b") return `decreasing run of ${g.b}`;
  return g.status.reason ?? "";
}

/** Game-ending digits the UI should offer as buttons.

    The pairing tail of legal_digits carries them in achievement games;
    on a full avoidance board the pairing is empty and the server's
    completing_digits names the forced concession. */
export function extraDigits(g: GameResource): number[] {
  if (g.status.state === "finished") return [];
  const tail = g.legal_digits.slice(g.legal_cells.length);
  if (tail.length > 0) return tail;
  if (g.legal_cells.length === 0) return g.completing_digits;
  return [];
}

export function boardView(g: GameResource, hint: Hint | null): BoardView {
  const width = g.a - 1;
  const height = g.b - 1;
  const shaded = new Set(g.shaded_cells.map(([c, r]) => key(c, r)));
  const digitAt = new Map<string, number>();
  g.legal_cells.forEach(([c, r], i) => digitAt.set(key(c, r), g.legal_digits[i]));
  const hinted = new Set((hint?.cells ?? []).map(([c, r]) => key(c, r)));

  // The final move of a completed run never lands on the board, so only
  // outline the newest shaded cell while every move has a cell.
  let last: string | null = null;
  if (g.shaded_cells.length > 0 && g.shaded_cells.length === g.transcript.length) {
    const [c, r] = g.shaded_cells[g.shaded_cells.length - 1];
    last = key(c, r);
  }

  const rows: CellView[][] = [];
  for (let r = 1; r <= height; r++) {
    const row: CellView[] = [];
    for (let c = 1; c <= width; c++) {
      const k = key(c, r);
      let state: CellState;
      if (shaded.has(k)) state = "shaded";
      else if (digitAt.has(k)) state = "legal";
      else if (c <= (g.shape[r - 1] ?? 0)) state = "eliminated";
      else state = "open";
      row.push({
        c,
        r,
        state,
        digit: digitAt.get(k) ?? null,
        hint: hinted.has(k),
        lastMove: k === last,
      });
    }
    rows.push(row);
  }

  const finished = g.status.state === "finished";
  const banner = finished
    ? `Player ${g.status.winner} wins — ${reasonText(g)}`
    : `Player ${g.to_move} to move`;

  return {
    width,
    height,
    rows,
    banner,
    finished,
    winner: finished ? g.status.winner : null,
    toMove: finished ? null : g.to_move,
    transcript: g.transcript.length ? g.transcript.join(" ") : "(empty)",
    completingDigits: extraDigits(g),
  };
}
