// Shapes of the JSON the game service speaks, plus runtime checks so a
// bad payload turns into one readable error instead of NaNs in the board.

export type Variant = "avoidance" | "achievement";
export type Player = 1 | 2;

/** [column, row], 1-based, row 1 at the top. */
export type CellPair = [number, number];

export interface GameStatus {
  state: "in-progress" | "finished";
  winner: Player | null;
  reason: string | null;
}

export interface GameResource {
  id: string;
  a: number;
  b: number;
  variant: Variant;
  to_move: Player;
  transcript: number[];
  shape: number[];
  legal_cells: CellPair[];
  legal_digits: number[];
  completing_digits: number[];
  shaded_cells: CellPair[];
  status: GameStatus;
  engine: string;
  engine_player: Player | null;
}

export interface MoveApplied {
  player: Player;
  digit: number;
}

export interface Hint {
  cells: CellPair[];
  digits: number[];
  losing_position: boolean;
}

function fail(field: string): never {
  throw new Error(`malformed game resource: bad ${field}`);
}

function intArray(x: unknown, field: string): number[] {
  if (!Array.isArray(x) || !x.every((v) => Number.isInteger(v))) fail(field);
  return x as number[];
}

function cellArray(x: unknown, field: string): CellPair[] {
  if (
    !Array.isArray(x) ||
    !x.every(
      (p) =>
        Array.isArray(p) &&
        p.length === 2 &&
        Number.isInteger(p[0]) &&
        Number.isInteger(p[1]),
    )
  )
    fail(field);
  return (x as number[][]).map((p) => [p[0], p[1]]);
}

function player(x: unknown, field: string): Player {
  if (x !== 1 && x !== 2) fail(field);
  return x;
}

/** Validate a service payload; throws on anything structurally off. */
export function asGameResource(data: unknown): GameResource {
  if (typeof data !== "object" || data === null) fail("payload");
  const d = data as Record<string, unknown>;
  if (typeof d.id !== "string" || !d.id) fail("id");
  if (!Number.isInteger(d.a) || (d.a as number) < 2) fail("a");
  if (!Number.isInteger(d.b) || (d.b as number) < 2) fail("b");
  if (d.variant !== "avoidance" && d.variant !== "achievement") fail("variant");
  const status = d.status as Record<string, unknown> | null;
  if (typeof status !== "object" || status === null) fail("status");
  if (status.state !== "in-progress" && status.state !== "finished") fail("status.state");
  const winner = status.winner === null ? null : player(status.winner, "status.winner");
  if (status.state === "finished" && winner === null) fail("status.winner");
  const legal_cells = cellArray(d.legal_cells, "legal_cells");
  const legal_digits = intArray(d.legal_digits, "legal_digits");
  if (legal_digits.length < legal_cells.length) fail("legal_digits pairing");
  return {
    id: d.id,
    a: d.a as number,
    b: d.b as number,
    variant: d.variant,
    to_move: player(d.to_move, "to_move"),
    transcript: intArray(d.transcript, "transcript"),
    shape: intArray(d.shape, "shape"),
    legal_cells,
    legal_digits,
    completing_digits: intArray(d.completing_digits ?? [], "completing_digits"),
    shaded_cells: cellArray(d.shaded_cells ?? [], "shaded_cells"),
    status: {
      state: status.state,
      winner,
      reason: typeof status.reason === "string" ? status.reason : null,
    },
    engine: typeof d.engine === "string" ? d.engine : "none",
    engine_player: d.engine_player === null || d.engine_player === undefined
      ? null
      : player(d.engine_player, "engine_player"),
  };
}

export function asHint(data: unknown): Hint {
  if (typeof data !== "object" || data === null) fail("hint");
  const d = data as Record<string, unknown>;
  return {
    cells: cellArray(d.cells, "hint.cells"),
    digits: intArray(d.digits, "hint.digits"),
    losing_position: d.losing_position === true,
  };
}
