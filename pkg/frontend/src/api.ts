// Thin fetch client for the game service. Every game payload goes
// through asGameResource so the rest of the UI can trust its types.

import {
  GameResource,
  Hint,
  MoveApplied,
  Variant,
  asGameResource,
  asHint,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    detail: string,
  ) {
    super(detail);
    this.name = "ApiError";
  }
}

export interface NewGameOptions {
  a: number;
  b: number;
  variant: Variant;
  engine: "none" | "strategy" | "solver";
  engine_player: 1 | 2 | null;
}

export interface MoveReply extends GameResource {
  moves_applied: MoveApplied[];
}

export interface SolveReply {
  winner: "player1" | "player2";
  states: number;
  loss_states: number;
}

async function body(res: Response): Promise<unknown> {
  const text = await res.text();
  try {
    return JSON.parse(text);
  } catch {
    return text;
  }
}

export function makeClient(base = "") {
  async function request(path: string, init?: RequestInit): Promise<unknown> {
    const res = await fetch(base + path, {
      headers: { "content-type": "application/json" },
      ...init,
    });
    const data = await body(res);
    if (!res.ok) {
      const detail =
        typeof data === "object" && data !== null && "detail" in data
          ? String((data as { detail: unknown }).detail)
          : String(data);
      throw new ApiError(res.status, detail);
    }
    return data;
  }

  return {
    async newGame(opts: NewGameOptions): Promise<GameResource> {
      return asGameResource(
        await request("/games", { method: "POST", body: JSON.stringify(opts) }),
      );
    },

    async game(id: string): Promise<GameResource> {
      return asGameResource(await request(`/games/${id}`));
    },

    async move(id: string, digit: number): Promise<MoveReply> {
      const data = await request(`/games/${id}/moves`, {
        method: "POST",
        body: JSON.stringify({ digit }),
      });
      const applied = (data as { moves_applied?: unknown }).moves_applied;
      return {
        ...asGameResource(data),
        moves_applied: Array.isArray(applied) ? (applied as MoveApplied[]) : [],
      };
    },

    async hint(id: string): Promise<Hint> {
      return asHint(await request(`/games/${id}/hint`));
    },

    async solve(a: number, b: number, variant: Variant): Promise<SolveReply> {
      return (await request(`/solve?a=${a}&b=${b}&variant=${variant}`)) as SolveReply;
    },

    async health(): Promise<string> {
      return String(await request("/healthz"));
    },
  };
}

export type Client = ReturnType<typeof makeClient>;
