// End-to-end flows against the real service (spawned in global-setup).
// These drive the same code paths the page uses: the fetch client, the
// click guard, and the board view-model.

import { describe, expect, it, inject } from "vitest";

import { makeClient, Client } from "../src/api.js";
import { boardView, extraDigits } from "../src/board.js";
import { digitForClick, initialState, withGame } from "../src/state.js";
import { GameResource } from "../src/types.js";
import { mulberry32 } from "./fixtures.js";

const client = (): Client => makeClient(inject("baseUrl"));

/** Submit one human digit and return the refreshed resource, the way the
    page does it (POST move, then GET for the canonical state). */
async function submit(api: Client, id: string, digit: number): Promise<GameResource> {
  await api.move(id, digit);
  return api.game(id);
}

describe("service is up", () => {
  it("answers the health probe", async () => {
    expect(await client().health()).toBe("ok");
  });
});

describe("human vs strategy engine on the 6x5 board", () => {
  it("clicking only legal cells always ends with a declared winner", async () => {
    const api = client();
    for (let trial = 0; trial < 25; trial++) {
      const rand = mulberry32(1000 + trial);
      let g = await api.newGame({
        a: 6,
        b: 5,
        variant: "avoidance",
        engine: "strategy",
        engine_player: 2,
      });
      for (let ply = 0; ply < 40 && g.status.state === "in-progress"; ply++) {
        let digit: number | null;
        if (g.legal_cells.length > 0) {
          const [c, r] = g.legal_cells[Math.floor(rand() * g.legal_cells.length)];
          digit = digitForClick(withGame(initialState(), g), c, r);
        } else {
          [digit] = extraDigits(g); // board full: the move is forced
        }
        expect(digit).not.toBeNull();
        g = await submit(api, g.id, digit!);
      }
      expect(g.status.state).toBe("finished");
      expect([1, 2]).toContain(g.status.winner);
      expect(["I_a", "J_b"]).toContain(g.status.reason);
      expect(boardView(g, null).banner).toMatch(/^Player [12] wins — /);
    }
  }, 240_000);

  it("following the hints as player 1 wins every game", async () => {
    const api = client();
    for (let trial = 0; trial < 10; trial++) {
      let g = await api.newGame({
        a: 6,
        b: 5,
        variant: "avoidance",
        engine: "strategy",
        engine_player: 2,
      });
      let ply = 0;
      while (g.status.state === "in-progress") {
        const hint = await api.hint(g.id);
        expect(hint.losing_position).toBe(false);
        expect(hint.digits.length).toBeGreaterThan(0);
        // rotate through the optimal digits so the trials diverge
        const digit = hint.digits[(trial + ply) % hint.digits.length];
        g = await submit(api, g.id, digit);
        ply++;
        expect(ply).toBeLessThan(30);
      }
      expect(g.status.winner).toBe(1);
      expect(boardView(g, null).banner).toMatch(/^Player 1 wins — /);
    }
  }, 240_000);
});

describe("game creation", () => {
  it("shades the engine's opening cell when the engine moves first", async () => {
    const g = await client().newGame({
      a: 7,
      b: 5,
      variant: "avoidance",
      engine: "strategy",
      engine_player: 1,
    });
    expect(g.transcript).toEqual([1]);
    expect(g.shaded_cells).toEqual([[1, 1]]);
    expect(g.to_move).toBe(2);
  });

  it("lets the engine win immediately in the two-row achievement game", async () => {
    const api = client();
    const g = await api.newGame({
      a: 5,
      b: 2,
      variant: "achievement",
      engine: "strategy",
      engine_player: 2,
    });
    const reply = await api.move(g.id, g.legal_digits[0]);
    expect(reply.moves_applied.map((m) => m.player)).toEqual([1, 2]);
    expect(reply.status).toEqual({ state: "finished", winner: 2, reason: "J_b" });
  });

  it("rejects bad configurations the way the form expects", async () => {
    const api = client();
    await expect(
      api.newGame({ a: 1, b: 5, variant: "avoidance", engine: "none", engine_player: null }),
    ).rejects.toMatchObject({ status: 400 });
    await expect(
      api.newGame({ a: 8, b: 6, variant: "avoidance", engine: "strategy", engine_player: 2 }),
    ).rejects.toMatchObject({ status: 422 });
  });
});

describe("session plumbing", () => {
  it("resumes a game by reloading the resource", async () => {
    const api = client();
    const g = await api.newGame({
      a: 5,
      b: 4,
      variant: "avoidance",
      engine: "none",
      engine_player: null,
    });
    const afterMove = await api.move(g.id, 1);
    const reloaded = await api.game(g.id);
    expect(reloaded.transcript).toEqual(afterMove.transcript);
    expect(reloaded.shape).toEqual(afterMove.shape);
    expect(reloaded.to_move).toEqual(afterMove.to_move);
    expect(reloaded.legal_cells).toEqual(afterMove.legal_cells);
    expect(reloaded.legal_digits).toEqual(afterMove.legal_digits);
    expect(reloaded.status).toEqual(afterMove.status);
  });

  it("maps service errors onto ApiError", async () => {
    const api = client();
    await expect(api.game("no-such-game")).rejects.toMatchObject({
      name: "ApiError",
      status: 404,
    });
    const g = await api.newGame({
      a: 3,
      b: 3,
      variant: "avoidance",
      engine: "none",
      engine_player: null,
    });
    await expect(api.move(g.id, 99)).rejects.toMatchObject({ status: 422 });
  });

  it("reports a position with no safe reply through the hint", async () => {
    const api = client();
    const g = await api.newGame({
      a: 5,
      b: 5,
      variant: "avoidance",
      engine: "none",
      engine_player: null,
    });
    const fresh = await api.hint(g.id);
    expect(fresh).toEqual({ cells: [[1, 1]], digits: [1], losing_position: false });
    await api.move(g.id, 1);
    const doomed = await api.hint(g.id);
    expect(doomed.losing_position).toBe(true);
    expect(doomed.cells).toEqual([]);
  });

  it("solves starting positions on demand", async () => {
    const reply = await client().solve(5, 5, "avoidance");
    expect(reply).toEqual({ winner: "player1", states: 70, loss_states: 18 });
  });
});
