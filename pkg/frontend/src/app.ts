// Wiring: one AppState record, re-rendered after every transition.
// The game id lives in the URL hash so a reload resumes the session.

import { ApiError, Client, makeClient } from "./api.js";
import { render, Handlers } from "./render.js";
import {
  AppState,
  closedGame,
  digitForClick,
  initialState,
  withError,
  withGame,
  withHint,
  withPending,
} from "./state.js";
import { Variant } from "./types.js";

function gameIdFromHash(): string | null {
  const m = /#g=([\w-]+)/.exec(location.hash);
  return m ? m[1] : null;
}

export function startApp(root: HTMLElement, client: Client = makeClient("")): void {
  let state: AppState = initialState();

  const update = (next: AppState) => {
    state = next;
    render(root, state, handlers);
  };

  const fail = (err: unknown) => {
    const msg = err instanceof ApiError ? `${err.message} (HTTP ${err.status})` : String(err);
    update(withError(state, msg));
  };

  async function submitDigit(digit: number): Promise<void> {
    const game = state.game;
    if (!game || state.pending) return;
    update(withPending(state, true));
    try {
      await client.move(game.id, digit);
      // Refresh from the canonical resource once the engine has replied.
      const fresh = await client.game(game.id);
      update(withPending(withGame(state, fresh), false));
    } catch (err) {
      fail(err);
    }
  }

  const handlers: Handlers = {
    onNewGame(opts: {
      a: number;
      b: number;
      variant: Variant;
      engine: "none" | "strategy" | "solver";
      humanFirst: boolean;
    }) {
      const engine_player = opts.engine === "none" ? null : opts.humanFirst ? 2 : 1;
      update(withPending(state, true));
      client
        .newGame({
          a: opts.a,
          b: opts.b,
          variant: opts.variant,
          engine: opts.engine,
          engine_player: engine_player as 1 | 2 | null,
        })
        .then((game) => {
          location.hash = `g=${game.id}`;
          update(withPending(withGame(state, game), false));
        })
        .catch(fail);
    },

    onCellClick(c: number, r: number) {
      const digit = digitForClick(state, c, r);
      if (digit === null) return; // eliminated cell, engine thinking, or game over
      void submitDigit(digit);
    },

    onDigit(digit: number) {
      void submitDigit(digit);
    },

    onHint() {
      const game = state.game;
      if (!game || state.pending) return;
      client
        .hint(game.id)
        .then((hint) => update(withHint(state, hint)))
        .catch(fail);
    },

    onClose() {
      history.replaceState(null, "", location.pathname);
      update(closedGame());
    },
  };

  const id = gameIdFromHash();
  if (id) {
    client
      .game(id)
      .then((game) => update(withGame(state, game)))
      .catch(() => {
        history.replaceState(null, "", location.pathname);
        update(initialState());
      });
  }
  render(root, state, handlers);
}
