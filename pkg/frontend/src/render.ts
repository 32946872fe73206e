// DOM layer: rebuild the page from AppState on every change. The board
// is a CSS grid of buttons; cell classes mirror the view-model states.

import { BoardView, boardView } from "./board.js";
import { AppState } from "./state.js";
import { Variant } from "./types.js";

export interface Handlers {
  onNewGame(opts: {
    a: number;
    b: number;
    variant: Variant;
    engine: "none" | "strategy" | "solver";
    humanFirst: boolean;
  }): void;
  onCellClick(c: number, r: number): void;
  onDigit(digit: number): void;
  onHint(): void;
  onClose(): void;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className = "",
  text = "",
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text) node.textContent = text;
  return node;
}

function numberInput(id: string, value: number, min: number, max: number) {
  const input = el("input");
  input.type = "number";
  input.id = id;
  input.min = String(min);
  input.max = String(max);
  input.value = String(value);
  return input;
}

function select(id: string, options: [string, string][], value: string) {
  const sel = el("select");
  sel.id = id;
  for (const [val, label] of options) {
    const opt = el("option", "", label);
    opt.value = val;
    sel.appendChild(opt);
  }
  sel.value = value;
  return sel;
}

function labeled(text: string, control: HTMLElement): HTMLElement {
  const wrap = el("label", "field");
  wrap.appendChild(el("span", "", text));
  wrap.appendChild(control);
  return wrap;
}

function renderForm(handlers: Handlers): HTMLElement {
  const form = el("form", "new-game");
  const a = numberInput("a", 6, 2, 12);
  const b = numberInput("b", 5, 2, 6);
  const variant = select(
    "variant",
    [
      ["avoidance", "avoidance (complete a run and you lose)"],
      ["achievement", "achievement (complete a run and you win)"],
    ],
    "avoidance",
  );
  const engine = select(
    "engine",
    [
      ["strategy", "engine: strategy book"],
      ["solver", "engine: exact solver"],
      ["none", "no engine (two humans)"],
    ],
    "strategy",
  );
  const side = select(
    "side",
    [
      ["first", "you move first"],
      ["second", "engine moves first"],
    ],
    "first",
  );
  const note = el("p", "form-error");
  note.id = "form-error";
  const go = el("button", "primary", "start game");
  go.type = "submit";

  form.append(
    labeled("increasing run a", a),
    labeled("decreasing run b", b),
    labeled("variant", variant),
    labeled("opponent", engine),
    labeled("side", side),
    go,
    note,
  );
  form.addEventListener("submit", (ev) => {
    ev.preventDefault();
    const av = Number(a.value);
    const bv = Number(b.value);
    if (!Number.isInteger(av) || !Number.isInteger(bv) || av < 2 || bv < 2) {
      note.textContent = "a and b must both be integers of at least 2";
      return;
    }
    note.textContent = "";
    handlers.onNewGame({
      a: av,
      b: bv,
      variant: variant.value as Variant,
      engine: engine.value as "none" | "strategy" | "solver",
      humanFirst: side.value === "first",
    });
  });
  return form;
}

function renderBoard(view: BoardView, state: AppState, handlers: Handlers): HTMLElement {
  const grid = el("div", "board");
  grid.style.gridTemplateColumns = `repeat(${view.width}, var(--cell))`;
  for (const row of view.rows) {
    for (const cell of row) {
      const btn = el("button", `cell ${cell.state}`);
      btn.type = "button";
      if (cell.hint) btn.classList.add("hint");
      if (cell.lastMove) btn.classList.add("last");
      btn.dataset.c = String(cell.c);
      btn.dataset.r = String(cell.r);
      if (cell.state === "legal" && !view.finished) {
        btn.title = `digit ${cell.digit}`;
        if (!state.pending) {
          btn.addEventListener("click", () => handlers.onCellClick(cell.c, cell.r));
        }
      } else {
        btn.disabled = cell.state !== "legal";
      }
      grid.appendChild(btn);
    }
  }
  return grid;
}

export function render(root: HTMLElement, state: AppState, handlers: Handlers): void {
  root.replaceChildren();
  const page = el("div", "page");
  page.appendChild(el("h1", "", "runs and ladders"));

  if (state.error) {
    page.appendChild(el("p", "banner error", state.error));
  }

  if (!state.game) {
    page.appendChild(renderForm(handlers));
    root.appendChild(page);
    return;
  }

  const game = state.game;
  let view: BoardView;
  try {
    view = boardView(game, state.hint);
  } catch (err) {
    page.appendChild(el("p", "banner error", String(err)));
    root.appendChild(page);
    return;
  }

  const status = view.finished ? "banner finished" : "banner";
  const thinking = state.pending ? " (engine thinking…)" : "";
  page.appendChild(el("p", status, view.banner + thinking));
  page.appendChild(
    el(
      "p",
      "meta",
      `a=${game.a} b=${game.b} ${game.variant}` +
        (game.engine !== "none" ? ` — engine ${game.engine} as player ${game.engine_player}` : ""),
    ),
  );
  page.appendChild(renderBoard(view, state, handlers));
  page.appendChild(el("p", "transcript", `permutation: ${view.transcript}`));

  const controls = el("div", "controls");
  for (const digit of view.completingDigits) {
    const btn = el(
      "button",
      "complete",
      game.variant === "achievement" ? `complete with digit ${digit}` : `concede: forced digit ${digit}`,
    );
    btn.type = "button";
    btn.disabled = state.pending;
    btn.addEventListener("click", () => handlers.onDigit(digit));
    controls.appendChild(btn);
  }
  if (!view.finished) {
    const hintBtn = el("button", "", "hint");
    hintBtn.type = "button";
    hintBtn.disabled = state.pending;
    hintBtn.addEventListener("click", () => handlers.onHint());
    controls.appendChild(hintBtn);
  }
  const closeBtn = el("button", "", view.finished ? "new game" : "abandon game");
  closeBtn.type = "button";
  closeBtn.addEventListener("click", () => handlers.onClose());
  controls.appendChild(closeBtn);
  page.appendChild(controls);

  if (state.hint) {
    page.appendChild(
      el(
        "p",
        "hint-note",
        state.hint.losing_position
          ? "no saving move: every reply loses with best play"
          : `solver suggests digit${state.hint.digits.length > 1 ? "s" : ""} ${state.hint.digits.join(", ")}`,
      ),
    );
  }

  root.appendChild(page);
}
