"""Command-line toolkit for the pattern-forming game.

Subcommands: solve (perfect-play winner), count (loss-state census grid),
verify (exhaustive strategy certification), simulate (policy-vs-policy
statistics), play (interactive terminal game), word (boundary-word codec),
and serve (HTTP service).

Exit codes: 0 success, 2 flag errors, 3 verification failure, 4 resource
limits.
"""

import sys
from contextlib import contextmanager

import click

from .board import (
    Cell,
    GameConfig,
    WordError,
    check_shape,
    shape_to_word,
    word_to_shape,
)
from .engine import (
    PlayPolicy,
    engine_reply,
    exhaustive_verify,
    format_game_log,
    legal_plays,
    new_session,
    play_digit,
)
from .engine import completing_digits as session_completing_digits
from .engine import simulate as run_simulation
from .solver import (
    ACHIEVEMENT,
    AVOIDANCE,
    CENSUS_CSV_HEADER,
    SolverLimitError,
    census_csv_line,
    count_loss_states,
    winner_from_start,
)
from .strategy import StrategyUnavailableError, strategy_available

EXIT_VERIFY_FAILED = 3
EXIT_LIMITS = 4

VARIANTS = (AVOIDANCE, ACHIEVEMENT)

variant_option = click.option(
    "--variant",
    type=click.Choice(VARIANTS),
    default=AVOIDANCE,
    show_default=True,
    help="Which player the completed pattern hurts or helps.",
)


def _config(a: int, b: int) -> GameConfig:
    if a < 2 or b < 2:
        raise click.UsageError("a and b must both be at least 2")
    return GameConfig(a, b)


@contextmanager
def _resource_guard():
    """Map solver state-limit blowups onto exit code 4."""
    try:
        yield
    except SolverLimitError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_LIMITS)


@click.group()
@click.version_option(package_name="esgame")
def main():
    """Two players grow a permutation; runs of length a or b end the game."""


@main.command()
@click.option("--a", "a", type=int, required=True, help="Increasing-run target.")
@click.option("--b", "b", type=int, required=True, help="Decreasing-run target.")
@variant_option
def solve(a, b, variant):
    """Print the perfect-play winner from the empty board."""
    cfg = _config(a, b)
    with _resource_guard():
        winner = winner_from_start(cfg, variant)
        census = count_loss_states(cfg, variant)
    click.echo(f"winner=player{winner} states={census.total_states}")


def _census_cell(cfg, variant) -> str:
    census = count_loss_states(cfg, variant)
    return (
        f"{census.loss_count} of {census.total_states}"
        f" ({float(census.fraction):.4f})"
    )


@main.command()
@click.option("--a-min", type=int, required=True)
@click.option("--a-max", type=int, required=True)
@click.option("--b-min", type=int, required=True)
@click.option("--b-max", type=int, required=True)
@variant_option
@click.option(
    "--format",
    "fmt",
    type=click.Choice(("csv", "table")),
    default="csv",
    show_default=True,
)
def count(a_min, a_max, b_min, b_max, variant, fmt):
    """Census of next-player-loss states over a grid of configurations."""
    if a_min > a_max or b_min > b_max:
        return  # empty range, empty output
    _config(a_min, b_min)
    a_range = range(a_min, a_max + 1)
    b_range = range(b_min, b_max + 1)
    with _resource_guard():
        if fmt == "csv":
            click.echo(CENSUS_CSV_HEADER)
            for b in b_range:
                for a in a_range:
                    cfg = GameConfig(a, b)
                    line = census_csv_line(cfg, variant, count_loss_states(cfg, variant))
                    click.echo(line)
        else:
            header = ["b\\a"] + [str(a) for a in a_range]
            rows = [header]
            for b in b_range:
                rows.append(
                    [str(b)]
                    + [_census_cell(GameConfig(a, b), variant) for a in a_range]
                )
            widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
            for row in rows:
                click.echo("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())


@main.command()
@click.option("--b", "b", type=int, required=True, help="Row count is b-1.")
@click.option("--a-min", type=int, default=None, help="Defaults to b.")
@click.option("--a-max", type=int, default=12, show_default=True)
@variant_option
def verify(b, a_min, a_max, variant):
    """Certify the move-by-move strategy against the exact solver."""
    if b < 2:
        raise click.UsageError("a and b must both be at least 2")
    a_min = b if a_min is None else a_min
    if not strategy_available(GameConfig(max(a_min, b, 2), b), variant):
        raise click.UsageError(f"no strategy for b={b} {variant}")
    if a_min < b:
        raise click.UsageError(f"--a-min must be at least b={b}")
    failed = False
    with _resource_guard():
        for a in range(a_min, a_max + 1):
            report = exhaustive_verify(GameConfig(a, b), variant)
            lengths = ",".join(str(n) for n in sorted(report.leaf_totals))
            click.echo(
                f"a={a} b={b} variant={variant} nodes={report.nodes}"
                f" failures={report.failures} fallbacks={report.fallbacks}"
                f" lengths={lengths}"
            )
            failed = failed or not report.ok
    click.echo("FAIL" if failed else "PASS")
    if failed:
        sys.exit(EXIT_VERIFY_FAILED)


def _policy(kind: str, cfg, variant, seed) -> PlayPolicy:
    if kind == "strategy" and not strategy_available(cfg, variant):
        raise click.UsageError(f"no strategy for b={cfg.b} {variant}")
    return PlayPolicy(kind, seed=seed)


@main.command()
@click.option("--a", "a", type=int, required=True)
@click.option("--b", "b", type=int, required=True)
@variant_option
@click.option("--p1", type=click.Choice(("strategy", "solver", "random")), default="strategy", show_default=True)
@click.option("--p2", type=click.Choice(("strategy", "solver", "random")), default="random", show_default=True)
@click.option("--trials", type=int, default=20, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True, help="Base seed for random policies.")
def simulate(a, b, variant, p1, p2, trials, seed):
    """Play complete games between two policies and summarize the lengths."""
    cfg = _config(a, b)
    if trials < 1:
        raise click.UsageError("--trials must be positive")
    with _resource_guard():
        stats = run_simulation(
            cfg,
            variant,
            _policy(p1, cfg, variant, seed),
            _policy(p2, cfg, variant, seed + 1),
            trials,
        )
    click.echo(
        f"trials={stats.trials} min={stats.min_length} max={stats.max_length}"
        f" winner1={stats.winners[1]} winner2={stats.winners[2]}"
    )
    for length, games in stats.histogram.items():
        click.echo(f"length {length}: {games}")


def _render_session(sess) -> str:
    """Board grid with shaded `#`, eliminated `x`, open `.` cells."""
    cfg = sess.config
    shaded = {Cell(p.inc, p.dec) for p in sess.pairs if p.inc <= cfg.width and p.dec <= cfg.height}
    lines = []
    for r in range(1, cfg.height + 1):
        row = []
        for c in range(1, cfg.width + 1):
            if Cell(c, r) in shaded:
                row.append("#")
            elif c <= sess.shape[r - 1]:
                row.append("x")
            else:
                row.append(".")
        lines.append(" ".join(row))
    return "\n".join(lines)


def _echo_position(sess):
    click.echo(_render_session(sess))
    moves = ",".join(str(m) for m in sess.moves) or "-"
    perm = ",".join(str(v) for v in sess.transcript) or "-"
    click.echo(f"moves: {moves}")
    click.echo(f"permutation: {perm}")
    _, digits = legal_plays(sess)
    if sess.variant == ACHIEVEMENT:
        digits = digits + session_completing_digits(sess)
    click.echo(("legal digits: " + " ".join(str(d) for d in digits)).rstrip())


@main.command()
@click.option("--a", "a", type=int, required=True)
@click.option("--b", "b", type=int, required=True)
@variant_option
@click.option(
    "--engine",
    type=click.Choice(("strategy", "solver", "random")),
    default="strategy",
    show_default=True,
)
@click.option("--human-first/--engine-first", default=True)
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for a random engine.")
def play(a, b, variant, engine, human_first, seed):
    """Play a game against an engine in the terminal."""
    cfg = _config(a, b)
    policy = _policy(engine, cfg, variant, seed)
    human = 1 if human_first else 2
    sess = new_session(cfg, variant)
    with _resource_guard():
        while sess.in_progress:
            if sess.to_move == human:
                _echo_position(sess)
                while True:
                    digit = click.prompt("digit", type=int)
                    try:
                        play_digit(sess, digit)
                        break
                    except ValueError as exc:
                        click.echo(f"invalid: {exc}")
            else:
                sess, digit = engine_reply(sess, policy)
                click.echo(f"engine plays {digit}")
    click.echo(format_game_log(sess))
    if sess.status.winner == human:
        click.echo("you win")
    else:
        click.echo("engine wins")


@main.group()
def word():
    """Convert between region shapes and their boundary words."""


@word.command()
@click.option("--shape", "shape_str", required=True, help='Row lengths, e.g. "4,4,2,0".')
@click.option("--a", "a", type=int, required=True)
@click.option("--b", "b", type=int, required=True)
def encode(shape_str, a, b):
    """Print the boundary word of a shape."""
    cfg = _config(a, b)
    try:
        rows = tuple(int(tok) for tok in shape_str.split(","))
        shape = check_shape(rows, cfg)
        click.echo(shape_to_word(shape))
    except ValueError as exc:  # BoardError subclasses ValueError
        raise click.UsageError(str(exc))


@word.command()
@click.option("--word", "word_str", required=True, help="Boundary word, e.g. RPRPB.")
@click.option("--a", "a", type=int, required=True)
@click.option("--b", "b", type=int, required=True)
def decode(word_str, a, b):
    """Print the shape a boundary word encodes."""
    cfg = _config(a, b)
    try:
        shape = word_to_shape(word_str, cfg)
    except WordError as exc:
        raise click.UsageError(str(exc))
    click.echo(",".join(str(n) for n in shape))


@main.command()
@click.option("--port", type=int, default=8080, show_default=True)
@click.option(
    "--static-dir",
    type=click.Path(exists=True, file_okay=False),
    default=None,
    help="Serve a built web UI bundle at /.",
)
def serve(port, static_dir):
    """Run the HTTP game service."""
    import socket

    import uvicorn

    from .service import create_app

    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.bind(("127.0.0.1", port))
    except OSError as exc:
        raise click.ClickException(f"cannot bind port {port}: {exc}")
    finally:
        probe.close()
    uvicorn.run(create_app(static_dir=static_dir), host="127.0.0.1", port=port)


if __name__ == "__main__":
    main()
