"""Acceptance gate: every headline result this package claims, checked at
full strength.  Each test prints one PASS/FAIL line (run with -s to see
them on success)."""

import itertools
import resource
import time

import numpy as np

from esgame.board import (
    Cell,
    GameConfig,
    apply_cell,
    is_full,
    legal_cells,
    perm_to_shape,
    prefix_pairs,
    shape_to_word,
    transpose_shape,
    word_to_shape,
)
from esgame.solver import (
    ACHIEVEMENT,
    AVOIDANCE,
    count_loss_states,
    enumerate_shapes,
    get_table,
    label_states,
    winner_from_start,
)
from esgame.strategy import classify, verify_strategy

from _oracles import max_game_length_by_search


def _report(name: str, ok: bool, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'}: {name}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, line


# The full loss-state census grid, frozen before the solver existed.
CENSUS_GRID = {
    2: {2: 1, 3: 2, 4: 2, 5: 3, 6: 3, 7: 4, 8: 4, 9: 5},
    3: {3: 2, 4: 3, 5: 4, 6: 5, 7: 6, 8: 7, 9: 8},
    4: {4: 6, 5: 10, 6: 15, 7: 21, 8: 28, 9: 36},
    5: {5: 18, 6: 31, 7: 46, 8: 67, 9: 91},
    6: {6: 58, 7: 103, 8: 164, 9: 253},
}


def test_census_grid_is_reproduced_exactly():
    start = time.perf_counter()
    mismatches = []
    for b, row in CENSUS_GRID.items():
        for a, expected in row.items():
            got = count_loss_states(GameConfig(a, b), AVOIDANCE).loss_count
            if got != expected:
                mismatches.append((a, b, got, expected))
    elapsed = time.perf_counter() - start
    _report(
        "loss-state census grid, 30 cells exact",
        not mismatches and elapsed < 10,
        f"{elapsed:.2f}s" + (f", mismatches={mismatches}" if mismatches else ""),
    )


def test_perfect_play_winners_match_the_theorems():
    bad = []
    for b in (3, 4, 5):
        for a in range(b, 13):
            if winner_from_start(GameConfig(a, b), AVOIDANCE) != 1:
                bad.append(("avoidance", a, b))
    for a in range(2, 13):
        expected = 2 if a % 2 else 1
        if winner_from_start(GameConfig(a, 2), AVOIDANCE) != expected:
            bad.append(("avoidance", a, 2))
    for a in range(2, 13):
        if winner_from_start(GameConfig(a, 2), ACHIEVEMENT) != 2:
            bad.append(("achievement", a, 2))
    for a in range(3, 13):
        expected = 1 if a % 2 else 2
        if winner_from_start(GameConfig(a, 3), ACHIEVEMENT) != expected:
            bad.append(("achievement", a, 3))
    for b in (4, 5, 6):
        for a in range(b, 13):
            if winner_from_start(GameConfig(a, b), ACHIEVEMENT) != 1:
                bad.append(("achievement", a, b))
    _report("perfect-play winners for all stated configs", not bad, f"bad={bad}")


def test_strategies_are_certified_against_the_solver():
    problems = []
    for b in (3, 4, 5):
        for a in range(b, 13):
            cfg = GameConfig(a, b)
            report = verify_strategy(cfg, AVOIDANCE, get_table(cfg, AVOIDANCE))
            if report.failures:
                problems.append((a, b, "failures", report.failures))
            if b in (3, 4) and report.fallbacks:
                problems.append((a, b, "fallbacks", report.fallbacks))
            if b == 5 and report.fallbacks:
                # a fallback is tolerable only if the solver certifies it
                for entry in report.entries:
                    if entry.fallback:
                        print(f"  fallback at {entry.shape}: {entry.move}")
                        if not entry.certified:
                            problems.append((a, b, "uncertified fallback", entry))
    # every template shape the strategies aim for must be a next-player loss
    for b in (3, 4, 5):
        for a in range(b, 13):
            cfg = GameConfig(a, b)
            table = get_table(cfg, AVOIDANCE)
            for shape in enumerate_shapes(cfg):
                family, _ = classify(shape, cfg)
                if family != "NONE" and not table.is_loss(shape):
                    problems.append((a, b, "template not a loss", shape, family))
    _report(
        "strategy certification: no failures, no unjustified fallbacks,"
        " all target templates are losses",
        not problems,
        f"problems={problems[:4]}",
    )


def test_game_lengths_match_the_claimed_ranges():
    bad = []
    for a in range(2, 11):
        report = verify_strategy(GameConfig(a, 2), AVOIDANCE)
        if report.leaf_totals != {a}:
            bad.append((a, 2, report.leaf_totals))
    for a in range(3, 11):
        report = verify_strategy(GameConfig(a, 3), AVOIDANCE)
        if report.leaf_totals != {2 * a - 2}:
            bad.append((a, 3, report.leaf_totals))
    for a in range(4, 11):
        report = verify_strategy(GameConfig(a, 4), AVOIDANCE)
        # counting the decided plies (the final digit is forced, not chosen)
        if {n - 1 for n in report.leaf_totals} - {2 * a - 3, 2 * a - 1}:
            bad.append((a, 4, report.leaf_totals))
    for a in range(5, 11):
        report = verify_strategy(GameConfig(a, 5), AVOIDANCE)
        if max(report.leaf_totals) > 4 * a - 6:
            bad.append((a, 5, max(report.leaf_totals)))
    for a in range(2, 7):
        for b in range(2, 7):
            if max_game_length_by_search(a, b) != (a - 1) * (b - 1) + 1:
                bad.append(("collab", a, b))
    _report("game-length ranges and the collaborative maximum", not bad, f"bad={bad}")


def test_worked_board_examples():
    cfg = GameConfig(6, 5)
    shape = perm_to_shape((1, 6, 3, 4, 2, 5), cfg)
    ok = shape == (4, 4, 2, 0)
    ok = ok and legal_cells(shape, cfg) == {
        Cell(5, 1),
        Cell(5, 2),
        Cell(3, 3),
        Cell(4, 3),
        Cell(2, 4),
        Cell(1, 4),
    }
    ok = ok and shape_to_word(shape) == "RPRPB"
    ok = ok and word_to_shape("RPRPB", cfg) == shape
    _report("worked 6x5 example: shape, legal cells, boundary word", ok)


def _digit_image_equals_legal_cells(n: int) -> bool:
    cfg = GameConfig(n + 2, n + 2)  # wide enough that every pair lands on-board
    legal_by_shape = {}
    for perm in itertools.permutations(range(1, n + 1)):
        pairs = prefix_pairs(perm)
        image = set()
        for m in range(1, n + 2):
            inc = 1 + max((p.inc for v, p in zip(perm, pairs) if v < m), default=0)
            dec = 1 + max((p.dec for v, p in zip(perm, pairs) if v >= m), default=0)
            image.add(Cell(inc, dec))
        shape = perm_to_shape(perm, cfg)
        if shape not in legal_by_shape:
            legal_by_shape[shape] = legal_cells(shape, cfg)
        if image != legal_by_shape[shape]:
            return False
    return True


def _pairs_are_distinct_for_every_permutation(n: int, batch: int = 200_000) -> bool:
    perms = itertools.permutations(range(n))
    while True:
        chunk = list(itertools.islice(perms, batch))
        if not chunk:
            return True
        values = np.array(chunk, dtype=np.int8)
        rows = values.shape[0]
        inc = np.ones((rows, n), dtype=np.int8)
        dec = np.ones((rows, n), dtype=np.int8)
        for j in range(1, n):
            smaller = values[:, :j] < values[:, j : j + 1]
            inc[:, j] = 1 + np.max(np.where(smaller, inc[:, :j], 0), axis=1)
            dec[:, j] = 1 + np.max(np.where(smaller, 0, dec[:, :j]), axis=1)
        codes = inc.astype(np.int16) * 16 + dec
        codes.sort(axis=1)
        if (np.diff(codes, axis=1) == 0).any():
            return False


def _labels_are_a_fixed_point(table) -> bool:
    cfg, variant = table.config, table.variant
    for shape in enumerate_shapes(cfg):
        if variant == ACHIEVEMENT and (shape[0] == cfg.width or shape[-1] >= 1):
            if not table.is_win(shape):
                return False
            continue
        if is_full(shape, cfg):
            if not table.is_loss(shape):  # forced to complete a pattern
                return False
            continue
        best = any(
            table.is_loss(apply_cell(shape, cell, cfg))
            for cell in legal_cells(shape, cfg)
        )
        if table.is_win(shape) != best:
            return False
    return True


def test_exhaustive_property_suites():
    ok = all(_digit_image_equals_legal_cells(n) for n in range(1, 9))
    _report("digit-image equals legal cells, exhaustive n<=8", ok)

    ok = all(_pairs_are_distinct_for_every_permutation(n) for n in range(1, 11))
    _report("run-length pairs distinct for every permutation, n<=10", ok)

    bad = []
    for a in range(2, 10):
        for b in range(2, 10):
            cfg = GameConfig(a, b)
            flipped = GameConfig(b, a)
            for variant in (AVOIDANCE, ACHIEVEMENT):
                table = get_table(cfg, variant)
                if not _labels_are_a_fixed_point(table):
                    bad.append((a, b, variant, "fixed point"))
                mirror = get_table(flipped, variant)
                for shape in enumerate_shapes(cfg):
                    t = transpose_shape(shape, cfg)
                    if table.is_win(shape) != mirror.is_win(t):
                        bad.append((a, b, variant, "transpose", shape))
                        break
    _report("solver fixed point and transpose duality up to 9x9", not bad, f"bad={bad[:3]}")

    bad = [
        (a, b)
        for b in range(3, 10)
        for a in range(b, 10)
        if winner_from_start(GameConfig(a, b), ACHIEVEMENT)
        != winner_from_start(GameConfig(a - 1, b - 1), AVOIDANCE)
    ]
    _report("achievement winner equals the one-smaller-board winner", not bad, f"bad={bad}")


def test_labeling_performance_on_the_largest_board():
    start = time.perf_counter()
    table = label_states(GameConfig(12, 12), AVOIDANCE)
    elapsed = time.perf_counter() - start
    peak_mb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 1024
    ok = len(table.labels) == 705432 and elapsed < 60 and peak_mb < 1024
    _report(
        "12x12 labeling under 60s and 1GB",
        ok,
        f"{elapsed:.2f}s, peak {peak_mb:.0f} MB, states {len(table.labels)}",
    )
