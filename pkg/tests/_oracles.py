"""Independent reference implementations used to cross-check the library.

Everything here is written directly from first principles (explicit
subsequence enumeration, rectangle unions, boundary-edge inspection, plain
game-tree search) and deliberately shares no code with the package.
"""

from itertools import combinations


def all_shapes(a, b):
    """Every staircase with b-1 rows of at most a-1 cells, lexicographically."""
    def rec(prefix, remaining, cap):
        if remaining == 0:
            yield prefix
            return
        for v in range(cap + 1):
            yield from rec(prefix + (v,), remaining - 1, v)
    yield from rec((), b - 1, a - 1)


def pairs_by_enumeration(perm):
    """(inc, dec) per position via brute-force subsequence enumeration."""
    out = []
    for i in range(len(perm)):
        inc = dec = 1
        for size in range(2, i + 2):
            for idxs in combinations(range(i), size - 1):
                idxs = idxs + (i,)
                vals = [perm[j] for j in idxs]
                if all(x < y for x, y in zip(vals, vals[1:])):
                    inc = max(inc, size)
                if all(x > y for x, y in zip(vals, vals[1:])):
                    dec = max(dec, size)
        out.append((inc, dec))
    return out


def shape_by_rectangles(perm, a, b):
    """Union of [1..c] x [1..r] rectangles over the shaded pairs."""
    pairs = pairs_by_enumeration(perm)
    assert all(inc < a and dec < b for inc, dec in pairs), "game already over"
    rows = [0] * (b - 1)
    for inc, dec in pairs:
        for r in range(dec):
            rows[r] = max(rows[r], inc)
    return tuple(rows)


def region_cells(shape):
    return {(c, r) for r, width in enumerate(shape, start=1) for c in range(1, width + 1)}


def legal_cells_by_definition(shape, a, b):
    """Open cells edge-adjacent (left or top) to the region; {(1,1)} if empty."""
    W, H = a - 1, b - 1
    region = region_cells(shape)
    if not region:
        return {(1, 1)}
    out = set()
    for r in range(1, H + 1):
        for c in range(1, W + 1):
            if (c, r) in region:
                continue
            if (c - 1, r) in region or (c, r - 1) in region:
                out.add((c, r))
    return out


def word_by_traversal(shape):
    """Letters of boundary cells (exposed bottom/right edges), lower-left first."""
    region = region_cells(shape)
    letters = []
    for c, r in sorted(region, key=lambda cell: (-cell[1], cell[0])):
        bottom = (c, r + 1) not in region
        right = (c + 1, r) not in region
        if bottom and right:
            letters.append("P")
        elif bottom:
            letters.append("R")
        elif right:
            letters.append("B")
    return "".join(letters)


def solve_by_search(shape, a, b, achievement=False):
    """True iff the mover wins, by plain depth-first search (no memoization)."""
    W, H = a - 1, b - 1
    if achievement and (shape[0] == W or shape[H - 1] >= 1):
        return True  # a completing digit exists and completing wins
    if all(v == W for v in shape):
        # Board full: the mover must complete a pattern.
        return achievement
    for c, r in legal_cells_by_definition(shape, a, b):
        child = tuple(max(v, c) if i < r else v for i, v in enumerate(shape))
        if not solve_by_search(child, a, b, achievement):
            return True
    return False


def max_game_length_by_search(a, b):
    """Longest possible game (plies incl. the final digit) by path search."""
    from functools import lru_cache

    W, H = a - 1, b - 1
    full = (W,) * H

    @lru_cache(maxsize=None)
    def longest(shape):
        if shape == full:
            return 0
        best = 0
        for c, r in legal_cells_by_definition(shape, a, b):
            child = tuple(max(v, c) if i < r else v for i, v in enumerate(shape))
            best = max(best, 1 + longest(child))
        return best

    return longest((0,) * H) + 1
