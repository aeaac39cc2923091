"""Jeu de taquin slides, rectification, evacuation, and word invariants."""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .tableau import (
    EMPTY_TABLEAU,
    RowStrictTableau,
    Shape,
    is_skew_cellset,
    tableau_from_cells,
)

Cell = tuple[int, int]


def reading_word(t: RowStrictTableau) -> tuple[int, ...]:
    """Read down columns, rightmost column first."""
    return t.column_word()


def slide_targets(t: RowStrictTableau) -> list[Cell]:
    """Empty cells into which a slide may start, in (row, column) order.

    A target shares its bottom and/or right edge with the occupied region and
    keeps a skew diagram when added.
    """
    occupied = set(t.entries)
    candidates = set()
    for (r, c) in occupied:
        if c > 1:
            candidates.add((r, c - 1))
        if r > 1:
            candidates.add((r - 1, c))
    out = []
    for cell in sorted(candidates - occupied):
        r, c = cell
        if (r, c + 1) not in occupied and (r + 1, c) not in occupied:
            continue
        if is_skew_cellset(occupied | {cell}):
            out.append(cell)
    return out


def _slide(cells: dict[Cell, int], start: Cell) -> dict[Cell, int]:
    """Walk the hole from `start`, moving in the smaller of right/below
    (ties go right), until nothing lies right or below.  Total: a start with
    no such neighbor returns the cells unchanged."""
    cells = dict(cells)
    r, c = start
    while True:
        right = cells.get((r, c + 1))
        below = cells.get((r + 1, c))
        if right is None and below is None:
            return cells
        if below is None or (right is not None and right <= below):
            cells[(r, c)] = right
            del cells[(r, c + 1)]
            c += 1
        else:
            cells[(r, c)] = below
            del cells[(r + 1, c)]
            r += 1


def jdt_slide(t: RowStrictTableau, cell: Cell) -> RowStrictTableau:
    """One jeu de taquin slide of t into the empty cell."""
    cell = (int(cell[0]), int(cell[1]))
    if cell not in slide_targets(t):
        raise ValueError(f"{cell} is not a valid slide target")
    return tableau_from_cells(_slide(t.entries, cell))


def rectify(t: RowStrictTableau) -> RowStrictTableau:
    """Slide until the shape is straight.

    The default order picks the lexicographically last valid target each time;
    the result is independent of this choice (a tested property).
    """
    while True:
        targets = slide_targets(t)
        if not targets:
            return t
        t = jdt_slide(t, targets[-1])


def delta(t: RowStrictTableau) -> RowStrictTableau:
    """Delete the boxes containing 1, decrement the rest, and slide the holes
    closed from the bottom hole up."""
    if not t.is_straight:
        raise ValueError("delta requires a straight shape")
    if t.size == 0:
        raise ValueError("delta requires a nonempty tableau")
    cells = {cell: v - 1 for cell, v in t.entries.items() if v > 1}
    ones = sorted(cell for cell, v in t.entries.items() if v == 1)
    for hole in reversed(ones):
        cells = _slide(cells, hole)
    out = tableau_from_cells(cells)
    if not out.is_straight:
        raise AssertionError("delta produced a non-straight shape")
    return out


def evacuate(t: RowStrictTableau) -> RowStrictTableau:
    """Evacuation: box sets vacated by successive delta steps, refilled with
    the reversed alphabet (step i vacates the boxes that receive n+1-i)."""
    if not t.is_straight:
        raise ValueError("evacuate requires a straight shape")
    n = t.max_entry
    if n == 0:
        return EMPTY_TABLEAU
    shapes = [set(t.entries)]
    cur = t
    for _ in range(n):
        cur = delta(cur)
        shapes.append(set(cur.entries))
    cells: dict[Cell, int] = {}
    for i in range(1, n + 1):
        for cell in shapes[i - 1] - shapes[i]:
            cells[cell] = n + 1 - i
    return tableau_from_cells(cells)


@dataclass(frozen=True)
class GKProfile:
    """Greene-Kleitman invariants: values[i-1] is the longest subword
    decomposable into i disjoint nondecreasing subwords."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        deltas = self.increments()
        for a, b in zip(deltas, deltas[1:]):
            if b > a:
                raise ValueError(f"profile increments must weakly decrease: {self.values}")
        if any(v < 0 for v in self.values):
            raise ValueError("profile values must be nonnegative")

    def increments(self) -> tuple[int, ...]:
        prev = 0
        out = []
        for v in self.values:
            out.append(v - prev)
            prev = v
        return tuple(out)


MAX_GK_WORD = 14


def _best_chain_cover(word: tuple[int, ...], chains: int) -> int:
    """Longest subword of `word` coverable by `chains` nondecreasing subwords.

    Memoized search over (position, multiset of chain ends).  Two exact
    reductions keep the state space small: chain ends are compressed to the
    least remaining letter that is >= them (states with the same future merge),
    and a letter is only ever appended to the largest feasible end (an
    exchange argument; cross-checked against the unpruned search in tests).
    """
    n = len(word)
    suffix_letters: list[list[int]] = [[] for _ in range(n + 1)]
    for p in range(n - 1, -1, -1):
        letters = set(suffix_letters[p + 1])
        letters.add(word[p])
        suffix_letters[p] = sorted(letters)
    dead = (max(word) if word else 0) + 1

    def compress(ends: tuple[int, ...], p: int) -> tuple[int, ...]:
        letters = suffix_letters[p]
        out = []
        for e in ends:
            i = bisect_left(letters, e)
            out.append(letters[i] if i < len(letters) else dead)
        return tuple(sorted(out))

    memo: dict[tuple[int, tuple[int, ...]], int] = {}

    def best(p: int, ends: tuple[int, ...]) -> int:
        if p == n:
            return 0
        key = (p, ends)
        hit = memo.get(key)
        if hit is not None:
            return hit
        x = word[p]
        score = best(p + 1, compress(ends, p + 1))
        i = bisect_left(ends, x + 1) - 1  # largest end <= x
        if i >= 0:
            extended = ends[:i] + ends[i + 1 :] + (x,)
            score = max(score, 1 + best(p + 1, compress(extended, p + 1)))
        memo[key] = score
        return score

    return best(0, compress((0,) * chains, 0))


def gk_profile(word, m: int) -> GKProfile:
    """Greene-Kleitman invariants of a word, for chain counts 1..m.

    Words longer than 14 letters are out of contract: this is a verification
    oracle, not a performance kernel.
    """
    word = tuple(int(v) for v in word)
    if m < 1:
        raise ValueError("m must be at least 1")
    if len(word) > MAX_GK_WORD:
        raise ValueError(f"word of length {len(word)} exceeds the {MAX_GK_WORD}-letter contract")
    values = []
    for i in range(1, m + 1):
        if values and values[-1] == len(word):
            values.append(len(word))
        else:
            values.append(_best_chain_cover(word, i))
    return GKProfile(tuple(values))


def gk_profile_of_tableau(t: RowStrictTableau, m: int | None = None) -> GKProfile:
    """Profile of the reading word; m defaults to the number of columns."""
    if m is None:
        m = max(1, t.shape.outer.row(1))
    return gk_profile(reading_word(t), m)


def column_lengths(shape: Shape) -> tuple[int, ...]:
    return shape.conjugate().parts
