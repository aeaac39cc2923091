"""Partitions, skew shapes, and row-strict tableaux.

Conventions: boxes are addressed (row, column), 1-indexed, row 1 at the top.
Rows of a tableau strictly increase left to right; columns weakly increase
top to bottom.  All types are immutable values; operations return new
tableaux.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import factorial


class NotRussellError(ValueError):
    """Raised when a tableau fails the 3-row once-or-twice condition."""


@dataclass(frozen=True)
class Shape:
    """An integer partition, stored as its weakly decreasing positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        for i, p in enumerate(self.parts):
            if p <= 0:
                raise ValueError(f"shape parts must be positive, got {p}")
            if i > 0 and p > self.parts[i - 1]:
                raise ValueError(f"shape parts must weakly decrease: {self.parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def row(self, r: int) -> int:
        """Length of row r (1-indexed); 0 beyond the last row."""
        return self.parts[r - 1] if 1 <= r <= len(self.parts) else 0

    def contains(self, other: Shape) -> bool:
        return all(other.row(r) <= self.row(r) for r in range(1, len(other) + 1))

    def conjugate(self) -> Shape:
        if not self.parts:
            return Shape(())
        return Shape(tuple(sum(1 for p in self.parts if p >= c) for c in range(1, self.parts[0] + 1)))

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r in range(1, len(self.parts) + 1) for c in range(1, self.parts[r - 1] + 1)]

    @property
    def is_rectangular(self) -> bool:
        return len(set(self.parts)) <= 1


EMPTY_SHAPE = Shape(())


@dataclass(frozen=True)
class SkewShape:
    """A set difference outer/inner of two nested Young diagrams."""

    outer: Shape
    inner: Shape = EMPTY_SHAPE

    def __post_init__(self) -> None:
        if not self.outer.contains(self.inner):
            raise ValueError(f"inner {self.inner.parts} not contained in outer {self.outer.parts}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def is_straight(self) -> bool:
        return self.inner == EMPTY_SHAPE

    def cells(self) -> list[tuple[int, int]]:
        return [
            (r, c)
            for r in range(1, len(self.outer) + 1)
            for c in range(self.inner.row(r) + 1, self.outer.row(r) + 1)
        ]


@dataclass(frozen=True)
class RowStrictTableau:
    """A filling of a skew shape, strictly increasing in rows, weakly in columns.

    ``rows[i]`` holds the entries of row i+1 left to right, i.e. the values in
    columns inner_i+1 .. outer_i.  Skew rows may be empty tuples.
    """

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(tuple(int(v) for v in row) for row in self.rows))
        outer, inner = self.shape.outer, self.shape.inner
        if len(self.rows) != len(outer):
            raise ValueError(f"expected {len(outer)} rows, got {len(self.rows)}")
        for r, row in enumerate(self.rows, start=1):
            if len(row) != outer.row(r) - inner.row(r):
                raise ValueError(f"row {r} has {len(row)} entries, shape wants {outer.row(r) - inner.row(r)}")
            for v in row:
                if v <= 0:
                    raise ValueError(f"entries must be positive, got {v}")
            for a, b in zip(row, row[1:]):
                if a >= b:
                    raise ValueError(f"row {r} not strictly increasing: {row}")
        ent = self.entries
        for (r, c), v in ent.items():
            above = ent.get((r - 1, c))
            if above is not None and above > v:
                raise ValueError(f"column {c} not weakly increasing at row {r}")

    @classmethod
    def from_rows(cls, rows, inner=()) -> RowStrictTableau:
        rows = tuple(tuple(row) for row in rows)
        outer = Shape(tuple(len(row) + (inner[i] if i < len(inner) else 0) for i, row in enumerate(rows)))
        return cls(SkewShape(outer, Shape(tuple(p for p in inner if p > 0))), rows)

    @property
    def entries(self) -> dict[tuple[int, int], int]:
        """Mapping from (row, column) to entry."""
        out: dict[tuple[int, int], int] = {}
        for r, row in enumerate(self.rows, start=1):
            off = self.shape.inner.row(r)
            for j, v in enumerate(row):
                out[(r, off + j + 1)] = v
        return out

    @property
    def size(self) -> int:
        return self.shape.size

    @property
    def max_entry(self) -> int:
        return max((v for row in self.rows for v in row), default=0)

    @property
    def is_straight(self) -> bool:
        return self.shape.is_straight

    @property
    def is_rectangular(self) -> bool:
        return self.is_straight and self.shape.outer.is_rectangular

    def values(self) -> list[int]:
        return [v for row in self.rows for v in row]

    def column_word(self) -> tuple[int, ...]:
        """Column reading word: columns right to left, each top to bottom."""
        ent = self.entries
        if not ent:
            return ()
        max_col = max(c for _, c in ent)
        word: list[int] = []
        for c in range(max_col, 0, -1):
            for r in range(1, len(self.rows) + 1):
                if (r, c) in ent:
                    word.append(ent[(r, c)])
        return tuple(word)


EMPTY_TABLEAU = RowStrictTableau(SkewShape(EMPTY_SHAPE, EMPTY_SHAPE), ())


def skew_shape_from_cells(cells) -> SkewShape:
    """Infer the tight skew shape covering exactly the given boxes.

    Rows above the top occupied row are retained as empty (the skew shape
    keeps absolute coordinates).  Raises if the boxes do not form a skew
    diagram.
    """
    cells = set(cells)
    if not cells:
        return SkewShape(EMPTY_SHAPE, EMPTY_SHAPE)
    if any(r < 1 or c < 1 for r, c in cells):
        raise ValueError("boxes must have positive coordinates")
    max_row = max(r for r, _ in cells)
    spans: list[tuple[int, int] | None] = []
    for r in range(1, max_row + 1):
        cols = [c for (rr, c) in cells if rr == r]
        if not cols:
            spans.append(None)
            continue
        lo, hi = min(cols), max(cols)
        if len(cols) != hi - lo + 1:
            raise ValueError(f"row {r} is not contiguous: {sorted(cols)}")
        spans.append((lo, hi))
    outer = [0] * max_row
    inner = [0] * max_row
    for r in range(max_row, 0, -1):
        span = spans[r - 1]
        if span is None:
            below = outer[r] if r < max_row else 0
            outer[r - 1] = inner[r - 1] = below
        else:
            outer[r - 1] = span[1]
            inner[r - 1] = span[0] - 1
    for r in range(1, max_row):
        if outer[r] > outer[r - 1] or inner[r] > inner[r - 1]:
            raise ValueError("cells do not form a skew diagram")
    return SkewShape(Shape(tuple(outer)), Shape(tuple(p for p in inner if p > 0)))


def tableau_from_cells(cells: dict[tuple[int, int], int]) -> RowStrictTableau:
    """Rebuild a tableau from a cell map, inferring the tight skew shape."""
    if not cells:
        return EMPTY_TABLEAU
    shape = skew_shape_from_cells(cells)
    outer, inner = shape.outer, shape.inner
    rows = tuple(
        tuple(cells[(r, c)] for c in range(inner.row(r) + 1, outer.row(r) + 1))
        for r in range(1, len(outer) + 1)
    )
    return RowStrictTableau(shape, rows)


def is_skew_cellset(cells) -> bool:
    """True iff the given set of boxes is the cell set of some skew diagram."""
    try:
        skew_shape_from_cells(cells)
    except ValueError:
        return False
    return True


def is_standard(t: RowStrictTableau) -> bool:
    """True iff entries are exactly 1..n, each once (columns then auto-strict)."""
    return sorted(t.values()) == list(range(1, t.size + 1))


def russell_repetition(t: RowStrictTableau) -> int:
    """The number of doubled values in a 3-row rectangular once-or-twice filling.

    Rejects (NotRussellError) tableaux of the wrong shape and fillings where
    some value in 1..max is missing or appears three or more times.
    """
    parts = t.shape.outer.parts
    if not t.is_straight or len(parts) != 3 or not t.shape.outer.is_rectangular:
        raise NotRussellError(f"shape {parts} is not a 3-row rectangle")
    counts: dict[int, int] = {}
    for v in t.values():
        counts[v] = counts.get(v, 0) + 1
    for v in range(1, t.max_entry + 1):
        got = counts.get(v, 0)
        if got == 0:
            raise NotRussellError(f"value {v} is missing")
        if got > 2:
            raise NotRussellError(f"value {v} appears {got} times")
    return sum(1 for n in counts.values() if n == 2)


def _standardize_cells(t: RowStrictTableau) -> tuple[dict[tuple[int, int], int], dict[int, tuple[int, int]]]:
    """Run the duplicate-splitting relabeling; also report where each doubled
    original value ended up, as {original value: (j, j+1) pair start j}."""
    cells = dict(t.entries)
    originals = {cell: v for cell, v in cells.items()}
    doubled = sorted({v for v in t.values() if sum(1 for x in t.values() if x == v) == 2})
    while True:
        seen: dict[int, list[tuple[int, int]]] = {}
        for cell, v in cells.items():
            seen.setdefault(v, []).append(cell)
        dups = sorted(v for v, cs in seen.items() if len(cs) > 1)
        if not dups:
            break
        i = dups[0]
        if len(seen[i]) != 2:
            raise NotRussellError(f"value {i} appears {len(seen[i])} times")
        a, b = sorted(seen[i])  # row order; the lower instance gets i+1
        if a[0] == b[0]:
            raise NotRussellError(f"doubled value {i} appears twice in row {a[0]}")
        for cell, v in cells.items():
            if v > i:
                cells[cell] = v + 1
        cells[b] = i + 1
    pair_starts = {}
    for v in doubled:
        spots = sorted(cell for cell, orig in originals.items() if orig == v)
        upper, lower = spots
        j, j1 = cells[upper], cells[lower]
        if j1 != j + 1:
            raise NotRussellError(f"doubled value {v} split into non-consecutive {j}, {j1}")
        pair_starts[v] = j
    return cells, pair_starts


def standardize(t: RowStrictTableau) -> RowStrictTableau:
    """Split doubled values, smallest first, into consecutive entries.

    The doubled value i becomes i in its upper box and i+1 in its lower box,
    with larger entries shifted up to make room; the result is a standard
    Young tableau of the same shape.
    """
    russell_repetition(t)
    cells, _ = _standardize_cells(t)
    return tableau_from_cells(cells)


def standardize_with_pairs(t: RowStrictTableau) -> tuple[RowStrictTableau, tuple[int, ...]]:
    """Standardize and also return the sorted pair starts j (doubled value -> j, j+1)."""
    russell_repetition(t)
    cells, pair_starts = _standardize_cells(t)
    return tableau_from_cells(cells), tuple(sorted(pair_starts.values()))


def rotate_complement(t: RowStrictTableau, n: int) -> RowStrictTableau:
    """Rotate a rectangular tableau 180 degrees and send each entry x to n+1-x."""
    if not t.is_rectangular:
        raise ValueError(f"shape {t.shape.outer.parts} is not rectangular")
    if t.size and n < t.max_entry:
        raise ValueError(f"alphabet size {n} is below max entry {t.max_entry}")
    rows = tuple(tuple(n + 1 - v for v in reversed(row)) for row in reversed(t.rows))
    return RowStrictTableau.from_rows(rows)


def count_standard(shape: Shape) -> int:
    """Number of standard Young tableaux of a straight shape (hook lengths)."""
    parts = shape.parts
    if not parts:
        return 1
    conj = shape.conjugate().parts
    hooks = 1
    for r, c in shape.cells():
        hooks *= (parts[r - 1] - c) + (conj[c - 1] - r) + 1
    return factorial(shape.size) // hooks


def enumerate_standard(shape: Shape) -> list[RowStrictTableau]:
    """All standard Young tableaux of a straight shape, sorted by column word."""
    cells = shape.cells()
    n = len(cells)
    results: list[RowStrictTableau] = []
    filled: dict[tuple[int, int], int] = {}

    def grow(v: int) -> None:
        if v > n:
            results.append(tableau_from_cells(dict(filled)))
            return
        for (r, c) in cells:
            if (r, c) in filled:
                continue
            if (r > 1 and (r - 1, c) not in filled) or (c > 1 and (r, c - 1) not in filled):
                continue
            filled[(r, c)] = v
            grow(v + 1)
            del filled[(r, c)]

    grow(1)
    results.sort(key=lambda t: t.column_word())
    return results


def _merge_sets(limit: int, h: int) -> list[tuple[int, ...]]:
    """Size-h subsets of 1..limit with no two consecutive members."""
    out = []
    for combo in itertools.combinations(range(1, limit + 1), h):
        if all(b - a > 1 for a, b in zip(combo, combo[1:])):
            out.append(combo)
    return out


def enumerate_russell(k: int, h: int) -> list[RowStrictTableau]:
    """All 3-row rectangular once-or-twice fillings with exactly h doubled values.

    Built by collapsing h disjoint consecutive pairs (j, j+1) in each standard
    tableau of shape (k,k,k) and keeping the fillings whose standardization
    round-trips; for h = 0 this is exactly enumerate_standard((k,k,k)).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if h < 0 or h > 3 * k - 1:
        raise ValueError(f"repetition {h} out of range for k={k}")
    shape = Shape((k, k, k))
    if h == 0:
        return enumerate_standard(shape)
    results = []
    for u in enumerate_standard(shape):
        ent = u.entries
        for starts in _merge_sets(3 * k - 1, h):
            collapsed = {
                cell: v - sum(1 for s in starts if s < v) for cell, v in ent.items()
            }
            try:
                t = tableau_from_cells(collapsed)
            except ValueError:
                continue
            try:
                if russell_repetition(t) != h:
                    continue
                back, pairs = standardize_with_pairs(t)
            except NotRussellError:
                continue
            if back == u and pairs == starts:
                results.append(t)
    results.sort(key=lambda t: t.column_word())
    return results


# --- text and JSON forms ------------------------------------------------

def parse_tableau(text: str) -> RowStrictTableau:
    """Parse the text form: one row per line, entries space-separated."""
    rows = []
    for lineno, line in enumerate(text.strip().splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            rows.append(tuple(int(tok) for tok in line.split()))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if not rows:
        return EMPTY_TABLEAU
    return RowStrictTableau.from_rows(rows)


def format_tableau(t: RowStrictTableau) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in t.rows)


def tableau_to_json(t: RowStrictTableau) -> dict:
    doc: dict = {"rows": [list(row) for row in t.rows]}
    if not t.is_straight:
        doc["inner"] = list(t.shape.inner.parts)
    return doc


def tableau_from_json(doc: dict | str) -> RowStrictTableau:
    if isinstance(doc, str):
        doc = json.loads(doc)
    return RowStrictTableau.from_rows(
        [tuple(row) for row in doc["rows"]], tuple(doc.get("inner", ()))
    )
