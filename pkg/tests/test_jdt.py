import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from webweave.jdt import (
    GKProfile,
    column_lengths,
    delta,
    evacuate,
    gk_profile,
    gk_profile_of_tableau,
    jdt_slide,
    reading_word,
    rectify,
    slide_targets,
)
from webweave.tableau import (
    EMPTY_TABLEAU,
    RowStrictTableau,
    Shape,
    enumerate_russell,
    enumerate_standard,
    rotate_complement,
    tableau_from_cells,
)

T = RowStrictTableau.from_rows


# --- independent oracles --------------------------------------------------

def gk_unpruned(word, chains):
    """Reference Greene-Kleitman search: branch over every distinct feasible
    chain end, memoized on (position, sorted ends), no state compression."""
    n = len(word)
    memo = {}

    def best(p, ends):
        if p == n:
            return 0
        key = (p, ends)
        if key in memo:
            return memo[key]
        x = word[p]
        res = best(p + 1, ends)
        tried = set()
        for idx, e in enumerate(ends):
            if e <= x and e not in tried:
                tried.add(e)
                res = max(res, 1 + best(p + 1, tuple(sorted(ends[:idx] + ends[idx + 1 :] + (x,)))))
        memo[key] = res
        return res

    return best(0, (0,) * chains)


def longest_strictly_decreasing(seq):
    best = [1] * len(seq)
    for i in range(len(seq)):
        for j in range(i):
            if seq[j] > seq[i]:
                best[i] = max(best[i], best[j] + 1)
    return max(best, default=0)


def gk_by_subsets(word, chains):
    """Dilworth oracle: a subword splits into <= i nondecreasing chains iff its
    longest strictly decreasing subsequence has length <= i."""
    n = len(word)
    out = 0
    for mask in range(1 << n):
        sub = [word[i] for i in range(n) if mask >> i & 1]
        if longest_strictly_decreasing(sub) <= chains:
            out = max(out, len(sub))
    return out


@st.composite
def skew_row_strict(draw, max_rows=4, max_width=4, max_boxes=10):
    rows = draw(st.integers(1, max_rows))
    outer = sorted(
        (draw(st.integers(1, max_width)) for _ in range(rows)), reverse=True
    )
    inner = []
    cap = outer[0]
    for r in range(rows):
        cap = min(cap, draw(st.integers(0, outer[r])))
        inner.append(cap)
    inner = [min(inner[r], outer[r]) for r in range(rows)]
    for r in range(1, rows):
        inner[r] = min(inner[r], inner[r - 1])
    cells = {}
    for r in range(1, rows + 1):
        for c in range(inner[r - 1] + 1, outer[r - 1] + 1):
            lo = 1
            if (r, c - 1) in cells:
                lo = max(lo, cells[(r, c - 1)] + 1)
            if (r - 1, c) in cells:
                lo = max(lo, cells[(r - 1, c)])
            cells[(r, c)] = lo + draw(st.integers(0, 2))
    if not cells or len(cells) > max_boxes:
        return EMPTY_TABLEAU
    return tableau_from_cells(cells)


# --- reading words ---------------------------------------------------------

class TestReadingWord:
    def test_russell_example(self):
        assert reading_word(T([[1, 2], [1, 3], [3, 4]])) == (2, 3, 4, 1, 1, 3)

    def test_lemma_example(self):
        t = T([[1, 2, 3, 5], [1, 2, 4, 6], [3, 5, 7, 8]])
        assert reading_word(t) == (5, 6, 8, 3, 4, 7, 2, 2, 5, 1, 1, 3)

    def test_empty(self):
        assert reading_word(EMPTY_TABLEAU) == ()


# --- slides ----------------------------------------------------------------

def skew(cells):
    return tableau_from_cells(cells)


class TestJdtSlide:
    def test_paper_walkthrough(self):
        t = skew({(1, 2): 1, (1, 3): 3, (2, 1): 1, (2, 2): 2, (2, 3): 3, (3, 1): 3})
        got = jdt_slide(t, (1, 1))
        assert got == skew({(1, 1): 1, (1, 2): 2, (1, 3): 3, (2, 1): 1, (2, 2): 3, (3, 1): 3})

    def test_single_box_moves_left(self):
        t = skew({(1, 2): 5})
        assert jdt_slide(t, (1, 1)) == T([[5]])

    def test_two_by_two_skew(self):
        # hand-run: hole takes the 1 from below (1 < 2), then the 3 from its right
        t = skew({(1, 2): 2, (2, 1): 1, (2, 2): 3})
        assert jdt_slide(t, (1, 1)) == skew({(1, 1): 1, (1, 2): 2, (2, 1): 3})

    def test_tie_moves_the_right_entry(self):
        # the hole trades with the 1 on its right (tie rule), then the 2 below
        t = skew({(1, 2): 1, (2, 1): 1, (2, 2): 2})
        got = jdt_slide(t, (1, 1))
        assert got == skew({(1, 1): 1, (1, 2): 2, (2, 1): 1})

    def test_rejects_occupied_target(self):
        with pytest.raises(ValueError):
            jdt_slide(T([[1, 2]]), (1, 1))

    def test_rejects_detached_target(self):
        with pytest.raises(ValueError):
            jdt_slide(T([[1, 2]]), (1, 3))

    @given(skew_row_strict())
    @settings(max_examples=80, deadline=None)
    def test_slide_preserves_content_and_validity(self, t):
        for target in slide_targets(t):
            out = jdt_slide(t, target)
            assert sorted(out.values()) == sorted(t.values())
            assert out.size == t.size


class TestRectify:
    def test_straight_is_fixed(self):
        t = T([[1, 3], [2, 4]])
        assert rectify(t) == t

    def test_paper_skew_rectifies(self):
        t = skew({(1, 2): 1, (1, 3): 3, (2, 1): 1, (2, 2): 2, (2, 3): 3, (3, 1): 3})
        got = rectify(t)
        assert got.is_straight
        assert sorted(got.values()) == sorted(t.values())

    def test_anti_straight_rotation_keeps_profile(self):
        anti = skew({(1, 3): 1, (1, 4): 3, (2, 3): 2, (2, 4): 4})
        straight = rectify(anti)
        m = 4
        assert gk_profile(reading_word(anti), m) == gk_profile(reading_word(straight), m)

    @given(skew_row_strict(), st.integers(0, 2 ** 30))
    @settings(max_examples=60, deadline=None)
    def test_order_independence(self, t, seed):
        rng = random.Random(seed)
        cur = t
        while True:
            targets = slide_targets(cur)
            if not targets:
                break
            cur = jdt_slide(cur, rng.choice(targets))
        assert cur == rectify(t)


class TestDelta:
    def test_paper_first_step(self):
        assert delta(T([[1, 3, 4], [2, 3], [4, 5]])) == T([[1, 2, 3], [2, 4], [3]])

    def test_paper_second_step(self):
        assert delta(T([[1, 2, 3], [2, 4], [3]])) == T([[1, 2], [1, 3], [2]])

    def test_single_box(self):
        assert delta(T([[1]])) == EMPTY_TABLEAU

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            delta(EMPTY_TABLEAU)

    def test_no_ones_just_decrements(self):
        assert delta(T([[2, 3]])) == T([[1, 2]])

    def test_box_count_and_max_drop(self):
        for t in enumerate_standard(Shape((3, 2, 1))):
            out = delta(t)
            ones = sum(1 for v in t.values() if v == 1)
            assert out.size == t.size - ones
            assert out.max_entry == t.max_entry - 1


class TestEvacuate:
    def test_paper_example(self):
        assert evacuate(T([[1, 3, 4], [2, 3], [4, 5]])) == T([[1, 2, 4], [2, 3], [3, 5]])

    def test_final_example(self):
        assert evacuate(T([[1, 2, 3], [1, 4, 5], [3, 6, 7]])) == T(
            [[1, 2, 5], [3, 4, 7], [5, 6, 7]]
        )

    def test_column_fixed(self):
        assert evacuate(T([[1], [2]])) == T([[1], [2]])

    def test_empty(self):
        assert evacuate(EMPTY_TABLEAU) == EMPTY_TABLEAU

    def test_involution_small_families(self):
        for shape in [(2, 2), (3, 3), (2, 2, 2)]:
            for t in enumerate_standard(Shape(shape)):
                assert evacuate(evacuate(t)) == t
        for h in range(3):
            for t in enumerate_russell(2, h):
                assert evacuate(evacuate(t)) == t

    def test_matches_rotate_complement_small(self):
        for shape in [(2, 2), (3, 3), (2, 2, 2)]:
            for t in enumerate_standard(Shape(shape)):
                assert evacuate(t) == rotate_complement(t, t.max_entry)


# --- Greene-Kleitman -------------------------------------------------------

class TestGKProfile:
    def test_paper_fixture(self):
        assert gk_profile((5, 6, 8, 3, 4, 7, 2, 2, 5, 1, 1, 3), 4).values == (3, 6, 9, 12)

    def test_empty_word(self):
        assert gk_profile((), 2).values == (0, 0)

    def test_russell_reading_word(self):
        assert gk_profile((2, 3, 4, 1, 1, 3), 2).values == (3, 6)

    def test_rejects_long_words(self):
        with pytest.raises(ValueError):
            gk_profile(tuple(range(1, 16)), 2)

    def test_profile_invariants_enforced(self):
        with pytest.raises(ValueError):
            GKProfile((2, 3, 5))

    @given(st.lists(st.integers(1, 4), max_size=9), st.integers(1, 3))
    @settings(max_examples=120, deadline=None)
    def test_matches_unpruned_search(self, word, chains):
        word = tuple(word)
        assert gk_profile(word, chains).values[-1] == gk_unpruned(word, chains)

    @given(st.lists(st.integers(1, 5), max_size=8), st.integers(1, 3))
    @settings(max_examples=80, deadline=None)
    def test_matches_subset_oracle(self, word, chains):
        word = tuple(word)
        assert gk_profile(word, chains).values[-1] == gk_by_subsets(word, chains)

    def test_column_fact_small(self):
        for shape in [(2, 2), (3, 3), (2, 2, 2), (3, 3, 3)]:
            cols = column_lengths(Shape(shape))
            for t in enumerate_standard(Shape(shape)):
                assert gk_profile_of_tableau(t).increments() == cols

    @given(skew_row_strict())
    @settings(max_examples=50, deadline=None)
    def test_profile_survives_any_slide(self, t):
        if t.size == 0:
            return
        m = t.shape.outer.row(1) + 1
        before = gk_profile(reading_word(t), m)
        for target in slide_targets(t):
            after = gk_profile(reading_word(jdt_slide(t, target)), m)
            assert after == before
