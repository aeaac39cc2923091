import itertools
from fractions import Fraction

import pytest

from webweave.bijection import (
    Arc,
    ArcDiagram,
    catalan_pairing,
    find_crossings,
    m_diagram,
    russell_web,
    tableau_of_web,
    tymoczko_web,
    web_of_2row,
)
from webweave.jdt import evacuate
from webweave.tableau import (
    RowStrictTableau,
    Shape,
    enumerate_russell,
    enumerate_standard,
)
from webweave.webcore import (
    BLACK,
    WHITE,
    Matching,
    canonicalize,
    expand_white,
    reflect_matching,
    reflect_web,
    validate_web,
    webs_equal,
)

T = RowStrictTableau.from_rows

BIJ_RUSSELL = T([[1, 2, 3], [1, 4, 5], [3, 6, 7]])
BIJ_STANDARD = T([[1, 3, 4], [2, 6, 7], [5, 8, 9]])


# --- pairing oracles (the two orders of the pairing remark) -----------------

def pairing_bottom_first(top, bottom):
    unpaired = sorted(top)
    pairs = []
    for b in sorted(bottom):
        t = max(x for x in unpaired if x < b)
        unpaired.remove(t)
        pairs.append((t, b))
    return tuple(sorted(pairs))


def pairing_top_first(top, bottom):
    unpaired = sorted(bottom)
    pairs = []
    for t in sorted(top, reverse=True):
        b = min(x for x in unpaired if x > t)
        unpaired.remove(b)
        pairs.append((t, b))
    return tuple(sorted(pairs))


def cyclic_equal(a, b):
    return len(a) == len(b) and any(
        tuple(a[i:] + a[:i]) == tuple(b) for i in range(max(1, len(a)))
    )


def webs_isomorphic_bruteforce(a, b):
    """Explicit isomorphism search: boundary fixed pointwise, internal
    vertices permuted color-consistently, edges and rotations (up to cyclic
    phase) preserved."""
    if a.boundary_colors != b.boundary_colors:
        return False
    if sorted(a.internal_colors) != sorted(b.internal_colors):
        return False
    if len(a.edges) != len(b.edges):
        return False
    nb = a.n_boundary
    a_int = list(range(nb, a.n_vertices))
    b_int = list(range(nb, b.n_vertices))

    def neighbors(web, v, mapping=None):
        out = []
        for e in web.rotation[v]:
            x, y = web.edges[e]
            other = y if x == v else x
            out.append(mapping[other] if mapping else other)
        return out

    b_edges = {frozenset(e) for e in b.edges}
    for perm in itertools.permutations(b_int):
        mapping = {v: v for v in range(nb)}
        mapping.update(dict(zip(a_int, perm)))
        if any(a.color(v) != b.color(mapping[v]) for v in a_int):
            continue
        if any(frozenset((mapping[x], mapping[y])) not in b_edges for x, y in a.edges):
            continue
        if all(
            cyclic_equal(neighbors(a, v, mapping), neighbors(b, mapping[v]))
            for v in range(a.n_vertices)
        ):
            return True
    return False


class TestCatalanPairing:
    def test_top_rows_of_example(self):
        assert catalan_pairing([1, 3, 4], [2, 6, 7]) == ((1, 2), (3, 7), (4, 6))

    def test_bottom_rows_of_example(self):
        assert catalan_pairing([2, 6, 7], [5, 8, 9]) == ((2, 5), (6, 9), (7, 8))

    def test_single_pair(self):
        assert catalan_pairing([1], [2]) == ((1, 2),)

    def test_rejects_unpairable(self):
        with pytest.raises(ValueError, match="precedes"):
            catalan_pairing([3, 4], [1, 2])

    def test_rejects_overlap(self):
        with pytest.raises(ValueError, match="disjoint"):
            catalan_pairing([1, 2], [2, 3])

    def test_noncrossing_and_order_independent(self):
        for n in range(1, 7):
            for t in enumerate_standard(Shape((n, n))):
                top, bottom = t.rows
                pairs = catalan_pairing(top, bottom)
                assert pairs == pairing_bottom_first(top, bottom)
                assert pairs == pairing_top_first(top, bottom)
                for (i, j), (k, l) in itertools.combinations(pairs, 2):
                    assert not (i < k < j < l) and not (k < i < l < j)


class TestWebOf2Row:
    def test_nested(self):
        assert web_of_2row(T([[1, 2], [3, 4]])) == Matching(2, ((2, 3), (1, 4)))

    def test_disjoint(self):
        assert web_of_2row(T([[1, 3], [2, 4]])) == Matching(2, ((1, 2), (3, 4)))

    def test_single_column(self):
        assert web_of_2row(T([[1], [2]])) == Matching(1, ((1, 2),))

    def test_rejects_three_rows(self):
        with pytest.raises(ValueError):
            web_of_2row(T([[1], [2], [3]]))


class TestMDiagram:
    def test_bijections_example(self):
        d = m_diagram(BIJ_STANDARD)
        got = {(a.left, a.right) for a in d.arcs}
        assert got == {(1, 2), (2, 5), (4, 6), (6, 9), (3, 7), (7, 8)}
        assert all(a.middle in (2, 6, 7) for a in d.arcs)

    def test_single_column(self):
        d = m_diagram(T([[1], [2], [3]]))
        assert {(a.left, a.right) for a in d.arcs} == {(1, 2), (2, 3)}
        assert {a.middle for a in d.arcs} == {2}

    def test_two_column(self):
        # hand-run of both pairings: top pairs (2,3),(1,4); bottom (3,6),(4,5)
        d = m_diagram(T([[1, 2], [3, 4], [5, 6]]))
        got = {(a.left, a.right) for a in d.arcs}
        assert got == {(2, 3), (1, 4), (3, 6), (4, 5)}


class TestFindCrossings:
    def test_bijections_example_has_three(self):
        d = m_diagram(BIJ_STANDARD)
        crossings = find_crossings(d)
        involved = {
            tuple(sorted(((d.arcs[c.arc_a].left, d.arcs[c.arc_a].right), (d.arcs[c.arc_b].left, d.arcs[c.arc_b].right))))
            for c in crossings
        }
        assert involved == {
            ((2, 5), (4, 6)),
            ((2, 5), (3, 7)),
            ((3, 7), (6, 9)),
        }

    def test_disjoint_arcs_do_not_cross(self):
        d = ArcDiagram(4, (Arc(1, 2, 2), Arc(2, 3, 2), Arc(3, 4, 3), Arc(2, 3, 3)))
        del d  # middles need two ends each; build a legal one instead
        diagram = m_diagram(T([[1, 2], [3, 5], [4, 6]]))
        for c in find_crossings(diagram):
            a, b = diagram.arcs[c.arc_a], diagram.arcs[c.arc_b]
            assert a.left < b.left < a.right < b.right

    def test_exact_abscissa(self):
        d = ArcDiagram(6, (Arc(2, 5, 5), Arc(4, 6, 4), Arc(5, 6, 5), Arc(3, 4, 4)))
        (c,) = [c for c in find_crossings(d) if {c.arc_a, c.arc_b} == {0, 1}]
        assert c.x == Fraction(14, 3)


class TestTymoczkoWeb:
    def test_single_tripod(self):
        web = tymoczko_web(T([[1], [2], [3]]))
        assert web.boundary_colors == (BLACK,) * 3
        assert web.internal_colors == (WHITE,)
        assert validate_web(web) == []

    def test_bijections_example_web(self):
        web = tymoczko_web(BIJ_STANDARD)
        assert web.boundary_colors == (BLACK,) * 9
        # one tripod white per middle entry, plus a black and a white per crossing
        assert web.internal_colors.count(WHITE) == 3 + 3
        assert web.internal_colors.count(BLACK) == 3
        assert validate_web(web) == []

    def test_k2_family_distinct_and_valid(self):
        webs = [tymoczko_web(t) for t in enumerate_standard(Shape((2, 2, 2)))]
        assert len(webs) == 5
        assert all(validate_web(w) == [] for w in webs)
        assert len({canonicalize(w) for w in webs}) == 5

    def test_strand_chains_alternate_colors(self):
        web = tymoczko_web(BIJ_STANDARD)
        for x, y in web.edges:
            assert {web.color(x), web.color(y)} == {BLACK, WHITE}


class TestRussellWeb:
    def test_bijections_example_colors(self):
        web = russell_web(BIJ_RUSSELL)
        assert web.boundary_colors == (WHITE, BLACK, WHITE, BLACK, BLACK, BLACK, BLACK)
        assert validate_web(web) == []

    def test_expansion_records_the_pairs(self):
        exp = expand_white(russell_web(BIJ_RUSSELL))
        assert len(exp.web.boundary_colors) == 9
        assert exp.contractible == (1, 4)

    def test_standard_input_matches_tymoczko(self):
        for t in enumerate_standard(Shape((2, 2, 2))):
            assert webs_equal(russell_web(t), tymoczko_web(t))

    def test_smallest_contraction(self):
        web = russell_web(T([[1], [1], [2]]))
        assert web.boundary_colors == (WHITE, BLACK)
        assert validate_web(web) == []


class TestTableauOfWeb:
    def test_matching_roundtrip(self):
        t = T([[1, 3], [2, 4]])
        assert tableau_of_web(web_of_2row(t), (2, 2)) == t

    def test_russell_roundtrip(self):
        assert tableau_of_web(russell_web(BIJ_RUSSELL), (3, 3, 3)) == BIJ_RUSSELL

    def test_tripod(self):
        assert tableau_of_web(tymoczko_web(T([[1], [2], [3]])), (1, 1, 1)) == T([[1], [2], [3]])

    def test_not_in_family(self):
        with pytest.raises(LookupError):
            tableau_of_web(Matching(2, ((1, 2), (3, 4))), (3, 3))


class TestMainTheoremSmall:
    def test_sl2_small(self):
        for n in range(1, 6):
            for t in enumerate_standard(Shape((n, n))):
                assert reflect_matching(web_of_2row(t)) == web_of_2row(evacuate(t))

    def test_sl3_standard_small(self):
        for k in (1, 2, 3):
            for t in enumerate_standard(Shape((k, k, k))):
                lhs = canonicalize(reflect_web(tymoczko_web(t)))
                rhs = canonicalize(tymoczko_web(evacuate(t)))
                assert lhs == rhs, f"theorem fails at {t.rows}"

    def test_sl3_russell_small(self):
        for k in (1, 2):
            for h in range(0, 3 * k):
                for t in enumerate_russell(k, h):
                    lhs = canonicalize(reflect_web(russell_web(t)))
                    rhs = canonicalize(russell_web(evacuate(t)))
                    assert lhs == rhs, f"theorem fails at {t.rows} (h={h})"

    def test_final_example(self):
        lhs = reflect_web(russell_web(BIJ_RUSSELL))
        rhs = russell_web(T([[1, 2, 5], [3, 4, 7], [5, 6, 7]]))
        assert webs_equal(lhs, rhs)

    def test_reflection_involution_on_example_web(self):
        web = russell_web(BIJ_RUSSELL)
        assert webs_equal(reflect_web(reflect_web(web)), web)

    def test_reflection_reverses_boundary_colors_and_stays_valid(self):
        web = russell_web(BIJ_RUSSELL)
        reflected = reflect_web(web)
        assert reflected.boundary_colors == tuple(reversed(web.boundary_colors))
        assert validate_web(reflected) == []


class TestCanonicalAgainstBruteForce:
    def test_consistency_on_k2_family(self):
        webs = [tymoczko_web(t) for t in enumerate_standard(Shape((2, 2, 2)))]
        webs += [russell_web(t) for t in enumerate_russell(1, 1)]
        for a, b in itertools.combinations_with_replacement(webs, 2):
            same_canon = canonicalize(a) == canonicalize(b)
            if a.n_vertices <= 12 and b.n_vertices <= 12:
                assert same_canon == webs_isomorphic_bruteforce(a, b)

    def test_reflection_against_bruteforce(self):
        for t in enumerate_standard(Shape((2, 2, 2))):
            lhs = reflect_web(tymoczko_web(t))
            rhs = tymoczko_web(evacuate(t))
            if lhs.n_vertices <= 12:
                assert webs_isomorphic_bruteforce(lhs, rhs)
