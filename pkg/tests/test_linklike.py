import itertools

import pytest

from hitomezashi.errors import InvalidMap, NotAlternating, NotATriangle
from hitomezashi.linklike import (
    LinkLikeGraph,
    apply_triple_move,
    configuration_type,
    from_symmetric_pattern,
    image_triangle,
    is_isomorphic,
    orientation_type,
    predicted_move_delta,
    swap_first_strands,
    triangle_faces,
)
from hitomezashi.loops import loop_count
from hitomezashi.pattern import SignString, parse_signs, symmetric_pattern


def all_strings(n):
    for bits in itertools.product((-1, 1), repeat=n):
        yield SignString(bits)


def swapped01(x):
    return SignString((x[1], x[0]) + x.entries[2:])


def single_crossing_map():
    # one crossing, two little loops: W-N arc and S-E arc
    theta = [3, 2, 1, 0]
    out = [False, False, True, True]  # W,S in; E,N out
    return LinkLikeGraph(theta, out)


def test_single_crossing_counts():
    g = single_crossing_map()
    assert g.n_crossings == 1 and g.n_arcs == 2
    assert len(g.faces()) == 3  # sphere: 1 - 2 + 3 == 2
    assert g.seifert_count() == 2
    assert triangle_faces(g) == []


def test_fig4_graph_counts():
    g = from_symmetric_pattern("+-++-")
    assert g.n_crossings == 20
    assert g.n_arcs == 40
    assert len(g.faces()) == 22
    assert g.euler_characteristic() == 2


def test_triangles_straddle_the_diagonal():
    g = from_symmetric_pattern("+-++-")
    tris = triangle_faces(g)
    assert tris
    for t in tris:
        # every triangle has exactly one side arc with a diagonal bend
        bends = 0
        for d in t.darts:
            key = frozenset((d, g.theta[d]))
            bends += g.bends.get(key, 0)
        assert bends == 1


def test_seifert_correspondence_small():
    for n in range(3, 8):
        for x in all_strings(n):
            g = from_symmetric_pattern(x)
            assert g.seifert_count() == loop_count(symmetric_pattern(x))


def test_fig1_string_circle_count():
    assert from_symmetric_pattern("++---+++").seifert_count() == 8


def test_two_block_gives_n_circles():
    for n in range(3, 10):
        for a in range(n + 1):
            x = SignString(tuple([1] * a + [-1] * (n - a)))
            assert from_symmetric_pattern(x).seifert_count() == n


def test_circles_visit_each_crossing_once():
    for n in range(3, 8):
        for x in all_strings(n):
            for circle in from_symmetric_pattern(x).seifert_circles():
                crossings = [d // 4 for d in circle]
                assert len(crossings) == len(set(crossings))


def test_move_reversible_and_deltas():
    for x in all_strings(5):
        g = from_symmetric_pattern(x)
        for tri in triangle_faces(g):
            g2, rec = apply_triple_move(g, tri)
            assert rec.delta in (-2, 0, 2)
            if rec.orientation == "adjacent":
                assert rec.delta == 0
            else:
                assert {"I": -2, "II": 0, "III": 2}[rec.configuration] == rec.delta
            back, rec_back = apply_triple_move(g2, image_triangle(g2, tri))
            assert rec_back.count_after == rec.count_before
            assert is_isomorphic(back, g)


def test_configuration_involution():
    # the move fixes II and exchanges I with III on the mirror triangle
    for x in all_strings(5):
        g = from_symmetric_pattern(x)
        for tri in triangle_faces(g):
            if orientation_type(g, tri) != "alternating":
                continue
            conf = configuration_type(g, tri)
            g2, _ = apply_triple_move(g, tri)
            mirror = image_triangle(g2, tri)
            conf2 = configuration_type(g2, mirror)
            assert {"I": "III", "II": "II", "III": "I"}[conf] == conf2


def test_configuration_requires_alternating():
    g = from_symmetric_pattern("+-++-")
    tri = next(t for t in triangle_faces(g) if orientation_type(g, t) == "adjacent")
    with pytest.raises(NotAlternating):
        configuration_type(g, tri)


def test_predicted_delta_matches_actual():
    for x in all_strings(6):
        g = from_symmetric_pattern(x)
        for tri in triangle_faces(g):
            if orientation_type(g, tri) != "alternating":
                continue
            want = predicted_move_delta(g, tri)
            _, rec = apply_triple_move(g, tri)
            assert rec.delta == want


def test_move_rejects_non_triangle():
    g = from_symmetric_pattern("+-++-")
    tri = triangle_faces(g)[0]
    g2, _ = apply_triple_move(g, tri)
    with pytest.raises(NotATriangle):
        apply_triple_move(g2, tri)  # stale face


def test_swap_matches_transposed_string():
    for x in all_strings(5):
        g = from_symmetric_pattern(x)
        final, records = swap_first_strands(g)
        assert len(records) == 2 * (5 - 2)
        assert final.seifert_count() == loop_count(symmetric_pattern(swapped01(x)))
        for a, b in zip(records[::2], records[1::2]):
            assert a.orientation == b.orientation
            assert (b.count_after - a.count_before) % 4 == 0


def test_swap_isomorphic_to_transposed_graph():
    for x in all_strings(5):
        final, _ = swap_first_strands(from_symmetric_pattern(x))
        assert is_isomorphic(final, from_symmetric_pattern(swapped01(x)))
    for xs in ("+--+-+", "++-+--", "-++++-"):
        x = parse_signs(xs)
        final, _ = swap_first_strands(from_symmetric_pattern(x))
        assert is_isomorphic(final, from_symmetric_pattern(swapped01(x)))


def test_swap_two_block_identity_on_counts():
    x = parse_signs("+++--")
    final, _ = swap_first_strands(from_symmetric_pattern(x))
    assert final.seifert_count() == 5  # swapping equal bits keeps the two-block count


def test_serialize_roundtrip():
    g = from_symmetric_pattern("+-++-")
    text = g.serialize()
    g2 = LinkLikeGraph.deserialize(text)
    assert g2.serialize() == text
    assert g2.theta == g.theta and g2.out == g.out and g2.labels == g.labels
    final, _ = swap_first_strands(g)
    text_moved = final.serialize()
    assert LinkLikeGraph.deserialize(text_moved).serialize() == text_moved


def test_deserialize_rejects_garbage():
    with pytest.raises(InvalidMap):
        LinkLikeGraph.deserialize("nope\n")


def test_canonical_form_invariant_under_relabeling():
    g = from_symmetric_pattern("+-++-")
    # relabel crossings by a rotation of indices: build the same map shifted
    n = g.n_crossings
    perm = [(c + 7) % n for c in range(n)]
    theta2 = [0] * g.n_darts
    out2 = [False] * g.n_darts
    for d in range(g.n_darts):
        c, s = divmod(d, 4)
        d2 = 4 * perm[c] + s
        tc, ts = divmod(g.theta[d], 4)
        theta2[d2] = 4 * perm[tc] + ts
        out2[d2] = g.out[d]
    g2 = LinkLikeGraph(theta2, out2)
    assert g.canonical_form() == g2.canonical_form()
    assert len(triangle_faces(g)) == len(triangle_faces(g2))
