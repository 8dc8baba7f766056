import itertools

import pytest

from hitomezashi.errors import WrongHomology
from hitomezashi.excursion import (
    PlanarPath,
    a_residue,
    ab_residue,
    apply_transform_chain,
    baseline_crossings,
    canonicalize_for_excursions,
    decompose_vertical,
    extended_window,
    find_ab_excursion,
    is_a_excursion,
    is_ab_excursion,
    lift_loop,
)
from hitomezashi.loops import decompose
from hitomezashi.pattern import SignString, make_pattern, reflect_y, symmetric_pattern

FIG3 = make_pattern(7, 7, "--+++++", "---++++")


def nontrivial(p):
    return [l for l in decompose(p).loops if not l.is_trivial]


def patterns_grid(m, n):
    for xs in itertools.product((-1, 1), repeat=n):
        for ys in itertools.product((-1, 1), repeat=m):
            yield make_pattern(m, n, SignString(xs), SignString(ys))


def test_planar_path_validates():
    PlanarPath(((0, 0), (1, 0), (1, 1)))
    with pytest.raises(ValueError):
        PlanarPath(((0, 0), (2, 0)))  # non-unit step
    with pytest.raises(ValueError):
        PlanarPath(((0, 0), (1, 0), (2, 0)))  # same axis twice


def test_lift_loop_shift_and_size():
    loop = nontrivial(FIG3)[0]
    path = lift_loop(FIG3, loop, reps=2)
    assert len(path.vertices) == 2 * loop.length + 1
    assert (path.end[0] - path.start[0], path.end[1] - path.start[1]) == (
        2 * 3 * 7,
        2 * 1 * 7,
    )


def test_trivial_loop_lift_is_closed():
    loop = next(l for l in decompose(FIG3).loops if l.is_trivial)
    path = lift_loop(FIG3, loop, reps=1)
    assert path.start == path.end


def test_is_a_excursion_clauses():
    a = 5
    assert not is_a_excursion([(a - 1, 0), (a, 0), (a - 1, 0)], a)  # j > i fails
    assert is_a_excursion([(a - 1, 0), (a, 0), (a, 1), (a - 1, 1)], a)
    # interior must stay in the half plane
    assert not is_a_excursion([(a - 1, 0), (a - 2, 0), (a - 2, 1), (a - 1, 1)], a)


def test_is_ab_excursion_minimal():
    a, b = 2, 3
    path = [(a, b - 1), (a, b), (a - 1, b)]
    assert is_ab_excursion(path, a, b)
    assert not is_ab_excursion(path, a + 1, b)  # p >= a fails at the end vertex
    assert len(path) - 1 == 2


def test_a_residue_minimal():
    assert a_residue(0, 1) == 3  # the 3-edge U-shape


def test_ab_residue_minimal_two_edge():
    # the only 2-edge quadrant excursion is (a,b-1) -> (a,b) -> (a-1,b),
    # which forces the row-b orientation to be westward, so k(C) = +1
    assert ab_residue(a=0, b=0, p=0, q=0, k_c=1) == 2


def test_decompose_vertical_on_vertical_loops():
    checked = 0
    for p in patterns_grid(4, 4):
        for loop in nontrivial(p):
            if loop.homology[0] != 0 or loop.homology[1] <= 0:
                continue
            a, excursions = decompose_vertical(p, loop)
            checked += 1
            assert sum(e.length + 1 for e in excursions) == loop.length
            for e in excursions:
                assert is_a_excursion(e.path, a)
                assert e.length % 8 == e.predicted_residue
    assert checked > 0


def test_decompose_vertical_rejects_wrong_class():
    loop = nontrivial(FIG3)[0]  # class (3, 1)
    with pytest.raises(WrongHomology):
        decompose_vertical(FIG3, loop)


def test_find_ab_excursion_on_reflected_fig3():
    q = reflect_y(FIG3)
    loop = nontrivial(q)[0]
    assert loop.homology == (-3, 1)
    e = find_ab_excursion(q, loop)
    assert is_ab_excursion(e.path, e.a, e.b)
    assert e.length % 8 == e.predicted_residue
    # window extended by whole periods still validates
    for k_more in range(3):
        for l_more in range(3):
            a2, b2, path2 = extended_window(q, loop, e, k_more, l_more)
            assert is_ab_excursion(path2, a2, b2)


def test_find_ab_excursion_rejects_wrong_class():
    loop = nontrivial(FIG3)[0]
    with pytest.raises(WrongHomology):
        find_ab_excursion(FIG3, loop)


def test_period_shift_identity():
    for p in [FIG3, make_pattern(5, 4, "+-++", "++-++")]:
        for loop in nontrivial(p):
            path = lift_loop(p, loop, reps=2)
            L = loop.length
            lam, mu = loop.homology
            for t in range(L):
                vt = path.vertices[t]
                vtl = path.vertices[t + L]
                assert vtl == (vt[0] + lam * p.m, vt[1] + mu * p.n)


def test_canonical_chain_covers_all_sign_cases():
    seen = set()
    for p in patterns_grid(4, 4):
        for loop in nontrivial(p):
            lam, mu = loop.homology
            sign = ((lam > 0) - (lam < 0), (mu > 0) - (mu < 0))
            p2, l2, chain = canonicalize_for_excursions(p, loop)
            seen.add(sign)
            lam2, mu2 = l2.homology
            assert mu2 > 0 and lam2 <= 0
            # reflections preserve length
            assert l2.length == loop.length
    # the 4x4 grid realizes vertical, horizontal, and diagonal classes
    assert {(0, 1), (0, -1), (1, 0), (-1, 0), (1, 1)} <= seen


def test_transform_chain_maps_loops_geometrically():
    p = FIG3
    loop = nontrivial(p)[0]
    p2, l2, d2 = apply_transform_chain(p, loop, ("reflect_x", "reflect_y"))
    assert l2.homology == (-3, -1)
    assert l2.length == loop.length


def test_baseline_crossing_structure():
    # monotone same-parity crossings of the line y = b, starting at p
    for p in patterns_grid(4, 5):
        for loop in nontrivial(p):
            p2, l2, _ = canonicalize_for_excursions(p, loop)
            if l2.homology[0] == 0:
                continue
            e = find_ab_excursion(p2, l2)
            xs = baseline_crossings(e.path, e.b)
            assert xs and xs[0] == e.p
            assert len({u % 2 for u in xs}) == 1
            westward = p2.x[e.b % p2.n] == -1
            for u, v in zip(xs, xs[1:]):
                assert (u > v) if westward else (u < v)
