"""Integer heights on regions, edges, and loops of a lifted pattern.

The region with lower-left corner (i, j) gets height
``sum(x~[0..j]) - sum(y~[0..i])`` (empty sums when the index is -1).  This
is the unique potential, up to a constant, with the region on the left of
every oriented edge one unit above the region on its right; consequently
all edges of one path share a height.  Edge heights are half-integers and
are stored doubled.
"""

from __future__ import annotations

from .errors import InconsistentHeight, NotBalanced, OrientationViolation
from .pattern import (
    EAST,
    NORTH,
    SOUTH,
    WEST,
    DirectedEdge,
    PlanarLift,
    Signs,
    SignString,
    ToroidalPattern,
    k,
    lift,
    parse_signs,
    rotated,
)
from .loops import Loop


def region_height(pl: PlanarLift, i: int, j: int) -> int:
    """Height of the unit-square region with lower-left corner (i, j)."""
    return pl.sum_x(j) - pl.sum_y(i)


def _side_regions(e: DirectedEdge) -> tuple[tuple[int, int], tuple[int, int]]:
    """Lower-left corners of the (left, right) regions of a planar edge."""
    i, j = e.i, e.j
    if e.d == EAST:
        return (i, j), (i, j - 1)
    if e.d == WEST:
        return (i - 1, j - 1), (i - 1, j)
    if e.d == NORTH:
        return (i - 1, j), (i, j)
    if e.d == SOUTH:
        return (i, j - 1), (i - 1, j - 1)
    raise OrientationViolation(f"unknown direction {e.d!r}")


def edge_height2(pl: PlanarLift, e: DirectedEdge) -> int:
    """Doubled height of a planar edge (sum of its two region heights).

    Raises OrientationViolation when the left region is not one unit above
    the right one, which happens exactly when e disagrees with the lift.
    """
    (li, lj), (ri, rj) = _side_regions(e)
    left = region_height(pl, li, lj)
    right = region_height(pl, ri, rj)
    if left != right + 1:
        raise OrientationViolation(
            f"{e}: left height {left}, right height {right}; edge opposes the lift"
        )
    return left + right


def loop_height2(p: ToroidalPattern, l: Loop) -> int:
    """Common doubled edge height of a loop in a balanced pattern."""
    if k(p.x) != 0 or k(p.y) != 0:
        raise NotBalanced(
            f"heights descend to the torus only when k(x) = k(y) = 0, "
            f"got k(x)={k(p.x)}, k(y)={k(p.y)}"
        )
    pl = lift(p)
    values = {edge_height2(pl, e) for e in l.edges}
    if len(values) != 1:
        raise InconsistentHeight(f"loop {l.key} edge heights {sorted(values)}")
    return values.pop()


def rotation_to_nonpositive_partials(s: Signs) -> int:
    """Least cyclic shift after which every partial sum of s is <= 0.

    Exists whenever k(s) <= 0 (cycle lemma); raises ValueError otherwise.
    """
    s = parse_signs(s)
    for r in range(len(s)):
        rot = rotated(s, r)
        total = 0
        if all((total := total + e) <= 0 for e in rot):
            return r
    raise ValueError(f"no rotation of {s} has all partial sums <= 0")


def rotation_to_nonnegative_partials(s: Signs) -> int:
    """Least cyclic shift after which every partial sum of s is >= 0."""
    s = parse_signs(s)
    for r in range(len(s)):
        rot = rotated(s, r)
        total = 0
        if all((total := total + e) >= 0 for e in rot):
            return r
    raise ValueError(f"no rotation of {s} has all partial sums >= 0")


def boundary_heights_separate(p: ToroidalPattern) -> bool:
    """Fundamental-domain boundary mechanism for balanced patterns.

    After rotating x and y so all their partial sums are nonpositive, every
    horizontal edge crossing the vertical line between columns -1 and 0 must
    sit strictly lower than every vertical edge crossing the horizontal line
    between rows -1 and 0.  A loop therefore uses at most one of the two
    boundary edge families, which rules out homology classes (u, v) with
    u*v != 0 in balanced patterns.
    """
    if k(p.x) != 0 or k(p.y) != 0:
        raise NotBalanced("boundary separation is defined for balanced patterns")
    rx = rotation_to_nonpositive_partials(p.x)
    ry = rotation_to_nonpositive_partials(p.y)
    q = ToroidalPattern(p.m, p.n, rotated(p.x, rx), rotated(p.y, ry))
    pl = lift(q)
    horiz = []
    for j in range(q.n):
        d = EAST if q.x[j] == 1 else WEST
        tail_i = -1 if d == EAST else 0
        horiz.append(edge_height2(pl, DirectedEdge(tail_i, j, d)))
    vert = []
    for i in range(q.m):
        d = NORTH if q.y[i] == 1 else SOUTH
        tail_j = -1 if d == NORTH else 0
        vert.append(edge_height2(pl, DirectedEdge(i, tail_j, d)))
    return max(horiz) < min(vert)
