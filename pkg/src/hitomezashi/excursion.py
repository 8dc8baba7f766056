"""Planar lifts of nontrivial loops and their excursion decompositions.

A nontrivial loop lifts to an infinite periodic planar path.  Depending on
the homology class, the lift either splits along its leftmost vertical line
into half-plane excursions, or a window of it forms a quadrant excursion.
Both excursion kinds obey fixed length residues mod 8, which the
verification harness checks instance by instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import WrongHomology
from .pattern import (
    STEP,
    DirectedEdge,
    PlanarLift,
    ToroidalPattern,
    lift,
    map_edge_reflect_x,
    map_edge_reflect_y,
    map_edge_transpose,
    reflect_x,
    reflect_y,
    transpose_pattern,
)
from .loops import Loop, LoopDecomposition, decompose

Vertex = tuple[int, int]


@dataclass(frozen=True)
class PlanarPath:
    """Finite window of a planar grid path with alternating axes."""

    vertices: tuple[Vertex, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) < 2:
            raise ValueError("a path needs at least two vertices")
        prev_axis = None
        for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:]):
            step = (x1 - x0, y1 - y0)
            if step not in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                raise ValueError(f"non-unit step {step}")
            axis = "h" if step[1] == 0 else "v"
            if axis == prev_axis:
                raise ValueError("consecutive edges on the same axis")
            prev_axis = axis

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> Vertex:
        return self.vertices[0]

    @property
    def end(self) -> Vertex:
        return self.vertices[-1]


def _path_shape_ok(vertices: Sequence[Vertex]) -> bool:
    try:
        PlanarPath(tuple(vertices))
    except ValueError:
        return False
    return True


def lift_loop(p: ToroidalPattern, l: Loop, reps: int = 1) -> PlanarPath:
    """Lift reps traversals of the loop, starting from its canonical edge.

    The start vertex is the canonical edge's tail inside the fundamental
    domain [0,M) x [0,N); the endpoint is shifted by reps*(lam*M, mu*N).
    """
    if reps < 1:
        raise ValueError("reps must be >= 1")
    pts: list[Vertex] = [(l.start.i, l.start.j)]
    for _ in range(reps):
        for e in l.edges:
            di, dj = STEP[e.d]
            x, y = pts[-1]
            pts.append((x + di, y + dj))
    return PlanarPath(tuple(pts))


def is_a_excursion(path: PlanarPath | Sequence[Vertex], a: int) -> bool:
    """Check every clause of the half-plane excursion definition.

    The path must have at least three vertices, run from (a-1, i) to
    (a-1, j) with j > i, keep all interior vertices in {x >= a}, and start
    and end with horizontal edges.
    """
    verts = path.vertices if isinstance(path, PlanarPath) else tuple(path)
    if not _path_shape_ok(verts):
        return False
    if len(verts) < 3:
        return False
    (x0, y0), (x1, y1) = verts[0], verts[-1]
    if x0 != a - 1 or x1 != a - 1 or y1 <= y0:
        return False
    if any(x < a for x, _ in verts[1:-1]):
        return False
    first_horizontal = verts[1][1] == verts[0][1]
    last_horizontal = verts[-1][1] == verts[-2][1]
    return first_horizontal and last_horizontal


def is_ab_excursion(path: PlanarPath | Sequence[Vertex], a: int, b: int) -> bool:
    """Check every clause of the quadrant excursion definition.

    The path runs from (p, b-1) with p >= a to (a-1, q) with q >= b, keeps
    all other vertices in {x >= a, y >= b}, starts with a vertical edge and
    ends with a horizontal one.
    """
    verts = path.vertices if isinstance(path, PlanarPath) else tuple(path)
    if not _path_shape_ok(verts):
        return False
    (x0, y0), (x1, y1) = verts[0], verts[-1]
    if y0 != b - 1 or x0 < a:
        return False
    if x1 != a - 1 or y1 < b:
        return False
    if any(x < a or y < b for x, y in verts[1:-1]):
        return False
    first_vertical = verts[1][0] == verts[0][0]
    last_horizontal = verts[-1][1] == verts[-2][1]
    return first_vertical and last_horizontal


def a_residue(i: int, j: int) -> int:
    """Predicted length mod 8 of a half-plane excursion from (a-1, i) to (a-1, j)."""
    return (2 * (j - i) + 1) % 8


def ab_residue(a: int, b: int, p: int, q: int, k_c: int) -> int:
    """Predicted length mod 8 of a quadrant excursion from (p, b-1) to (a-1, q)."""
    return (2 * (q - b - p + a + k_c)) % 8


@dataclass(frozen=True)
class AExcursion:
    """Half-plane excursion confined to {x >= a}."""

    a: int
    start_y: int
    end_y: int
    path: PlanarPath

    @property
    def length(self) -> int:
        return self.path.length

    @property
    def predicted_residue(self) -> int:
        return a_residue(self.start_y, self.end_y)


@dataclass(frozen=True)
class ABExcursion:
    """Quadrant excursion confined to {x >= a, y >= b}."""

    a: int
    b: int
    p: int
    q: int
    k_c: int
    path: PlanarPath
    window_start: int
    window_end: int

    @property
    def length(self) -> int:
        return self.path.length

    @property
    def predicted_residue(self) -> int:
        return ab_residue(self.a, self.b, self.p, self.q, self.k_c)


def decompose_vertical(p: ToroidalPattern, l: Loop) -> tuple[int, list[AExcursion]]:
    """Split one period of a (0, mu>0)-loop lift into half-plane excursions.

    a-1 is the leftmost x-coordinate of the lift.  The cut edges on that
    line all point upward and alternate with the returned excursions; over
    one period the lengths satisfy sum(len + 1) == loop length.
    """
    lam, mu = l.homology
    if lam != 0 or mu <= 0:
        raise WrongHomology(f"expected class (0, mu>0), got ({lam},{mu})")
    length = l.length
    verts = lift_loop(p, l, 2).vertices  # two periods so segments can wrap
    a = 1 + min(x for x, _ in verts[:length])
    cuts = [
        t
        for t in range(length)
        if verts[t][0] == a - 1 and verts[t + 1][0] == a - 1
    ]
    assert cuts, "a loop with mu > 0 must cross its leftmost line"
    for t in cuts:
        assert verts[t + 1][1] == verts[t][1] + 1, f"cut edge at t={t} points down"
    assert all(verts[s][1] < verts[t][1] for s, t in zip(cuts, cuts[1:]))
    excursions = []
    for idx, t in enumerate(cuts):
        t_next = cuts[(idx + 1) % len(cuts)] + (length if idx + 1 == len(cuts) else 0)
        window = verts[t + 1 : t_next + 1]
        exc = AExcursion(
            a=a,
            start_y=window[0][1],
            end_y=window[-1][1],
            path=PlanarPath(tuple(window)),
        )
        assert is_a_excursion(exc.path, a), f"segment at t={t} fails the definition"
        excursions.append(exc)
    assert sum(e.length + 1 for e in excursions) == length
    return a, excursions


def find_ab_excursion(p: ToroidalPattern, l: Loop) -> ABExcursion:
    """Locate a window of a (lam<0, mu>0)-loop lift that is a quadrant excursion.

    Scans for the innermost record indices: the largest i < 0 whose
    y-coordinate undercuts everything after it, and the smallest j > 0
    whose x-coordinate undercuts everything before it.  Periodicity makes
    both infima exact minima over one period of offsets.
    """
    lam, mu = l.homology
    if lam >= 0 or mu <= 0:
        raise WrongHomology(f"expected class (lam<0, mu>0), got ({lam},{mu})")
    length = l.length
    base = lift_loop(p, l, 1).vertices
    shift = (lam * p.m, mu * p.n)

    def v(t: int) -> Vertex:
        q, r = divmod(t, length)
        return (base[r][0] + q * shift[0], base[r][1] + q * shift[1])

    i = next(
        (
            t
            for t in range(-1, -(length + 2), -1)
            if v(t)[1] < min(v(s)[1] for s in range(t + 1, t + 1 + length))
        ),
        None,
    )
    j = next(
        (
            t
            for t in range(1, length + 2)
            if v(t)[0] < min(v(s)[0] for s in range(t - length, t))
        ),
        None,
    )
    assert i is not None and j is not None, "record scan failed despite periodicity"
    a = v(j)[0] + 1
    b = v(i)[1] + 1
    start_x = v(i)[0]
    end_y = v(j)[1]
    path = PlanarPath(tuple(v(t) for t in range(i, j + 1)))
    pl = lift(p)
    k_c = -(pl.sum_x(end_y) - pl.sum_x(b - 1))
    exc = ABExcursion(
        a=a,
        b=b,
        p=start_x,
        q=end_y,
        k_c=k_c,
        path=path,
        window_start=i,
        window_end=j,
    )
    assert is_ab_excursion(path, a, b), "record window fails the definition"
    return exc


def extended_window(
    p: ToroidalPattern, l: Loop, exc: ABExcursion, k_more: int, l_more: int
) -> tuple[int, int, PlanarPath]:
    """The window [i - k*L, j + l*L], again a quadrant excursion for shifted (a, b)."""
    length = l.length
    base = lift_loop(p, l, 1).vertices
    shift = (l.lam * p.m, l.mu * p.n)

    def v(t: int) -> Vertex:
        q, r = divmod(t, length)
        return (base[r][0] + q * shift[0], base[r][1] + q * shift[1])

    i = exc.window_start - k_more * length
    j = exc.window_end + l_more * length
    a = v(j)[0] + 1
    b = v(i)[1] + 1
    return a, b, PlanarPath(tuple(v(t) for t in range(i, j + 1)))


def baseline_crossings(path: PlanarPath, b: int) -> list[int]:
    """Tails (x-coordinates) of the path's horizontal edges on the line y = b."""
    return [
        v0[0]
        for v0, v1 in zip(path.vertices, path.vertices[1:])
        if v0[1] == b and v1[1] == b
    ]


# ---------------------------------------------------------------------------
# Symmetry reduction: bring any nontrivial class to (0, +) or (-, +).
# ---------------------------------------------------------------------------

_TRANSFORMS = {
    "reflect_x": (reflect_x, map_edge_reflect_x),
    "reflect_y": (reflect_y, map_edge_reflect_y),
    "transpose": (transpose_pattern, map_edge_transpose),
}

# Chains keyed by (sign(lam), sign(mu)); applied left to right.
_CHAINS = {
    (0, 1): (),
    (0, -1): ("reflect_x",),
    (1, 0): ("transpose",),
    (-1, 0): ("transpose", "reflect_x"),
    (-1, 1): (),
    (1, 1): ("reflect_y",),
    (-1, -1): ("reflect_x",),
    (1, -1): ("reflect_x", "reflect_y"),
}


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def canonical_transform_chain(l: Loop) -> tuple[str, ...]:
    if l.is_trivial:
        raise WrongHomology("trivial loops have no excursion decomposition")
    return _CHAINS[(_sign(l.lam), _sign(l.mu))]


def apply_transform_chain(
    p: ToroidalPattern, l: Loop, chain: tuple[str, ...]
) -> tuple[ToroidalPattern, Loop, LoopDecomposition]:
    """Carry (pattern, loop) through the named reflections.

    The image loop is located geometrically: the canonical edge is mapped
    through each reflection and the loop containing the image is looked up
    in the transformed pattern's decomposition.
    """
    cur_p, cur_edge = p, l.start
    for name in chain:
        f_pat, f_edge = _TRANSFORMS[name]
        cur_edge = f_edge(cur_p, cur_edge)
        cur_p = f_pat(cur_p)
    d = decompose(cur_p)
    return cur_p, d.loop_of_edge(cur_edge), d


def canonicalize_for_excursions(
    p: ToroidalPattern, l: Loop
) -> tuple[ToroidalPattern, Loop, tuple[str, ...]]:
    """Reduce (pattern, loop) to class (0, mu>0) or (lam<0, mu>0)."""
    chain = canonical_transform_chain(l)
    p2, l2, _ = apply_transform_chain(p, l, chain)
    lam, mu = l2.homology
    assert mu > 0 and lam <= 0, f"transform chain landed on ({lam},{mu})"
    return p2, l2, chain
