"""Loop decomposition of toroidal patterns.

Every vertex has exactly one out-edge per axis, so the successor map
(next out-edge on the opposite axis) is a bijection on the 2MN oriented
edges; its orbits are the loops.  Each loop carries its homology class
(dx/M, dy/N), its length, and its turning number.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import DivisibilityViolation, InvalidEdge
from .pattern import (
    EAST,
    HORIZONTAL,
    NORTH,
    SOUTH,
    VERTICAL,
    WEST,
    DirectedEdge,
    ToroidalPattern,
    all_edges,
    edge_head,
    edge_is_valid,
    out_edge,
)

# A turn is taken at the shared vertex of two consecutive edges.  With the
# standard planar orientation, these four direction changes are the
# counterclockwise ones; their reverses are clockwise.  Straight-through
# pairs cannot occur because the axes alternate.
CCW_TURNS = {(EAST, NORTH), (NORTH, WEST), (WEST, SOUTH), (SOUTH, EAST)}
CW_TURNS = {(NORTH, EAST), (WEST, NORTH), (SOUTH, WEST), (EAST, SOUTH)}


def next_edge(p: ToroidalPattern, e: DirectedEdge) -> DirectedEdge:
    """Successor of e: the out-edge of head(e) on the opposite axis."""
    if not edge_is_valid(p, e):
        raise InvalidEdge(f"{e} violates the orientation of {p.pattern_id}")
    head = edge_head(p, e)
    axis = VERTICAL if e.axis == HORIZONTAL else HORIZONTAL
    return out_edge(p, head, axis)


@dataclass(frozen=True)
class Loop:
    """Directed circuit alternating horizontal and vertical edges."""

    edges: tuple[DirectedEdge, ...]
    dx: int
    dy: int
    lam: int
    mu: int
    turning: int

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def homology(self) -> tuple[int, int]:
        return (self.lam, self.mu)

    @property
    def is_trivial(self) -> bool:
        return self.lam == 0 and self.mu == 0

    @property
    def start(self) -> DirectedEdge:
        return self.edges[0]

    @property
    def key(self) -> str:
        return str(self.start)

    def vertices(self) -> list[tuple[int, int]]:
        return [(e.i, e.j) for e in self.edges]


@dataclass(frozen=True)
class LoopDecomposition:
    pattern: ToroidalPattern
    loops: tuple[Loop, ...]

    def loop_of_edge(self, e: DirectedEdge) -> Loop:
        for loop in self.loops:
            if e in loop.edges:
                return loop
        raise InvalidEdge(f"{e} not in any loop of {self.pattern.pattern_id}")


def _turn_counts(edges: tuple[DirectedEdge, ...]) -> tuple[int, int]:
    cw = ccw = 0
    for t, e in enumerate(edges):
        nxt = edges[(t + 1) % len(edges)]
        pair = (e.d, nxt.d)
        if pair in CW_TURNS:
            cw += 1
        elif pair in CCW_TURNS:
            ccw += 1
        else:
            raise DivisibilityViolation(f"straight-through turn {pair} in a traced loop")
    return cw, ccw


def _build_loop(p: ToroidalPattern, edges: tuple[DirectedEdge, ...]) -> Loop:
    dx = sum(1 for e in edges if e.d == EAST) - sum(1 for e in edges if e.d == WEST)
    dy = sum(1 for e in edges if e.d == NORTH) - sum(1 for e in edges if e.d == SOUTH)
    if dx % p.m != 0 or dy % p.n != 0:
        raise DivisibilityViolation(
            f"loop displacement ({dx},{dy}) not divisible by ({p.m},{p.n})"
        )
    lam, mu = dx // p.m, dy // p.n
    cw, ccw = _turn_counts(edges)
    if (cw - ccw) % 4 != 0:
        raise DivisibilityViolation(f"turn imbalance {cw - ccw} not divisible by 4")
    turning = (cw - ccw) // 4
    if turning not in (-1, 0, 1) or (turning == 0) != ((lam, mu) != (0, 0)):
        raise DivisibilityViolation(
            f"turning {turning} inconsistent with homology ({lam},{mu})"
        )
    return Loop(edges=edges, dx=dx, dy=dy, lam=lam, mu=mu, turning=turning)


def trace_loop(p: ToroidalPattern, start: DirectedEdge) -> Loop:
    """Follow successors from start until the circuit closes."""
    edges = [start]
    e = next_edge(p, start)
    while e != start:
        edges.append(e)
        e = next_edge(p, e)
    return _build_loop(p, tuple(edges))


def decompose(p: ToroidalPattern) -> LoopDecomposition:
    """All loops, each started from its least edge, in order of that edge.

    Scanning edges in the global sort order guarantees that the first
    unvisited edge of an orbit is its minimum, so loop identities and the
    output order are canonical.
    """
    seen: set[DirectedEdge] = set()
    loops: list[Loop] = []
    for e in all_edges(p):
        if e in seen:
            continue
        loop = trace_loop(p, e)
        seen.update(loop.edges)
        loops.append(loop)
    total_len = sum(l.length for l in loops)
    if total_len != 2 * p.m * p.n:
        raise DivisibilityViolation(
            f"loops cover {total_len} edges, expected {2 * p.m * p.n}"
        )
    return LoopDecomposition(pattern=p, loops=tuple(loops))


def homology(l: Loop) -> tuple[int, int]:
    return l.homology


def turning_number(l: Loop) -> int:
    """(#clockwise - #counterclockwise turns) / 4; +1 for a clockwise trivial loop."""
    return l.turning


@dataclass(frozen=True)
class CountSummary:
    total: int
    trivial: int
    nontrivial: int
    class_counts: tuple[tuple[tuple[int, int], int], ...]
    cw_trivial: int
    ccw_trivial: int

    @property
    def class_multiset(self) -> Counter:
        return Counter(dict(self.class_counts))


def summarize(d: LoopDecomposition) -> CountSummary:
    """Loop counts and the multiset of nontrivial homology classes."""
    trivial = sum(1 for l in d.loops if l.is_trivial)
    nontrivial = len(d.loops) - trivial
    classes = Counter(l.homology for l in d.loops if not l.is_trivial)
    cw = sum(1 for l in d.loops if l.turning == 1)
    ccw = sum(1 for l in d.loops if l.turning == -1)
    if cw + ccw != trivial:
        raise DivisibilityViolation("turning counts disagree with trivial count")
    return CountSummary(
        total=len(d.loops),
        trivial=trivial,
        nontrivial=nontrivial,
        class_counts=tuple(sorted(classes.items())),
        cw_trivial=cw,
        ccw_trivial=ccw,
    )


def loop_count(p: ToroidalPattern) -> int:
    return len(decompose(p).loops)
