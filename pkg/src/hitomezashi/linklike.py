"""Oriented 4-regular planar combinatorial maps and triple-point moves.

A crossing owns four dart slots in counterclockwise planar order; opposite
slots (0,2) and (1,3) carry one strand straight through.  ``theta`` pairs
darts into arcs and always joins an outgoing dart to an incoming one.
Faces are derived from the rotation system, never stored, so local rewiring
bugs surface as Euler-characteristic failures.

The annulus graph of a symmetric pattern has one crossing per off-diagonal
torus vertex; the degree-2 bends where a strand turns on the diagonal are
absorbed into arcs (their count is kept only for rendering).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import (
    InvalidMap,
    MoveScheduleFailure,
    NotAlternating,
    NotATriangle,
    SizeTooSmall,
)
from .pattern import Signs, parse_signs

# Construction slots at a grid crossing, in counterclockwise order.
SLOT_W, SLOT_S, SLOT_E, SLOT_N = 0, 1, 2, 3
_SLOT_STEP = {SLOT_W: (-1, 0), SLOT_S: (0, -1), SLOT_E: (1, 0), SLOT_N: (0, 1)}
_SLOT_OPPOSITE = {SLOT_W: SLOT_E, SLOT_E: SLOT_W, SLOT_S: SLOT_N, SLOT_N: SLOT_S}
# At a diagonal vertex the strand bends without crossing the diagonal:
# the corner above pairs W with N, the corner below pairs S with E.
_CORNER_PARTNER = {SLOT_W: SLOT_N, SLOT_N: SLOT_W, SLOT_S: SLOT_E, SLOT_E: SLOT_S}


class LinkLikeGraph:
    """Rotation-system map with directed darts (dart = 4*crossing + slot)."""

    def __init__(
        self,
        theta: list[int],
        out: list[bool],
        labels: Optional[list[tuple[int, int]]] = None,
        bends: Optional[dict[frozenset[int], int]] = None,
        check: bool = True,
    ) -> None:
        self.theta = list(theta)
        self.out = list(out)
        self.labels = list(labels) if labels is not None else None
        self.bends = dict(bends) if bends is not None else {}
        if check:
            self._check()

    # -- basic structure ----------------------------------------------------

    @property
    def n_darts(self) -> int:
        return len(self.theta)

    @property
    def n_crossings(self) -> int:
        return len(self.theta) // 4

    @property
    def n_arcs(self) -> int:
        return len(self.theta) // 2

    @staticmethod
    def sigma(d: int) -> int:
        """Next dart counterclockwise at the same crossing."""
        return (d & ~3) | ((d + 1) & 3)

    @staticmethod
    def sigma_inv(d: int) -> int:
        return (d & ~3) | ((d - 1) & 3)

    @staticmethod
    def opposite(d: int) -> int:
        """The other dart of the strand passing through this crossing."""
        return d ^ 2

    @staticmethod
    def crossing(d: int) -> int:
        return d // 4

    def _check(self) -> None:
        nd = self.n_darts
        if nd % 4 != 0 or len(self.out) != nd:
            raise InvalidMap("dart tables must cover 4 slots per crossing")
        for d in range(nd):
            t = self.theta[d]
            if not 0 <= t < nd or t == d or self.theta[t] != d:
                raise InvalidMap(f"theta is not a fixed-point-free involution at {d}")
            if self.out[d] == self.out[t]:
                raise InvalidMap(f"arc {d}-{t} does not join an out dart to an in dart")
            if self.out[d] == self.out[self.opposite(d)]:
                raise InvalidMap(
                    f"crossing {d // 4}: opposite slots {d & 3},{(d ^ 2) & 3} "
                    "must be one in, one out"
                )
        if self.n_crossings and self.euler_characteristic() != 2:
            raise InvalidMap(
                f"Euler characteristic {self.euler_characteristic()} != 2; "
                "the map is not embedded in the sphere"
            )

    def copy(self) -> "LinkLikeGraph":
        return LinkLikeGraph(self.theta, self.out, self.labels, self.bends, check=False)

    # -- faces ---------------------------------------------------------------

    def next_in_face(self, d: int) -> int:
        """Face successor: cross the arc, then step clockwise at the arrival."""
        return self.sigma_inv(self.theta[d])

    def face_orbit(self, d: int) -> tuple[int, ...]:
        orbit = [d]
        cur = self.next_in_face(d)
        while cur != d:
            orbit.append(cur)
            cur = self.next_in_face(cur)
        start = orbit.index(min(orbit))
        return tuple(orbit[start:] + orbit[:start])

    def faces(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for d in range(self.n_darts):
            if d in seen:
                continue
            orbit = self.face_orbit(d)
            seen.update(orbit)
            out.append(orbit)
        out.sort(key=lambda o: o[0])
        return out

    def euler_characteristic(self) -> int:
        return self.n_crossings - self.n_arcs + len(self.faces())

    # -- Seifert circles -----------------------------------------------------

    def _out_successor(self, incoming: int) -> int:
        """The unique outgoing dart cyclically adjacent to an incoming dart."""
        cands = [c for c in (self.sigma(incoming), self.sigma_inv(incoming)) if self.out[c]]
        if len(cands) != 1:
            raise InvalidMap(f"in/out pattern broken at crossing {incoming // 4}")
        return cands[0]

    def circle_from(self, out_dart: int) -> tuple[int, ...]:
        orbit = [out_dart]
        cur = self._out_successor(self.theta[out_dart])
        while cur != out_dart:
            orbit.append(cur)
            cur = self._out_successor(self.theta[cur])
        start = orbit.index(min(orbit))
        return tuple(orbit[start:] + orbit[:start])

    def seifert_circles(self) -> list[tuple[int, ...]]:
        """Orientation-preserving smoothing orbits, as sequences of out darts."""
        seen: set[int] = set()
        circles = []
        for d in range(self.n_darts):
            if not self.out[d] or d in seen:
                continue
            orbit = self.circle_from(d)
            seen.update(orbit)
            circles.append(orbit)
        circles.sort(key=lambda o: o[0])
        return circles

    def seifert_count(self) -> int:
        return len(self.seifert_circles())

    # -- strand bookkeeping ---------------------------------------------------

    def strand_of_dart(self, d: int) -> int:
        """Strand label of a dart (horizontal slots carry the row strand)."""
        if self.labels is None:
            raise InvalidMap("map carries no strand labels")
        i, j = self.labels[self.crossing(d)]
        return j if (d & 3) in (SLOT_W, SLOT_E) else i

    def strands_of_crossing(self, c: int) -> frozenset[int]:
        if self.labels is None:
            raise InvalidMap("map carries no strand labels")
        return frozenset(self.labels[c])

    def crossing_at(self, pos: tuple[int, int]) -> int:
        if self.labels is None:
            raise InvalidMap("map carries no strand labels")
        return self.labels.index((pos[0], pos[1]))

    @property
    def n_strands(self) -> int:
        if self.labels is None:
            raise InvalidMap("map carries no strand labels")
        return 1 + max(max(i, j) for i, j in self.labels)

    # -- serialization ---------------------------------------------------------

    def serialize(self) -> str:
        lines = ["#linklike-map v1", f"crossings {self.n_crossings}"]
        for c in range(self.n_crossings):
            if self.labels is not None:
                i, j = self.labels[c]
                label = f"{i} {j}"
            else:
                label = "- -"
            dirs = "".join("o" if self.out[4 * c + s] else "i" for s in range(4))
            lines.append(f"crossing {c} {label} {dirs}")
        for d in sorted(range(self.n_darts)):
            t = self.theta[d]
            if d < t:
                bends = self.bends.get(frozenset((d, t)), 0)
                lines.append(f"arc {d} {t} {bends}")
        return "\n".join(lines) + "\n"

    @classmethod
    def deserialize(cls, text: str) -> "LinkLikeGraph":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or lines[0] != "#linklike-map v1":
            raise InvalidMap("missing #linklike-map v1 header")
        n = None
        theta: dict[int, int] = {}
        out: dict[int, bool] = {}
        labels: list[Optional[tuple[int, int]]] = []
        bends: dict[frozenset[int], int] = {}
        for ln in lines[1:]:
            parts = ln.split()
            if parts[0] == "crossings":
                n = int(parts[1])
                labels = [None] * n
            elif parts[0] == "crossing":
                c = int(parts[1])
                if parts[2] != "-":
                    labels[c] = (int(parts[2]), int(parts[3]))
                dirs = parts[4]
                for s, ch in enumerate(dirs):
                    out[4 * c + s] = ch == "o"
            elif parts[0] == "arc":
                d1, d2, b = int(parts[1]), int(parts[2]), int(parts[3])
                theta[d1] = d2
                theta[d2] = d1
                if b:
                    bends[frozenset((d1, d2))] = b
            else:
                raise InvalidMap(f"unknown record {parts[0]!r}")
        if n is None:
            raise InvalidMap("missing crossings record")
        nd = 4 * n
        if set(theta) != set(range(nd)) or set(out) != set(range(nd)):
            raise InvalidMap("incomplete dart tables")
        lab = None if any(l is None for l in labels) else [l for l in labels]
        return cls(
            [theta[d] for d in range(nd)],
            [out[d] for d in range(nd)],
            lab,
            bends,
        )

    # -- canonical labeling ------------------------------------------------------

    def canonical_form(self) -> tuple:
        """Minimum BFS relabeling code over all start darts.

        Two maps are isomorphic as oriented directed maps exactly when
        their codes match; strand labels and bends are ignored.
        """
        nd = self.n_darts
        best = None
        for root in range(nd):
            new_id = {root: 0}
            order = [root]
            head = 0
            while head < len(order):
                d = order[head]
                head += 1
                for nb in (self.sigma(d), self.theta[d]):
                    if nb not in new_id:
                        new_id[nb] = len(order)
                        order.append(nb)
            if len(order) != nd:
                raise InvalidMap("canonical form requires a connected map")
            code = tuple(
                (new_id[self.sigma(d)], new_id[self.theta[d]], self.out[d])
                for d in order
            )
            if best is None or code < best:
                best = code
        return best


def is_isomorphic(g1: LinkLikeGraph, g2: LinkLikeGraph) -> bool:
    if g1.n_darts != g2.n_darts:
        return False
    return g1.canonical_form() == g2.canonical_form()


# ---------------------------------------------------------------------------
# Triangles and the triple-point move.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TriangleFace:
    """A 3-corner face, darts in face-trace order starting at the least."""

    darts: tuple[int, int, int]

    @property
    def crossings(self) -> tuple[int, int, int]:
        return tuple(d // 4 for d in self.darts)


def triangle_faces(g: LinkLikeGraph) -> list[TriangleFace]:
    """All faces with exactly three corners at three distinct crossings."""
    out = []
    for orbit in g.faces():
        if len(orbit) == 3 and len({d // 4 for d in orbit}) == 3:
            out.append(TriangleFace(orbit))
    return out


def _validate_triangle(g: LinkLikeGraph, f: TriangleFace) -> None:
    orbit = g.face_orbit(f.darts[0])
    if orbit != f.darts or len(orbit) != 3:
        raise NotATriangle(f"{f.darts} is not a triangular face of this map")
    if len(set(f.crossings)) != 3:
        raise NotATriangle(f"{f.darts} repeats a crossing")


def _boundary_stubs(g: LinkLikeGraph, f: TriangleFace) -> list[int]:
    """The six external darts in cyclic order around the triangle.

    At the corner of face dart g_m the two external darts are sigma^2(g_m)
    (opposite the departing side) and sigma^3(g_m) (opposite the arriving
    side); walking around the triangle lists them corner by corner.
    """
    stubs = []
    for d in f.darts:
        stubs.append(g.sigma(g.sigma(d)))
        stubs.append(g.sigma_inv(d))
    return stubs


def orientation_type(g: LinkLikeGraph, f: TriangleFace) -> str:
    """"adjacent" when the three entering strands are cyclically consecutive,
    "alternating" when entries and exits alternate around the triangle."""
    _validate_triangle(g, f)
    pattern = [g.out[d] for d in _boundary_stubs(g, f)]
    if all(pattern[t] != pattern[(t + 1) % 6] for t in range(6)):
        return "alternating"
    runs = sum(1 for t in range(6) if pattern[t] != pattern[(t + 1) % 6])
    if runs == 2 and pattern.count(True) == 3:
        return "adjacent"
    raise InvalidMap(f"boundary in/out pattern {pattern} is neither type")


def _move_rewiring(g: LinkLikeGraph, f: TriangleFace) -> tuple[list[tuple[int, int]], dict[int, int]]:
    """New arc pairs realizing the mirror triangle.

    For the side from corner m to corner m+1 the new side arc joins the two
    external darts of that strand, while each boundary attachment point
    inherits the old side dart of the opposite corner.  External arcs that
    loop straight back into the triangle are resolved through the boundary
    map so the result stays an involution.
    """
    gs = f.darts
    ext1 = [g.sigma(g.sigma(d)) for d in gs]                # beyond corner m, strand of side m
    ext2 = [g.sigma_inv(gs[(m + 1) % 3]) for m in range(3)]  # beyond corner m+1, same strand
    new_sides = [(ext1[m], ext2[m]) for m in range(3)]
    boundary = {}
    for m in range(3):
        boundary[ext1[m]] = g.theta[gs[m]]  # old arriving side dart of corner m+1
        boundary[ext2[m]] = gs[m]           # old departing side dart of corner m
    pairs = list(new_sides)
    done: set[int] = set()
    for e, nd in boundary.items():
        if e in done:
            continue
        far = g.theta[e]
        if far in boundary:
            pairs.append((nd, boundary[far]))
            done.add(e)
            done.add(far)
        else:
            pairs.append((nd, far))
            done.add(e)
    return pairs, boundary


@dataclass(frozen=True)
class MoveRecord:
    face_crossings: tuple[int, int, int]
    orientation: str
    configuration: Optional[str]
    count_before: int
    count_after: int

    @property
    def delta(self) -> int:
        return self.count_after - self.count_before


def apply_triple_move(
    g: LinkLikeGraph, f: TriangleFace
) -> tuple[LinkLikeGraph, MoveRecord]:
    """Pass one strand of the triangle across the opposite crossing.

    The rotation at every crossing is untouched; only the six side/external
    arc attachments around the face change.  The mirror face (the image
    triangle) is bounded by the former external darts, so applying the move
    there restores the original arcs.
    """
    _validate_triangle(g, f)
    orient = orientation_type(g, f)
    config = configuration_type(g, f) if orient == "alternating" else None
    count_before = g.seifert_count()
    pairs, _ = _move_rewiring(g, f)
    g2 = g.copy()
    touched: set[int] = set()
    for d1, d2 in pairs:
        touched.update((d1, d2))
        g2.theta[d1] = d2
        g2.theta[d2] = d1
    for key in list(g2.bends):
        if key & touched:
            g2.bends.pop(key)
    g2._check()
    record = MoveRecord(
        face_crossings=f.crossings,
        orientation=orient,
        configuration=config,
        count_before=count_before,
        count_after=g2.seifert_count(),
    )
    return g2, record


def image_triangle(g_after: LinkLikeGraph, f: TriangleFace) -> TriangleFace:
    """The mirror triangle produced by the move, ready for the inverse move."""
    d = g_after.sigma(g_after.sigma(f.darts[0]))
    orbit = g_after.face_orbit(d)
    if len(orbit) != 3:
        raise NotATriangle("mirror face is not a triangle")
    return TriangleFace(orbit)


# ---------------------------------------------------------------------------
# Configuration classification from external connectivity.
# ---------------------------------------------------------------------------

def _local_smoothing(
    g: LinkLikeGraph,
    stub_of_pos: list[int],
    side_theta: dict[int, int],
) -> tuple[dict[int, int], int]:
    """Pair entry boundary positions to exit positions through the local disk.

    ``side_theta`` is the arc pairing among the six local side darts; the
    crossings' smoothing rule is shared with the global map.  Returns the
    entry->exit position pairing and the number of closed circles formed
    entirely by local side arcs.
    """
    pos_of = {d: p for p, d in enumerate(stub_of_pos)}
    visited_sides: set[int] = set()
    pairing: dict[int, int] = {}
    for p, d in enumerate(stub_of_pos):
        if g.out[d]:
            continue
        cur = d
        while True:
            o = g._out_successor(cur)
            if o in pos_of:
                pairing[p] = pos_of[o]
                break
            visited_sides.add(o)
            cur = side_theta[o]
            visited_sides.add(cur)
    circles = 0
    for d in side_theta:
        if d in visited_sides or g.out[d]:
            continue
        circles += 1
        cur = d
        while True:
            visited_sides.add(cur)
            o = g._out_successor(cur)
            visited_sides.add(o)
            cur = side_theta[o]
            if cur == d:
                break
    return pairing, circles


def _external_pairing(g: LinkLikeGraph, stub_of_pos: list[int]) -> dict[int, int]:
    """Pair exit boundary positions to the entry positions their circles reach."""
    stub_set = set(stub_of_pos)
    pos_of = {d: p for p, d in enumerate(stub_of_pos)}
    pairing = {}
    for p, d in enumerate(stub_of_pos):
        if not g.out[d]:
            continue
        cur = g.theta[d]
        while cur not in stub_set:
            cur = g.theta[g._out_successor(cur)]
        pairing[p] = pos_of[cur]
    return pairing


def _cycle_count(perm: dict[int, int]) -> int:
    seen: set[int] = set()
    cycles = 0
    for start in perm:
        if start in seen:
            continue
        cycles += 1
        cur = start
        while cur not in seen:
            seen.add(cur)
            cur = perm[cur]
    return cycles


def predicted_move_delta(g: LinkLikeGraph, f: TriangleFace) -> int:
    """Seifert-count change of the move, computed without performing it.

    Only the inside of the triangle's disk changes, so the delta is the
    change in locally-closed circles plus the change in how the fixed
    external pairing composes with the local entry/exit pairing.
    """
    gs = f.darts
    stubs = _boundary_stubs(g, f)
    side_before = {}
    for d in gs:
        side_before[d] = g.theta[d]
        side_before[g.theta[d]] = d
    pairs_after, boundary = _move_rewiring(g, f)
    side_after = {}
    for d1, d2 in pairs_after[:3]:
        side_after[d1] = d2
        side_after[d2] = d1
    stubs_after = [boundary[d] for d in stubs]
    for old, new in zip(stubs, stubs_after):
        assert g.out[old] == g.out[new], "move must preserve boundary directions"
    before_pairs, before_circles = _local_smoothing(g, stubs, side_before)
    after_pairs, after_circles = _local_smoothing(g, stubs_after, side_after)
    ext = _external_pairing(g, stubs)
    cyc_before = _cycle_count({e: ext[before_pairs[e]] for e in before_pairs})
    cyc_after = _cycle_count({e: ext[after_pairs[e]] for e in after_pairs})
    return (after_circles - before_circles) + (cyc_after - cyc_before)


_CONFIG_BY_DELTA = {-2: "I", 0: "II", 2: "III"}


def configuration_type(g: LinkLikeGraph, f: TriangleFace) -> str:
    """Global-connectivity class of an alternating triangle.

    The label is pinned to the Seifert-count effect of the move: I loses a
    circle pair, II is neutral, III gains one.
    """
    if orientation_type(g, f) != "alternating":
        raise NotAlternating(f"face {f.darts} has adjacent orientations")
    delta = predicted_move_delta(g, f)
    if delta not in _CONFIG_BY_DELTA:
        raise InvalidMap(f"alternating face with impossible predicted delta {delta}")
    return _CONFIG_BY_DELTA[delta]


# ---------------------------------------------------------------------------
# Annulus graph of a symmetric pattern.
# ---------------------------------------------------------------------------

def from_symmetric_pattern(x: Signs) -> LinkLikeGraph:
    """The annulus graph of the symmetric pattern for x.

    Strand j is row j joined to column j at the diagonal; the crossings are
    the N(N-1) off-diagonal torus vertices with counterclockwise slot order
    (W, S, E, N), and the diagonal bends are absorbed into arcs.
    """
    x = parse_signs(x)
    n = len(x)
    if n < 3:
        raise SizeTooSmall(f"need N >= 3 strands, got {n}")
    positions = [(i, j) for i in range(n) for j in range(n) if i != j]
    cidx = {pos: c for c, pos in enumerate(positions)}
    nd = 4 * len(positions)
    out = [False] * nd
    for (i, j), c in cidx.items():
        out[4 * c + SLOT_W] = x[j] == -1
        out[4 * c + SLOT_E] = x[j] == 1
        out[4 * c + SLOT_S] = x[i] == -1
        out[4 * c + SLOT_N] = x[i] == 1

    def trace_arc(i: int, j: int, s: int) -> tuple[int, int, int, int]:
        bends = 0
        while True:
            di, dj = _SLOT_STEP[s]
            i, j = (i + di) % n, (j + dj) % n
            s = _SLOT_OPPOSITE[s]
            if i != j:
                return i, j, s, bends
            s = _CORNER_PARTNER[s]
            bends += 1

    theta = [-1] * nd
    bends_map: dict[frozenset[int], int] = {}
    for (i, j), c in cidx.items():
        for s in range(4):
            d = 4 * c + s
            if theta[d] != -1:
                continue
            i2, j2, s2, bends = trace_arc(i, j, s)
            d2 = 4 * cidx[(i2, j2)] + s2
            if theta[d2] != -1:
                raise InvalidMap("arc tracing produced a conflict")
            theta[d] = d2
            theta[d2] = d
            if bends:
                bends_map[frozenset((d, d2))] = bends
    g = LinkLikeGraph(theta, out, labels=list(positions), bends=bends_map)
    _assert_half_turn_symmetry(g, cidx, n)
    return g


def _assert_half_turn_symmetry(
    g: LinkLikeGraph, cidx: dict[tuple[int, int], int], n: int
) -> None:
    """Order-2 symmetry swapping each strand's horizontal and vertical sides."""

    def tau(d: int) -> int:
        c, s = divmod(d, 4)
        i, j = g.labels[c]
        return 4 * cidx[(j, i)] + (s ^ 1)

    for d in range(g.n_darts):
        if g.theta[tau(d)] != tau(g.theta[d]) or g.out[tau(d)] != g.out[d]:
            raise InvalidMap("annulus graph lost its order-2 symmetry")


# ---------------------------------------------------------------------------
# The strand-exchange move sequence.
# ---------------------------------------------------------------------------

def _find_swap_triangle(
    g: LinkLikeGraph, c: int, mover: int
) -> TriangleFace:
    """The triangle at crossing c whose other corners lie on the mover strand.

    For N >= 4 the match is unique.  The 3-strand annulus is degenerate
    (all eight faces are triangles) and several admissible triangles appear;
    the lexicographically least one is taken, which the sweep's final-count
    and isomorphism checks confirm is sound.
    """
    want = g.strands_of_crossing(c)
    found = []
    for s in range(4):
        orbit = g.face_orbit(4 * c + s)
        if len(orbit) != 3 or len({d // 4 for d in orbit}) != 3:
            continue
        others = [d // 4 for d in orbit if d // 4 != c]
        pairs = [g.strands_of_crossing(o) for o in others]
        if all(mover in pr and len(pr) == 2 for pr in pairs) and {
            next(iter(pr - {mover})) for pr in pairs
        } == set(want):
            tri = TriangleFace(orbit)
            if tri not in found:
                found.append(tri)
    if not found:
        raise MoveScheduleFailure(
            f"crossing {g.labels[c]}: no triangle bounded by the mover strand"
        )
    return min(found, key=lambda t: t.darts)


def swap_first_strands(
    g: LinkLikeGraph,
) -> tuple[LinkLikeGraph, list[MoveRecord]]:
    """Pass strand 0 across every crossing of strand 1 with strands 2..N-1.

    The moves alternate between the vertical array (column 1, bottom to
    top) and the horizontal array (row 1, left to right), one pair per
    other strand.  The result is isomorphic to the annulus graph of x with
    its first two entries exchanged.
    """
    n = g.n_strands
    cur = g.copy()
    records: list[MoveRecord] = []
    for kk in range(2, n):
        for pos in ((1, kk), (kk, 1)):
            c = cur.crossing_at(pos)
            tri = _find_swap_triangle(cur, c, mover=0)
            cur, rec = apply_triple_move(cur, tri)
            records.append(rec)
    return cur, records
