"""Sign strings, toroidal patterns, and periodic planar lifts.

A toroidal pattern on the M x N torus grid orients every horizontal edge of
row j eastward when x[j] == +1 (westward otherwise) and every vertical edge
of column i northward when y[i] == +1 (southward otherwise).  Vertices are
(i, j) with i taken mod M and j mod N.  Everything else in the package
(loops, heights, excursions, the annulus graph) is derived from these
orientations.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence, Union

from .errors import LengthMismatch, ParseError, SizeTooSmall

EAST, WEST, NORTH, SOUTH = "E", "W", "N", "S"
HORIZONTAL = "horizontal"
VERTICAL = "vertical"

STEP = {EAST: (1, 0), WEST: (-1, 0), NORTH: (0, 1), SOUTH: (0, -1)}
AXIS_OF = {EAST: HORIZONTAL, WEST: HORIZONTAL, NORTH: VERTICAL, SOUTH: VERTICAL}

# Lexicographic edge order: (i, j, axis, dir) with horizontal < vertical and
# the forward direction (E or N) before the backward one.
_DIR_RANK = {EAST: (0, 0), WEST: (0, 1), NORTH: (1, 0), SOUTH: (1, 1)}

_PLUS_MINUS_RE = re.compile(r"^[+-]+$")
_ZERO_ONE_RE = re.compile(r"^[01]+$")


@dataclass(frozen=True)
class SignString:
    """Finite sequence over {+1, -1}."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) < 1:
            raise ParseError("sign string must be nonempty")
        if any(e not in (-1, 1) for e in self.entries):
            raise ParseError(f"sign entries must be +1 or -1, got {self.entries!r}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, idx: int) -> int:
        return self.entries[idx]

    def __str__(self) -> str:
        return "".join("+" if e > 0 else "-" for e in self.entries)


Signs = Union[SignString, str, Sequence[int]]


def parse_signs(text: Signs) -> SignString:
    """Parse a sign string from "+-" or "01" text (1 maps to +1).

    The alphabet must be homogeneous: mixing "+-" characters with "01"
    characters in one string is a parse error.
    """
    if isinstance(text, SignString):
        return text
    if isinstance(text, str):
        if _PLUS_MINUS_RE.match(text):
            return SignString(tuple(1 if c == "+" else -1 for c in text))
        if _ZERO_ONE_RE.match(text):
            return SignString(tuple(1 if c == "1" else -1 for c in text))
        raise ParseError(f"not a sign string: {text!r} (expected [+-]+ or [01]+)")
    return SignString(tuple(int(e) for e in text))


def k(s: Signs) -> int:
    """Number of +1 entries minus number of -1 entries."""
    return sum(parse_signs(s).entries)


def gcd_xy(x: Signs, y: Signs) -> int:
    """gcd(|k(x)|, |k(y)|), with gcd(0, a) = a and gcd(0, 0) = 0."""
    return math.gcd(abs(k(x)), abs(k(y)))


def rotated(s: Signs, r: int) -> SignString:
    """Cyclic rotation: entry j of the result is entry (j + r) mod len."""
    s = parse_signs(s)
    n = len(s)
    return SignString(tuple(s[(j + r) % n] for j in range(n)))


def reversed_about_zero(s: Signs) -> SignString:
    """Index reversal fixing position 0: entry j of the result is entry -j mod len."""
    s = parse_signs(s)
    n = len(s)
    return SignString(tuple(s[(-j) % n] for j in range(n)))


def negated(s: Signs) -> SignString:
    s = parse_signs(s)
    return SignString(tuple(-e for e in s))


def is_two_block(s: Signs) -> bool:
    """True when s is a cyclic rotation of +^a -^b (at most two sign blocks)."""
    s = parse_signs(s)
    n = len(s)
    changes = sum(1 for j in range(n) if s[j] != s[(j + 1) % n])
    return changes <= 2


@dataclass(frozen=True)
class ToroidalPattern:
    """Orientation of the M x N torus grid induced by sign strings x, y.

    x has length N and is indexed by the row j; y has length M and is
    indexed by the column i.
    """

    m: int
    n: int
    x: SignString
    y: SignString

    def __post_init__(self) -> None:
        if self.m < 3 or self.n < 3:
            raise SizeTooSmall(f"torus sides must be >= 3, got {self.m}x{self.n}")
        if len(self.x) != self.n:
            raise LengthMismatch(f"len(x) = {len(self.x)} but N = {self.n}")
        if len(self.y) != self.m:
            raise LengthMismatch(f"len(y) = {len(self.y)} but M = {self.m}")

    @property
    def is_symmetric(self) -> bool:
        return self.m == self.n and self.x == self.y

    @property
    def pattern_id(self) -> str:
        return f"{self.m}x{self.n}:{self.x}:{self.y}"

    def vertices(self) -> Iterator[tuple[int, int]]:
        for i in range(self.m):
            for j in range(self.n):
                yield (i, j)

    def wrap(self, i: int, j: int) -> tuple[int, int]:
        return (i % self.m, j % self.n)


def make_pattern(m: int, n: int, x: Signs, y: Signs) -> ToroidalPattern:
    """Validated pattern constructor accepting textual sign strings."""
    return ToroidalPattern(m, n, parse_signs(x), parse_signs(y))


def symmetric_pattern(x: Signs) -> ToroidalPattern:
    x = parse_signs(x)
    return ToroidalPattern(len(x), len(x), x, x)


@dataclass(frozen=True)
class DirectedEdge:
    """Directed grid edge identified by its tail vertex and compass direction."""

    i: int
    j: int
    d: str

    @property
    def axis(self) -> str:
        return AXIS_OF[self.d]

    @property
    def sort_key(self) -> tuple[int, int, int, int]:
        a, r = _DIR_RANK[self.d]
        return (self.i, self.j, a, r)

    def __str__(self) -> str:
        return f"{self.d}@({self.i},{self.j})"


def edge_is_valid(p: ToroidalPattern, e: DirectedEdge) -> bool:
    """Whether e agrees with p's orientation (E needs x_j = +1, and so on)."""
    if not (0 <= e.i < p.m and 0 <= e.j < p.n):
        return False
    if e.d == EAST:
        return p.x[e.j] == 1
    if e.d == WEST:
        return p.x[e.j] == -1
    if e.d == NORTH:
        return p.y[e.i] == 1
    if e.d == SOUTH:
        return p.y[e.i] == -1
    return False


def edge_head(p: ToroidalPattern, e: DirectedEdge) -> tuple[int, int]:
    di, dj = STEP[e.d]
    return p.wrap(e.i + di, e.j + dj)


def out_edge(p: ToroidalPattern, v: tuple[int, int], axis: str) -> DirectedEdge:
    """The unique out-edge of v on the given axis ("horizontal"/"vertical")."""
    i, j = p.wrap(*v)
    if axis == HORIZONTAL:
        return DirectedEdge(i, j, EAST if p.x[j] == 1 else WEST)
    if axis == VERTICAL:
        return DirectedEdge(i, j, NORTH if p.y[i] == 1 else SOUTH)
    raise ValueError(f"axis must be {HORIZONTAL!r} or {VERTICAL!r}, got {axis!r}")


def all_edges(p: ToroidalPattern) -> list[DirectedEdge]:
    """All 2MN oriented edges, sorted by the canonical edge order."""
    edges = []
    for v in p.vertices():
        edges.append(out_edge(p, v, HORIZONTAL))
        edges.append(out_edge(p, v, VERTICAL))
    edges.sort(key=lambda e: e.sort_key)
    return edges


# ---------------------------------------------------------------------------
# Pattern symmetries.  Each transform comes with the induced map on directed
# edges so loop correspondences can be checked geometrically instead of
# trusting the string algebra.
# ---------------------------------------------------------------------------

def rotate_rows(p: ToroidalPattern, r: int) -> ToroidalPattern:
    """Rotate x cyclically by r; corresponds to translating (i, j) -> (i, j - r)."""
    return ToroidalPattern(p.m, p.n, rotated(p.x, r), p.y)


def rotate_cols(p: ToroidalPattern, r: int) -> ToroidalPattern:
    """Rotate y cyclically by r; corresponds to translating (i, j) -> (i - r, j)."""
    return ToroidalPattern(p.m, p.n, p.x, rotated(p.y, r))


def reflect_x(p: ToroidalPattern) -> ToroidalPattern:
    """Reflection about the horizontal axis: (i, j) -> (i, -j mod N).

    The induced strings are (x reversed about index 0, -y); a loop of class
    (lam, mu) maps to one of class (lam, -mu).
    """
    return ToroidalPattern(p.m, p.n, reversed_about_zero(p.x), negated(p.y))


def reflect_y(p: ToroidalPattern) -> ToroidalPattern:
    """Reflection about the vertical axis: (i, j) -> (-i mod M, j); class (lam, mu) -> (-lam, mu)."""
    return ToroidalPattern(p.m, p.n, negated(p.x), reversed_about_zero(p.y))


def transpose_pattern(p: ToroidalPattern) -> ToroidalPattern:
    """Reflection about the diagonal: (i, j) -> (j, i); class (lam, mu) -> (mu, lam)."""
    return ToroidalPattern(p.n, p.m, p.y, p.x)


def map_edge_rotate_rows(p: ToroidalPattern, r: int, e: DirectedEdge) -> DirectedEdge:
    return DirectedEdge(e.i, (e.j - r) % p.n, e.d)


def map_edge_reflect_x(p: ToroidalPattern, e: DirectedEdge) -> DirectedEdge:
    flip = {EAST: EAST, WEST: WEST, NORTH: SOUTH, SOUTH: NORTH}
    return DirectedEdge(e.i, (-e.j) % p.n, flip[e.d])


def map_edge_reflect_y(p: ToroidalPattern, e: DirectedEdge) -> DirectedEdge:
    flip = {EAST: WEST, WEST: EAST, NORTH: NORTH, SOUTH: SOUTH}
    return DirectedEdge((-e.i) % p.m, e.j, flip[e.d])


def map_edge_transpose(p: ToroidalPattern, e: DirectedEdge) -> DirectedEdge:
    flip = {EAST: NORTH, WEST: SOUTH, NORTH: EAST, SOUTH: WEST}
    return DirectedEdge(e.j, e.i, flip[e.d])


# ---------------------------------------------------------------------------
# Periodic planar lift.
# ---------------------------------------------------------------------------

@lru_cache(maxsize=8192)
def _prefix_sums(s: SignString) -> tuple[int, ...]:
    """Partial sums over one period: entry r is the sum of the first r entries."""
    acc = [0]
    for e in s:
        acc.append(acc[-1] + e)
    return tuple(acc)


@dataclass(frozen=True)
class PlanarLift:
    """Covering of the torus pattern by the plane via periodic sign extensions."""

    base: ToroidalPattern

    def x_at(self, j: int) -> int:
        return self.base.x[j % self.base.n]

    def y_at(self, i: int) -> int:
        return self.base.y[i % self.base.m]

    def sum_x(self, j: int) -> int:
        """Prefix sum of the extended x over indices 0..j.

        For j < -1 this is -(sum over j+1..-1), the unique extension with
        sum_x(j) - sum_x(j-1) = x_at(j) and sum_x(-1) = 0.
        """
        q, r = divmod(j + 1, self.base.n)
        return q * k(self.base.x) + _prefix_sums(self.base.x)[r]

    def sum_y(self, i: int) -> int:
        """Prefix sum of the extended y over indices 0..i (same convention)."""
        q, r = divmod(i + 1, self.base.m)
        return q * k(self.base.y) + _prefix_sums(self.base.y)[r]

    def edge_is_valid(self, e: DirectedEdge) -> bool:
        """Whether a planar edge (unbounded coordinates) matches the lift orientation."""
        if e.d == EAST:
            return self.x_at(e.j) == 1
        if e.d == WEST:
            return self.x_at(e.j) == -1
        if e.d == NORTH:
            return self.y_at(e.i) == 1
        if e.d == SOUTH:
            return self.y_at(e.i) == -1
        return False


def lift(p: ToroidalPattern) -> PlanarLift:
    return PlanarLift(p)
