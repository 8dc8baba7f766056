"""Exhaustive desk-scale verification sweeps.

Each theorem is bound to an enumerable check over a SweepSpec range.
Violations never abort a sweep; they are collected with full witnesses
(pattern, loop key, expected, actual) and reported.  Reports are
deterministic given the spec, including across worker counts: partial
results are reduced associatively and sorted before emission.
"""

from __future__ import annotations

import itertools
import math
import os
import random
import time
from collections import Counter
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Callable, Iterable, Iterator, Optional

from . import excursion as exc
from .errors import MoveScheduleFailure, SweepRangeError
from .linklike import (
    _CONFIG_BY_DELTA,
    from_symmetric_pattern,
    swap_first_strands,
)
from .loops import CountSummary, decompose, loop_count, summarize
from .pattern import (
    DirectedEdge,
    SignString,
    ToroidalPattern,
    edge_head,
    edge_is_valid,
    gcd_xy,
    is_two_block,
    k,
    make_pattern,
    parse_signs,
    rotated,
    symmetric_pattern,
)

DEFAULT_SYMMETRIC_CEILING = 14
DEFAULT_GENERAL_CEILING = 16  # bound on m_max + n_max
CEILING_ENV_VAR = "HITOMEZASHI_CEILING_OVERRIDE"

REPORT_HEADER = "#hitomezashi-report v1"


def _ceilings() -> tuple[int, int]:
    raw = os.environ.get(CEILING_ENV_VAR)
    if not raw:
        return DEFAULT_SYMMETRIC_CEILING, DEFAULT_GENERAL_CEILING
    parts = raw.split(":")
    if len(parts) == 1:
        return int(parts[0]), int(parts[0])
    return int(parts[0]), int(parts[1])


@dataclass(frozen=True)
class SweepSpec:
    """Range and filter of a verification sweep."""

    mode: str = "symmetric"  # symmetric | general | linklike
    n_min: int = 3
    n_max: int = 6
    m_min: int = 3
    m_max: int = 6
    strings: str = "all"  # all | balanced | two-block
    sample: Optional[tuple[int, int]] = None  # (count, rng seed)
    force: bool = False

    def __post_init__(self) -> None:
        if self.mode not in ("symmetric", "general", "linklike"):
            raise SweepRangeError(f"unknown mode {self.mode!r}")
        if self.strings not in ("all", "balanced", "two-block"):
            raise SweepRangeError(f"unknown string filter {self.strings!r}")
        if self.n_min < 3 or (self.mode == "general" and self.m_min < 3):
            raise SweepRangeError("torus sides start at 3")
        if self.force:
            return
        sym_ceiling, gen_ceiling = _ceilings()
        if self.mode in ("symmetric", "linklike") and self.n_max > sym_ceiling:
            raise SweepRangeError(
                f"symmetric N ceiling is {sym_ceiling}; use force to exceed it"
            )
        if self.mode == "general" and self.m_max + self.n_max > gen_ceiling:
            raise SweepRangeError(
                f"general M+N ceiling is {gen_ceiling}; use force to exceed it"
            )

    def describe(self) -> str:
        rng = (
            f"N {self.n_min}..{self.n_max}"
            if self.mode != "general"
            else f"M {self.m_min}..{self.m_max} N {self.n_min}..{self.n_max}"
        )
        extra = f" sample={self.sample[0]} seed={self.sample[1]}" if self.sample else ""
        return f"mode={self.mode} {rng} strings={self.strings}{extra}"


def iter_strings(n: int, filt: str = "all") -> Iterator[SignString]:
    for bits in itertools.product((-1, 1), repeat=n):
        s = SignString(bits)
        if filt == "balanced" and k(s) != 0:
            continue
        if filt == "two-block" and not is_two_block(s):
            continue
        yield s


def iter_patterns(spec: SweepSpec) -> Iterator[ToroidalPattern]:
    if spec.sample is not None:
        count, seed = spec.sample
        rng = random.Random(seed)
        for _ in range(count):
            n = rng.randint(spec.n_min, spec.n_max)
            if spec.mode in ("symmetric", "linklike"):
                x = SignString(tuple(rng.choice((-1, 1)) for _ in range(n)))
                yield symmetric_pattern(x)
            else:
                m = rng.randint(spec.m_min, spec.m_max)
                x = SignString(tuple(rng.choice((-1, 1)) for _ in range(n)))
                y = SignString(tuple(rng.choice((-1, 1)) for _ in range(m)))
                yield make_pattern(m, n, x, y)
        return
    if spec.mode in ("symmetric", "linklike"):
        for n in range(spec.n_min, spec.n_max + 1):
            for x in iter_strings(n, spec.strings):
                yield symmetric_pattern(x)
    else:
        for m in range(spec.m_min, spec.m_max + 1):
            for n in range(spec.n_min, spec.n_max + 1):
                for x in iter_strings(n, spec.strings):
                    for y in iter_strings(m, spec.strings):
                        yield make_pattern(m, n, x, y)


@dataclass(frozen=True)
class Violation:
    theorem: str
    pattern_id: str
    loop_key: str
    expected: str
    actual: str
    detail: str = ""

    def line(self) -> str:
        base = (
            f"violation {self.theorem} pattern={self.pattern_id} "
            f"loop={self.loop_key} expected={self.expected} actual={self.actual}"
        )
        return base + (f" detail={self.detail}" if self.detail else "")


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    instances: int
    violations: tuple[Violation, ...]
    elapsed: float
    notes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def _pmap(fn: Callable, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(it) for it in items]
    with Pool(jobs) as pool:
        return pool.map(fn, items, chunksize=max(1, len(items) // (jobs * 8)))


def _pattern_args(p: ToroidalPattern) -> tuple[int, int, str, str]:
    return (p.m, p.n, str(p.x), str(p.y))


def _audit(p: ToroidalPattern, d, theorem: str) -> list[Violation]:
    """Sum rules checked on every sweep: edge partition and total homology."""
    out = []
    total_len = sum(l.length for l in d.loops)
    if total_len != 2 * p.m * p.n:
        out.append(
            Violation(theorem, p.pattern_id, "-", f"sum-len={2 * p.m * p.n}", str(total_len))
        )
    hsum = (sum(l.lam for l in d.loops), sum(l.mu for l in d.loops))
    if hsum != (k(p.x), k(p.y)):
        out.append(
            Violation(
                theorem,
                p.pattern_id,
                "-",
                f"sum-homology=({k(p.x)},{k(p.y)})",
                str(hsum),
            )
        )
    return out


# ---------------------------------------------------------------------------
# Homology-class table.
# ---------------------------------------------------------------------------

def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def _check_homology_item(args: tuple[int, int, str, str]) -> tuple[int, list[Violation]]:
    m, n, xs, ys = args
    p = make_pattern(m, n, xs, ys)
    d = decompose(p)
    theorem = "homology-table"
    violations = _audit(p, d, theorem)
    kx, ky = k(p.x), k(p.y)
    classes = [l.homology for l in d.loops if not l.is_trivial]
    instances = 1 + len(classes)
    for c in classes:
        if math.gcd(abs(c[0]), abs(c[1])) != 1:
            violations.append(
                Violation(theorem, p.pattern_id, "-", "primitive class", str(c))
            )
    for c1, c2 in zip(classes, classes[1:]):
        if c1[0] * c2[1] != c1[1] * c2[0]:
            violations.append(
                Violation(
                    theorem, p.pattern_id, "-", "parallel classes", f"{c1} vs {c2}"
                )
            )
    if p.is_symmetric:
        if kx == 0:
            if classes:
                violations.append(
                    Violation(theorem, p.pattern_id, "-", "no nontrivial loops", str(classes))
                )
        else:
            want = (_sign(kx), _sign(kx))
            for loop in d.loops:
                if not loop.is_trivial and loop.homology != want:
                    violations.append(
                        Violation(theorem, p.pattern_id, loop.key, str(want), str(loop.homology))
                    )
    if kx != 0 and ky != 0:
        g = gcd_xy(p.x, p.y)
        want = (kx // g, ky // g)
        for loop in d.loops:
            if not loop.is_trivial and loop.homology != want:
                violations.append(
                    Violation(theorem, p.pattern_id, loop.key, str(want), str(loop.homology))
                )
    elif kx != 0 and ky == 0:
        allowed = {(1, 0), (-1, 0)}
        for c in classes:
            if c not in allowed:
                violations.append(
                    Violation(theorem, p.pattern_id, "-", "(+-1,0)", str(c))
                )
    elif kx == 0 and ky != 0:
        allowed = {(0, 1), (0, -1)}
        for c in classes:
            if c not in allowed:
                violations.append(
                    Violation(theorem, p.pattern_id, "-", "(0,+-1)", str(c))
                )
    else:
        allowed = {(0, 1), (0, -1), (1, 0), (-1, 0)}
        kinds = {(abs(c[0]), abs(c[1])) for c in classes}
        for c in classes:
            if c not in allowed:
                violations.append(
                    Violation(theorem, p.pattern_id, "-", "(0,+-1) or (+-1,0)", str(c))
                )
        if len(kinds) > 1:
            violations.append(
                Violation(
                    theorem,
                    p.pattern_id,
                    "-",
                    "one primitive direction",
                    str(sorted(kinds)),
                )
            )
    return instances, violations


def verify_homology(spec: SweepSpec, jobs: int = 1) -> TheoremReport:
    start = time.perf_counter()
    items = [_pattern_args(p) for p in iter_patterns(spec)]
    results = _pmap(_check_homology_item, items, jobs)
    instances = sum(r[0] for r in results)
    violations = sorted(
        (v for r in results for v in r[1]), key=lambda v: (v.pattern_id, v.loop_key)
    )
    return TheoremReport(
        "homology-table",
        instances,
        tuple(violations),
        time.perf_counter() - start,
        notes=(spec.describe(),),
    )


# ---------------------------------------------------------------------------
# Length residues mod 8.
# ---------------------------------------------------------------------------

def _check_length_item(args: tuple[int, int, str, str]) -> tuple[int, list[Violation]]:
    m, n, xs, ys = args
    p = make_pattern(m, n, xs, ys)
    d = decompose(p)
    theorem = "length-mod8"
    violations = _audit(p, d, theorem)
    kx, ky = k(p.x), k(p.y)
    for loop in d.loops:
        if loop.is_trivial:
            if loop.length % 8 != 4:
                violations.append(
                    Violation(theorem, p.pattern_id, loop.key, "len=4 mod 8", str(loop.length % 8))
                )
            continue
        lam, mu = loop.homology
        want = (2 * (mu * n + lam * m - mu * kx)) % 8
        if loop.length % 8 != want:
            violations.append(
                Violation(
                    theorem,
                    p.pattern_id,
                    loop.key,
                    f"len={want} mod 8",
                    str(loop.length % 8),
                    detail=f"class=({lam},{mu})",
                )
            )
        if mu * kx != lam * ky:
            violations.append(
                Violation(
                    theorem,
                    p.pattern_id,
                    loop.key,
                    "mu*k(x)==lam*k(y)",
                    f"{mu * kx}!={lam * ky}",
                )
            )
        if p.is_symmetric and loop.length % 8 != (2 * abs(kx)) % 8:
            violations.append(
                Violation(
                    theorem,
                    p.pattern_id,
                    loop.key,
                    f"symmetric len={2 * abs(kx) % 8} mod 8",
                    str(loop.length % 8),
                )
            )
    return 1 + len(d.loops), violations


def verify_length(spec: SweepSpec, jobs: int = 1) -> TheoremReport:
    start = time.perf_counter()
    items = [_pattern_args(p) for p in iter_patterns(spec)]
    results = _pmap(_check_length_item, items, jobs)
    instances = sum(r[0] for r in results)
    violations = sorted(
        (v for r in results for v in r[1]), key=lambda v: (v.pattern_id, v.loop_key)
    )
    return TheoremReport(
        "length-mod8",
        instances,
        tuple(violations),
        time.perf_counter() - start,
        notes=(spec.describe(),),
    )


# ---------------------------------------------------------------------------
# Loop counts.
# ---------------------------------------------------------------------------

def _check_counts_item(
    args: tuple[int, int, str, str]
) -> tuple[int, list[Violation], tuple[int, str, bool, int]]:
    m, n, xs, ys = args
    p = make_pattern(m, n, xs, ys)
    d = decompose(p)
    s = summarize(d)
    theorem = "loop-counts"
    violations = _audit(p, d, theorem)
    kx, ky = k(p.x), k(p.y)
    if kx != 0 and ky != 0 and s.nontrivial != gcd_xy(p.x, p.y):
        violations.append(
            Violation(
                theorem, p.pattern_id, "-", f"nontrivial={gcd_xy(p.x, p.y)}", str(s.nontrivial)
            )
        )
    if s.trivial % 2 != 0:
        violations.append(
            Violation(theorem, p.pattern_id, "-", "even trivial count", str(s.trivial))
        )
    if s.cw_trivial != s.ccw_trivial:
        violations.append(
            Violation(
                theorem,
                p.pattern_id,
                "-",
                "cw==ccw",
                f"{s.cw_trivial}!={s.ccw_trivial}",
            )
        )
    if p.is_symmetric and s.total % 4 != n % 4:
        violations.append(
            Violation(theorem, p.pattern_id, "-", f"total={n % 4} mod 4", str(s.total % 4))
        )
    return 1, violations, (n if p.is_symmetric else 0, xs, is_two_block(p.x), s.total)


def verify_counts(spec: SweepSpec, jobs: int = 1) -> TheoremReport:
    start = time.perf_counter()
    items = [_pattern_args(p) for p in iter_patterns(spec)]
    results = _pmap(_check_counts_item, items, jobs)
    instances = sum(r[0] for r in results)
    violations = [v for r in results for v in r[1]]
    theorem = "loop-counts"
    if spec.mode in ("symmetric", "linklike") and spec.sample is None and spec.strings == "all":
        per_n: dict[int, int] = {}
        for n_sym, xs, two_block, total in (r[2] for r in results):
            if n_sym == 0:
                continue
            per_n[n_sym] = min(per_n.get(n_sym, total), total)
            if two_block and total != n_sym:
                violations.append(
                    Violation(theorem, f"{n_sym}x{n_sym}:{xs}:{xs}", "-", f"two-block total={n_sym}", str(total))
                )
        for n_sym, best in sorted(per_n.items()):
            if best != n_sym:
                violations.append(
                    Violation(theorem, f"N={n_sym}", "-", f"min total={n_sym}", str(best))
                )
    violations.sort(key=lambda v: (v.pattern_id, v.loop_key))
    return TheoremReport(
        theorem,
        instances,
        tuple(violations),
        time.perf_counter() - start,
        notes=(spec.describe(),),
    )


# ---------------------------------------------------------------------------
# Triple-point move sweeps.
# ---------------------------------------------------------------------------

def _check_moves_item(
    args: tuple[str, int]
) -> tuple[int, list[Violation], int]:
    xs, rot = args
    theorem = "triple-moves"
    x = rotated(parse_signs(xs), rot)
    pid = f"swap:{xs}:rot{rot}"
    try:
        g = from_symmetric_pattern(x)
        final, records = swap_first_strands(g)
    except MoveScheduleFailure as e:
        return 0, [
            Violation(theorem, pid, "-", "move schedule", f"failure: {e}")
        ], 1
    violations: list[Violation] = []
    for idx, rec in enumerate(records):
        if rec.delta not in (-2, 0, 2):
            violations.append(
                Violation(theorem, pid, f"move{idx}", "delta in {-2,0,2}", str(rec.delta))
            )
        if rec.orientation == "adjacent" and rec.delta != 0:
            violations.append(
                Violation(theorem, pid, f"move{idx}", "adjacent delta=0", str(rec.delta))
            )
        if rec.orientation == "alternating" and _CONFIG_BY_DELTA.get(rec.delta) != rec.configuration:
            violations.append(
                Violation(
                    theorem,
                    pid,
                    f"move{idx}",
                    f"configuration {rec.configuration}",
                    f"delta {rec.delta}",
                )
            )
    for pair_idx in range(0, len(records), 2):
        a, b = records[pair_idx], records[pair_idx + 1]
        if a.orientation != b.orientation:
            violations.append(
                Violation(
                    theorem, pid, f"pair{pair_idx // 2}", "same orientation", f"{a.orientation}/{b.orientation}"
                )
            )
        if (b.count_after - a.count_before) % 4 != 0:
            violations.append(
                Violation(
                    theorem,
                    pid,
                    f"pair{pair_idx // 2}",
                    "pair delta=0 mod 4",
                    str(b.count_after - a.count_before),
                )
            )
    swapped = SignString((x[1], x[0]) + x.entries[2:])
    want = loop_count(symmetric_pattern(swapped))
    if final.seifert_count() != want:
        violations.append(
            Violation(theorem, pid, "-", f"final count={want}", str(final.seifert_count()))
        )
    return len(records), violations, 0


def verify_moves(spec: SweepSpec, jobs: int = 1) -> TheoremReport:
    start = time.perf_counter()
    items = [
        (str(x), rot)
        for n in range(spec.n_min, spec.n_max + 1)
        for x in iter_strings(n, spec.strings)
        for rot in range(n)
    ]
    results = _pmap(_check_moves_item, items, jobs)
    instances = sum(r[0] for r in results)
    violations = sorted(
        (v for r in results for v in r[1]), key=lambda v: (v.pattern_id, v.loop_key)
    )
    failures = sum(r[2] for r in results)
    return TheoremReport(
        "triple-moves",
        instances,
        tuple(violations),
        time.perf_counter() - start,
        notes=(spec.describe(), f"schedule-failures {failures}"),
    )


# ---------------------------------------------------------------------------
# Seifert-circle correspondence.
# ---------------------------------------------------------------------------

def _check_seifert_item(args: tuple[str]) -> tuple[int, list[Violation]]:
    (xs,) = args
    theorem = "seifert-correspondence"
    x = parse_signs(xs)
    pid = f"annulus:{xs}"
    violations: list[Violation] = []
    g = from_symmetric_pattern(x)
    circles = g.seifert_circles()
    want = loop_count(symmetric_pattern(x))
    if len(circles) != want:
        violations.append(
            Violation(theorem, pid, "-", f"circles={want}", str(len(circles)))
        )
    for circle in circles:
        crossings = [d // 4 for d in circle]
        if len(crossings) != len(set(crossings)):
            violations.append(
                Violation(theorem, pid, f"circle@{circle[0]}", "each crossing once", "revisit")
            )
    return 1 + len(circles), violations


def verify_seifert(spec: SweepSpec, jobs: int = 1) -> TheoremReport:
    start = time.perf_counter()
    items = [
        (str(x),)
        for n in range(spec.n_min, spec.n_max + 1)
        for x in iter_strings(n, spec.strings)
    ]
    results = _pmap(_check_seifert_item, items, jobs)
    instances = sum(r[0] for r in results)
    violations = sorted(
        (v for r in results for v in r[1]), key=lambda v: (v.pattern_id, v.loop_key)
    )
    return TheoremReport(
        "seifert-correspondence",
        instances,
        tuple(violations),
        time.perf_counter() - start,
        notes=(spec.describe(),),
    )


# ---------------------------------------------------------------------------
# Excursion residues.
# ---------------------------------------------------------------------------

def _check_excursions_item(
    args: tuple[int, int, str, str]
) -> tuple[int, list[Violation], list[str]]:
    m, n, xs, ys = args
    p = make_pattern(m, n, xs, ys)
    d = decompose(p)
    theorem = "excursion-residues"
    violations: list[Violation] = []
    records: list[str] = []
    instances = 0
    for loop in d.loops:
        if loop.is_trivial:
            continue
        p2, l2, chain = exc.canonicalize_for_excursions(p, loop)
        tname = "+".join(chain) if chain else "identity"
        lam, mu = l2.homology
        if lam == 0:
            a, excursions = exc.decompose_vertical(p2, l2)
            for e in excursions:
                instances += 1
                records.append(
                    f"record A pattern={p.pattern_id} loop={loop.key} transform={tname} "
                    f"a={a} i={e.start_y} j={e.end_y} length={e.length}"
                )
                if e.length % 8 != e.predicted_residue:
                    violations.append(
                        Violation(
                            theorem,
                            p.pattern_id,
                            loop.key,
                            f"a-exc len={e.predicted_residue} mod 8",
                            str(e.length % 8),
                            detail=f"a={a} i={e.start_y} j={e.end_y} transform={tname}",
                        )
                    )
        else:
            e = exc.find_ab_excursion(p2, l2)
            instances += 1
            records.append(
                f"record AB pattern={p.pattern_id} loop={loop.key} transform={tname} "
                f"a={e.a} b={e.b} p={e.p} q={e.q} kC={e.k_c} length={e.length}"
            )
            if e.length % 8 != e.predicted_residue:
                violations.append(
                    Violation(
                        theorem,
                        p.pattern_id,
                        loop.key,
                        f"ab-exc len={e.predicted_residue} mod 8",
                        str(e.length % 8),
                        detail=f"a={e.a} b={e.b} p={e.p} q={e.q} kC={e.k_c} transform={tname}",
                    )
                )
            crossings = exc.baseline_crossings(e.path, e.b)
            pl_x = p2.x[e.b % p2.n]
            expect_dec = pl_x == -1
            mono = all(
                (u > v) if expect_dec else (u < v)
                for u, v in zip(crossings, crossings[1:])
            )
            if not mono or not crossings or crossings[0] != e.p:
                violations.append(
                    Violation(
                        theorem,
                        p.pattern_id,
                        loop.key,
                        "monotone baseline crossings from p",
                        str(crossings),
                    )
                )
            if len({u % 2 for u in crossings}) > 1:
                violations.append(
                    Violation(
                        theorem, p.pattern_id, loop.key, "same-parity crossings", str(crossings)
                    )
                )
    return instances, violations, records


def verify_excursions(
    spec: SweepSpec, jobs: int = 1
) -> tuple[TheoremReport, list[str]]:
    start = time.perf_counter()
    items = [_pattern_args(p) for p in iter_patterns(spec)]
    results = _pmap(_check_excursions_item, items, jobs)
    instances = sum(r[0] for r in results)
    violations = sorted(
        (v for r in results for v in r[1]), key=lambda v: (v.pattern_id, v.loop_key)
    )
    records = [rec for r in results for rec in r[2]]
    report = TheoremReport(
        "excursion-residues",
        instances,
        tuple(violations),
        time.perf_counter() - start,
        notes=(spec.describe(),),
    )
    return report, records


HARVEST_HEADER = (
    "#hitomezashi-excursions v1 "
    "(record KIND pattern loop transform a [b] i/j or p/q [kC] length)"
)


# ---------------------------------------------------------------------------
# Independent brute-force tracer.
# ---------------------------------------------------------------------------

def brute_oracle(p: ToroidalPattern) -> tuple[CountSummary, list[tuple]]:
    """Naive second tracer: explicit successor table, no shortcuts.

    Used as the independent oracle for the streamlined decomposition; the
    two must agree loop for loop.  Limited to M*N <= 400.
    """
    if p.m * p.n > 400:
        raise ValueError("brute oracle is capped at M*N <= 400")
    succ = {}
    edges = []
    for i in range(p.m):
        for j in range(p.n):
            for d in ("E", "W", "N", "S"):
                e = DirectedEdge(i, j, d)
                if edge_is_valid(p, e):
                    edges.append(e)
    for e in edges:
        hi, hj = edge_head(p, e)
        nxt = [
            e2
            for e2 in edges
            if (e2.i, e2.j) == (hi, hj) and e2.axis != e.axis
        ]
        assert len(nxt) == 1
        succ[e] = nxt[0]
    visited = set()
    raw_loops = []
    for e in sorted(edges, key=lambda e: e.sort_key):
        if e in visited:
            continue
        cyc = [e]
        visited.add(e)
        cur = succ[e]
        while cur != e:
            cyc.append(cur)
            visited.add(cur)
            cur = succ[cur]
        raw_loops.append(tuple(cyc))
    canon = []
    totals = {"trivial": 0, "cw": 0, "ccw": 0}
    classes = []
    for cyc in raw_loops:
        rot = min(range(len(cyc)), key=lambda t: cyc[t].sort_key)
        canon.append(cyc[rot:] + cyc[:rot])
        dx = sum(1 for e in cyc if e.d == "E") - sum(1 for e in cyc if e.d == "W")
        dy = sum(1 for e in cyc if e.d == "N") - sum(1 for e in cyc if e.d == "S")
        assert dx % p.m == 0 and dy % p.n == 0
        lam, mu = dx // p.m, dy // p.n
        turn = 0
        for t, e in enumerate(cyc):
            nxt_e = cyc[(t + 1) % len(cyc)]
            order = "ENWS"
            a, b = order.index(e.d), order.index(nxt_e.d)
            turn += 1 if (a - b) % 4 == 1 else -1
        if (lam, mu) == (0, 0):
            totals["trivial"] += 1
            if turn > 0:
                totals["cw"] += 1
            else:
                totals["ccw"] += 1
        else:
            classes.append((lam, mu))
    summary = CountSummary(
        total=len(raw_loops),
        trivial=totals["trivial"],
        nontrivial=len(raw_loops) - totals["trivial"],
        class_counts=tuple(sorted(Counter(classes).items())),
        cw_trivial=totals["cw"],
        ccw_trivial=totals["ccw"],
    )
    canon.sort(key=lambda cyc: cyc[0].sort_key)
    return summary, canon


def oracle_agrees(p: ToroidalPattern) -> bool:
    """Whether the brute tracer and the streamlined decomposition coincide."""
    summary, canon = brute_oracle(p)
    d = decompose(p)
    mine = [l.edges for l in d.loops]
    return mine == canon and summarize(d) == summary


# ---------------------------------------------------------------------------
# Report rendering.
# ---------------------------------------------------------------------------

def render_report(reports: Iterable[TheoremReport], include_timing: bool = True) -> str:
    lines = [REPORT_HEADER]
    reports = list(reports)
    for r in reports:
        lines.append(f"theorem {r.theorem}")
        for note in r.notes:
            lines.append(f"note {note}")
        lines.append(f"instances {r.instances}")
        lines.append(f"violations {len(r.violations)}")
        for v in r.violations:
            lines.append(v.line())
        if include_timing:
            lines.append(f"# elapsed-seconds {r.elapsed:.3f}")
    lines.append("")
    lines.append("theorem                  instances  violations")
    for r in reports:
        lines.append(f"{r.theorem:<24} {r.instances:>9}  {len(r.violations):>10}")
    return "\n".join(lines) + "\n"


VERIFY_OPS = {
    "homology": verify_homology,
    "length": verify_length,
    "counts": verify_counts,
    "moves": verify_moves,
    "seifert": verify_seifert,
}
