import os
import random

import pytest

from hitomezashi.errors import SweepRangeError
from hitomezashi.loops import decompose, summarize
from hitomezashi.pattern import SignString, make_pattern, symmetric_pattern
from hitomezashi.verify import (
    SweepSpec,
    TheoremReport,
    Violation,
    brute_oracle,
    iter_patterns,
    iter_strings,
    oracle_agrees,
    render_report,
    verify_counts,
    verify_excursions,
    verify_homology,
    verify_length,
    verify_moves,
    verify_seifert,
)


def test_sweepspec_ceilings():
    SweepSpec(mode="symmetric", n_max=14)
    with pytest.raises(SweepRangeError):
        SweepSpec(mode="symmetric", n_max=15)
    with pytest.raises(SweepRangeError):
        SweepSpec(mode="general", m_max=9, n_max=9)
    SweepSpec(mode="general", m_max=9, n_max=9, force=True)


def test_sweepspec_env_override(monkeypatch):
    monkeypatch.setenv("HITOMEZASHI_CEILING_OVERRIDE", "20:30")
    SweepSpec(mode="symmetric", n_max=18)
    SweepSpec(mode="general", m_max=14, n_max=14)
    monkeypatch.setenv("HITOMEZASHI_CEILING_OVERRIDE", "10")
    with pytest.raises(SweepRangeError):
        SweepSpec(mode="symmetric", n_max=12)


def test_iter_strings_filters():
    assert sum(1 for _ in iter_strings(4, "all")) == 16
    assert sum(1 for _ in iter_strings(4, "balanced")) == 6
    two_blocks = list(iter_strings(4, "two-block"))
    assert all(str(s).count("+-") + str(s).count("-+") <= 2 for s in two_blocks)
    assert SignString((1, 1, 1, 1)) in two_blocks


def test_iter_patterns_sampled_deterministic():
    spec = SweepSpec(mode="general", n_max=5, m_max=5, sample=(10, 42))
    a = [p.pattern_id for p in iter_patterns(spec)]
    b = [p.pattern_id for p in iter_patterns(spec)]
    assert a == b and len(a) == 10


def test_brute_oracle_agrees_seeded():
    rng = random.Random(1234)
    for _ in range(200):
        m, n = rng.randint(3, 10), rng.randint(3, 10)
        x = SignString(tuple(rng.choice((-1, 1)) for _ in range(n)))
        y = SignString(tuple(rng.choice((-1, 1)) for _ in range(m)))
        assert oracle_agrees(make_pattern(m, n, x, y))


def test_brute_oracle_fig1():
    s, loops = brute_oracle(symmetric_pattern("---+++++"))
    assert s.total == 8 and s.nontrivial == 2


def test_brute_oracle_allplus_3x3():
    p = symmetric_pattern("+++")
    s, loops = brute_oracle(p)
    assert s.total == 3
    assert s.class_counts == (((1, 1), 3),)
    d = decompose(p)
    assert [l.edges for l in d.loops] == loops
    assert summarize(d) == s


def test_verify_homology_small():
    r = verify_homology(SweepSpec(mode="symmetric", n_max=7))
    assert r.ok and r.instances > 0
    r = verify_homology(SweepSpec(mode="general", m_max=4, n_max=4))
    assert r.ok


def test_verify_length_small():
    assert verify_length(SweepSpec(mode="general", m_max=4, n_max=4)).ok
    assert verify_length(SweepSpec(mode="symmetric", n_max=7)).ok


def test_verify_counts_small():
    assert verify_counts(SweepSpec(mode="symmetric", n_max=7)).ok
    assert verify_counts(SweepSpec(mode="general", m_max=4, n_max=4)).ok


def test_verify_moves_small():
    r = verify_moves(SweepSpec(mode="linklike", n_max=5))
    assert r.ok
    assert "schedule-failures 0" in r.notes


def test_verify_seifert_small():
    assert verify_seifert(SweepSpec(mode="linklike", n_max=6)).ok


def test_verify_excursions_small():
    rep, records = verify_excursions(SweepSpec(mode="general", m_max=4, n_max=4))
    assert rep.ok
    assert records and all(r.startswith("record ") for r in records)


def test_verify_jobs_reproducible():
    spec = SweepSpec(mode="symmetric", n_max=6)
    r1 = verify_homology(spec, jobs=1)
    r2 = verify_homology(spec, jobs=2)
    assert (r1.instances, r1.violations) == (r2.instances, r2.violations)


def test_render_report_deterministic_without_timing():
    spec = SweepSpec(mode="symmetric", n_max=5)
    a = render_report([verify_counts(spec)], include_timing=False)
    b = render_report([verify_counts(spec)], include_timing=False)
    assert a == b
    assert a.startswith("#hitomezashi-report v1\n")
    assert "elapsed" not in a
    with_timing = render_report([verify_counts(spec)])
    assert "# elapsed-seconds" in with_timing


def test_violation_line_format():
    v = Violation("loop-counts", "4x4:++--:++--", "E@(0,0)", "total=4", "5", "why")
    assert v.line() == (
        "violation loop-counts pattern=4x4:++--:++-- loop=E@(0,0) "
        "expected=total=4 actual=5 detail=why"
    )
    r = TheoremReport("loop-counts", 3, (v,), 0.1)
    text = render_report([r])
    assert "violations 1" in text and v.line() in text
