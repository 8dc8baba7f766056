"""Command-line interface.

Subcommands
-----------
loops     print the loop decomposition of one pattern
render    write an SVG or ASCII picture of one pattern
verify    run theorem sweeps, write reports and figures
linklike  build the annulus graph of a symmetric pattern (dump/seifert/swap)

Line formats (all reports start with the header ``#hitomezashi-report v1``):

* loop records: ``loop <pattern-id> <index> <length> <lam> <mu> <turning> <start-edge>``
  where the pattern id is ``MxN:x:y`` in +/- sign notation.
* verify reports: ``theorem/instances/violations`` lines with one
  ``violation ...`` line per witness; wall time is isolated on dedicated
  ``# elapsed-seconds`` lines so everything else is byte-reproducible.
* excursion harvests: one ``record ...`` line per excursion.

Exit codes: 0 success, 1 theorem violation found, 2 usage error,
3 move-schedule or internal assertion failure.  The only environment
variable honored is ``HITOMEZASHI_CEILING_OVERRIDE`` (``sym`` or
``sym:general`` integer ceilings for sweep ranges).
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from .errors import HitomezashiError, MoveScheduleFailure
from .linklike import LinkLikeGraph, from_symmetric_pattern, swap_first_strands
from .loops import decompose, summarize
from .pattern import ToroidalPattern, k, make_pattern, parse_signs, symmetric_pattern
from .render import RenderSpec, render
from .verify import (
    REPORT_HEADER,
    HARVEST_HEADER,
    SweepSpec,
    TheoremReport,
    render_report,
    verify_counts,
    verify_excursions,
    verify_homology,
    verify_length,
    verify_moves,
    verify_seifert,
)

ALL_THEOREMS = ("homology", "length", "counts", "moves", "seifert", "excursions")


def _pattern_from_args(args: argparse.Namespace) -> ToroidalPattern:
    if args.symmetric:
        if args.x is None:
            raise HitomezashiError("--symmetric requires --x")
        return symmetric_pattern(parse_signs(args.x))
    if args.M is None or args.N is None or args.x is None or args.y is None:
        raise HitomezashiError("general patterns require --M --N --x --y")
    return make_pattern(args.M, args.N, parse_signs(args.x), parse_signs(args.y))


def _add_pattern_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--M", type=int, default=None, help="horizontal period")
    sub.add_argument("--N", type=int, default=None, help="vertical period")
    sub.add_argument("--x", type=str, default=None, help="row sign string (length N)")
    sub.add_argument("--y", type=str, default=None, help="column sign string (length M)")
    sub.add_argument(
        "--symmetric", action="store_true", help="use the N x N pattern with y = x"
    )


def cmd_loops(args: argparse.Namespace) -> int:
    p = _pattern_from_args(args)
    d = decompose(p)
    s = summarize(d)
    print(REPORT_HEADER)
    print(f"pattern {p.pattern_id} M={p.m} N={p.n} k(x)={k(p.x)} k(y)={k(p.y)}")
    print(
        f"counts total={s.total} trivial={s.trivial} nontrivial={s.nontrivial} "
        f"cw={s.cw_trivial} ccw={s.ccw_trivial}"
    )
    classes = " ".join(f"({lam},{mu})x{c}" for (lam, mu), c in s.class_counts) or "-"
    print(f"classes {classes}")
    for idx, loop in enumerate(d.loops):
        print(
            f"loop {p.pattern_id} {idx} {loop.length} {loop.lam} {loop.mu} "
            f"{loop.turning} {loop.start}"
        )
    if args.figure:
        from .plotting import save_pattern_figure

        save_pattern_figure(p, d, args.figure)
        print(f"figure {args.figure}")
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    p = _pattern_from_args(args)
    d = decompose(p)
    spec = RenderSpec(
        target=args.target,
        cell_size=args.cell_size,
        domain_outline=not args.no_domain,
        diagonal_guide=args.diagonal,
    )
    text = render(p, d, spec)
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as e:
            print(f"error: cannot write {args.out}: {e}", file=sys.stderr)
            return 2
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def _run_verify(args: argparse.Namespace) -> tuple[list[TheoremReport], list[str]]:
    theorems = args.theorem or ["all"]
    if "all" in theorems:
        theorems = list(ALL_THEOREMS)
    mode = "symmetric" if args.symmetric else "general"
    sample = (args.sample, args.seed) if args.sample else None
    reports: list[TheoremReport] = []
    harvest: list[str] = []
    for name in theorems:
        if name in ("moves", "seifert"):
            spec = SweepSpec(
                mode="linklike",
                n_min=args.n_min,
                n_max=args.n_max,
                strings=args.filter,
                force=args.force,
            )
        else:
            spec = SweepSpec(
                mode=mode,
                n_min=args.n_min,
                n_max=args.n_max,
                m_min=args.m_min,
                m_max=args.m_max if not args.symmetric else args.n_max,
                strings=args.filter,
                sample=sample,
                force=args.force,
            )
        if name == "homology":
            reports.append(verify_homology(spec, jobs=args.jobs))
        elif name == "length":
            reports.append(verify_length(spec, jobs=args.jobs))
        elif name == "counts":
            reports.append(verify_counts(spec, jobs=args.jobs))
        elif name == "moves":
            reports.append(verify_moves(spec, jobs=args.jobs))
        elif name == "seifert":
            reports.append(verify_seifert(spec, jobs=args.jobs))
        elif name == "excursions":
            rep, recs = verify_excursions(spec, jobs=args.jobs)
            reports.append(rep)
            harvest.extend(recs)
        else:
            raise HitomezashiError(f"unknown theorem {name!r}")
    return reports, harvest


def _verify_exit_code(reports: list[TheoremReport]) -> int:
    schedule_failure = any(
        v.expected == "move schedule" for r in reports for v in r.violations
    )
    if schedule_failure:
        return 3
    if any(r.violations for r in reports):
        return 1
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    reports, harvest = _run_verify(args)
    text = render_report(reports)
    sys.stdout.write(text)
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.txt").write_text(text, encoding="utf-8")
        if harvest:
            (out / "excursions.txt").write_text(
                HARVEST_HEADER + "\n" + "\n".join(harvest) + "\n", encoding="utf-8"
            )
        if not args.no_figures:
            from .plotting import save_pattern_figure, save_sweep_summary

            save_sweep_summary(reports, str(out / "summary.png"))
            witnesses = []
            for r in reports:
                for v in r.violations:
                    if ":" in v.pattern_id and v.pattern_id not in witnesses:
                        witnesses.append(v.pattern_id)
            for idx, pid in enumerate(witnesses[:4]):
                dims, xs, ys = pid.split(":")
                m, n = (int(t) for t in dims.split("x"))
                p = make_pattern(m, n, xs, ys)
                save_pattern_figure(p, decompose(p), str(out / f"witness-{idx}.png"))
    return _verify_exit_code(reports)


def cmd_linklike(args: argparse.Namespace) -> int:
    if args.action == "ingest":
        if not args.infile:
            raise HitomezashiError("ingest requires --in FILE")
        g = LinkLikeGraph.deserialize(Path(args.infile).read_text(encoding="utf-8"))
        sys.stdout.write(g.serialize())
        return 0
    if args.x is None:
        raise HitomezashiError("linklike requires --x")
    g = from_symmetric_pattern(parse_signs(args.x))
    if args.action == "dump":
        text = g.serialize()
        if args.out:
            Path(args.out).write_text(text, encoding="utf-8")
            print(f"wrote {args.out}")
        else:
            sys.stdout.write(text)
        return 0
    if args.action == "seifert":
        circles = g.seifert_circles()
        print(f"pattern {args.x} crossings={g.n_crossings} arcs={g.n_arcs}")
        print(f"seifert-circles {len(circles)}")
        for idx, c in enumerate(circles):
            print(f"circle {idx} arcs={len(c)} start={c[0]}")
        return 0
    if args.action == "swap":
        final, records = swap_first_strands(g)
        lines = [
            f"move {idx} corners={rec.face_crossings} orientation={rec.orientation} "
            f"configuration={rec.configuration or 'n/a'} before={rec.count_before} "
            f"after={rec.count_after}"
            for idx, rec in enumerate(records)
        ]
        x = parse_signs(args.x)
        swapped = "".join(
            "+" if e > 0 else "-" for e in ((x[1], x[0]) + x.entries[2:])
        )
        lines.append(f"final seifert={final.seifert_count()} swapped-string={swapped}")
        text = "\n".join(lines) + "\n"
        sys.stdout.write(text)
        if args.log:
            Path(args.log).write_text(text, encoding="utf-8")
        return 0
    raise HitomezashiError(f"unknown linklike action {args.action!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hitomezashi",
        description="Toroidal hitomezashi loops, annulus graphs, and theorem sweeps",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_loops = sub.add_parser("loops", help="print the loop decomposition")
    _add_pattern_args(p_loops)
    p_loops.add_argument("--figure", type=str, default=None, help="write a PNG figure")
    p_loops.set_defaults(func=cmd_loops)

    p_render = sub.add_parser("render", help="render a pattern to SVG or ASCII")
    _add_pattern_args(p_render)
    p_render.add_argument("--target", choices=("svg", "ascii"), default="svg")
    p_render.add_argument("--out", type=str, default=None)
    p_render.add_argument("--cell-size", type=int, default=24)
    p_render.add_argument("--no-domain", action="store_true")
    p_render.add_argument("--diagonal", action="store_true")
    p_render.set_defaults(func=cmd_render)

    p_verify = sub.add_parser("verify", help="run theorem sweeps")
    p_verify.add_argument(
        "--theorem",
        action="append",
        choices=ALL_THEOREMS + ("all",),
        help="theorem to check (repeatable; default all)",
    )
    p_verify.add_argument("--symmetric", action="store_true")
    p_verify.add_argument("--n-min", type=int, default=3)
    p_verify.add_argument("--n-max", type=int, default=6)
    p_verify.add_argument("--m-min", type=int, default=3)
    p_verify.add_argument("--m-max", type=int, default=6)
    p_verify.add_argument("--filter", choices=("all", "balanced", "two-block"), default="all")
    p_verify.add_argument("--sample", type=int, default=None, help="sampled sweep size")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--force", action="store_true", help="ignore range ceilings")
    p_verify.add_argument("--out-dir", type=str, default=None)
    p_verify.add_argument("--no-figures", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_link = sub.add_parser("linklike", help="annulus graph operations")
    p_link.add_argument("action", choices=("dump", "seifert", "swap", "ingest"))
    p_link.add_argument("--x", type=str, default=None)
    p_link.add_argument("--in", dest="infile", type=str, default=None)
    p_link.add_argument("--out", type=str, default=None)
    p_link.add_argument("--log", type=str, default=None)
    p_link.set_defaults(func=cmd_linklike)

    return parser


def _join_sign_values(argv: list[str]) -> list[str]:
    """Rewrite ``--x ---+++`` to ``--x=---+++`` so argparse accepts leading dashes."""
    out = []
    skip = False
    for tok, nxt in zip(argv, argv[1:] + [None]):
        if skip:
            skip = False
            continue
        if tok in ("--x", "--y") and nxt is not None and re.fullmatch(r"[+-01]+", nxt):
            out.append(f"{tok}={nxt}")
            skip = True
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_join_sign_values(list(argv if argv is not None else sys.argv[1:])))
    try:
        return args.func(args)
    except MoveScheduleFailure as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except AssertionError as e:
        print(f"internal assertion failure: {e}", file=sys.stderr)
        return 3
    except HitomezashiError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
