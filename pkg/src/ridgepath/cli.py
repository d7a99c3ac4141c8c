"""Command-line front end.

Exit codes: 0 when a witness is found or the verdict is positive, 1 for a
negative verdict (no cycle, rejected path, data not interpolable), 2 for
malformed input or violated preconditions.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import cycles, interp, paths
from .errors import RidgeError, SceneError
from .scene import Scene, dump_report, fmt_rational, fmt_vector, load_scene, make_report
from .svg import render_svg

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2


def _pt(p) -> str:
    return "(" + ", ".join(fmt_rational(x) for x in p) + ")"


def _vec(v) -> str:
    return "[" + ", ".join(fmt_rational(x) for x in v) + "]"


class _Out:
    """Collects human-readable lines and the JSON report of one command."""

    def __init__(self):
        self.lines: list[str] = []
        self.report: dict | None = None
        self.svg: str | None = None

    def __call__(self, text: str = ""):
        self.lines.append(text)


def _need_points(scene: Scene):
    if not scene.points:
        raise SceneError("field 'points': missing or empty")
    return scene.points


def _need_directions(scene: Scene, count: int | None = None):
    if not scene.directions:
        raise SceneError("field 'directions': missing or empty")
    if count is not None and len(scene.directions) != count:
        raise SceneError(f"field 'directions': expected {count} directions, got {len(scene.directions)}")
    return scene.directions


# -- subcommands --------------------------------------------------------------


def cmd_witness(scene: Scene, args, out: _Out) -> int:
    a1, a2 = _need_directions(scene, 2)
    if len(scene.lines) != 3:
        raise SceneError(f"field 'lines': expected exactly 3 lines, got {len(scene.lines)}")
    w = paths.three_line_witness(scene.lines, a1, a2)
    out(f"case: {w.case.value}")
    for step in w.trace:
        out(f"  {step}")
    out(f"closed path ({len(w.points)} points):")
    for p, i in zip(w.points, w.line_assignment):
        out(f"  {_pt(p)}  on line {i + 1}")
    ok = paths.check_closed_path(w.points, a1, a2)
    out(f"checker: {'accepted' if ok else 'REJECTED'}")
    out.report = make_report(
        "witness", "closed-path", scene, w.points,
        case=w.case.value,
        line_assignment=[i + 1 for i in w.line_assignment],
        trace=list(w.trace),
    )
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_check(scene: Scene, args, out: _Out) -> int:
    a1, a2 = _need_directions(scene, 2)
    pts = _need_points(scene)
    if args.mode == "closed":
        ok = paths.check_closed_path(pts, a1, a2)
        parity = paths.check_path(list(pts) + [pts[0]], a1, a2) if ok else None
    else:
        parity = paths.check_path(pts, a1, a2)
        ok = parity is not None
    verdict = "accept" if ok else "reject"
    out(f"{'closed path' if args.mode == 'closed' else 'path'} check: {verdict}")
    if ok:
        out(f"first step keeps the level of direction {parity + 1} fixed")
    out.report = make_report("check", verdict, scene, pts, note=f"mode={args.mode}")
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_cycle(scene: Scene, args, out: _Out) -> int:
    dirs = _need_directions(scene)
    pts = _need_points(scene)
    if args.full_support:
        lam = cycles.is_cycle(pts, dirs)
        cyc = None if lam is None else cycles.Cycle(pts, lam)
    else:
        cyc = cycles.contains_cycle(pts, dirs)
    if cyc is not None and args.minimal:
        cyc = cycles.extract_inclusion_minimal_cycle(cyc, dirs)
    if cyc is None:
        what = "the point set is not a cycle" if args.full_support else "no cycle"
        out(what)
        out.report = make_report("cycle", "no-cycle", scene, pts)
        return EXIT_NEGATIVE
    out(f"cycle of {len(cyc)} points:")
    for p, lam, j in zip(cyc.points, cyc.lam, cyc.indices):
        out(f"  point {j + 1} {_pt(p)}  lambda = {fmt_rational(lam)}")
    out(f"lambda = {_vec(cyc.lam)}")
    out(f"certificate check: {'ok' if cycles.certify(cyc, dirs) else 'FAILED'}")
    out.report = make_report("cycle", "cycle", scene, cyc.points, **{"lambda": fmt_vector(cyc.lam)})
    return EXIT_OK


def cmd_interpolate(scene: Scene, args, out: _Out) -> int:
    dirs = _need_directions(scene)
    pts = _need_points(scene)
    if scene.data is None:
        raise SceneError("field 'data': missing")
    problem = interp.InterpolationProblem(pts, dirs, scene.data)
    assignment = interp.solve_interpolation(problem)
    if assignment is not None:
        ok = interp.verify_representation(assignment, problem)
        out("interpolable: ridge sum found")
        table = []
        for i, g in enumerate(assignment.values):
            out(f"  g{i + 1} along {_vec(dirs[i])}:")
            for level, value in g.items():
                out(f"    g{i + 1}({fmt_rational(level)}) = {fmt_rational(value)}")
            table.append([[fmt_rational(level), fmt_rational(value)] for level, value in g.items()])
        out(f"verification: {'ok' if ok else 'FAILED'}")
        out.report = make_report(
            "interpolate", "interpolable", scene, pts,
            data=fmt_vector(scene.data), assignment=table,
        )
        return EXIT_OK if ok else EXIT_NEGATIVE
    cert = interp.obstruction_certificate(problem)
    pairing = interp.obstruction_pairing(cert, [scene.data[j] for j in cert.indices])
    out("not interpolable: a cycle pairs nonzero with the data")
    for p, lam, j in zip(cert.points, cert.lam, cert.indices):
        out(f"  point {j + 1} {_pt(p)}  lambda = {fmt_rational(lam)}")
    out(f"pairing sum lambda_j F(x_j) = {fmt_rational(pairing)}")
    out.report = make_report(
        "interpolate", "obstructed", scene, cert.points,
        pairing=fmt_rational(pairing), **{"lambda": fmt_vector(cert.lam)},
    )
    return EXIT_NEGATIVE


def van_der_corput(k: int, base: int = 2) -> Fraction:
    x, denom = Fraction(0), 1
    while k:
        k, digit = divmod(k, base)
        denom *= base
        x += Fraction(digit, denom)
    return x


def sample_parameters(line_index: int, per_line: int, seed: int) -> list[Fraction]:
    """Deterministic line parameters in ``(-(seed+1) K, (seed+1) K)``.

    Base-2 van der Corput points, indexed consecutively across lines so
    different lines get interleaved rather than identical parameters.
    """
    span = Fraction((seed + 1) * per_line)
    return [
        span * (2 * van_der_corput(line_index * per_line + j + 1) - 1)
        for j in range(per_line)
    ]


def sample_points(lines, per_line: int, seed: int) -> list[tuple]:
    pts, seen = [], set()
    for i, ln in enumerate(lines):
        for t in sample_parameters(i, per_line, seed):
            p = ln.at(t)
            if p not in seen:
                seen.add(p)
                pts.append(p)
    return pts


def cmd_search(scene: Scene, args, out: _Out) -> int:
    dirs = _need_directions(scene)
    if not scene.lines:
        raise SceneError("field 'lines': missing or empty")
    if args.samples_per_line < 1:
        raise SceneError("--samples-per-line must be positive")
    pts = sample_points(scene.lines, args.samples_per_line, args.seed)
    injected = 0
    if args.inject_witness:
        if len(dirs) != 2 or len(scene.lines) < 3:
            raise SceneError("--inject-witness needs 2 directions and at least 3 lines")
        w = paths.three_line_witness(scene.lines[:3], dirs[0], dirs[1])
        for p in w.points:
            if p not in pts:
                pts.append(p)
                injected += 1
    m, r = len(scene.lines), len(dirs)
    out(f"lines m = {m}, directions r = {r}, samples per line = {args.samples_per_line}, seed = {args.seed}")
    out(f"sampled {len(pts)} distinct points" + (f" ({injected} injected witness vertices)" if args.inject_witness else ""))
    out("empirical: absence on samples does not prove absence on lines")
    cyc = cycles.contains_cycle(pts, dirs)
    note = "empirical - absence on samples does not prove absence on lines"
    if cyc is None:
        out("no cycle found among the samples")
        out.report = make_report("search", "not-found", scene, pts, note=note)
        return EXIT_NEGATIVE
    out(f"cycle found on {len(cyc)} sampled points:")
    for p, lam in zip(cyc.points, cyc.lam):
        out(f"  {_pt(p)}  lambda = {fmt_rational(lam)}")
    out.report = make_report("search", "found", scene, cyc.points, note=note, **{"lambda": fmt_vector(cyc.lam)})
    return EXIT_OK


def cmd_svg(scene: Scene, args, out: _Out) -> int:
    if scene.dimension != 2:
        raise SceneError(f"field 'dimension': svg needs a 2D report, got dimension {scene.dimension}")
    if scene.report is not None and scene.points:
        pts = scene.points
        title = f"{scene.report.get('command', 'report')}: {scene.report.get('case', scene.report.get('verdict', ''))}"
    else:
        a1, a2 = _need_directions(scene, 2)
        if len(scene.lines) != 3:
            raise SceneError("field 'points': svg needs a witness report or a scene with 3 lines")
        w = paths.three_line_witness(scene.lines, a1, a2)
        pts, title = w.points, f"witness: {w.case.value}"
    out.svg = render_svg(pts, scene.lines, title)
    return EXIT_OK


COMMANDS = {
    "witness": cmd_witness,
    "check": cmd_check,
    "cycle": cmd_cycle,
    "interpolate": cmd_interpolate,
    "search": cmd_search,
    "svg": cmd_svg,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ridgepath",
        description="Closed paths, cycles and exact ridge-function interpolation certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("scene", help="scene or report file (JSON)")
        p.add_argument("--output", "-o", help="write the JSON report (SVG for 'svg') to this file")
        if name != "svg":
            p.add_argument("--json", action="store_true", help="print the JSON report instead of text")
        return p

    add("witness", "closed path in the union of three lines (two directions)")
    p = add("check", "check whether the scene's points form a path or closed path")
    p.add_argument("--mode", choices=("path", "closed"), default="closed")
    p = add("cycle", "find a cycle among the scene's points")
    p.add_argument("--full-support", action="store_true", help="require the whole set to be a cycle")
    p.add_argument("--minimal", action="store_true", help="shrink to an inclusion-minimal cycle")
    add("interpolate", "interpolate the scene's data by a ridge sum, or certify that it cannot be done")
    p = add("search", "look for cycles among points sampled on the scene's lines")
    p.add_argument("--samples-per-line", "-k", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inject-witness", action="store_true", help="add the three-line witness vertices (r = 2)")
    add("svg", "render a 2D witness as SVG")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Out()
    try:
        scene = load_scene(args.scene)
        code = COMMANDS[args.command](scene, args, out)
    except RidgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    if out.svg is not None:
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(out.svg)
        else:
            sys.stdout.write(out.svg)
        return code

    if getattr(args, "json", False):
        sys.stdout.write(dump_report(out.report))
    else:
        sys.stdout.write("\n".join(out.lines) + "\n")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(dump_report(out.report))
    return code


if __name__ == "__main__":
    sys.exit(main())
