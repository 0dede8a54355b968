"""``liemech`` command line: run scenarios, inspect root systems, group ops, jolt reports.

Exit codes: 0 success, 1 usage error, 2 domain or validation error,
3 numerical failure.
"""

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from liemech import __version__
from liemech.algebra import (
    build_root_system,
    cartan_matrix,
    classify_diagram,
    diagram_to_text,
    dynkin_diagram,
    root_angles,
    simple_roots,
    verify_root_system,
)
from liemech.cli.runner import run
from liemech.cli.scenario import parse_scenario
from liemech.dynamics import BodyParams, Trajectory, fmt
from liemech.errors import LieMechError, NumericalFailure
from liemech.groups import (
    Pose2,
    Pose3,
    Twist,
    bch3,
    catalog_lookup,
    euler_angles_to_rotation,
    exp_se3,
    exp_so3,
    log_se3,
    log_so3,
    quaternion_from_axis_angle,
    se2_adjoint,
    se2_coadjoint,
)
from liemech.jolt import jolt_report, report_to_text

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_NUMERICAL = 0, 1, 2, 3
DEFAULT_OUT = "liemech_out"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _row(values):
    return " ".join(fmt(x) for x in np.ravel(values))


def _rows(m):
    return "\n".join(_row(r) for r in np.asarray(m))


def _yes(flag):
    return "yes" if flag else "no"


# --- group -----------------------------------------------------------------

def _group_exp_so3(x):
    return _rows(exp_so3(x))


def _group_log_so3(x):
    return _row(log_so3(np.reshape(x, (3, 3))))


def _group_exp_se3(x):
    return _rows(exp_se3(Twist(x[:3], x[3:])).as_matrix())


def _group_log_se3(x):
    t = log_se3(Pose3.from_matrix(np.reshape(x, (4, 4))))
    return _row(np.concatenate([t.w, t.v]))


def _group_adjoint_se2(x):
    xi, v = se2_adjoint(Pose2(x[0], x[1:3]), (x[3], x[4:6]))
    return _row([xi, *v])


def _group_coadjoint_se2(x):
    mu, alpha = se2_coadjoint(Pose2(x[0], x[1:3]), (x[3], x[4:6]))
    return _row([mu, *alpha])


def _group_bch(x):
    return _row(bch3(x[:3], x[3:]))


def _group_quaternion(x):
    return _row(quaternion_from_axis_angle(x[:3], x[3]).as_array())


def _group_euler(x):
    return _rows(euler_angles_to_rotation(*x))


# op -> (handler, argument count, argument description)
GROUP_OPS = {
    "exp-so3": (_group_exp_so3, 3, "w1 w2 w3"),
    "log-so3": (_group_log_so3, 9, "r11 r12 ... r33 (row-major)"),
    "exp-se3": (_group_exp_se3, 6, "w1 w2 w3 v1 v2 v3"),
    "log-se3": (_group_log_se3, 16, "m11 ... m44 (row-major homogeneous matrix)"),
    "adjoint-se2": (_group_adjoint_se2, 6, "theta a1 a2 xi v1 v2"),
    "coadjoint-se2": (_group_coadjoint_se2, 6, "theta a1 a2 mu alpha1 alpha2"),
    "bch": (_group_bch, 6, "u1 u2 u3 v1 v2 v3"),
    "quaternion": (_group_quaternion, 4, "u1 u2 u3 theta"),
    "euler": (_group_euler, 3, "phi psi theta"),
}


def _numbers(op, args, count, describe):
    if len(args) != count:
        raise UsageError(f"group {op} takes {count} numbers ({describe}), got {len(args)}")
    try:
        return np.array([float(a) for a in args])
    except ValueError as exc:
        raise UsageError(f"group {op}: {exc}") from None


def cmd_group(ns, out):
    op, args = ns.op, ns.args
    if op == "catalog":
        if len(args) not in (1, 2):
            raise UsageError("group catalog takes NAME [N]")
        try:
            n = int(args[1]) if len(args) == 2 else 1
        except ValueError:
            raise UsageError(f"group catalog: N must be an integer, got '{args[1]}'") from None
        e = catalog_lookup(args[0], n)
        print(f"{e.name} dim={e.dimension} compact={_yes(e.compact)} connected={_yes(e.connected)} "
              f"simply_connected={_yes(e.simply_connected)} abelian={_yes(e.abelian)}", file=out)
        return EXIT_OK
    if op not in GROUP_OPS:
        known = ", ".join(sorted([*GROUP_OPS, "catalog"]))
        raise UsageError(f"unknown group op '{op}' (known: {known})")
    handler, count, describe = GROUP_OPS[op]
    print(handler(_numbers(op, args, count, describe)), file=out)
    return EXIT_OK


# --- roots -----------------------------------------------------------------

def roots_report(family, rank):
    """Text report of the construct, verify, base, Cartan, diagram, classify pipeline."""
    rs = build_root_system(family, rank)
    ax = verify_root_system(rs)
    base = simple_roots(rs)
    cm = cartan_matrix(base)
    diagram = dynkin_diagram(cm, base)
    labels = classify_diagram(diagram)
    angles = ", ".join(fmt(round(a, 9)) for a in root_angles(rs))
    lines = [
        f"family = {family.upper()}",
        f"rank = {rank}",
        f"{len(rs)} roots",
        f"axioms: multiples={_ok(ax.multiples)} reflection={_ok(ax.reflection)} "
        f"integrality={_ok(ax.integrality)} worst_violation={fmt(ax.worst_violation)}",
        f"angles: {angles}",
        "cartan matrix:",
        *("  " + " ".join(f"{int(x):2d}" for x in r) for r in cm.a),
        "diagram:",
        *diagram_to_text(diagram).splitlines(),
        "classified: " + " + ".join(f"{f}{n}" for f, n in labels),
    ]
    return "\n".join(lines) + "\n"


def _ok(flag):
    return "ok" if flag else "FAIL"


def cmd_roots(ns, out):
    try:
        rank = int(ns.rank)
    except ValueError:
        raise UsageError(f"rank must be an integer, got '{ns.rank}'") from None
    out.write(roots_report(ns.family, rank))
    return EXIT_OK


# --- run -------------------------------------------------------------------

def output_base(arg):
    """``--out`` beats ``LIEMECH_OUT`` which beats ``./liemech_out``."""
    return Path(arg or os.environ.get("LIEMECH_OUT") or DEFAULT_OUT)


def _run_one(path, out_dir):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        return EXIT_DOMAIN, f"{path}: cannot read scenario: {exc.strerror}"
    try:
        sc = parse_scenario(text)
        with np.errstate(over="ignore", invalid="ignore"):
            manifest = run(sc, out_dir)
    except NumericalFailure as exc:
        return EXIT_NUMERICAL, f"{path}: {exc}"
    except LieMechError as exc:
        return EXIT_DOMAIN, f"{path}: {exc}"
    data = manifest["data"]
    return EXIT_OK, f"{path}: {data['system']} {data['steps']} steps -> {out_dir}"


def cmd_run(ns, out):
    base = output_base(ns.out)
    stems = [Path(p).stem for p in ns.scenarios]
    dupes = sorted({s for s in stems if stems.count(s) > 1})
    if dupes:
        raise UsageError(f"scenario files share an output name: {', '.join(dupes)}")
    if ns.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    jobs = [(p, base / s) for p, s in zip(ns.scenarios, stems)]
    with ThreadPoolExecutor(max_workers=ns.jobs) as pool:
        results = list(pool.map(lambda job: _run_one(*job), jobs))
    code = EXIT_OK
    for status, message in results:
        print(("error: " if status else "") + message, file=out if status == EXIT_OK else sys.stderr)
        code = max(code, status)
    return code


# --- jolt ------------------------------------------------------------------

def _triple(values, name):
    if len(values) == 1:
        values = values * 3
    if len(values) != 3:
        raise UsageError(f"--{name} takes 1 or 3 numbers, got {len(values)}")
    return values


def cmd_jolt(ns, out):
    try:
        text = Path(ns.csv).read_text(encoding="utf-8")
    except OSError as exc:
        raise LieMechError(f"{ns.csv}: cannot read trajectory: {exc.strerror}") from None
    params = BodyParams(m=_triple(ns.mass, "mass"), i=_triple(ns.inertia, "inertia"))
    traj = Trajectory.from_csv(text, source=ns.csv)
    try:
        rep = jolt_report(traj, params, ns.thresholds)
    except LieMechError as exc:
        raise type(exc)(f"{ns.csv}: {exc}") from None
    text = report_to_text(rep)
    if ns.output:
        Path(ns.output).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return EXIT_OK


# --- entry point -------------------------------------------------------------

def build_parser():
    p = _Parser(prog="liemech", description="Lie-group mechanics toolkit.")
    p.add_argument("--version", action="version", version=f"liemech {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    r = sub.add_parser("run", help="run one or more scenario files")
    r.add_argument("scenarios", nargs="+", metavar="SCENARIO")
    r.add_argument("--out", help="output base directory (default: $LIEMECH_OUT or ./liemech_out)")
    r.add_argument("--jobs", type=int, default=1, help="scenarios to run concurrently")
    r.set_defaults(func=cmd_run)

    q = sub.add_parser("roots", help="construct, verify and classify a root system")
    q.add_argument("family", help="A, B, C, D, E, F or G")
    q.add_argument("rank")
    q.set_defaults(func=cmd_roots)

    ops = ", ".join(sorted([*GROUP_OPS, "catalog"]))
    g = sub.add_parser("group", help=f"group operations: {ops}")
    g.add_argument("op")
    g.add_argument("args", nargs=argparse.REMAINDER)
    g.set_defaults(func=cmd_group)

    j = sub.add_parser("jolt", help="SE(3)-jolt report for a trajectory CSV")
    j.add_argument("csv")
    j.add_argument("--mass", type=float, nargs="+", required=True)
    j.add_argument("--inertia", type=float, nargs="+", required=True)
    j.add_argument("--thresholds", type=float, nargs=2, required=True, metavar=("FDOT", "TDOT"))
    j.add_argument("--output", "-o", help="write the report here instead of stdout")
    j.set_defaults(func=cmd_jolt)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.func(ns, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"liemech: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalFailure as exc:
        print(f"liemech: error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except LieMechError as exc:
        print(f"liemech: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
