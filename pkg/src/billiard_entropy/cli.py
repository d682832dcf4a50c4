"""Command-line front end.

Commands: bound, realize, verify, count, simulate.  Exit codes: 0 ok or
certified, 2 config error, 3 not certified / verification failure,
4 unreachable target, 5 numerical stall.  All file outputs are written to
a temporary file and atomically renamed, so no partial artifacts survive
an error; float formatting is fixed at 12 significant digits so repeated
runs are byte-identical.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import tempfile

from . import plotting
from .coding import (
    SymbolWord,
    complete_word,
    count_words,
    encode,
    word_to_level_diffs,
)
from .config import RunConfig, build_table, load_config
from .errors import (
    BilliardError,
    BisectionStall,
    DomainError,
    TargetUnreachable,
)
from .freearc import max_symbol_bound, verify_arc_free
from .geometry import CAP_IDS, PhasePoint, Table, simulate
from .shooting import realize_itinerary
from .sft import (
    entropy_lower_bound,
    mushroom_certificate,
    stadium_certificate,
)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NOT_CERTIFIED = 3
EXIT_UNREACHABLE = 4
EXIT_STALL = 5

_F = ".12g"


def _atomic_write(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _atomic_figure(path: str, render) -> None:
    d = os.path.dirname(os.path.abspath(path))
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, suffix=".svg")
    os.close(fd)
    try:
        render(tmp)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _config_from_args(args) -> RunConfig:
    if args.config:
        cfg = load_config(args.config)
    elif args.stadium:
        cfg = RunConfig(kind="stadium", stadium_length=args.stadium[0],
                        stadium_width=args.stadium[1])
    elif args.mushroom:
        cfg = RunConfig(kind="mushroom", mushroom_stalk=args.mushroom[0],
                        mushroom_radius=args.mushroom[1])
    else:
        raise DomainError(
            "no table: pass --config, --stadium L W, or --mushroom L T")
    if getattr(args, "eps", None) is not None:
        cfg.eps = args.eps
    if getattr(args, "n", None) is not None:
        cfg.n_override = args.n
    if getattr(args, "out", None):
        cfg.out_dir = args.out
    seed_env = os.environ.get("BILLIARD_SEED")
    if seed_env is not None:
        try:
            cfg.seed = int(seed_env)
        except ValueError as exc:
            raise DomainError(f"bad BILLIARD_SEED: {seed_env!r}") from exc
    return cfg


def _alphabet_bound(table: Table, cfg: RunConfig) -> int:
    if cfg.n_override is not None:
        return cfg.n_override
    return max_symbol_bound(table.cap_gap, table.eps, table.table_class)


def _orbit_csv(table: Table, orbit) -> str:
    lines = ["step,arc_id,r,phi,x,y"]
    for i, p in enumerate(orbit):
        x, y = table.point_xy(p)
        lines.append(
            f"{i},{p.arc},{p.r:{_F}},{p.phi:{_F}},{x:{_F}},{y:{_F}}")
    return "\n".join(lines) + "\n"


def cmd_bound(args) -> int:
    cfg = _config_from_args(args)
    if cfg.kind == "stadium" and cfg.eps is None:
        cert = stadium_certificate(cfg.stadium_length, cfg.stadium_width)
    elif cfg.kind == "mushroom" and cfg.eps is None:
        cert = mushroom_certificate(cfg.mushroom_stalk, cfg.mushroom_radius)
    else:
        table = build_table(cfg)
        cert = entropy_lower_bound(table.cap_gap, table.eps,
                                   table.table_class)
    text = cert.to_text()
    if args.bits:
        text += f"bound = {cert.bound / math.log(2.0):{_F}} bits\n"
    sys.stdout.write(text)
    _atomic_write(os.path.join(cfg.out_dir, "bound.txt"), text)
    return EXIT_OK if cert.certified else EXIT_NOT_CERTIFIED


def cmd_realize(args) -> int:
    cfg = _config_from_args(args)
    table = build_table(cfg)
    N = _alphabet_bound(table, cfg)
    if N < 1:
        raise TargetUnreachable(
            "table parameters admit no alphabet bound N >= 1")
    symbols = tuple(args.symbols)
    for s in symbols:
        if abs(s) > N:
            raise TargetUnreachable(f"symbol {s} exceeds N = {N}")
    word = SymbolWord(symbols, N)
    completed, offset = complete_word(word)
    diffs = word_to_level_diffs(completed)
    orbit, segments, work = realize_itinerary(table, diffs, N=N)
    reencoded = encode(work, orbit, N)
    window = reencoded.symbols[offset:offset + len(symbols)]
    report = [
        f"requested: {' '.join(str(s) for s in symbols)}",
        f"completed: {' '.join(str(s) for s in completed)}",
        f"level differences: {' '.join(str(k) for k in diffs)}",
        f"re-encoded: {' '.join(str(s) for s in reencoded.symbols)}",
        f"re-encoded window: {' '.join(str(s) for s in window)}",
        f"match: {'yes' if window == symbols else 'no'}",
    ]
    text = "\n".join(report) + "\n"
    sys.stdout.write(text)
    out = cfg.out_dir
    _atomic_write(os.path.join(out, "orbit.csv"), _orbit_csv(work, orbit))
    _atomic_figure(os.path.join(out, "orbit.svg"),
                   lambda p: plotting.plot_orbit(work, segments, p))
    if args.unfolded:
        _atomic_figure(os.path.join(out, "unfolded.svg"),
                       lambda p: plotting.plot_unfolded(work, orbit,
                                                        segments, p))
    if window != symbols:
        raise BisectionStall("re-encoded word does not match the request")
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = _config_from_args(args)
    table = build_table(cfg)
    caps = list(CAP_IDS)
    if table.table_class == "semistadium":
        vcap = table.vertical_cap_id()
        caps = [c for c in caps if c != vcap]
    texts = []
    all_pass = True
    for cap in caps:
        rng = table.tracked[cap]
        if rng is None:
            rng = (0.0, table.curve(cap).length)
        pos_step = (rng[1] - rng[0]) / cfg.position_divisions
        ang_step = table.eps / cfg.angle_divisions
        cert = verify_arc_free(table, cap, table.eps,
                               position_step=pos_step, angle_step=ang_step,
                               s_range=rng)
        texts.append(cert.to_text())
        all_pass = all_pass and cert.passed
    text = "\n".join(texts)
    sys.stdout.write(text)
    _atomic_write(os.path.join(cfg.out_dir, "verify.txt"), text)
    return EXIT_OK if all_pass else EXIT_NOT_CERTIFIED


def cmd_count(args) -> int:
    cfg = _config_from_args(args)
    table = build_table(cfg)
    N = _alphabet_bound(table, cfg)
    if N < 1:
        raise DomainError("table parameters admit no alphabet bound N >= 1")
    factor = 0.5 if table.table_class == "semistadium" else 1.0
    lines = ["n,count,rate"]
    for n in range(1, args.nmax + 1):
        a = count_words(N, n)
        rate = factor * math.log(a) / n
        lines.append(f"{n},{a},{rate:{_F}}")
    text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    _atomic_write(os.path.join(cfg.out_dir, "counts.csv"), text)
    return EXIT_OK


def cmd_simulate(args) -> int:
    cfg = _config_from_args(args)
    table = build_table(cfg)
    arc, r, phi = args.start
    if arc not in ("bottom", "top", "left", "right"):
        raise DomainError(f"unknown arc id {arc!r}")
    start = PhasePoint(arc, float(r), float(phi))
    orbit, segments = simulate(table, start, args.steps)
    text = _orbit_csv(table, orbit)
    sys.stdout.write(text)
    out = cfg.out_dir
    _atomic_write(os.path.join(out, "orbit.csv"), text)
    _atomic_figure(os.path.join(out, "orbit.svg"),
                   lambda p: plotting.plot_orbit(table, segments, p))
    if args.unfolded:
        _atomic_figure(os.path.join(out, "unfolded.svg"),
                       lambda p: plotting.plot_unfolded(table, orbit,
                                                        segments, p))
    return EXIT_OK


def _add_table_args(p):
    p.add_argument("--config", help="path to a run config file")
    p.add_argument("--stadium", nargs=2, type=float, metavar=("L", "W"),
                   help="stadium with straight part L x W")
    p.add_argument("--mushroom", nargs=2, type=float, metavar=("L", "T"),
                   help="mushroom with stalk length L, cap radius T")
    p.add_argument("--eps", type=float, help="angle parameter in radians")
    p.add_argument("--n", type=int, help="override the alphabet bound N")
    p.add_argument("--out", help="output directory (default current)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="billiard-entropy",
        description="Entropy bounds and symbolic orbits for stadium-like "
                    "billiard tables.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="compute a certified entropy bound")
    _add_table_args(p)
    p.add_argument("--bits", action="store_true",
                   help="also print the bound in bits")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("realize", help="build an orbit with a given word")
    _add_table_args(p)
    p.add_argument("--unfolded", action="store_true",
                   help="also draw the unfolded flight")
    p.add_argument("symbols", nargs="+", type=int,
                   help="symbol word over {-N..N}")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("verify", help="sampled free-arc verification")
    _add_table_args(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="admissible word counts and rates")
    _add_table_args(p)
    p.add_argument("--nmax", type=int, required=True,
                   help="largest word length to tabulate")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("simulate", help="iterate the billiard map")
    _add_table_args(p)
    p.add_argument("--start", nargs=3, required=True,
                   metavar=("ARC", "R", "PHI"),
                   help="initial collision: arc id, arclength, angle")
    p.add_argument("--steps", type=int, default=20,
                   help="number of billiard-map iterations")
    p.add_argument("--unfolded", action="store_true",
                   help="also draw the unfolded flight")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except TargetUnreachable as exc:
        sys.stderr.write(f"unreachable target: {exc}\n")
        return EXIT_UNREACHABLE
    except BisectionStall as exc:
        sys.stderr.write(f"numerical stall: {exc}\n")
        return EXIT_STALL
    except DomainError as exc:
        sys.stderr.write(f"config error: {exc}\n")
        return EXIT_CONFIG
    except BilliardError as exc:
        sys.stderr.write(f"numerical failure: {exc}\n")
        return EXIT_STALL
    except OSError as exc:
        sys.stderr.write(f"i/o error: {exc}\n")
        return EXIT_CONFIG


def entry() -> None:
    sys.exit(main())
