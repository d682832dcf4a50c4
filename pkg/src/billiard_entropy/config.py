"""Flat key=value run configuration with section headers.

The format is INI as understood by configparser: a [table] section picking
a built-in shape or four custom curve specs, plus optional [run] and
[output] sections.  Numbers are decimal, angles are radians.  Parsing and
serialization round-trip exactly.
"""

from __future__ import annotations

import configparser
import io
import math
from dataclasses import dataclass, field

from .errors import DomainError
from .geometry import (
    CircularArc,
    LineSegment,
    Table,
    make_mushroom,
    make_stadium,
)

_FMT = ".17g"  # lossless float round-trip; reports use 12 digits instead


@dataclass
class RunConfig:
    """Everything a CLI run needs: the table, grids, and output choices."""

    kind: str                      # stadium | mushroom | custom
    stadium_length: float | None = None
    stadium_width: float | None = None
    mushroom_stalk: float | None = None
    mushroom_radius: float | None = None
    curves: dict = field(default_factory=dict)   # custom: id -> spec string
    eps: float | None = None       # override; None = table default
    n_override: int | None = None
    position_divisions: int = 512
    angle_divisions: int = 256
    out_dir: str = "."
    seed: int = 0

    def __post_init__(self):
        if self.kind not in ("stadium", "mushroom", "custom"):
            raise DomainError(f"unknown table kind {self.kind!r}")
        if self.eps is not None and not 0.0 < self.eps < math.pi / 6:
            raise DomainError("eps must satisfy 0 < eps < pi/6")
        for v in (self.stadium_length, self.stadium_width,
                  self.mushroom_stalk, self.mushroom_radius):
            if v is not None and v <= 0.0:
                raise DomainError("physical quantities must be positive")
        if self.position_divisions < 1 or self.angle_divisions < 1:
            raise DomainError("grid divisions must be positive")


def _parse_curve(spec: str, flip_interior: bool = False):
    """Curve spec: 'line x0 y0 x1 y1 side' or 'arc cx cy r th0 th1 [out]'."""
    parts = spec.split()
    if not parts:
        raise DomainError("empty curve spec")
    kind, args = parts[0], parts[1:]
    if kind == "line":
        if len(args) != 5:
            raise DomainError("line spec needs: x0 y0 x1 y1 side")
        x0, y0, x1, y1 = (float(a) for a in args[:4])
        side = int(args[4])
        if side not in (-1, 1):
            raise DomainError("line side must be 1 or -1")
        return LineSegment((x0, y0), (x1, y1), interior_side=side)
    if kind == "arc":
        if len(args) not in (5, 6):
            raise DomainError("arc spec needs: cx cy r th0 th1 [out]")
        cx, cy, r, th0, th1 = (float(a) for a in args[:5])
        inward = not (len(args) == 6 and args[5] == "out")
        return CircularArc((cx, cy), r, th0, th1, inward_toward_center=inward)
    raise DomainError(f"unknown curve kind {kind!r}")


def build_table(cfg: RunConfig) -> Table:
    """Construct the billiard table a config describes."""
    if cfg.kind == "stadium":
        if cfg.stadium_length is None or cfg.stadium_width is None:
            raise DomainError("stadium config needs length and width")
        table = make_stadium(cfg.stadium_length, cfg.stadium_width)
    elif cfg.kind == "mushroom":
        if cfg.mushroom_stalk is None or cfg.mushroom_radius is None:
            raise DomainError("mushroom config needs stalk and radius")
        table = make_mushroom(cfg.mushroom_stalk, cfg.mushroom_radius)
    else:
        required = ("bottom", "top", "left", "right")
        missing = [k for k in required if k not in cfg.curves]
        if missing:
            raise DomainError(f"custom table missing curves: {missing}")
        table_class = cfg.curves.get("class", "full")
        table = Table(
            wall_bottom=_parse_curve(cfg.curves["bottom"]),
            wall_top=_parse_curve(cfg.curves["top"]),
            cap_left=_parse_curve(cfg.curves["left"]),
            cap_right=_parse_curve(cfg.curves["right"]),
            table_class=table_class,
            eps=cfg.eps if cfg.eps is not None else math.pi / 6 * 0.999,
        )
        return table
    if cfg.eps is not None:
        table = Table(
            wall_bottom=table.wall_bottom, wall_top=table.wall_top,
            cap_left=table.cap_left, cap_right=table.cap_right,
            table_class=table.table_class, eps=cfg.eps)
    return table


def parse_config(text: str) -> RunConfig:
    parser = configparser.ConfigParser()
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise DomainError(f"malformed config: {exc}") from exc
    if "table" not in parser:
        raise DomainError("config needs a [table] section")
    t = parser["table"]
    kind = t.get("kind", "").strip()
    try:
        cfg = RunConfig(
            kind=kind,
            stadium_length=t.getfloat("length", fallback=None),
            stadium_width=t.getfloat("width", fallback=None),
            mushroom_stalk=t.getfloat("stalk", fallback=None),
            mushroom_radius=t.getfloat("radius", fallback=None),
            curves={k: v for k, v in t.items()
                    if k in ("bottom", "top", "left", "right", "class")},
            eps=t.getfloat("eps", fallback=None),
            n_override=t.getint("n", fallback=None),
        )
    except ValueError as exc:
        raise DomainError(f"bad number in config: {exc}") from exc
    if "run" in parser:
        r = parser["run"]
        try:
            cfg.position_divisions = r.getint(
                "position_divisions", cfg.position_divisions)
            cfg.angle_divisions = r.getint(
                "angle_divisions", cfg.angle_divisions)
            cfg.seed = r.getint("seed", cfg.seed)
        except ValueError as exc:
            raise DomainError(f"bad number in config: {exc}") from exc
    if "output" in parser:
        cfg.out_dir = parser["output"].get("dir", cfg.out_dir)
    return cfg


def serialize_config(cfg: RunConfig) -> str:
    parser = configparser.ConfigParser()
    table = {"kind": cfg.kind}
    for key, val in (("length", cfg.stadium_length),
                     ("width", cfg.stadium_width),
                     ("stalk", cfg.mushroom_stalk),
                     ("radius", cfg.mushroom_radius),
                     ("eps", cfg.eps)):
        if val is not None:
            table[key] = format(val, _FMT)
    if cfg.n_override is not None:
        table["n"] = str(cfg.n_override)
    for key in ("bottom", "top", "left", "right", "class"):
        if key in cfg.curves:
            table[key] = cfg.curves[key]
    parser["table"] = table
    parser["run"] = {
        "position_divisions": str(cfg.position_divisions),
        "angle_divisions": str(cfg.angle_divisions),
        "seed": str(cfg.seed),
    }
    parser["output"] = {"dir": cfg.out_dir}
    buf = io.StringIO()
    parser.write(buf)
    return buf.getvalue()


def load_config(path: str) -> RunConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config(fh.read())
