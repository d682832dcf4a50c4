import math

import pytest

import billiard_entropy as be
from billiard_entropy.config import (
    RunConfig,
    build_table,
    parse_config,
    serialize_config,
)
from billiard_entropy.errors import DomainError

STADIUM = """
[table]
kind = stadium
length = 4.0
width = 1.0

[run]
position_divisions = 32
angle_divisions = 16
seed = 3
"""

CUSTOM = """
[table]
kind = custom
class = full
bottom = line 0 0 3 0 1
top = line 0.3 1 3 1 -1
left = line 0 0 0.3 1 1
right = arc 3 0.5 0.5 -1.5707963267948966 1.5707963267948966
eps = 0.3
"""


def test_parse_stadium():
    cfg = parse_config(STADIUM)
    assert cfg.kind == "stadium"
    assert cfg.stadium_length == 4.0
    assert cfg.position_divisions == 32
    assert cfg.seed == 3
    table = build_table(cfg)
    assert table.table_class == "full"
    assert table.cap_gap == pytest.approx(4.0 + math.cos(table.eps), abs=1e-6)


def test_roundtrip_identity():
    for text in (STADIUM, CUSTOM):
        cfg = parse_config(text)
        again = parse_config(serialize_config(cfg))
        assert again == cfg
        # and serialization is a fixed point after one pass
        assert serialize_config(again) == serialize_config(cfg)


def test_custom_table_build():
    cfg = parse_config(CUSTOM)
    table = build_table(cfg)
    assert table.eps == pytest.approx(0.3)
    assert table.tracked["left"] is None   # slanted flat cap: no markers
    assert table.tracked["right"] is not None


def test_parse_rejects_bad_configs():
    with pytest.raises(DomainError):
        parse_config("[table]\nkind = hexagon\n")
    with pytest.raises(DomainError):
        parse_config("[run]\nseed = 1\n")  # no [table]
    with pytest.raises(DomainError):
        parse_config("[table]\nkind = stadium\nlength = fast\nwidth = 1\n")
    with pytest.raises(DomainError):
        RunConfig(kind="stadium", stadium_length=-1.0, stadium_width=1.0)
    with pytest.raises(DomainError):
        RunConfig(kind="stadium", stadium_length=1.0, stadium_width=1.0,
                  eps=1.0)


def test_mushroom_config():
    cfg = RunConfig(kind="mushroom", mushroom_stalk=1.5, mushroom_radius=0.5)
    table = build_table(cfg)
    assert table.table_class == "semistadium"
    with pytest.raises(DomainError):
        build_table(RunConfig(kind="mushroom", mushroom_stalk=1.5))


def test_eps_override_applies():
    cfg = RunConfig(kind="stadium", stadium_length=3.0, stadium_width=1.0,
                    eps=0.3)
    assert build_table(cfg).eps == pytest.approx(0.3)
