import pytest
from hypothesis import given, strategies as st

import oracles
from givenness import (
    DistanceConfig,
    DistanceVerdict,
    Entity,
    UnknownEntity,
    WorldModel,
    dist_score,
    dist_verdict,
    partition_distractors,
)
from givenness.errors import InvalidConfig

CFG = DistanceConfig()
V = DistanceVerdict


def test_defaults():
    assert CFG.to_mapping() == {"wP": 0.5, "wE": 0.5, "dMax": 2.0, "eMax": 10,
                                "tauClose": 0.3, "tauFar": 0.6}


def test_score_examples():
    near = Entity("a", "mug", position=(0.3, 0.0, 0.0))
    assert oracles.distance_score((0.3, 0, 0), 1) == pytest.approx(0.125)
    assert dist_score(near, 4, 5, CFG) == pytest.approx(0.125, abs=1e-12)
    assert dist_score(Entity("b", "mug"), None, 5, CFG) == 1.0
    assert dist_score(Entity("c", "mug", position=(0, 0, 0)), 5, 5, CFG) == 0.0


def test_score_caps():
    far = Entity("a", "mug", position=(30.0, 40.0, 0.0))
    assert dist_score(far, 0, 100, CFG) == 1.0


def test_score_rejects_future_mention():
    with pytest.raises(ValueError):
        dist_score(Entity("a", "mug"), 3, 2, CFG)


@pytest.mark.parametrize("score,expected", [
    (0.125, V.CLOSE),
    (1.0, V.FAR),
    (0.45, V.INDETERMINATE),
    (0.0, V.CLOSE),
    (0.3, V.INDETERMINATE),
    (0.6, V.INDETERMINATE),
    (0.6000001, V.FAR),
    (0.2999999, V.CLOSE),
])
def test_verdict(score, expected):
    assert dist_verdict(score, CFG) is expected


@pytest.mark.parametrize("kwargs", [
    {"w_physical": 0.7, "w_episodic": 0.7},
    {"w_physical": -0.5, "w_episodic": 1.5},
    {"d_max": 0.0},
    {"e_max": 0},
    {"e_max": 2.5},
    {"tau_close": 0.7, "tau_far": 0.6},
    {"tau_far": 1.5},
])
def test_config_rejects(kwargs):
    with pytest.raises(InvalidConfig):
        DistanceConfig(**kwargs)


def world3():
    return WorldModel((
        Entity("a", "mug", position=(0.2, 0.0, 0.0)),   # 0.5*0.1 + 0.5*0.1 = 0.1
        Entity("b", "mug", position=(1.6, 0.0, 0.0)),   # 0.5*0.8 + 0.5*1.0 = 0.9
        Entity("c", "mug", position=(1.0, 0.0, 0.0)),   # 0.5*0.5 + 0.5*0.4 = 0.45
    ))


LOG = {"a": 9, "c": 6}


def test_partition_examples():
    world = world3()
    assert oracles.distance_score((0.2, 0, 0), 1) == pytest.approx(0.1)
    assert oracles.distance_score((1.6, 0, 0), None) == pytest.approx(0.9)
    assert oracles.distance_score((1.0, 0, 0), 4) == pytest.approx(0.45)
    assert partition_distractors({"a", "b"}, world, LOG, 10, CFG) == ({"a"}, {"b"})
    assert partition_distractors(set(), world, LOG, 10, CFG) == (set(), set())
    assert partition_distractors({"c"}, world, LOG, 10, CFG) == (set(), {"c"})


def test_partition_unknown():
    with pytest.raises(UnknownEntity):
        partition_distractors({"ghost"}, world3(), LOG, 10, CFG)


@given(st.sets(st.sampled_from("abc")), st.integers(9, 30))
def test_partition_is_a_partition(ids, turn):
    close, rest = partition_distractors(ids, world3(), LOG, turn, CFG)
    assert close | rest == ids
    assert not close & rest


coords = st.floats(0, 5, allow_nan=False)


@given(coords, coords, st.integers(0, 30), st.integers(0, 30))
def test_score_monotone(d1, d2, t1, t2):
    lo_d, hi_d = sorted((d1, d2))
    lo_t, hi_t = sorted((t1, t2))
    near, far = Entity("x", "m", position=(lo_d, 0, 0)), Entity("x", "m", position=(hi_d, 0, 0))
    assert dist_score(near, 0, lo_t, CFG) <= dist_score(far, 0, lo_t, CFG)
    assert dist_score(near, 0, lo_t, CFG) <= dist_score(near, 0, hi_t, CFG)
    score = dist_score(far, 0, hi_t, CFG)
    assert 0.0 <= score <= 1.0
    assert score == pytest.approx(oracles.distance_score((hi_d, 0, 0), hi_t), abs=1e-12)
