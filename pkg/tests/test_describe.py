import pytest

import decision_table
from givenness import (
    CognitiveStatus,
    CognitiveStatusEngine,
    DistanceConfig,
    EmptyDistractorSet,
    Entity,
    FormKind,
    StatusDistribution,
    UnknownEntity,
    WorldModel,
    describe,
    dreg,
)
from givenness.geometry import verdict_for

S = CognitiveStatus
IF, ACT, FAM = (StatusDistribution(1, 0, 0), StatusDistribution(0, 1, 0), StatusDistribution(0, 0, 1))


@pytest.mark.parametrize("status,has_d,verdict", decision_table.cases(),
                         ids=lambda v: getattr(v, "name", str(v)))
def test_decision_table(status, has_d, verdict):
    engine = decision_table.stage(status, has_d, verdict)
    assert engine.status("t") is status
    assert bool(engine.distractors("t")) is has_d
    assert verdict_for(engine.world.get("t"), engine.mention_log, engine.current_turn,
                       DistanceConfig()) is verdict
    form = describe("t", engine)
    assert form.kind.value == decision_table.expected_kind(status, has_d, verdict)
    assert form.status is status
    if form.kind.is_pronoun:
        assert not has_d and not form.distractors


def test_familiar_uses_unpartitioned_distractors():
    world = WorldModel((Entity("t", "mug", {"color": "red"}), Entity("b", "mug", {"color": "blue"})))
    engine = CognitiveStatusEngine(world)
    engine.set_distribution("t", FAM)
    engine.set_distribution("b", IF)
    form = describe("t", engine)
    assert form.kind is FormKind.THAT_NP
    assert form.properties == (("color", "red"), ("type", "mug"))
    assert form.render() == "that red mug"
    assert form.distractors == {"b"}


def test_in_focus_alone_is_it():
    world = WorldModel((Entity("t", "mug"), Entity("x", "mug")))
    engine = CognitiveStatusEngine(world)
    engine.set_distribution("t", IF)
    engine.set_distribution("x", ACT)
    assert describe("t", engine).render() == "it"


def test_uid_full_description():
    world = WorldModel((
        Entity("t", "mug", {"color": "red", "size": "large"}),
        Entity("a", "mug", {"color": "red", "size": "small"}),
        Entity("b", "mug", {"color": "blue", "size": "large"}),
        Entity("c", "book", {"color": "red", "size": "large"}),
    ))
    engine = CognitiveStatusEngine(world)
    form = describe("t", engine)
    assert form.kind is FormKind.THE_NP
    assert form.distractors == {"a", "b", "c"}
    assert form.render() == "the red large mug"
    assert not form.ambiguous


def dreg_world():
    return WorldModel((
        Entity("t", "mug", {"color": "red"}, (0.0, 0.0, 0.0)),
        Entity("a", "mug", {"color": "blue"}, (0.0, 0.0, 0.0)),
        Entity("b", "mug", {"color": "red"}),
    ))


def dreg_engine(target_mentioned, target_position=True):
    engine = CognitiveStatusEngine(dreg_world())
    for i in "tab":
        engine.set_distribution(i, IF)
    engine.record_mention("a", 0)
    if target_mentioned:
        engine.record_mention("t", 0)
    return engine


def test_dreg_close_rules_out_only_close():
    # t and a score 0.0 (Close); b scores 1.0 (Far).
    form = dreg("t", frozenset("ab"), dreg_engine(True))
    assert form.kind is FormKind.THIS_NP
    assert form.distractors == {"a"}
    assert form.render() == "this red mug"
    assert not form.ambiguous


def test_dreg_indeterminate_uses_all():
    # t at the origin but never mentioned scores 0.5.
    form = dreg("t", frozenset("ab"), dreg_engine(False))
    assert form.kind is FormKind.THE_NP
    assert form.distractors == {"a", "b"}
    assert form.ambiguous


def test_dreg_far_rules_out_non_close():
    world = WorldModel((
        Entity("t", "mug", {"color": "red"}),
        Entity("a", "mug", {"color": "blue"}, (0.0, 0.0, 0.0)),
        Entity("b", "mug", {"color": "green"}),
        Entity("c", "mug", {"color": "red"}, (0.0, 0.0, 0.0)),
    ))
    engine = CognitiveStatusEngine(world)
    for i in "tabc":
        engine.set_distribution(i, IF)
    engine.record_mention("a", 0)
    form = dreg("t", frozenset("abc"), engine)
    # a is Close and drops out; c is Indeterminate (0.5) and stays.
    assert form.kind is FormKind.THAT_NP
    assert form.distractors == {"b", "c"}
    assert form.ambiguous


def test_dreg_requires_distractors():
    with pytest.raises(EmptyDistractorSet):
        dreg("t", frozenset(), dreg_engine(True))


def test_describe_unknown():
    with pytest.raises(UnknownEntity):
        describe("ghost", dreg_engine(True))


def test_ambiguity_propagates():
    world = WorldModel((Entity("t", "mug", {"color": "red"}), Entity("u", "mug", {"color": "red"})))
    engine = CognitiveStatusEngine(world)
    form = describe("t", engine)
    assert form.kind is FormKind.THE_NP and form.ambiguous
