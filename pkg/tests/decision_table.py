"""Staged engine states covering every status x distractor x verdict combination."""

import itertools

from givenness import (
    CognitiveStatus,
    CognitiveStatusEngine,
    DistanceVerdict,
    Entity,
    StatusDistribution,
    WorldModel,
)

S = CognitiveStatus
V = DistanceVerdict

STAGED = {
    S.IN_FOCUS: StatusDistribution(1.0, 0.0, 0.0),
    S.ACTIVATED: StatusDistribution(0.0, 1.0, 0.0),
    S.FAMILIAR: StatusDistribution(0.0, 0.0, 1.0),
}

# With default weights: (0,0,0) mentioned now scores 0.0, (0,0,0) never
# mentioned scores 0.5, no position and never mentioned scores 1.0.
PLACEMENT = {
    V.CLOSE: ((0.0, 0.0, 0.0), True),
    V.INDETERMINATE: ((0.0, 0.0, 0.0), False),
    V.FAR: (None, False),
}


def expected_kind(status, has_distractors, verdict):
    """Form kind dictated by the selection rules, written out case by case."""
    if status is S.UNIQUELY_IDENTIFIABLE:
        return "TheNP"
    if status is S.FAMILIAR:
        return "ThatNP"
    if not has_distractors:
        if status is S.IN_FOCUS:
            return "It"
        return "BareThis" if verdict is V.CLOSE else "BareThat"
    return {V.CLOSE: "ThisNP", V.FAR: "ThatNP", V.INDETERMINATE: "TheNP"}[verdict]


def stage(status, has_distractors, verdict):
    position, mentioned = PLACEMENT[verdict]
    entities = [Entity("t", "mug", {"color": "red"}, position)]
    if has_distractors:
        entities.append(Entity("o", "mug", {"color": "blue"}, (0.1, 0.0, 0.0)))
    engine = CognitiveStatusEngine(WorldModel(tuple(entities)))
    if status in STAGED:
        engine.set_distribution("t", STAGED[status])
    if has_distractors:
        engine.set_distribution("o", STAGED[S.IN_FOCUS])
    if mentioned:
        engine.record_mention("t", engine.current_turn)
    return engine


def cases():
    statuses = [S.IN_FOCUS, S.ACTIVATED, S.FAMILIAR, S.UNIQUELY_IDENTIFIABLE]
    verdicts = [V.CLOSE, V.FAR, V.INDETERMINATE]
    return list(itertools.product(statuses, (False, True), verdicts))
