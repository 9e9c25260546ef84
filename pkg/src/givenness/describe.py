"""Referring-form selection on top of the status engine, proximity and REG."""

from __future__ import annotations

from typing import FrozenSet, Iterable, Optional

from .engine import CognitiveStatusEngine
from .errors import EmptyDistractorSet
from .geometry import DistanceConfig, DistanceVerdict, partition_distractors, verdict_for
from .model import CognitiveStatus, FormKind, ReferringForm
from .reg import PreferenceOrder, reg

S = CognitiveStatus


def _np_form(kind: FormKind, entity_id: str, distractors: Iterable[str],
             engine: CognitiveStatusEngine, prefs: PreferenceOrder,
             status: CognitiveStatus) -> ReferringForm:
    distractors = frozenset(distractors)
    result = reg(engine.world.get(entity_id), distractors, engine.world, prefs)
    return ReferringForm(kind, result.properties, result.ambiguous, status, distractors)


def _verdict(entity_id: str, engine: CognitiveStatusEngine, cfg: DistanceConfig) -> DistanceVerdict:
    return verdict_for(engine.world.get(entity_id), engine.mention_log, engine.current_turn, cfg)


def describe(entity_id: str, engine: CognitiveStatusEngine,
             cfg: Optional[DistanceConfig] = None,
             prefs: Optional[PreferenceOrder] = None) -> ReferringForm:
    """Choose how to refer to *entity_id* given the current engine state."""
    cfg = cfg or DistanceConfig()
    prefs = prefs or PreferenceOrder()
    status = engine.status(entity_id)
    distractors = engine.distractors(entity_id, status)

    if status is S.UNIQUELY_IDENTIFIABLE:
        return _np_form(FormKind.THE_NP, entity_id, distractors, engine, prefs, status)
    if status is S.FAMILIAR:
        return _np_form(FormKind.THAT_NP, entity_id, distractors, engine, prefs, status)
    if distractors:
        return dreg(entity_id, distractors, engine, cfg, prefs)
    if status is S.IN_FOCUS:
        return ReferringForm(FormKind.IT, status=status)
    # Activated with nothing to confuse it with: "this" only when clearly close.
    if _verdict(entity_id, engine, cfg) is DistanceVerdict.CLOSE:
        return ReferringForm(FormKind.BARE_THIS, status=status)
    return ReferringForm(FormKind.BARE_THAT, status=status)


def dreg(entity_id: str, distractors: FrozenSet[str], engine: CognitiveStatusEngine,
         cfg: Optional[DistanceConfig] = None,
         prefs: Optional[PreferenceOrder] = None) -> ReferringForm:
    """Demonstrative or definite NP built against a proximity-filtered distractor set."""
    cfg = cfg or DistanceConfig()
    prefs = prefs or PreferenceOrder()
    if not distractors:
        raise EmptyDistractorSet(entity_id)
    status = engine.status(entity_id)
    close, rest = partition_distractors(distractors, engine.world, engine.mention_log,
                                        engine.current_turn, cfg)
    verdict = _verdict(entity_id, engine, cfg)
    if verdict is DistanceVerdict.CLOSE:
        return _np_form(FormKind.THIS_NP, entity_id, close, engine, prefs, status)
    if verdict is DistanceVerdict.FAR:
        return _np_form(FormKind.THAT_NP, entity_id, rest, engine, prefs, status)
    return _np_form(FormKind.THE_NP, entity_id, distractors, engine, prefs, status)
