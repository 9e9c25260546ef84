"""Batch replay of a scenario and line-oriented trace output."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

from .describe import describe
from .engine import CognitiveStatusEngine
from .geometry import verdict_for
from .scenario import Config, Scenario


@dataclass(frozen=True)
class StateRecord:
    """Filter state of one tracked entity right after utterance ``turn``."""

    turn: int
    entity_id: str
    distribution: Tuple[float, float, float]
    status: str
    buffer: str

    def to_dict(self) -> dict:
        return {
            "record": "state",
            "turn": self.turn,
            "entity": self.entity_id,
            "p": [_fmt(p) for p in self.distribution],
            "status": self.status,
            "buffer": self.buffer,
        }

    def to_tsv(self) -> str:
        return "\t".join(["state", str(self.turn), self.entity_id,
                          *(_fmt(p) for p in self.distribution), self.status, self.buffer])


@dataclass(frozen=True)
class DescribeRecord:
    """Answer to a query posed after ``turn`` utterances."""

    turn: int
    entity_id: str
    status: str
    verdict: str
    form: str
    properties: Tuple[Tuple[str, str], ...]
    ambiguous: bool
    distractors: Tuple[str, ...]
    text: str

    def to_dict(self) -> dict:
        return {
            "record": "describe",
            "turn": self.turn,
            "entity": self.entity_id,
            "status": self.status,
            "verdict": self.verdict,
            "form": self.form,
            "properties": [list(p) for p in self.properties],
            "ambiguous": self.ambiguous,
            "distractors": list(self.distractors),
            "text": self.text,
        }

    def to_tsv(self) -> str:
        props = ",".join(f"{k}={v}" for k, v in self.properties) or "-"
        return "\t".join(["describe", str(self.turn), self.entity_id, self.status,
                          self.verdict, self.form, props, str(self.ambiguous).lower(),
                          ",".join(self.distractors) or "-", self.text])


Record = Union[StateRecord, DescribeRecord]


def _fmt(p: float) -> str:
    # Renders -0.0 and tiny negatives from rounding as 0.000000.
    text = f"{p:.6f}"
    return "0.000000" if text == "-0.000000" else text


@dataclass
class Trace:
    records: List[Record] = field(default_factory=list)

    def states(self) -> List[StateRecord]:
        return [r for r in self.records if isinstance(r, StateRecord)]

    def descriptions(self) -> List[DescribeRecord]:
        return [r for r in self.records if isinstance(r, DescribeRecord)]

    def to_tsv(self) -> str:
        return "".join(r.to_tsv() + "\n" for r in self.records)

    def to_jsonl(self) -> str:
        return "".join(json.dumps(r.to_dict(), sort_keys=True) + "\n" for r in self.records)

    def render(self, fmt: str = "tsv") -> str:
        if fmt == "tsv":
            return self.to_tsv()
        if fmt == "json-lines":
            return self.to_jsonl()
        raise ValueError(f"unknown trace format {fmt!r}")


def state_records(engine: CognitiveStatusEngine, turn: int) -> List[StateRecord]:
    out = []
    for entity_id in sorted(engine.tracked()):
        dist = engine.distribution(entity_id)
        out.append(StateRecord(turn, entity_id, dist.as_tuple(), dist.argmax().label,
                               engine.buffer_of(entity_id).label))
    return out


def describe_record(engine: CognitiveStatusEngine, entity_id: str, config: Config) -> DescribeRecord:
    form = describe(entity_id, engine, config.distance, config.preferences)
    verdict = verdict_for(engine.world.get(entity_id), engine.mention_log,
                          engine.current_turn, config.distance)
    return DescribeRecord(
        turn=engine.turn,
        entity_id=entity_id,
        status=form.status.label,
        verdict=verdict.value,
        form=form.kind.value,
        properties=form.properties,
        ambiguous=form.ambiguous,
        distractors=tuple(sorted(form.distractors)),
        text=form.render(),
    )


def run_batch(scenario: Scenario, config: Optional[Config] = None) -> Trace:
    """Replay every utterance through a fresh engine and answer all queries."""
    config = config or Config()
    engine = CognitiveStatusEngine(scenario.world, config.transitions)
    pending = sorted(enumerate(scenario.queries), key=lambda iq: (iq[1].turn, iq[0]))
    trace = Trace()

    def answer(turn: int) -> None:
        while pending and pending[0][1].turn == turn:
            _, query = pending.pop(0)
            trace.records.append(describe_record(engine, query.entity_id, config))

    answer(0)
    for event in scenario.events:
        engine.observe(event)
        trace.records.extend(state_records(engine, event.index))
        answer(engine.turn)
    return trace
