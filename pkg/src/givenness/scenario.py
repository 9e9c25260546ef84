"""Scenario and configuration files (JSON).

A scenario file looks like::

    {
      "world": [
        {"id": "m1", "type": "mug", "attributes": {"color": "red"},
         "position": [0.3, 0.0, 0.0], "familiar": false}
      ],
      "dialogue": [
        {"speaker": "alice", "mentions": [{"id": "m1", "role": "topic"}]}
      ],
      "queries": [{"turn": 1, "id": "m1"}]
    }

A query at turn ``t`` is answered after the first ``t`` utterances.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping, Optional, Tuple, Union

from .errors import (
    GivennessError,
    InvalidConfig,
    NonConsecutiveTurns,
    ParseError,
    UnknownEntityInEvent,
    ValidationError,
)
from .geometry import DistanceConfig
from .model import (
    Entity,
    LinguisticStatus,
    TransitionModel,
    UtteranceEvent,
    WorldModel,
    validate_world,
)
from .reg import PreferenceOrder

PathLike = Union[str, Path]


@dataclass(frozen=True)
class Query:
    turn: int
    entity_id: str


@dataclass(frozen=True)
class Scenario:
    world: WorldModel
    events: Tuple[UtteranceEvent, ...] = ()
    queries: Tuple[Query, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))
        object.__setattr__(self, "queries", tuple(self.queries))


@dataclass(frozen=True)
class Config:
    transitions: TransitionModel = field(default_factory=TransitionModel.default)
    distance: DistanceConfig = field(default_factory=DistanceConfig)
    preferences: PreferenceOrder = field(default_factory=PreferenceOrder)


def _read_json(path: PathLike) -> Any:
    text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.msg) from None


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise ParseError(None, message)


def _parse_entity(raw: Any, n: int) -> Entity:
    _expect(isinstance(raw, dict), f"world[{n}] must be an object")
    _expect(isinstance(raw.get("id"), str), f"world[{n}] needs a string 'id'")
    _expect(isinstance(raw.get("type"), str), f"world[{n}] needs a string 'type'")
    attributes = raw.get("attributes", {})
    _expect(isinstance(attributes, dict)
            and all(isinstance(v, str) for v in attributes.values()),
            f"world[{n}].attributes must map names to strings")
    position = raw.get("position")
    if position is not None:
        _expect(isinstance(position, list) and len(position) == 3
                and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in position),
                f"world[{n}].position must be [x, y, z]")
    familiar = raw.get("familiar", False)
    _expect(isinstance(familiar, bool), f"world[{n}].familiar must be a boolean")
    return Entity(raw["id"], raw["type"], attributes,
                  tuple(position) if position is not None else None, familiar)


def _parse_event(raw: Any, turn: int, world: WorldModel) -> UtteranceEvent:
    _expect(isinstance(raw, dict), f"dialogue[{turn}] must be an object")
    if "turn" in raw and raw["turn"] != turn:
        raise NonConsecutiveTurns(turn, raw["turn"])
    speaker = raw.get("speaker", "")
    _expect(isinstance(speaker, str), f"dialogue[{turn}].speaker must be a string")
    mentions = raw.get("mentions", [])
    _expect(isinstance(mentions, list), f"dialogue[{turn}].mentions must be a list")
    annotations = {}
    for m in mentions:
        _expect(isinstance(m, dict) and isinstance(m.get("id"), str),
                f"dialogue[{turn}] has a malformed mention")
        try:
            status = LinguisticStatus.from_role(m.get("role", "mention"))
        except ValueError as exc:
            raise ParseError(None, f"dialogue[{turn}]: {exc}") from None
        if m["id"] not in world:
            raise UnknownEntityInEvent(m["id"], turn)
        # Topic outranks a plain mention if an entity is listed twice.
        if annotations.get(m["id"]) is not LinguisticStatus.TOPIC:
            annotations[m["id"]] = status
    return UtteranceEvent(turn, speaker, annotations)


def parse_scenario(data: Any) -> Scenario:
    _expect(isinstance(data, dict), "scenario must be a JSON object")
    raw_world = data.get("world", [])
    _expect(isinstance(raw_world, list), "'world' must be a list")
    world = validate_world(WorldModel(tuple(_parse_entity(e, n) for n, e in enumerate(raw_world))))

    raw_dialogue = data.get("dialogue", [])
    _expect(isinstance(raw_dialogue, list), "'dialogue' must be a list")
    events = tuple(_parse_event(e, t, world) for t, e in enumerate(raw_dialogue))

    queries = []
    for raw in data.get("queries", []):
        _expect(isinstance(raw, dict) and isinstance(raw.get("id"), str)
                and isinstance(raw.get("turn"), int), "queries need integer 'turn' and string 'id'")
        if raw["id"] not in world:
            raise UnknownEntityInEvent(raw["id"], raw["turn"])
        _expect(0 <= raw["turn"] <= len(events),
                f"query turn {raw['turn']} outside 0..{len(events)}")
        queries.append(Query(raw["turn"], raw["id"]))
    return Scenario(world, events, tuple(queries))


def load_scenario(path: PathLike) -> Scenario:
    return parse_scenario(_read_json(path))


def scenario_to_dict(scenario: Scenario) -> dict:
    world = []
    for e in scenario.world:
        record: dict = {"id": e.id, "type": e.type_name, "attributes": dict(e.attributes)}
        if e.position is not None:
            record["position"] = list(e.position)
        if e.initially_familiar:
            record["familiar"] = True
        world.append(record)
    dialogue = [
        {"speaker": ev.speaker,
         "mentions": [{"id": i, "role": s.role} for i, s in sorted(ev.annotations.items())]}
        for ev in scenario.events
    ]
    out = {"world": world, "dialogue": dialogue}
    if scenario.queries:
        out["queries"] = [{"turn": q.turn, "id": q.entity_id} for q in scenario.queries]
    return out


def dump_scenario(scenario: Scenario) -> str:
    return json.dumps(scenario_to_dict(scenario), indent=2) + "\n"


def parse_config(data: Optional[Mapping[str, Any]]) -> Config:
    if data is None:
        return Config()
    _expect(isinstance(data, dict), "config must be a JSON object")
    unknown = set(data) - {"transitions", "distance", "preference_order"}
    if unknown:
        raise InvalidConfig(f"unknown config keys {sorted(unknown)}")
    try:
        transitions = (TransitionModel.from_mapping(data["transitions"])
                       if "transitions" in data else TransitionModel.default())
        distance = (DistanceConfig.from_mapping(data["distance"])
                    if "distance" in data else DistanceConfig())
        prefs = (PreferenceOrder(tuple(data["preference_order"]))
                 if "preference_order" in data else PreferenceOrder())
    except ValidationError:
        raise
    except (TypeError, ValueError, GivennessError) as exc:
        raise InvalidConfig(str(exc)) from None
    return Config(transitions, distance, prefs)


def load_config(path: Optional[PathLike]) -> Config:
    if path is None:
        return Config()
    return parse_config(_read_json(path))


def config_to_dict(config: Config) -> dict:
    return {
        "transitions": config.transitions.to_mapping(),
        "distance": config.distance.to_mapping(),
        "preference_order": list(config.preferences.attributes),
    }

