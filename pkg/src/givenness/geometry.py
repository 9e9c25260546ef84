"""Proximity scoring: physical distance and mention recency folded into one verdict."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Tuple

from .errors import InvalidConfig
from .model import Entity, WorldModel


class DistanceVerdict(enum.Enum):
    CLOSE = "Close"
    FAR = "Far"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True)
class DistanceConfig:
    w_physical: float = 0.5
    w_episodic: float = 0.5
    d_max: float = 2.0  # meters
    e_max: int = 10  # turns
    tau_close: float = 0.3
    tau_far: float = 0.6

    def __post_init__(self):
        if self.w_physical < 0 or self.w_episodic < 0:
            raise InvalidConfig("distance weights must be non-negative")
        if abs(self.w_physical + self.w_episodic - 1.0) > 1e-9:
            raise InvalidConfig("distance weights must sum to 1")
        if not self.d_max > 0:
            raise InvalidConfig("dMax must be positive")
        if isinstance(self.e_max, bool) or int(self.e_max) != self.e_max or self.e_max <= 0:
            raise InvalidConfig("eMax must be a positive integer")
        if not 0.0 <= self.tau_close <= self.tau_far <= 1.0:
            raise InvalidConfig("thresholds must satisfy 0 <= tauClose <= tauFar <= 1")

    _KEYS = (("wP", "w_physical"), ("wE", "w_episodic"), ("dMax", "d_max"),
             ("eMax", "e_max"), ("tauClose", "tau_close"), ("tauFar", "tau_far"))

    @classmethod
    def from_mapping(cls, data: Mapping[str, float]) -> "DistanceConfig":
        unknown = set(data) - {k for k, _ in cls._KEYS}
        if unknown:
            raise InvalidConfig(f"unknown distance keys {sorted(unknown)}")
        return cls(**{attr: data[key] for key, attr in cls._KEYS if key in data})

    def to_mapping(self) -> dict:
        return {key: getattr(self, attr) for key, attr in self._KEYS}


def dist_score(entity: Entity, last_mention: Optional[int], current_turn: int,
               cfg: DistanceConfig) -> float:
    """Weighted, capped distance in [0, 1]; 0 is right here and just mentioned."""
    if entity.position is None:
        physical = 1.0
    else:
        physical = min(math.hypot(*entity.position) / cfg.d_max, 1.0)
    if last_mention is None:
        episodic = 1.0
    else:
        if current_turn < last_mention:
            raise ValueError(f"turn {current_turn} precedes last mention at {last_mention}")
        episodic = min((current_turn - last_mention) / cfg.e_max, 1.0)
    return cfg.w_physical * physical + cfg.w_episodic * episodic


def dist_verdict(score: float, cfg: DistanceConfig) -> DistanceVerdict:
    if score < cfg.tau_close:
        return DistanceVerdict.CLOSE
    if score > cfg.tau_far:
        return DistanceVerdict.FAR
    return DistanceVerdict.INDETERMINATE


def verdict_for(entity: Entity, mention_log: Mapping[str, int], current_turn: int,
                cfg: DistanceConfig) -> DistanceVerdict:
    return dist_verdict(dist_score(entity, mention_log.get(entity.id), current_turn, cfg), cfg)


def partition_distractors(distractors: Iterable[str], world: WorldModel,
                          mention_log: Mapping[str, int], current_turn: int,
                          cfg: DistanceConfig) -> Tuple[frozenset, frozenset]:
    """Split distractors into (close, rest); indeterminate ones land in rest."""
    close, rest = set(), set()
    for entity_id in distractors:
        entity = world.get(entity_id)
        if verdict_for(entity, mention_log, current_turn, cfg) is DistanceVerdict.CLOSE:
            close.add(entity_id)
        else:
            rest.add(entity_id)
    return frozenset(close), frozenset(rest)
