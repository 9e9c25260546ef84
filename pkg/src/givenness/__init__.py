"""Givenness Hierarchy cognitive status tracking and referring form generation."""

from .describe import describe, dreg
from .engine import CognitiveStatusEngine, CognitiveStatusFilter, update_filter
from .errors import (
    DuplicateEntityId,
    EmptyDistractorSet,
    EmptyTypeName,
    GivennessError,
    NonConsecutiveTurns,
    ParseError,
    TargetInDistractors,
    TurnMismatch,
    UnknownEntity,
    UnknownEntityInEvent,
    ValidationError,
)
from .geometry import (
    DistanceConfig,
    DistanceVerdict,
    dist_score,
    dist_verdict,
    partition_distractors,
)
from .model import (
    CognitiveStatus,
    Entity,
    FormKind,
    LinguisticStatus,
    ReferringForm,
    StatusDistribution,
    TransitionModel,
    UtteranceEvent,
    WorldModel,
    validate_world,
)
from .reg import PreferenceOrder, RegResult, reg
from .scenario import Config, Query, Scenario, dump_scenario, load_config, load_scenario, parse_scenario
from .trace import Trace, run_batch

__version__ = "0.1.0"

__all__ = [
    "CognitiveStatus",
    "CognitiveStatusEngine",
    "CognitiveStatusFilter",
    "Config",
    "DistanceConfig",
    "DistanceVerdict",
    "DuplicateEntityId",
    "EmptyDistractorSet",
    "EmptyTypeName",
    "Entity",
    "FormKind",
    "GivennessError",
    "LinguisticStatus",
    "NonConsecutiveTurns",
    "ParseError",
    "PreferenceOrder",
    "Query",
    "ReferringForm",
    "RegResult",
    "Scenario",
    "StatusDistribution",
    "TargetInDistractors",
    "Trace",
    "TransitionModel",
    "TurnMismatch",
    "UnknownEntity",
    "UnknownEntityInEvent",
    "UtteranceEvent",
    "ValidationError",
    "WorldModel",
    "describe",
    "dist_score",
    "dist_verdict",
    "dreg",
    "dump_scenario",
    "load_config",
    "load_scenario",
    "parse_scenario",
    "partition_distractors",
    "reg",
    "run_batch",
    "update_filter",
    "validate_world",
]
