"""Domain types shared by the status engine, geometry, REG and I/O layers.

Everything here is an immutable value. Construction validates; nothing else
happens in this module.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence, Tuple

from .errors import (
    DuplicateEntityId,
    EmptyTypeName,
    InvalidDistribution,
    InvalidTransitionModel,
    UnknownEntity,
)

TOLERANCE = 1e-9

#: Attribute name under which an entity's head noun is exposed to REG.
TYPE_ATTRIBUTE = "type"


@functools.total_ordering
class CognitiveStatus(enum.Enum):
    """Givenness Hierarchy tiers the engine can produce, ordered by rank."""

    UNIQUELY_IDENTIFIABLE = 0
    FAMILIAR = 1
    ACTIVATED = 2
    IN_FOCUS = 3

    def __lt__(self, other):
        if not isinstance(other, CognitiveStatus):
            return NotImplemented
        return self.value < other.value

    @property
    def label(self) -> str:
        return _STATUS_LABELS[self]

    @classmethod
    def tracked(cls) -> Tuple["CognitiveStatus", ...]:
        """Statuses a filter distribution ranges over, highest first."""
        return (cls.IN_FOCUS, cls.ACTIVATED, cls.FAMILIAR)


_STATUS_LABELS = {
    CognitiveStatus.IN_FOCUS: "InFocus",
    CognitiveStatus.ACTIVATED: "Activated",
    CognitiveStatus.FAMILIAR: "Familiar",
    CognitiveStatus.UNIQUELY_IDENTIFIABLE: "UniquelyIdentifiable",
}


class LinguisticStatus(enum.Enum):
    NOT_MENTIONED = "N"
    MENTIONED = "M"
    TOPIC = "T"

    @classmethod
    def from_role(cls, role: str) -> "LinguisticStatus":
        try:
            return _ROLES[role]
        except KeyError:
            raise ValueError(f"unknown mention role {role!r}") from None

    @property
    def role(self) -> Optional[str]:
        return {self.TOPIC: "topic", self.MENTIONED: "mention"}.get(self)


_ROLES = {"topic": LinguisticStatus.TOPIC, "mention": LinguisticStatus.MENTIONED}


@dataclass(frozen=True)
class StatusDistribution:
    """Probability vector over (InFocus, Activated, Familiar)."""

    p_in_focus: float
    p_activated: float
    p_familiar: float

    def __post_init__(self):
        values = self.as_tuple()
        if any(not math.isfinite(v) or v < 0.0 for v in values):
            raise InvalidDistribution(f"negative or non-finite component in {values}")
        if abs(math.fsum(values) - 1.0) > TOLERANCE:
            raise InvalidDistribution(f"components sum to {math.fsum(values)!r}, not 1")

    @classmethod
    def familiar(cls) -> "StatusDistribution":
        return cls(0.0, 0.0, 1.0)

    @classmethod
    def normalized(cls, values: Sequence[float]) -> "StatusDistribution":
        total = math.fsum(values)
        if total <= 0.0:
            raise InvalidDistribution(f"cannot normalize {tuple(values)}")
        i, a, f = (v / total for v in values)
        return cls(i, a, f)

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.p_in_focus, self.p_activated, self.p_familiar)

    def __getitem__(self, status: CognitiveStatus) -> float:
        return self.as_tuple()[CognitiveStatus.tracked().index(status)]

    def argmax(self) -> CognitiveStatus:
        """Most probable status; ties go to the lower tier."""
        best = CognitiveStatus.FAMILIAR
        best_p = self.p_familiar
        for status, p in ((CognitiveStatus.ACTIVATED, self.p_activated),
                          (CognitiveStatus.IN_FOCUS, self.p_in_focus)):
            if p > best_p:
                best, best_p = status, p
        return best


Matrix = Tuple[Tuple[float, float, float], ...]


def _check_matrix(name: str, rows) -> Matrix:
    matrix = tuple(tuple(float(x) for x in row) for row in rows)
    if len(matrix) != 3 or any(len(row) != 3 for row in matrix):
        raise InvalidTransitionModel(f"matrix {name} must be 3x3")
    for r, row in enumerate(matrix):
        if any(not math.isfinite(x) or x < 0.0 for x in row):
            raise InvalidTransitionModel(f"matrix {name} row {r} has a negative entry")
        if abs(math.fsum(row) - 1.0) > TOLERANCE:
            raise InvalidTransitionModel(f"matrix {name} row {r} sums to {math.fsum(row)!r}")
    return matrix


@dataclass(frozen=True)
class TransitionModel:
    """Row-stochastic status transition matrices, one per linguistic status.

    Rows index the prior status and columns the next status, both in
    (InFocus, Activated, Familiar) order.
    """

    topic: Matrix
    mentioned: Matrix
    not_mentioned: Matrix

    def __post_init__(self):
        object.__setattr__(self, "topic", _check_matrix("T", self.topic))
        object.__setattr__(self, "mentioned", _check_matrix("M", self.mentioned))
        object.__setattr__(self, "not_mentioned", _check_matrix("N", self.not_mentioned))

    @classmethod
    def default(cls) -> "TransitionModel":
        return cls(
            topic=((0.90, 0.09, 0.01),) * 3,
            mentioned=((0.30, 0.60, 0.10),) * 3,
            not_mentioned=(
                (0.40, 0.50, 0.10),
                (0.00, 0.60, 0.40),
                (0.00, 0.00, 1.00),
            ),
        )

    @classmethod
    def from_mapping(cls, data: Mapping[str, Sequence[Sequence[float]]]) -> "TransitionModel":
        missing = {"T", "M", "N"} - set(data)
        if missing:
            raise InvalidTransitionModel(f"missing matrices {sorted(missing)}")
        return cls(topic=data["T"], mentioned=data["M"], not_mentioned=data["N"])

    def to_mapping(self) -> dict:
        return {
            "T": [list(r) for r in self.topic],
            "M": [list(r) for r in self.mentioned],
            "N": [list(r) for r in self.not_mentioned],
        }

    def matrix(self, status: LinguisticStatus) -> Matrix:
        if status is LinguisticStatus.TOPIC:
            return self.topic
        if status is LinguisticStatus.MENTIONED:
            return self.mentioned
        return self.not_mentioned


@dataclass(frozen=True)
class Entity:
    id: str
    type_name: str
    attributes: Mapping[str, str] = field(default_factory=dict)
    position: Optional[Tuple[float, float, float]] = None
    initially_familiar: bool = False

    def __post_init__(self):
        object.__setattr__(self, "attributes", _FrozenDict(self.attributes))
        if self.position is not None:
            pos = tuple(float(x) for x in self.position)
            if len(pos) != 3:
                raise ValueError(f"entity {self.id!r}: position must have 3 components")
            object.__setattr__(self, "position", pos)

    def value(self, attribute: str) -> Optional[str]:
        """Value of *attribute*, with ``type`` mapping to the head noun."""
        if attribute == TYPE_ATTRIBUTE:
            return self.type_name
        return self.attributes.get(attribute)


class _FrozenDict(dict):
    """Hashable read-only dict so that entities stay immutable values."""

    def _blocked(self, *args, **kwargs):
        raise TypeError("entity attributes are immutable")

    __setitem__ = __delitem__ = clear = pop = popitem = setdefault = update = _blocked

    def __hash__(self):
        return hash(tuple(sorted(self.items())))


@dataclass(frozen=True)
class WorldModel:
    """Catalog of every entity the speaker knows about."""

    entities: Tuple[Entity, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entities", tuple(self.entities))
        object.__setattr__(self, "_index", {e.id: e for e in self.entities})

    def __contains__(self, entity_id: str) -> bool:
        return entity_id in self._index

    def __iter__(self):
        return iter(self.entities)

    def __len__(self) -> int:
        return len(self.entities)

    def get(self, entity_id: str) -> Entity:
        try:
            return self._index[entity_id]
        except KeyError:
            raise UnknownEntity(entity_id) from None

    def ids(self) -> frozenset:
        return frozenset(self._index)


def validate_world(world: WorldModel) -> WorldModel:
    seen = set()
    for entity in world.entities:
        if entity.id in seen:
            raise DuplicateEntityId(entity.id)
        seen.add(entity.id)
        if not entity.type_name:
            raise EmptyTypeName(entity.id)
    return world


@dataclass(frozen=True)
class UtteranceEvent:
    index: int
    speaker: str
    annotations: Mapping[str, LinguisticStatus] = field(default_factory=dict)

    def __post_init__(self):
        kept = {k: v for k, v in self.annotations.items() if v is not LinguisticStatus.NOT_MENTIONED}
        object.__setattr__(self, "annotations", _FrozenDict(kept))

    def status_of(self, entity_id: str) -> LinguisticStatus:
        return self.annotations.get(entity_id, LinguisticStatus.NOT_MENTIONED)


class FormKind(enum.Enum):
    IT = "It"
    BARE_THIS = "BareThis"
    BARE_THAT = "BareThat"
    THIS_NP = "ThisNP"
    THAT_NP = "ThatNP"
    THE_NP = "TheNP"

    @property
    def is_pronoun(self) -> bool:
        return self in (FormKind.IT, FormKind.BARE_THIS, FormKind.BARE_THAT)


_FORM_WORDS = {
    FormKind.IT: "it",
    FormKind.BARE_THIS: "this",
    FormKind.BARE_THAT: "that",
    FormKind.THIS_NP: "this",
    FormKind.THAT_NP: "that",
    FormKind.THE_NP: "the",
}


@dataclass(frozen=True)
class ReferringForm:
    """A chosen referring form.

    ``distractors`` is the set the noun phrase was built to rule out (empty
    for pronouns); ``status`` is the target's status at generation time.
    """

    kind: FormKind
    properties: Tuple[Tuple[str, str], ...] = ()
    ambiguous: bool = False
    status: Optional[CognitiveStatus] = None
    distractors: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "properties", tuple(tuple(p) for p in self.properties))
        object.__setattr__(self, "distractors", frozenset(self.distractors))
        has_head = any(name == TYPE_ATTRIBUTE for name, _ in self.properties)
        if self.kind.is_pronoun and self.properties:
            raise ValueError(f"{self.kind.value} cannot carry noun phrase properties")
        if not self.kind.is_pronoun and not has_head:
            raise ValueError(f"{self.kind.value} requires a head noun")

    def render(self) -> str:
        words = [_FORM_WORDS[self.kind]] + [value for _, value in self.properties]
        return " ".join(words)
