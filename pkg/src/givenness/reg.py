"""Incremental Algorithm content selection for definite descriptions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Tuple

from .errors import InvalidConfig, TargetInDistractors
from .model import TYPE_ATTRIBUTE, Entity, WorldModel

DEFAULT_PREFERENCE = ("type", "color", "size", "material", "location-label")


@dataclass(frozen=True)
class PreferenceOrder:
    attributes: Tuple[str, ...] = DEFAULT_PREFERENCE

    def __post_init__(self):
        attrs = tuple(self.attributes)
        object.__setattr__(self, "attributes", attrs)
        if TYPE_ATTRIBUTE not in attrs:
            raise InvalidConfig(f"preference order must include {TYPE_ATTRIBUTE!r}")
        if len(set(attrs)) != len(attrs):
            raise InvalidConfig("preference order has duplicate attributes")

    def for_target(self, target: Entity) -> List[str]:
        """The order attributes of *target* are tried in.

        Attributes the preference list does not name follow it, sorted by name.
        """
        extra = sorted(a for a in target.attributes if a not in self.attributes)
        return list(self.attributes) + extra


@dataclass(frozen=True)
class RegResult:
    properties: Tuple[Tuple[str, str], ...]
    ambiguous: bool


def reg(target: Entity, distractors: Iterable[str], world: WorldModel,
        prefs: PreferenceOrder = PreferenceOrder()) -> RegResult:
    remaining = [world.get(d) for d in sorted(set(distractors))]
    if any(d.id == target.id for d in remaining):
        raise TargetInDistractors(target.id)

    selected: List[Tuple[str, str]] = []
    for attribute in prefs.for_target(target):
        if not remaining:
            break
        value = target.value(attribute)
        if value is None:
            continue
        survivors = [d for d in remaining if d.value(attribute) == value]
        if len(survivors) < len(remaining):
            selected.append((attribute, value))
            remaining = survivors

    head = (TYPE_ATTRIBUTE, target.type_name)
    properties = [p for p in selected if p[0] != TYPE_ATTRIBUTE] + [head]
    return RegResult(tuple(properties), ambiguous=bool(remaining))

