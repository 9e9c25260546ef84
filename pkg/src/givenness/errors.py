"""Exception hierarchy.

``ValidationError`` subclasses signal bad input (scenario files, worlds,
configs); the CLI maps them to exit code 1. Everything else deriving from
``GivennessError`` is a runtime contract violation.
"""

from __future__ import annotations

from typing import Optional


class GivennessError(Exception):
    pass


class ValidationError(GivennessError):
    pass


class DuplicateEntityId(ValidationError):
    def __init__(self, entity_id: str):
        super().__init__(f"duplicate entity id {entity_id!r}")
        self.entity_id = entity_id


class EmptyTypeName(ValidationError):
    def __init__(self, entity_id: str):
        super().__init__(f"entity {entity_id!r} has an empty type name")
        self.entity_id = entity_id


class InvalidDistribution(ValidationError, ValueError):
    pass


class InvalidTransitionModel(ValidationError, ValueError):
    pass


class InvalidConfig(ValidationError, ValueError):
    pass


class UnknownEntity(GivennessError, KeyError):
    def __init__(self, entity_id: str):
        super().__init__(entity_id)
        self.entity_id = entity_id

    def __str__(self):
        return f"unknown entity {self.entity_id!r}"


class TurnMismatch(GivennessError):
    def __init__(self, expected: int, got: int):
        super().__init__(f"expected turn {expected}, got {got}")
        self.expected = expected
        self.got = got


class TargetInDistractors(GivennessError, ValueError):
    def __init__(self, entity_id: str):
        super().__init__(f"target {entity_id!r} is in its own distractor set")
        self.entity_id = entity_id


class EmptyDistractorSet(GivennessError, ValueError):
    def __init__(self, entity_id: str):
        super().__init__(f"distance-sensitive REG for {entity_id!r} needs distractors")
        self.entity_id = entity_id


class ParseError(ValidationError):
    def __init__(self, line: Optional[int], message: str):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
        self.message = message


class UnknownEntityInEvent(ValidationError):
    def __init__(self, entity_id: str, turn: int):
        super().__init__(f"turn {turn} mentions undeclared entity {entity_id!r}")
        self.entity_id = entity_id
        self.turn = turn


class NonConsecutiveTurns(ValidationError):
    def __init__(self, expected: int, got: int):
        super().__init__(f"dialogue turns must be consecutive from 0: expected {expected}, got {got}")
        self.expected = expected
        self.got = got
