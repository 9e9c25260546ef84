"""Per-entity cognitive status filters and the tier buffers kept in sync with them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Mapping, Optional

from .errors import TurnMismatch
from .model import (
    CognitiveStatus,
    LinguisticStatus,
    StatusDistribution,
    TransitionModel,
    UtteranceEvent,
    WorldModel,
)


def update_filter(prior: StatusDistribution, linguistic: LinguisticStatus,
                  transitions: TransitionModel) -> StatusDistribution:
    """One prediction step: marginalize the prior through the matrix for *linguistic*."""
    matrix = transitions.matrix(linguistic)
    p = prior.as_tuple()
    nxt = [p[0] * matrix[0][col] + p[1] * matrix[1][col] + p[2] * matrix[2][col]
           for col in range(3)]
    return StatusDistribution.normalized(nxt)


@dataclass(frozen=True)
class CognitiveStatusFilter:
    entity_id: str
    distribution: StatusDistribution

    def step(self, linguistic: LinguisticStatus, transitions: TransitionModel) -> "CognitiveStatusFilter":
        return CognitiveStatusFilter(self.entity_id, update_filter(self.distribution, linguistic, transitions))

    @property
    def status(self) -> CognitiveStatus:
        return self.distribution.argmax()


class CognitiveStatusEngine:
    """Bank of cognitive status filters plus InFocus/Activated/Familiar buffers.

    Entities flagged ``initially_familiar`` get a Familiar filter at
    construction; any other entity gets one on its first mention. Untracked
    entities are treated as uniquely identifiable.

    A single engine must be driven by one writer; reads are safe between
    :meth:`observe` calls.
    """

    def __init__(self, world: WorldModel, transitions: Optional[TransitionModel] = None):
        self.world = world
        self.transitions = transitions or TransitionModel.default()
        self.turn = 0
        self._filters: Dict[str, CognitiveStatusFilter] = {}
        self._last_mention: Dict[str, int] = {}
        self._buffers: Dict[CognitiveStatus, FrozenSet[str]] = {}
        for entity in world:
            if entity.initially_familiar:
                self._filters[entity.id] = CognitiveStatusFilter(entity.id, StatusDistribution.familiar())
        self._sync_buffers()

    # -- updates ---------------------------------------------------------

    def observe(self, event: UtteranceEvent) -> None:
        if event.index != self.turn:
            raise TurnMismatch(self.turn, event.index)
        for entity_id in event.annotations:
            self.world.get(entity_id)

        for entity_id, csf in list(self._filters.items()):
            self._filters[entity_id] = csf.step(event.status_of(entity_id), self.transitions)
        for entity_id, linguistic in event.annotations.items():
            if entity_id not in self._filters:
                fresh = CognitiveStatusFilter(entity_id, StatusDistribution.familiar())
                self._filters[entity_id] = fresh.step(linguistic, self.transitions)
            self._last_mention[entity_id] = event.index

        self._sync_buffers()
        self.turn += 1

    def set_distribution(self, entity_id: str, distribution: StatusDistribution) -> None:
        """Overwrite (or create) the filter for *entity_id*; used to stage states."""
        self.world.get(entity_id)
        self._filters[entity_id] = CognitiveStatusFilter(entity_id, distribution)
        self._sync_buffers()

    def record_mention(self, entity_id: str, turn: int) -> None:
        """Set the last-mention turn of *entity_id* without touching its filter."""
        self.world.get(entity_id)
        self._last_mention[entity_id] = turn

    def _sync_buffers(self) -> None:
        members: Dict[CognitiveStatus, set] = {s: set() for s in CognitiveStatus.tracked()}
        for entity_id, csf in self._filters.items():
            members[csf.status].add(entity_id)
        self._buffers = {s: frozenset(ids) for s, ids in members.items()}

    # -- queries ---------------------------------------------------------

    @property
    def current_turn(self) -> int:
        """Index of the most recently observed utterance (0 before any)."""
        return max(self.turn - 1, 0)

    @property
    def buffers(self) -> Mapping[CognitiveStatus, FrozenSet[str]]:
        return dict(self._buffers)

    def tracked(self) -> FrozenSet[str]:
        return frozenset(self._filters)

    def filter(self, entity_id: str) -> Optional[CognitiveStatusFilter]:
        self.world.get(entity_id)
        return self._filters.get(entity_id)

    def distribution(self, entity_id: str) -> Optional[StatusDistribution]:
        csf = self.filter(entity_id)
        return csf.distribution if csf is not None else None

    def last_mention(self, entity_id: str) -> Optional[int]:
        return self._last_mention.get(entity_id)

    @property
    def mention_log(self) -> Mapping[str, int]:
        return dict(self._last_mention)

    def status(self, entity_id: str) -> CognitiveStatus:
        csf = self.filter(entity_id)
        if csf is None:
            return CognitiveStatus.UNIQUELY_IDENTIFIABLE
        return csf.status

    def buffer_of(self, entity_id: str) -> Optional[CognitiveStatus]:
        for status, ids in self._buffers.items():
            if entity_id in ids:
                return status
        return None

    def distractors(self, entity_id: str, status: Optional[CognitiveStatus] = None) -> FrozenSet[str]:
        """Entities of at least *status* (default: the target's own) other than the target."""
        self.world.get(entity_id)
        if status is None:
            status = self.status(entity_id)
        if status is CognitiveStatus.UNIQUELY_IDENTIFIABLE:
            pool: Iterable[str] = self.world.ids()
        else:
            pool = set().union(*(ids for s, ids in self._buffers.items() if s >= status))
        return frozenset(pool) - {entity_id}
