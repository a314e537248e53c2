"""Trajectory assembly and repeat-visit detection."""

from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass

from ..config import get_logger
from ..disambiguator import ResolvedPlace

logger = get_logger(__name__)

ORIGIN = "origin"
TRANSIT = "transit"
DESTINATION = "destination"


def compute_visit_index(stops: Sequence[ResolvedPlace]) -> tuple[int, ...]:
    """Visit number of each stop: occurrences of its place so far, inclusive."""
    seen: Counter[tuple[str, str]] = Counter()
    index = []
    for stop in stops:
        seen[stop.key] += 1
        index.append(seen[stop.key])
    return tuple(index)


@dataclass(frozen=True)
class Trajectory:
    """The ordered route of one narrative."""

    narrative_id: str
    stops: tuple[ResolvedPlace, ...] = ()
    visit_index: tuple[int, ...] = ()

    @property
    def empty(self) -> bool:
        """Whether the narrative yielded no stops."""
        return not self.stops

    def roles(self) -> list[str]:
        """Origin, transit or destination for each stop."""
        n = len(self.stops)
        return [
            ORIGIN if i == 0 else DESTINATION if i == n - 1 else TRANSIT
            for i in range(n)
        ]

    def repeat_visits(self) -> dict[tuple[str, str], int]:
        """Places visited more than once, with their visit counts."""
        counts = Counter(stop.key for stop in self.stops)
        return {key: count for key, count in counts.items() if count > 1}


def build_trajectory(
    narrative_id: str, places: Sequence[ResolvedPlace]
) -> Trajectory:
    """Assemble resolved places into a trajectory.

    Consecutive mentions of the same place collapse into one stop;
    non-adjacent repeats stay separate stops with increasing visit numbers.

    Args:
        narrative_id: Id of the source narrative.
        places: Resolved places in narrative order.

    Returns:
        The Trajectory; ``empty`` is set when there are no places.
    """
    stops: list[ResolvedPlace] = []
    for place in places:
        if stops and stops[-1].key == place.key:
            continue
        stops.append(place)

    trajectory = Trajectory(
        narrative_id=narrative_id,
        stops=tuple(stops),
        visit_index=compute_visit_index(stops),
    )
    if trajectory.empty:
        logger.warning("Empty trajectory", narrative_id=narrative_id)
    return trajectory
