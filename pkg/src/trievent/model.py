"""A parsed model: world space, named events, conditional probability."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ModelError
from .events import Event, WorldSpace
from .probability import ConditionalProbability


@dataclass
class Model:
    """Everything a command needs: the space, the dictionary, the measure."""

    space: WorldSpace
    events: dict[str, Event] = field(default_factory=dict)
    cp: ConditionalProbability | None = None

    def lookup(self, name: str) -> Event:
        try:
            return self.events[name]
        except KeyError:
            raise ModelError(f"unknown event name: {name!r}") from None

    def event_name(self, event: Event) -> str | None:
        """First declared name denoting exactly this event, if any."""
        for name, declared in self.events.items():
            if declared == event:
                return name
        return None
