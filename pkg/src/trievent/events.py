"""Finite Boolean algebra of plain events over a declared set of worlds.

A :class:`WorldSpace` fixes an ordered tuple of world names; an
:class:`Event` is a subset of those worlds stored as a bitmask.  The
declaration order is the canonical total order used by every enumerator
and emitter in the package, which keeps all output reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import SpaceMismatchError


@dataclass(frozen=True)
class WorldSpace:
    """Ordered, immutable collection of distinct world names."""

    worlds: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        worlds = tuple(self.worlds)
        if not worlds:
            raise ValueError("a world space needs at least one world")
        if any(not isinstance(w, str) or not w for w in worlds):
            raise ValueError("world names must be nonempty strings")
        if len(set(worlds)) != len(worlds):
            raise ValueError("world names must be unique")
        object.__setattr__(self, "worlds", worlds)
        object.__setattr__(self, "_index", {w: i for i, w in enumerate(worlds)})

    @property
    def size(self) -> int:
        return len(self.worlds)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown world {name!r}") from None

    def name(self, index: int) -> str:
        return self.worlds[index]

    @property
    def top(self) -> Event:
        return Event(self, (1 << self.size) - 1)

    @property
    def bottom(self) -> Event:
        return Event(self, 0)

    def event(self, names) -> Event:
        """Event containing exactly the given world names."""
        mask = 0
        for name in names:
            mask |= 1 << self.index(name)
        return Event(self, mask)

    def singleton(self, world: int | str) -> Event:
        if isinstance(world, str):
            world = self.index(world)
        return Event(self, 1 << world)

    def atoms(self) -> list[Event]:
        """The singleton events, in declaration order."""
        return [Event(self, 1 << i) for i in range(self.size)]

    def all_events(self):
        """Every subset of the space, in mask order (2**n events)."""
        for mask in range(1 << self.size):
            yield Event(self, mask)


@dataclass(frozen=True)
class Event:
    """Subset of a world space, with the usual Boolean operations."""

    space: WorldSpace
    mask: int

    def __post_init__(self):
        if not 0 <= self.mask < (1 << self.space.size):
            raise ValueError(f"mask {self.mask} out of range for {self.space.size} worlds")

    def _same_space(self, other: Event) -> None:
        if not isinstance(other, Event):
            raise TypeError(f"expected an Event, got {type(other).__name__}")
        if self.space != other.space:
            raise SpaceMismatchError("events belong to different world spaces")

    def conj(self, other: Event) -> Event:
        self._same_space(other)
        return Event(self.space, self.mask & other.mask)

    def disj(self, other: Event) -> Event:
        self._same_space(other)
        return Event(self.space, self.mask | other.mask)

    def neg(self) -> Event:
        return Event(self.space, self.mask ^ (1 << self.space.size) - 1)

    def leq(self, other: Event) -> bool:
        """Entailment: every world of self is a world of other."""
        self._same_space(other)
        return self.mask & ~other.mask == 0

    __and__ = conj
    __or__ = disj
    __invert__ = neg
    __le__ = leq

    def has(self, world: int) -> bool:
        return bool(self.mask >> world & 1)

    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.space.size) if self.mask >> i & 1)

    def names(self) -> tuple[str, ...]:
        return tuple(self.space.worlds[i] for i in self.indices())

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    @property
    def is_full(self) -> bool:
        return self.mask == (1 << self.space.size) - 1

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __str__(self) -> str:
        if self.is_full:
            return "TOP"
        if self.is_empty:
            return "BOT"
        return "{" + ", ".join(self.names()) + "}"
