"""Exception hierarchy for the engine."""


class TabletopError(Exception):
    """Base class for all engine errors."""


class DuplicateComponentError(TabletopError):
    """The same component instance was registered twice."""


class EmptyDeckError(TabletopError):
    """A draw was attempted on an empty deck."""


class IllegalActionError(TabletopError):
    """An action was applied that is not legal in the current state."""


class InvalidPlayerError(TabletopError):
    """A player id is outside the valid range for the state."""


class UnknownGameError(TabletopError):
    """A game name was not found in the registry."""

    def __init__(self, name, known):
        self.name = name
        self.known = sorted(known)
        super().__init__(f"unknown game {name!r}; known games: {', '.join(self.known)}")


class ComponentDataError(TabletopError):
    """A component data file failed to parse or validate."""


class GameAbort(TabletopError):
    """A human player aborted the game (e.g. console EOF)."""
