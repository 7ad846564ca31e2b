"""Game components: tokens, dice, cards, counters, decks, areas, boards.

Every component carries a registry-unique integer id, assigned when it is
first registered with a game state. Copies preserve the original id so that
actions (which reference components by id only) stay valid across state
copies.
"""

from __future__ import annotations

import random
from typing import Any, Iterable, Optional

from .errors import DuplicateComponentError, EmptyDeckError

NO_OWNER = -1
UNREGISTERED = -1


class Component:
    """Base class for all game objects."""

    kind = "component"

    def __init__(self, name: str = "", owner_id: int = NO_OWNER):
        self.id: int = UNREGISTERED
        self.name = name
        self.owner_id = owner_id

    def is_container(self) -> bool:
        return False

    def nested(self) -> Iterable["Component"]:
        """Components held inside this one (decks, areas)."""
        return ()

    def copy(self) -> "Component":
        raise NotImplementedError

    def _copy_base(self, other: "Component") -> None:
        other.id = self.id
        other.name = self.name
        other.owner_id = self.owner_id

    def canonical(self):
        """Stable, hashable description of this component's state."""
        return (self.kind, self.id, self.name)

    def __repr__(self):
        return f"{type(self).__name__}(id={self.id}, name={self.name!r})"


class Token(Component):
    kind = "token"

    def __init__(self, token_type: str, position=None, owner_id: int = NO_OWNER):
        super().__init__(name=token_type, owner_id=owner_id)
        self.token_type = token_type
        self.position = position

    def copy(self) -> "Token":
        t = Token(self.token_type, self.position, self.owner_id)
        self._copy_base(t)
        return t

    def canonical(self):
        return (self.kind, self.id, self.token_type, self.position)


class Die(Component):
    kind = "die"

    def __init__(self, n_sides: int, value: int = 1, owner_id: int = NO_OWNER):
        if n_sides < 1:
            raise ValueError("a die needs at least one side")
        super().__init__(name=f"d{n_sides}", owner_id=owner_id)
        self.n_sides = n_sides
        self.value = value

    def roll(self, rng: random.Random) -> int:
        self.value = rng.randint(1, self.n_sides)
        return self.value

    def copy(self) -> "Die":
        d = Die(self.n_sides, self.value, self.owner_id)
        self._copy_base(d)
        return d

    def canonical(self):
        return (self.kind, self.id, self.n_sides, self.value)


class Card(Component):
    kind = "card"

    def __init__(self, name: str = "", properties: Optional[dict] = None,
                 owner_id: int = NO_OWNER):
        super().__init__(name=name, owner_id=owner_id)
        self.properties: dict[str, Any] = dict(properties or {})

    def copy(self) -> "Card":
        # Built by hand (no __init__) as cards dominate state-copy time.
        c = Card.__new__(Card)
        c.id = self.id
        c.name = self.name
        c.owner_id = self.owner_id
        c.properties = dict(self.properties)
        return c

    def canonical(self):
        return (self.kind, self.id, self.name,
                tuple(sorted(self.properties.items())))


class Counter(Component):
    kind = "counter"

    def __init__(self, minimum: int, maximum: int, value: int,
                 name: str = "", owner_id: int = NO_OWNER):
        if not minimum <= value <= maximum:
            raise ValueError("counter value outside [min, max]")
        super().__init__(name=name, owner_id=owner_id)
        self.minimum = minimum
        self.maximum = maximum
        self.value = value

    def change(self, delta: int) -> bool:
        """Add delta, clamping to [minimum, maximum]; True if clamped."""
        raw = self.value + delta
        self.value = max(self.minimum, min(self.maximum, raw))
        return self.value != raw

    def copy(self) -> "Counter":
        c = Counter(self.minimum, self.maximum, self.value, self.name,
                    self.owner_id)
        self._copy_base(c)
        return c

    def canonical(self):
        return (self.kind, self.id, self.minimum, self.maximum, self.value)


class Deck(Component):
    """Ordered collection of components; index 0 is the top."""

    kind = "deck"

    def __init__(self, name: str = "", owner_id: int = NO_OWNER):
        super().__init__(name=name, owner_id=owner_id)
        self._items: list[Component] = []
        self._ids: set[int] = set()

    def is_container(self) -> bool:
        return True

    @property
    def components(self) -> list[Component]:
        return self._items

    def __len__(self) -> int:
        return len(self._items)

    def __iter__(self):
        return iter(self._items)

    def _check_add(self, c: Component) -> None:
        if c.id != UNREGISTERED and c.id in self._ids:
            raise DuplicateComponentError(
                f"component id {c.id} already in deck {self.name!r}")

    def add(self, c: Component) -> None:
        """Place a component on top of the deck."""
        self._check_add(c)
        self._items.insert(0, c)
        if c.id != UNREGISTERED:
            self._ids.add(c.id)

    def add_to_bottom(self, c: Component) -> None:
        self._check_add(c)
        self._items.append(c)
        if c.id != UNREGISTERED:
            self._ids.add(c.id)

    def draw(self) -> Component:
        """Remove and return the top component."""
        if not self._items:
            raise EmptyDeckError(f"deck {self.name!r} is empty")
        c = self._items.pop(0)
        self._ids.discard(c.id)
        return c

    def peek(self, index: int = 0) -> Component:
        if not self._items:
            raise EmptyDeckError(f"deck {self.name!r} is empty")
        return self._items[index]

    def remove(self, c: Component) -> None:
        self._items.remove(c)
        self._ids.discard(c.id)

    def replace(self, index: int, c: Component) -> Component:
        """Swap the element at index for c; returns the old element."""
        old = self._items[index]
        self._ids.discard(old.id)
        self._check_add(c)
        self._items[index] = c
        if c.id != UNREGISTERED:
            self._ids.add(c.id)
        return old

    def clear(self) -> None:
        self._items.clear()
        self._ids.clear()

    def shuffle(self, rng: random.Random) -> None:
        rng.shuffle(self._items)

    def nested(self) -> Iterable[Component]:
        return list(self._items)

    def refresh_ids(self) -> None:
        """Re-sync the duplicate-check set after contents were registered."""
        self._ids = {c.id for c in self._items if c.id != UNREGISTERED}

    def copy(self) -> "Deck":
        d = Deck(self.name, self.owner_id)
        self._copy_base(d)
        d._items = [c.copy() for c in self._items]
        d._ids = set(self._ids)
        return d

    def canonical(self):
        return (self.kind, self.id, self.name,
                tuple(c.canonical() for c in self._items))


class PartialObservableDeck(Deck):
    """Deck whose elements have per-player visibility flags.

    visibility[i][p] is True when element i is visible to player p.
    """

    kind = "podeck"

    def __init__(self, name: str, n_players: int, owner_id: int = NO_OWNER):
        super().__init__(name, owner_id)
        self.n_players = n_players
        self._visibility: list[list[bool]] = []

    def add(self, c: Component, visible_to=None) -> None:
        """Add on top; visible_to is a player id, an iterable of ids,
        a bool (all/none), or None (hidden from everyone)."""
        super().add(c)
        self._visibility.insert(0, self._vis_row(visible_to))

    def add_to_bottom(self, c: Component, visible_to=None) -> None:
        super().add_to_bottom(c)
        self._visibility.append(self._vis_row(visible_to))

    def _vis_row(self, visible_to) -> list[bool]:
        if visible_to is None or visible_to is False:
            return [False] * self.n_players
        if visible_to is True:
            return [True] * self.n_players
        if isinstance(visible_to, int):
            row = [False] * self.n_players
            row[visible_to] = True
            return row
        row = [False] * self.n_players
        for p in visible_to:
            row[p] = True
        return row

    def draw(self) -> Component:
        c = super().draw()
        self._visibility.pop(0)
        return c

    def remove(self, c: Component) -> None:
        i = self._items.index(c)
        super().remove(c)
        self._visibility.pop(i)

    def clear(self) -> None:
        super().clear()
        self._visibility.clear()

    def shuffle(self, rng: random.Random) -> None:
        # Visibility follows the element it belongs to.
        order = list(range(len(self._items)))
        rng.shuffle(order)
        self._items = [self._items[i] for i in order]
        self._visibility = [self._visibility[i] for i in order]

    def is_visible(self, index: int, player_id: int) -> bool:
        return self._visibility[index][player_id]

    def set_visibility(self, index: int, player_id: int, visible: bool) -> None:
        self._visibility[index][player_id] = visible

    def set_all_visibility(self, player_id: int, visible: bool) -> None:
        for row in self._visibility:
            row[player_id] = visible

    def visibility_of(self, index: int) -> list[bool]:
        return list(self._visibility[index])

    def copy(self) -> "PartialObservableDeck":
        d = PartialObservableDeck(self.name, self.n_players, self.owner_id)
        self._copy_base(d)
        d._items = [c.copy() for c in self._items]
        d._ids = set(self._ids)
        d._visibility = [list(row) for row in self._visibility]
        return d


class Area(Component):
    """Map of component id to component."""

    kind = "area"

    def __init__(self, name: str = "", owner_id: int = NO_OWNER):
        super().__init__(name=name, owner_id=owner_id)
        self._contents: dict[int, Component] = {}

    def is_container(self) -> bool:
        return True

    def put(self, c: Component) -> None:
        if c.id in self._contents:
            raise DuplicateComponentError(
                f"component id {c.id} already in area {self.name!r}")
        self._contents[c.id] = c

    def get(self, component_id: int) -> Component:
        return self._contents[component_id]

    def __len__(self) -> int:
        return len(self._contents)

    def nested(self) -> Iterable[Component]:
        return list(self._contents.values())

    def copy(self) -> "Area":
        a = Area(self.name, self.owner_id)
        self._copy_base(a)
        a._contents = {cid: c.copy() for cid, c in self._contents.items()}
        return a

    def canonical(self):
        return (self.kind, self.id, self.name,
                tuple(c.canonical() for _, c in sorted(self._contents.items())))


class GridBoard(Component):
    """2D grid; cells hold arbitrary plain values (not components)."""

    kind = "gridboard"

    def __init__(self, width: int, height: int, fill=None, name: str = ""):
        if width < 1 or height < 1:
            raise ValueError("grid dimensions must be >= 1")
        super().__init__(name=name)
        self.width = width
        self.height = height
        self.cells = [fill] * (width * height)

    def get(self, x: int, y: int):
        return self.cells[y * self.width + x]

    def set(self, x: int, y: int, value) -> None:
        self.cells[y * self.width + x] = value

    def copy(self) -> "GridBoard":
        b = GridBoard(self.width, self.height, name=self.name)
        self._copy_base(b)
        b.cells = list(self.cells)
        return b

    def canonical(self):
        return (self.kind, self.id, self.width, self.height, tuple(self.cells))


class BoardNode(Component):
    kind = "boardnode"

    def __init__(self, name: str = ""):
        super().__init__(name=name)
        self.neighbours: list[int] = []  # component ids

    def copy(self) -> "BoardNode":
        n = BoardNode(self.name)
        self._copy_base(n)
        n.neighbours = list(self.neighbours)
        return n

    def canonical(self):
        return (self.kind, self.id, self.name, tuple(self.neighbours))


class GraphBoard(Component):
    kind = "graphboard"

    def __init__(self, name: str = ""):
        super().__init__(name=name)
        self.nodes: list[BoardNode] = []

    def is_container(self) -> bool:
        return True

    def add_node(self, node: BoardNode) -> None:
        self.nodes.append(node)

    def nested(self) -> Iterable[Component]:
        return list(self.nodes)

    def copy(self) -> "GraphBoard":
        g = GraphBoard(self.name)
        self._copy_base(g)
        g.nodes = [n.copy() for n in self.nodes]
        return g

    def canonical(self):
        return (self.kind, self.id, self.name,
                tuple(n.canonical() for n in self.nodes))
