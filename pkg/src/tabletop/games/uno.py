"""Uno: color/number matching, action cards, dynamic turn order, points.

2-10 players; a round ends when someone empties their hand, scoring the
sum of all opponents' card values; points accumulate over rounds until the
points-to-win threshold. Simplifications (documented): Wild Draw Four is
playable any time (no challenge rule) and a drawn card is not immediately
playable (drawing ends the turn).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from ..core import (
    Action,
    Card,
    Deck,
    ForwardModel,
    GameDescriptor,
    GameParameters,
    GameState,
    GameStatus,
    HiddenPool,
    IllegalActionError,
    InvalidPlayerError,
    PlayerResult,
    TurnOrder,
    load_json_components,
    register_game,
)
from ..core.data import data_path

COLORS = ("Red", "Green", "Blue", "Yellow")
WILD = "Wild"
NUMBER = "Number"
SKIP = "Skip"
REVERSE = "Reverse"
DRAW_TWO = "DrawTwo"
WILD_DRAW_FOUR = "WildDrawFour"

ACTION_CARD_POINTS = 20
WILD_CARD_POINTS = 50


@dataclass
class UnoParams(GameParameters):
    n_cards_per_player: int = 7
    points_to_win: int = 500
    deck_file: str = ""

    def __post_init__(self):
        if self.n_cards_per_player < 1 or self.points_to_win < 1:
            raise ValueError("Uno parameters must be positive")

    def randomize(self, rng) -> None:
        self.n_cards_per_player = rng.randint(5, 10)
        self.points_to_win = rng.choice((200, 300, 500))


def card_kind(card: Card) -> str:
    return card.properties["type"]


def card_color(card: Card) -> str:
    return card.properties["color"]


def card_number(card: Card) -> Optional[int]:
    return card.properties.get("number")


def card_points(card: Card) -> int:
    kind = card_kind(card)
    if kind == NUMBER:
        return card_number(card)
    if kind in (SKIP, REVERSE, DRAW_TWO):
        return ACTION_CARD_POINTS
    return WILD_CARD_POINTS


_DECK_CACHE: dict[str, list[Card]] = {}


def load_deck(path) -> list[Card]:
    """Fresh card instances for the configured deck file (parsed once)."""
    key = str(path)
    if key not in _DECK_CACHE:
        cards = load_json_components(path)
        bad = [c for c in cards if c.kind != "card"]
        if bad:
            raise IllegalActionError(f"{path}: non-card entries in Uno deck")
        _DECK_CACHE[key] = cards
    return [c.copy() for c in _DECK_CACHE[key]]


class UnoTurnOrder(TurnOrder):
    increments_round_on_wrap = False

    def __init__(self, n_players: int, starting_player: int = 0):
        super().__init__(n_players, starting_player)
        self.direction = 1

    def _next_player(self, state) -> int:
        return (self.current_player + self.direction) % self.n_players

    def reverse(self) -> None:
        self.direction = -self.direction

    def _copy_into(self, other):
        super()._copy_into(other)
        other.direction = self.direction

    def canonical(self):
        return super().canonical() + (self.direction,)


class UnoState(GameState):
    def __init__(self, game_parameters: UnoParams, n_players: int):
        if not 2 <= n_players <= 10:
            raise InvalidPlayerError("Uno supports 2-10 players")
        super().__init__(game_parameters, n_players, UnoTurnOrder(n_players))
        self.hands: list[Deck] = []
        self.draw_pile: Optional[Deck] = None
        self.discard_pile: Optional[Deck] = None
        self.current_color: str = ""
        self.points: list[int] = [0] * n_players

    @property
    def direction(self) -> int:
        return self.turn_order.direction

    def _get_all_components(self):
        components: list = list(self.hands)
        if self.draw_pile is not None:
            components.append(self.draw_pile)
        if self.discard_pile is not None:
            components.append(self.discard_pile)
        return components

    def _reset(self):
        self.hands = []
        self.draw_pile = None
        self.discard_pile = None
        self.current_color = ""
        self.points = [0] * self.n_players

    def _copy(self, player_id):
        new = UnoState(self.game_parameters, self.n_players)
        new.hands = [h.copy() for h in self.hands]
        new.draw_pile = self.draw_pile.copy()
        new.discard_pile = self.discard_pile.copy()
        new.current_color = self.current_color
        new.points = list(self.points)
        if player_id is not None:
            self._conceal(new, player_id)
        return new

    def _conceal(self, new: "UnoState", player_id: int) -> None:
        """Pool the draw pile, opponents' hands and the buried discard
        cards (only the top of the discard is public), then redraw."""
        pool = HiddenPool()
        hand_counts = {}
        for i, hand in enumerate(new.hands):
            if i == player_id:
                continue
            hand_counts[i] = len(hand)
            pool.collect(hand.components)
            hand.clear()
        buried = list(new.discard_pile.components[1:])
        del new.discard_pile.components[1:]
        new.discard_pile.refresh_ids()
        pool.collect(buried)
        pool.collect(new.draw_pile.components)
        new.draw_pile.clear()

        rng = random.Random(
            self.game_parameters.random_seed * 6211 + self.tick)
        pool.shuffle(rng)
        for i, count in hand_counts.items():
            for c in pool.deal(count):
                new.hands[i].add(c)
        for c in pool.deal(len(buried)):
            new.discard_pile.add_to_bottom(c)
        for c in pool.deal(len(pool)):
            new.draw_pile.add_to_bottom(c)

    def hand_value(self, player_id: int) -> int:
        return sum(card_points(c) + 1 for c in self.hands[player_id])

    def max_hand_value(self) -> int:
        """Normalization constant: total point value of the whole deck."""
        total = 0
        for c in self.all_components():
            if c.kind == "card":
                total += card_points(c) + 1
        return max(total, 1)

    def _get_score(self, player_id: int) -> float:
        result = self.player_results[player_id]
        if result == PlayerResult.WIN:
            return 1.0
        if result in (PlayerResult.LOSE, PlayerResult.DISQUALIFIED):
            return -1.0
        params: UnoParams = self.game_parameters
        value = (self.points[player_id] / params.points_to_win
                 - 0.5 * self.hand_value(player_id) / self.max_hand_value())
        return max(-1.0, min(1.0, value))

    def _canonical_extra(self):
        return (self.current_color, self.direction, tuple(self.points))

    def hidden_component_ids(self, player_id: int) -> set[int]:
        hidden: set[int] = set()
        for i, hand in enumerate(self.hands):
            if i != player_id:
                hidden.update(c.id for c in hand)
        hidden.update(c.id for c in self.draw_pile)
        hidden.update(c.id for c in self.discard_pile.components[1:])
        return hidden

    def to_view(self, player_id):
        def card_view(c):
            return {"color": card_color(c), "type": card_kind(c),
                    "number": card_number(c)}

        top = self.discard_pile.peek() if len(self.discard_pile) else None
        return {
            "game": "Uno",
            "hand": ([card_view(c) for c in self.hands[player_id]]
                     if player_id is not None else []),
            "handCounts": [len(h) for h in self.hands],
            "topDiscard": card_view(top) if top is not None else None,
            "currentColor": self.current_color,
            "direction": self.direction,
            "drawPileSize": len(self.draw_pile),
            "discardSize": len(self.discard_pile),
            "points": list(self.points),
        }


# ---------------------------------------------------------------------------
# Actions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UnoPlayCard(Action):
    card_id: int
    chosen_color: Optional[str] = None  # wild cards only

    def execute(self, state: UnoState) -> None:
        player = state.current_player
        card = state.get_component(self.card_id)
        hand = state.hands[player]
        if card not in hand.components:
            raise IllegalActionError(
                f"card {self.card_id} is not in player {player}'s hand")
        hand.remove(card)
        state.discard_pile.add(card)
        state.current_color = self.chosen_color or card_color(card)

    def get_string(self, state=None) -> str:
        if state is None:
            return f"play card #{self.card_id}"
        card = state.get_component(self.card_id)
        label = f"{card_color(card)} {card_number(card)}" \
            if card_kind(card) == NUMBER else f"{card_color(card)} {card_kind(card)}"
        if self.chosen_color:
            return f"play {card_kind(card)} choosing {self.chosen_color}"
        return f"play {label}"


@dataclass(frozen=True)
class UnoDrawCard(Action):
    def execute(self, state: UnoState) -> None:
        # Draw handling (with reshuffle) lives in the forward model.
        pass

    def get_string(self, state=None) -> str:
        return "draw a card"


# ---------------------------------------------------------------------------
# Forward model
# ---------------------------------------------------------------------------


class UnoForwardModel(ForwardModel):
    def _setup(self, state: UnoState) -> None:
        params: UnoParams = state.game_parameters
        n = state.n_players
        deck_file = params.deck_file or data_path("uno", "deck.json")
        cards = load_deck(deck_file)
        state.draw_pile = Deck("drawPile")
        state.discard_pile = Deck("discardPile")
        state.hands = [Deck(f"playerHand{i}", owner_id=i) for i in range(n)]
        for c in cards:
            state.draw_pile.add(c)
        self._deal_round(state, leader=0)
        for deck in state._get_all_components():
            state.register_component(deck)

    def _deal_round(self, state: UnoState, leader: int) -> None:
        """Shuffle, deal hands and flip a starting Number card."""
        params: UnoParams = state.game_parameters
        pile = state.draw_pile
        pile.shuffle(self.rng)
        for i in range(state.n_players):
            for _ in range(params.n_cards_per_player):
                state.hands[i].add(pile.draw())
        while True:
            top = pile.draw()
            if card_kind(top) == NUMBER:
                state.discard_pile.add(top)
                state.current_color = card_color(top)
                break
            pile.add_to_bottom(top)
            pile.shuffle(self.rng)
        state.turn_order.direction = 1
        state.turn_order.set_turn_owner(leader)

    def _playable(self, state: UnoState, card: Card) -> bool:
        kind = card_kind(card)
        if kind in (WILD, WILD_DRAW_FOUR):
            return True
        if card_color(card) == state.current_color:
            return True
        top = state.discard_pile.peek()
        top_kind = card_kind(top)
        if kind == NUMBER:
            return top_kind == NUMBER and card_number(card) == card_number(top)
        return kind == top_kind

    def _compute_available_actions(self, state: UnoState) -> list[Action]:
        player = state.current_player
        actions: list[Action] = []
        for card in state.hands[player]:
            if not self._playable(state, card):
                continue
            if card_kind(card) in (WILD, WILD_DRAW_FOUR):
                actions.extend(UnoPlayCard(card.id, color)
                               for color in COLORS)
            else:
                actions.append(UnoPlayCard(card.id))
        if not actions:
            actions.append(UnoDrawCard())
        return actions

    def _next(self, state: UnoState, action: Action) -> None:
        player = state.current_player
        if isinstance(action, UnoDrawCard):
            self._draw_cards(state, player, 1)
            state.turn_order.end_player_turn(state)
            return
        card = state.get_component(action.card_id)
        action.execute(state)
        if not len(state.hands[player]):
            self._end_round(state, winner=player)
            return
        kind = card_kind(card)
        if kind in (DRAW_TWO, WILD_DRAW_FOUR):
            victim = (player + state.direction) % state.n_players
            self._draw_cards(state, victim, 2 if kind == DRAW_TWO else 4)
            self._advance(state, 2)
        elif kind == SKIP:
            self._advance(state, 2)
        elif kind == REVERSE:
            state.turn_order.reverse()
            # With two players Reverse acts as a Skip.
            self._advance(state, 2 if state.n_players == 2 else 1)
        else:
            self._advance(state, 1)

    @staticmethod
    def _advance(state: UnoState, steps: int) -> None:
        for _ in range(steps):
            state.turn_order.end_player_turn(state)

    def _draw_cards(self, state: UnoState, player: int, count: int) -> None:
        for _ in range(count):
            if not len(state.draw_pile):
                self._reshuffle_discard(state)
            if not len(state.draw_pile):
                return  # every other card is in hands; nothing to draw
            state.hands[player].add(state.draw_pile.draw())

    def _reshuffle_discard(self, state: UnoState) -> None:
        """Turn the discard pile (minus its top card) into a new draw pile."""
        if len(state.discard_pile) <= 1:
            return
        top = state.discard_pile.draw()
        while len(state.discard_pile):
            state.draw_pile.add(state.discard_pile.draw())
        state.discard_pile.add(top)
        state.draw_pile.shuffle(self.rng)

    def _end_round(self, state: UnoState, winner: int) -> None:
        params: UnoParams = state.game_parameters
        gained = sum(card_points(c)
                     for p in range(state.n_players) if p != winner
                     for c in state.hands[p])
        state.points[winner] += gained
        if state.points[winner] >= params.points_to_win:
            state.game_status = GameStatus.ENDED
            for p in range(state.n_players):
                state.set_player_result(
                    p, PlayerResult.WIN if p == winner else PlayerResult.LOSE)
            return
        state.turn_order.end_round()
        # Gather every card back into the draw pile and re-deal.
        for container in state.hands + [state.discard_pile]:
            while len(container):
                state.draw_pile.add(container.draw())
        self._deal_round(state, leader=winner)


def _default_params(seed: int) -> UnoParams:
    return UnoParams(random_seed=seed)


DESCRIPTOR = GameDescriptor(
    name="Uno",
    min_players=2,
    max_players=10,
    make_params=_default_params,
    make_state=lambda params, n: UnoState(params, n),
    make_forward_model=lambda seed: UnoForwardModel(seed),
    categories=("Simple", "Cards"),
    mechanics=("HiddenInformation", "DynamicTurnOrder"),
)

register_game(DESCRIPTOR)
