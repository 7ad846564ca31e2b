"""Love Letter: hidden hands, eight card effects, rounds won for tokens.

2-4 players each hold one card; a turn is draw-then-play. Card effects can
eliminate players or reveal/exchange hands. When the draw pile empties or
only one player remains, the survivor with the highest card wins the round
and an affection token; tokens win the game.

Notable rule choices (documented, not from the original ruleset text):
  * Guard guesses range over all eight card types, including Guard.
  * The Countess forced-play rule is not enforced.
  * Prince with an empty draw pile makes the target draw the face-down
    reserve card.
  * Round-win ties break by highest discard sum, then are shared.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import IntEnum
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
    PHASE_MAIN,
    PartialObservableDeck,
    PlayerResult,
    TurnOrder,
    load_json_components,
    register_game,
)

PHASE_DRAW = "Draw"

# Heuristic constants (engine defaults, tune via subclassing if needed).
FACTOR_CARDS = 0.3
FACTOR_AFFECTION = 0.7
COUNTESS_PLAY_THRESHOLD = 0.1


class LLCardType(IntEnum):
    Guard = 1
    Priest = 2
    Baron = 3
    Handmaid = 4
    Prince = 5
    King = 6
    Countess = 7
    Princess = 8

    @classmethod
    def max_value(cls) -> int:
        return int(cls.Princess)


DEFAULT_CARD_COUNTS = {
    LLCardType.Guard: 5,
    LLCardType.Priest: 2,
    LLCardType.Baron: 2,
    LLCardType.Handmaid: 2,
    LLCardType.Prince: 2,
    LLCardType.King: 1,
    LLCardType.Countess: 1,
    LLCardType.Princess: 1,
}


@dataclass
class LLParams(GameParameters):
    card_counts: dict = field(
        default_factory=lambda: dict(DEFAULT_CARD_COUNTS))
    n_cards_per_player: int = 1
    n_cards_visible_reserve: int = 3
    # Tokens needed to win, indexed by player count - 2.
    n_tokens_win: tuple = (5, 5, 5)

    def __post_init__(self):
        if self.n_cards_per_player < 1:
            raise ValueError("players need at least one card")
        if any(v < 0 for v in self.card_counts.values()):
            raise ValueError("card counts must be non-negative")

    def tokens_to_win(self, n_players: int) -> int:
        idx = min(n_players - 2, len(self.n_tokens_win) - 1)
        return self.n_tokens_win[idx]

    def deck_size(self) -> int:
        return sum(self.card_counts.values())

    @classmethod
    def from_file(cls, path, random_seed: int = 0) -> "LLParams":
        """Build parameters from a component data file: one card entry per
        type (count = multiplicity) plus counters for the thresholds."""
        counts: dict = {}
        tokens: dict[int, int] = {}
        visible_reserve = 3
        for comp in load_json_components(path):
            if comp.kind == "card":
                ct = LLCardType[comp.name]
                counts[ct] = counts.get(ct, 0) + 1
            elif comp.kind == "counter" and comp.name.startswith("nTokensWin"):
                tokens[int(comp.name[len("nTokensWin"):])] = comp.value
            elif comp.kind == "counter" and comp.name == "nCardsVisibleReserve":
                visible_reserve = comp.value
        n_tokens = tuple(tokens.get(n, 5) for n in (2, 3, 4)) or (5, 5, 5)
        return cls(random_seed=random_seed,
                   card_counts=counts or dict(DEFAULT_CARD_COUNTS),
                   n_cards_visible_reserve=visible_reserve,
                   n_tokens_win=n_tokens)


def card_type(card: Card) -> LLCardType:
    return LLCardType(card.properties["value"])


class LLTurnOrder(TurnOrder):
    # Rounds are the card-game rounds, counted by the forward model.
    increments_round_on_wrap = False


class LLState(GameState):
    def __init__(self, game_parameters: LLParams, n_players: int):
        if not 2 <= n_players <= 4:
            raise InvalidPlayerError("Love Letter supports 2-4 players")
        super().__init__(game_parameters, n_players, LLTurnOrder(n_players))
        self.game_phase = PHASE_DRAW
        self.player_hand_cards: list[PartialObservableDeck] = []
        self.player_discard_cards: list[Deck] = []
        self.draw_pile: Optional[PartialObservableDeck] = None
        self.reserve_cards: Optional[PartialObservableDeck] = None
        self.effect_protection: list[bool] = [False] * n_players
        self.affection_tokens: list[int] = [0] * n_players

    # -- state contract ---------------------------------------------------

    def _get_all_components(self):
        components: list = []
        components.extend(self.player_hand_cards)
        components.extend(self.player_discard_cards)
        if self.draw_pile is not None:
            components.append(self.draw_pile)
        if self.reserve_cards is not None:
            components.append(self.reserve_cards)
        return components

    def _reset(self):
        self.game_phase = PHASE_DRAW
        self.player_hand_cards = []
        self.player_discard_cards = []
        self.draw_pile = None
        self.reserve_cards = None
        self.effect_protection = [False] * self.n_players
        self.affection_tokens = [0] * self.n_players

    def _copy(self, player_id):
        new = LLState(self.game_parameters, self.n_players)
        new.draw_pile = self.draw_pile.copy()
        new.reserve_cards = self.reserve_cards.copy()
        new.player_hand_cards = [d.copy() for d in self.player_hand_cards]
        new.player_discard_cards = [d.copy() for d in self.player_discard_cards]
        new.effect_protection = list(self.effect_protection)
        new.affection_tokens = list(self.affection_tokens)
        if player_id is not None:
            self._conceal(new, player_id)
        return new

    def _conceal(self, new: "LLState", player_id: int) -> None:
        """Hide what player_id cannot see: pool the hidden cards, shuffle,
        redraw into the same places."""
        pool = HiddenPool()
        hidden_hand_counts = {}
        for i, hand in enumerate(new.player_hand_cards):
            if i == player_id:
                continue
            hidden = [hand.peek(j) for j in range(len(hand))
                      if not hand.is_visible(j, player_id)]
            hidden_hand_counts[i] = len(hidden)
            for c in hidden:
                hand.remove(c)
            pool.collect(hidden)
        hidden_reserve = [j for j in range(len(new.reserve_cards))
                          if not new.reserve_cards.is_visible(j, player_id)]
        pool.collect(new.reserve_cards.peek(j) for j in hidden_reserve)
        pile_cards = list(new.draw_pile.components)
        new.draw_pile.clear()
        pool.collect(pile_cards)

        rng = random.Random(
            self.game_parameters.random_seed * 7919 + self.tick)
        pool.shuffle(rng)

        for i, count in hidden_hand_counts.items():
            for _ in range(count):
                new.player_hand_cards[i].add(pool.deal_one(), visible_to=i)
        for j in hidden_reserve:
            new.reserve_cards.replace(j, pool.deal_one())
        for c in pool.deal(len(pool)):
            new.draw_pile.add_to_bottom(c)

    def _get_score(self, player_id: int) -> float:
        result = self.player_results[player_id]
        if result in (PlayerResult.LOSE, PlayerResult.DISQUALIFIED):
            return -1.0
        if result == PlayerResult.WIN:
            return 1.0
        params: LLParams = self.game_parameters
        rng = random.Random(params.random_seed)
        card_values = 0.0
        hand = self.player_hand_cards[player_id]
        for card in hand:
            ct = card_type(card)
            if ct == LLCardType.Countess:
                if rng.random() > COUNTESS_PLAY_THRESHOLD:
                    card_values += ct.value
            else:
                card_values += ct.value
        max_card_value = 1 + len(hand) * LLCardType.max_value()
        required = max(params.tokens_to_win(self.n_players),
                       self.affection_tokens[player_id])
        return (FACTOR_CARDS * (card_values / max_card_value)
                + FACTOR_AFFECTION
                * (self.affection_tokens[player_id] / required))

    def _canonical_extra(self):
        return (tuple(self.effect_protection), tuple(self.affection_tokens))

    def hidden_component_ids(self, player_id: int) -> set[int]:
        hidden: set[int] = set()
        for i, hand in enumerate(self.player_hand_cards):
            if i == player_id:
                continue
            hidden.update(hand.peek(j).id for j in range(len(hand))
                          if not hand.is_visible(j, player_id))
        hidden.update(c.id for c in self.draw_pile)
        hidden.update(self.reserve_cards.peek(j).id
                      for j in range(len(self.reserve_cards))
                      if not self.reserve_cards.is_visible(j, player_id))
        return hidden

    # -- helpers ----------------------------------------------------------

    def is_alive(self, player_id: int) -> bool:
        return self.player_results[player_id] == PlayerResult.ONGOING

    def is_protected(self, player_id: int) -> bool:
        return self.effect_protection[player_id]

    def kill_player(self, player_id: int) -> None:
        """Eliminate a player from the round; their hand is discarded."""
        self.set_player_result(player_id, PlayerResult.LOSE)
        hand = self.player_hand_cards[player_id]
        while len(hand):
            self.player_discard_cards[player_id].add(hand.draw())

    def to_view(self, player_id):
        def type_name(c):
            return card_type(c).name

        reserve_visible = [
            type_name(self.reserve_cards.peek(j))
            if player_id is not None
            and self.reserve_cards.is_visible(j, player_id) else None
            for j in range(len(self.reserve_cards))
        ]
        return {
            "game": "LoveLetter",
            "hand": ([{"type": type_name(c), "value": int(card_type(c))}
                      for c in self.player_hand_cards[player_id]]
                     if player_id is not None else []),
            "handCounts": [len(h) for h in self.player_hand_cards],
            "discards": [[type_name(c) for c in d]
                         for d in self.player_discard_cards],
            "drawPileSize": len(self.draw_pile),
            "reserve": reserve_visible,
            "affectionTokens": list(self.affection_tokens),
            "protected": list(self.effect_protection),
            "alive": [self.is_alive(p) for p in range(self.n_players)],
        }


# ---------------------------------------------------------------------------
# Actions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LLDrawCard(Action):
    """Draw a card; drawing also removes the drawer's protection."""

    def execute(self, state: LLState) -> None:
        player = state.current_player
        state.effect_protection[player] = False
        card = state.draw_pile.draw()
        visible = player if state.config.partial_observable else True
        state.player_hand_cards[player].add(card, visible_to=visible)

    def get_string(self, state=None) -> str:
        return "draw a card"


@dataclass(frozen=True)
class PlayCardAction(Action):
    """Base for Main-phase card plays; moves the card to the discard pile,
    then applies the card's effect."""

    card_id: int

    def execute(self, state: LLState) -> None:
        player = state.current_player
        card = state.get_component(self.card_id)
        hand = state.player_hand_cards[player]
        if card not in hand.components:
            raise IllegalActionError(
                f"card {self.card_id} is not in player {player}'s hand")
        hand.remove(card)
        state.player_discard_cards[player].add(card)
        self._effect(state, player)

    def _effect(self, state: LLState, player: int) -> None:
        pass

    def _card_name(self, state: LLState) -> str:
        return card_type(state.get_component(self.card_id)).name


def _target_ok(state: LLState, target: int) -> bool:
    if not state.is_alive(target):
        raise IllegalActionError(f"player {target} is already eliminated")
    return not state.is_protected(target)


@dataclass(frozen=True)
class GuardAction(PlayCardAction):
    target: int = 0
    guess: LLCardType = LLCardType.Guard

    def _effect(self, state, player):
        if _target_ok(state, self.target):
            opponent_hand = state.player_hand_cards[self.target]
            if (len(opponent_hand)
                    and card_type(opponent_hand.peek()) == self.guess):
                state.kill_player(self.target)

    def get_string(self, state=None):
        return f"play Guard on p{self.target} guessing {self.guess.name}"


@dataclass(frozen=True)
class PriestAction(PlayCardAction):
    target: int = 0

    def _effect(self, state, player):
        if _target_ok(state, self.target):
            state.player_hand_cards[self.target].set_all_visibility(
                player, True)

    def get_string(self, state=None):
        return f"play Priest on p{self.target}"


@dataclass(frozen=True)
class BaronAction(PlayCardAction):
    target: int = 0

    def _effect(self, state, player):
        if not _target_ok(state, self.target):
            return
        mine = state.player_hand_cards[player]
        theirs = state.player_hand_cards[self.target]
        if not len(mine) or not len(theirs):
            raise IllegalActionError("Baron comparison needs both hands")
        my_value = card_type(mine.peek()).value
        their_value = card_type(theirs.peek()).value
        if their_value < my_value:
            state.kill_player(self.target)
        elif my_value < their_value:
            state.kill_player(player)

    def get_string(self, state=None):
        return f"play Baron on p{self.target}"


@dataclass(frozen=True)
class HandmaidAction(PlayCardAction):
    def _effect(self, state, player):
        state.effect_protection[player] = True

    def get_string(self, state=None):
        return "play Handmaid (protected)"


@dataclass(frozen=True)
class PrinceAction(PlayCardAction):
    target: int = 0

    def _effect(self, state, player):
        # Self-targeting is legal for the effect even though the action
        # generator only offers opponents.
        if self.target != player and not _target_ok(state, self.target):
            return
        hand = state.player_hand_cards[self.target]
        discarded_princess = False
        while len(hand):
            card = hand.draw()
            state.player_discard_cards[self.target].add(card)
            if card_type(card) == LLCardType.Princess:
                discarded_princess = True
        if discarded_princess:
            state.kill_player(self.target)
            return
        source = state.draw_pile if len(state.draw_pile) else state.reserve_cards
        visible = self.target if state.config.partial_observable else True
        hand.add(source.draw(), visible_to=visible)

    def get_string(self, state=None):
        return f"play Prince on p{self.target}"


@dataclass(frozen=True)
class KingAction(PlayCardAction):
    target: int = 0

    def _effect(self, state, player):
        if not _target_ok(state, self.target):
            return
        mine = state.player_hand_cards[player]
        theirs = state.player_hand_cards[self.target]
        my_cards = [mine.draw() for _ in range(len(mine))]
        their_cards = [theirs.draw() for _ in range(len(theirs))]
        both = ((player, self.target)
                if state.config.partial_observable else True)
        for c in their_cards:
            mine.add(c, visible_to=both)
        for c in my_cards:
            theirs.add(c, visible_to=both)

    def get_string(self, state=None):
        return f"play King, swapping hands with p{self.target}"


@dataclass(frozen=True)
class CountessAction(PlayCardAction):
    def get_string(self, state=None):
        return "play Countess"


@dataclass(frozen=True)
class PrincessAction(PlayCardAction):
    def _effect(self, state, player):
        state.kill_player(player)

    def get_string(self, state=None):
        return "play Princess (eliminated)"


# ---------------------------------------------------------------------------
# Forward model
# ---------------------------------------------------------------------------


class LLForwardModel(ForwardModel):
    def _setup(self, state: LLState) -> None:
        n = state.n_players
        state.draw_pile = PartialObservableDeck("drawPile", n)
        state.reserve_cards = PartialObservableDeck("reserveCards", n)
        state.player_hand_cards = [
            PartialObservableDeck(f"playerHand{i}", n, owner_id=i)
            for i in range(n)]
        state.player_discard_cards = [
            Deck(f"discardPlayer{i}", owner_id=i) for i in range(n)]
        state.affection_tokens = [0] * n
        self.setup_round(state, None)
        for deck in state._get_all_components():
            state.register_component(deck)

    def setup_round(self, state: LLState,
                    previous_winners: Optional[list[int]]) -> None:
        params: LLParams = state.game_parameters
        n = state.n_players
        state.effect_protection = [False] * n
        for i in range(n):
            state.set_player_result(i, PlayerResult.ONGOING)

        # Rebuild the full deck; cards are created once and reused.
        cards: list[Card] = []
        for container in (state.player_hand_cards
                          + state.player_discard_cards
                          + [state.draw_pile, state.reserve_cards]):
            while len(container):
                cards.append(container.draw())
        if not cards:
            for ct, count in params.card_counts.items():
                cards.extend(
                    Card(LLCardType(ct).name, {"value": int(ct)})
                    for _ in range(count))
        for card in cards:
            state.draw_pile.add(card)

        rng = random.Random(params.random_seed
                            + state.turn_order.round_counter)
        state.draw_pile.shuffle(rng)

        # One face-down reserve card; with 2 players, extra face-up ones.
        state.reserve_cards.add(state.draw_pile.draw())
        if n == 2:
            for _ in range(params.n_cards_visible_reserve):
                state.reserve_cards.add_to_bottom(state.draw_pile.draw(),
                                                  visible_to=True)

        for i in range(n):
            visible = i if state.config.partial_observable else True
            for _ in range(params.n_cards_per_player):
                state.player_hand_cards[i].add(state.draw_pile.draw(),
                                               visible_to=visible)

        state.game_phase = PHASE_DRAW
        if previous_winners:
            state.turn_order.set_turn_owner(
                rng.choice(sorted(previous_winners)))

    def _compute_available_actions(self, state: LLState) -> list[Action]:
        player = state.current_player
        if state.game_phase == PHASE_DRAW:
            return [LLDrawCard()]
        if state.game_phase == PHASE_MAIN:
            return self._player_actions(state, player)
        raise IllegalActionError(
            f"game phase {state.game_phase!r} is unknown to Love Letter")

    def _player_actions(self, state: LLState, player: int) -> list[Action]:
        actions: list[Action] = []
        opponents = [p for p in range(state.n_players)
                     if p != player and state.is_alive(p)]
        for card in state.player_hand_cards[player]:
            ct = card_type(card)
            cid = card.id
            if ct == LLCardType.Guard:
                for target in opponents:
                    actions.extend(GuardAction(cid, target, guess)
                                   for guess in LLCardType)
            elif ct == LLCardType.Priest:
                actions.extend(PriestAction(cid, t) for t in opponents)
            elif ct == LLCardType.Baron:
                actions.extend(BaronAction(cid, t) for t in opponents)
            elif ct == LLCardType.Handmaid:
                actions.append(HandmaidAction(cid))
            elif ct == LLCardType.Prince:
                actions.extend(PrinceAction(cid, t) for t in opponents)
            elif ct == LLCardType.King:
                actions.extend(KingAction(cid, t) for t in opponents)
            elif ct == LLCardType.Countess:
                actions.append(CountessAction(cid))
            elif ct == LLCardType.Princess:
                actions.append(PrincessAction(cid))
        return actions

    def _next(self, state: LLState, action: Action) -> None:
        action.execute(state)
        if state.game_phase == PHASE_DRAW:
            state.game_phase = PHASE_MAIN
        elif state.game_phase == PHASE_MAIN:
            state.game_phase = PHASE_DRAW
            state.turn_order.end_player_turn(state)
            self.check_end_of_round(state)
        else:
            raise IllegalActionError(
                f"game phase {state.game_phase!r} is unknown to Love Letter")

    def check_end_of_round(self, state: LLState) -> None:
        alive = [p for p in range(state.n_players) if state.is_alive(p)]
        if len(alive) > 1 and len(state.draw_pile) > 0:
            return

        winners = self._round_winners(state, alive)
        for w in winners:
            state.affection_tokens[w] += 1

        params: LLParams = state.game_parameters
        threshold = params.tokens_to_win(state.n_players)
        champions = [p for p in range(state.n_players)
                     if state.affection_tokens[p] >= threshold]
        if champions:
            state.game_status = GameStatus.ENDED
            for p in range(state.n_players):
                state.set_player_result(
                    p, PlayerResult.WIN if p in champions
                    else PlayerResult.LOSE)
            return
        state.turn_order.end_round()
        self.setup_round(state, winners)

    @staticmethod
    def _round_winners(state: LLState, alive: list[int]) -> list[int]:
        if len(alive) <= 1:
            return alive
        def hand_value(p):
            hand = state.player_hand_cards[p]
            return max((card_type(c).value for c in hand), default=0)
        best = max(hand_value(p) for p in alive)
        winners = [p for p in alive if hand_value(p) == best]
        if len(winners) > 1:
            def discard_sum(p):
                return sum(card_type(c).value
                           for c in state.player_discard_cards[p])
            best_sum = max(discard_sum(p) for p in winners)
            winners = [p for p in winners if discard_sum(p) == best_sum]
        return winners


def _default_params(seed: int) -> LLParams:
    from ..core.data import data_path

    path = data_path("loveletter", "params.json")
    if Path(path).exists():
        return LLParams.from_file(path, random_seed=seed)
    return LLParams(random_seed=seed)


DESCRIPTOR = GameDescriptor(
    name="LoveLetter",
    min_players=2,
    max_players=4,
    make_params=_default_params,
    make_state=lambda params, n: LLState(params, n),
    make_forward_model=lambda seed: LLForwardModel(seed),
    categories=("Simple", "Cards"),
    mechanics=("HiddenInformation", "PlayerElimination"),
)

register_game(DESCRIPTOR)
