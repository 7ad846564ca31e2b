"""Love Letter: setup arithmetic, every card effect, rounds, conservation."""

import random

import pytest

from tabletop import run_game
from tabletop.agents import RandomAgent
from tabletop.core import GameStatus, IllegalActionError, PHASE_MAIN, PlayerResult
from tabletop.games.loveletter import (
    BaronAction,
    CountessAction,
    GuardAction,
    HandmaidAction,
    KingAction,
    LLCardType,
    LLDrawCard,
    LLForwardModel,
    LLParams,
    LLState,
    PHASE_DRAW,
    PriestAction,
    PrinceAction,
    PrincessAction,
    card_type,
)


def fresh(seed=0, n_players=4):
    state = LLState(LLParams(random_seed=seed), n_players)
    fm = LLForwardModel(seed)
    fm.setup(state)
    return state, fm


def give(state, player, wanted: LLCardType, avoid=()):
    """Move one card of the wanted type into player's hand, preferring
    neutral piles; a hand that loses its card is refilled from the pile."""
    neutral = ([state.draw_pile, state.reserve_cards]
               + state.player_discard_cards)
    for deck in neutral:
        for card in list(deck):
            if card_type(card) == wanted:
                deck.remove(card)
                state.player_hand_cards[player].add(card, visible_to=player)
                return card
    for i, hand in enumerate(state.player_hand_cards):
        if i == player or i in avoid:
            continue
        for card in list(hand):
            if card_type(card) == wanted:
                hand.remove(card)
                hand.add(state.draw_pile.draw(), visible_to=i)
                state.player_hand_cards[player].add(card, visible_to=player)
                return card
    raise AssertionError(f"no {wanted.name} available")


def clear_hand(state, player):
    hand = state.player_hand_cards[player]
    while len(hand):
        state.draw_pile.add_to_bottom(hand.draw())


def main_phase(state, player):
    state.game_phase = PHASE_MAIN
    state.turn_order.set_turn_owner(player)


def rig(state, player, wanted: LLCardType):
    """Give player exactly one card and make it their Main phase."""
    clear_hand(state, player)
    card = give(state, player, wanted)
    main_phase(state, player)
    return card


class TestSetup:
    @pytest.mark.parametrize("n_players, pile", [(2, 10), (3, 12), (4, 11)])
    def test_deal_arithmetic(self, n_players, pile):
        # 16 cards minus 1 hidden reserve, minus 3 face-up with 2 players,
        # minus one per hand.
        state, _ = fresh(n_players=n_players)
        assert len(state.draw_pile) == pile
        assert all(len(h) == 1 for h in state.player_hand_cards)
        assert len(state.reserve_cards) == (4 if n_players == 2 else 1)

    def test_two_player_reserve_is_face_up_except_first(self):
        state, _ = fresh(n_players=2)
        assert not any(state.reserve_cards.is_visible(0, p)
                       for p in range(2))
        for j in range(1, 4):
            assert all(state.reserve_cards.is_visible(j, p)
                       for p in range(2))

    def test_own_hand_visible_only_to_owner(self):
        state, _ = fresh()
        for i, hand in enumerate(state.player_hand_cards):
            for p in range(state.n_players):
                assert hand.is_visible(0, p) == (p == i)

    def test_phase_starts_at_draw(self):
        state, _ = fresh()
        assert state.game_phase == PHASE_DRAW

    def test_full_deck_present(self):
        state, _ = fresh()
        counts = {}
        for c in state.all_components():
            if c.kind == "card":
                counts[card_type(c)] = counts.get(card_type(c), 0) + 1
        assert counts == {LLCardType.Guard: 5, LLCardType.Priest: 2,
                          LLCardType.Baron: 2, LLCardType.Handmaid: 2,
                          LLCardType.Prince: 2, LLCardType.King: 1,
                          LLCardType.Countess: 1, LLCardType.Princess: 1}


class TestActionGeneration:
    def test_draw_phase_offers_single_draw(self):
        state, fm = fresh()
        actions = fm.compute_available_actions(state)
        assert actions == [LLDrawCard()]

    def test_guard_plus_prince_yields_27_actions(self):
        # 8 guesses x 3 opponents + 3 Prince targets = 27.
        state, fm = fresh()
        clear_hand(state, 0)
        give(state, 0, LLCardType.Guard)
        give(state, 0, LLCardType.Prince)
        main_phase(state, 0)
        actions = fm.compute_available_actions(state)
        assert len(actions) == 27
        assert sum(isinstance(a, GuardAction) for a in actions) == 24
        assert sum(isinstance(a, PrinceAction) for a in actions) == 3

    def test_eliminated_players_not_targetable(self):
        state, fm = fresh()
        state.kill_player(3)
        clear_hand(state, 0)
        give(state, 0, LLCardType.Priest)
        main_phase(state, 0)
        targets = {a.target for a in fm.compute_available_actions(state)}
        assert targets == {1, 2}

    def test_actions_reference_cards_by_id(self):
        state, fm = fresh()
        rig(state, 0, LLCardType.Baron)
        for action in fm.compute_available_actions(state):
            assert state.get_component(action.card_id).kind == "card"


class TestCardEffects:
    def test_guard_correct_guess_eliminates(self):
        state, fm = fresh()
        guard = rig(state, 0, LLCardType.Guard)
        clear_hand(state, 1)
        give(state, 1, LLCardType.Princess)
        fm.next(state, GuardAction(guard.id, 1, LLCardType.Princess))
        assert state.player_results[1] == PlayerResult.LOSE
        # the dead hand goes face-up to the discard pile
        assert [card_type(c) for c in state.player_discard_cards[1]] == \
            [LLCardType.Princess]

    def test_guard_wrong_guess_is_harmless(self):
        state, fm = fresh()
        guard = rig(state, 0, LLCardType.Guard)
        clear_hand(state, 1)
        give(state, 1, LLCardType.Princess)
        fm.next(state, GuardAction(guard.id, 1, LLCardType.Baron))
        assert state.is_alive(1)

    def test_priest_reveals_target_hand(self):
        state, fm = fresh()
        priest = rig(state, 0, LLCardType.Priest)
        assert not state.player_hand_cards[1].is_visible(0, 0)
        fm.next(state, PriestAction(priest.id, 1))
        assert state.player_hand_cards[1].is_visible(0, 0)
        assert not state.player_hand_cards[1].is_visible(0, 2)

    def test_baron_lower_card_loses(self):
        state, fm = fresh()
        baron = rig(state, 0, LLCardType.Baron)
        give(state, 0, LLCardType.King)         # stays after Baron discard
        clear_hand(state, 1)
        give(state, 1, LLCardType.Priest)
        fm.next(state, BaronAction(baron.id, 1))
        assert state.player_results[1] == PlayerResult.LOSE
        assert state.is_alive(0)

    def test_baron_higher_card_backfires(self):
        state, fm = fresh()
        baron = rig(state, 0, LLCardType.Baron)
        give(state, 0, LLCardType.Priest)
        clear_hand(state, 1)
        give(state, 1, LLCardType.King)
        fm.next(state, BaronAction(baron.id, 1))
        assert state.player_results[0] == PlayerResult.LOSE

    def test_baron_tie_is_peaceful(self):
        state, fm = fresh()
        clear_hand(state, 1)
        give(state, 1, LLCardType.Priest)
        baron = rig(state, 0, LLCardType.Baron)
        give(state, 0, LLCardType.Priest, avoid={1})
        fm.next(state, BaronAction(baron.id, 1))
        assert state.is_alive(0) and state.is_alive(1)

    def test_handmaid_blocks_until_next_draw(self):
        state, fm = fresh()
        handmaid = rig(state, 0, LLCardType.Handmaid)
        give(state, 0, LLCardType.Priest)  # card kept after the play
        fm.next(state, HandmaidAction(handmaid.id))
        assert state.is_protected(0)
        # a Guard aimed at the protected player fizzles
        guard = rig(state, 1, LLCardType.Guard)
        target_type = card_type(state.player_hand_cards[0].peek())
        fm.next(state, GuardAction(guard.id, 0, target_type))
        assert state.is_alive(0)
        # protection drops when player 0 draws again
        state.turn_order.set_turn_owner(0)
        state.game_phase = PHASE_DRAW
        fm.next(state, LLDrawCard())
        assert not state.is_protected(0)

    def test_prince_discard_and_redraw(self):
        state, fm = fresh()
        prince = rig(state, 0, LLCardType.Prince)
        clear_hand(state, 1)
        give(state, 1, LLCardType.Priest)
        pile_before = len(state.draw_pile)
        fm.next(state, PrinceAction(prince.id, 1))
        assert [card_type(c) for c in state.player_discard_cards[1]] == \
            [LLCardType.Priest]
        assert len(state.player_hand_cards[1]) == 1
        assert len(state.draw_pile) == pile_before - 1

    def test_prince_on_princess_eliminates(self):
        state, fm = fresh()
        prince = rig(state, 0, LLCardType.Prince)
        clear_hand(state, 1)
        give(state, 1, LLCardType.Princess)
        fm.next(state, PrinceAction(prince.id, 1))
        assert state.player_results[1] == PlayerResult.LOSE
        assert len(state.player_hand_cards[1]) == 0

    def test_prince_with_empty_pile_draws_reserve(self):
        state, fm = fresh()
        prince = rig(state, 0, LLCardType.Prince)
        clear_hand(state, 1)
        give(state, 1, LLCardType.Priest)
        while len(state.draw_pile):
            state.reserve_cards.add_to_bottom(state.draw_pile.draw())
        reserve_top = state.reserve_cards.peek()
        # apply just the effect: going through the forward model would also
        # end the round (empty pile), re-dealing the hands
        PrinceAction(prince.id, 1).execute(state)
        assert state.player_hand_cards[1].peek() is reserve_top

    def test_king_swaps_hands_with_mutual_visibility(self):
        state, fm = fresh()
        king = rig(state, 0, LLCardType.King)
        mine = give(state, 0, LLCardType.Priest)
        clear_hand(state, 1)
        theirs = give(state, 1, LLCardType.Baron)
        fm.next(state, KingAction(king.id, 1))
        assert state.player_hand_cards[0].peek() is theirs
        assert state.player_hand_cards[1].peek() is mine
        for deck in (state.player_hand_cards[0], state.player_hand_cards[1]):
            assert deck.is_visible(0, 0) and deck.is_visible(0, 1)
            assert not deck.is_visible(0, 2)

    def test_countess_has_no_effect(self):
        state, fm = fresh()
        countess = rig(state, 0, LLCardType.Countess)
        give(state, 0, LLCardType.Guard)
        fm.next(state, CountessAction(countess.id))
        assert state.is_alive(0)
        assert [card_type(c) for c in state.player_discard_cards[0]] == \
            [LLCardType.Countess]

    def test_princess_self_eliminates(self):
        state, fm = fresh()
        princess = rig(state, 0, LLCardType.Princess)
        fm.next(state, PrincessAction(princess.id))
        assert state.player_results[0] == PlayerResult.LOSE

    def test_playing_a_card_not_in_hand_is_illegal(self):
        state, fm = fresh()
        rig(state, 0, LLCardType.Guard)
        foreign = state.player_hand_cards[1].peek()
        with pytest.raises(IllegalActionError):
            fm.next(state, HandmaidAction(foreign.id))

    def test_targeting_an_eliminated_player_is_illegal(self):
        state, fm = fresh()
        priest = rig(state, 0, LLCardType.Priest)
        state.kill_player(2)
        with pytest.raises(IllegalActionError):
            fm.next(state, PriestAction(priest.id, 2))


class TestRounds:
    def test_last_survivor_wins_the_round(self):
        state, fm = fresh()
        tokens_before = list(state.affection_tokens)
        for p in (1, 2):
            state.kill_player(p)
        guard = rig(state, 3, LLCardType.Guard)
        guess = card_type(state.player_hand_cards[0].peek())
        fm.next(state, GuardAction(guard.id, 0, guess))
        assert state.affection_tokens[3] == tokens_before[3] + 1
        # a fresh round was dealt
        assert all(len(h) == 1 for h in state.player_hand_cards)
        assert all(state.is_alive(p) for p in range(4))

    def test_empty_pile_highest_card_wins(self):
        state, fm = fresh()
        clear_hand(state, 0)
        give(state, 0, LLCardType.Princess)
        for p in range(1, 4):
            clear_hand(state, p)
            give(state, p, LLCardType.Guard)
        handmaid = give(state, 1, LLCardType.Handmaid)
        main_phase(state, 1)
        while len(state.draw_pile):
            state.reserve_cards.add_to_bottom(state.draw_pile.draw())
        fm.next(state, HandmaidAction(handmaid.id))
        assert state.affection_tokens[0] == 1

    def test_token_threshold_ends_the_game(self):
        state, fm = fresh()
        threshold = state.game_parameters.tokens_to_win(4)
        assert threshold == 5
        state.affection_tokens[2] = threshold - 1
        for p in (0, 1):
            state.kill_player(p)
        guard = rig(state, 2, LLCardType.Guard)
        guess = card_type(state.player_hand_cards[3].peek())
        fm.next(state, GuardAction(guard.id, 3, guess))
        assert state.game_status == GameStatus.ENDED
        assert state.player_results[2] == PlayerResult.WIN
        assert all(state.player_results[p] == PlayerResult.LOSE
                   for p in (0, 1, 3))

    def test_round_counter_advances_per_round_not_per_wrap(self):
        record = run_game("LoveLetter",
                          [RandomAgent(seed=i) for i in range(4)], seed=2)
        assert record.rounds >= 4  # needs >= threshold rounds to finish
        assert record.ticks / max(record.turns, 1) == pytest.approx(2.0)


class TestConservationAndHiding:
    def test_cards_conserved_through_random_play(self):
        def on_tick(state, player, actions, action):
            cards = [c for c in state.all_components() if c.kind == "card"]
            assert len(cards) == 16
            assert len({c.id for c in cards}) == 16

        run_game("LoveLetter", [RandomAgent(seed=i) for i in range(3)],
                 seed=6, on_tick=on_tick)

    def test_observation_keeps_own_hand_and_hides_others(self):
        state, fm = fresh(seed=9)
        for _ in range(4):
            actions = fm.compute_available_actions(state)
            fm.next(state, actions[0])
        observation = state.copy(0)
        own = [c.id for c in state.player_hand_cards[0]]
        assert [c.id for c in observation.player_hand_cards[0]] == own
        # hidden pool is permuted but its multiset of types is preserved
        hidden_ids = state.hidden_component_ids(0)
        true_types = sorted(card_type(state.get_component(i))
                            for i in hidden_ids)
        obs_types = sorted(card_type(observation.get_component(i))
                           for i in observation.hidden_component_ids(0))
        assert obs_types == true_types

    def test_priest_knowledge_survives_observation(self):
        state, fm = fresh()
        priest = rig(state, 0, LLCardType.Priest)
        fm.next(state, PriestAction(priest.id, 1))
        seen = card_type(state.player_hand_cards[1].peek())
        observation = state.copy(0)
        assert card_type(observation.player_hand_cards[1].peek()) == seen

    def test_hidden_fraction_definition(self):
        state, _ = fresh()
        hidden = state.hidden_component_ids(0)
        # 3 opponent hands + 11 draw pile + 1 reserve
        assert len(hidden) == 15
