"""Acceptance gate: the headline statistical, performance and soundness
properties of the engine, each printed with its measured values.

Run with ``pytest tests/test_acceptance.py -s`` to see the numbers.
"""

import math
import random
import re
import time
from collections import defaultdict

import pytest
from scipy.stats import binomtest

from tabletop import run_game
from tabletop.agents import MCTSAgent, OSLAAgent, RandomAgent, RHEAAgent
from tabletop.cli import EXIT_OK, main as cli_main
from tabletop.core import PlayerResult, create_game
from tabletop.evaluation import measure_speed, run_report
from tabletop.games.tictactoe import TTTForwardModel, TTTParams, TTTState

from oracles import tictactoe_oracle as oracle

FAKE_MU5 = {"setup": 1.0, "next": 1.0, "actions": 1.0, "copy": 1.0}


def test_criterion_1_tictactoe_random_play_matches_oracle():
    """100k random-vs-random games land within 3 standard errors of the
    exact oracle moments, and near the published reference values."""
    stats = oracle.random_play_stats()
    n = 100_000
    ticks = decisions = wins = draws = 0
    action_sum = tick_count = 0

    def on_tick(state, player, actions, action):
        nonlocal action_sum, tick_count
        action_sum += len(actions)
        tick_count += 1

    t0 = time.perf_counter()
    for i in range(n):
        record = run_game(
            "TicTacToe",
            [RandomAgent(seed=2 * i), RandomAgent(seed=2 * i + 1)],
            seed=i, on_tick=on_tick)
        ticks += record.ticks
        decisions += record.decisions
        wins += record.player_results[0] == PlayerResult.WIN
        draws += record.player_results[0] == PlayerResult.DRAW
    elapsed = time.perf_counter() - t0

    mean_ticks = ticks / n
    mean_decisions = decisions / n
    p_win = wins / n
    p_draw = draws / n
    mean_mu1 = action_sum / tick_count

    se_ticks = math.sqrt(stats["var_ticks"] / n)
    se_decisions = math.sqrt(stats["var_decisions"] / n)
    se_win = math.sqrt(stats["p_win_first"] * (1 - stats["p_win_first"]) / n)
    se_draw = math.sqrt(stats["p_draw"] * (1 - stats["p_draw"]) / n)

    print(f"\n[criterion 1] n={n} elapsed={elapsed:.1f}s")
    print(f"  mean ticks     {mean_ticks:.4f} exact {stats['mean_ticks']:.4f}"
          f" (3se={3 * se_ticks:.4f})")
    print(f"  mean decisions {mean_decisions:.4f} "
          f"exact {stats['mean_decisions']:.4f}"
          f" (3se={3 * se_decisions:.4f})")
    print(f"  p(win first)   {p_win:.4f} exact {stats['p_win_first']:.4f}"
          f" (3se={3 * se_win:.4f})")
    print(f"  p(draw)        {p_draw:.4f} exact {stats['p_draw']:.4f}"
          f" (3se={3 * se_draw:.4f})")
    print(f"  mean mu1       {mean_mu1:.4f} "
          f"exact {stats['mean_action_space']:.4f}")

    assert abs(mean_ticks - stats["mean_ticks"]) <= 3 * se_ticks
    assert abs(mean_decisions - stats["mean_decisions"]) <= 3 * se_decisions
    assert abs(p_win - stats["p_win_first"]) <= 3 * se_win
    assert abs(p_draw - stats["p_draw"]) <= 3 * se_draw
    assert abs(mean_ticks - 7.61) <= 0.3
    assert abs(mean_mu1 - 5.69) <= 0.3
    assert elapsed <= 120.0


def test_criterion_2_tictactoe_state_size_and_hidden_fraction():
    """Exactly one component on the table, nothing ever hidden."""
    report = run_report("TicTacToe", 2, 50, seed=0, mu5=FAKE_MU5)
    print(f"\n[criterion 2] mu3={report.mu3_state_size['mean']} "
          f"mu4={report.mu4_hidden_fraction['mean']}")
    assert report.mu3_state_size["mean"] == 1.0
    assert report.mu4_hidden_fraction["mean"] == 0.0


def test_criterion_3_loveletter_conservation_and_round_bounds():
    """10k random games: the 16 cards are conserved every tick, no round
    exceeds 16 Main-phase actions, actions-per-turn matches the reference
    value under auto-draw counting."""
    per_count = [3334, 3333, 3333]  # 2, 3, 4 players
    conservation_violations = 0
    max_main_actions = 0
    ticks = turns = 0
    game_state = {}

    def on_tick(state, player, actions, action):
        nonlocal conservation_violations, max_main_actions
        cards = [c for c in state.all_components() if c.kind == "card"]
        ids = {c.id for c in cards}
        if len(cards) != 16 or len(ids) != 16 or ids != game_state["ids"]:
            conservation_violations += 1
        if state.game_phase == "Main":
            key = state.turn_order.round_counter
            game_state["main"][key] += 1
            max_main_actions = max(max_main_actions,
                                   game_state["main"][key])

    t0 = time.perf_counter()
    game_index = 0
    for n_players, games in zip((2, 3, 4), per_count):
        for _ in range(games):
            seed = 100 + game_index * 7368787
            game_index += 1
            agents = [RandomAgent(seed=seed * 5 + p)
                      for p in range(n_players)]
            game_state["ids"] = None
            game_state["main"] = defaultdict(int)

            def prime(state, player, actions, action):
                if game_state["ids"] is None:
                    game_state["ids"] = {
                        c.id for c in state.all_components()
                        if c.kind == "card"}
                on_tick(state, player, actions, action)

            record = run_game("LoveLetter", agents, seed=seed,
                              on_tick=prime)
            ticks += record.ticks
            turns += record.turns
    elapsed = time.perf_counter() - t0
    apt = ticks / turns

    print(f"\n[criterion 3] games={sum(per_count)} elapsed={elapsed:.1f}s")
    print(f"  conservation violations: {conservation_violations}")
    print(f"  max Main actions in a round: {max_main_actions}")
    print(f"  actions per turn: {apt:.4f} (reference 1.96 +/- 0.3)")

    assert conservation_violations == 0
    assert max_main_actions <= 16
    assert abs(apt - 1.96) <= 0.3
    assert elapsed <= 180.0


def test_criterion_4_loveletter_hidden_fraction_band():
    """Mean hidden-information percentage sits in the published band."""
    values = {}
    for n_players in (2, 3, 4):
        report = run_report("LoveLetter", n_players, 150, seed=5,
                            measure_mu2=False, mu5=FAKE_MU5)
        values[n_players] = report.mu4_hidden_fraction["mean"]
    print(f"\n[criterion 4] mu4 by player count: "
          f"{ {k: round(v, 2) for k, v in values.items()} }")
    for value in values.values():
        assert 50.0 <= value <= 80.0


def test_criterion_5_uno_trends():
    """More cards in hand -> no fewer playable actions on average; more
    players -> strictly fewer rounds before someone reaches the points
    target. 1000 games per player count."""
    buckets = ((1, 3), (4, 6), (7, 9), (10, 99))
    bucket_sums = [0] * len(buckets)
    bucket_counts = [0] * len(buckets)
    mean_rounds = {}

    def on_tick(state, player, actions, action):
        size = len(state.hands[player])
        for b, (lo, hi) in enumerate(buckets):
            if lo <= size <= hi:
                bucket_sums[b] += len(actions)
                bucket_counts[b] += 1
                break

    t0 = time.perf_counter()
    for n_players in range(2, 11):
        total_rounds = 0
        for i in range(1000):
            seed = n_players * 1_000_000 + i * 7368787
            agents = [RandomAgent(seed=seed + p) for p in range(n_players)]
            record = run_game("Uno", agents, seed=seed, on_tick=on_tick)
            total_rounds += record.rounds
        mean_rounds[n_players] = total_rounds / 1000
    elapsed = time.perf_counter() - t0

    bucket_means = [bucket_sums[b] / bucket_counts[b]
                    for b in range(len(buckets))]
    print(f"\n[criterion 5] elapsed={elapsed:.1f}s")
    print(f"  mu1 by hand-size bucket {buckets}: "
          f"{[round(m, 3) for m in bucket_means]}")
    print(f"  mean rounds by players: "
          f"{ {k: round(v, 2) for k, v in mean_rounds.items()} }")

    for a, b in zip(bucket_means, bucket_means[1:]):
        assert b >= a
    counts = sorted(mean_rounds)
    for a, b in zip(counts, counts[1:]):
        assert mean_rounds[b] < mean_rounds[a]
    assert elapsed <= 300.0


def test_criterion_6_speed_floors():
    """TicTacToe forward-model `next` and state `copy` sustain at least
    1e5 calls per second."""
    rates = measure_speed("TicTacToe", 2, seed=0)
    print(f"\n[criterion 6] { {k: f'{v:.3g}' for k, v in rates.items()} }")
    assert rates["next"] >= 1e5
    assert rates["copy"] >= 1e5


def _versus_random(make_agent, games=500, seed0=4242):
    """Challenger vs Random over `games` seeded games, seats alternating."""
    wins = losses = draws = 0
    for i in range(games):
        seed = seed0 + i * 909091
        challenger_seat = i % 2
        agents = [None, None]
        agents[challenger_seat] = make_agent(seed)
        agents[1 - challenger_seat] = RandomAgent(seed=seed + 1)
        record = run_game("TicTacToe", agents, seed=seed)
        result = record.player_results[challenger_seat]
        if result == PlayerResult.WIN:
            wins += 1
        elif result == PlayerResult.LOSE:
            losses += 1
        else:
            draws += 1
    return wins, draws, losses


def test_criterion_7_agent_strength():
    """OSLA, RHEA(2000 FM calls) and MCTS(4000 iterations) each beat
    Random (two-sided binomial on decisive games, p < 0.01), and MCTS
    takes the immediate win in at least 99 of 100 forced-win positions."""
    challengers = {
        "osla": lambda seed: OSLAAgent(seed=seed),
        "rhea(2000)": lambda seed: RHEAAgent(seed=seed, budget=2000),
        "mcts(4000)": lambda seed: MCTSAgent(seed=seed, budget=4000),
    }
    print("\n[criterion 7]")
    for name, make_agent in challengers.items():
        t0 = time.perf_counter()
        wins, draws, losses = _versus_random(make_agent)
        p_value = binomtest(wins, wins + losses, 0.5).pvalue
        print(f"  {name} vs random: {wins}W/{draws}D/{losses}L "
              f"p={p_value:.2e} ({time.perf_counter() - t0:.0f}s)")
        assert wins > losses
        assert p_value < 0.01

    rng = random.Random(0)
    positions = oracle.forced_win_positions(rng, 100)
    found = 0
    for board in positions:
        state = TTTState(TTTParams(random_seed=0))
        fm = TTTForwardModel(0)
        fm.setup(state)
        state.board.cells = list(board)
        state.tick = 9 - board.count(0)
        state.turn_order.set_turn_owner(oracle.to_move(board) - 1)
        agent = MCTSAgent(seed=1, budget=4000)
        agent.initialize(state.current_player, fm)
        actions = fm.compute_available_actions(state)
        action = agent.get_action(state.copy(state.current_player), actions)
        if action.y * 3 + action.x in oracle.winning_moves(board):
            found += 1
    print(f"  mcts forced wins found: {found}/100")
    assert found >= 99


def test_criterion_8_cli_replay_is_byte_identical(capsys):
    """Re-running any CLI game with its echoed seed reproduces the full
    log byte for byte."""
    with capsys.disabled():
        print("\n[criterion 8]")
    scenarios = [
        ("TicTacToe", "random,random"),
        ("LoveLetter", "random,osla,random"),
        ("Uno", "osla,random"),
    ]
    for game, players in scenarios:
        assert cli_main(["play", game, "--players", players,
                         "--verbose"]) == EXIT_OK
        first = capsys.readouterr().out
        seed = int(re.search(r"seed: (\d+)", first).group(1))
        assert cli_main(["play", game, "--players", players,
                         "--verbose", "--seed", str(seed)]) == EXIT_OK
        replay = capsys.readouterr().out
        assert replay == first
        with capsys.disabled():
            print(f"  {game} seed={seed}: "
                  f"{len(first.splitlines())} identical lines")


def _nested_closure(component):
    out = []
    stack = list(component.nested())
    while stack:
        child = stack.pop()
        out.append(child)
        stack.extend(child.nested())
    return out


def _check_pair(state, player):
    """Observation soundness for one (state, player) pair."""
    hidden = state.hidden_component_ids(player)
    before = state.state_hash()
    observation = state.copy(player)

    source = {c.id: c for c in state.all_components()}
    copied = {c.id: c for c in observation.all_components()}
    assert set(copied) == set(source)
    for cid, component in source.items():
        if cid in hidden:
            continue
        nested = set()
        stack = list(component.nested())
        while stack:
            child = stack.pop()
            nested.add(child.id)
            stack.extend(child.nested())
        if nested & hidden:
            # containers of concealed cards keep their size, not their
            # arrangement; their contents are covered by the multiset check
            assert len(nested) == len(
                {n.id for n in _nested_closure(copied[cid])})
            continue
        # visible components survive the copy exactly
        assert copied[cid].canonical() == component.canonical()
    # the concealed pool keeps its composition, not its arrangement
    assert sorted((copied[cid].kind, copied[cid].name) for cid in hidden) \
        == sorted((source[cid].kind, source[cid].name) for cid in hidden)

    # brutalize the copy; the source must not notice
    for component in copied.values():
        component.name = str(component.name) + "!"
    observation.tick += 1
    observation.turn_order.set_turn_owner(
        (observation.current_player + 1) % observation.n_players)
    assert state.state_hash() == before


def _soundness_sweep(game_name, n_players, n_pairs, seed0):
    rng = random.Random(seed0)
    pairs = 0
    game_index = 0
    while pairs < n_pairs:
        _, state, fm = create_game(game_name, n_players,
                                   seed=seed0 + game_index * 7368787)
        game_index += 1
        fm.setup(state)
        while not state.is_terminal() and pairs < n_pairs:
            for player in range(n_players):
                _check_pair(state, player)
                pairs += 1
            actions = fm.compute_available_actions(state)
            fm.next(state, rng.choice(actions))
    return pairs


def test_criterion_9_observation_soundness():
    """10k (state, player) pairs across all three games: visible parts
    exact, hidden parts composition-preserving, copies fully detached."""
    totals = {}
    t0 = time.perf_counter()
    totals["TicTacToe"] = _soundness_sweep("TicTacToe", 2, 2000, 17)
    totals["LoveLetter"] = _soundness_sweep("LoveLetter", 4, 4000, 29)
    totals["Uno"] = _soundness_sweep("Uno", 3, 4000, 43)
    elapsed = time.perf_counter() - t0
    print(f"\n[criterion 9] pairs={totals} elapsed={elapsed:.1f}s")
    assert sum(totals.values()) >= 10_000
