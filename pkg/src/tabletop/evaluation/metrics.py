"""Game analysis: the seven complexity measures and the report around them.

mu1  action space size        |available actions| at each tick
mu2  branching factor         distinct successor states per decision
mu3  state size               components in the registry
mu4  hidden information       % of atomic components concealed from the
                              acting player
mu5  speed                    calls/sec of setup / next / actions / copy
mu6  game length              decisions, ticks, rounds, actions per turn
mu7  reward sparsity          min / max / stddev of observed heuristic values
"""

from __future__ import annotations

import math
import statistics
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Union

from ..agents import parse_agents
from ..core import CoreConfig, GameState, registry_lookup, run_game

ATOMIC_KINDS = ("card", "token", "die", "counter")

# Per-game seeds inside a report are derived from the master seed with a
# stride, so results do not depend on scheduling when jobs > 1.
_GAME_SEED_STRIDE = 7368787


@dataclass
class MetricsReport:
    game_name: str
    n_players: int
    n_games: int
    seed: int
    agent_specs: list[str]
    mu1_action_space: dict  # {"mean": float, "histogram": {size: count}}
    mu2_branching: dict     # {"mean": float}
    mu3_state_size: dict    # {"mean": float}
    mu4_hidden_fraction: dict  # {"mean": float}, percentage
    mu5_speed: dict         # {"setup"|"next"|"actions"|"copy": calls/sec}
    mu6_length: dict        # {"decisions","ticks","rounds","actions_per_turn"}
    mu7_reward: dict        # {"min","max","stddev"}

    def to_json(self) -> dict:
        return {
            "game_name": self.game_name,
            "n_players": self.n_players,
            "n_games": self.n_games,
            "seed": self.seed,
            "agent_specs": list(self.agent_specs),
            "mu1_action_space": {
                "mean": self.mu1_action_space["mean"],
                "histogram": {str(k): v for k, v in
                              sorted(self.mu1_action_space["histogram"]
                                     .items())},
            },
            "mu2_branching": dict(self.mu2_branching),
            "mu3_state_size": dict(self.mu3_state_size),
            "mu4_hidden_fraction": dict(self.mu4_hidden_fraction),
            "mu5_speed": dict(self.mu5_speed),
            "mu6_length": dict(self.mu6_length),
            "mu7_reward": dict(self.mu7_reward),
        }

    @classmethod
    def from_json(cls, data: dict) -> "MetricsReport":
        mu1 = {
            "mean": data["mu1_action_space"]["mean"],
            "histogram": {int(k): v for k, v in
                          data["mu1_action_space"]["histogram"].items()},
        }
        return cls(
            game_name=data["game_name"],
            n_players=data["n_players"],
            n_games=data["n_games"],
            seed=data["seed"],
            agent_specs=list(data["agent_specs"]),
            mu1_action_space=mu1,
            mu2_branching=dict(data["mu2_branching"]),
            mu3_state_size=dict(data["mu3_state_size"]),
            mu4_hidden_fraction=dict(data["mu4_hidden_fraction"]),
            mu5_speed=dict(data["mu5_speed"]),
            mu6_length=dict(data["mu6_length"]),
            mu7_reward=dict(data["mu7_reward"]),
        )


def atomic_component_count(state: GameState) -> int:
    return sum(1 for c in state.all_components() if c.kind in ATOMIC_KINDS)


@dataclass
class _Partial:
    """Per-game metric sums, merged across workers afterwards."""

    ticks_sampled: int = 0
    mu1_sum: int = 0
    mu1_hist: dict = field(default_factory=dict)
    mu2_sum: int = 0
    mu2_samples: int = 0
    mu3_sum: int = 0
    mu4_sum: float = 0.0
    decisions: int = 0
    ticks: int = 0
    rounds: int = 0
    turns: int = 0
    reward_min: float = math.inf
    reward_max: float = -math.inf
    # Welford running stats for the reward stddev.
    reward_n: int = 0
    reward_mean: float = 0.0
    reward_m2: float = 0.0

    def observe_reward(self, value: float) -> None:
        self.reward_min = min(self.reward_min, value)
        self.reward_max = max(self.reward_max, value)
        self.reward_n += 1
        delta = value - self.reward_mean
        self.reward_mean += delta / self.reward_n
        self.reward_m2 += delta * (value - self.reward_mean)

    def merge(self, other: "_Partial") -> None:
        self.ticks_sampled += other.ticks_sampled
        self.mu1_sum += other.mu1_sum
        for k, v in other.mu1_hist.items():
            self.mu1_hist[k] = self.mu1_hist.get(k, 0) + v
        self.mu2_sum += other.mu2_sum
        self.mu2_samples += other.mu2_samples
        self.mu3_sum += other.mu3_sum
        self.mu4_sum += other.mu4_sum
        self.decisions += other.decisions
        self.ticks += other.ticks
        self.rounds += other.rounds
        self.turns += other.turns
        self.reward_min = min(self.reward_min, other.reward_min)
        self.reward_max = max(self.reward_max, other.reward_max)
        if other.reward_n:
            n = self.reward_n + other.reward_n
            delta = other.reward_mean - self.reward_mean
            self.reward_m2 += (other.reward_m2
                               + delta * delta * self.reward_n
                               * other.reward_n / n)
            self.reward_mean += delta * other.reward_n / n
            self.reward_n = n


def _play_one(descriptor, agent_specs, game_seed: int,
              measure_mu2: bool) -> _Partial:
    partial = _Partial()
    agents = parse_agents(agent_specs, seed=game_seed)
    n_players = len(agents)
    probe_fm = descriptor.make_forward_model(0) if measure_mu2 else None

    def on_tick(state, player, actions, action):
        partial.ticks_sampled += 1
        n = len(actions)
        partial.mu1_sum += n
        partial.mu1_hist[n] = partial.mu1_hist.get(n, 0) + 1
        partial.mu3_sum += len(state.all_components())
        atoms = atomic_component_count(state)
        if atoms:
            hidden = len(state.hidden_component_ids(player))
            partial.mu4_sum += 100.0 * hidden / atoms
        for p in range(n_players):
            partial.observe_reward(state.get_score(p))
        if measure_mu2 and n > 1:
            # One sampled successor per action, all under the same
            # per-decision seed so chance resolves identically.
            decision_seed = game_seed * 31 + state.tick
            hashes = set()
            for a in actions:
                probe_fm.reseed(decision_seed)
                successor = state.copy()
                probe_fm.next(successor, a)
                hashes.add(successor.state_hash())
            partial.mu2_sum += len(hashes)
            partial.mu2_samples += 1

    record = run_game(descriptor, agents, seed=game_seed, on_tick=on_tick)
    partial.decisions += record.decisions
    partial.ticks += record.ticks
    partial.rounds += record.rounds
    partial.turns += record.turns
    return partial


def _timed_rate(run_batch, min_time: float = 0.05, repeats: int = 3) -> float:
    """calls/sec of run_batch(batch_size), median over timed repeats.

    The batch size is grown until one batch takes at least min_time, which
    keeps timer resolution out of the measurement.
    """
    batch = 256
    while True:
        t0 = time.perf_counter()
        run_batch(batch)
        elapsed = time.perf_counter() - t0
        if elapsed >= min_time or batch >= 1 << 20:
            break
        batch *= 4
    rates = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        run_batch(batch)
        elapsed = time.perf_counter() - t0
        rates.append(batch / elapsed if elapsed > 0 else math.inf)
    return statistics.median(rates)


def measure_speed(game_name: str, n_players: int, seed: int = 0,
                  warmup_ticks: int = 3) -> dict:
    """mu5: calls/sec for setup, next, compute-actions and copy, measured
    on a snapshot a few ticks into a seeded game."""
    descriptor = registry_lookup(game_name)
    params = descriptor.make_params(seed)
    state = descriptor.make_state(params, n_players)
    state.config = CoreConfig()
    fm = descriptor.make_forward_model(seed)
    fm.setup(state)
    for _ in range(warmup_ticks):
        if state.is_terminal():
            break
        actions = fm.compute_available_actions(state)
        fm.next(state, actions[0])
    snapshot = state
    actions = ([] if snapshot.is_terminal()
               else fm.compute_available_actions(snapshot))
    if not actions:  # extremely short game: fall back to the initial state
        fm.setup(snapshot)
        actions = fm.compute_available_actions(snapshot)
    action = actions[0]

    def bench_setup(n):
        fresh = descriptor.make_state(params, n_players)
        fresh.config = CoreConfig()
        for _ in range(n):
            fm.setup(fresh)

    def bench_copy(n):
        for _ in range(n):
            snapshot.copy()

    def bench_actions(n):
        for _ in range(n):
            fm.compute_available_actions(snapshot)

    def bench_next(n):
        # Copies are pre-built so only the transition itself is timed.
        pool = [snapshot.copy() for _ in range(n)]
        t0 = time.perf_counter()
        for s in pool:
            fm.next(s, action)
        return time.perf_counter() - t0

    # next is timed explicitly to exclude the per-call state copies.
    batch = 256
    while True:
        elapsed = bench_next(batch)
        if elapsed >= 0.05 or batch >= 1 << 18:
            break
        batch *= 4
    next_rate = statistics.median(
        batch / max(bench_next(batch), 1e-12) for _ in range(3))

    return {
        "setup": _timed_rate(bench_setup),
        "next": next_rate,
        "actions": _timed_rate(bench_actions),
        "copy": _timed_rate(bench_copy),
    }


def run_report(game_name: str, n_players: int, n_games: int,
               agent_specs: Union[str, list[str]] = "random",
               seed: int = 0, jobs: int = 1, measure_mu2: bool = True,
               mu5: Optional[dict] = None) -> MetricsReport:
    """Play n_games and aggregate mu1..mu7.

    agent_specs is one spec used for every seat, or one spec per seat.
    Pass a precomputed dict as mu5 to skip the speed benchmark (useful in
    tests and when stacking reports on one machine).
    """
    if n_games <= 0:
        raise ValueError("n_games must be positive")
    descriptor = registry_lookup(game_name)
    if isinstance(agent_specs, str):
        agent_specs = [agent_specs] * n_players
    if len(agent_specs) != n_players:
        raise ValueError("need one agent spec per player")

    game_seeds = [seed + i * _GAME_SEED_STRIDE for i in range(n_games)]
    total = _Partial()
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            partials = pool.map(
                lambda s: _play_one(descriptor, agent_specs, s, measure_mu2),
                game_seeds)
            for p in partials:
                total.merge(p)
    else:
        for s in game_seeds:
            total.merge(_play_one(descriptor, agent_specs, s, measure_mu2))

    if mu5 is None:
        mu5 = measure_speed(game_name, n_players, seed)

    ticks = max(total.ticks_sampled, 1)
    stddev = (math.sqrt(total.reward_m2 / total.reward_n)
              if total.reward_n else 0.0)
    return MetricsReport(
        game_name=descriptor.name,
        n_players=n_players,
        n_games=n_games,
        seed=seed,
        agent_specs=list(agent_specs),
        mu1_action_space={"mean": total.mu1_sum / ticks,
                          "histogram": dict(sorted(total.mu1_hist.items()))},
        mu2_branching={"mean": (total.mu2_sum / total.mu2_samples
                                if total.mu2_samples else 1.0)},
        mu3_state_size={"mean": total.mu3_sum / ticks},
        mu4_hidden_fraction={"mean": total.mu4_sum / ticks},
        mu5_speed=mu5,
        mu6_length={
            "decisions": total.decisions / n_games,
            "ticks": total.ticks / n_games,
            "rounds": total.rounds / n_games,
            "actions_per_turn": total.ticks / max(total.turns, 1),
        },
        mu7_reward={
            "min": total.reward_min if total.reward_n else 0.0,
            "max": total.reward_max if total.reward_n else 0.0,
            "stddev": stddev,
        },
    )
