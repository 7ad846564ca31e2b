"""Round-robin tournaments: every pair of agents, both seatings."""

from __future__ import annotations

import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from ..agents import parse_agents
from ..core import PlayerResult, registry_lookup, run_game


@dataclass
class TournamentResult:
    agent_specs: list[str]
    game_names: list[str]
    repetitions: int
    seed: int
    # matrix[i][j] = {"wins","draws","losses"} of agent i against agent j,
    # aggregated over both seatings; antisymmetric in wins/losses.
    matrix: list[list[dict]]
    points: list[float]  # win = 1, draw = 0.5
    games_played: int
    skipped: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "agent_specs": list(self.agent_specs),
            "game_names": list(self.game_names),
            "repetitions": self.repetitions,
            "seed": self.seed,
            "matrix": [[dict(cell) for cell in row] for row in self.matrix],
            "points": list(self.points),
            "games_played": self.games_played,
            "skipped": list(self.skipped),
        }

    def format_table(self) -> str:
        names = [f"[{i}] {s}" for i, s in enumerate(self.agent_specs)]
        width = max(len(n) for n in names) + 2
        header = " " * width + "".join(f"{f'[{j}]':>12}"
                                       for j in range(len(names)))
        lines = [header]
        for i, name in enumerate(names):
            cells = []
            for j in range(len(names)):
                if i == j:
                    cells.append(f"{'-':>12}")
                else:
                    c = self.matrix[i][j]
                    cells.append(f"{c['wins']}/{c['draws']}/{c['losses']:}"
                                 .rjust(12))
            lines.append(name.ljust(width) + "".join(cells))
        lines.append("")
        order = sorted(range(len(names)), key=lambda i: -self.points[i])
        for rank, i in enumerate(order, 1):
            lines.append(f"{rank}. {self.agent_specs[i]}: "
                         f"{self.points[i]:g} points")
        return "\n".join(lines)


def run_tournament(agent_specs: list[str], game_names: list[str],
                   repetitions: int, seed: int = 0,
                   jobs: int = 1) -> TournamentResult:
    """Every ordered pair (i, j), i seated first, plays `repetitions`
    games of every listed game; with both orderings each pair meets
    2 * repetitions times per game. Two-player games only: games whose
    player bounds exclude 2 are skipped with a warning."""
    if len(agent_specs) < 2:
        raise ValueError("a tournament needs at least two agents")
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")

    n = len(agent_specs)
    matrix = [[{"wins": 0, "draws": 0, "losses": 0} for _ in range(n)]
              for _ in range(n)]
    points = [0.0] * n
    skipped: list[str] = []

    playable = []
    for name in game_names:
        descriptor = registry_lookup(name)
        if descriptor.min_players <= 2 <= descriptor.max_players:
            playable.append(descriptor)
        else:
            message = (f"skipping {descriptor.name}: supports "
                       f"{descriptor.min_players}-{descriptor.max_players} "
                       f"players, pairings have 2")
            warnings.warn(message)
            skipped.append(message)

    tasks = []  # (i, j, game_seed, descriptor), seat order = (i, j)
    counter = 0
    for descriptor in playable:
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                for rep in range(repetitions):
                    tasks.append((i, j, seed + counter * 909091, descriptor))
                    counter += 1

    def play(task):
        i, j, game_seed, descriptor = task
        agents = parse_agents([agent_specs[i], agent_specs[j]],
                              seed=game_seed)
        record = run_game(descriptor, agents, seed=game_seed)
        return task, record.player_results

    results = (ThreadPoolExecutor(max_workers=jobs).map(play, tasks)
               if jobs > 1 else map(play, tasks))
    for (i, j, _, _), player_results in results:
        first, second = player_results
        if first == PlayerResult.WIN:
            matrix[i][j]["wins"] += 1
            matrix[j][i]["losses"] += 1
            points[i] += 1.0
        elif second == PlayerResult.WIN:
            matrix[i][j]["losses"] += 1
            matrix[j][i]["wins"] += 1
            points[j] += 1.0
        else:
            matrix[i][j]["draws"] += 1
            matrix[j][i]["draws"] += 1
            points[i] += 0.5
            points[j] += 0.5

    return TournamentResult(
        agent_specs=list(agent_specs),
        game_names=[d.name for d in playable],
        repetitions=repetitions,
        seed=seed,
        matrix=matrix,
        points=points,
        games_played=len(tasks),
        skipped=skipped,
    )
