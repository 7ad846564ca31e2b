"""Command line tool: play one game, run many, analyse, run tournaments,
serve the play service.

Exit codes are a stable contract for scripts: 0 success, 1 runtime
failure, 2 usage error. Every successful run prints the effective seed so
it can be replayed.
"""

from __future__ import annotations

import argparse
import random
import sys
from concurrent.futures import ThreadPoolExecutor

from .agents import AgentSpecError, HUMAN_SPECS, parse_agents
from .core import (CoreConfig, GameAbort, PlayerResult, TabletopError,
                   all_games, filter_games, registry_lookup, run_game)
from .evaluation import (export_report, export_tournament, markdown_table,
                         run_report, run_tournament)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _split_specs(raw: str) -> list[str]:
    """Split comma-separated agent specs, respecting parentheses."""
    specs, depth, current = [], 0, []
    for ch in raw:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            specs.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    if current:
        specs.append("".join(current).strip())
    return [s for s in specs if s]


def _expand_games(raw: str) -> list[str]:
    """Game list: comma-separated names, `category:X`, or `all`."""
    names = []
    for part in raw.split(","):
        part = part.strip()
        if not part:
            continue
        if part.lower() == "all":
            names.extend(d.name for d in all_games())
        elif part.lower().startswith("category:"):
            category = part.split(":", 1)[1]
            matches = filter_games(category=category)
            if not matches:
                raise UsageError(f"no games in category {category!r}")
            names.extend(d.name for d in matches)
        else:
            names.append(registry_lookup(part).name)
    if not names:
        raise UsageError("no games given")
    return names


def _effective_seed(args) -> int:
    return args.seed if args.seed is not None else random.getrandbits(32)


def _config(args) -> CoreConfig:
    return CoreConfig(
        verbose=getattr(args, "verbose", False),
        partial_observable=not getattr(args, "full_observable", False),
        disqualify_on_illegal_action=getattr(args, "disqualify_on_illegal",
                                             False),
    )


def _make_params(game_name: str, seed: int, randomize: bool):
    descriptor = registry_lookup(game_name)
    params = descriptor.make_params(seed)
    if randomize:
        params.randomize(random.Random(seed))
    return params


def _print_results(record) -> None:
    print(f"game: {record.game_name}  seed: {record.seed}")
    print(f"ticks: {record.ticks}  decisions: {record.decisions}  "
          f"rounds: {record.rounds}")
    for i, result in enumerate(record.player_results):
        print(f"  player {i}: {result.value}")


def cmd_play(args) -> int:
    specs = _split_specs(args.players)
    for spec in specs:
        if spec.lower() in HUMAN_SPECS:
            raise UsageError(
                f"{spec!r} seats need the play service; use `serve` and a "
                "client, or `console` for terminal play")
    seed = _effective_seed(args)
    agents = parse_agents(specs, seed=seed)
    params = _make_params(args.game, seed, args.randomize_params)
    record = run_game(args.game, agents, params=params, config=_config(args),
                      seed=seed)
    _print_results(record)
    return EXIT_OK


def cmd_many(args) -> int:
    games = _expand_games(args.game)
    specs = _split_specs(args.players)
    if args.seeds:
        seeds = [int(s) for s in args.seeds.split(",") if s.strip()]
        if len(seeds) != args.reps:
            raise UsageError(
                f"--seeds has {len(seeds)} entries, --reps is {args.reps}")
    elif args.seed_mode == "fixed":
        seeds = [_effective_seed(args)] * args.reps
    else:  # fresh seed per repetition
        base = _effective_seed(args)
        rng = random.Random(base)
        seeds = [rng.getrandbits(32) for _ in range(args.reps)]

    config = _config(args)
    for game_name in games:
        tasks = []
        for index, game_seed in enumerate(seeds):
            params = _make_params(game_name, game_seed,
                                  args.randomize_params)
            tasks.append((index, game_name, game_seed, params))

        def play(task):
            index, name, game_seed, params = task
            agents = parse_agents(specs, seed=game_seed)
            return index, run_game(name, agents, params=params,
                                   config=config, seed=game_seed)

        if args.jobs > 1:
            with ThreadPoolExecutor(max_workers=args.jobs) as pool:
                results = sorted(pool.map(play, tasks))
        else:
            results = [play(t) for t in tasks]

        wins = [0.0] * len(specs)
        for _, record in results:
            for i, result in enumerate(record.player_results):
                if result == PlayerResult.WIN:
                    wins[i] += 1
                elif result == PlayerResult.DRAW:
                    wins[i] += 0.5
        print(f"game: {game_name}  reps: {args.reps}  "
              f"seeds: {_summarize_seeds(seeds)}")
        for i, spec in enumerate(specs):
            print(f"  player {i} ({spec}): "
                  f"{wins[i] / args.reps:.3f} win rate")
    return EXIT_OK


def _summarize_seeds(seeds: list[int]) -> str:
    if len(set(seeds)) == 1:
        return f"fixed {seeds[0]}"
    if len(seeds) <= 8:
        return ",".join(map(str, seeds))
    return f"{seeds[0]},{seeds[1]},... ({len(seeds)} distinct)"


def cmd_report(args) -> int:
    seed = _effective_seed(args)
    specs = _split_specs(args.players)
    n_players = args.n_players or registry_lookup(args.game).min_players
    if len(specs) == 1:
        specs = specs * n_players
    report = run_report(args.game, n_players, args.n, specs, seed=seed,
                        jobs=args.jobs, measure_mu2=not args.no_mu2)
    print(f"seed: {seed}")
    print(markdown_table([report]))
    json_path = export_report(report, f"{args.out}.json", "json")
    csv_path = export_report(report, f"{args.out}.csv", "csv")
    print(f"written: {json_path}, {csv_path}")
    return EXIT_OK


def cmd_tournament(args) -> int:
    seed = _effective_seed(args)
    specs = _split_specs(args.players)
    games = _expand_games(args.game)
    result = run_tournament(specs, games, args.reps, seed=seed,
                            jobs=args.jobs)
    print(f"seed: {seed}  games played: {result.games_played}")
    print(result.format_table())
    path = export_tournament(result, args.out)
    print(f"written: {path}")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(ai_move_delay=args.ai_delay)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tabletop",
        description="Tabletop game engine: play, analyse, serve.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, players_default=None):
        p.add_argument("game", help="game name (or list/category where "
                                    "supported)")
        if players_default is None:
            p.add_argument("--players", required=True,
                           help="comma-separated agent specs, e.g. "
                                "random,mcts(budget=1000)")
        else:
            p.add_argument("--players", default=players_default)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--verbose", action="store_true")
        p.add_argument("--full-observable", action="store_true",
                       help="disable partial observability in copies")
        p.add_argument("--disqualify-on-illegal", action="store_true")
        p.add_argument("--randomize-params", action="store_true")

    p_play = sub.add_parser("play", help="run a single game")
    common(p_play)
    p_play.set_defaults(func=cmd_play)

    p_many = sub.add_parser("many", help="run many games, print win rates")
    common(p_many)
    p_many.add_argument("--reps", type=int, default=10)
    p_many.add_argument("--seed-mode", choices=("fixed", "fresh"),
                        default="fresh",
                        help="one seed for all reps, or a fresh seed each")
    p_many.add_argument("--seeds", default=None,
                        help="explicit comma-separated seed per repetition")
    p_many.add_argument("--jobs", type=int, default=1)
    p_many.set_defaults(func=cmd_many)

    p_report = sub.add_parser("report", help="metrics report for a game")
    p_report.add_argument("game")
    p_report.add_argument("--players", default="random")
    p_report.add_argument("--n", type=int, default=1000,
                          help="number of games to play")
    p_report.add_argument("--n-players", type=int, default=None)
    p_report.add_argument("--seed", type=int, default=None)
    p_report.add_argument("--jobs", type=int, default=1)
    p_report.add_argument("--no-mu2", action="store_true",
                          help="skip the (slow) branching-factor probe")
    p_report.add_argument("--out", default="report",
                          help="output file prefix")
    p_report.set_defaults(func=cmd_report)

    p_tour = sub.add_parser("tournament", help="round-robin tournament")
    p_tour.add_argument("game", help="game name(s) or category:X")
    p_tour.add_argument("--players", required=True)
    p_tour.add_argument("--reps", type=int, default=10)
    p_tour.add_argument("--seed", type=int, default=None)
    p_tour.add_argument("--jobs", type=int, default=1)
    p_tour.add_argument("--out", default="tournament.json")
    p_tour.set_defaults(func=cmd_tournament)

    p_serve = sub.add_parser("serve", help="run the local play service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--ai-delay", type=float, default=0.3,
                         help="per-move AI pacing in seconds")
    p_serve.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, AgentSpecError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except GameAbort as exc:
        print(f"aborted: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except TabletopError as exc:
        # Unknown game / wrong player count are usage errors; anything
        # raised mid-game is a runtime failure.
        from .core import InvalidPlayerError, UnknownGameError
        print(f"error: {exc}", file=sys.stderr)
        if isinstance(exc, (UnknownGameError, InvalidPlayerError)):
            return EXIT_USAGE
        return EXIT_FAILURE
    except KeyboardInterrupt:
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
