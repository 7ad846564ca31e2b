"""Agent spec mini-grammar: ``name`` or ``name(key=value, ...)``.

Examples: ``random``, ``osla``, ``rhea(L=10,gamma=0.9,budget=2000)``,
``mcts(c=1.414,budget=4000)``, ``console``. ``human`` / ``remote`` denote a
play-service seat and are resolved by the service, not here.
"""

from __future__ import annotations

import re
from typing import Optional

from ..core import TabletopError
from .base import Agent
from .mcts import MCTSAgent
from .rhea import RHEAAgent
from .simple import ConsoleAgent, OSLAAgent, RandomAgent

HUMAN_SPECS = ("human", "remote")

_SPEC_RE = re.compile(r"^\s*([a-zA-Z_]+)\s*(?:\((.*)\))?\s*$")


class AgentSpecError(TabletopError):
    pass


def _parse_value(raw: str):
    raw = raw.strip()
    try:
        return int(raw)
    except ValueError:
        pass
    try:
        return float(raw)
    except ValueError:
        return raw


def parse_agent_spec(spec: str, seed: Optional[int] = None) -> Agent:
    match = _SPEC_RE.match(spec)
    if not match:
        raise AgentSpecError(f"malformed agent spec: {spec!r}")
    name = match.group(1).lower()
    kwargs = {}
    if match.group(2):
        for pair in match.group(2).split(","):
            if not pair.strip():
                continue
            if "=" not in pair:
                raise AgentSpecError(
                    f"expected key=value in agent spec {spec!r}")
            key, value = pair.split("=", 1)
            kwargs[key.strip()] = _parse_value(value)

    if name == "random":
        return RandomAgent(seed=seed)
    if name == "osla":
        return OSLAAgent(seed=seed)
    if name == "console":
        return ConsoleAgent(seed=seed)
    if name == "rhea":
        return RHEAAgent(
            seed=seed,
            horizon=int(kwargs.pop("L", kwargs.pop("horizon", 10))),
            gamma=float(kwargs.pop("gamma", 0.9)),
            budget=int(kwargs.pop("budget", 2000)),
        )
    if name == "mcts":
        return MCTSAgent(
            seed=seed,
            exploration=float(kwargs.pop("c", kwargs.pop("exploration",
                                                         2 ** 0.5))),
            max_tree_depth=int(kwargs.pop("depth", 10)),
            budget=int(kwargs.pop("budget", 4000)),
        )
    if name in HUMAN_SPECS:
        raise AgentSpecError(
            f"{name!r} seats are only valid in the play service")
    raise AgentSpecError(
        f"unknown agent {name!r} (known: random, osla, rhea, mcts, console)")


def parse_agents(specs: list[str], seed: int) -> list[Agent]:
    """One agent per spec, each with a seed derived from the master seed."""
    return [parse_agent_spec(s, seed=seed * 1000003 + i)
            for i, s in enumerate(specs)]
