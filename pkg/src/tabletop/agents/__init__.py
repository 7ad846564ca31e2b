from .base import Agent, StateHeuristic, default_heuristic
from .mcts import MCTSAgent
from .rhea import RHEAAgent
from .simple import ConsoleAgent, OSLAAgent, RandomAgent
from .spec import AgentSpecError, HUMAN_SPECS, parse_agent_spec, parse_agents

__all__ = [
    "Agent", "StateHeuristic", "default_heuristic",
    "MCTSAgent", "RHEAAgent", "ConsoleAgent", "OSLAAgent", "RandomAgent",
    "AgentSpecError", "HUMAN_SPECS", "parse_agent_spec", "parse_agents",
]
