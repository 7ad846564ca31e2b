from .export import (export_report, export_tournament, load_report,
                     markdown_table)
from .metrics import (ATOMIC_KINDS, MetricsReport, atomic_component_count,
                      measure_speed, run_report)
from .tournament import TournamentResult, run_tournament

__all__ = [
    "ATOMIC_KINDS", "MetricsReport", "TournamentResult",
    "atomic_component_count", "export_report", "export_tournament",
    "load_report", "markdown_table", "measure_speed", "run_report",
    "run_tournament",
]
