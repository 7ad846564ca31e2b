"""Report and tournament serialization: json, csv, markdown table."""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Union

from .metrics import MetricsReport
from .tournament import TournamentResult

FORMATS = ("json", "csv", "markdown")


def export_report(report: MetricsReport, path: Union[str, Path],
                  fmt: str = "json") -> Path:
    path = Path(path)
    if fmt == "json":
        path.write_text(json.dumps(report.to_json(), indent=2) + "\n")
    elif fmt == "csv":
        _write_csv(report, path)
    elif fmt == "markdown":
        path.write_text(markdown_table([report]) + "\n")
    else:
        raise ValueError(f"unknown format {fmt!r} (choose from {FORMATS})")
    return path


def load_report(path: Union[str, Path]) -> MetricsReport:
    return MetricsReport.from_json(json.loads(Path(path).read_text()))


def _write_csv(report: MetricsReport, path: Path) -> None:
    """Summary rows (metric,value) followed by mu1 histogram rows
    (mu1_hist,<action count>,<observations>) ready for plotting."""
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["metric", "value", "count"])
        writer.writerow(["game", report.game_name, ""])
        writer.writerow(["n_players", report.n_players, ""])
        writer.writerow(["n_games", report.n_games, ""])
        writer.writerow(["seed", report.seed, ""])
        writer.writerow(["mu1_mean", report.mu1_action_space["mean"], ""])
        writer.writerow(["mu2_mean", report.mu2_branching["mean"], ""])
        writer.writerow(["mu3_mean", report.mu3_state_size["mean"], ""])
        writer.writerow(["mu4_mean", report.mu4_hidden_fraction["mean"], ""])
        for op, rate in report.mu5_speed.items():
            writer.writerow([f"mu5_{op}", rate, ""])
        for key, value in report.mu6_length.items():
            writer.writerow([f"mu6_{key}", value, ""])
        for key, value in report.mu7_reward.items():
            writer.writerow([f"mu7_{key}", value, ""])
        for size, count in sorted(
                report.mu1_action_space["histogram"].items()):
            writer.writerow(["mu1_hist", size, count])


def markdown_table(reports: list[MetricsReport]) -> str:
    """One game per row, one column per headline measure."""
    header = ("| Game | Players | mu1 actions | mu2 branching | mu3 size | "
              "mu4 hidden % | mu5 next/s | mu6 ticks | mu7 stddev |")
    rule = "|" + "---|" * 9
    rows = [header, rule]
    for r in reports:
        rows.append(
            f"| {r.game_name} | {r.n_players} "
            f"| {r.mu1_action_space['mean']:.2f} "
            f"| {r.mu2_branching['mean']:.2f} "
            f"| {r.mu3_state_size['mean']:.2f} "
            f"| {r.mu4_hidden_fraction['mean']:.2f} "
            f"| {r.mu5_speed.get('next', 0):.3g} "
            f"| {r.mu6_length['ticks']:.2f} "
            f"| {r.mu7_reward['stddev']:.3f} |")
    return "\n".join(rows)


def export_tournament(result: TournamentResult,
                      path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(json.dumps(result.to_json(), indent=2) + "\n")
    return path
