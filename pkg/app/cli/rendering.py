"""
Deterministic text and JSON rendering of command reports
"""
import itertools
import json
from typing import Any, Iterator, List, Sequence, Tuple, Union

from app.core.config import DISPLAY_DECIMALS
from app.models.schemas import (
    CliReport,
    EquilibriumView,
    GameDocument,
    MixedProfileView,
    ProfileView,
)


def json_number(value: float) -> Union[int, float]:
    """Round to the display precision; integral values become ints"""
    rounded = round(float(value), DISPLAY_DECIMALS)
    if rounded.is_integer():
        return int(rounded)
    return rounded


def format_number(value: float) -> str:
    """Fixed-point with up to DISPLAY_DECIMALS decimals, trailing zeros trimmed"""
    text = f"{float(value):.{DISPLAY_DECIMALS}f}".rstrip("0").rstrip(".")
    if text in ("-0", ""):
        return "0"
    return text


def _tuple_text(items: Sequence[Any]) -> str:
    return "(" + ", ".join(format_number(i) if isinstance(i, (int, float)) else str(i) for i in items) + ")"


def _echo(value: Any) -> str:
    if isinstance(value, dict):
        return ", ".join(f"{k}={_echo(v)}" for k, v in value.items())
    if isinstance(value, list):
        if value and all(isinstance(v, list) for v in value):
            return "; ".join(_tuple_text(v) for v in value)
        return ", ".join(_echo(v) for v in value)
    if isinstance(value, bool) or value is None:
        return str(value).lower() if value is not None else "none"
    if isinstance(value, (int, float)):
        return format_number(value)
    return str(value)


def _profile_line(view: ProfileView) -> str:
    return f"  {_tuple_text(view.profile)} -> {_tuple_text(view.payoffs)}"


def _profile_section(title: str, views: List[ProfileView], empty: str) -> List[str]:
    lines = [f"{title}:"]
    if not views:
        lines.append(f"  {empty}")
    lines.extend(_profile_line(view) for view in views)
    return lines


def _mixed_line(view: MixedProfileView) -> str:
    parts = []
    for strategy in view.strategies:
        probs = ", ".join(f"{label}: {format_number(p)}" for label, p in strategy.probabilities.items())
        parts.append(f"{strategy.player} ({probs})")
    return f"  {'; '.join(parts)} -> expected {_tuple_text(view.expected_payoffs)}"


def _equilibria_lines(view: EquilibriumView) -> List[str]:
    lines = _profile_section("Pure Nash equilibria", view.pure_equilibria, "no pure equilibria")
    if view.mixed_equilibria is not None:
        lines.append("Mixed equilibria (2x2):")
        if not view.mixed_equilibria:
            lines.append("  none")
        lines.extend(_mixed_line(m) for m in view.mixed_equilibria)
    if view.dominant_strategy_profile is None:
        lines.append("Dominant-strategy equilibrium: none")
    else:
        lines.append("Dominant-strategy equilibrium:")
        lines.append(_profile_line(view.dominant_strategy_profile))
    lines.extend(_profile_section("Pareto-optimal profiles", view.pareto_optimal, "none"))
    lines.extend(f"Note: {note}" for note in view.notes)
    return lines


def document_cells(document: GameDocument) -> Iterator[Tuple[List[str], List[Any]]]:
    """(profile labels, payoff vector) for every cell of a game document, row-major"""
    for indices in itertools.product(*(range(len(labels)) for labels in document.strategies)):
        node = document.payoffs
        for i in indices:
            node = node[i]
        yield [document.strategies[p][i] for p, i in enumerate(indices)], node


def _game_lines(document: GameDocument) -> List[str]:
    lines = ["Reduced game:"]
    for player, labels in zip(document.players, document.strategies):
        lines.append(f"  {player}: {', '.join(labels)}")
    for labels, payoffs in document_cells(document):
        lines.append(f"  {_tuple_text(labels)} -> {_tuple_text(payoffs)}")
    return lines


def render_text(report: CliReport, quiet: bool = False) -> str:
    lines: List[str] = []
    if not quiet:
        lines.append(f"command: {report.command}")
        for key, value in report.inputs.items():
            lines.append(f"{key}: {_echo(value)}")
        lines.append(f"payoffs shown as: {report.orientation.value}")
        lines.append("")

    if report.equilibria is not None:
        lines.extend(_equilibria_lines(report.equilibria))

    if report.pareto_optimal is not None:
        lines.extend(_profile_section("Pareto-optimal profiles", report.pareto_optimal, "none"))

    if report.dominance is not None:
        lines.append("Dominance:")
        for entry in report.dominance:
            if not entry.relations:
                lines.append(f"  {entry.player}: no dominance relations")
            for relation in entry.relations:
                lines.append(
                    f"  {relation.player}: {relation.dominant} {relation.mode}ly dominates {relation.dominated}"
                )
            if entry.strictly_dominant:
                lines.append(f"  {entry.player}: strictly dominant strategy {', '.join(entry.strictly_dominant)}")
            elif entry.weakly_dominant:
                lines.append(f"  {entry.player}: weakly dominant strategy {', '.join(entry.weakly_dominant)}")

    if report.elimination is not None:
        lines.append("Elimination trace:")
        if not report.elimination:
            lines.append("  no dominated strategies; game unchanged")
        for step in report.elimination:
            lines.append(
                f"  round {step.round}: {step.player} drops {step.eliminated} "
                f"({step.mode}ly dominated by {step.dominator})"
            )

    if report.reduced_game is not None:
        lines.extend(_game_lines(report.reduced_game))

    if report.trajectory is not None:
        trajectory = report.trajectory
        lines.append("Best-response dynamics:")
        for position, state in enumerate(trajectory.states):
            lines.append(f"  {'start' if position == 0 else 'then '} {_tuple_text(state)}")
        if trajectory.converged:
            lines.append(f"  converged after {trajectory.steps_taken} updates")
        else:
            lines.append(f"  did not converge within {trajectory.steps_taken} updates")

    lines.extend(f"Note: {note}" for note in report.notes)
    return "\n".join(lines).rstrip("\n") + "\n"


def render_json(report: CliReport) -> str:
    return json.dumps(report.model_dump(mode="json"), indent=2) + "\n"
