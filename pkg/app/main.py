"""
Normal Form Game Solver - command-line entry point
"""
import argparse
from pathlib import Path
from typing import Callable, Dict, Optional, Sequence

from app.core.config import (
    DEFAULT_ARMS_RACE_PAYOFFS,
    DEFAULT_COUNTRIES,
    DEFAULT_MAX_STEPS,
    DEFAULT_PD_YEARS,
    settings,
)
from app.core.logging import get_logger, setup_logging
from app.cli import commands
from app.cli.error_handler import execute
from app.cli.rendering import render_json, render_text

logger = get_logger(__name__)


def _csv(values: Sequence[float]) -> str:
    return ",".join(f"{v:g}" for v in values)


def _output_flags(default) -> argparse.ArgumentParser:
    """--json/--quiet, accepted before or after the subcommand"""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--json", action="store_true", default=default,
                        help="Write a single JSON object to stdout")
    parent.add_argument("--quiet", action="store_true", default=default,
                        help="Omit the input echo and log errors only")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nfg-solver",
        description="Solve finite normal-form games: equilibria, dominance, Pareto sets, "
                    "best-response dynamics and the prisoner's-dilemma arms race.",
        parents=[_output_flags(False)],
    )
    parser.add_argument("--version", action="version", version=f"{settings.PROJECT_NAME} {settings.VERSION}")
    flags = _output_flags(argparse.SUPPRESS)
    subparsers = parser.add_subparsers(dest="command", metavar="<command>", required=True)

    solve = subparsers.add_parser("solve", parents=[flags], help="Equilibria, dominant profile and Pareto set")
    solve.add_argument("game_file", type=Path, help="Game JSON file")

    pareto = subparsers.add_parser("pareto", parents=[flags], help="Pareto-optimal profiles only")
    pareto.add_argument("game_file", type=Path, help="Game JSON file")

    dominance = subparsers.add_parser("dominance", parents=[flags], help="Dominance relations per player")
    dominance.add_argument("game_file", type=Path, help="Game JSON file")

    elimination = subparsers.add_parser(
        "iesds", parents=[flags], help="Iterated elimination of dominated strategies")
    elimination.add_argument("game_file", type=Path, help="Game JSON file")
    elimination.add_argument("--mode", choices=["strict", "weak"], default="strict",
                             help="Dominance criterion (default: %(default)s)")

    dynamics = subparsers.add_parser("dynamics", parents=[flags], help="Round-robin best-response dynamics")
    dynamics.add_argument("game_file", type=Path, help="Game JSON file")
    dynamics.add_argument("--start", required=True, help="Start profile as comma-separated labels, e.g. DT,DT")
    dynamics.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS,
                          help="Maximum player updates (default: %(default)s)")

    arms = subparsers.add_parser("arms-race", parents=[flags], help="N-country weapons / no-weapons game")
    arms.add_argument("--countries", type=int, default=DEFAULT_COUNTRIES,
                      help="Number of countries (default: %(default)s)")
    arms.add_argument("--payoffs", default=_csv(DEFAULT_ARMS_RACE_PAYOFFS),
                      help="t,r,p,s with t > r > p > s (default: %(default)s)")
    arms.add_argument("--start", default=None,
                      help="Run best-response dynamics from this profile, e.g. NW,NW,NW")
    arms.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS,
                      help="Maximum player updates for --start (default: %(default)s)")

    export = subparsers.add_parser("export", parents=[flags], help="Write a built-in scenario as a game file")
    export.add_argument("scenario", choices=list(commands.EXPORT_SCENARIOS))
    export.add_argument("--years", default=_csv(DEFAULT_PD_YEARS),
                        help="pd: both_tell,betrayer,sucker,both_silent (default: %(default)s)")
    export.add_argument("--values", default=None,
                        help="exchange: v_own_a,v_other_a,v_own_b,v_other_b")
    export.add_argument("--countries", type=int, default=DEFAULT_COUNTRIES,
                        help="arms-race: number of countries (default: %(default)s)")
    export.add_argument("--payoffs", default=_csv(DEFAULT_ARMS_RACE_PAYOFFS),
                        help="arms-race: t,r,p,s (default: %(default)s)")
    export.add_argument("--output", "-o", type=Path, default=None,
                        help="Write to this file instead of stdout")

    return parser


def _report_handler(args: argparse.Namespace) -> Callable[[], str]:
    handlers: Dict[str, Callable[[], object]] = {
        "solve": lambda: commands.cmd_solve(args.game_file),
        "pareto": lambda: commands.cmd_pareto(args.game_file),
        "dominance": lambda: commands.cmd_dominance(args.game_file),
        "iesds": lambda: commands.cmd_iesds(args.game_file, args.mode),
        "dynamics": lambda: commands.cmd_dynamics(args.game_file, args.start, args.max_steps),
        "arms-race": lambda: commands.cmd_arms_race(args.countries, args.payoffs, args.start, args.max_steps),
    }
    run = handlers[args.command]

    def render() -> str:
        report = run()
        return render_json(report) if args.json else render_text(report, quiet=args.quiet)

    return render


def _export_handler(args: argparse.Namespace) -> Callable[[], str]:
    def export() -> str:
        text = commands.cmd_export(args.scenario, args.years, args.values, args.countries, args.payoffs)
        if args.output is None:
            return text
        args.output.write_text(text, encoding="utf-8")
        logger.info(f"Wrote {args.scenario} game to {args.output}", extra={"command": "export"})
        return "" if args.quiet else f"wrote {args.output}\n"

    return export


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse flags, run one command and return its exit status"""
    args = build_parser().parse_args(argv)
    setup_logging(level="ERROR" if args.quiet else None)

    handler = _export_handler(args) if args.command == "export" else _report_handler(args)
    return execute(args.command, handler, as_json=args.json)
