"""
Game file reading and writing.

A game file is one JSON object (see ``GameDocument``). Payoffs are nested one
level per player, with the per-player payoff vector innermost, and are stored
in the file's own orientation.
"""
import json
import logging
from pathlib import Path
from typing import Any, List, Sequence, Union

from pydantic import ValidationError as SchemaValidationError

from app.core.errors import NotFoundError, ParseError
from app.models.game import NormalFormGame, new_game, source_payoffs
from app.models.schemas import GameDocument

logger = logging.getLogger(__name__)


def _format_location(location: Sequence[Union[str, int]]) -> str:
    text = ""
    for part in location:
        text += f"[{part}]" if isinstance(part, int) else (f".{part}" if text else str(part))
    return text or "<document>"


def _flatten_payoffs(
    node: Any,
    shape: Sequence[int],
    num_players: int,
    path: str,
    out: List[float],
) -> None:
    """Walk the nested payoff arrays in row-major order, checking every length"""
    if not isinstance(node, list):
        raise ParseError(f"{path}: expected an array", details={"field": path})

    if not shape:
        if len(node) != num_players:
            raise ParseError(
                f"{path}: expected {num_players} payoffs (one per player), got {len(node)}",
                details={"field": path}
            )
        for position, value in enumerate(node):
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ParseError(
                    f"{path}[{position}]: expected a number, got {value!r}",
                    details={"field": f"{path}[{position}]"}
                )
            out.append(float(value))
        return

    if len(node) != shape[0]:
        raise ParseError(
            f"{path}: expected {shape[0]} entries, got {len(node)}",
            details={"field": path}
        )
    for position, child in enumerate(node):
        _flatten_payoffs(child, shape[1:], num_players, f"{path}[{position}]", out)


def document_to_game(document: GameDocument) -> NormalFormGame:
    shape = [len(labels) for labels in document.strategies]
    entries: List[float] = []
    if len(shape) == len(document.players):
        _flatten_payoffs(document.payoffs, shape, len(document.players), "payoffs", entries)
    # new_game reports player/strategy-count mismatches itself
    return new_game(document.players, document.strategies, entries, document.orientation)


def parse_game(text: str, source: str = "<string>") -> NormalFormGame:
    """Parse a JSON game document"""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(
            f"{source}: invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}",
            details={"line": e.lineno, "column": e.colno}
        )
    except RecursionError:
        raise ParseError(f"{source}: JSON nested too deeply")

    try:
        document = GameDocument.model_validate(data)
    except SchemaValidationError as e:
        problems = [f"{_format_location(err['loc'])}: {err['msg']}" for err in e.errors()]
        raise ParseError(
            f"{source}: " + "; ".join(problems),
            details={"fields": [_format_location(err["loc"]) for err in e.errors()]}
        )
    except RecursionError:
        raise ParseError(f"{source}: payoffs nested too deeply")

    return document_to_game(document)


def load_game(path: Union[str, Path]) -> NormalFormGame:
    """Read and validate a game file"""
    path = Path(path)
    if not path.is_file():
        raise NotFoundError(f"Game file not found: {path}", details={"path": str(path)})

    game = parse_game(path.read_text(encoding="utf-8"), source=str(path))
    logger.info(
        f"Loaded game from {path}",
        extra={"game_file": str(path), "extra_data": {"players": game.num_players, "profiles": game.num_profiles}}
    )
    return game


def _plain_number(value: float) -> Union[int, float]:
    value = float(value)
    if value.is_integer():
        return int(value)
    return value


def _plain_numbers(node: Any) -> Any:
    if isinstance(node, list):
        return [_plain_numbers(child) for child in node]
    return _plain_number(node)


def game_to_document(game: NormalFormGame) -> GameDocument:
    """Game file contents for ``game`` (payoffs back in source orientation)"""
    return GameDocument(
        players=list(game.players),
        strategies=[list(labels) for labels in game.strategies],
        orientation=game.orientation,
        payoffs=_plain_numbers(source_payoffs(game).tolist()),
    )


def dump_game(game: NormalFormGame) -> str:
    """Compact single-line JSON in the game file format"""
    return json.dumps(game_to_document(game).model_dump(mode="json"), separators=(",", ":"))


def save_game(game: NormalFormGame, path: Union[str, Path]) -> None:
    path = Path(path)
    path.write_text(dump_game(game) + "\n", encoding="utf-8")
    logger.info(f"Wrote game to {path}", extra={"game_file": str(path)})
