"""Seats: the bridge between the referee loop and a move supplier.

A builtin seat wraps an in-process strategy object.  An external seat
wraps a subprocess speaking UTF-8 line-delimited JSON on stdio:

  engine -> agent   {"type": "start", "payload": {template, player, players}}
  engine -> agent   {"type": "move_request", "payload": {turn_index, attempt,
                      observation, legal_moves?, error?}}
  agent  -> engine  {"type": "move", "payload": {"text": "<one-line move>"}}
  engine -> agent   {"type": "result", "payload": {statuses, raw_scores}}

Misbehavior never raises past the seat API: it surfaces as SeatFailure
carrying the termination status the referee should record.
"""

from __future__ import annotations

import json
import queue
import subprocess
import threading
import time
from abc import ABC, abstractmethod
from typing import Any

from ..core.rules import PuzzleRules, rules_for
from ..core.types import (
    GameState,
    MatchRecord,
    MoveFormatError,
    PuzzleTemplate,
    TerminationStatus,
)
from ..strategies.base import Agent

FORMAT_ATTEMPTS = 5


class SeatFailure(Exception):
    def __init__(self, status: TerminationStatus, detail: str) -> None:
        super().__init__(detail)
        self.status = status
        self.detail = detail


class Seat(ABC):
    label: str = "seat"

    @abstractmethod
    def start(self, template: PuzzleTemplate, player: int) -> None: ...

    @abstractmethod
    def move(self, state: GameState, player: int, rules: PuzzleRules) -> Any: ...

    def finish(self, record: MatchRecord) -> None:
        pass

    def close(self) -> None:
        pass


class BuiltinSeat(Seat):
    def __init__(self, agent: Agent, label: str | None = None) -> None:
        self.agent = agent
        self.label = label if label is not None else agent.name

    def start(self, template: PuzzleTemplate, player: int) -> None:
        self.agent.start(template, player)

    def move(self, state: GameState, player: int, rules: PuzzleRules) -> Any:
        try:
            return self.agent.decide(state, player)
        except Exception as exc:  # a buggy strategy must not sink the run
            raise SeatFailure(
                TerminationStatus.RUNTIME_ERROR, f"strategy raised: {exc!r}"
            ) from exc


class ExternalSeat(Seat):
    """Subprocess agent with per-move wall-clock limits and 5 format tries."""

    def __init__(
        self, command: list[str], label: str, time_limit: float = 30.0
    ) -> None:
        self.command = list(command)
        self.label = label
        self.time_limit = time_limit
        self._proc: subprocess.Popen | None = None
        self._lines: queue.Queue[str | None] = queue.Queue()

    def start(self, template: PuzzleTemplate, player: int) -> None:
        try:
            self._proc = subprocess.Popen(
                self.command,
                stdin=subprocess.PIPE,
                stdout=subprocess.PIPE,
                stderr=subprocess.DEVNULL,
                text=True,
                encoding="utf-8",
                bufsize=1,
            )
        except OSError as exc:
            raise SeatFailure(
                TerminationStatus.SYNTAX_ERROR, f"could not launch: {exc}"
            ) from exc
        self._lines = queue.Queue()
        thread = threading.Thread(target=self._pump, daemon=True)
        thread.start()
        self._send(
            {
                "type": "start",
                "payload": {
                    "template": template.to_json(),
                    "player": player,
                    "players": rules_for(template.puzzle_id).players,
                },
            }
        )

    def _pump(self) -> None:
        proc = self._proc
        assert proc is not None and proc.stdout is not None
        try:
            for line in proc.stdout:
                self._lines.put(line)
        except ValueError:
            pass  # stream closed under us
        self._lines.put(None)

    def _send(self, message: dict) -> None:
        proc = self._proc
        if proc is None or proc.stdin is None or proc.poll() is not None:
            return
        try:
            proc.stdin.write(json.dumps(message, sort_keys=True) + "\n")
            proc.stdin.flush()
        except (BrokenPipeError, OSError):
            pass  # the read side will notice the death

    def _read_line(self, deadline: float) -> str:
        remaining = deadline - time.monotonic()
        if remaining <= 0:
            raise SeatFailure(TerminationStatus.TIMEOUT, "move timed out")
        try:
            line = self._lines.get(timeout=remaining)
        except queue.Empty:
            raise SeatFailure(TerminationStatus.TIMEOUT, "move timed out") from None
        if line is None:
            raise SeatFailure(
                TerminationStatus.RUNTIME_ERROR, "agent process ended mid-match"
            )
        return line

    def move(self, state: GameState, player: int, rules: PuzzleRules) -> Any:
        error: str | None = None
        for attempt in range(1, FORMAT_ATTEMPTS + 1):
            payload: dict[str, Any] = {
                "turn_index": state.turn_index,
                "attempt": attempt,
                "observation": rules.observe(state, player),
            }
            if rules.legal_moves_exhaustive(state):
                payload["legal_moves"] = [
                    rules.move_to_text(m) for m in rules.legal_moves(state)
                ]
            if error is not None:
                payload["error"] = error
            self._send({"type": "move_request", "payload": payload})
            deadline = time.monotonic() + self.time_limit
            line = self._read_line(deadline)
            try:
                message = json.loads(line)
                if message.get("type") != "move":
                    raise MoveFormatError(f"expected a move message, got {line!r}")
                text = message["payload"]["text"]
                if not isinstance(text, str):
                    raise MoveFormatError("move text must be a string")
                return rules.parse_move(text)
            except (json.JSONDecodeError, KeyError, TypeError, MoveFormatError) as exc:
                error = str(exc)
        raise SeatFailure(
            TerminationStatus.NOT_FOLLOW_INSTRUCTION,
            f"no parseable move in {FORMAT_ATTEMPTS} attempts (last: {error})",
        )

    def finish(self, record: MatchRecord) -> None:
        self._send(
            {
                "type": "result",
                "payload": {
                    "statuses": [s.value for s in record.statuses],
                    "raw_scores": list(record.raw_scores),
                },
            }
        )

    def close(self) -> None:
        proc = self._proc
        if proc is None:
            return
        try:
            if proc.stdin is not None:
                proc.stdin.close()
        except OSError:
            pass
        try:
            proc.wait(timeout=2.0)
        except subprocess.TimeoutExpired:
            proc.kill()
            try:
                proc.wait(timeout=2.0)
            except subprocess.TimeoutExpired:
                pass
        self._proc = None
