"""Counter-based deterministic randomness.

Every random draw in the engine comes from a SHA-256 stream in counter
mode, keyed by a label string such as ``ppx/card_nim/easy/7/gen``.  The
stream is a pure function of the key, so instances, hidden state, and
agent decisions reproduce bit-exactly across platforms and releases.
Derived streams extend the key instead of sharing mutable state.
"""

from __future__ import annotations

import hashlib
from typing import Sequence, TypeVar

T = TypeVar("T")

_FLOAT_DENOM = float(1 << 53)


class DeterministicRng:
    """SHA-256 counter-mode stream with the usual sampling helpers."""

    __slots__ = ("key", "_counter", "_buffer")

    def __init__(self, key: str) -> None:
        self.key = key
        self._counter = 0
        self._buffer: list[int] = []

    def spawn(self, label: str) -> "DeterministicRng":
        """Independent stream whose key extends this one."""
        return DeterministicRng(f"{self.key}/{label}")

    def _next_word(self) -> int:
        if not self._buffer:
            digest = hashlib.sha256(
                f"{self.key}#{self._counter}".encode("utf-8")
            ).digest()
            self._counter += 1
            self._buffer = [
                int.from_bytes(digest[i : i + 8], "big") for i in (24, 16, 8, 0)
            ]
        return self._buffer.pop()

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 bits of precision."""
        return (self._next_word() >> 11) / _FLOAT_DENOM

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n). Rejection sampling keeps it unbiased."""
        if n <= 0:
            raise ValueError("randrange() bound must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            word = self._next_word()
            if word < limit:
                return word % n

    def randint(self, a: int, b: int) -> int:
        """Uniform integer in [a, b], endpoints included."""
        if b < a:
            raise ValueError("randint() empty range")
        return a + self.randrange(b - a + 1)

    def choice(self, seq: Sequence[T]) -> T:
        if not seq:
            raise IndexError("choice() from empty sequence")
        return seq[self.randrange(len(seq))]

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, seq: Sequence[T], k: int) -> list[T]:
        """k distinct elements, order random."""
        if k < 0 or k > len(seq):
            raise ValueError("sample() larger than population")
        pool = list(seq)
        self.shuffle(pool)
        return pool[:k]
