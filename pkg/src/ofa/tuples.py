"""The ordered input: ``n`` strings of a common length ``m``.

Indices in the public API are 1-based (string ``i`` in ``1..n``, position
``j`` in ``1..m``).  Symbols are the characters of the strings and are only
ever compared for equality.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import AdjacentDuplicate, BlankLine, EmptyInput, EmptyString, RaggedLengths


@dataclass(frozen=True)
class StringTuple:
    strings: tuple[str, ...]
    _codes: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        strings = tuple(self.strings)
        object.__setattr__(self, "strings", strings)
        if not strings:
            raise EmptyInput()
        m = len(strings[0])
        if m == 0:
            raise EmptyString(1)
        for line, s in enumerate(strings, start=1):
            if len(s) != m:
                if not s:
                    raise EmptyString(line)
                raise RaggedLengths(line, m, len(s))
        for i in range(len(strings) - 1):
            if strings[i] == strings[i + 1]:
                raise AdjacentDuplicate(i + 1)

        # padded so that codes[i, j] is S_i[j] with 1-based i, j
        codes = np.zeros((len(strings) + 1, m + 1), dtype=np.int64)
        for i, s in enumerate(strings, start=1):
            codes[i, 1:] = [ord(c) for c in s]
        codes.flags.writeable = False
        object.__setattr__(self, "_codes", codes)

    @property
    def n(self) -> int:
        return len(self.strings)

    @property
    def m(self) -> int:
        return len(self.strings[0])

    @property
    def codes(self) -> np.ndarray:
        """Read-only ``(n+1) x (m+1)`` int array of code points; row/column 0 unused."""
        return self._codes

    def __len__(self):
        return len(self.strings)

    def __getitem__(self, i: int) -> str:
        """``t[i]`` is ``S_i`` (1-based)."""
        if not 1 <= i <= self.n:
            raise IndexError(i)
        return self.strings[i - 1]

    def char_at(self, i: int, j: int) -> str:
        assert 1 <= i <= self.n and 1 <= j <= self.m, (i, j)
        return self.strings[i - 1][j - 1]

    def serialize(self) -> str:
        return "".join(s + "\n" for s in self.strings)


def char_at(t: StringTuple, i: int, j: int) -> str:
    return t.char_at(i, j)


def parse_tuple(text: str) -> StringTuple:
    """Parse one string per line.

    Accepts LF or CRLF line endings, an optional trailing newline and an
    optional leading BOM.  Blank interior lines are rejected.
    """
    if text.startswith("\ufeff"):
        text = text[1:]
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    lines = [ln[:-1] if ln.endswith("\r") else ln for ln in lines]
    if not lines or all(ln == "" for ln in lines):
        raise EmptyInput()
    for lineno, ln in enumerate(lines, start=1):
        if ln == "":
            if lineno == 1 and len(lines) == 1:
                raise EmptyString(1)
            raise BlankLine(lineno)
    return StringTuple(tuple(lines))


def read_tuple(path) -> StringTuple:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_tuple(fh.read())
