"""Word syntax: dot-separated letters ``s<i>`` or ``t<i>`` (1-based) with an
optional ``^-1`` suffix, e.g. ``"t1.t3^-1.s2"``."""
from __future__ import annotations

import re

_LETTER = re.compile(r"([st])(\d+)(\^-1)?$")


class WordSyntaxError(ValueError):
    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


def parse_word(text: str, n_simple: int | None = None, n_reflections: int | None = None
               ) -> list[tuple[str, int, int]]:
    """Parse into ``(kind, 0-based index, sign)`` triples.

    >>> parse_word("t1.s2^-1")
    [('t', 0, 1), ('s', 1, -1)]
    """
    s = text.strip()
    if s in ("", "1", "e"):
        return []
    out = []
    pos = 0
    for token in s.split("."):
        m = _LETTER.match(token)
        if m is None:
            raise WordSyntaxError(f"bad letter {token!r} at position {pos}", pos)
        kind, i = m.group(1), int(m.group(2))
        bound = n_simple if kind == "s" else n_reflections
        if i < 1 or (bound is not None and i > bound):
            raise WordSyntaxError(f"letter {token!r} at position {pos} out of range", pos)
        out.append((kind, i - 1, -1 if m.group(3) else 1))
        pos += len(token) + 1
    return out


def format_word(letters) -> str:
    return ".".join(f"{k}{i + 1}" + ("^-1" if e < 0 else "") for k, i, e in letters) or "1"


def format_t_word(indices) -> str:
    """``(0, 2)`` -> ``"t1.t3"``; the empty word prints as ``"1"``."""
    return ".".join(f"t{i + 1}" for i in indices) or "1"


def format_s_word(indices) -> str:
    return ".".join(f"s{i + 1}" for i in indices) or "1"
