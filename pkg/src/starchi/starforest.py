"""Star-forest patterns and their textual mini-language.

Grammar (whitespace ignored, case-insensitive)::

    pattern := "empty" | term ("+" term)*
    term    := [count "x"] star
    star    := "star:" k | "K1," k | "K_{1," k "}" | "K1" | "K2"

``K1`` is the star with no leaves, ``K2`` the star with one leaf.
Examples: ``star:3+star:1+star:1``, ``K1,3+2xK2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class StarForest:
    """Disjoint union of stars, stored as sorted leaf counts."""

    stars: tuple[int, ...] = ()

    def __init__(self, stars: Iterable[int] = ()):
        stars = tuple(sorted(int(k) for k in stars))
        if any(k < 0 for k in stars):
            raise PatternError(f"leaf counts must be nonnegative, got {stars}")
        object.__setattr__(self, "stars", stars)

    @property
    def order(self) -> int:
        """Number of vertices of the pattern."""
        return sum(k + 1 for k in self.stars)

    def __len__(self) -> int:
        return len(self.stars)

    def __bool__(self) -> bool:
        return bool(self.stars)

    def without(self, k: int) -> "StarForest":
        """Drop one star with ``k`` leaves."""
        stars = list(self.stars)
        stars.remove(k)
        return StarForest(stars)

    def __str__(self) -> str:
        if not self.stars:
            return "empty"
        return "+".join(f"star:{k}" for k in self.stars)


_TERM = re.compile(
    r"""^(?:(?P<count>\d+)x)?
        (?:star:(?P<star>\d+)
          |k_?\{?1,(?P<kk>\d+)\}?
          |k(?P<small>[12]))$""",
    re.VERBOSE,
)


def parse_pattern(text: str) -> StarForest:
    """Parse the pattern mini-language into a canonical :class:`StarForest`."""
    src = re.sub(r"\s+", "", text).lower()
    if src in ("", "empty"):
        return StarForest()
    stars: list[int] = []
    for term in src.split("+"):
        match = _TERM.match(term)
        if match is None:
            raise PatternError(f"cannot parse pattern term {term!r} in {text!r}")
        count = int(match["count"]) if match["count"] else 1
        if count < 1:
            raise PatternError(f"multiplier must be positive in {term!r}")
        if match["star"] is not None:
            k = int(match["star"])
        elif match["kk"] is not None:
            k = int(match["kk"])
        else:
            k = int(match["small"]) - 1
        stars.extend([k] * count)
    return StarForest(stars)
