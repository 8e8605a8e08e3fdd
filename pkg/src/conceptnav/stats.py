"""Vote distribution arithmetic for questionnaire evaluations.

Each answer is a note from 1 to 5; the summary is each note's share of
the total vote count, as a percentage. Raw shares are exact rationals
(they sum to exactly 100); the reported figures are rounded half-up to
whole points.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping

NOTES = (1, 2, 3, 4, 5)


def _validated(counts: Mapping[int, int]) -> dict[int, int]:
    if set(counts) != set(NOTES):
        raise ValueError(f"vote table must cover notes {list(NOTES)}, got {sorted(counts)}")
    for note, count in counts.items():
        if not isinstance(count, int) or isinstance(count, bool) or count < 0:
            raise ValueError(f"note {note} has an invalid count {count!r}")
    if sum(counts.values()) < 1:
        raise ValueError("vote table is empty")
    return dict(counts)


def raw_percentages(counts: Mapping[int, int]) -> dict[int, Fraction]:
    """Exact percentage of the total for each note; sums to exactly 100."""
    counts = _validated(counts)
    total = sum(counts.values())
    return {note: Fraction(counts[note] * 100, total) for note in NOTES}


def evalstats(counts: Mapping[int, int]) -> dict[int, int]:
    """Percentage per note, rounded half-up to the nearest whole point."""
    return {
        note: int(math.floor(value + Fraction(1, 2)))
        for note, value in raw_percentages(counts).items()
    }
