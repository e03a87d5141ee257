"""Descriptive statistics over coded multiple-choice responses.

Responses arrive pre-aggregated as (choice code, count) pairs. The
summary reports minimum, maximum, median, mean, and the population
standard deviation (divide by n, not n - 1). All statistics are computed
directly from the counts, never by expanding them into a response list.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources

from .display import fmt2
from .errors import EmptyInput, InvalidInput, ParseError


@dataclass(frozen=True)
class CodedResponses:
    """Counts per choice code, codes strictly increasing."""

    counts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        previous = None
        for code, count in self.counts:
            if code < 1:
                raise InvalidInput("choice codes must be positive integers", field="counts")
            if count < 0:
                raise InvalidInput("counts must be non-negative", field="counts")
            if previous is not None and code <= previous:
                raise InvalidInput("choice codes must be strictly increasing",
                                   field="counts")
            previous = code

    @classmethod
    def from_pairs(cls, pairs) -> "CodedResponses":
        """Canonicalize arbitrary (code, count) pairs: merge duplicates, sort."""
        merged: dict[int, int] = {}
        for code, count in pairs:
            merged[int(code)] = merged.get(int(code), 0) + int(count)
        return cls(tuple(sorted(merged.items())))

    @property
    def n(self) -> int:
        return sum(count for _, count in self.counts)


@dataclass(frozen=True)
class SurveySummary:
    minimum: float
    maximum: float
    median: float
    mean: float
    std_dev: float

    _FIELDS = ("minimum", "maximum", "median", "mean", "std_dev")

    def to_dict(self) -> dict:
        out: dict = {name: getattr(self, name) for name in self._FIELDS}
        out["display"] = {name: fmt2(getattr(self, name)) for name in self._FIELDS}
        return out


def summarize(responses: CodedResponses) -> SurveySummary:
    """Five-number summary of the coded responses.

    Median is the middle of the expanded sorted multiset (mean of the two
    middle values for even n); std_dev divides by n.
    """
    present = [(code, count) for code, count in responses.counts if count > 0]
    n = sum(count for _, count in present)
    if n == 0:
        raise EmptyInput("at least one response is required", field="counts")
    mean = sum(code * count for code, count in present) / n
    variance = sum(count * (code - mean) ** 2 for code, count in present) / n
    return SurveySummary(
        minimum=float(present[0][0]),
        maximum=float(present[-1][0]),
        median=_median(present, n),
        mean=mean,
        std_dev=math.sqrt(variance),
    )


def _median(present: list[tuple[int, int]], n: int) -> float:
    lower = _value_at(present, (n + 1) // 2)
    upper = _value_at(present, n // 2 + 1)
    return (lower + upper) / 2


def _value_at(present: list[tuple[int, int]], position: int) -> int:
    """Value at 1-based ``position`` of the expanded sorted multiset."""
    cumulative = 0
    for code, count in present:
        cumulative += count
        if position <= cumulative:
            return code
    raise AssertionError("position past end of counts")


def parse_counts(text: str) -> CodedResponses:
    """Parse ``code:count`` lines (blank lines ignored)."""
    pairs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        code, sep, count = line.partition(":")
        if not sep:
            raise ParseError(f"line {lineno}: expected code:count", field="counts")
        try:
            pairs.append((int(code), int(count)))
        except ValueError:
            raise ParseError(f"line {lineno}: expected integer code:count",
                             field="counts") from None
    return CodedResponses.from_pairs(pairs)


def packaged_counts(table: str) -> CodedResponses:
    """Shipped fixture by name, e.g. ``packaged_counts("table1")``."""
    text = (resources.files(__package__) / "data" / "surveys" / f"{table}.counts"
            ).read_text("utf-8")
    return parse_counts(text)
