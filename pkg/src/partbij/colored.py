"""Colored partitions: parts tagged with colors from a palette 1..t.

Entries are kept in the canonical order (part descending, then color
descending), which makes equality of colored partitions decidable while
satisfying the rule that colors weakly decrease across equal parts.
"""

from itertools import combinations_with_replacement, groupby
from typing import Iterable, Iterator, Optional, Tuple

from .partitions import Partition, enumerate_partitions


class ColoredPartitionError(ValueError):
    """Invalid colored partition data."""


class ColoredPartition:
    """A partition whose parts carry colors in 1..t.

    entries: tuple of (part, color) pairs, canonically ordered.
    t: palette size.
    """

    __slots__ = ("entries", "t")

    def __init__(self, entries: Iterable[Tuple[int, int]], t: int):
        if t < 1:
            raise ColoredPartitionError(f"palette size must be >= 1, got {t}")
        pairs = tuple(sorted(((int(p), int(c)) for p, c in entries), reverse=True))
        for part, color in pairs:
            if part < 1:
                raise ColoredPartitionError(f"part must be positive: {part}")
            if not 1 <= color <= t:
                raise ColoredPartitionError(f"color {color} outside 1..{t}")
        self.entries = pairs
        self.t = t

    def size(self) -> int:
        return sum(p for p, _ in self.entries)

    def length(self) -> int:
        return len(self.entries)

    def parts(self) -> Partition:
        return Partition(p for p, _ in self.entries)

    def part(self, i: int) -> int:
        """1-based part access; 0 beyond the last entry."""
        if i < 1:
            raise IndexError(f"part index must be >= 1, got {i}")
        return self.entries[i - 1][0] if i <= len(self.entries) else 0

    def color(self, i: int) -> int:
        """1-based color access."""
        if not 1 <= i <= len(self.entries):
            raise IndexError(f"no entry at index {i}")
        return self.entries[i - 1][1]

    def color_counts(self) -> tuple:
        """How many entries carry each color, indexed 1..t."""
        counts = [0] * self.t
        for _, c in self.entries:
            counts[c - 1] += 1
        return tuple(counts)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ColoredPartition)
            and self.entries == other.entries
            and self.t == other.t
        )

    def __hash__(self) -> int:
        return hash((self.entries, self.t))

    def __repr__(self) -> str:
        body = ", ".join(f"{p}^{c}" for p, c in self.entries)
        return f"ColoredPartition({body}; t={self.t})"


def enumerate_colored(
    n: int,
    t: int,
    num_parts: Optional[int] = None,
    color_counts: Optional[Tuple[int, ...]] = None,
) -> Iterator[ColoredPartition]:
    """Yield every canonical t-colored partition of n exactly once.

    num_parts restricts to exactly that many entries; color_counts to an
    exact per-color count vector of length t.
    """
    if n < 0:
        raise ValueError(f"target size must be nonnegative, got {n}")
    if t < 1:
        raise ValueError(f"palette size must be >= 1, got {t}")
    if color_counts is not None and len(color_counts) != t:
        raise ValueError("color_counts must have one entry per color")

    palette = tuple(range(t, 0, -1))
    for shape in enumerate_partitions(n, max_length=num_parts):
        if num_parts is not None and len(shape) != num_parts:
            continue
        runs = [(value, sum(1 for _ in grp)) for value, grp in groupby(shape)]
        choices = [
            list(combinations_with_replacement(palette, mult)) for _, mult in runs
        ]

        def assign(run_idx, acc):
            if run_idx == len(runs):
                yield tuple(acc)
                return
            value = runs[run_idx][0]
            for colors in choices[run_idx]:
                ext = acc + [(value, c) for c in colors]
                yield from assign(run_idx + 1, ext)

        for entries in assign(0, []):
            if color_counts is not None:
                counts = [0] * t
                for _, c in entries:
                    counts[c - 1] += 1
                if tuple(counts) != tuple(color_counts):
                    continue
            yield ColoredPartition(entries, t)
