"""Colored integer sequences, partitions, and bounded enumeration.

A colored sequence is a word f = (f_1^{c_1}, ..., f_n^{c_n}) of colored
nonnegative integers (zero entries uncolored).  Sorting its positions by
value, ties broken ascending under a chosen order, yields the canonical
colored permutation of f; subtracting accumulated descents from the sorted
values yields its partition part.  Enumerators here are exhaustive,
duplicate-free and deterministic so they can serve as brute-force oracles.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import (
    ColoredEntry,
    ColoredPermutation,
    Composition,
    OrderSpec,
    des_set,
    format_entries,
    is_positive_dominant,
)


@dataclass(frozen=True)
class ColoredSequence:
    """An element of the colored nonnegative words of length n."""

    r: int
    entries: tuple[ColoredEntry, ...]

    def __post_init__(self) -> None:
        if any(e.color >= self.r for e in self.entries):
            raise ValueError("entry color out of range")

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[int, int]], r: int) -> "ColoredSequence":
        return cls(r, tuple(ColoredEntry(v, c) for v, c in pairs))

    def values(self) -> tuple[int, ...]:
        return tuple(e.value for e in self.entries)

    def colors(self) -> tuple[int, ...]:
        return tuple(e.color for e in self.entries)

    def __str__(self) -> str:
        return format_entries(self.entries)


def seq_max(f: ColoredSequence) -> int:
    return max(f.values(), default=0)


def seq_weight(f: ColoredSequence) -> int:
    return sum(f.values())


def seq_col(f: ColoredSequence) -> int:
    return sum(f.colors())


@dataclass(frozen=True)
class Partition:
    """Weakly increasing nonnegative parts, fixed length."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(p < 0 for p in self.parts):
            raise ValueError(f"negative part in {self.parts}")
        if any(a > b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"{self.parts} is not weakly increasing")

    @property
    def n(self) -> int:
        return len(self.parts)

    def weight(self) -> int:
        return sum(self.parts)

    def max_part(self) -> int:
        return max(self.parts, default=0)

    def __str__(self) -> str:
        return " ".join(str(p) for p in self.parts)


def gamma_of(order: OrderSpec, f: ColoredSequence) -> ColoredPermutation:
    """Sort positions by value, breaking ties ascending under the order.

    Position i enters the window as the colored entry i^{c_i} where c_i is
    the color of f_i.
    """
    classes: dict[int, list[ColoredEntry]] = {}
    for i, e in enumerate(f.entries, start=1):
        classes.setdefault(e.value, []).append(ColoredEntry(i, e.color))
    window: list[ColoredEntry] = []
    for value in sorted(classes):
        window.extend(sorted(classes[value], key=order.key))
    return ColoredPermutation.from_window(window, f.r)


def lambda_of(order: OrderSpec, f: ColoredSequence) -> Partition:
    """Sorted values with accumulated descents removed; needs positive dominance."""
    if not is_positive_dominant(order):
        raise ValueError("partition extraction requires a positive-dominant order")
    g = gamma_of(order, f)
    descents = des_set(order, g)
    values = f.values()
    parts = []
    seen = 0
    for i, p in enumerate(g.pi, start=1):
        while seen < len(descents) and descents[seen] <= i - 1:
            seen += 1
        parts.append(values[p - 1] - seen)
    return Partition(tuple(parts))


def arrange(lam: Partition | Sequence[int], g: ColoredPermutation) -> ColoredSequence:
    """Place value lam_i with window color c_i at position pi(i).

    Zero values are canonicalized to color 0; a colored zero request is
    surfaced as a warning since it cannot round-trip.
    """
    parts = lam.parts if isinstance(lam, Partition) else tuple(lam)
    if len(parts) != g.n:
        raise ValueError("length mismatch between partition and permutation")
    placed: list[ColoredEntry | None] = [None] * g.n
    for i in range(g.n):
        value, color = parts[i], g.colors[i]
        if value == 0 and color > 0:
            warnings.warn(
                f"zero value at position {g.pi[i]} loses its color {color}",
                stacklevel=2,
            )
            color = 0
        placed[g.pi[i] - 1] = ColoredEntry(value, color)
    assert all(e is not None for e in placed)
    return ColoredSequence(g.r, tuple(placed))  # type: ignore[arg-type]


def is_compatible(order: OrderSpec, lam: Partition, g: ColoredPermutation) -> bool:
    """True iff lam strictly increases at every descent of g (lam_0 = 0)."""
    parts = (0,) + lam.parts
    return all(parts[j] < parts[j + 1] for j in des_set(order, g))


def composition_of(f: ColoredSequence) -> Composition:
    """Value multiplicities (n_0, ..., n_k) with k = max(f)."""
    if f.n == 0:
        return Composition(())
    top = seq_max(f)
    counts = [0] * (top + 1)
    for v in f.values():
        counts[v] += 1
    return Composition(tuple(counts))


def _entry_choices(r: int, max_value: int) -> list[ColoredEntry]:
    choices = [ColoredEntry(0)]
    for v in range(1, max_value + 1):
        for c in range(r):
            choices.append(ColoredEntry(v, c))
    return choices


def enumerate_sequences(r: int, n: int, max_value: int) -> Iterator[ColoredSequence]:
    """All sequences with values <= max_value, lexicographic in (value, color)."""
    if max_value < 0:
        raise ValueError("max_value must be >= 0")
    choices = _entry_choices(r, max_value)
    def rec(prefix: list[ColoredEntry]) -> Iterator[ColoredSequence]:
        if len(prefix) == n:
            yield ColoredSequence(r, tuple(prefix))
            return
        for e in choices:
            prefix.append(e)
            yield from rec(prefix)
            prefix.pop()
    yield from rec([])


def _distinct_value_words(values: list[int]) -> Iterator[tuple[int, ...]]:
    """Distinct rearrangements of a value multiset, lexicographic."""
    counts = sorted(set(values))
    remaining = {v: values.count(v) for v in counts}
    word: list[int] = []
    n = len(values)

    def rec() -> Iterator[tuple[int, ...]]:
        if len(word) == n:
            yield tuple(word)
            return
        for v in counts:
            if remaining[v]:
                remaining[v] -= 1
                word.append(v)
                yield from rec()
                word.pop()
                remaining[v] += 1

    yield from rec()


def enumerate_by_composition(r: int, comp: Composition) -> Iterator[ColoredSequence]:
    """All sequences whose value-j multiplicity is comp.parts[j], colors free on positives."""
    values: list[int] = []
    for v, mult in enumerate(comp.parts):
        values.extend([v] * mult)
    for word in _distinct_value_words(values):
        positive = [i for i, v in enumerate(word) if v > 0]
        def rec(idx: int, colors: list[int]) -> Iterator[ColoredSequence]:
            if idx == len(positive):
                pairs = [(v, 0) for v in word]
                for pos, c in zip(positive, colors):
                    pairs[pos] = (word[pos], c)
                yield ColoredSequence.from_pairs(pairs, r)
                return
            for c in range(r):
                colors.append(c)
                yield from rec(idx + 1, colors)
                colors.pop()
        yield from rec(0, [])


def enumerate_group(r: int, n: int) -> Iterator[ColoredPermutation]:
    """All r^n * n! colored permutations, deterministic order."""
    import itertools

    for pi in itertools.permutations(range(1, n + 1)):
        for colors in itertools.product(range(r), repeat=n):
            yield ColoredPermutation(r, pi, colors)


def enumerate_partitions(n: int, max_part: int) -> Iterator[Partition]:
    """Weakly increasing length-n tuples with parts <= max_part."""
    def rec(prefix: list[int], low: int) -> Iterator[Partition]:
        if len(prefix) == n:
            yield Partition(tuple(prefix))
            return
        for v in range(low, max_part + 1):
            prefix.append(v)
            yield from rec(prefix, v)
            prefix.pop()
    yield from rec([], 0)


def enumerate_compositions(n: int) -> Iterator[Composition]:
    """Canonical compositions of n: parts >= 0, last >= 1, at most n+1 parts."""
    if n == 0:
        yield Composition(())
        return
    def rec(prefix: list[int], left: int) -> Iterator[Composition]:
        if prefix and prefix[-1] >= 1 and left == 0:
            yield Composition(tuple(prefix))
        if len(prefix) == n + 1:
            return
        for part in range(left + 1):
            prefix.append(part)
            if left - part > 0 or part >= 1:
                yield from rec(prefix, left - part)
            prefix.pop()
    yield from rec([], n)
