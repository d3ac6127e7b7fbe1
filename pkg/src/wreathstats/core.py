"""Colored entries, total orders on them, and colored permutations with their statistics.

A colored entry is a value j carrying a color c, written ``j^c`` (``j^0`` is
written plainly as ``j``).  The ground set for size n with r colors is

    C(r, n) = {j^c : j in [1,n], c in [0,r-1]} + {0}

i.e. value 0 exists only uncolored.  Total orders on the ground set come in
four named flavors (adin-roichman, base-oriented, color-ascending, signed)
plus fully custom rank tables, and a predicate singles out the
positive-dominant ones: orders keeping 0 < 1 < ... < n with every uncolored
value above every colored entry.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

AR = "ar"
BZ = "bz"
ST = "st"
REINER = "reiner"
CUSTOM = "custom"

_KINDS = (AR, BZ, ST, REINER, CUSTOM)

LESS = -1
EQUAL = 0
GREATER = 1


@dataclass(frozen=True, order=False)
class ColoredEntry:
    """A nonnegative value with a color; value 0 is always uncolored."""

    value: int
    color: int = 0

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValueError(f"negative value {self.value}")
        if self.color < 0:
            raise ValueError(f"negative color {self.color}")
        if self.value == 0 and self.color != 0:
            raise ValueError("value 0 must carry color 0")

    def __str__(self) -> str:
        if self.color == 0:
            return str(self.value)
        return f"{self.value}^{self.color}"


def parse_entry(token: str) -> ColoredEntry:
    """Parse window-notation tokens like ``4``, ``0`` or ``3^1``."""
    token = token.strip()
    if "^" in token:
        value_text, _, color_text = token.partition("^")
        try:
            value, color = int(value_text), int(color_text)
        except ValueError:
            raise ValueError(f"bad entry token {token!r}") from None
        if value == 0:
            raise ValueError("value 0 never carries an explicit color")
        return ColoredEntry(value, color)
    try:
        return ColoredEntry(int(token))
    except ValueError:
        raise ValueError(f"bad entry token {token!r}") from None


def parse_entries(text: str) -> tuple[ColoredEntry, ...]:
    """Parse a whitespace-separated window like ``"3^1 1^2 2^2"``."""
    return tuple(parse_entry(tok) for tok in text.split())


def format_entries(entries: Iterable[ColoredEntry]) -> str:
    return " ".join(str(e) for e in entries)


def ground_set(r: int, n: int) -> tuple[ColoredEntry, ...]:
    """All n*r + 1 colored entries available at size n with r colors."""
    if r < 1 or n < 0:
        raise ValueError(f"bad ambient ({r}, {n})")
    entries = [ColoredEntry(0)]
    entries.extend(ColoredEntry(j) for j in range(1, n + 1))
    for c in range(1, r):
        entries.extend(ColoredEntry(j, c) for j in range(1, n + 1))
    return tuple(entries)


@dataclass(frozen=True)
class OrderSpec:
    """A strict total order on the colored entries of C(r, n).

    Named kinds use closed-form sort keys; ``custom`` carries an explicit
    ascending listing of the whole ground set.  The ``ar`` kind extends to
    colored naturals of any value (needed when comparing unbounded sequence
    entries); all other kinds reject values above n.
    """

    r: int
    n: int
    kind: str
    entries: tuple[ColoredEntry, ...] | None = None

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.r < 1 or self.n < 0:
            raise ValueError(f"bad ambient ({self.r}, {self.n})")
        if self.kind == REINER and self.r != 2:
            raise ValueError("signed order requires r = 2")
        if self.kind == CUSTOM:
            if self.entries is None:
                raise ValueError("custom order needs an entry list")
            if sorted(self.entries, key=lambda e: (e.value, e.color)) != sorted(
                ground_set(self.r, self.n), key=lambda e: (e.value, e.color)
            ):
                raise ValueError(
                    f"custom list is not a permutation of the ground set C({self.r},{self.n})"
                )
        elif self.entries is not None:
            raise ValueError("entry list only allowed for custom orders")

    @classmethod
    def ar(cls, r: int, n: int) -> "OrderSpec":
        return cls(r, n, AR)

    @classmethod
    def bz(cls, r: int, n: int) -> "OrderSpec":
        return cls(r, n, BZ)

    @classmethod
    def st(cls, r: int, n: int) -> "OrderSpec":
        return cls(r, n, ST)

    @classmethod
    def reiner(cls, n: int) -> "OrderSpec":
        return cls(2, n, REINER)

    @classmethod
    def custom(cls, r: int, n: int, entries: Sequence[ColoredEntry]) -> "OrderSpec":
        return cls(r, n, CUSTOM, tuple(entries))

    def ascending(self) -> tuple[ColoredEntry, ...]:
        """The whole ground set listed ascending under this order."""
        if self.kind == CUSTOM:
            assert self.entries is not None
            return self.entries
        return tuple(sorted(ground_set(self.r, self.n), key=self.key))

    def key(self, e: ColoredEntry):
        """Sort key; smaller key means smaller entry."""
        if e.color >= self.r:
            raise ValueError(f"entry {e} has color >= r = {self.r}")
        if self.kind == AR:
            # color blocks descending by color, values ascending inside;
            # works for arbitrary values, which the ar kind must support.
            return (-e.color, e.value)
        if e.value > self.n:
            raise ValueError(f"entry {e} outside ambient n = {self.n}")
        if self.kind == BZ:
            if e.color > 0:
                return (0, -e.value, -e.color)
            return (1, e.value, 0)
        if self.kind == ST:
            return (e.color, e.value)
        if self.kind == REINER:
            # j^1 is read as -j; the ground set's 0 has no slot in the signed
            # listing, so it sits below everything.
            if e.value == 0:
                return (0, 0)
            if e.color == 1:
                return (1, -e.value)
            return (2, e.value)
        try:
            return (_rank_table(self)[e],)
        except KeyError:
            raise ValueError(f"entry {e} not listed by the custom order") from None

    def __str__(self) -> str:
        if self.kind == CUSTOM:
            return f"custom[{format_entries(self.entries or ())}]"
        return self.kind


@lru_cache(maxsize=None)
def _rank_table(order: OrderSpec) -> dict[ColoredEntry, int]:
    assert order.entries is not None
    return {e: i for i, e in enumerate(order.entries)}


def compare(order: OrderSpec, a: ColoredEntry, b: ColoredEntry) -> int:
    """Strict comparison under the order: -1, 0 or 1."""
    if a == b:
        return EQUAL
    ka, kb = order.key(a), order.key(b)
    return LESS if ka < kb else GREATER


@lru_cache(maxsize=None)
def is_positive_dominant(order: OrderSpec) -> bool:
    """True iff 0 < 1 < ... < n and every uncolored value beats every colored entry."""
    key = order.key
    for j in range(order.n):
        if not key(ColoredEntry(j)) < key(ColoredEntry(j + 1)):
            return False
    colored_keys = [
        key(ColoredEntry(j, c))
        for c in range(1, order.r)
        for j in range(1, order.n + 1)
    ]
    if not colored_keys:
        return True
    top_colored = max(colored_keys)
    return key(ColoredEntry(0)) > top_colored


def random_positive_dominant(r: int, n: int, seed: int) -> OrderSpec:
    """A custom positive-dominant order with the colored block shuffled by seed."""
    rng = random.Random(seed)
    colored = [ColoredEntry(j, c) for c in range(1, r) for j in range(1, n + 1)]
    rng.shuffle(colored)
    listing = colored + [ColoredEntry(j) for j in range(0, n + 1)]
    return OrderSpec.custom(r, n, listing)


def swap_entries(order: OrderSpec, a: ColoredEntry, b: ColoredEntry) -> OrderSpec:
    """A custom order equal to ``order`` with the slots of a and b exchanged."""
    listing = list(order.ascending())
    ia, ib = listing.index(a), listing.index(b)
    listing[ia], listing[ib] = listing[ib], listing[ia]
    return OrderSpec.custom(order.r, order.n, listing)


def order_to_json(order: OrderSpec) -> str:
    """Serialize the ascending listing as a JSON array of [value, color] pairs."""
    return json.dumps([[e.value, e.color] for e in order.ascending()])


def order_from_json(text: str, r: int | None = None, n: int | None = None) -> OrderSpec:
    """Load a custom order from its JSON listing, validating completeness."""
    raw = json.loads(text)
    entries = tuple(ColoredEntry(int(v), int(c)) for v, c in raw)
    max_value = max((e.value for e in entries), default=0)
    max_color = max((e.color for e in entries), default=0)
    r = r if r is not None else max_color + 1
    n = n if n is not None else max_value
    return OrderSpec.custom(r, n, entries)


@dataclass(frozen=True)
class ColoredPermutation:
    """Window notation for an element of the r-colored symmetric group on [n]."""

    r: int
    pi: tuple[int, ...]
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.pi)
        if sorted(self.pi) != list(range(1, n + 1)):
            raise ValueError(f"{self.pi} is not a permutation of [1..{n}]")
        if len(self.colors) != n:
            raise ValueError("color vector length mismatch")
        if any(c < 0 or c >= self.r for c in self.colors):
            raise ValueError(f"colors {self.colors} out of range [0, {self.r - 1}]")

    @property
    def n(self) -> int:
        return len(self.pi)

    @classmethod
    def from_window(cls, entries: Sequence[ColoredEntry], r: int) -> "ColoredPermutation":
        return cls(r, tuple(e.value for e in entries), tuple(e.color for e in entries))

    @classmethod
    def identity(cls, r: int, n: int) -> "ColoredPermutation":
        return cls(r, tuple(range(1, n + 1)), (0,) * n)

    def window(self) -> tuple[ColoredEntry, ...]:
        return tuple(ColoredEntry(v, c) for v, c in zip(self.pi, self.colors))

    def entry(self, i: int) -> ColoredEntry:
        """The i-th window entry, 1-based; position 0 is the virtual 0."""
        if i == 0:
            return ColoredEntry(0)
        return ColoredEntry(self.pi[i - 1], self.colors[i - 1])

    def __str__(self) -> str:
        return format_entries(self.window())


def inverse(g: ColoredPermutation) -> ColoredPermutation:
    """The inverse window: value i sits where g sends it, keeping its color."""
    n = g.n
    pos = [0] * (n + 1)
    for i, v in enumerate(g.pi, start=1):
        pos[v] = i
    pi_inv = tuple(pos[i] for i in range(1, n + 1))
    colors_inv = tuple(g.colors[p - 1] for p in pi_inv)
    return ColoredPermutation(g.r, pi_inv, colors_inv)


def des_set(order: OrderSpec, g: ColoredPermutation) -> tuple[int, ...]:
    """Descent positions j in [0, n-1] with g(j) > g(j+1), reading g(0) = 0."""
    key = order.key
    keys = [key(ColoredEntry(0))] + [key(e) for e in g.window()]
    return tuple(j for j in range(g.n) if keys[j] > keys[j + 1])


def des(order: OrderSpec, g: ColoredPermutation) -> int:
    return len(des_set(order, g))


def maj(order: OrderSpec, g: ColoredPermutation) -> int:
    return sum(des_set(order, g))


def inv(order: OrderSpec, g: ColoredPermutation) -> int:
    """Number of window positions i < j with g(i) > g(j)."""
    keys = [order.key(e) for e in g.window()]
    n = len(keys)
    return sum(
        1 for i in range(n) for j in range(i + 1, n) if keys[i] > keys[j]
    )


def col(g: ColoredPermutation) -> int:
    return sum(g.colors)


def length(order: OrderSpec, g: ColoredPermutation) -> int:
    """inv plus, over colored positions, the window value plus color minus one."""
    extra = sum(v + c - 1 for v, c in zip(g.pi, g.colors) if c > 0)
    return inv(order, g) + extra


def subset_inv(order: OrderSpec, g: ColoredPermutation, B: Iterable[ColoredEntry]) -> int:
    """Inversion pairs of g both of whose entries lie in B."""
    wanted = set(B)
    keyed = [
        order.key(e) for e in g.window() if e in wanted
    ]
    m = len(keyed)
    return sum(
        1 for i in range(m) for j in range(i + 1, m) if keyed[i] > keyed[j]
    )


def rank(order: OrderSpec, S: Iterable[ColoredEntry], a: ColoredEntry) -> int:
    """1-based position of a in S listed ascending under the order."""
    listing = sorted(set(S), key=order.key)
    try:
        return listing.index(a) + 1
    except ValueError:
        raise ValueError(f"{a} does not belong to the given set") from None


def reorder(
    g: ColoredPermutation,
    B: Iterable[ColoredEntry],
    from_order: OrderSpec,
    to_order: OrderSpec,
) -> ColoredPermutation:
    """Replace each B-entry so its rank under to_order equals its old rank under from_order.

    Entries of B not occurring in g are ignored; positions outside B keep
    their entries, so subset inversion counts carry over between the orders.
    """
    present = set(B) & set(g.window())
    by_from = sorted(present, key=from_order.key)
    by_to = sorted(present, key=to_order.key)
    from_rank = {e: i for i, e in enumerate(by_from)}
    new_window = [
        by_to[from_rank[e]] if e in present else e for e in g.window()
    ]
    return ColoredPermutation.from_window(new_window, g.r)


@dataclass(frozen=True)
class Composition:
    """Value multiplicities (n_0, ..., n_k); parts sum to n, last part >= 1."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(p < 0 for p in self.parts):
            raise ValueError(f"negative part in {self.parts}")
        if self.parts and self.parts[-1] < 1:
            raise ValueError("canonical compositions end with a positive part")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)
