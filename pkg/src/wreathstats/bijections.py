"""Constructive bijections between colored sequences, permutations and partitions.

Four maps with explicit inverses:

* the sequence <-> (permutation, partition) correspondence and its two
  conservation laws (max and weight bookkeeping through descents);
* the block form: sequences with prescribed value multiplicities versus
  windows that ascend inside consecutive blocks;
* the order-change remap on a fixed multiplicity class, preserving the
  sequence inversion statistic and color weight across any two
  positive-dominant orders;
* the two-row (bipartite) correspondence sending [top; bottom] to the
  triple (permutation of bottom, top, sorted bottom values).

The two-row membership test follows the printed adjacency conditions: rows
weakly increase, bottom entries weakly increase on top-row plateaus under
the comparison order.  Note the top row of a member is guaranteed
compatible with the inverse permutation only at positive descent
positions; the virtual descent at 0 additionally requires the first column
to avoid a colored bottom entry over a zero top entry, which the adjacency
conditions do not force.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import (
    ColoredEntry,
    ColoredPermutation,
    Composition,
    OrderSpec,
    des_set,
    is_positive_dominant,
    reorder,
)
from .sequences import (
    ColoredSequence,
    Partition,
    arrange,
    composition_of,
    enumerate_partitions,
    enumerate_sequences,
    gamma_of,
    is_compatible,
    lambda_of,
)


def phi(order: OrderSpec, f: ColoredSequence) -> tuple[ColoredPermutation, Partition]:
    """Split a sequence into its sorting permutation and descent-reduced partition."""
    return gamma_of(order, f), lambda_of(order, f)


def phi_inverse(
    order: OrderSpec, g: ColoredPermutation, lam: Partition
) -> ColoredSequence:
    """Rebuild the sequence: value lam_i plus accumulated descents at position pi(i)."""
    if not is_positive_dominant(order):
        raise ValueError("reconstruction requires a positive-dominant order")
    if lam.n != g.n:
        raise ValueError("length mismatch")
    descents = des_set(order, g)
    placed: list[ColoredEntry | None] = [None] * g.n
    seen = 0
    for i in range(1, g.n + 1):
        while seen < len(descents) and descents[seen] <= i - 1:
            seen += 1
        value = lam.parts[i - 1] + seen
        color = g.colors[i - 1]
        # a zero value with positive color cannot arise under a
        # positive-dominant order; it would mean the ordering is broken
        assert not (value == 0 and color > 0), "colored zero reconstructed"
        placed[g.pi[i - 1] - 1] = ColoredEntry(value, color)
    return ColoredSequence(g.r, tuple(placed))  # type: ignore[arg-type]


def is_block_form(order: OrderSpec, g: ColoredPermutation, comp: Composition) -> bool:
    """True iff g splits into comp-sized blocks, block 0 uncolored, each ascending."""
    if comp.n != g.n:
        return False
    window = g.window()
    start = 0
    for m, size in enumerate(comp.parts):
        block = window[start : start + size]
        start += size
        if m == 0 and any(e.color != 0 for e in block):
            return False
        keys = [order.key(e) for e in block]
        if any(a >= b for a, b in zip(keys, keys[1:])):
            return False
    return True


def block_encode(
    order: OrderSpec, g: ColoredPermutation, comp: Composition
) -> ColoredSequence:
    """Entry pi(i)^{c_i} in block m becomes value m with color c_i at position pi(i)."""
    if not is_block_form(order, g, comp):
        raise ValueError(f"window {g} is not in block form for ({comp})")
    placed: list[ColoredEntry | None] = [None] * g.n
    idx = 0
    for m, size in enumerate(comp.parts):
        for _ in range(size):
            placed[g.pi[idx] - 1] = ColoredEntry(m, g.colors[idx])
            idx += 1
    return ColoredSequence(g.r, tuple(placed))  # type: ignore[arg-type]


def block_decode(
    order: OrderSpec, f: ColoredSequence
) -> tuple[ColoredPermutation, Composition]:
    """Sorting permutation plus the value-multiplicity composition of f."""
    return gamma_of(order, f), composition_of(f)


def psi(
    from_order: OrderSpec, to_order: OrderSpec, f: ColoredSequence
) -> ColoredSequence:
    """Remap a sequence across orders, preserving multiplicities, Inv and col.

    The sorting window of f under from_order has its colored entries
    re-ranked under to_order, and the resulting block-form window is decoded
    back into a sequence with the same value multiplicities.
    """
    for order in (from_order, to_order):
        if not is_positive_dominant(order):
            raise ValueError("order-change remap requires positive-dominant orders")
    g = gamma_of(from_order, f)
    comp = composition_of(f)
    colored = {e for e in g.window() if e.color > 0}
    delta = reorder(g, colored, from_order, to_order)
    return block_encode(to_order, delta, comp)


@dataclass(frozen=True)
class BipartitePartition:
    """Two rows of equal length: a partition on top, a colored sequence below."""

    top: Partition
    bottom: ColoredSequence

    def __post_init__(self) -> None:
        if self.top.n != self.bottom.n:
            raise ValueError("row length mismatch")

    @property
    def n(self) -> int:
        return self.top.n

    def __str__(self) -> str:
        return f"[{self.top} ; {self.bottom}]"


def _bipartite_order(bp_r: int, n: int, order: OrderSpec | None) -> OrderSpec:
    return order if order is not None else OrderSpec.ar(bp_r, n)


def is_bipartite_member(bp: BipartitePartition, order: OrderSpec | None = None) -> bool:
    """Adjacent columns satisfy: top strictly grows, or ties with bottom weakly growing."""
    order = _bipartite_order(bp.bottom.r, bp.n, order)
    g, f = bp.top.parts, bp.bottom.entries
    for i in range(bp.n - 1):
        if g[i] < g[i + 1]:
            continue
        if g[i] == g[i + 1] and order.key(f[i]) <= order.key(f[i + 1]):
            continue
        return False
    return True


def bipartite_split(
    bp: BipartitePartition, order: OrderSpec | None = None
) -> tuple[ColoredPermutation, Partition, Partition]:
    """Member -> (sorting permutation of bottom, top row, sorted bottom values)."""
    order = _bipartite_order(bp.bottom.r, bp.n, order)
    if not is_bipartite_member(bp, order):
        raise ValueError(f"{bp} violates the two-row adjacency conditions")
    g = gamma_of(order, bp.bottom)
    values = bp.bottom.values()
    mu = Partition(tuple(values[p - 1] for p in g.pi))
    return g, bp.top, mu


def bipartite_merge(
    g: ColoredPermutation,
    lam: Partition,
    mu: Partition,
    order: OrderSpec | None = None,
) -> BipartitePartition:
    """(permutation, top, bottom values) -> member, inverse to the split.

    mu must be compatible with g (strict growth at every descent including
    the virtual one at 0, which also rules out colored zeros); lam must be
    compatible with the inverse of g at its positive descent positions.  The
    descent of the inverse at 0 is deliberately not required: members may
    carry a colored bottom entry over a zero top entry.
    """
    order = _bipartite_order(g.r, g.n, order)
    if lam.n != g.n or mu.n != g.n:
        raise ValueError("length mismatch")
    if not is_compatible(order, mu, g):
        raise ValueError("bottom values are not compatible with the permutation")
    from .core import inverse as _inverse

    g_inv = _inverse(g)
    lam_parts = (0,) + lam.parts
    for j in des_set(order, g_inv):
        if j == 0:
            continue
        if not lam_parts[j] < lam_parts[j + 1]:
            raise ValueError(
                "top row is not compatible with the inverse permutation"
            )
    f = arrange(mu, g)
    bp = BipartitePartition(lam, f)
    if not is_bipartite_member(bp, order):
        raise ValueError("merged rows violate the two-row adjacency conditions")
    return bp


def bipartite_members(
    r: int, n: int, k1: int, k2: int, order: OrderSpec | None = None
) -> Iterator[BipartitePartition]:
    """All members with top parts <= k1 and bottom values <= k2, by filtering."""
    order = _bipartite_order(r, n, order)
    for top in enumerate_partitions(n, k1):
        for bottom in enumerate_sequences(r, n, k2):
            bp = BipartitePartition(top, bottom)
            if is_bipartite_member(bp, order):
                yield bp
