import itertools

import pytest

from wreathstats.bijections import (
    BipartitePartition,
    bipartite_members,
    bipartite_merge,
    bipartite_split,
    block_decode,
    block_encode,
    is_bipartite_member,
    is_block_form,
    phi,
    phi_inverse,
    psi,
)
from wreathstats.core import (
    ColoredEntry,
    ColoredPermutation,
    Composition,
    OrderSpec,
    col,
    des,
    des_set,
    inverse,
    length,
    maj,
    parse_entries,
    random_positive_dominant,
)
from wreathstats.sequences import (
    ColoredSequence,
    Partition,
    enumerate_by_composition,
    enumerate_compositions,
    enumerate_group,
    enumerate_partitions,
    enumerate_sequences,
    gamma_of,
    is_compatible,
    seq_col,
    seq_max,
    seq_weight,
)

E = ColoredEntry


def seq(text, r):
    return ColoredSequence(r, parse_entries(text))


def window(text, r):
    return ColoredPermutation.from_window(parse_entries(text), r)


class TestPhi:
    def test_example_39(self):
        f = seq("4^2 3^1 0 2^2 4^1 3^1", 3)
        gq, lq = phi(OrderSpec.ar(3, 6), f)
        assert str(gq) == "3 4^2 2^1 6^1 1^2 5^1"
        assert lq.parts == (0, 1, 2, 2, 2, 2)
        gp, lp = phi(OrderSpec.bz(3, 6), f)
        assert str(gp) == "3 4^2 6^1 2^1 5^1 1^2"
        assert lp.parts == (0, 1, 1, 1, 1, 1)
        # conservation: 16 = 9 + 6*2 - 5 and 16 = 5 + 6*3 - 7
        assert seq_weight(f) == lq.weight() + 6 * 2 - 5
        assert seq_weight(f) == lp.weight() + 6 * 3 - 7

    def test_roundtrip_grid(self):
        for r, n in [(1, 3), (2, 3), (3, 2)]:
            orders = [
                OrderSpec.ar(r, n),
                OrderSpec.bz(r, n),
                random_positive_dominant(r, n, 3),
            ]
            for order in orders:
                for f in enumerate_sequences(r, n, 3):
                    g, lam = phi(order, f)
                    assert phi_inverse(order, g, lam) == f
                    assert seq_max(f) == lam.max_part() + des(order, g)
                    assert seq_weight(f) == lam.weight() + n * des(order, g) - maj(
                        order, g
                    )

    def test_inverse_direction_total(self):
        order = OrderSpec.ar(2, 3)
        for g in enumerate_group(2, 3):
            for lam in enumerate_partitions(3, 2):
                f = phi_inverse(order, g, lam)
                g2, lam2 = phi(order, f)
                assert (g2, lam2) == (g, lam)

    def test_rejects_non_dominant(self):
        with pytest.raises(ValueError):
            phi_inverse(
                OrderSpec.st(2, 2),
                ColoredPermutation.identity(2, 2),
                Partition((0, 0)),
            )


class TestBlockBijection:
    def test_example_318(self):
        q = OrderSpec.ar(3, 6)
        comp = Composition((2, 2, 2))
        g = window("3 6 1^2 4^1 5^1 2", 3)
        f = block_encode(q, g, comp)
        assert str(f) == "1^2 2 0 1^1 2^1 0"
        assert block_decode(q, f) == (g, comp)

    def test_example_321_bz(self):
        p = OrderSpec.bz(3, 6)
        comp = Composition((2, 2, 2))
        g = window("3 6 5^1 4^1 1^2 2", 3)
        assert str(block_encode(p, g, comp)) == "2^2 2 0 1^1 1^1 0"

    def test_all_zero_composition(self):
        q = OrderSpec.ar(3, 4)
        g = ColoredPermutation.identity(3, 4)
        f = block_encode(q, g, Composition((4,)))
        assert f.values() == (0, 0, 0, 0)

    def test_rejects_bad_block_form(self):
        q = OrderSpec.ar(3, 6)
        comp = Composition((2, 2, 2))
        with pytest.raises(ValueError):
            block_encode(q, window("6 3 1^2 4^1 5^1 2", 3), comp)  # block 0 not ascending
        with pytest.raises(ValueError):
            block_encode(q, window("3 6^1 1^2 4^1 5 2", 3), comp)  # block 0 colored

    def test_bijection_both_ways_exhaustive(self):
        for r in (1, 2):
            for n in range(0, 4):
                for comp in enumerate_compositions(n):
                    for order in (OrderSpec.ar(r, n), OrderSpec.bz(r, n)):
                        fiber = list(enumerate_by_composition(r, comp))
                        images = set()
                        for f in fiber:
                            g, c2 = block_decode(order, f)
                            assert c2 == comp
                            assert is_block_form(order, g, comp)
                            assert block_encode(order, g, comp) == f
                            images.add(g)
                        assert len(images) == len(fiber)
                        members = [
                            g
                            for g in enumerate_group(r, n)
                            if is_block_form(order, g, comp)
                        ]
                        assert set(members) == images


class TestPsi:
    def test_example_321(self):
        q, p = OrderSpec.ar(3, 6), OrderSpec.bz(3, 6)
        f = seq("2^2 2 0 1^1 1^1 0", 3)
        image = psi(p, q, f)
        assert str(image) == "1^2 2 0 1^1 2^1 0"
        assert length(p, gamma_of(p, f)) == length(q, gamma_of(q, image)) == 19
        assert seq_col(f) == seq_col(image) == 4

    def test_identity_when_orders_equal(self):
        q = OrderSpec.ar(3, 4)
        for f in enumerate_sequences(3, 4, 1):
            assert psi(q, q, f) == f

    def test_bijection_on_fiber_preserving_stats(self):
        comp = Composition((2, 1, 1))
        fiber = list(enumerate_by_composition(3, comp))
        q, p = OrderSpec.ar(3, 4), OrderSpec.bz(3, 4)
        rnd = random_positive_dominant(3, 4, 17)
        for from_order, to_order in [(p, q), (q, p), (q, rnd), (rnd, p)]:
            images = set()
            for f in fiber:
                g = psi(from_order, to_order, f)
                images.add(g)
                assert seq_col(g) == seq_col(f)
                assert length(from_order, gamma_of(from_order, f)) == length(
                    to_order, gamma_of(to_order, g)
                )
                assert psi(to_order, from_order, g) == f
            assert images == set(fiber)

    def test_rejects_non_dominant(self):
        with pytest.raises(ValueError):
            psi(OrderSpec.st(2, 2), OrderSpec.ar(2, 2), seq("1 0", 2))


AR34 = OrderSpec.ar(3, 4)


class TestBipartite:
    def test_example_42_members(self):
        b1 = BipartitePartition(Partition((0, 1, 1, 1)), seq("2^1 2^2 2^2 3^1", 3))
        b2 = BipartitePartition(Partition((0, 1, 1, 1)), seq("2^2 2^1 3^1 3", 3))
        assert is_bipartite_member(b1)
        assert is_bipartite_member(b2)
        g, lam, mu = bipartite_split(b1)
        assert lam.parts == (0, 1, 1, 1)
        assert mu.parts == (2, 2, 2, 3)
        assert bipartite_merge(g, lam, mu) == b1

    def test_non_member_rejected(self):
        bad = BipartitePartition(Partition((0, 1, 1, 1)), seq("2^1 2^2 3^1 2^2", 3))
        assert not is_bipartite_member(bad)
        with pytest.raises(ValueError):
            bipartite_split(bad)

    def test_remark_46_unique_bottom(self):
        entries = parse_entries("2^2 2^2 2^1 2^1")
        members = {
            perm
            for perm in itertools.permutations(entries)
            if is_bipartite_member(
                BipartitePartition(Partition((1, 1, 1, 1)), ColoredSequence(3, perm))
            )
        }
        assert members == {entries}

    def test_merge_rejects_incompatible_bottom(self):
        g = ColoredPermutation(2, (1, 2), (1, 0))  # 0 is a descent position
        with pytest.raises(ValueError):
            bipartite_merge(g, Partition((0, 0)), Partition((0, 0)))

    def test_roundtrip_and_compatibility_exhaustive(self):
        for r in (1, 2, 3):
            order = OrderSpec.ar(r, 3)
            count = 0
            for bp in bipartite_members(r, 3, 2, 2, order):
                count += 1
                g, lam, mu = bipartite_split(bp, order)
                assert bipartite_merge(g, lam, mu, order) == bp
                assert is_compatible(order, mu, g)
                g_inv = inverse(g)
                descents = des_set(order, g_inv)
                parts = (0,) + lam.parts
                for j in descents:
                    if j > 0:
                        assert parts[j] < parts[j + 1]
                # the descent at 0 is matched by the first column exactly when
                # it is not a colored bottom entry over a zero top entry
                full = is_compatible(order, lam, g_inv)
                boundary_ok = lam.parts[0] > 0 or bp.bottom.entries[0].color == 0
                if 0 in descents:
                    assert full == boundary_ok
                else:
                    assert full
            assert count > 0

    def test_merge_of_fully_compatible_triples_lands_in_members(self):
        order = OrderSpec.ar(2, 3)
        for g in enumerate_group(2, 3):
            g_inv = inverse(g)
            for mu in enumerate_partitions(3, 2):
                if not is_compatible(order, mu, g):
                    continue
                for lam in enumerate_partitions(3, 2):
                    if not is_compatible(order, lam, g_inv):
                        continue
                    bp = bipartite_merge(g, lam, mu, order)
                    assert is_bipartite_member(bp, order)
                    assert bipartite_split(bp, order) == (g, lam, mu)
