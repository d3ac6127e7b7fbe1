"""Brute-force distribution oracles and coefficientwise identity verifiers.

Every verifier builds its left side by raw enumeration over the group or the
sequence fibers (no series shortcuts) and its right side purely from the
truncated-series engine, then compares coefficients inside a box of
per-variable caps derived from worst-case statistic bounds.  Reports carry
the first mismatching exponent vector so failures are re-checkable.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .bijections import bipartite_members
from .core import (
    ColoredPermutation,
    Composition,
    OrderSpec,
    col,
    des,
    des_set,
    inv,
    inverse,
    length,
    maj,
)
from .sequences import (
    ColoredSequence,
    enumerate_by_composition,
    enumerate_group,
    enumerate_sequences,
    gamma_of,
    seq_col,
    seq_max,
    seq_weight,
)
from .series import (
    TruncatedSeries,
    colored_exponential,
    exponential,
    extract_u_coefficient_laurent,
    geometric_inverse,
    inverse_factorial,
    q_multinomial,
    q_number,
    u_coefficient,
)

DEFAULT_STAT_VARS = {
    "des": "t",
    "maj": "q",
    "inv": "p",
    "len": "p",
    "col": "a",
    "des_inv": "t2",
    "maj_inv": "q2",
    "col_inv": "b",
}


def stat_bound(stat: str, r: int, n: int) -> int:
    pairs = n * (n - 1) // 2
    if stat in ("des", "des_inv"):
        return n
    if stat in ("maj", "maj_inv", "inv"):
        return pairs
    if stat == "len":
        return pairs + n * max(n + r - 2, 0)
    if stat in ("col", "col_inv"):
        return n * (r - 1)
    raise ValueError(f"unknown statistic {stat!r}")


def _stat_value(stat: str, order: OrderSpec, g: ColoredPermutation, g_inv) -> int:
    if stat == "des":
        return des(order, g)
    if stat == "maj":
        return maj(order, g)
    if stat == "inv":
        return inv(order, g)
    if stat == "len":
        return length(order, g)
    if stat == "col":
        return col(g)
    if stat == "des_inv":
        return des(order, g_inv)
    if stat == "maj_inv":
        return maj(order, g_inv)
    if stat == "col_inv":
        return col(g_inv)
    raise ValueError(f"unknown statistic {stat!r}")


def dist_table(
    r: int,
    n: int,
    order: OrderSpec,
    stats: Mapping[str, str] | Iterable[str],
    vars: Sequence[str] | None = None,
    caps: Sequence[int] | None = None,
) -> TruncatedSeries:
    """Sum over the whole group of the monomial in the requested statistics."""
    if not isinstance(stats, Mapping):
        stats = {s: DEFAULT_STAT_VARS[s] for s in stats}
    if len(set(stats.values())) != len(stats):
        raise ValueError(f"statistic variables collide: {stats}")
    if vars is None:
        vars = tuple(stats.values())
        caps = tuple(stat_bound(s, r, n) for s in stats)
    assert caps is not None
    needs_inverse = any(s.endswith("_inv") for s in stats)
    table: dict[tuple[int, ...], int] = {}
    var_index = {v: tuple(vars).index(v) for v in stats.values()}
    for g in enumerate_group(r, n):
        g_inv = inverse(g) if needs_inverse else None
        vec = [0] * len(vars)
        for s, v in stats.items():
            vec[var_index[v]] = _stat_value(s, order, g, g_inv)
        key = tuple(vec)
        table[key] = table.get(key, 0) + 1
    return TruncatedSeries(vars, caps, table)


# -- plain-permutation oracle (no colors, descents start at position 1) -------


def perm_des_set(pi: Sequence[int]) -> tuple[int, ...]:
    return tuple(j for j in range(1, len(pi)) if pi[j - 1] > pi[j])


def perm_des(pi: Sequence[int]) -> int:
    return len(perm_des_set(pi))


def perm_maj(pi: Sequence[int]) -> int:
    return sum(perm_des_set(pi))


def perm_inv(pi: Sequence[int]) -> int:
    n = len(pi)
    return sum(1 for i in range(n) for j in range(i + 1, n) if pi[i] > pi[j])


# -- reports -------------------------------------------------------------------


@dataclass
class VerificationReport:
    identity: str
    params: dict
    passed: bool
    witness: dict | None
    wall_ms: float

    @property
    def outcome(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json_dict(self, include_timing: bool = False) -> dict:
        data = {
            "identity": self.identity,
            "params": self.params,
            "outcome": self.outcome,
            "witness": self.witness,
        }
        if include_timing:
            data["wall_ms"] = round(self.wall_ms, 3)
        return data


def _finish(
    identity: str,
    params: dict,
    comparisons: Iterable[tuple[dict, TruncatedSeries, TruncatedSeries]],
    started: float,
) -> VerificationReport:
    """Compare labelled series pairs; the first mismatch becomes the witness."""
    for context, lhs, rhs in comparisons:
        diff = lhs.first_mismatch(rhs)
        if diff is not None:
            exps, c1, c2 = diff
            witness = {
                "context": context,
                "monomial": dict(zip(lhs.vars, exps)),
                "lhs": str(c1),
                "rhs": str(c2),
            }
            wall = (time.perf_counter() - started) * 1000.0
            return VerificationReport(identity, params, False, witness, wall)
    wall = (time.perf_counter() - started) * 1000.0
    return VerificationReport(identity, params, True, None, wall)


# -- classical identities ------------------------------------------------------


def carlitz_sides(n: int, t_cap: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    vars = ("t", "q")
    caps = (t_cap, max(n, 1) * t_cap)
    table: dict[tuple[int, ...], int] = {}
    for pi in itertools.permutations(range(1, n + 1)):
        key = (perm_des(pi), perm_maj(pi))
        table[key] = table.get(key, 0) + 1
    lhs = TruncatedSeries(vars, caps, table)
    for j in range(n + 1):
        lhs = lhs * geometric_inverse(vars, caps, {"t": 1, "q": j})
    rhs = TruncatedSeries.zero(vars, caps)
    for k in range(t_cap + 1):
        bracket = q_number(k + 1, "q").with_vars(vars, caps)
        power = TruncatedSeries.one(vars, caps)
        for _ in range(n):
            power = power * bracket
        rhs = rhs + power * TruncatedSeries.monomial(vars, caps, {"t": k})
    return lhs, rhs


def verify_carlitz(n_max: int, t_cap: int) -> VerificationReport:
    started = time.perf_counter()
    comparisons = []
    for n in range(n_max + 1):
        lhs, rhs = carlitz_sides(n, t_cap)
        comparisons.append(({"n": n}, lhs, rhs))
    return _finish(
        "carlitz", {"n_max": n_max, "t_cap": t_cap}, comparisons, started
    )


def gg1_sides(
    n_cap: int, t_cap: int, p_cap: int | None = None
) -> tuple[TruncatedSeries, TruncatedSeries]:
    if p_cap is None:
        p_cap = n_cap * n_cap
    vars = ("t", "q", "p", "u")
    caps = (t_cap, n_cap * t_cap, p_cap, n_cap)
    lhs = TruncatedSeries.zero(vars, caps)
    for n in range(n_cap + 1):
        table: dict[tuple[int, ...], int] = {}
        for pi in itertools.permutations(range(1, n + 1)):
            key = (perm_des(pi), perm_maj(pi), perm_inv(pi), n)
            table[key] = table.get(key, 0) + 1
        term = TruncatedSeries(vars, caps, table)
        for i in range(n + 1):
            term = term * geometric_inverse(vars, caps, {"t": 1, "q": i})
        term = term * inverse_factorial(n, 1, p_cap, 0, "p", "a").drop_vars(
            ["a"]
        ).with_vars(vars, caps)
        lhs = lhs + term
    e_base = exponential(vars, caps, "u", "p")
    rhs = TruncatedSeries.zero(vars, caps)
    for k in range(t_cap + 1):
        prod = TruncatedSeries.monomial(vars, caps, {"t": k})
        for j in range(k + 1):
            prod = prod * e_base.substitute_scaled("u", {"q": j})
        rhs = rhs + prod
    return lhs, rhs


def verify_gg1(
    n_cap: int, t_cap: int, p_cap: int | None = None
) -> VerificationReport:
    started = time.perf_counter()
    lhs, rhs = gg1_sides(n_cap, t_cap, p_cap)
    return _finish(
        "gg1",
        {"n_cap": n_cap, "t_cap": t_cap, "p_cap": p_cap},
        [({}, lhs, rhs)],
        started,
    )


# -- fiber identity ------------------------------------------------------------


def fiber_sides(
    order: OrderSpec, eta: ColoredPermutation, max_f: int, t_cap: int
) -> tuple[TruncatedSeries, TruncatedSeries]:
    if max_f < t_cap:
        raise ValueError("enumeration bound must cover the t cap")
    n = eta.n
    vars = ("t", "q")
    caps = (t_cap, max(n, 1) * t_cap)
    table: dict[tuple[int, ...], int] = {}
    for f in enumerate_sequences(eta.r, n, max_f):
        if gamma_of(order, f) == eta:
            key = (seq_max(f), n * seq_max(f) - seq_weight(f))
            table[key] = table.get(key, 0) + 1
    lhs = TruncatedSeries(vars, caps, table)
    rhs = TruncatedSeries.monomial(
        vars, caps, {"t": des(order, eta), "q": maj(order, eta)}
    )
    for i in range(n):
        rhs = rhs * geometric_inverse(vars, caps, {"t": 1, "q": i})
    return lhs, rhs


def verify_fiber_identity(
    order: OrderSpec, eta: ColoredPermutation, max_f: int, t_cap: int
) -> VerificationReport:
    started = time.perf_counter()
    lhs, rhs = fiber_sides(order, eta, max_f, t_cap)
    return _finish(
        "fiber",
        {
            "r": eta.r,
            "n": eta.n,
            "eta": str(eta),
            "order": str(order),
            "max_f": max_f,
            "t_cap": t_cap,
        },
        [({}, lhs, rhs)],
        started,
    )


# -- fixed-multiplicity inversion identity --------------------------------------


def lemma43_sides(
    r: int, comp: Composition, order: OrderSpec
) -> tuple[TruncatedSeries, TruncatedSeries]:
    n = comp.n
    vars = ("p", "a")
    caps = (stat_bound("len", r, n), stat_bound("col", r, n))
    table: dict[tuple[int, ...], int] = {}
    for f in enumerate_by_composition(r, comp):
        g = gamma_of(order, f)
        key = (length(order, g), seq_col(f))
        table[key] = table.get(key, 0) + 1
    lhs = TruncatedSeries(vars, caps, table)
    n0 = comp.parts[0] if comp.parts else 0
    rhs = q_multinomial(n, comp.parts, "p").with_vars(vars, caps)
    for i in range(n0, n):
        factor = TruncatedSeries.one(vars, caps)
        for j in range(1, r):
            factor = factor + TruncatedSeries.monomial(
                vars, caps, {"a": j, "p": j + i}
            )
        rhs = rhs * factor
    return lhs, rhs


def verify_lemma43(
    r: int, comp: Composition, order: OrderSpec
) -> VerificationReport:
    started = time.perf_counter()
    lhs, rhs = lemma43_sides(r, comp, order)
    return _finish(
        "lemma43",
        {"r": r, "composition": str(comp), "order": str(order)},
        [({}, lhs, rhs)],
        started,
    )


# -- four-variate identity -------------------------------------------------------


def four_variate_caps(r: int, n_cap: int, t_cap: int) -> tuple[int, ...]:
    return (
        t_cap,
        n_cap * t_cap,
        n_cap * n_cap + n_cap * (r - 1),
        n_cap * (r - 1),
        n_cap,
    )


def four_variate_sides(
    r: int, n_cap: int, t_cap: int, order_family
) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Both sides over (t, q, p, a, u).

    order_family maps each window size n to the order used on that size
    (named orders keep their kind; custom orders need an explicit family).
    """
    vars = ("t", "q", "p", "a", "u")
    caps = four_variate_caps(r, n_cap, t_cap)
    p_cap, a_cap = caps[2], caps[3]
    lhs = TruncatedSeries.zero(vars, caps)
    for n in range(n_cap + 1):
        order = order_family(n)
        term = dist_table(
            r,
            n,
            order,
            {"des": "t", "maj": "q", "len": "p", "col": "a"},
            vars=vars,
            caps=caps,
        )
        for i in range(n + 1):
            term = term * geometric_inverse(vars, caps, {"t": 1, "q": i})
        term = term * inverse_factorial(n, r, p_cap, a_cap).with_vars(vars, caps)
        term = term * TruncatedSeries.monomial(vars, caps, {"u": n})
        lhs = lhs + term
    e_plain = exponential(vars, caps, "u", "p")
    e_colored = colored_exponential(vars, caps, r, "u", "p", "a")
    rhs = TruncatedSeries.zero(vars, caps)
    for k in range(t_cap + 1):
        prod = TruncatedSeries.monomial(vars, caps, {"t": k})
        for j in range(k):
            prod = prod * e_plain.substitute_scaled("u", {"q": j})
        prod = prod * e_colored.substitute_scaled("u", {"q": k})
        rhs = rhs + prod
    return lhs, rhs


def verify_four_variate(
    r: int, n_cap: int, t_cap: int, order_family
) -> VerificationReport:
    """order_family: either an OrderSpec factory n -> OrderSpec or a kind string."""
    started = time.perf_counter()
    family, label = _resolve_family(r, order_family)
    lhs, rhs = four_variate_sides(r, n_cap, t_cap, family)
    return _finish(
        "four_variate",
        {"r": r, "n_cap": n_cap, "t_cap": t_cap, "order": label},
        [({}, lhs, rhs)],
        started,
    )


def _resolve_family(r: int, order_family):
    """Turn a kind string, seed spec, OrderSpec or callable into an order family.

    The four-variate identity sums over all window sizes, so the order must
    exist for every size up to the cap; named kinds and seeded random orders
    extend naturally, a fixed custom listing does not.
    """
    if isinstance(order_family, OrderSpec):
        if order_family.kind == "custom":
            raise TypeError("a custom order is tied to one size; pass a family")
        kind = order_family.kind
        return (lambda n: OrderSpec(r, n, kind)), kind
    if callable(order_family):
        return order_family, "callable"
    if isinstance(order_family, str):
        if order_family.startswith("random:"):
            seed = int(order_family.split(":", 1)[1])
            from .core import random_positive_dominant

            return (lambda n: random_positive_dominant(r, n, seed)), order_family
        kind = order_family
        return (lambda n: OrderSpec(r, n, kind)), kind
    raise TypeError(f"cannot build an order family from {order_family!r}")


# -- six-variate identity ---------------------------------------------------------


def six_variate_factors(k1: int, k2: int, r: int) -> list[tuple[int, int, int]]:
    """Column alphabet: uncolored columns everywhere, colored ones off the zero row
    and zero value (a colored entry cannot sit over top value 0, nor be 0 itself)."""
    factors = [(i, j, 0) for i in range(k1 + 1) for j in range(k2 + 1)]
    factors += [
        (i, j, m)
        for i in range(1, k1 + 1)
        for j in range(1, k2 + 1)
        for m in range(1, r)
    ]
    return factors


def six_variate_sides(
    r: int, n: int, k1_cap: int, k2_cap: int, order: OrderSpec
) -> list[tuple[dict, TruncatedSeries, TruncatedSeries]]:
    full_vars = ("t1", "t2", "q1", "q2", "a", "b")
    full_caps = (
        k1_cap,
        k2_cap,
        n * k1_cap,
        n * k2_cap,
        n * (r - 1),
        n * (r - 1),
    )
    dist = dist_table(
        r,
        n,
        order,
        {
            "des": "t1",
            "maj": "q1",
            "col": "a",
            "des_inv": "t2",
            "maj_inv": "q2",
            "col_inv": "b",
        },
        vars=full_vars,
        caps=full_caps,
    )
    lhs_full = dist
    for i in range(n + 1):
        lhs_full = lhs_full * geometric_inverse(full_vars, full_caps, {"t1": 1, "q1": i})
        lhs_full = lhs_full * geometric_inverse(full_vars, full_caps, {"t2": 1, "q2": i})
    out = []
    for k1 in range(k1_cap + 1):
        for k2 in range(k2_cap + 1):
            lhs = lhs_full.slice_coefficient({"t1": k1, "t2": k2})
            rhs = extract_u_coefficient_laurent(
                six_variate_factors(k1, k2, r),
                n,
                k1,
                k2,
                r,
                vars=lhs.vars,
                caps=lhs.caps,
            )
            out.append(({"k1": k1, "k2": k2}, lhs, rhs))
    return out


def verify_six_variate(
    r: int,
    n: int,
    k1_cap: int,
    k2_cap: int,
    order: OrderSpec | None = None,
) -> VerificationReport:
    """Fixed to the color-descending order unless an exploratory order is passed."""
    started = time.perf_counter()
    if order is None:
        order = OrderSpec.ar(r, n)
    comparisons = six_variate_sides(r, n, k1_cap, k2_cap, order)
    return _finish(
        "six_variate",
        {
            "r": r,
            "n": n,
            "k1_cap": k1_cap,
            "k2_cap": k2_cap,
            "order": str(order),
        },
        comparisons,
        started,
    )


def gg2_sides(
    n: int, k1_cap: int, k2_cap: int
) -> list[tuple[dict, TruncatedSeries, TruncatedSeries]]:
    """Plain-permutation double identity, positive-exponent product form."""
    full_vars = ("t1", "t2", "q1", "q2")
    full_caps = (k1_cap, k2_cap, n * k1_cap, n * k2_cap)
    table: dict[tuple[int, ...], int] = {}
    for pi in itertools.permutations(range(1, n + 1)):
        pos = [0] * (n + 1)
        for i, v in enumerate(pi, start=1):
            pos[v] = i
        pi_inv = tuple(pos[1:])
        key = (perm_des(pi), perm_des(pi_inv), perm_maj(pi), perm_maj(pi_inv))
        table[key] = table.get(key, 0) + 1
    lhs_full = TruncatedSeries(full_vars, full_caps, table)
    for i in range(n + 1):
        lhs_full = lhs_full * geometric_inverse(full_vars, full_caps, {"t1": 1, "q1": i})
        lhs_full = lhs_full * geometric_inverse(full_vars, full_caps, {"t2": 1, "q2": i})
    out = []
    for k1 in range(k1_cap + 1):
        for k2 in range(k2_cap + 1):
            lhs = lhs_full.slice_coefficient({"t1": k1, "t2": k2})
            monomials = [
                {"q1": i, "q2": j}
                for i in range(k1 + 1)
                for j in range(k2 + 1)
            ]
            rhs = u_coefficient(monomials, n, lhs.vars, lhs.caps)
            out.append(({"k1": k1, "k2": k2}, lhs, rhs))
    return out


def verify_gg2(n: int, k1_cap: int, k2_cap: int) -> VerificationReport:
    started = time.perf_counter()
    comparisons = gg2_sides(n, k1_cap, k2_cap)
    return _finish(
        "gg2", {"n": n, "k1_cap": k1_cap, "k2_cap": k2_cap}, comparisons, started
    )


# -- two-row census identity -------------------------------------------------------


def bipartite_gf_sides(
    r: int, n: int, k1: int, k2: int
) -> list[tuple[dict, TruncatedSeries, TruncatedSeries]]:
    order = OrderSpec.ar(r, n)
    members = list(bipartite_members(r, n, k1, k2, order))
    vars = ("q1", "q2", "a")
    caps = (n * k1, n * k2, n * (r - 1))
    table: dict[tuple[int, ...], int] = {}
    for bp in members:
        key = (bp.top.weight(), seq_weight(bp.bottom), seq_col(bp.bottom))
        table[key] = table.get(key, 0) + 1
    census = TruncatedSeries(vars, caps, table)
    monomials = [
        {"q1": i, "q2": j, "a": m}
        for i in range(k1 + 1)
        for j in range(k2 + 1)
        for m in range(r)
        if m == 0 or j >= 1
    ]
    product = u_coefficient(monomials, n, vars, caps)
    comparisons = [({"form": "census"}, census, product)]

    # regrouped form: the product censuses, shifted by the (t q^n)^k
    # prefactors and summed over bounded k, equal the member sum weighted by
    # row maxima with truncated geometric tails
    rv = ("t1", "t2", "q1", "q2", "a", "b")
    rc = (k1, k2, n * k1, n * k2, n * (r - 1), n * (r - 1))
    lhs = TruncatedSeries.zero(rv, rc)
    for kk1 in range(k1 + 1):
        for kk2 in range(k2 + 1):
            shifted_monomials = [
                {"q1": kk1 - i, "q2": kk2 - j, "a": m, "b": m}
                for i in range(kk1 + 1)
                for j in range(kk2 + 1)
                for m in range(r)
                if m == 0 or j >= 1
            ]
            census_product = u_coefficient(shifted_monomials, n, rv, rc)
            lhs = lhs + census_product * TruncatedSeries.monomial(
                rv, rc, {"t1": kk1, "t2": kk2}
            )
    accum: dict[tuple[int, ...], int] = {}
    for bp in members:
        m1, m2 = bp.top.max_part(), seq_max(bp.bottom)
        c = seq_col(bp.bottom)
        for d1 in range(k1 - m1 + 1):
            for d2 in range(k2 - m2 + 1):
                key = (
                    m1 + d1,
                    m2 + d2,
                    n * (m1 + d1) - bp.top.weight(),
                    n * (m2 + d2) - seq_weight(bp.bottom),
                    c,
                    c,
                )
                accum[key] = accum.get(key, 0) + 1
    rhs = TruncatedSeries(rv, rc, accum)
    comparisons.append(({"form": "regrouped"}, lhs, rhs))
    return comparisons


def verify_bipartite_gf(r: int, n: int, k1: int, k2: int) -> VerificationReport:
    started = time.perf_counter()
    comparisons = bipartite_gf_sides(r, n, k1, k2)
    return _finish(
        "bipartite_gf", {"r": r, "n": n, "k1": k1, "k2": k2}, comparisons, started
    )
