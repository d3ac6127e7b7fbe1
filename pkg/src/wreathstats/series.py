"""Exact truncated multivariate power series over arbitrary-precision integers.

A series lives over a fixed ordered tuple of variable names with one degree
cap per variable; coefficients are plain Python ints keyed by exponent
vectors.  Every operation truncates to the caps, so computing both sides of
an identity with the same variables and caps compares them exactly in the
quotient ring.  Division never appears: denominators are expanded as
geometric series or inverted via their unit constant term, and q-multinomial
quotients go through exact polynomial long division with a zero-remainder
assertion.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence

VARIABLES = ("t", "q", "p", "a", "u", "t1", "t2", "q1", "q2", "b")


class TruncatedSeries:
    """Sparse exponent-vector -> integer table under per-variable caps."""

    __slots__ = ("vars", "caps", "coeffs")

    def __init__(
        self,
        vars: Sequence[str],
        caps: Sequence[int],
        coeffs: Mapping[tuple[int, ...], int] | None = None,
    ) -> None:
        if len(vars) != len(set(vars)):
            raise ValueError(f"duplicate variables in {vars}")
        unknown = set(vars) - set(VARIABLES)
        if unknown:
            raise ValueError(f"unknown variable names {sorted(unknown)}")
        if len(caps) != len(vars) or any(c < 0 for c in caps):
            raise ValueError("caps must be nonnegative, one per variable")
        self.vars = tuple(vars)
        self.caps = tuple(caps)
        table: dict[tuple[int, ...], int] = {}
        if coeffs:
            for exps, c in coeffs.items():
                if c == 0:
                    continue
                if len(exps) != len(self.vars):
                    raise ValueError(f"exponent vector {exps} has wrong arity")
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}")
                if all(e <= cap for e, cap in zip(exps, self.caps)):
                    table[tuple(exps)] = table.get(tuple(exps), 0) + c
        self.coeffs = {k: v for k, v in table.items() if v != 0}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars: Sequence[str], caps: Sequence[int]) -> "TruncatedSeries":
        return cls(vars, caps)

    @classmethod
    def constant(
        cls, vars: Sequence[str], caps: Sequence[int], c: int
    ) -> "TruncatedSeries":
        return cls(vars, caps, {(0,) * len(vars): c})

    @classmethod
    def one(cls, vars: Sequence[str], caps: Sequence[int]) -> "TruncatedSeries":
        return cls.constant(vars, caps, 1)

    @classmethod
    def monomial(
        cls,
        vars: Sequence[str],
        caps: Sequence[int],
        exps: Mapping[str, int],
        coeff: int = 1,
    ) -> "TruncatedSeries":
        vec = [0] * len(vars)
        for name, e in exps.items():
            vec[tuple(vars).index(name)] = e
        return cls(vars, caps, {tuple(vec): coeff})

    # -- ring operations ---------------------------------------------------

    def _check_compatible(self, other: "TruncatedSeries") -> tuple[int, ...]:
        if self.vars != other.vars:
            raise ValueError(f"variable sets differ: {self.vars} vs {other.vars}")
        return tuple(min(a, b) for a, b in zip(self.caps, other.caps))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        caps = self._check_compatible(other)
        table = dict(self.coeffs)
        for exps, c in other.coeffs.items():
            table[exps] = table.get(exps, 0) + c
        return TruncatedSeries(self.vars, caps, table)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(
            self.vars, self.caps, {k: -v for k, v in self.coeffs.items()}
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def scalar_mul(self, c: int) -> "TruncatedSeries":
        return TruncatedSeries(
            self.vars, self.caps, {k: c * v for k, v in self.coeffs.items()}
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        caps = self._check_compatible(other)
        table: dict[tuple[int, ...], int] = {}
        small, big = (
            (self.coeffs, other.coeffs)
            if len(self.coeffs) <= len(other.coeffs)
            else (other.coeffs, self.coeffs)
        )
        for e1, c1 in small.items():
            for e2, c2 in big.items():
                out = tuple(a + b for a, b in zip(e1, e2))
                if any(e > cap for e, cap in zip(out, caps)):
                    continue
                table[out] = table.get(out, 0) + c1 * c2
        return TruncatedSeries(self.vars, caps, table)

    def is_zero(self) -> bool:
        return not self.coeffs

    def constant_term(self) -> int:
        return self.coeffs.get((0,) * len(self.vars), 0)

    def invert_unit(self) -> "TruncatedSeries":
        """Multiplicative inverse when the constant term is +-1."""
        c0 = self.constant_term()
        if c0 == -1:
            return (-self).invert_unit().scalar_mul(-1)
        if c0 != 1:
            raise ValueError(f"constant term {c0} is not a unit over the integers")
        nilpotent = TruncatedSeries.one(self.vars, self.caps) - self
        result = TruncatedSeries.one(self.vars, self.caps)
        power = TruncatedSeries.one(self.vars, self.caps)
        bound = sum(self.caps)
        for _ in range(bound):
            power = power * nilpotent
            if power.is_zero():
                break
            result = result + power
        return result

    def substitute_scaled(
        self, var: str, monomial: Mapping[str, int]
    ) -> "TruncatedSeries":
        """Replace var by (monomial * var); overflow truncates silently."""
        idx = self.vars.index(var)
        shift = [0] * len(self.vars)
        for name, e in monomial.items():
            if e < 0:
                raise ValueError("monomial exponents must be nonnegative")
            shift[self.vars.index(name)] = e
        table: dict[tuple[int, ...], int] = {}
        for exps, c in self.coeffs.items():
            k = exps[idx]
            out = tuple(e + k * s for e, s in zip(exps, shift))
            if any(e > cap for e, cap in zip(out, self.caps)):
                continue
            table[out] = table.get(out, 0) + c
        return TruncatedSeries(self.vars, self.caps, table)

    # -- reshaping ---------------------------------------------------------

    def with_vars(
        self, vars: Sequence[str], caps: Sequence[int]
    ) -> "TruncatedSeries":
        """Embed into a ring over a superset of the variables."""
        positions = [tuple(vars).index(v) for v in self.vars]
        table: dict[tuple[int, ...], int] = {}
        for exps, c in self.coeffs.items():
            vec = [0] * len(vars)
            for pos, e in zip(positions, exps):
                vec[pos] = e
            table[tuple(vec)] = c
        return TruncatedSeries(vars, caps, table)

    def drop_vars(self, names: Iterable[str]) -> "TruncatedSeries":
        """Remove variables in which every stored exponent is zero."""
        drop = set(names)
        keep = [i for i, v in enumerate(self.vars) if v not in drop]
        for exps in self.coeffs:
            for i, v in enumerate(self.vars):
                if v in drop and exps[i] != 0:
                    raise ValueError(f"variable {v} occurs with nonzero exponent")
        return TruncatedSeries(
            [self.vars[i] for i in keep],
            [self.caps[i] for i in keep],
            {tuple(e[i] for i in keep): c for e, c in self.coeffs.items()},
        )

    def slice_coefficient(self, fixed: Mapping[str, int]) -> "TruncatedSeries":
        """The coefficient of a fixed power pattern, as a series in the rest."""
        idx = {self.vars.index(v): e for v, e in fixed.items()}
        keep = [i for i in range(len(self.vars)) if i not in idx]
        table: dict[tuple[int, ...], int] = {}
        for exps, c in self.coeffs.items():
            if all(exps[i] == e for i, e in idx.items()):
                table[tuple(exps[i] for i in keep)] = c
        return TruncatedSeries(
            [self.vars[i] for i in keep], [self.caps[i] for i in keep], table
        )

    def coefficient(self, exps: Mapping[str, int]) -> int:
        vec = [0] * len(self.vars)
        for name, e in exps.items():
            vec[self.vars.index(name)] = e
        return self.coeffs.get(tuple(vec), 0)

    # -- comparison and serialization ---------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.vars == other.vars
            and self.caps == other.caps
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.vars, self.caps, frozenset(self.coeffs.items())))

    def first_mismatch(
        self, other: "TruncatedSeries"
    ) -> tuple[tuple[int, ...], int, int] | None:
        """Smallest exponent vector (sorted order) where coefficients differ."""
        if self.vars != other.vars:
            raise ValueError("cannot compare series over different variables")
        for exps in sorted(set(self.coeffs) | set(other.coeffs)):
            c1, c2 = self.coeffs.get(exps, 0), other.coeffs.get(exps, 0)
            if c1 != c2:
                return exps, c1, c2
        return None

    def terms(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """Deterministic iteration, exponent vectors ascending."""
        for exps in sorted(self.coeffs):
            yield exps, self.coeffs[exps]

    def to_json_dict(self) -> dict:
        return {
            "vars": list(self.vars),
            "caps": list(self.caps),
            "terms": [[list(exps), str(c)] for exps, c in self.terms()],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "TruncatedSeries":
        return cls(
            tuple(data["vars"]),
            tuple(data["caps"]),
            {tuple(exps): int(c) for exps, c in data["terms"]},
        )

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for exps, c in self.terms():
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in zip(self.vars, exps)
                if e > 0
            )
            bits.append(f"{c}" if not mono else f"{c}*{mono}")
        return " + ".join(bits)


def geometric_inverse(
    vars: Sequence[str], caps: Sequence[int], monomial: Mapping[str, int]
) -> TruncatedSeries:
    """1/(1 - monomial) expanded as a geometric series up to the caps."""
    vec = [0] * len(vars)
    for name, e in monomial.items():
        vec[tuple(vars).index(name)] = e
    if all(e == 0 for e in vec):
        raise ValueError("geometric series needs a nonconstant monomial")
    table: dict[tuple[int, ...], int] = {}
    current = [0] * len(vars)
    while all(e <= cap for e, cap in zip(current, caps)):
        table[tuple(current)] = 1
        current = [a + b for a, b in zip(current, vec)]
    return TruncatedSeries(vars, caps, table)


# -- univariate q-objects ----------------------------------------------------


def _poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    """Long division of dense integer polynomials; remainder must vanish."""
    num = list(num)
    while den and den[-1] == 0:
        den = den[:-1]
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    if len(num) < len(den):
        if any(num):
            raise ArithmeticError("nonzero remainder in exact division")
        return [0]
    quot = [0] * (len(num) - len(den) + 1)
    for k in range(len(quot) - 1, -1, -1):
        c, rem = divmod(num[k + len(den) - 1], den[-1])
        if rem:
            raise ArithmeticError("nonzero remainder in exact division")
        quot[k] = c
        for i, d in enumerate(den):
            num[k + i] -= c * d
    if any(num):
        raise ArithmeticError("nonzero remainder in exact division")
    return quot


def _dense(series: TruncatedSeries) -> list[int]:
    assert len(series.vars) == 1
    out = [0] * (series.caps[0] + 1)
    for (e,), c in series.coeffs.items():
        out[e] = c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _from_dense(var: str, coeffs: list[int]) -> TruncatedSeries:
    cap = max(len(coeffs) - 1, 0)
    return TruncatedSeries((var,), (cap,), {(i,): c for i, c in enumerate(coeffs)})


def q_number(n: int, var: str = "q") -> TruncatedSeries:
    """1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("q-number needs n >= 0")
    return _from_dense(var, [1] * n if n else [0])


def q_factorial(n: int, var: str = "q") -> TruncatedSeries:
    out = _from_dense(var, [1])
    for k in range(1, n + 1):
        cap = out.caps[0] + k - 1
        out = out.with_vars((var,), (cap,)) * q_number(k, var).with_vars((var,), (cap,))
    return out


def _dense_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def q_multinomial(n: int, parts: Sequence[int], var: str = "q") -> TruncatedSeries:
    """[n]! / prod [n_i]! by exact division; a nonzero remainder is a bug."""
    if sum(parts) != n:
        raise ValueError(f"parts {parts} do not sum to {n}")
    num = _dense(q_factorial(n, var))
    den = [1]
    for p in parts:
        den = _dense_mul(den, _dense(q_factorial(p, var)))
    return _from_dense(var, _poly_divide_exact(num, den))


# -- colored q-objects -------------------------------------------------------


def colored_q_number(
    n: int, r: int, p_var: str = "p", a_var: str = "a"
) -> TruncatedSeries:
    """(1 + sum_{j=1}^{r-1} a^j p^(j+n-1)) * [n]_p."""
    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    p_cap = (n - 1 if n else 0) + (r - 1 + n - 1 if r > 1 and n >= 1 else 0)
    caps = (max(p_cap, 0), r - 1)
    vars = (p_var, a_var)
    color_factor = TruncatedSeries.one(vars, caps)
    if n >= 1:
        for j in range(1, r):
            color_factor = color_factor + TruncatedSeries.monomial(
                vars, caps, {a_var: j, p_var: j + n - 1}
            )
    return color_factor * q_number(n, p_var).with_vars(vars, caps)


def colored_q_factorial(
    n: int, r: int, p_var: str = "p", a_var: str = "a"
) -> TruncatedSeries:
    out = None
    for k in range(1, n + 1):
        term = colored_q_number(k, r, p_var, a_var)
        if out is None:
            out = term
        else:
            caps = tuple(a + b for a, b in zip(out.caps, term.caps))
            out = out.with_vars(out.vars, caps) * term.with_vars(out.vars, caps)
    if out is None:
        return TruncatedSeries.one((p_var, a_var), (0, 0))
    return out


def inverse_factorial(
    n: int,
    r: int,
    p_cap: int,
    a_cap: int,
    p_var: str = "p",
    a_var: str = "a",
) -> TruncatedSeries:
    """1 / [n]_{r,a,p}! truncated; r = 1 degenerates to 1 / [n]_p!."""
    vars = (p_var, a_var)
    caps = (p_cap, a_cap)
    fact = colored_q_factorial(n, r, p_var, a_var).with_vars(vars, caps)
    return fact.invert_unit()


def exponential(
    vars: Sequence[str],
    caps: Sequence[int],
    u_var: str = "u",
    p_var: str = "p",
) -> TruncatedSeries:
    """sum_m u^m / [m]_p! up to the u cap."""
    return colored_exponential(vars, caps, 1, u_var, p_var, a_var=None)


def colored_exponential(
    vars: Sequence[str],
    caps: Sequence[int],
    r: int,
    u_var: str = "u",
    p_var: str = "p",
    a_var: str | None = "a",
) -> TruncatedSeries:
    """sum_m u^m / [m]_{r,a,p}! up to the u cap."""
    vars = tuple(vars)
    caps = tuple(caps)
    u_cap = caps[vars.index(u_var)]
    p_cap = caps[vars.index(p_var)]
    if r > 1:
        if a_var is None:
            raise ValueError("colored exponential needs a color variable")
        a_cap = caps[vars.index(a_var)]
    else:
        a_var, a_cap = None, 0
    out = TruncatedSeries.zero(vars, caps)
    for m in range(u_cap + 1):
        if a_var is not None:
            inv_fact = inverse_factorial(m, r, p_cap, a_cap, p_var, a_var)
        else:
            inv_fact = inverse_factorial(m, 1, p_cap, 0, p_var, "a").drop_vars(["a"])
        term = inv_fact.with_vars(vars, caps) * TruncatedSeries.monomial(
            vars, caps, {u_var: m}
        )
        out = out + term
    return out


# -- coefficient extraction ---------------------------------------------------


def u_coefficient(
    monomials: Sequence[Mapping[str, int]],
    n: int,
    vars: Sequence[str],
    caps: Sequence[int],
) -> TruncatedSeries:
    """Coefficient of u^n in prod 1/(1 - u*M) over the given monomials M.

    Computed as the degree-n complete homogeneous sum of the monomials by
    dynamic programming, one factor at a time with unbounded multiplicity.
    """
    layers = [TruncatedSeries.zero(vars, caps) for _ in range(n + 1)]
    layers[0] = TruncatedSeries.one(vars, caps)
    for mono in monomials:
        m = TruncatedSeries.monomial(vars, caps, dict(mono))
        for d in range(1, n + 1):
            layers[d] = layers[d] + layers[d - 1] * m
    return layers[n]


def extract_u_coefficient_laurent(
    factors: Sequence[tuple[int, int, int]],
    n: int,
    k1: int,
    k2: int,
    r: int,
    vars: Sequence[str] = ("q1", "q2", "a", "b"),
    caps: Sequence[int] | None = None,
) -> TruncatedSeries:
    """[u^n] of prod 1/(1 - u q1^-i q2^-j (ab)^m) with the q1^(n k1) q2^(n k2) prefactor.

    Each factor (i, j, m) contributes the shifted monomial
    q1^(k1-i) q2^(k2-j) (ab)^m, so the whole prefactor is absorbed and no
    negative exponent is ever stored.
    """
    if caps is None:
        caps = (n * k1, n * k2, n * max(r - 1, 0), n * max(r - 1, 0))
    for i, j, m in factors:
        if not (0 <= i <= k1 and 0 <= j <= k2 and 0 <= m <= r - 1):
            raise ValueError(f"factor ({i},{j},{m}) out of range")
    monomials = [
        {"q1": k1 - i, "q2": k2 - j, "a": m, "b": m} for i, j, m in factors
    ]
    return u_coefficient(monomials, n, vars, caps)
