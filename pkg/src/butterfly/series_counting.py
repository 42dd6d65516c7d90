"""Exact truncated power series, Riordan arrays, and closed-form counts.

Series coefficients are arbitrary-precision Python ints, index = exponent,
truncated at an exclusive order. Every series arising here is integral, so
coefficients stay integers and any division is checked for exactness; a
failed exact division raises instead of rounding, because it always means a
bug. Rationals (for averages and asymptotic ratios) use fractions.Fraction.

The Catalan series C satisfies C = 1 + xC^2 and is built by the convolution
recurrence; the central-binomial series B has coefficients binomial(2n, n);
the Schroder series S solves S = 1 + xS + xS^2 by fixed-point iteration,
which pins one further coefficient per pass. No radicals are ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from math import comb
from typing import Callable, Sequence

from .errors import DomainError, ExactnessError

DEFAULT_ORDER = 64

ExactRational = Fraction


@dataclass(frozen=True)
class Series:
    """Truncated formal power series with exact integer coefficients."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise DomainError("series order must be at least 1")

    @property
    def order(self) -> int:
        """Truncation bound (exclusive): coefficients 0..order-1 are known."""
        return len(self.coeffs)

    def coeff(self, n: int) -> int:
        if not 0 <= n < self.order:
            raise DomainError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "Series":
        if order < 1:
            raise DomainError("series order must be at least 1")
        if order > self.order:
            raise DomainError(f"cannot extend a series truncated at {self.order}")
        return Series(self.coeffs[:order])

    def __add__(self, other: "Series | int") -> "Series":
        other = _coerce(other, self.order)
        order = min(self.order, other.order)
        return Series(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __radd__(self, other: int) -> "Series":
        return self + other

    def __sub__(self, other: "Series | int") -> "Series":
        return self + (-_coerce(other, self.order))

    def __rsub__(self, other: int) -> "Series":
        return _coerce(other, self.order) - self

    def __neg__(self) -> "Series":
        return Series(tuple(-a for a in self.coeffs))

    def __mul__(self, other: "Series | int") -> "Series":
        if isinstance(other, int):
            return Series(tuple(a * other for a in self.coeffs))
        order = min(self.order, other.order)
        out = [0] * order
        for i, a in enumerate(self.coeffs[:order]):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs[: order - i]):
                out[i + j] += a * b
        return Series(tuple(out))

    def __rmul__(self, other: int) -> "Series":
        return self * other

    def __pow__(self, exponent: int) -> "Series":
        if exponent < 0:
            raise DomainError("negative powers: use reciprocal() explicitly")
        result = one(self.order)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "Series":
        """Multiply by x^k."""
        if k < 0:
            raise DomainError("shift must be non-negative")
        return Series(((0,) * k + self.coeffs)[: self.order])

    def compose(self, inner: "Series") -> "Series":
        """self(inner); requires inner to have zero constant term."""
        if inner.coeffs[0] != 0:
            raise DomainError("composition needs an inner series with zero constant term")
        order = min(self.order, inner.order)
        result = constant(self.coeffs[order - 1], order)
        for k in range(order - 2, -1, -1):  # Horner
            result = result * inner.truncate(order) + self.coeffs[k]
        return result

    def reciprocal(self) -> "Series":
        """Multiplicative inverse; requires a unit constant term (+1 or -1)."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise DomainError(f"reciprocal needs a unit constant term, got {c0}")
        out = [c0]
        for n in range(1, self.order):
            acc = sum(self.coeffs[i] * out[n - i] for i in range(1, n + 1))
            out.append(-c0 * acc)
        return Series(tuple(out))

    def div_exact(self, divisor: int) -> "Series":
        """Divide every coefficient by an integer, demanding exactness."""
        if divisor == 0:
            raise DomainError("division by zero")
        out = []
        for n, a in enumerate(self.coeffs):
            q, r = divmod(a, divisor)
            if r:
                raise ExactnessError(f"coefficient {n} ({a}) not divisible by {divisor}")
            out.append(q)
        return Series(tuple(out))

    def to_json_obj(self) -> list[str]:
        """JSON export: array of decimal strings (arbitrary precision)."""
        return [str(a) for a in self.coeffs]


def _coerce(value: "Series | int", order: int) -> Series:
    return constant(value, order) if isinstance(value, int) else value


def from_coeffs(values: Sequence[int], order: int | None = None) -> Series:
    values = tuple(int(v) for v in values)
    if order is None:
        order = len(values)
    if order < len(values):
        values = values[:order]
    return Series(values + (0,) * (order - len(values)))


def constant(c: int, order: int) -> Series:
    return from_coeffs((c,), order)


def one(order: int) -> Series:
    return constant(1, order)


def x(order: int) -> Series:
    return from_coeffs((0, 1), order)


# ---------------------------------------------------------------------------
# the named series
# ---------------------------------------------------------------------------

def catalan_series(order: int) -> Series:
    coeffs = [1]
    for n in range(order - 1):
        coeffs.append(sum(coeffs[i] * coeffs[n - i] for i in range(n + 1)))
    return Series(tuple(coeffs[:order]))


def central_binomial_series(order: int) -> Series:
    return Series(tuple(comb(2 * n, n) for n in range(order)))


def schroder_series(order: int) -> Series:
    """Solve S = 1 + xS + xS^2 by iteration (one new coefficient per pass)."""
    s = one(order)
    for _ in range(order):
        s = one(order) + (x(order) * s) + (x(order) * s * s)
    return s


def _leaf_sibling(order: int) -> Series:
    # L = (B - 1)/2, the trees with >= 2 vertices and a distinguished leaf
    return (central_binomial_series(order) - 1).div_exact(2)


def _klazar_chains(order: int) -> Series:
    c = catalan_series(order)
    return c * (one(order) - 2 * (x(order) * c * c)).reciprocal()


_NAMED_BUILDERS: dict[str, Callable[[int], Series]] = {
    "C": catalan_series,
    "B": central_binomial_series,
    "S": schroder_series,
    "L": _leaf_sibling,
    "Lstar": lambda order: (central_binomial_series(order) + 1).div_exact(2),
    "Lsq": lambda order: _leaf_sibling(order) ** 2,
    "chains": _klazar_chains,
    "chains_leaf": lambda order: (
        one(order) - 2 * (x(order) * catalan_series(order) ** 2)
    ).reciprocal(),
    "chains_total_alt": lambda order: central_binomial_series(order)
    * (one(order) - _leaf_sibling(order)).reciprocal(),
    "chain_size_total": lambda order: central_binomial_series(order)
    * ((one(order) - _leaf_sibling(order)).reciprocal() ** 2),
    "ones": lambda order: (one(order) - x(order)).reciprocal(),
    "naturals": lambda order: (one(order) - x(order)).reciprocal() ** 2,
}

SERIES_NAMES = tuple(sorted(_NAMED_BUILDERS))


def named_series(name: str, order: int) -> Series:
    """Build a named series to the requested truncation order.

    Names: C (Catalan), B (central binomials), S (Schroder), L and Lstar
    (distinguished-leaf trees, without/with the single vertex), Lsq (L^2),
    chains (Klazar's chain counts C/(1-2xC^2)), chains_leaf (chains ending
    in a leaf, 1/(1-2xC^2)), chains_total_alt (2B/(3-B)), chain_size_total
    (4B/(3-B)^2), plus the plumbing series ones (1/(1-x)) and naturals
    (1/(1-x)^2).
    """
    if order < 1:
        raise DomainError("order must be at least 1")
    try:
        builder = _NAMED_BUILDERS[name]
    except KeyError:
        raise DomainError(f"unknown series {name!r}; known: {', '.join(SERIES_NAMES)}") from None
    return builder(order)


# ---------------------------------------------------------------------------
# closed-form counts
# ---------------------------------------------------------------------------

def catalan(n: int) -> int:
    if n < 0:
        raise DomainError("n must be non-negative")
    return comb(2 * n, n) // (n + 1)


def central_binomial(n: int) -> int:
    if n < 0:
        raise DomainError("n must be non-negative")
    return comb(2 * n, n)


def narayana(n: int, i: int) -> int:
    """Plane trees with n edges and i leaves: binom(n,i) * binom(n,i-1) / n."""
    if n < 1 or not 1 <= i <= n:
        raise DomainError(f"narayana needs 1 <= i <= n with n >= 1, got ({n}, {i})")
    return _exact_int(Fraction(comb(n, i) * comb(n, i - 1), n))


def coeff_C_pow(n: int, k: int) -> int:
    """[x^n] C^k by Lagrange inversion: (k/(2n+k)) * binom(2n+k, n)."""
    if n < 0 or k < 0:
        raise DomainError("indices must be non-negative")
    if k == 0:
        return 1 if n == 0 else 0
    return _exact_int(Fraction(k * comb(2 * n + k, n), 2 * n + k))


def a_nk(n: int, k: int) -> int:
    """[x^n] S^k: a(0,k)=1 and for n >= 1 a Lagrange-inversion sum."""
    if k < 1:
        raise DomainError("k must be positive")
    if n < 0:
        raise DomainError("n must be non-negative")
    if n == 0:
        return 1
    total = sum(
        2 ** (i + 1) * comb(n + k - 1, i) * comb(n, i + 1) for i in range(n)
    )
    return _exact_int(Fraction(k * total, n))


def schroder_number(n: int) -> int:
    return a_nk(n, 1)


def flaw_block_count_dyck(n: int, m: int, k: int) -> int:
    """Free Dyck paths of semilength n with m flaws in k flaw blocks.

    Equals [x^(m-k)]C^k * [x^(n-m)]C^(k+1): the blocks contribute the stem
    factor, the rest the non-negative part.
    """
    if not 0 < k <= m <= n:
        raise DomainError(f"need 0 < k <= m <= n, got ({n}, {m}, {k})")
    return coeff_C_pow(m - k, k) * coeff_C_pow(n - m, k + 1)


def deutsch_returns(n: int, k: int) -> int:
    """Dyck paths of semilength n with exactly k returns to the axis."""
    if not 0 < k <= n:
        raise DomainError(f"need 0 < k <= n, got ({n}, {k})")
    return flaw_block_count_dyck(n, n, k)


def flaw_block_weight_schroder(n: int, m: int, k: int) -> int:
    """Total weight of free Schroder paths with m flaws in k flaw blocks.

    Weight 2 applies to paths ending with an U step, 1 otherwise; the total
    is a(m-k, k) * (a(n-m, k+1) + a(n-m, k)).
    """
    if not 0 < k <= m <= n:
        raise DomainError(f"need 0 < k <= m <= n, got ({n}, {m}, {k})")
    return a_nk(m - k, k) * (a_nk(n - m, k + 1) + a_nk(n - m, k))


def identity9_check(n: int) -> tuple[int, int]:
    """Both sides of the leaf-colored doubly rooted tree count.

    Left: sum over leaf counts i of (2n+2-i) * 2^(i-1) * Narayana(n, i).
    Right: the free Schroder path count sum binom(2n-i, i)*binom(2n-2i, n-i).
    """
    if n < 1:
        raise DomainError("n must be at least 1")
    lhs = sum((2 * n + 2 - i) * 2 ** (i - 1) * narayana(n, i) for i in range(1, n + 1))
    rhs = sum(comb(2 * n - i, i) * comb(2 * n - 2 * i, n - i) for i in range(n + 1))
    return lhs, rhs


def free_schroder_count(n: int) -> int:
    if n < 0:
        raise DomainError("n must be non-negative")
    return sum(comb(2 * n - i, i) * comb(2 * n - 2 * i, n - i) for i in range(n + 1))


def _exact_int(value: Fraction) -> int:
    if value.denominator != 1:
        raise ExactnessError(f"expected an integer, got {value}")
    return value.numerator


# ---------------------------------------------------------------------------
# Riordan arrays
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RiordanArray:
    """The infinite lower-triangular array with entries [x^i] g * f^j."""

    g: Series
    f: Series

    def __post_init__(self):
        if self.g.coeffs[0] != 1:
            raise DomainError("g must have constant term 1")
        if self.f.order < 2 or self.f.coeffs[0] != 0 or self.f.coeffs[1] == 0:
            raise DomainError("f must have zero constant term and nonzero linear term")

    @property
    def order(self) -> int:
        return min(self.g.order, self.f.order)

    def entry(self, i: int, j: int) -> int:
        if i < 0 or j < 0:
            raise DomainError("indices must be non-negative")
        if i >= self.order:
            raise DomainError(f"row {i} outside truncation order {self.order}")
        if j > i:
            return 0
        return (self.g * self.f**j).coeff(i)

    def row(self, i: int) -> list[int]:
        if not 0 <= i < self.order:
            raise DomainError(f"row {i} outside truncation order {self.order}")
        out = []
        column = self.g
        for _ in range(i + 1):
            out.append(column.coeff(i))
            column = column * self.f
        return out

    def rows(self, count: int) -> list[list[int]]:
        return [self.row(i) for i in range(count)]

    def apply(self, a: Series, order: int | None = None) -> Series:
        """Multiply by the column vector with generating function a: g * a(f)."""
        if order is None:
            order = min(self.order, a.order)
        return (self.g.truncate(order) * a.truncate(order).compose(self.f.truncate(order)))


def riordan_entry(array: RiordanArray, i: int, j: int) -> int:
    return array.entry(i, j)


def riordan_apply(array: RiordanArray, a: Series, order: int | None = None) -> Series:
    return array.apply(a, order)


# ---------------------------------------------------------------------------
# chain statistics and asymptotics
# ---------------------------------------------------------------------------

def chains_count(n: int) -> int:
    """H_n: nonempty chains over all plane trees with n edges."""
    if n < 0:
        raise DomainError("n must be non-negative")
    return named_series("chains", n + 1).coeff(n)


def chains_total_size(n: int) -> int:
    """R_n: total size of all chains over plane trees with n edges."""
    if n < 0:
        raise DomainError("n must be non-negative")
    return named_series("chain_size_total", n + 1).coeff(n)


def chains_of_size(n: int, k: int) -> int:
    """Chains of size k over plane trees with n edges: [x^n] B * L^(k-1)."""
    if n < 0:
        raise DomainError("n must be non-negative")
    if k < 1:
        raise DomainError("chain size must be at least 1")
    order = n + 1
    return (central_binomial_series(order) * _leaf_sibling(order) ** (k - 1)).coeff(n)


def average_chain_size(n: int) -> Fraction:
    """Exact average chain size R_n / H_n."""
    if n < 1:
        raise DomainError("n must be at least 1")
    return Fraction(chains_total_size(n), chains_count(n))


def render_decimal(value: Fraction, significant_digits: int = 12) -> str:
    """Deterministic decimal rendering, round-half-even."""
    if significant_digits < 1:
        raise DomainError("need at least one significant digit")
    with localcontext() as ctx:
        ctx.prec = significant_digits
        ctx.rounding = ROUND_HALF_EVEN
        return str(Decimal(value.numerator) / Decimal(value.denominator))


@dataclass(frozen=True)
class AsymptoticReport:
    """Exact ratios against the growth laws H_n ~ (1/2)(9/2)^n and
    R_n ~ ((n+9)/12)(9/2)^n, plus the exact average R_n/H_n."""

    n: int
    h_n: int
    r_n: int
    average: Fraction
    h_ratio: Fraction  # H_n * 2 / (9/2)^n
    r_ratio: Fraction  # R_n * 12 / ((n+9) (9/2)^n)

    @property
    def average_decimal(self) -> str:
        return render_decimal(self.average)

    @property
    def h_ratio_decimal(self) -> str:
        return render_decimal(self.h_ratio)

    @property
    def r_ratio_decimal(self) -> str:
        return render_decimal(self.r_ratio)


def asymptotic_report(n: int) -> AsymptoticReport:
    if n < 1:
        raise DomainError("n must be at least 1")
    h_n = chains_count(n)
    r_n = chains_total_size(n)
    growth = Fraction(9, 2) ** n
    return AsymptoticReport(
        n=n,
        h_n=h_n,
        r_n=r_n,
        average=Fraction(r_n, h_n),
        h_ratio=Fraction(2 * h_n, 1) / growth,
        r_ratio=Fraction(12 * r_n, n + 9) / growth,
    )
