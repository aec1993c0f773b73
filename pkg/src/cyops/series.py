"""Truncated power series and bivariate series with exact rational coefficients.

Everything here is exact: coefficients are `fractions.Fraction`, truncation
orders are explicit, and binary operations return results truncated to the
largest order that both operands certify.  The module also provides
generalized hypergeometric series built from parameter multisets, the
coefficientwise (Hadamard) product, series composition, and algebraic powers
of series with unit constant term.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction

Rational = Fraction

DEFAULT_ORDER = 60


def default_order() -> int:
    """Global truncation order; override with the CYOPS_ORDER env variable."""
    return int(os.environ.get("CYOPS_ORDER", DEFAULT_ORDER))


class PoleInCoefficient(ArithmeticError):
    """A lower parameter makes a series coefficient divide by zero."""


class NonzeroConstantTerm(ValueError):
    """Inner series of a composition must vanish at the origin."""


def _rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def pochhammer(a, n: int) -> Fraction:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1."""
    a = _rat(a)
    out = Fraction(1)
    for k in range(n):
        out *= a + k
    return out


def binomial(a, k: int) -> Fraction:
    """Generalized binomial coefficient with rational upper argument."""
    a = _rat(a)
    out = Fraction(1)
    for j in range(k):
        out *= (a - j)
        out /= j + 1
    return out


class Series:
    """Dense truncated power series sum_{k<=order} c_k t^k over the rationals.

    Instances are immutable; all operations return new series.  Equality is
    truncation-aware: two series compare equal when they agree through the
    smaller of the two orders.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order: int | None = None):
        coeffs = [_rat(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("series order must be nonnegative")
        if len(coeffs) < order + 1:
            coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", tuple(coeffs[: order + 1]))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([1], order)

    @classmethod
    def identity(cls, order: int) -> "Series":
        """The series t."""
        return cls([0, 1], order)

    @classmethod
    def geometric(cls, order: int) -> "Series":
        """1/(1-t); the identity for the Hadamard product."""
        return cls([1] * (order + 1), order)

    def __getitem__(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series(self.coeffs[: order + 1], order)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Series([other], self.order)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    __hash__ = None

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*t")
            else:
                terms.append(f"{c}*t^{k}")
            if len(terms) >= 8:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        return f"Series({body}; O(t^{self.order + 1}))"

    def __neg__(self) -> "Series":
        return Series([-c for c in self.coeffs], self.order)

    def __add__(self, other) -> "Series":
        if isinstance(other, (int, Fraction)):
            other = Series([other], self.order)
        n = min(self.order, other.order)
        return Series([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], n)

    __radd__ = __add__

    def __sub__(self, other) -> "Series":
        return self + (-other if isinstance(other, Series) else Series([-_rat(other)], self.order))

    def __rsub__(self, other) -> "Series":
        return (-self) + other

    def __mul__(self, other) -> "Series":
        if isinstance(other, (int, Fraction)):
            return Series([c * other for c in self.coeffs], self.order)
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return Series(out, n)

    __rmul__ = __mul__

    def shift(self, k: int) -> "Series":
        """Multiply by t^k; the certified order grows along."""
        if k < 0:
            raise ValueError("negative shift")
        return Series([Fraction(0)] * k + list(self.coeffs), self.order + k)

    def derivative(self) -> "Series":
        if self.order == 0:
            return Series.zero(0)
        return Series([k * self.coeffs[k] for k in range(1, self.order + 1)], self.order - 1)

    def theta(self) -> "Series":
        """Apply t d/dt; exact on truncations."""
        return Series([k * c for k, c in enumerate(self.coeffs)], self.order)

    def inverse(self) -> "Series":
        if self.coeffs[0] == 0:
            raise ZeroDivisionError("series has no multiplicative inverse")
        inv0 = 1 / self.coeffs[0]
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                acc += self.coeffs[k] * out[n - k]
            out.append(-inv0 * acc)
        return Series(out, self.order)

    def __truediv__(self, other) -> "Series":
        if isinstance(other, (int, Fraction)):
            return self * (1 / _rat(other))
        return self * other.inverse()

    def __pow__(self, n: int) -> "Series":
        if n < 0:
            return self.inverse() ** (-n)
        out = Series.one(self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def compose(self, inner: "Series") -> "Series":
        return compose(self, inner)

    def algebraic_power(self, e) -> "Series":
        return algebraic_power(self, e)


def hadamard(a: Series, b: Series) -> Series:
    """Coefficientwise product; 1/(1-t) is the identity."""
    n = min(a.order, b.order)
    return Series([a.coeffs[k] * b.coeffs[k] for k in range(n + 1)], n)


def compose(outer: Series, inner: Series) -> Series:
    """Substitute inner(t) into outer, with inner(0) = 0 required."""
    if inner.coeffs[0] != 0:
        raise NonzeroConstantTerm("composition needs a zero constant term")
    n = min(outer.order, inner.order)
    out = Series([outer.coeffs[n]], n)
    for k in range(n - 1, -1, -1):
        out = out * inner + outer.coeffs[k]
    return out


def algebraic_power(s: Series, e) -> Series:
    """Raise a series with constant term 1 to a rational power.

    Computed as the binomial series in (s - 1); exact through s.order.
    """
    e = _rat(e)
    if s.coeffs[0] != 1:
        raise ValueError("algebraic_power needs constant term 1")
    u = s - 1
    out = Series.one(s.order)
    power = Series.one(s.order)
    for k in range(1, s.order + 1):
        power = power * u
        if power.is_zero():
            break
        out = out + binomial(e, k) * power
    return out


_PREFACTOR_BASES = ("t", "1-t", "1+t")


def _prefactor_series(base: str, expo: Fraction, order: int) -> Series:
    if base == "t":
        if expo.denominator != 1 or expo < 0:
            raise ValueError("prefactor base t needs a nonnegative integer exponent")
        return Series.identity(order) ** int(expo) if expo else Series.one(order)
    sign = -1 if base == "1-t" else 1
    coeffs = [binomial(expo, k) * sign**k for k in range(order + 1)]
    return Series(coeffs, order)


@dataclass(frozen=True)
class HypergeomSpec:
    """Parameter data for a generalized hypergeometric series.

    upper and lower are multisets of rational parameters; the series is
        sum_m  prod (a_i)_m / (prod (b_j)_m * m!)  *  t^(argument_power * m)
    optionally multiplied by prefactors base^exponent with
    base in {"t", "1-t", "1+t"}.
    """

    upper: tuple
    lower: tuple
    argument_power: int = 1
    prefactor: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(sorted(_rat(a) for a in self.upper)))
        object.__setattr__(self, "lower", tuple(sorted(_rat(b) for b in self.lower)))
        if self.argument_power not in (1, 2):
            raise ValueError("argument_power must be 1 or 2")
        pf = tuple((base, _rat(e)) for base, e in self.prefactor)
        for base, _ in pf:
            if base not in _PREFACTOR_BASES:
                raise ValueError(f"unknown prefactor base {base!r}")
        object.__setattr__(self, "prefactor", pf)

    def to_json(self) -> dict:
        out = {
            "upper": [str(a) for a in self.upper],
            "lower": [str(b) for b in self.lower],
            "argument_power": self.argument_power,
        }
        if self.prefactor:
            out["prefactor"] = [[base, str(e)] for base, e in self.prefactor]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "HypergeomSpec":
        return cls(
            upper=tuple(Fraction(a) for a in data["upper"]),
            lower=tuple(Fraction(b) for b in data["lower"]),
            argument_power=data.get("argument_power", 1),
            prefactor=tuple((base, Fraction(e)) for base, e in data.get("prefactor", ())),
        )

    def __str__(self) -> str:
        p, q = len(self.upper), len(self.lower)
        ups = ",".join(str(a) for a in self.upper)
        los = ",".join(str(b) for b in self.lower) or "-"
        arg = "t" if self.argument_power == 1 else "t^2"
        body = f"{p}F{q}({ups};{los}|{arg})"
        for base, e in self.prefactor:
            body = f"({base})^({e}) * " + body
        return body


def hypergeom_series(spec: HypergeomSpec, order: int | None = None) -> Series:
    """Expand the series described by spec through the given order."""
    if order is None:
        order = default_order()
    p = spec.argument_power
    coeffs = [Fraction(0)] * (order + 1)
    c = Fraction(1)
    coeffs[0] = c
    m = 0
    while (m + 1) * p <= order:
        num = Fraction(1)
        for a in spec.upper:
            num *= a + m
        den = Fraction(m + 1)
        for b in spec.lower:
            den *= b + m
        if den == 0:
            raise PoleInCoefficient(f"lower parameters vanish at index {m + 1}")
        c = c * num / den
        m += 1
        coeffs[m * p] = c
    out = Series(coeffs, order)
    for base, e in spec.prefactor:
        out = out * _prefactor_series(base, e, order)
    return out


class BiSeries:
    """Truncated bivariate series with coefficients on m + n <= order.

    Stored as a triangular dense table c[m][n].  Equality compares through
    the smaller total order.
    """

    __slots__ = ("rows", "order")

    def __init__(self, rows, order: int | None = None):
        if order is None:
            order = len(rows) - 1
        table = []
        for m in range(order + 1):
            src = rows[m] if m < len(rows) else []
            row = [_rat(c) for c in src[: order - m + 1]]
            row += [Fraction(0)] * (order - m + 1 - len(row))
            table.append(tuple(row))
        object.__setattr__(self, "rows", tuple(table))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("BiSeries is immutable")

    @classmethod
    def zero(cls, order: int) -> "BiSeries":
        return cls([], order)

    @classmethod
    def constant(cls, c, order: int) -> "BiSeries":
        return cls([[c]], order)

    def __getitem__(self, mn) -> Fraction:
        m, n = mn
        if m < 0 or n < 0 or m + n > self.order:
            raise IndexError(f"({m},{n}) beyond total order {self.order}")
        return self.rows[m][n]

    def is_zero(self) -> bool:
        return all(c == 0 for row in self.rows for c in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        n = min(self.order, other.order)
        for m in range(n + 1):
            if self.rows[m][: n - m + 1] != other.rows[m][: n - m + 1]:
                return False
        return True

    __hash__ = None

    def __repr__(self) -> str:
        terms = []
        for m in range(min(self.order, 4) + 1):
            for n in range(min(self.order - m, 4) + 1):
                c = self.rows[m][n]
                if c:
                    terms.append(f"{c}*x^{m}*y^{n}")
        body = " + ".join(terms[:6]) or "0"
        return f"BiSeries({body} + ...; total order {self.order})"

    def __neg__(self) -> "BiSeries":
        return BiSeries([[-c for c in row] for row in self.rows], self.order)

    def __add__(self, other) -> "BiSeries":
        if isinstance(other, (int, Fraction)):
            other = BiSeries.constant(other, self.order)
        n = min(self.order, other.order)
        return BiSeries(
            [[self.rows[m][k] + other.rows[m][k] for k in range(n - m + 1)] for m in range(n + 1)],
            n,
        )

    __radd__ = __add__

    def __sub__(self, other) -> "BiSeries":
        return self + (-other if isinstance(other, BiSeries) else -_rat(other))

    def __mul__(self, other) -> "BiSeries":
        if isinstance(other, (int, Fraction)):
            return BiSeries([[c * other for c in row] for row in self.rows], self.order)
        n = min(self.order, other.order)
        out = [[Fraction(0)] * (n - m + 1) for m in range(n + 1)]
        for m1 in range(n + 1):
            for n1 in range(n - m1 + 1):
                a = self.rows[m1][n1]
                if a == 0:
                    continue
                for m2 in range(n - m1 - n1 + 1):
                    for n2 in range(n - m1 - n1 - m2 + 1):
                        b = other.rows[m2][n2]
                        if b:
                            out[m1 + m2][n1 + n2] += a * b
        return BiSeries(out, n)

    __rmul__ = __mul__

    def dx(self) -> "BiSeries":
        if self.order == 0:
            return BiSeries.zero(0)
        return BiSeries(
            [[m * self.rows[m][k] for k in range(self.order - m + 1)] for m in range(1, self.order + 1)],
            self.order - 1,
        )

    def dy(self) -> "BiSeries":
        if self.order == 0:
            return BiSeries.zero(0)
        return BiSeries(
            [[k * self.rows[m][k] for k in range(1, self.order - m + 1)] for m in range(self.order)],
            self.order - 1,
        )

    def shift_x(self) -> "BiSeries":
        """Multiply by x."""
        return BiSeries([[Fraction(0)] * (self.order + 1)] + [list(r) for r in self.rows], self.order + 1)

    def shift_y(self) -> "BiSeries":
        """Multiply by y."""
        return BiSeries([[Fraction(0)] + list(r) for r in self.rows], self.order + 1)


def biseries_f2(p, q, qp, r, rp, order: int | None = None) -> BiSeries:
    """Appell-type double hypergeometric series with parameters (p; q, q'; r, r').

    Coefficient of x^m y^n is (p)_{m+n} (q)_m (q')_n / ((r)_m (r')_n m! n!).
    """
    if order is None:
        order = default_order()
    p, q, qp, r, rp = (_rat(v) for v in (p, q, qp, r, rp))
    rows = []
    for m in range(order + 1):
        rm = pochhammer(r, m)
        if rm == 0:
            raise PoleInCoefficient(f"lower parameter {r} vanishes at row {m}")
        row = []
        for n in range(order - m + 1):
            rpn = pochhammer(rp, n)
            if rpn == 0:
                raise PoleInCoefficient(f"lower parameter {rp} vanishes at column {n}")
            c = pochhammer(p, m + n) * pochhammer(q, m) * pochhammer(qp, n)
            c /= rm * rpn * pochhammer(1, m) * pochhammer(1, n)
            row.append(c)
        rows.append(row)
    return BiSeries(rows, order)
