"""Exact polynomial arithmetic: univariate and multivariate, plus fractions.

Univariate `Poly`/`RatFunc` over the rationals back the differential-operator
algebra (coefficients in t).  Sparse `MultiPoly` over the fixed variable set
(t, u, s, v, Z, lam, a, b) backs the Weierstrass models, with `Frac` as its
fraction field and `UPoly` as univariate polynomials over that field for
per-fiber computations.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd, isqrt

Rational = Fraction


def _rat(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Poly:
    """Dense univariate polynomial over the rationals; () is the zero poly."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [_rat(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __add__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        out = Poly([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: "Poly"):
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.leading()
        quot = [Fraction(0)] * max(len(rem) - d, 0)
        for k in range(len(rem) - d - 1, -1, -1):
            c = rem[k + d] / lead
            if c:
                quot[k] = c
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quot), Poly(rem[:d])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def divexact(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise ValueError("division is not exact")
        return q

    def derivative(self) -> "Poly":
        return Poly([k * self.coeffs[k] for k in range(1, len(self.coeffs))])

    def theta(self) -> "Poly":
        """t * d/dt."""
        return Poly([k * c for k, c in enumerate(self.coeffs)])

    def compose(self, inner: "Poly") -> "Poly":
        out = Poly()
        for c in reversed(self.coeffs):
            out = out * inner + c
        return out

    def __call__(self, x):
        if isinstance(x, Poly):
            return self.compose(x)
        x = _rat(x)
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def content(self) -> Fraction:
        """Positive rational c with self/c integer-primitive; 0 for zero."""
        if not self.coeffs:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.coeffs:
            num = int_gcd(num, c.numerator)
            den = den * c.denominator // int_gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> "Poly":
        c = self.content()
        if c == 0:
            return self
        p = self * (1 / c)
        return -p if p.leading() < 0 else p

    def monic(self) -> "Poly":
        return self * (1 / self.leading()) if self.coeffs else self

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while b.coeffs:
            a, b = b, a % b
        return a.monic() if a.coeffs else a

    def to_string(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                xk = var if k == 1 else f"{var}^{k}"
                body = xk if mag == 1 else f"{mag}*{xk}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self.to_string()})"


class RatFunc:
    """Quotient of univariate polynomials, reduced, denominator monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = Poly([num])
        if den is None:
            den = Poly([1])
        elif isinstance(den, (int, Fraction)):
            den = Poly([den])
        if not den.coeffs:
            raise ZeroDivisionError("zero denominator")
        if num.coeffs:
            g = num.gcd(den)
            if g.degree > 0:
                num = num.divexact(g)
                den = den.divexact(g)
            lead = den.leading()
            num = num * (1 / lead)
            den = den * (1 / lead)
        else:
            den = Poly([1])
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Poly)):
            other = RatFunc(other if isinstance(other, Poly) else Poly([other]))
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    @staticmethod
    def _coerce(x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Poly):
            return RatFunc(x)
        return RatFunc(Poly([_rat(x)]))

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __add__(self, other) -> "RatFunc":
        o = self._coerce(other)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RatFunc":
        return (-self) + other

    def __mul__(self, other) -> "RatFunc":
        o = self._coerce(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> "RatFunc":
        return self._coerce(other) / self

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return RatFunc(self.den, self.num) ** (-n)
        return RatFunc(self.num**n, self.den**n)

    def derivative(self) -> "RatFunc":
        return RatFunc(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def theta(self) -> "RatFunc":
        """t * d/dt."""
        return RatFunc(Poly([0, 1])) * self.derivative()

    def is_poly(self) -> bool:
        return self.den.degree == 0

    def as_poly(self) -> Poly:
        if not self.is_poly():
            raise ValueError(f"not a polynomial: {self!r}")
        return self.num

    def __repr__(self) -> str:
        if self.is_poly():
            return f"RatFunc({self.num.to_string()})"
        return f"RatFunc(({self.num.to_string()}) / ({self.den.to_string()}))"


VARS = ("t", "u", "s", "v", "Z", "lam", "a", "b")
_NVARS = len(VARS)
_VAR_INDEX = {name: i for i, name in enumerate(VARS)}
_ZEXP = (0,) * _NVARS


class MultiPoly:
    """Sparse polynomial in the variables t, u, s, v, Z, lam, a, b."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for exps, c in (terms or {}).items():
            c = _rat(c)
            if c:
                clean[tuple(exps)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def const(cls, c) -> "MultiPoly":
        return cls({_ZEXP: c})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MultiPoly":
        exps = [0] * _NVARS
        exps[_VAR_INDEX[name]] = power
        return cls({tuple(exps): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_const(self) -> bool:
        return not self.terms or set(self.terms) == {_ZEXP}

    def const_value(self) -> Fraction:
        if not self.is_const():
            raise ValueError("not a constant")
        return self.terms.get(_ZEXP, Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    @staticmethod
    def _coerce(x) -> "MultiPoly":
        if isinstance(x, MultiPoly):
            return x
        return MultiPoly.const(_rat(x))

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({e: -c for e, c in self.terms.items()})

    def __add__(self, other) -> "MultiPoly":
        o = self._coerce(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return MultiPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return MultiPoly({e: c * other for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def degree(self, var: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        i = _VAR_INDEX[var]
        return max((e[i] for e in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def variables(self) -> tuple:
        present = [False] * _NVARS
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    present[i] = True
        return tuple(VARS[i] for i in range(_NVARS) if present[i])

    def coeffs_wrt(self, var: str) -> dict:
        """Map power -> MultiPoly coefficient (free of var)."""
        i = _VAR_INDEX[var]
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            rest = e[:i] + (0,) + e[i + 1 :]
            bucket = out.setdefault(k, {})
            bucket[rest] = bucket.get(rest, Fraction(0)) + c
        return {k: MultiPoly(b) for k, b in out.items()}

    def coeff_wrt(self, var: str, power: int) -> "MultiPoly":
        return self.coeffs_wrt(var).get(power, MultiPoly())

    def derivative(self, var: str) -> "MultiPoly":
        i = _VAR_INDEX[var]
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = e[:i] + (e[i] - 1,) + e[i + 1 :]
                out[e2] = out.get(e2, Fraction(0)) + c * e[i]
        return MultiPoly(out)

    def subs(self, values: dict) -> "Frac":
        """Substitute Frac/MultiPoly/rational values for variables."""
        return Frac(self).subs(values)

    def eval(self, point: dict) -> Fraction:
        """Evaluate with every present variable given a rational value."""
        out = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    term *= _rat(point[VARS[i]]) ** k
            out += term
        return out

    def content(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = int_gcd(num, c.numerator)
            den = den * c.denominator // int_gcd(den, c.denominator)
        return Fraction(num, den)

    def monomial_content(self) -> tuple:
        exps = None
        for e in self.terms:
            exps = e if exps is None else tuple(min(x, y) for x, y in zip(exps, e))
        return exps if exps is not None else _ZEXP

    def shift_exponents(self, delta: tuple) -> "MultiPoly":
        return MultiPoly(
            {tuple(x - d for x, d in zip(e, delta)): c for e, c in self.terms.items()}
        )

    def _sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def leading_coeff_sign(self) -> int:
        if not self.terms:
            return 0
        return 1 if self._sorted_terms()[0][1] > 0 else -1

    def to_json(self) -> list:
        return [[list(e), str(c)] for e, c in self._sorted_terms()]

    @classmethod
    def from_json(cls, rows) -> "MultiPoly":
        return cls({tuple(e): Fraction(c) for e, c in rows})

    def to_string(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self._sorted_terms():
            mons = []
            for i, k in enumerate(e):
                if k == 1:
                    mons.append(VARS[i])
                elif k > 1:
                    mons.append(f"{VARS[i]}^{k}")
            mag = abs(c)
            if mons:
                body = "*".join(mons) if mag == 1 else "*".join([str(mag)] + mons)
            else:
                body = str(mag)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_string()})"


def mp_divexact(f: MultiPoly, g: MultiPoly):
    """Exact multivariate division f / g, or None when g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero():
        return MultiPoly()
    if g.is_const():
        return f * (1 / g.const_value())
    var = g.variables()[-1]
    gc = g.coeffs_wrt(var)
    dg = max(gc)
    glead = gc[dg]
    rem = f.coeffs_wrt(var)
    quot = {}
    while rem:
        dr = max(rem)
        if dr < dg:
            return None
        q = mp_divexact(rem[dr], glead)
        if q is None:
            return None
        quot[dr - dg] = q
        for k, c in gc.items():
            upd = rem.get(dr - dg + k, MultiPoly()) - q * c
            if upd.is_zero():
                rem.pop(dr - dg + k, None)
            else:
                rem[dr - dg + k] = upd
    out = MultiPoly()
    for k, c in quot.items():
        out = out + c * MultiPoly.var(var, k)
    return out


def _rat_sqrt(c: Fraction):
    if c < 0:
        return None
    rn, rd = isqrt(c.numerator), isqrt(c.denominator)
    if rn * rn == c.numerator and rd * rd == c.denominator:
        return Fraction(rn, rd)
    return None


def mp_sqrt(f: MultiPoly):
    """Exact square root of a perfect-square polynomial, or None.

    The root is normalized to positive leading coefficient (in the term order
    used for printing).
    """
    if f.is_zero():
        return MultiPoly()
    if f.is_const():
        r = _rat_sqrt(f.const_value())
        return None if r is None else MultiPoly.const(r)
    var = f.variables()[-1]
    fc = f.coeffs_wrt(var)
    df = max(fc)
    if df % 2:
        return None
    lead = mp_sqrt(fc[df])
    if lead is None:
        return None
    half = df // 2
    root = {half: lead}
    for k in range(half - 1, -1, -1):
        acc = MultiPoly()
        mid = k + half
        for i in range(k + 1, half + 1):
            j = mid - i
            if j <= i:
                break
            if i in root and j in root:
                acc = acc + root[i] * root[j] * 2
        if mid % 2 == 0 and k < mid // 2 < half:
            h = root[mid // 2]
            acc = acc + h * h
        target = fc.get(mid, MultiPoly()) - acc
        c = mp_divexact(target, lead * 2)
        if c is None:
            return None
        root[k] = c
    out = MultiPoly()
    for k, c in root.items():
        out = out + c * MultiPoly.var(var, k)
    if (out * out) == f:
        return out if out.leading_coeff_sign() >= 0 else -out
    return None


def _frac_gcd(a: Fraction, b: Fraction) -> Fraction:
    num = int_gcd(a.numerator, b.numerator)
    den = a.denominator * b.denominator // int_gcd(a.denominator, b.denominator)
    return Fraction(num, den)


class Frac:
    """Fraction of multivariate polynomials, lightly reduced.

    Equality is by cross-multiplication, so incomplete reduction is safe.
    Reduction removes shared rational and monomial content and detects the
    case where the denominator divides the numerator exactly.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = MultiPoly._coerce(num)
        den = MultiPoly.const(1) if den is None else MultiPoly._coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = MultiPoly.const(1)
        elif den.is_const():
            num = num * (1 / den.const_value())
            den = MultiPoly.const(1)
        else:
            q = mp_divexact(num, den)
            if q is not None:
                num, den = q, MultiPoly.const(1)
            else:
                mn, md = num.monomial_content(), den.monomial_content()
                shared = tuple(min(x, y) for x, y in zip(mn, md))
                if any(shared):
                    num = num.shift_exponents(shared)
                    den = den.shift_exponents(shared)
                g = _frac_gcd(num.content(), den.content())
                if g != 1:
                    num = num * (1 / g)
                    den = den * (1 / g)
                if den.leading_coeff_sign() < 0:
                    num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("Frac is immutable")

    @staticmethod
    def _coerce2(x) -> "Frac":
        if isinstance(x, Frac):
            return x
        return Frac(MultiPoly._coerce(x))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if not isinstance(other, (Frac, MultiPoly, int, Fraction)):
            return NotImplemented
        o = self._coerce2(other)
        return (self.num * o.den) == (o.num * self.den)

    __hash__ = None

    def __neg__(self) -> "Frac":
        return Frac(-self.num, self.den)

    def __add__(self, other) -> "Frac":
        o = self._coerce2(other)
        if self.den == o.den:
            return Frac(self.num + o.num, self.den)
        return Frac(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other) -> "Frac":
        return self + (-self._coerce2(other))

    def __rsub__(self, other) -> "Frac":
        return (-self) + other

    def __mul__(self, other) -> "Frac":
        o = self._coerce2(other)
        return Frac(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Frac":
        o = self._coerce2(other)
        if o.is_zero():
            raise ZeroDivisionError("division by zero")
        return Frac(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> "Frac":
        return self._coerce2(other) / self

    def __pow__(self, n: int) -> "Frac":
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return Frac(self.den, self.num) ** (-n)
        return Frac(self.num**n, self.den**n)

    def is_poly(self) -> bool:
        return self.den.is_const() or mp_divexact(self.num, self.den) is not None

    def as_poly(self) -> MultiPoly:
        if self.den.is_const():
            return self.num * (1 / self.den.const_value())
        q = mp_divexact(self.num, self.den)
        if q is None:
            raise ValueError(f"not a polynomial: {self!r}")
        return q

    def subs(self, values: dict) -> "Frac":
        out = self
        for var, val in values.items():
            val = Frac._coerce2(val)
            num = _horner_subs(out.num, var, val)
            den = _horner_subs(out.den, var, val)
            out = num / den
        return out

    def derivative(self, var: str) -> "Frac":
        return Frac(
            self.num.derivative(var) * self.den - self.num * self.den.derivative(var),
            self.den * self.den,
        )

    def eval(self, point: dict) -> Fraction:
        d = self.den.eval(point)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the point")
        return self.num.eval(point) / d

    def __repr__(self) -> str:
        if self.den.is_const():
            return f"Frac({self.num.to_string()})"
        return f"Frac(({self.num.to_string()}) / ({self.den.to_string()}))"


def _horner_subs(p: MultiPoly, var: str, val: Frac) -> Frac:
    if p.degree(var) < 1:
        return Frac(p)
    cs = p.coeffs_wrt(var)
    out = Frac(MultiPoly())
    for k in range(max(cs), -1, -1):
        out = out * val + Frac(cs.get(k, MultiPoly()))
    return out


class UPoly:
    """Univariate polynomial over the Frac field, for fiber analysis."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [c if isinstance(c, Frac) else Frac._coerce2(c) for c in coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("UPoly is immutable")

    @classmethod
    def from_multipoly(cls, p: MultiPoly, var: str) -> "UPoly":
        cs = p.coeffs_wrt(var)
        top = max(cs, default=-1)
        return cls([Frac(cs.get(k, MultiPoly())) for k in range(top + 1)])

    def to_multipoly_pair(self, var: str):
        """Clear denominators and content: (primitive MultiPoly, Frac unit)
        with self == primitive * unit as polynomials in var."""
        den = MultiPoly.const(1)
        for c in self.coeffs:
            if not c.is_zero() and mp_divexact(den, c.den) is None:
                den = den * c.den
        out = MultiPoly()
        for k, c in enumerate(self.coeffs):
            out = out + (c * Frac(den)).as_poly() * MultiPoly.var(var, k)
        cont = out.content()
        if cont not in (0, 1):
            out = out * (1 / cont)
        if out.leading_coeff_sign() < 0:
            out = -out
            cont = -cont
        return out, Frac(MultiPoly.const(cont), den)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Frac:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Frac(MultiPoly())

    def leading(self) -> Frac:
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, UPoly):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(x == y for x, y in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def __neg__(self) -> "UPoly":
        return UPoly([-c for c in self.coeffs])

    def __add__(self, other: "UPoly") -> "UPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly([self[k] + other[k] for k in range(n)])

    def __sub__(self, other: "UPoly") -> "UPoly":
        return self + (-other)

    def __mul__(self, other) -> "UPoly":
        if isinstance(other, (int, Fraction, Frac, MultiPoly)):
            o = Frac._coerce2(other)
            return UPoly([c * o for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UPoly()
        out = [Frac(MultiPoly())] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if not x.is_zero():
                for j, y in enumerate(other.coeffs):
                    if not y.is_zero():
                        out[i + j] = out[i + j] + x * y
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UPoly":
        out = UPoly([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: "UPoly"):
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.leading()
        quot = [Frac(MultiPoly())] * max(len(rem) - d, 0)
        for k in range(len(rem) - d - 1, -1, -1):
            c = rem[k + d] / lead
            if not c.is_zero():
                quot[k] = c
                for j, y in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * y
        return UPoly(quot), UPoly(rem[:d])

    def __mod__(self, other: "UPoly") -> "UPoly":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "UPoly") -> "UPoly":
        return divmod(self, other)[0]

    def divexact(self, other: "UPoly") -> "UPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def divides(self, other: "UPoly") -> bool:
        if self.is_zero():
            return other.is_zero()
        return divmod(other, self)[1].is_zero()

    def monic(self) -> "UPoly":
        if not self.coeffs:
            return self
        lead = self.leading()
        return UPoly([c / lead for c in self.coeffs])

    def derivative(self) -> "UPoly":
        return UPoly([k * self.coeffs[k] for k in range(1, len(self.coeffs))])

    def gcd(self, other: "UPoly") -> "UPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def squarefree_decomposition(self) -> list:
        """Yun's algorithm: [(factor, multiplicity)] with monic squarefree
        pairwise-coprime factors whose powers multiply to self up to a unit."""
        f = self.monic()
        if f.degree < 1:
            return []
        fp = f.derivative()
        a = f.gcd(fp)
        b = f.divexact(a)
        c = fp.divexact(a)
        out = []
        i = 1
        while b.degree > 0:
            d = c - b.derivative()
            g = b.gcd(d)
            if g.degree > 0:
                out.append((g, i))
            b = b.divexact(g)
            c = d.divexact(g)
            i += 1
        return out

    def eval(self, x) -> Frac:
        x = Frac._coerce2(x)
        out = Frac(MultiPoly())
        for c in reversed(self.coeffs):
            out = out * x + c
        return out
