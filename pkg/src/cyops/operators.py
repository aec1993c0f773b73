"""Differential operators in theta = t*d/dt with exact coefficients.

Two representations are used.  `ThetaOperator` stores polynomial-in-t
coefficients per theta power and is kept primitive: integer coefficients with
content 1, no common polynomial factor, positive leading sign.  `DOperator`
stores the monic form sum a_i(t) d^i with rational-function coefficients.
Conversions go through theta^k = sum S(k,j) t^j d^j and its inverse
t^j d^j = theta (theta-1) ... (theta-j+1).

On top of the two forms sit the structural operations: formal duality,
self-duality tests for orders 4 and 5, exterior and symmetric squares via
exact elimination in the wedge/symmetric bases, conjugation by products of
polynomial powers, the order-5 to order-4 pullback, and the substitution
t -> t^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .polys import Poly, RatFunc, _frac_gcd, _rat
from .series import HypergeomSpec, Series


class NotSelfDual(ValueError):
    """The operator fails a self-duality condition required by the caller."""


class DegenerateElimination(RuntimeError):
    """Wedge/symmetric power elimination did not close as expected."""


def theta_poly(shifts) -> Poly:
    """Product of (theta + s) over the shifts, as a polynomial in theta."""
    out = Poly([1])
    for s in shifts:
        out = out * Poly([_rat(s), 1])
    return out


def _poly_times_series(p: Poly, s: Series) -> Series:
    out = Series.zero(s.order)
    for j, c in enumerate(p.coeffs):
        if c:
            out = out + c * s.shift(j)
    return out


class ThetaOperator:
    """Operator sum_k p_k(t) theta^k with primitive integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [c if isinstance(c, Poly) else Poly([_rat(c)]) for c in coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        if not coeffs:
            raise ValueError("zero operator")
        # strip common polynomial factor, then scale to integer content 1
        g = Poly()
        for c in coeffs:
            if c:
                g = c.gcd(g) if g else c.monic()
        if g.degree > 0:
            coeffs = [c.divexact(g) if c else c for c in coeffs]
        content = Fraction(0)
        for c in coeffs:
            content = _frac_gcd(content, c.content())
        if content:
            coeffs = [c * (1 / content) for c in coeffs]
        # sign: highest theta power of the lowest t-degree part is positive
        j0 = min(
            next(j for j, c in enumerate(p.coeffs) if c)
            for p in coeffs
            if not p.is_zero()
        )
        lead = next(p[j0] for p in reversed(coeffs) if p[j0])
        if lead < 0:
            coeffs = [-c for c in coeffs]
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("ThetaOperator is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree_t(self) -> int:
        return max(c.degree for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ThetaOperator):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def t_graded(self) -> dict:
        """Decompose as sum_j t^j P_j(theta): map j -> Poly in theta."""
        out = {}
        for k, p in enumerate(self.coeffs):
            for j, c in enumerate(p.coeffs):
                if c:
                    cur = out.get(j, [])
                    while len(cur) <= k:
                        cur.append(Fraction(0))
                    cur[k] = c
                    out[j] = cur
        return {j: Poly(cs) for j, cs in out.items()}

    @classmethod
    def from_t_graded(cls, graded: dict) -> "ThetaOperator":
        order = max(p.degree for p in graded.values())
        coeffs = []
        for k in range(order + 1):
            row = {}
            for j, p in graded.items():
                if p[k]:
                    row[j] = p[k]
            top = max(row, default=-1)
            coeffs.append(Poly([row.get(j, Fraction(0)) for j in range(top + 1)]))
        return cls(coeffs)

    def apply(self, s: Series) -> Series:
        out = Series.zero(s.order)
        powered = s
        for k, p in enumerate(self.coeffs):
            if k:
                powered = powered.theta()
            if not p.is_zero():
                out = out + _poly_times_series(p, powered)
        return out

    def annihilates(self, s: Series, order: int | None = None) -> bool:
        """True when the operator kills the series through the order where
        a truncated check is conclusive (order minus the t-degree)."""
        if order is None:
            order = s.order
        res = self.apply(s.truncate(order))
        limit = order - self.degree_t
        return all(res[k] == 0 for k in range(0, limit + 1))

    def first_nonzero_index(self, s: Series, order: int | None = None):
        if order is None:
            order = s.order
        res = self.apply(s.truncate(order))
        for k in range(0, order - self.degree_t + 1):
            if res[k] != 0:
                return k
        return None

    def __mul__(self, other: "ThetaOperator") -> "ThetaOperator":
        """Composition self o other, up to the primitive normalization."""
        a = [RatFunc(c) for c in self.coeffs]
        b = [RatFunc(c) for c in other.coeffs]
        prod = _rop_mul(a, b)
        return ThetaOperator([r.as_poly() for r in prod])

    def to_d_form(self) -> "DOperator":
        n = self.order
        stirling = _stirling2(n)
        d_coeffs = [RatFunc(0)] * (n + 1)
        t = Poly.x()
        for k, p in enumerate(self.coeffs):
            if p.is_zero():
                continue
            for j in range(0, k + 1):
                s2 = stirling[k][j]
                if s2:
                    d_coeffs[j] = d_coeffs[j] + RatFunc(p * s2 * t**j)
        lead = d_coeffs[n]
        if lead.is_zero():
            raise ValueError("leading coefficient vanished in conversion")
        return DOperator([c / lead for c in d_coeffs])

    def substitute_square(self) -> "ThetaOperator":
        """Operator whose solutions are s(t^2) for solutions s of self."""
        graded = self.t_graded()
        out = {}
        for j, p in graded.items():
            out[2 * j] = Poly([c / Fraction(2) ** k for k, c in enumerate(p.coeffs)])
        return ThetaOperator.from_t_graded(out)

    def holomorphic_solution(self, order: int) -> Series:
        """Power-series solution with constant term 1 from the coefficient
        recurrence; resonant indices (indicial root at n >= 1) are taken
        with coefficient 0 after checking consistency."""
        graded = self.t_graded()
        indicial = graded.get(0)
        if indicial is None or indicial(0) != 0:
            raise ValueError("no holomorphic solution with unit constant term")
        coeffs = [Fraction(1)]
        for n in range(1, order + 1):
            rhs = Fraction(0)
            for j, p in graded.items():
                if 1 <= j <= n:
                    rhs -= p(n - j) * coeffs[n - j]
            lead = indicial(n)
            if lead == 0:
                if rhs != 0:
                    raise ValueError(f"no holomorphic solution: obstruction at t^{n}")
                coeffs.append(Fraction(0))
            else:
                coeffs.append(rhs / lead)
        return Series(coeffs, order)

    def to_json(self) -> dict:
        return {"theta_coeffs": [[str(c) for c in p.coeffs] for p in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "ThetaOperator":
        return cls([Poly([Fraction(c) for c in row]) for row in data["theta_coeffs"]])

    def to_string(self) -> str:
        parts = []
        for k in range(self.order, -1, -1):
            p = self.coeffs[k]
            if p.is_zero():
                continue
            if k == 0:
                body = p.to_string()
            else:
                th = "theta" if k == 1 else f"theta^{k}"
                if p == Poly([1]):
                    body = th
                elif p == Poly([-1]):
                    body = f"-{th}"
                elif p.degree == 0 or len([c for c in p.coeffs if c]) == 1:
                    body = f"{p.to_string()}*{th}"
                else:
                    body = f"({p.to_string()})*{th}"
            parts.append(body)
        out = parts[0]
        for part in parts[1:]:
            out += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return out

    def __repr__(self) -> str:
        return f"ThetaOperator({self.to_string()})"


def _stirling2(n: int) -> list:
    """Stirling numbers of the second kind, S[k][j] for k, j <= n."""
    s = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    s[0][0] = Fraction(1)
    for k in range(1, n + 1):
        for j in range(1, k + 1):
            s[k][j] = s[k - 1][j - 1] + j * s[k - 1][j]
    return s


def _falling_factorial_theta(j: int) -> Poly:
    """t^j d^j as a polynomial in theta: theta (theta-1) ... (theta-j+1)."""
    out = Poly([1])
    for i in range(j):
        out = out * Poly([-i, 1])
    return out


def _rop_theta_compose(b: list) -> list:
    """theta o B for B given as RatFunc coefficients by theta power."""
    out = [RatFunc(0)] * (len(b) + 1)
    for j, c in enumerate(b):
        out[j + 1] = out[j + 1] + c
        out[j] = out[j] + c.theta()
    return out


def _rop_mul(a: list, b: list) -> list:
    """Compose two theta-operators given as RatFunc coefficient lists."""
    theta_pows = [b]
    for _ in range(len(a) - 1):
        theta_pows.append(_rop_theta_compose(theta_pows[-1]))
    n = len(a) - 1 + len(b) - 1
    out = [RatFunc(0)] * (n + 1)
    for i, c in enumerate(a):
        if not c.is_zero():
            for j, d in enumerate(theta_pows[i]):
                out[j] = out[j] + c * d
    return out


class DOperator:
    """Monic operator d^n + sum a_i(t) d^i over rational functions."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [c if isinstance(c, RatFunc) else RatFunc._coerce(c) for c in coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        if not coeffs:
            raise ValueError("zero operator")
        if coeffs[-1] != RatFunc(1):
            raise ValueError("DOperator must be monic")
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("DOperator is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> RatFunc:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else RatFunc(0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DOperator):
            return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and all(
            x == y for x, y in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None

    def to_theta_form(self) -> ThetaOperator:
        n = self.order
        den = Poly([1])
        for c in self.coeffs:
            if not c.is_zero():
                g = den.gcd(c.den)
                den = den * c.den.divexact(g) if g.degree > 0 else den * c.den
        cleared = []
        for c in self.coeffs:
            cleared.append((c * RatFunc(den)).as_poly())
        # t^n * sum b_i d^i = sum b_i t^(n-i) (t^i d^i)
        theta_coeffs = [Poly()] * (n + 1)
        t = Poly.x()
        for i, b in enumerate(cleared):
            if b.is_zero():
                continue
            ff = _falling_factorial_theta(i)
            scaled = b * t ** (n - i)
            for k in range(ff.degree + 1):
                if ff[k]:
                    theta_coeffs[k] = theta_coeffs[k] + scaled * ff[k]
        return ThetaOperator(theta_coeffs)

    def dual(self) -> "DOperator":
        """Formal adjoint-type dual: d^n + sum (-1)^(n+i) d^i o a_i."""
        n = self.order
        out = [RatFunc(0)] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if a.is_zero():
                continue
            sign = 1 if (n + i) % 2 == 0 else -1
            # d^i o a = sum_r C(i, r) a^(i-r) d^r
            derivs = [a]
            for _ in range(i):
                derivs.append(derivs[-1].derivative())
            for r in range(i + 1):
                out[r] = out[r] + sign * Fraction(comb(i, r)) * derivs[i - r]
        return DOperator(out)

    def __repr__(self) -> str:
        parts = []
        for k in range(self.order, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            dk = "1" if k == 0 else ("d" if k == 1 else f"d^{k}")
            if k == self.order:
                parts.append(dk)
            elif k == 0:
                parts.append(f"({c.num.to_string()})/({c.den.to_string()})")
            else:
                parts.append(f"(({c.num.to_string()})/({c.den.to_string()}))*{dk}")
        return "DOperator(" + " + ".join(parts) + ")"


def hypergeom_operator(spec: HypergeomSpec) -> ThetaOperator:
    """Annihilator of the hypergeometric sum itself (prefactors excluded):

        theta * prod_j (theta + k(b_j - 1)) - k^(1+q-p) t^k prod_i (theta + k a_i)

    with k the argument power.  For k = 1 this is the classical form; the
    k-scaled shifts keep it exact for squared arguments with any lower
    parameters.
    """
    k = spec.argument_power
    p_up = theta_poly([k * a for a in spec.upper])
    p_low = theta_poly([k * (b - 1) for b in spec.lower]) * Poly([0, 1])
    scale = Fraction(k) ** (1 + len(spec.lower) - len(spec.upper))
    coeffs = []
    top = max(p_low.degree, p_up.degree)
    for m in range(top + 1):
        c = [Fraction(0)] * (k + 1)
        c[0] = p_low[m]
        c[k] = -scale * p_up[m]
        coeffs.append(Poly(c))
    return ThetaOperator(coeffs)


@dataclass(frozen=True)
class TwistFactor:
    """One factor p(t)^exponent of an algebraic prefactor."""

    poly: Poly
    exponent: Fraction

    def __post_init__(self):
        if not isinstance(self.poly, Poly) or self.poly.is_zero():
            raise ValueError("twist factor needs a nonzero polynomial")
        object.__setattr__(self, "exponent", _rat(self.exponent))


def conjugate(op: ThetaOperator, twists) -> ThetaOperator:
    """Conjugate by F = prod p_k^{r_k}: returns the operator L' with
    L(F u) = F L'(u), i.e. theta is replaced by theta + sum r_k t p_k'/p_k."""
    shift = RatFunc(0)
    t = Poly.x()
    for tw in twists:
        shift = shift + tw.exponent * RatFunc(t * tw.poly.derivative(), tw.poly)
    x = [shift, RatFunc(1)]  # theta + shift
    powers = [[RatFunc(1)]]
    for _ in range(op.order):
        powers.append(_rop_mul(x, powers[-1]))
    out = [RatFunc(0)] * (op.order + 1)
    for i, c in enumerate(op.coeffs):
        if c.is_zero():
            continue
        rc = RatFunc(c)
        for j, d in enumerate(powers[i]):
            out[j] = out[j] + rc * d
    den = Poly([1])
    for c in out:
        if not c.is_zero():
            g = den.gcd(c.den)
            den = den * c.den.divexact(g) if g.degree > 0 else den * c.den
    return ThetaOperator([(c * RatFunc(den)).as_poly() for c in out])


def is_self_dual_order4(op) -> bool:
    """Order-4 self-duality: 8 a1 - 8 a2' + 4 a3'' - 4 a2 a3 + 6 a3 a3' + a3^3 = 0."""
    d = op.to_d_form() if isinstance(op, ThetaOperator) else op
    if d.order != 4:
        raise ValueError("order-4 condition needs an order-4 operator")
    a1, a2, a3 = d[1], d[2], d[3]
    cond = (
        8 * a1
        - 8 * a2.derivative()
        + 4 * a3.derivative().derivative()
        - 4 * a2 * a3
        + 6 * a3 * a3.derivative()
        + a3 * a3 * a3
    )
    return cond.is_zero()


def _order5_conditions(d: DOperator):
    b4, b3, b2, b1, b0 = d[4], d[3], d[2], d[1], d[0]
    b4p = b4.derivative()
    b4pp = b4p.derivative()
    b4ppp = b4pp.derivative()
    b4pppp = b4ppp.derivative()
    b3p = b3.derivative()
    b3pp = b3p.derivative()
    b3ppp = b3pp.derivative()
    b1p = b1.derivative()
    c1 = b2 - (
        Fraction(3, 2) * b3p
        + Fraction(3, 5) * b4 * b3
        - b4pp
        - Fraction(6, 5) * b4 * b4p
        - Fraction(4, 25) * b4 * b4 * b4
    )
    c2 = b0 - (
        Fraction(1, 5) * b4pppp
        - Fraction(1, 4) * b3ppp
        + Fraction(2, 5) * b4 * b4ppp
        - Fraction(3, 10) * b4 * b3pp
        + (Fraction(8, 25) * b4 * b4 + Fraction(4, 5) * b4p - Fraction(1, 10) * b3) * b4pp
        + Fraction(1, 2) * b1p
        + (Fraction(-3, 25) * b4 * b4 - Fraction(3, 10) * b4p) * b3p
        + Fraction(12, 25) * b4 * b4p * b4p
        + (Fraction(-3, 25) * b3 * b4 + Fraction(16, 125) * b4 * b4 * b4) * b4p
        - Fraction(2, 125) * b3 * b4 * b4 * b4
        + Fraction(1, 5) * b1 * b4
        + Fraction(16, 3125) * b4**5
    )
    return c1, c2


def is_self_dual_order5(op) -> bool:
    """Order-5 self-duality: the b2 and b0 closure conditions both hold."""
    d = op.to_d_form() if isinstance(op, ThetaOperator) else op
    if d.order != 5:
        raise ValueError("order-5 condition needs an order-5 operator")
    c1, c2 = _order5_conditions(d)
    return c1.is_zero() and c2.is_zero()


def yifan_yang_pullback(op) -> ThetaOperator:
    """Order-4 operator whose exterior square recovers the order-5 input.

    The input must satisfy both order-5 self-duality conditions; otherwise
    NotSelfDual is raised.
    """
    d = op.to_d_form() if isinstance(op, ThetaOperator) else op
    if d.order != 5:
        raise ValueError("pullback needs an order-5 operator")
    c1, c2 = _order5_conditions(d)
    if not c1.is_zero() or not c2.is_zero():
        raise NotSelfDual("order-5 operator is not self-dual")
    b4, b3, b1 = d[4], d[3], d[1]
    b4p = b4.derivative()
    b4pp = b4p.derivative()
    b4ppp = b4pp.derivative()
    b3p = b3.derivative()
    b3pp = b3p.derivative()
    a3 = Fraction(2, 5) * b4
    a2 = Fraction(-7, 50) * b4 * b4 - Fraction(2, 5) * b4p + Fraction(1, 2) * b3
    a1 = (
        Fraction(-9, 250) * b4 * b4 * b4
        - Fraction(12, 25) * b4 * b4p
        + Fraction(1, 10) * b4 * b3
        - Fraction(3, 5) * b4pp
        + Fraction(1, 2) * b3p
    )
    a0 = (
        Fraction(-2, 5) * b4ppp
        + Fraction(3, 8) * b3pp
        - Fraction(23, 50) * b4 * b4pp
        + Fraction(1, 5) * b4 * b3p
        - Fraction(27, 100) * b4p * b4p
        + (Fraction(-18, 125) * b4 * b4 - Fraction(1, 20) * b3) * b4p
        - Fraction(19, 10000) * b4**4
        - Fraction(3, 200) * b4 * b4 * b3
        + Fraction(1, 16) * b3 * b3
        - Fraction(1, 4) * b1
    )
    return DOperator([a0, a1, a2, a3, RatFunc(1)]).to_theta_form()


def _wedge_derivative(state: dict, d: DOperator) -> dict:
    """Derivative in the wedge basis w_ab ~ y^(a) z^(b) - y^(b) z^(a), a < b."""
    n = d.order
    out = {}

    def add(a, b, c):
        if a == b:
            return
        if a > b:
            a, b = b, a
            c = -c
        out[(a, b)] = out.get((a, b), RatFunc(0)) + c

    for (a, b), c in state.items():
        add(a + 1, b, c)
        add(a, b + 1, c)
    out = {k: v for k, v in out.items() if not v.is_zero()}
    if any(b == n for _, b in out):
        reduced = {}
        for (a, b), c in out.items():
            if b != n:
                reduced[(a, b)] = reduced.get((a, b), RatFunc(0)) + c
                continue
            for i in range(n):
                coef = -d[i] * c
                if coef.is_zero() or i == a:
                    continue
                if i < a:
                    coef = -coef
                key = (min(a, i), max(a, i))
                reduced[key] = reduced.get(key, RatFunc(0)) + coef
        out = {k: v for k, v in reduced.items() if not v.is_zero()}
    return out


def _sym_pair_derivative(state: dict, d: DOperator) -> dict:
    """Derivative in the symmetric-square basis v_ab ~ y^(a) z^(b) + y^(b) z^(a)
    (a < b) and v_aa ~ y^(a) z^(a)."""
    n = d.order
    out = {}

    def add(a, b, c):
        if a > b:
            a, b = b, a
        out[(a, b)] = out.get((a, b), RatFunc(0)) + c

    for (a, b), c in state.items():
        if a == b:
            add(a, a + 1, c)
        else:
            if a + 1 == b:
                add(b, b, 2 * c)
            else:
                add(a + 1, b, c)
            add(a, b + 1, c)
    out = {k: v for k, v in out.items() if not v.is_zero()}
    if any(b == n for _, b in out):
        reduced = {}
        for (a, b), c in out.items():
            if b != n:
                reduced[(a, b)] = reduced.get((a, b), RatFunc(0)) + c
                continue
            for i in range(n):
                coef = -d[i] * c
                if coef.is_zero():
                    continue
                if i == a:
                    coef = 2 * coef  # y^(a) z^(a) counted from both slots
                key = (min(a, i), max(a, i))
                reduced[key] = reduced.get(key, RatFunc(0)) + coef
        out = {k: v for k, v in reduced.items() if not v.is_zero()}
    return out


def _first_dependence(vectors: list, basis_keys: list):
    """Index k and coefficients c with V_k = sum c_i V_i, via exact
    elimination over the rational-function field; None if independent."""
    index = {key: i for i, key in enumerate(basis_keys)}
    echelon = []  # (pivot, row, combo) with row[pivot] == 1
    for k, vec in enumerate(vectors):
        row = [RatFunc(0)] * len(basis_keys)
        for key, c in vec.items():
            row[index[key]] = c
        combo = [RatFunc(0)] * len(vectors)
        combo[k] = RatFunc(1)
        for pivot, erow, ecombo in echelon:
            c = row[pivot]
            if c.is_zero():
                continue
            row = [x - c * y for x, y in zip(row, erow)]
            combo = [x - c * y for x, y in zip(combo, ecombo)]
        pivot = next((i for i, x in enumerate(row) if not x.is_zero()), None)
        if pivot is None:
            sol = [-combo[i] for i in range(k)]
            return k, sol
        lead = row[pivot]
        row = [x / lead for x in row]
        combo = [x / lead for x in combo]
        echelon.append((pivot, row, combo))
    return None, None


def _power_operator(op: ThetaOperator, antisym: bool) -> ThetaOperator:
    d = op.to_d_form()
    n = d.order
    if antisym:
        start = {(0, 1): RatFunc(1)}
        dim = n * (n - 1) // 2
        keys = [(a, b) for a in range(n) for b in range(a + 1, n)]

        def basis_step(s):
            return _wedge_derivative(s, d)

    else:
        start = {(0, 0): RatFunc(1)}
        dim = n * (n + 1) // 2
        keys = [(a, b) for a in range(n) for b in range(a, n)]

        def basis_step(s):
            return _sym_pair_derivative(s, d)

    def step(state):
        # product rule: differentiate coefficients, then the basis elements
        out = basis_step(state)
        for key, c in state.items():
            dc = c.derivative()
            if not dc.is_zero():
                out[key] = out.get(key, RatFunc(0)) + dc
        return {k: v for k, v in out.items() if not v.is_zero()}
    vectors = [start]
    for _ in range(dim):
        vectors.append(step(vectors[-1]))
    dep_at, combo = _first_dependence(vectors, keys)
    if dep_at is None:
        raise DegenerateElimination("no linear dependence found in the pair basis")
    if dep_at == 0:
        raise DegenerateElimination("starting pair vanishes identically")
    coeffs = [-c for c in combo] + [RatFunc(1)]
    return DOperator(coeffs).to_theta_form()


def exterior_square(op: ThetaOperator) -> ThetaOperator:
    """Annihilator of wedge products y z' - y' z of solution pairs."""
    return _power_operator(op, antisym=True)


def symmetric_square(op: ThetaOperator) -> ThetaOperator:
    """Annihilator of symmetric products y z of solution pairs."""
    return _power_operator(op, antisym=False)
