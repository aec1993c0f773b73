"""Weierstrass models with exact rational coefficients.

The catalog of extremal rational elliptic surfaces, quadratic/base-change
twist constructions building K3 and Calabi-Yau families from them, Kodaira
classification of singular fibers, and polynomial substitution identities.

A model is y^2 = 4x^3 - g2*x - g3 with g2, g3 multivariate polynomials
over the rationals; "t" is the family parameter and fibration_var names
the coordinate on the base rational curve used for fiber analysis.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from cyops.polys import Frac, MultiPoly, UPoly, mp_sqrt

INF = "inf"

_BIG = 10**9


class UnknownSurface(KeyError):
    pass


class IdenticallySingular(ValueError):
    pass


class NonMinimalAtLocus(ValueError):
    pass


class NonPolynomialResult(ValueError):
    pass


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _mp(x) -> MultiPoly:
    return MultiPoly._coerce(x)


def _var(name: str) -> MultiPoly:
    return MultiPoly.var(name)


# ---------------------------------------------------------------------------
# Kodaira types


_EULER_FIXED = {"smooth": 0, "II": 2, "III": 3, "IV": 4, "IV*": 8, "III*": 9, "II*": 10}
_TAGS = ("smooth", "I", "I*", "II", "III", "IV", "II*", "III*", "IV*")


@dataclass(frozen=True)
class KodairaType:
    tag: str
    n: int = None

    def __post_init__(self):
        if self.tag not in _TAGS:
            raise ValueError(f"unknown Kodaira tag {self.tag!r}")
        if self.tag == "I":
            if self.n is None or self.n < 1:
                raise ValueError("I(n) needs n >= 1")
        elif self.tag == "I*":
            if self.n is None or self.n < 0:
                raise ValueError("I*(n) needs n >= 0")
        elif self.n is not None:
            raise ValueError(f"{self.tag} carries no index")

    @classmethod
    def smooth(cls) -> "KodairaType":
        return cls("smooth")

    @classmethod
    def I(cls, n: int) -> "KodairaType":
        return cls("I", n)

    @classmethod
    def Istar(cls, n: int) -> "KodairaType":
        return cls("I*", n)

    @classmethod
    def from_string(cls, s: str) -> "KodairaType":
        s = s.strip()
        if s in _EULER_FIXED:
            return cls(s)
        if s.startswith("I"):
            body = s[1:]
            if body.endswith("*"):
                return cls.Istar(int(body[:-1]))
            return cls.I(int(body))
        raise ValueError(f"cannot parse Kodaira type {s!r}")

    @property
    def euler(self) -> int:
        if self.tag == "I":
            return self.n
        if self.tag == "I*":
            return self.n + 6
        return _EULER_FIXED[self.tag]

    def __str__(self) -> str:
        if self.tag == "I":
            return f"I{self.n}"
        if self.tag == "I*":
            return f"I{self.n}*"
        return self.tag


def _classify_orders(a: int, b: int, d: int, where="") -> KodairaType:
    at = f" at {where}" if where else ""
    if d < 0:
        raise ValueError(f"negative discriminant order{at}; weight too small")
    if d == 0:
        return KodairaType.smooth()
    if a >= 4 and b >= 6:
        raise NonMinimalAtLocus(f"orders ({a},{b}) are non-minimal{at}")
    if a == 0 and b == 0:
        return KodairaType.I(d)
    if a >= 1 and b == 1 and d == 2:
        return KodairaType("II")
    if a == 1 and b >= 2 and d == 3:
        return KodairaType("III")
    if a >= 2 and b == 2 and d == 4:
        return KodairaType("IV")
    if d == 6 and ((a == 2 and b >= 3) or (a >= 2 and b == 3)):
        return KodairaType.Istar(0)
    if a == 2 and b == 3 and d >= 7:
        return KodairaType.Istar(d - 6)
    if a >= 3 and b == 4 and d == 8:
        return KodairaType("IV*")
    if a == 3 and b >= 5 and d == 9:
        return KodairaType("III*")
    if a >= 4 and b == 5 and d == 10:
        return KodairaType("II*")
    raise ValueError(f"vanishing orders ({a},{b},{d}) match no Kodaira type{at}")


# ---------------------------------------------------------------------------
# Models


def _order_along(f: MultiPoly, h: MultiPoly) -> int:
    if f.is_zero():
        return _BIG
    if h.is_const():
        raise ValueError("order along a constant locus is undefined")
    from cyops.polys import mp_divexact

    k = 0
    while True:
        q = mp_divexact(f, h)
        if q is None:
            return k
        f = q
        k += 1


def _canonical_locus(h: MultiPoly) -> MultiPoly:
    c = h.content()
    if c not in (0, 1):
        h = h * (1 / c)
    if h.leading_coeff_sign() < 0:
        h = -h
    return h


_PROBE_POINTS = [
    {v: Fraction(p, q) for v, (p, q) in zip(
        ("t", "u", "s", "v", "Z", "lam", "a", "b"), pts)}
    for pts in (
        [(3, 7), (5, 11), (2, 9), (7, 13), (3, 5), (4, 7), (5, 13), (2, 11)],
        [(7, 5), (11, 3), (13, 6), (5, 9), (8, 3), (9, 2), (11, 7), (13, 4)],
        [(17, 9), (19, 5), (23, 7), (29, 4), (31, 6), (37, 5), (41, 8), (43, 9)],
    )
]


def _discriminant_vanishes(g2: MultiPoly, g3: MultiPoly) -> bool:
    for point in _PROBE_POINTS:
        if g2.eval(point) ** 3 - 27 * g3.eval(point) ** 2 != 0:
            return False
    return (g2**3 - 27 * g3**2).is_zero()


class WeierstrassModel:
    """Immutable minimal Weierstrass model y^2 = 4x^3 - g2 x - g3."""

    __slots__ = ("g2", "g3", "fibration_var", "weight", "_disc")

    def __init__(self, g2, g3, fibration_var: str = "t", weight: int = None):
        g2 = _mp(g2)
        g3 = _mp(g3)
        if _discriminant_vanishes(g2, g3):
            raise IdenticallySingular("g2^3 - 27 g3^2 is identically zero")
        d2 = max(g2.degree(fibration_var), 0)
        d3 = max(g3.degree(fibration_var), 0)
        if weight is None:
            weight = max(1, _ceil_div(d2, 4), _ceil_div(d3, 6))
        if d2 > 4 * weight or d3 > 6 * weight:
            raise ValueError("degrees exceed the homogenization weight")
        _check_minimal_along(g2, g3, fibration_var)
        object.__setattr__(self, "g2", g2)
        object.__setattr__(self, "g3", g3)
        object.__setattr__(self, "fibration_var", fibration_var)
        object.__setattr__(self, "weight", weight)
        object.__setattr__(self, "_disc", None)

    def __setattr__(self, name, value):
        raise AttributeError("WeierstrassModel is immutable")

    @property
    def discriminant(self) -> MultiPoly:
        if self._disc is None:
            object.__setattr__(self, "_disc", self.g2**3 - 27 * self.g3**2)
        return self._disc

    @property
    def base_vars(self) -> tuple:
        seen = set(self.g2.variables()) | set(self.g3.variables())
        seen.discard("t")
        if not seen:
            return ("t",)
        return tuple(sorted(seen))

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeierstrassModel):
            return NotImplemented
        return (
            self.g2 == other.g2
            and self.g3 == other.g3
            and self.fibration_var == other.fibration_var
            and self.weight == other.weight
        )

    __hash__ = None

    def to_json(self) -> dict:
        return {
            "g2": self.g2.to_json(),
            "g3": self.g3.to_json(),
            "fibration_var": self.fibration_var,
            "weight": self.weight,
        }

    @classmethod
    def from_json(cls, data: dict) -> "WeierstrassModel":
        return cls(
            MultiPoly.from_json(data["g2"]),
            MultiPoly.from_json(data["g3"]),
            data["fibration_var"],
            data["weight"],
        )

    def __repr__(self) -> str:
        return (
            f"WeierstrassModel(g2={self.g2.to_string()}, g3={self.g3.to_string()}, "
            f"fibration_var={self.fibration_var!r}, weight={self.weight})"
        )


def _squarefree_candidates(f: MultiPoly, var: str):
    up = UPoly.from_multipoly(f, var)
    if up.degree < 1:
        return
    for factor, mult in up.monic().squarefree_decomposition():
        h, _ = factor.to_multipoly_pair(var)
        if not h.is_const():
            yield _canonical_locus(h), mult


def _check_minimal_along(g2: MultiPoly, g3: MultiPoly, var: str) -> None:
    source, threshold = (g2, 4) if not g2.is_zero() else (g3, 6)
    for h, mult in _squarefree_candidates(source, var):
        if mult >= threshold:
            if _order_along(g2, h) >= 4 and _order_along(g3, h) >= 6:
                raise NonMinimalAtLocus(f"non-minimal along {h.to_string()}")


def _minimalize(g2: MultiPoly, g3: MultiPoly):
    from cyops.polys import mp_divexact

    changed = True
    while changed:
        changed = False
        source, threshold = (g2, 4) if not g2.is_zero() else (g3, 6)
        for var in source.variables():
            for h, mult in _squarefree_candidates(source, var):
                if mult < threshold:
                    continue
                while _order_along(g2, h) >= 4 and _order_along(g3, h) >= 6:
                    for _ in range(4):
                        g2 = mp_divexact(g2, h) if not g2.is_zero() else g2
                    for _ in range(6):
                        g3 = mp_divexact(g3, h) if not g3.is_zero() else g3
                    changed = True
            if changed:
                break
        # refresh candidates after a reduction
    return g2, g3


def build_model(g2, g3, fibration_var: str = "t", weight: int = None) -> WeierstrassModel:
    """Minimalize and wrap; the entry point used by all twist constructors."""
    g2, g3 = _minimalize(_mp(g2), _mp(g3))
    return WeierstrassModel(g2, g3, fibration_var, weight)


# ---------------------------------------------------------------------------
# The extremal rational elliptic surface catalog


def _catalog_data():
    t = _var("t")
    f = Fraction
    plain = {
        "X141": (
            f(4, 3) * (t**2 - 16 * t + 16),
            f(8, 27) * (2 - t) * (32 - 32 * t - t**2),
        ),
        "X431": (27 - 24 * t, 8 * t**2 - 36 * t + 27),
        "X321": (f(16, 3) - 4 * t, f(-64, 27) + f(8, 3) * t),
        "X211": (_mp(3), 2 * t - 1),
        "X411": (
            f(4, 3) * (16 * t**2 - 16 * t + 1),
            f(8, 27) * (2 * t - 1) * (32 * t**2 - 32 * t - 1),
        ),
    }
    tilded = {
        "X141~": (
            f(4, 3) * (t**2 - 16 * t + 16) * (t - 1) ** 2,
            -f(8, 27) * (t - 2) * (t**2 + 32 * t - 32) * (t - 1) ** 3,
        ),
        "X431~": (
            3 * (t - 1) ** 3 * (t - 9),
            -(t**2 + 18 * t - 27) * (t - 1) ** 4,
        ),
        "X321~": (
            f(4, 3) * (t - 1) ** 3 * (t - 4),
            f(8, 27) * (t - 1) ** 5 * (t + 8),
        ),
        "X211~": (3 * (t - 1) ** 4, (t - 1) ** 5 * (t + 1)),
    }
    plain.update(tilded)
    return plain


_CATALOG = _catalog_data()

SURFACE_NAMES = tuple(_CATALOG)

_MU = {
    "X141": Fraction(1, 2),
    "X431": Fraction(1, 3),
    "X321": Fraction(1, 4),
    "X211": Fraction(1, 6),
}


def _canonical_name(name: str) -> str:
    name = name.replace("_tilde", "~")
    if name not in _CATALOG:
        raise UnknownSurface(name)
    return name


def surface_catalog(name: str) -> WeierstrassModel:
    name = _canonical_name(name)
    g2, g3 = _CATALOG[name]
    return WeierstrassModel(g2, g3, "t", 1)


def surface_mu(name: str) -> Fraction:
    name = _canonical_name(name)
    base = name.rstrip("~")
    if base not in _MU:
        raise UnknownSurface(f"no twist parameter recorded for {name}")
    return _MU[base]


# ---------------------------------------------------------------------------
# Discriminant, J, fiber classification


def discriminant(m: WeierstrassModel) -> MultiPoly:
    return m.discriminant


def j_invariant(m: WeierstrassModel):
    """Functional invariant J = g2^3 / Delta as a (numerator, denominator) pair."""
    return m.g2**3, m.discriminant


def _coerce_locus(m: WeierstrassModel, locus) -> MultiPoly:
    if isinstance(locus, MultiPoly):
        h = locus
    elif isinstance(locus, UPoly):
        h, _ = locus.to_multipoly_pair(m.fibration_var)
    elif isinstance(locus, (int, Fraction)):
        h = _var(m.fibration_var) - Fraction(locus)
    else:
        raise TypeError(f"cannot interpret locus {locus!r}")
    h = _canonical_locus(h)
    if h.is_const():
        raise ValueError("locus must be non-constant")
    return h


def kodaira_at(m: WeierstrassModel, locus) -> KodairaType:
    """Kodaira type over a locus (an irreducible polynomial in the fibration
    variable, a rational value of it, or INF for the point at infinity)."""
    if locus == INF:
        fv, w = m.fibration_var, m.weight
        a = 4 * w - max(m.g2.degree(fv), 0) if not m.g2.is_zero() else _BIG
        b = 6 * w - max(m.g3.degree(fv), 0) if not m.g3.is_zero() else _BIG
        d = 12 * w - max(m.discriminant.degree(fv), 0)
        return _classify_orders(a, b, d, "infinity")
    h = _coerce_locus(m, locus)
    a = _order_along(m.g2, h)
    b = _order_along(m.g3, h)
    d = _order_along(m.discriminant, h)
    return _classify_orders(a, b, d, h.to_string())


class FiberConfiguration:
    """Singular fibers of an elliptic fibration over the base rational curve.

    Entries pair a locus (irreducible polynomial in the fibration variable,
    or INF) with a Kodaira type; a locus of degree k > 1 stands for k
    conjugate fibers of that type.  Euler numbers must total 12 * weight.
    """

    __slots__ = ("entries", "fibration_var", "weight")

    def __init__(self, entries, fibration_var: str, weight: int):
        fixed = []
        for locus, ktype in entries:
            if locus != INF:
                locus = _canonical_locus(_mp(locus))
            fixed.append((locus, ktype))
        fixed.sort(key=lambda e: (2, "") if e[0] == INF
                   else (max(e[0].degree(fibration_var), 1), e[0].to_string()))
        object.__setattr__(self, "entries", tuple(fixed))
        object.__setattr__(self, "fibration_var", fibration_var)
        object.__setattr__(self, "weight", weight)
        total = self.euler_total()
        if total != 12 * weight:
            raise ValueError(
                f"Euler numbers total {total}, expected {12 * weight}"
            )

    def __setattr__(self, name, value):
        raise AttributeError("FiberConfiguration is immutable")

    def _count(self, locus) -> int:
        if locus == INF:
            return 1
        return max(locus.degree(self.fibration_var), 1)

    def euler_total(self) -> int:
        return sum(self._count(l) * k.euler for l, k in self.entries)

    def type_at(self, locus) -> KodairaType:
        if locus != INF:
            locus = _canonical_locus(_mp(locus))
        for l, k in self.entries:
            if l == locus:
                return k
        raise KeyError(f"no entry at {locus}")

    def _key(self):
        out = []
        for l, k in self.entries:
            name = "inf" if l == INF else str(l.to_json())
            out.append((name, k.tag, k.n))
        return frozenset(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiberConfiguration):
            return NotImplemented
        return self._key() == other._key() and self.weight == other.weight

    __hash__ = None

    def to_json(self) -> list:
        out = []
        for locus, ktype in self.entries:
            row = {
                "locus": "inf" if locus == INF else locus.to_string(),
                "type": ktype.tag,
            }
            if ktype.n is not None:
                row["n"] = ktype.n
            count = self._count(locus)
            if count > 1:
                row["count"] = count
            out.append(row)
        return out

    def __repr__(self) -> str:
        parts = []
        for locus, ktype in self.entries:
            where = "inf" if locus == INF else locus.to_string()
            count = self._count(locus)
            label = f"{count} x {ktype}" if count > 1 else str(ktype)
            parts.append(f"{where}: {label}")
        return "FiberConfiguration({" + ", ".join(parts) + "})"


def _rational_roots(coeffs) -> set:
    """Rational roots of a nonzero univariate polynomial over Q."""
    from math import gcd

    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    roots = set()
    while ints and ints[0] == 0:
        roots.add(Fraction(0))
        ints = ints[1:]
    if not ints or len(ints) == 1:
        return roots
    a0, an = abs(ints[0]), abs(ints[-1])
    if a0 > 10**7 or an > 10**7:
        return roots

    def divisors(n):
        out = []
        k = 1
        while k * k <= n:
            if n % k == 0:
                out.append(k)
                out.append(n // k)
            k += 1
        return out

    for p in divisors(a0):
        for q in divisors(an):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if sum(c * cand**i for i, c in enumerate(ints)) == 0:
                    roots.add(cand)
    return roots


def _frac_sqrt(x: Frac):
    if x.is_zero():
        return Frac(0)
    root = mp_sqrt(x.num * x.den)
    if root is None:
        return None
    return Frac(root, x.den)


def _quadratic_roots(f: UPoly):
    b, c = f.coeffs[1], f.coeffs[0]
    s = _frac_sqrt(b * b - 4 * c)
    if s is None:
        return None
    return ((-b + s) / 2, (-b - s) / 2)


def _constant_roots(f: UPoly, rng) -> list:
    spectators = set()
    for c in f.coeffs:
        spectators |= set(c.num.variables()) | set(c.den.variables())
    if not spectators:
        qcoeffs = [c.eval({}) for c in f.coeffs]
        return sorted(_rational_roots(qcoeffs))
    for _ in range(5):
        point = {v: Fraction(rng.randint(2, 97), rng.randint(1, 13)) for v in spectators}
        try:
            qcoeffs = [c.eval(point) for c in f.coeffs]
        except ZeroDivisionError:
            continue
        if qcoeffs[-1] == 0:
            continue
        found = []
        for cand in sorted(_rational_roots(qcoeffs)):
            lin = UPoly([-cand, 1])
            if lin.divides(f):
                found.append(cand)
        return found
    return []


def _split_factor(f: UPoly, rng) -> list:
    """Split a squarefree monic factor into irreducible pieces as far as
    linear/quadratic extraction allows; anything else stays one bucket."""
    pieces = []
    work = f.monic()
    if work.degree >= 3:
        for root in _constant_roots(work, rng):
            lin = UPoly([-root, 1])
            if lin.divides(work):
                pieces.append(lin)
                work = work.divexact(lin)
    if work.degree == 2:
        roots = _quadratic_roots(work)
        if roots is not None:
            pieces.extend(UPoly([-r, 1]) for r in roots)
            work = UPoly([1])
    if work.degree >= 1:
        pieces.append(work)
    return pieces


def fiber_configuration(m: WeierstrassModel, seed: int = 0) -> FiberConfiguration:
    rng = random.Random(seed)
    fv = m.fibration_var
    entries = []
    dpoly = UPoly.from_multipoly(m.discriminant, fv)
    if dpoly.degree >= 1:
        for factor, _mult in dpoly.monic().squarefree_decomposition():
            for piece in _split_factor(factor, rng):
                locus, _unit = piece.to_multipoly_pair(fv)
                locus = _canonical_locus(locus)
                entries.append((locus, kodaira_at(m, locus)))
    inf_type = kodaira_at(m, INF)
    if inf_type.tag != "smooth":
        entries.append((INF, inf_type))
    return FiberConfiguration(entries, fv, m.weight)


# ---------------------------------------------------------------------------
# Twists and base changes


def _is_squarefree(h: MultiPoly) -> bool:
    if h.is_const():
        return True
    for var in h.variables():
        up = UPoly.from_multipoly(h, var)
        dup = UPoly.from_multipoly(h.derivative(var), var)
        if up.degree >= 1 and up.gcd(dup).degree >= 1:
            return False
    return True


def quadratic_twist(m: WeierstrassModel, h, weight: int = None) -> WeierstrassModel:
    h = _mp(h)
    if h.is_zero():
        raise ValueError("twist factor must be nonzero")
    if not _is_squarefree(h):
        raise ValueError("twist factor must be squarefree")
    return build_model(m.g2 * h**2, m.g3 * h**3, m.fibration_var, weight)


def base_change(
    m: WeierstrassModel,
    substitution,
    twist=1,
    fibration_var: str = None,
    weight: int = None,
) -> WeierstrassModel:
    """Substitute the family parameter t -> substitution and apply the
    quadratic twist factor: (g2, g3) -> (g2(phi) h^2, g3(phi) h^3).

    The twist factor may be any rational function; the combined result must
    be polynomial or NonPolynomialResult is raised.
    """
    phi = Frac._coerce2(substitution)
    if phi.num.is_const() and phi.den.is_const():
        raise ValueError("substitution must be nonconstant")
    h = Frac._coerce2(twist)
    g2 = Frac(m.g2).subs({"t": phi}) * h**2
    g3 = Frac(m.g3).subs({"t": phi}) * h**3
    if not (g2.is_poly() and g3.is_poly()):
        raise NonPolynomialResult(
            "substitution and twist leave a nontrivial denominator"
        )
    return build_model(
        g2.as_poly(), g3.as_poly(), fibration_var or m.fibration_var, weight
    )


def tilde_transform(m: WeierstrassModel) -> WeierstrassModel:
    """Pull back along t -> t/(t-1) with the twist clearing denominators."""
    t = _var("t")
    return base_change(m, Frac(t, t - 1), (1 - t))


def twist_constant(i: int, j: int) -> Fraction:
    """Normalizing constant of the degree-(i+j) ramified cover."""
    return Fraction((-1) ** i * i**i * j**j, (i + j) ** (i + j))


# K3 families fibered over the u-line, family parameter t.


def _require_plain(name: str) -> WeierstrassModel:
    name = _canonical_name(name)
    if name.endswith("~"):
        raise ValueError("twist constructions start from an untilded surface")
    return surface_catalog(name)


def k3_pure_19(name: str) -> WeierstrassModel:
    u, t = _var("u"), _var("t")
    return base_change(_require_plain(name), t * u, u * (u - 1), "u")


def k3_pure_19_alt(name: str) -> WeierstrassModel:
    u, t = _var("u"), _var("t")
    return base_change(_require_plain(name), Frac(u), u * (u - t), "u")


def k3_mixed_19(name: str) -> WeierstrassModel:
    u, t = _var("u"), _var("t")
    return base_change(
        _require_plain(name), Frac(-t, 4 * u * (u + 1)), (u * (u + 1)) ** 2, "u"
    )


def k3_pure_18(name: str) -> WeierstrassModel:
    u, t = _var("u"), _var("t")
    return base_change(_require_plain(name), t * u, u**2 - 1, "u")


def k3_pure_18_alt(name: str) -> WeierstrassModel:
    u, t = _var("u"), _var("t")
    return base_change(_require_plain(name), Frac(u), u**2 - t**2, "u")


def k3_mixed_18(name: str) -> WeierstrassModel:
    u, t = _var("u"), _var("t")
    phi = Frac(t * (2 * u**2 + 2 * u + 1), 2 * u * (u + 1))
    return base_change(_require_plain(name), phi, (u * (u + 1)) ** 2, "u")


def k3_two_param_pure(name: str) -> WeierstrassModel:
    u, a, b = _var("u"), _var("a"), _var("b")
    return base_change(_require_plain(name), Frac(u), (u - a) * (u - b), "u")


def k3_two_param_mixed(name: str) -> WeierstrassModel:
    u, a, b = _var("u"), _var("a"), _var("b")
    phi = Frac(a) + Frac(a - b, 4 * u * (u + 1))
    return base_change(_require_plain(name), phi, (u * (u + 1)) ** 2, "u")


# Rational transformations of the family parameter applied to the
# mixed-twist K3 families (the "extra" series of geometries).

_EXTRA_TRANSFORMS = {}


def _extra_transforms():
    if not _EXTRA_TRANSFORMS:
        t = _var("t")
        one = Frac(1)
        _EXTRA_TRANSFORMS.update(
            {
                1: (Frac(t), Frac(1 - t)),
                2: (Frac(t, t - 1), Frac(1 - t)),
                3: (Frac(4 * t * (1 - t)), one),
                4: (Frac(t**2, 4 * (t - 1)), Frac(1 - t)),
                5: (Frac(-4 * t, (1 - t) ** 2), Frac((1 - t) ** 2)),
            }
        )
    return _EXTRA_TRANSFORMS


def k3_extra_case(name: str, row: int) -> WeierstrassModel:
    """Transformed mixed-twist K3 for a family parameter transformation row."""
    if row not in range(1, 6):
        raise ValueError("transformation row must be 1..5")
    phi, h = _extra_transforms()[row]
    return base_change(k3_mixed_19(name), phi, h)


# Calabi-Yau threefolds: one more pure/mixed step on a K3 family.


def cy3_pure_b(name: str) -> WeierstrassModel:
    s, t = _var("s"), _var("t")
    return base_change(k3_pure_19(name), t * s, s * (s - 1))


def cy3_pure_c(name: str) -> WeierstrassModel:
    s, t = _var("s"), _var("t")
    return base_change(k3_pure_18(name), t * s, s**2 - 1)


def cy3_extra(name: str, row: int) -> WeierstrassModel:
    s, t = _var("s"), _var("t")
    return base_change(k3_extra_case(name, row), t * s, s * (s - 1))


def cy3_mixed_hg(name: str, k: int, l: int, beta) -> WeierstrassModel:
    """Mixed twist of a mixed-twist K3 by t -> c_kl t / (s^k (s+1)^l)."""
    beta = Fraction(beta)
    mu = surface_mu(name)
    if beta not in (Fraction(1, 2), Fraction(1)):
        raise ValueError("beta must be 1/2 or 1")
    if not (1 <= k <= 1 / mu) or not (1 <= l <= beta / mu):
        raise ValueError(f"invariant ({k},{l},{beta}) out of range for {name}")
    s, t = _var("s"), _var("t")
    phi = Frac(twist_constant(k, l) * t, s**k * (s + 1) ** l)
    h = s**2 * (s + 1) ** int(2 * beta)
    return base_change(k3_mixed_19(name), phi, h)


def cy3_mixed18(name: str, mm: int) -> WeierstrassModel:
    """Mixed twist of a rank-18 mixed K3 by t -> t (1+s^2)^m / (2s)^m."""
    mu = surface_mu(name)
    if mm % 2 == 0 or not (1 <= mm <= 1 / mu):
        raise ValueError(f"m = {mm} must be odd with 1 <= m <= {1 / mu}")
    s, t = _var("s"), _var("t")
    phi = Frac(t * (1 + s**2) ** mm, (2 * s) ** mm)
    return base_change(k3_mixed_18(name), phi, s**2)


def product_twist(name_fiber: str, name_base: str) -> WeierstrassModel:
    """Weierstrass model of the fiber product of two rational surfaces.

    The first surface provides the cubic F^2 = 4u^3 - g2(s)u - g3(s); the
    second is pulled back along t/s and twisted by s^4 F^4, s^6 F^6.
    """
    ma = surface_catalog(name_fiber)
    mb = surface_catalog(name_base)
    s, t, u = _var("s"), _var("t"), _var("u")
    a2 = ma.g2.subs({"t": Frac(s)}).as_poly()
    a3 = ma.g3.subs({"t": Frac(s)}).as_poly()
    f2 = 4 * u**3 - a2 * u - a3
    phi = Frac(t, s)
    b2 = (Frac(s) ** 4 * Frac(mb.g2).subs({"t": phi})).as_poly()
    b3 = (Frac(s) ** 6 * Frac(mb.g3).subs({"t": phi})).as_poly()
    return build_model(b2 * f2**2, b3 * f2**3, "u")


# Calabi-Yau fourfolds: one more pure step.


def cy4_b(m: WeierstrassModel) -> WeierstrassModel:
    v, t = _var("v"), _var("t")
    return base_change(m, t * v, v * (v - 1))


def cy4_c(m: WeierstrassModel) -> WeierstrassModel:
    v, t = _var("v"), _var("t")
    return base_change(m, t * v, v**2 - 1)


# ---------------------------------------------------------------------------
# Calabi-Yau degree checks


def _ruled_surface_ok(g: MultiPoly, fiber_var: str, base_var: str, k: int, m4: int) -> bool:
    """Effectivity of a section of -m4/4 * 4K on the Hirzebruch surface F_k:
    writing g = sum_i fiber_var^i c_i(base_var), require i <= 2*m4 and
    deg c_i <= m4*(k+2)/... with the twist by k per fiber power."""
    top = 2 * m4
    for i, c in g.coeffs_wrt(fiber_var).items():
        if c.is_zero():
            continue
        if i > top:
            return False
        if c.degree(base_var) > m4 * (k + 2) - k * i:
            return False
    return True


def check_calabi_yau_degrees(m: WeierstrassModel, base: str, k: int = None) -> bool:
    """Whether (g2, g3) are sections of -4K and -6K on the given base surface.

    base is "P1xP1", "P2", or "Fk" (with the Hirzebruch index k); the two
    affine base coordinates are the model's base variables other than the
    family parameter.
    """
    coords = [v for v in m.base_vars if v != "t"]
    if len(coords) != 2:
        raise ValueError("degree check needs exactly two base coordinates")
    x, y = coords
    if base == "P2":
        deg2 = max(
            sum(e[i] for i, name in _mp_axis(coords)) for e in _term_axes(m.g2, coords)
        )
        deg3 = max(
            sum(e[i] for i, name in _mp_axis(coords)) for e in _term_axes(m.g3, coords)
        )
        return deg2 <= 12 and deg3 <= 18
    if base == "P1xP1":
        k = 0
    elif base == "Fk":
        if k is None:
            raise ValueError("Fk needs the index k")
    else:
        raise ValueError(f"unknown base {base!r}")
    for fiber, other in ((x, y), (y, x)):
        if _ruled_surface_ok(m.g2, fiber, other, k, 4) and _ruled_surface_ok(
            m.g3, fiber, other, k, 6
        ):
            return True
    return False


def _mp_axis(coords):
    from cyops.polys import VARS

    return [(VARS.index(c), c) for c in coords]


def _term_axes(g: MultiPoly, coords):
    axes = _mp_axis(coords)
    if not g.terms:
        return [tuple(0 for _ in axes)]
    return list(g.terms)


# ---------------------------------------------------------------------------
# Sections and substitution identities


def check_torsion_point(m: WeierstrassModel, x, y_squared=0) -> bool:
    """Whether (x, y) with the given y^2 satisfies y^2 = 4x^3 - g2 x - g3."""
    x = Frac._coerce2(x)
    y2 = Frac._coerce2(y_squared)
    return y2 == 4 * x**3 - Frac(m.g2) * x - Frac(m.g3)


def _narumiya_shiga_expected():
    z, lam = _var("Z"), _var("lam")
    g2 = Frac(
        Fraction(4, 3)
        * z**2
        * (16 * z**2 * lam**4 - 8 * z**3 * lam**2 + z**4 - 8 * z * lam**2 - z**2 + 1),
        lam**4,
    )
    g3 = Frac(
        Fraction(4, 27)
        * z**3
        * (4 * z * lam**2 - z**2 - 1)
        * (
            32 * z**2 * lam**4
            - 16 * z**3 * lam**2
            + 2 * z**4
            - 16 * z * lam**2
            - 5 * z**2
            + 2
        ),
        lam**6,
    )
    return g2, g3


def _inose_expected():
    z, a, b = _var("Z"), _var("a"), _var("b")
    g2 = Frac(3 * z**4)
    g3 = Frac(
        Fraction(1, 2) * (-(z**7) + 2 * (1 - a - b) * z**6 - (a - b) ** 2 * z**5)
    )
    return g2, g3


def verify_substitution_identity(name: str, perturbation=None):
    """Check a parameter substitution against its closed Weierstrass form.

    Returns (passed, witnesses): witnesses is a dict of nonzero differences
    (empty on success).  A perturbation, when given, is added to the
    computed g3 side to exercise the failure path.
    """
    z = _var("Z")
    if name == "narumiya_shiga":
        m = surface_catalog("X411")
        lam = _var("lam")
        phi = (
            Frac(lam**2)
            + Fraction(1, 2)
            - Frac(z) / 4
            - Frac(1, 4 * z)
        )
        h = Frac(z**2, lam**2)
        expect2, expect3 = _narumiya_shiga_expected()
        extra = {}
    elif name == "inose":
        m = surface_catalog("X211")
        a, b = _var("a"), _var("b")
        phi = Frac(a + b, 2) + Frac(z) / 4 + Frac((a - b) ** 2, 4 * z)
        h = Frac(-(z**2))
        expect2, expect3 = _inose_expected()
        extra = {
            "A": (Frac(1), None),
            "B": (Frac(1 - a - b), None),
            "D": (Frac((a - b) ** 2), None),
        }
    else:
        raise ValueError(f"unknown substitution identity {name!r}")
    got2 = Frac(m.g2).subs({"t": phi}) * h**2
    got3 = Frac(m.g3).subs({"t": phi}) * h**3
    if perturbation is not None:
        got3 = got3 + Frac._coerce2(perturbation)
    witnesses = {}
    if got2 != expect2:
        witnesses["g2"] = got2 - expect2
    if got3 != expect3:
        witnesses["g3"] = got3 - expect3
    if name == "inose" and not witnesses:
        # read coefficients off g3 = -(1/2)(Z^2 - 2B Z + D) Z^5 and g2 = 3A Z^4
        quot = (got3 * Frac(-2) / Frac(z**5)).as_poly()
        cz = quot.coeffs_wrt("Z")
        aval = (got2 / Frac(3 * z**4)).as_poly()
        checks = {
            "A": Frac(aval),
            "B": Frac(cz.get(1, MultiPoly())) / Frac(-2),
            "D": Frac(cz.get(0, MultiPoly())),
        }
        for key, (want, _) in extra.items():
            if checks[key] != want:
                witnesses[key] = checks[key] - want
    return not witnesses, witnesses


# ---------------------------------------------------------------------------
# Step 1: families of elliptic curves from functional invariants


@dataclass(frozen=True)
class FunctionalInvariant:
    i: int
    j: int
    alpha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.i < 1 or self.j < 1:
            raise ValueError("i and j must be positive")
        if self.alpha not in (Fraction(1, 2), Fraction(1)):
            raise ValueError("alpha must be 1/2 or 1")

    def is_step1_valid(self) -> bool:
        return self.i <= 2 and self.j <= 2 * self.alpha


def binary_quartic_invariants(q: MultiPoly, var: str):
    """Invariants (g2, g3) of y^2 = q(x), deg q <= 4, such that the curve
    is equivalent to Y^2 = 4X^3 - g2 X - g3."""
    if q.degree(var) > 4:
        raise ValueError("quartic invariants need degree at most 4")
    cs = q.coeffs_wrt(var)
    a = [cs.get(k, MultiPoly()) for k in range(5)]
    f = Fraction
    g2 = a[4] * a[0] - f(1, 4) * (a[3] * a[1]) + f(1, 12) * a[2] ** 2
    g3 = (
        f(1, 6) * (a[4] * a[2] * a[0])
        - f(1, 16) * (a[4] * a[1] ** 2)
        - f(1, 16) * (a[3] ** 2 * a[0])
        + f(1, 48) * (a[3] * a[2] * a[1])
        - f(1, 216) * a[2] ** 3
    )
    return g2, g3


def step1_family(inv: FunctionalInvariant):
    """Raw quartic invariants of the branched-cover family of elliptic curves
    attached to a generalized functional invariant."""
    if not inv.is_step1_valid():
        raise ValueError(f"{inv} violates the first-step constraints")
    t, x = _var("t"), _var("u")
    two_alpha = int(2 * inv.alpha)
    c = twist_constant(inv.i, inv.j)
    q = x**2 * (x + 1) ** two_alpha - c * t * x ** (2 - inv.i) * (x + 1) ** (
        two_alpha - inv.j
    )
    return binary_quartic_invariants(q, "u")


def legendre_family():
    """Quartic invariants of y^2 = (1 - t x) x (x - 1)."""
    t, x = _var("t"), _var("u")
    q = (1 - t * x) * x * (x - 1)
    return binary_quartic_invariants(q, "u")


def scaled_equivalence(g2a, g3a, g2b, g3b):
    """Rational scale r with (r^2 g2a, r^3 g3a) == (g2b, g3b), or None."""
    fa2, fa3 = Frac._coerce2(g2a), Frac._coerce2(g3a)
    fb2, fb3 = Frac._coerce2(g2b), Frac._coerce2(g3b)
    if fa2.is_zero() != fb2.is_zero() or fa3.is_zero() != fb3.is_zero():
        return None
    if fa3.is_zero() or fa2.is_zero():
        raise ValueError("scale matching needs nonzero g2 and g3")
    r = (fb3 * fa2) / (fa3 * fb2)
    if r * r * fa2 == fb2 and r * r * r * fa3 == fb3:
        return r
    return None


def step1_surface_name(inv: FunctionalInvariant) -> str:
    g2q, g3q = step1_family(inv)
    for name in ("X141", "X431", "X321", "X211", "X411"):
        c2, c3 = _CATALOG[name]
        if scaled_equivalence(g2q, g3q, c2, c3) is not None:
            return name
    raise UnknownSurface(f"no catalog surface matches invariant {inv}")


def step1_surface(inv: FunctionalInvariant) -> WeierstrassModel:
    return surface_catalog(step1_surface_name(inv))
