"""Polynomial kernel tests: univariate, multivariate, fractions, UPoly."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from cyops.polys import (
    Frac,
    MultiPoly,
    Poly,
    RatFunc,
    UPoly,
    mp_divexact,
    mp_sqrt,
)

rationals = st.builds(
    F, st.integers(min_value=-30, max_value=30), st.integers(min_value=1, max_value=12)
)
small_polys = st.lists(rationals, min_size=0, max_size=5).map(Poly)


class TestPoly:
    def test_normalization_strips_trailing_zeros(self):
        assert Poly([1, 2, 0, 0]) == Poly([1, 2])
        assert Poly([0]).is_zero()
        assert Poly().degree == -1

    def test_divmod(self):
        num = Poly([2, 0, 1, 1])
        den = Poly([1, 1])
        q, r = divmod(num, den)
        assert q * den + r == num
        assert r.degree < den.degree

    def test_divexact_rejects_remainder(self):
        with pytest.raises(ValueError):
            Poly([1, 1, 1]).divexact(Poly([1, 1]))

    def test_gcd(self):
        a = Poly([1, 1]) * Poly([2, 3]) ** 2
        b = Poly([2, 3]) * Poly([-1, 1])
        assert a.gcd(b) == Poly([2, 3]).monic()

    def test_theta_and_derivative(self):
        p = Poly([5, 1, 4])
        assert p.derivative() == Poly([1, 8])
        assert p.theta() == Poly([0, 1, 8])

    def test_compose(self):
        p = Poly([1, 0, 1])
        assert p(Poly([0, 0, 1])) == Poly([1, 0, 0, 0, 1])
        assert p(F(1, 2)) == F(5, 4)

    def test_primitive_and_content(self):
        p = Poly([F(2, 3), F(4, 3)])
        assert p.content() == F(2, 3)
        assert p.primitive() == Poly([1, 2])
        assert (-p).primitive() == Poly([1, 2])

    @given(small_polys, small_polys, small_polys)
    @settings(max_examples=60, deadline=None)
    def test_ring_laws(self, a, b, c):
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        assert a - a == Poly()

    @given(small_polys, small_polys)
    @settings(max_examples=60, deadline=None)
    def test_divmod_invariant(self, a, b):
        if b.is_zero():
            return
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.is_zero() or r.degree < b.degree


class TestRatFunc:
    def test_reduction(self):
        r = RatFunc(Poly([1, 2, 1]), Poly([2, 2]))
        assert r.num == Poly([F(1, 2), F(1, 2)])
        assert r.den == Poly([1])

    def test_denominator_monic(self):
        r = RatFunc(Poly([1]), Poly([0, 3]))
        assert r.den == Poly([0, 1])
        assert r.num == Poly([F(1, 3)])

    def test_field_ops(self):
        t = RatFunc(Poly([0, 1]))
        x = t / (1 - t)
        assert x + 1 == 1 / (1 - t)
        assert (x * (1 - t)) == t

    def test_derivative_quotient_rule(self):
        t = RatFunc(Poly([0, 1]))
        r = (t * t) / (1 + t)
        lhs = r.derivative()
        rhs = (2 * t * (1 + t) - t * t) / ((1 + t) * (1 + t))
        assert lhs == rhs

    def test_theta(self):
        t = RatFunc(Poly([0, 1]))
        assert (t * t).theta() == 2 * t * t


class TestMultiPoly:
    def test_arith(self):
        t = MultiPoly.var("t")
        u = MultiPoly.var("u")
        assert (t + u) * (t - u) == t * t - u * u
        assert (t + 1) ** 3 == t**3 + 3 * t**2 + 3 * t + 1

    def test_degree_and_vars(self):
        t, u = MultiPoly.var("t"), MultiPoly.var("u")
        p = t**2 * u + 3
        assert p.degree("t") == 2
        assert p.degree("u") == 1
        assert p.degree("s") == 0
        assert p.variables() == ("t", "u")

    def test_coeffs_wrt(self):
        t, u = MultiPoly.var("t"), MultiPoly.var("u")
        p = t**2 * u + t**2 + 5 * u
        cs = p.coeffs_wrt("t")
        assert cs[2] == u + 1
        assert cs[0] == 5 * u

    def test_eval(self):
        t, u = MultiPoly.var("t"), MultiPoly.var("u")
        assert (t * u + u**2).eval({"t": 2, "u": F(1, 2)}) == F(5, 4)

    def test_derivative(self):
        t, u = MultiPoly.var("t"), MultiPoly.var("u")
        assert (t**2 * u).derivative("t") == 2 * t * u
        assert (t**2 * u).derivative("u") == t**2

    def test_subs_polynomial(self):
        t, u = MultiPoly.var("t"), MultiPoly.var("u")
        out = (t**2 + 1).subs({"t": u + 1})
        assert out.as_poly() == u**2 + 2 * u + 2

    def test_json_round_trip(self):
        t, u = MultiPoly.var("t"), MultiPoly.var("u")
        p = F(3, 4) * t**2 * u - 7
        assert MultiPoly.from_json(p.to_json()) == p

    def test_to_string(self):
        t, u = MultiPoly.var("t"), MultiPoly.var("u")
        assert (4 * t**2 * u - 3).to_string() == "4*t^2*u - 3"
        assert MultiPoly().to_string() == "0"


class TestDivisionAndSqrt:
    def test_divexact(self):
        t, u = MultiPoly.var("t"), MultiPoly.var("u")
        f = (t + u) ** 2 * (t - 2 * u)
        assert mp_divexact(f, (t + u) ** 2) == t - 2 * u
        assert mp_divexact(f, t * u) is None

    def test_divexact_constant(self):
        t = MultiPoly.var("t")
        assert mp_divexact(3 * t, MultiPoly.const(3)) == t

    def test_sqrt_recovers_root(self):
        t, u, s = MultiPoly.var("t"), MultiPoly.var("u"), MultiPoly.var("s")
        root = t * u - 3 * s**2 + F(1, 2)
        got = mp_sqrt(root**2)
        assert got is not None and got * got == root**2

    def test_sqrt_rejects_nonsquare(self):
        t, u = MultiPoly.var("t"), MultiPoly.var("u")
        assert mp_sqrt(t * u) is None
        assert mp_sqrt(t**2 + 1) is None
        assert mp_sqrt(MultiPoly.const(2)) is None

    def test_sqrt_constants(self):
        assert mp_sqrt(MultiPoly.const(F(9, 16))) == MultiPoly.const(F(3, 4))
        assert mp_sqrt(MultiPoly()) == MultiPoly()

    @given(
        st.lists(rationals, min_size=1, max_size=3),
        st.lists(rationals, min_size=1, max_size=3),
    )
    @settings(max_examples=40, deadline=None)
    def test_sqrt_of_square_bivariate(self, cs_t, cs_u):
        t, u = MultiPoly.var("t"), MultiPoly.var("u")
        p = MultiPoly()
        for k, c in enumerate(cs_t):
            p = p + c * t**k
        for k, c in enumerate(cs_u):
            p = p + c * u ** (k + 1) * t
        got = mp_sqrt(p * p)
        if p.is_zero():
            assert got == MultiPoly()
        else:
            assert got is not None and got * got == p * p


class TestFrac:
    def test_exact_quotient_collapses(self):
        t, u = MultiPoly.var("t"), MultiPoly.var("u")
        fr = Frac(t**2 - u**2, t - u)
        assert fr.is_poly()
        assert fr.as_poly() == t + u

    def test_cross_multiplication_equality(self):
        t, u = MultiPoly.var("t"), MultiPoly.var("u")
        assert Frac(t, u) == Frac(t * (u + 1), u * (u + 1))
        assert Frac(t, u) != Frac(u, t)

    def test_field_ops(self):
        t, u = MultiPoly.var("t"), MultiPoly.var("u")
        x = Frac(t, u)
        assert x + 1 / x == Frac(t**2 + u**2, t * u)
        assert x * Frac(u, t) == 1
        assert x**-2 == Frac(u**2, t**2)

    def test_subs_rational(self):
        t, u = MultiPoly.var("t"), MultiPoly.var("u")
        target = Frac(-t, 4 * u * (u + 1))
        out = Frac(t**2).subs({"t": target})
        assert out == target * target

    def test_subs_in_denominator(self):
        t, s = MultiPoly.var("t"), MultiPoly.var("s")
        fr = Frac(1, t)
        out = fr.subs({"t": Frac(t, s)})
        assert out == Frac(s, t)

    def test_derivative(self):
        t, u = MultiPoly.var("t"), MultiPoly.var("u")
        fr = Frac(u, t)
        assert fr.derivative("t") == Frac(-u, t**2)
        assert fr.derivative("u") == Frac(1, t)

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            Frac(MultiPoly.var("t"), MultiPoly())


class TestUPoly:
    def test_round_trip_multipoly(self):
        t, u = MultiPoly.var("t"), MultiPoly.var("u")
        p = u**3 * t + u * (t + 1) + 5
        up = UPoly.from_multipoly(p, "u")
        back, unit = up.to_multipoly_pair("u")
        assert Frac(back) * unit == Frac(p)

    def test_divmod(self):
        t, u = MultiPoly.var("t"), MultiPoly.var("u")
        a = UPoly.from_multipoly(u**3 + t * u + 1, "u")
        b = UPoly.from_multipoly(u + t, "u")
        q, r = divmod(a, b)
        assert q * b + r == a

    def test_gcd(self):
        t, u = MultiPoly.var("t"), MultiPoly.var("u")
        a = UPoly.from_multipoly((u - t) ** 2 * (u + 1), "u")
        b = UPoly.from_multipoly((u - t) * (u + 2), "u")
        assert a.gcd(b) == UPoly.from_multipoly(u - t, "u")

    def test_squarefree_decomposition(self):
        t, u = MultiPoly.var("t"), MultiPoly.var("u")
        f = UPoly.from_multipoly(u**3 * (u - t) ** 2 * (u + 1), "u")
        dec = f.squarefree_decomposition()
        by_mult = {m: g for g, m in dec}
        assert set(by_mult) == {1, 2, 3}
        assert by_mult[1] == UPoly.from_multipoly(u + 1, "u")
        assert by_mult[2] == UPoly.from_multipoly(u - t, "u")
        assert by_mult[3] == UPoly.from_multipoly(u, "u")

    def test_squarefree_with_parameter_leading_coeff(self):
        t, u = MultiPoly.var("t"), MultiPoly.var("u")
        f = UPoly.from_multipoly(t * (u**2 + u + 1) ** 2 * u, "u")
        dec = f.squarefree_decomposition()
        by_mult = {m: g for g, m in dec}
        assert by_mult[2] == UPoly.from_multipoly(u**2 + u + 1, "u")
        assert by_mult[1] == UPoly.from_multipoly(u, "u")

    def test_eval(self):
        t, u = MultiPoly.var("t"), MultiPoly.var("u")
        f = UPoly.from_multipoly(u**2 + t, "u")
        assert f.eval(Frac(t)) == Frac(t**2 + t)
