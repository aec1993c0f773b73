"""Theta-operator algebra tests.

Frozen forms cross-check the construction helpers; structural operations
(dual, squares, conjugation, pullback) are tested against both frozen
examples and defining properties.
"""

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from cyops.operators import (
    DegenerateElimination,
    DOperator,
    NotSelfDual,
    ThetaOperator,
    TwistFactor,
    conjugate,
    exterior_square,
    hypergeom_operator,
    is_self_dual_order4,
    is_self_dual_order5,
    symmetric_square,
    theta_poly,
    yifan_yang_pullback,
)
from cyops.polys import Poly, RatFunc
from cyops.series import HypergeomSpec, hypergeom_series

HALF = F(1, 2)


def theta_op(t_parts) -> ThetaOperator:
    """Build sum_j t^j P_j(theta) from {power: theta-Poly}."""
    return ThetaOperator.from_t_graded({j: p for j, p in t_parts.items()})


def mum_op(shifts, t_power=1) -> ThetaOperator:
    """theta^n - t^k * prod (theta + s) for the given shifts."""
    p = theta_poly(shifts)
    n = p.degree
    return theta_op({0: Poly([0] * n + [1]), t_power: -p})


def l2(mu) -> ThetaOperator:
    return mum_op([mu, 1 - mu])


def l3(mu) -> ThetaOperator:
    return mum_op([HALF, mu, 1 - mu])


def l4(mu) -> ThetaOperator:
    return mum_op([HALF, HALF, mu, 1 - mu])


def l5(p, q) -> ThetaOperator:
    return mum_op([HALF, p, q, 1 - p, 1 - q])


def l5hat(p, q) -> ThetaOperator:
    return mum_op([1, 2 * p, 2 * q, 2 - 2 * p, 2 - 2 * q], t_power=2)


class TestHypergeomOperator:
    def test_gauss_third(self):
        op = hypergeom_operator(HypergeomSpec([F(1, 3), F(2, 3)], [1]))
        assert op == mum_op([F(1, 3), F(2, 3)])

    def test_squared_argument_unit_lowers(self):
        spec = HypergeomSpec(
            [F(1, 4), F(1, 4), F(3, 4), F(3, 4)], [1, 1, 1], argument_power=2
        )
        op = hypergeom_operator(spec)
        assert op == mum_op([HALF, HALF, F(3, 2), F(3, 2)], t_power=2)

    def test_squared_argument_half_lower(self):
        # lower parameter 1/2 contributes a (theta - 1) factor after the
        # doubling, giving the even-family shape theta^3 (theta - 1) - ...
        spec = HypergeomSpec(
            [F(1, 4), F(1, 4), F(3, 4), F(3, 4)], [1, 1, HALF], argument_power=2
        )
        op = hypergeom_operator(spec)
        expect = theta_op(
            {
                0: Poly([0, 0, 0, -1, 1]),
                2: -theta_poly([HALF, HALF, F(3, 2), F(3, 2)]),
            }
        )
        assert op == expect

    def test_annihilates_own_series(self):
        for spec in [
            HypergeomSpec([HALF], []),
            HypergeomSpec([HALF, HALF], [1]),
            HypergeomSpec([HALF] * 3, [1, 1]),
            HypergeomSpec([F(1, 5), F(2, 5), F(3, 5), F(4, 5)], [1, 1, 1]),
            HypergeomSpec([F(1, 6), HALF, F(5, 6)], [1, 1]),
            HypergeomSpec([HALF, HALF], [1], argument_power=2),
            HypergeomSpec(
                [F(1, 4), F(3, 4), F(1, 8), F(7, 8)], [1, HALF, F(1, 3)],
                argument_power=2,
            ),
        ]:
            op = hypergeom_operator(spec)
            s = hypergeom_series(spec, order=30)
            assert op.annihilates(s), spec

    @given(
        st.lists(
            st.builds(F, st.integers(1, 9), st.integers(2, 10)),
            min_size=1,
            max_size=3,
        ),
        st.lists(
            st.builds(F, st.integers(1, 9), st.integers(1, 6)),
            min_size=0,
            max_size=2,
        ),
        st.sampled_from([1, 2]),
    )
    @settings(max_examples=40, deadline=None)
    def test_annihilation_property(self, upper, lower, power):
        spec = HypergeomSpec(upper, lower, argument_power=power)
        op = hypergeom_operator(spec)
        s = hypergeom_series(spec, order=20)
        assert op.annihilates(s)


class TestNormalization:
    def test_primitive_integer_content(self):
        op = hypergeom_operator(HypergeomSpec([F(1, 3), F(2, 3)], [1]))
        nums = [c for p in op.coeffs for c in p.coeffs]
        assert all(c.denominator == 1 for c in nums)

    def test_common_polynomial_factor_stripped(self):
        a = ThetaOperator([Poly([0, 2]), Poly([0, 0, 4])])
        assert a == ThetaOperator([Poly([1]), Poly([0, 2])])

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            ThetaOperator([Poly()])

    def test_sign_follows_lowest_t_part(self):
        op = l2(HALF)
        assert op.coeffs[2][0] > 0

    def test_json_round_trip(self):
        op = l4(F(1, 3))
        data = op.to_json()
        assert set(data) == {"theta_coeffs"}
        assert ThetaOperator.from_json(data) == op

    def test_printer(self):
        op = l2(HALF)
        text = op.to_string()
        assert "theta^2" in text and "t" in text


class TestConversions:
    def test_theta_d_round_trip(self):
        ops = [l2(F(1, 6)), l3(F(1, 4)), l4(F(1, 3)), l5(F(1, 5), F(2, 5))]
        for op in ops:
            assert op.to_d_form().to_theta_form() == op

    def test_d_form_monic(self):
        d = l2(HALF).to_d_form()
        assert d.coeffs[-1] == RatFunc(1)

    def test_dual_involutive_on_random_operators(self):
        rng = random.Random(11)
        for _ in range(50):
            n = rng.randint(2, 4)
            cs = [
                RatFunc(
                    Poly([F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(3)])
                )
                for _ in range(n)
            ]
            cs.append(RatFunc(1))
            d = DOperator(cs)
            assert d.dual().dual() == d

    def test_dual_order2_explicit(self):
        # (d^2 + a1 d + a0)* = d^2 - d o a1 + a0 = d^2 - a1 d + (a0 - a1')
        t = RatFunc(Poly.x())
        d = DOperator([t * t, t, RatFunc(1)])
        dd = d.dual()
        assert dd[1] == -t
        assert dd[0] == t * t - RatFunc(1)


class TestApply:
    def test_apply_linearity(self):
        op = l2(HALF)
        s1 = hypergeom_series(HypergeomSpec([HALF, HALF], [1]), order=15)
        s2 = hypergeom_series(HypergeomSpec([F(1, 3), F(2, 3)], [1]), order=15)
        assert op.apply(s1 + s2) == op.apply(s1) + op.apply(s2)

    def test_annihilates_good_series(self):
        op = l2(HALF)
        good = hypergeom_series(HypergeomSpec([HALF, HALF], [1]), order=20)
        assert op.annihilates(good)
        assert op.first_nonzero_index(good) is None

    def test_first_nonzero_index_localizes(self):
        from cyops.series import Series

        op = l2(HALF)
        good = hypergeom_series(HypergeomSpec([HALF, HALF], [1]), order=20)
        coeffs = list(good.coeffs)
        coeffs[7] += 1
        broken = Series(coeffs, 20)
        idx = op.first_nonzero_index(broken)
        assert idx == 7


class TestSelfDuality:
    def test_order4_family(self):
        for mu in [HALF, F(1, 3), F(1, 4), F(1, 6)]:
            assert is_self_dual_order4(l4(mu))

    def test_order4_rejects_perturbed(self):
        p = theta_poly([HALF, HALF, F(1, 3), F(2, 3)]) + Poly([0, 1])
        op = theta_op({0: Poly([0, 0, 0, 0, 1]), 1: -p})
        assert not is_self_dual_order4(op)

    def test_order4_wrong_order_raises(self):
        with pytest.raises(ValueError):
            is_self_dual_order4(l2(HALF))

    def test_order5_family(self):
        for p, q in [(HALF, HALF), (F(1, 5), F(2, 5)), (F(1, 12), F(5, 12))]:
            assert is_self_dual_order5(l5(p, q))
            assert is_self_dual_order5(l5hat(p, q))

    def test_order5_rejects_perturbed(self):
        pr = theta_poly([HALF, HALF, HALF, HALF, HALF]) + Poly([1])
        op = theta_op({0: Poly([0] * 5 + [1]), 1: -pr})
        assert not is_self_dual_order5(op)


class TestConjugate:
    def test_sqrt_t_shifts_theta(self):
        op = ThetaOperator([Poly(), Poly([1])])
        got = conjugate(op, [TwistFactor(Poly.x(), HALF)])
        assert got == ThetaOperator([Poly([1]), Poly([2])])

    def test_l2_conjugated_by_sqrt_t(self):
        # t^(-1/2) o L2 o t^(1/2): theta -> theta + 1/2
        mu = F(1, 6)
        got = conjugate(l2(mu), [TwistFactor(Poly.x(), HALF)])
        expect = theta_op(
            {
                0: theta_poly([HALF, HALF]),
                1: -theta_poly([HALF + mu, F(3, 2) - mu]),
            }
        )
        assert got == expect

    def test_round_trip(self):
        twists = [TwistFactor(Poly.x(), HALF), TwistFactor(Poly([-1, 1]), F(3, 4))]
        inverse = [TwistFactor(t.poly, -t.exponent) for t in twists]
        op = l4(F(1, 4))
        assert conjugate(conjugate(op, twists), inverse) == op

    def test_solution_transport(self):
        # if L kills f then conjugate(L, [(1-t, -1/2)]) kills (1-t)^(1/2) f
        from cyops.series import Series, algebraic_power

        op = l2(HALF)
        f = hypergeom_series(HypergeomSpec([HALF, HALF], [1]), order=25)
        pref = algebraic_power(Series([1, -1], 25), HALF)
        conj = conjugate(op, [TwistFactor(Poly([1, -1]), -HALF)])
        assert conj.annihilates(pref * f)


class TestExteriorSquare:
    def test_order2_gives_wronskian_operator(self):
        got = exterior_square(l2(HALF))
        # W ~ 1/(t(1-t)): (1-t) theta + (1-2t)
        assert got == ThetaOperator([Poly([1, -2]), Poly([1, -1])])

    def test_self_dual_order4_drops_to_5(self):
        for mu in [HALF, F(1, 3), F(1, 6)]:
            assert exterior_square(l4(mu)).order == 5

    def test_generic_order4_gives_6(self):
        op = theta_op(
            {0: Poly([0, 0, 0, 0, 1]), 1: -theta_poly([HALF, F(1, 3), F(1, 4), F(1, 5)])}
        )
        assert not is_self_dual_order4(op)
        assert exterior_square(op).order == 6

    def test_self_dual_iff_order5(self):
        cases = [
            (l4(F(1, 4)), True),
            (
                theta_op(
                    {
                        0: Poly([0, 0, 0, 0, 1]),
                        1: -(theta_poly([HALF, HALF, F(1, 3), F(2, 3)]) + Poly([0, 2])),
                    }
                ),
                False,
            ),
        ]
        for op, expect in cases:
            assert is_self_dual_order4(op) is expect
            assert (exterior_square(op).order == 5) is expect


class TestSymmetricSquare:
    def test_clausen_operator_level(self):
        # sym^2 of theta^2 - t(theta + mu/2)(theta + (1-mu)/2) is l3(mu)
        for mu in [HALF, F(1, 3), F(1, 4), F(1, 6)]:
            inner = mum_op([mu / 2, (1 - mu) / 2])
            assert symmetric_square(inner) == l3(mu)

    def test_frozen_half_case(self):
        got = symmetric_square(mum_op([F(1, 4), F(1, 4)]))
        assert got == l3(HALF)

    def test_square_of_solution_is_annihilated(self):
        spec = HypergeomSpec([HALF, HALF], [1])
        f = hypergeom_series(spec, order=25)
        got = symmetric_square(hypergeom_operator(spec))
        assert got.annihilates(f * f)


class TestYifanYangPullback:
    def test_round_trip_through_exterior_square(self):
        for p, q in [(HALF, HALF), (F(1, 5), F(2, 5)), (F(1, 8), F(3, 8))]:
            op = l5(p, q)
            pulled = yifan_yang_pullback(op)
            assert pulled.order == 4
            assert exterior_square(pulled) == op

    def test_rejects_non_self_dual(self):
        pr = theta_poly([HALF, HALF, HALF, HALF, HALF]) + Poly([1])
        op = theta_op({0: Poly([0] * 5 + [1]), 1: -pr})
        with pytest.raises(NotSelfDual):
            yifan_yang_pullback(op)

    def test_a3_relation(self):
        # leading normalization of the pullback: a3 = (2/5) b4
        op = l5(F(1, 3), HALF)
        b4 = op.to_d_form()[4]
        a3 = yifan_yang_pullback(op).to_d_form()[3]
        assert a3 == F(2, 5) * b4


class TestSubstituteSquare:
    def test_l5_to_hatted(self):
        for p, q in [(HALF, HALF), (F(1, 5), F(2, 5)), (F(1, 12), F(5, 12))]:
            assert l5(p, q).substitute_square() == l5hat(p, q)

    def test_l4_to_hatted(self):
        p, q = F(1, 8), F(3, 8)
        l4pq = mum_op([p, q, 1 - q, 1 - p])
        hat = mum_op([2 * p, 2 * q, 2 - 2 * q, 2 - 2 * p], t_power=2)
        assert l4pq.substitute_square() == hat

    def test_solutions_transport(self):
        spec = HypergeomSpec([HALF, HALF], [1])
        spec2 = HypergeomSpec([HALF, HALF], [1], argument_power=2)
        op = hypergeom_operator(spec).substitute_square()
        assert op.annihilates(hypergeom_series(spec2, order=30))


class TestHolomorphicSolution:
    def test_reproduces_hypergeometric(self):
        spec = HypergeomSpec([HALF, HALF], [1])
        op = hypergeom_operator(spec)
        assert op.holomorphic_solution(20) == hypergeom_series(spec, order=20)

    def test_resonant_even_operator(self):
        spec = HypergeomSpec(
            [F(1, 4), F(1, 4), F(3, 4), F(3, 4)], [1, 1, HALF], argument_power=2
        )
        op = hypergeom_operator(spec)
        assert op.holomorphic_solution(24) == hypergeom_series(spec, order=24)

    def test_obstruction_raises(self):
        op = theta_op({0: Poly([0, -1, 1]), 1: -Poly([5, 1])})
        with pytest.raises(ValueError):
            op.holomorphic_solution(10)

    def test_no_unit_solution_raises(self):
        op = theta_op({0: Poly([1, 0, 1]), 1: Poly([1])})
        with pytest.raises(ValueError):
            op.holomorphic_solution(5)
