"""Tests for the exact cyclotomic scalar layer."""

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gcalg.cyclo import (
    AlgebraContext,
    ContextMismatchError,
    CycloScalar,
    admissible_zeta_exps,
    cyclotomic_polynomial,
)


def euler_phi(m):
    return sum(1 for k in range(1, m + 1) if math.gcd(k, m) == 1)


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


class TestCyclotomicPolynomial:
    def test_base_cases(self):
        assert cyclotomic_polynomial(1) == (-1, 1)
        assert cyclotomic_polynomial(2) == (1, 1)
        assert cyclotomic_polynomial(6) == (1, -1, 1)

    def test_degree_is_totient(self):
        for m in range(1, 31):
            assert len(cyclotomic_polynomial(m)) - 1 == euler_phi(m)

    def test_product_over_divisors_rebuilds_x_to_m_minus_one(self):
        for m in range(1, 21):
            product = [1]
            for d in range(1, m + 1):
                if m % d == 0:
                    product = poly_mul(product, list(cyclotomic_polynomial(d)))
            expected = [-1] + [0] * (m - 1) + [1]
            assert product == expected

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            cyclotomic_polynomial(0)


class TestContext:
    def test_validation(self):
        with pytest.raises(ValueError):
            AlgebraContext(1, 1)
        with pytest.raises(ValueError):
            AlgebraContext(3, 0)
        with pytest.raises(ValueError):
            AlgebraContext(3, 2, 1)  # plus root inadmissible for odd N
        AlgebraContext(4, 1, 1)
        AlgebraContext(4, 1, 5)
        with pytest.raises(ValueError):
            AlgebraContext(4, 1, 2)

    def test_defaults(self):
        assert AlgebraContext(3, 2).zeta_exp == 4
        assert AlgebraContext(5, 1).zeta_exp == 6
        assert AlgebraContext(2, 1).zeta_exp == 1
        assert AlgebraContext(4, 1).zeta_exp == 1
        assert admissible_zeta_exps(7) == (8,)
        assert admissible_zeta_exps(6) == (1, 7)

    def test_from_sign(self):
        assert AlgebraContext.from_sign(4, 1, "+").zeta_exp == 1
        assert AlgebraContext.from_sign(4, 1, "-").zeta_exp == 5
        # '-' with odd N is the canonical choice
        assert AlgebraContext.from_sign(3, 1, "-").zeta_exp == 4
        with pytest.raises(ValueError):
            AlgebraContext.from_sign(3, 1, "+")
        with pytest.raises(ValueError):
            AlgebraContext.from_sign(3, 1, "x")


class TestRootRelations:
    @pytest.mark.parametrize("N", range(2, 10))
    def test_omega_to_the_N_is_minus_one(self, N):
        ctx = AlgebraContext(N, 1)
        assert (ctx.one() + ctx.omega(N)).is_zero()

    @pytest.mark.parametrize("N", range(2, 10))
    def test_q_has_order_N(self, N):
        ctx = AlgebraContext(N, 1)
        assert ctx.q() ** N == 1
        assert ctx.q() == ctx.omega(2)

    @pytest.mark.parametrize("N", range(2, 10))
    def test_zeta_is_unit(self, N):
        ctx = AlgebraContext(N, 1)
        assert ctx.zeta().conj() * ctx.zeta() == 1

    @pytest.mark.parametrize("N", range(2, 10))
    def test_roots_have_unit_modulus_in_float_display(self, N):
        ctx = AlgebraContext(N, 1)
        for k in range(ctx.order):
            assert abs(abs(ctx.omega(k).to_complex()) - 1.0) < 1e-12

    def test_zeta_examples(self):
        # N=3: the canonical root is -exp(i*pi/3) = w^4
        assert AlgebraContext(3, 1).zeta() == CycloScalar.root(6, 4)
        # N=2: the default root is w = i
        ctx = AlgebraContext(2, 1)
        assert ctx.zeta() == ctx.omega(1)
        z = ctx.zeta().to_complex()
        assert abs(z - 1j) < 1e-12

    @pytest.mark.parametrize("N", range(2, 10))
    def test_zeta_squares_to_q_for_every_admissible_root(self, N):
        for exp in admissible_zeta_exps(N):
            ctx = AlgebraContext(N, 1, exp)
            assert (ctx.zeta() * ctx.zeta() - ctx.q()).is_zero()

    @pytest.mark.parametrize("N", [3, 5, 7, 9])
    def test_odd_square_roots_split(self, N):
        # (+exp(i*pi/N))^(N^2) = -1 while (-exp(i*pi/N))^(N^2) = +1
        ctx = AlgebraContext(N, 1)
        assert ctx.omega(1) ** (N * N) == -1
        assert ctx.omega(N + 1) ** (N * N) == 1

    @pytest.mark.parametrize("N", [2, 4, 6, 8])
    def test_even_square_roots_both_work(self, N):
        ctx = AlgebraContext(N, 1)
        assert ctx.omega(1) ** (N * N) == 1
        assert ctx.omega(N + 1) ** (N * N) == 1

    @pytest.mark.parametrize("N", [3, 5, 7, 9])
    def test_odd_canonical_zeta_is_a_power_of_q(self, N):
        ctx = AlgebraContext(N, 1)
        assert ctx.zeta() == ctx.q((N + 1) // 2)


class TestScalarArithmetic:
    def test_is_zero_cube_root_sum(self):
        # 1 + w^2 + w^4 with m=6: w^2 is a primitive cube root of unity
        ctx = AlgebraContext(3, 1)
        s = ctx.one() + ctx.omega(2) + ctx.omega(4)
        assert s.is_zero()
        assert abs(s.to_complex()) < 1e-12

    def test_to_complex_examples(self):
        assert CycloScalar.one(6).to_complex() == 1 + 0j
        assert abs(AlgebraContext(2, 1).omega(1).to_complex() - 1j) < 1e-12
        z = AlgebraContext(3, 1).zeta().to_complex()
        assert abs(z.real + 0.5) < 1e-12
        assert abs(z.imag + math.sin(math.pi / 3)) < 1e-12

    def test_q_inverse_power(self):
        ctx = AlgebraContext(3, 1)
        assert ctx.q() * ctx.q(2) == 1

    def test_mismatched_orders_raise(self):
        a = CycloScalar.one(6)
        b = CycloScalar.one(8)
        with pytest.raises(ContextMismatchError):
            a + b
        with pytest.raises(ContextMismatchError):
            a * b
        assert (a == b) is False

    def test_equality_modulo_cyclotomic(self):
        # different stored maps, same value
        a = CycloScalar(6, {0: 1})
        b = CycloScalar(6, {2: -1, 4: -1})  # since 1 + w^2 + w^4 = 0
        assert a == b
        assert a == 1
        assert CycloScalar.zero(6) == 0

    def test_is_zero_agrees_with_float_oracle(self):
        rng = random.Random(20240817)
        zeros = 0
        for _ in range(1000):
            N = rng.randint(2, 9)
            m = 2 * N
            support = rng.sample(range(m), rng.randint(1, min(5, m)))
            s = CycloScalar(m, {k: rng.randint(-3, 3) for k in support})
            exactly = s.is_zero()
            numerically = abs(s.to_complex()) < 1e-9
            assert exactly == numerically
            zeros += exactly
        assert zeros > 0  # the sample must exercise both branches

    def test_json_round_trip(self):
        ctx = AlgebraContext(3, 1)
        s = ctx.scalar(Fraction(3, 2)) * ctx.omega(5) + ctx.q(-1)
        data = s.to_json()
        assert set(data) == {"order", "coeffs", "approx"}
        assert set(data["approx"]) == {"re", "im"}
        assert CycloScalar.from_json(data) == s

    def test_pow_rejects_negative(self):
        with pytest.raises(ValueError):
            CycloScalar.root(6, 1) ** -1


_orders = st.sampled_from([4, 6, 8, 10, 12])


@st.composite
def _scalars(draw, order):
    coeffs = {}
    for _ in range(draw(st.integers(0, 4))):
        k = draw(st.integers(0, order - 1))
        coeffs[k] = coeffs.get(k, 0) + Fraction(
            draw(st.integers(-4, 4)), draw(st.integers(1, 4))
        )
    return CycloScalar(order, coeffs)


class TestRingLaws:
    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_ring_laws(self, data):
        m = data.draw(_orders)
        a = data.draw(_scalars(m))
        b = data.draw(_scalars(m))
        c = data.draw(_scalars(m))
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a + (-a) == 0

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_conj_is_an_involutive_automorphism(self, data):
        m = data.draw(_orders)
        a = data.draw(_scalars(m))
        b = data.draw(_scalars(m))
        assert a.conj().conj() == a
        assert (a + b).conj() == a.conj() + b.conj()
        assert (a * b).conj() == a.conj() * b.conj()

    @settings(max_examples=30, deadline=None)
    @given(st.integers(-20, 20), st.integers(1, 9))
    def test_conj_fixes_rationals(self, num, den):
        s = CycloScalar.rational(10, Fraction(num, den))
        assert s.conj() == s
