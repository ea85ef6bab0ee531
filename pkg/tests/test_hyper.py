import math

import pytest

from alphanum.exact import factorize, sigma_k_exact
from alphanum.hyper import (
    DEFAULT_PRECISION,
    Precision,
    Quaternion,
    format_quaternion,
    parse_quaternion,
    quat_div,
    quat_exp,
    quat_inverse,
    quat_mul,
    real_pow_quat,
    rounded_modulus,
    sigma_general,
)

I = Quaternion(0, 1, 0, 0)
J = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)


class TestQuaternionAlgebra:
    def test_hamilton_relations(self):
        assert quat_mul(I, J) == K
        assert quat_mul(J, K) == I
        assert quat_mul(K, I) == J
        assert quat_mul(I, I) == Quaternion(-1)

    def test_complex_product(self):
        assert quat_mul(Quaternion(1, 1), Quaternion(1, -1)) == Quaternion(2)

    def test_identity(self):
        x = Quaternion(1.5, -2.0, 0.25, 3.0)
        assert quat_mul(x, Quaternion(1)) == x

    def test_norm_multiplicative(self):
        x = Quaternion(1.0, 2.0, -1.0, 0.5)
        y = Quaternion(-0.5, 0.3, 2.0, 1.0)
        prod = quat_mul(x, y)
        assert prod.norm() == pytest.approx(x.norm() * y.norm(), rel=1e-12)

    def test_inverse_and_division(self):
        x = Quaternion(2.0, -1.0, 0.5, 3.0)
        ident = quat_mul(x, quat_inverse(x))
        assert ident.a == pytest.approx(1.0, rel=1e-12)
        assert abs(ident.b) < 1e-12 and abs(ident.c) < 1e-12 and abs(ident.d) < 1e-12
        assert quat_div(x, x).a == pytest.approx(1.0, rel=1e-12)

    def test_exp_real(self):
        assert quat_exp(Quaternion(1.0)).a == pytest.approx(math.e)

    def test_exp_modulus(self):
        q = Quaternion(0.7, 1.2, -0.4, 2.2)
        assert quat_exp(q).norm() == pytest.approx(math.exp(q.a), rel=1e-12)

    def test_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            Quaternion(math.inf)

    def test_predicates(self):
        assert Quaternion(2.0).is_real
        assert Quaternion(2.0, 1.0).is_complex
        assert not Quaternion(2.0, 1.0).is_real
        assert not Quaternion(0, 0, 1.0).is_complex


class TestRealPow:
    def test_square_root(self):
        assert real_pow_quat(4, Quaternion(0.5)).a == pytest.approx(2.0)

    def test_complex_exponent(self):
        # 2**i = cos(ln 2) + i sin(ln 2)
        q = real_pow_quat(2, I)
        assert q.a == pytest.approx(0.7692, abs=1e-4)
        assert q.b == pytest.approx(0.6390, abs=1e-4)

    def test_zero_exponent(self):
        for d in (1, 2, 97, 10**6):
            assert real_pow_quat(d, Quaternion(0.0)) == Quaternion(1.0)

    def test_nonpositive_base_rejected(self):
        with pytest.raises(ValueError):
            real_pow_quat(0, I)
        with pytest.raises(ValueError):
            real_pow_quat(-2, Quaternion(1.0))

    def test_modulus_is_base_to_real_part(self):
        x = Quaternion(0.3, 1.0, -2.0, 0.7)
        for d in (2, 10, 977):
            assert real_pow_quat(d, x).norm() == pytest.approx(d**0.3, rel=1e-12)

    def test_integer_exponent_exact(self):
        assert real_pow_quat(24, Quaternion(1.0)).a == 24.0
        assert real_pow_quat(7, Quaternion(2.0)).a == 49.0


class TestSigmaGeneral:
    def test_reference_half(self):
        q = sigma_general(factorize(6), 0.5)
        assert q.a == pytest.approx(6.5959, abs=1e-3)
        assert q.is_real

    def test_reference_imaginary(self):
        q = sigma_general(factorize(30), I)
        assert q.a == pytest.approx(-0.5759, abs=1e-3)
        assert q.b == pytest.approx(4.412, abs=1e-3)

    def test_unit(self):
        for x in (Quaternion(0.5), I, Quaternion(1, 2, 3, 4)):
            assert sigma_general(factorize(1), x) == Quaternion(1.0)

    def test_agrees_with_exact(self):
        for n in range(1, 201):
            f = factorize(n)
            for k in (0, 1, 2):
                exact = sigma_k_exact(f, k)
                approx = sigma_general(f, Quaternion(float(k))).a
                assert abs(approx - exact) / exact < 1e-10

    def test_complex_embedding(self):
        q = sigma_general(factorize(360), Quaternion(0.5, 1.5))
        assert q.c == 0.0 and q.d == 0.0

    def test_accepts_plain_numbers(self):
        assert sigma_general(factorize(10), 1).a == pytest.approx(18.0)
        assert sigma_general(factorize(10), 1j).b == pytest.approx(2.3822, abs=1e-3)


class TestRoundedModulus:
    def test_reference_floors(self):
        v24 = sigma_general(factorize(24), I)
        assert rounded_modulus(v24, "floor") == (4, False)
        v8 = sigma_general(factorize(8), 0.5)
        assert rounded_modulus(v8, "floor") == (7, False)

    def test_reference_ceiling(self):
        v = sigma_general(factorize(24), 0.5)  # 19.787...
        assert rounded_modulus(v, "ceiling") == (20, False)

    def test_exact_integer_not_flagged(self):
        assert rounded_modulus(Quaternion(24.0), "floor") == (24, False)
        assert rounded_modulus(Quaternion(24.0), "ceiling") == (24, False)

    def test_near_integer_snaps_and_flags(self):
        low = Quaternion(23.9999999999997)
        high = Quaternion(24.0000000000003)
        assert rounded_modulus(low, "floor") == (24, True)
        assert rounded_modulus(high, "floor") == (24, True)
        assert rounded_modulus(low, "ceiling") == (24, True)

    def test_plain_rounding(self):
        assert rounded_modulus(Quaternion(7.6), "floor") == (7, False)
        assert rounded_modulus(Quaternion(7.4), "ceiling") == (8, False)

    def test_mode_validated(self):
        with pytest.raises(ValueError):
            rounded_modulus(Quaternion(1.0), "round")


class TestPrecision:
    def test_defaults(self):
        assert DEFAULT_PRECISION.eps_rel == 1e-12
        assert DEFAULT_PRECISION.boundary_eps == 1e-9

    def test_ordering_enforced(self):
        with pytest.raises(ValueError):
            Precision(eps_rel=1e-6, boundary_eps=1e-9)
        with pytest.raises(ValueError):
            Precision(eps_rel=0.0, boundary_eps=1e-9)
        with pytest.raises(ValueError):
            Precision(eps_rel=0.5, boundary_eps=2.0)


class TestLiterals:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("2", Quaternion(2.0)),
            ("0.5", Quaternion(0.5)),
            ("-3", Quaternion(-3.0)),
            ("i", Quaternion(0, 1)),
            ("-i", Quaternion(0, -1)),
            ("1+2i", Quaternion(1, 2)),
            ("i+j", Quaternion(0, 1, 1)),
            ("1.5-0.5i+2j-k", Quaternion(1.5, -0.5, 2, -1)),
        ],
    )
    def test_parse(self, text, expected):
        assert parse_quaternion(text) == expected

    def test_round_trip(self):
        for q in (Quaternion(1.0), Quaternion(0, 1), Quaternion(2, -3, 0.5, 1)):
            assert parse_quaternion(format_quaternion(q)) == q

    @pytest.mark.parametrize("bad", ["", "1+", "2x", "++i"])
    def test_rejects_garbage(self, bad):
        with pytest.raises(ValueError):
            parse_quaternion(bad)
