import cmath
import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gds import Complex, DivisionByZero, Polar, add, conjugate, div, from_polar, modulus, modulus_sq, mul, sub, to_polar
from gds.cplx import normalize_phase

finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)
complexes = st.builds(Complex, finite, finite)
unit = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False)


@st.composite
def unit_disk(draw):
    r = draw(st.floats(min_value=0.0, max_value=1.0))
    t = draw(st.floats(min_value=-math.pi, max_value=math.pi))
    return Complex(r * math.cos(t), r * math.sin(t))


def close(a, b, tol=1e-9):
    return abs(a.re - b.re) <= tol and abs(a.im - b.im) <= tol


class TestPolar:
    def test_unit_zero_phase(self):
        assert from_polar(Polar(1.0, 0.0)) == Complex(1.0, 0.0)

    def test_diagonal(self):
        assert close(from_polar(Polar(math.sqrt(0.5), math.pi / 4)), Complex(0.5, 0.5), 1e-12)

    def test_reference_mass_matches_high_precision(self):
        # independent evaluation of Euler's relation at 50 digits
        mpmath.mp.dps = 50
        t = mpmath.atan(mpmath.mpf("-1.7678"))
        r = mpmath.mpf("0.2031")
        ref = Complex(float(r * mpmath.cos(t)), float(r * mpmath.sin(t)))
        z = from_polar(Polar(0.2031, math.atan(-1.7678)))
        assert close(z, ref, 1e-15)
        assert close(z, Complex(0.1000, -0.1768), 1e-3)

    @pytest.mark.parametrize(
        "z, r, t",
        [(Complex(0.5, 0.5), 0.7071067811865476, math.pi / 4), (Complex(1, 0), 1.0, 0.0)],
    )
    def test_to_polar(self, z, r, t):
        p = to_polar(z)
        assert p.magnitude == pytest.approx(r, abs=1e-12)
        assert p.phase == pytest.approx(t, abs=1e-12)

    def test_to_polar_second_quadrant(self):
        # reference fused M(A,B): a single-argument arctan would land near -1.5647
        p = to_polar(Complex(-0.0010, 0.1634))
        assert p.magnitude == pytest.approx(0.1634, abs=1e-3)
        assert p.phase == pytest.approx(math.atan2(0.1634, -0.0010), abs=1e-15)
        assert p.phase == pytest.approx(1.5769, abs=1e-4)

    def test_zero_is_canonical(self):
        assert to_polar(Complex(0.0, 0.0)) == Polar(0.0, 0.0)
        assert Polar(0.0, 2.0) == Polar(0.0, 0.0)

    def test_negative_real_axis_is_plus_pi(self):
        assert to_polar(Complex(-1.0, -0.0)).phase == math.pi
        assert Polar(1.0, -math.pi).phase == math.pi

    def test_rejects_negative_magnitude(self):
        with pytest.raises(ValueError):
            Polar(-0.1, 0.0)

    @given(st.floats(min_value=-50.0, max_value=50.0))
    def test_phase_normalization_range(self, t):
        w = normalize_phase(t)
        assert -math.pi < w <= math.pi
        assert math.cos(w) == pytest.approx(math.cos(t), abs=1e-9)
        assert math.sin(w) == pytest.approx(math.sin(t), abs=1e-9)

    @given(st.floats(min_value=0.0, max_value=1.0), st.floats(min_value=-math.pi, max_value=math.pi))
    def test_round_trip_from_polar(self, r, t):
        p = Polar(r, t)
        q = to_polar(from_polar(p))
        assert q.magnitude == pytest.approx(p.magnitude, abs=1e-12)
        if r > 1e-9:
            # compare on the circle so pi and -pi+eps are neighbours
            d = normalize_phase(q.phase - p.phase)
            assert abs(d) <= 1e-12 / r + 1e-15

    @given(unit_disk())
    def test_round_trip_from_rect(self, z):
        assert close(from_polar(to_polar(z)), z, 1e-12)


class TestArithmetic:
    def test_add_examples(self):
        assert add(Complex(1, 0), Complex(0, 0)) == Complex(1, 0)
        assert add(Complex(0.5, -0.5), Complex(0.5, 0.5)) == Complex(1, 0)
        total = Complex(0.0979, 0.0186) + Complex(0.9031, -0.1820) + Complex(-0.0010, 0.1634)
        assert close(total, Complex(1, 0), 1e-3)

    def test_sub_examples(self):
        assert close(sub(Complex(1, 0), Complex(0.26, 0)), Complex(0.74, 0), 1e-15)
        z = Complex(0.3, -0.7)
        assert sub(z, z) == Complex(0, 0)
        assert sub(Complex(1, 0), Complex(0, 1)) == Complex(1, -1)

    def test_mul_examples(self):
        assert mul(Complex(0.5, -0.5), Complex(0.5, -0.5)) == Complex(0.0, -0.5)
        z = Complex(0.3, -0.7)
        assert mul(z, Complex(1, 0)) == z
        assert mul(Complex(0, 1), Complex(0, 1)) == Complex(-1, 0)

    def test_div_examples(self):
        q = div(Complex(0.72, 0), Complex(0.74, 0))
        assert q.re == pytest.approx(0.9730, abs=1e-4) and q.im == 0.0
        z = Complex(0.3, -0.7)
        assert div(z, Complex(1, 0)) == z
        # by hand: (1+i)/(1-i) = (1+i)^2 / 2 = 2i / 2
        assert div(Complex(1, 1), Complex(1, -1)) == Complex(0, 1)

    def test_div_by_zero(self):
        with pytest.raises(DivisionByZero):
            div(Complex(1, 0), Complex(0, 0))
        with pytest.raises(ZeroDivisionError):
            Complex(1, 0) / 0

    def test_conjugate_modulus(self):
        assert modulus(Complex(0.5, 0.5)) == pytest.approx(0.7071, abs=1e-4)
        assert conjugate(Complex(0.1, -0.1768)) == Complex(0.1, 0.1768)

    def test_operators_accept_builtin_numbers(self):
        z = Complex(0.5, 0.25)
        assert 1 - z == Complex(0.5, -0.25)
        assert z * 2 == Complex(1.0, 0.5)
        assert z + 1j == Complex(0.5, 1.25)
        assert complex(z) == 0.5 + 0.25j
        assert abs(Complex(3, 4)) == 5.0

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            Complex(float("nan"), 0.0)
        with pytest.raises(ValueError):
            Complex(0.0, float("inf"))

    @given(complexes)
    def test_modulus_sq(self, z):
        assert modulus_sq(z) == pytest.approx(modulus(z) ** 2, rel=1e-12, abs=1e-12)

    @given(complexes, complexes)
    def test_matches_builtin_complex(self, a, b):
        # the builtin type is an independent implementation of the same field
        ca, cb = complex(a), complex(b)
        assert close(add(a, b), Complex((ca + cb).real, (ca + cb).imag), 0.0)
        p = ca * cb
        assert close(mul(a, b), Complex(p.real, p.imag), 1e-9 * (1 + abs(p)))
        if abs(cb) > 1e-3:
            q = ca / cb
            assert close(div(a, b), Complex(q.real, q.imag), 1e-9 * (1 + abs(q)))


class TestFieldLaws:
    @given(unit_disk(), unit_disk())
    def test_commutative(self, a, b):
        assert add(a, b) == add(b, a)
        assert close(mul(a, b), mul(b, a), 1e-12)

    @given(unit_disk(), unit_disk(), unit_disk())
    def test_associative(self, a, b, c):
        assert close(add(add(a, b), c), add(a, add(b, c)), 1e-12)
        assert close(mul(mul(a, b), c), mul(a, mul(b, c)), 1e-12)

    @given(unit_disk(), unit_disk(), unit_disk())
    def test_distributive(self, a, b, c):
        assert close(mul(a, add(b, c)), add(mul(a, b), mul(a, c)), 1e-12)

    @given(unit_disk(), unit_disk())
    def test_modulus_multiplicative(self, a, b):
        assert modulus(mul(a, b)) == pytest.approx(modulus(a) * modulus(b), abs=1e-12)

    @given(unit_disk(), unit_disk())
    def test_div_inverts_mul(self, a, b):
        if modulus(b) > 1e-9:
            assert close(div(mul(a, b), b), a, 1e-10)

    @given(unit_disk())
    def test_polar_phases_add(self, z):
        w = Complex(0.6, 0.8)
        p = to_polar(mul(z, w))
        if modulus(z) > 1e-6:
            d = normalize_phase(p.phase - to_polar(z).phase - to_polar(w).phase)
            assert abs(d) < 1e-9
            assert p.magnitude == pytest.approx(cmath.polar(complex(z))[0], abs=1e-12)
