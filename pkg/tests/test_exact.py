"""Exact scalar and cyclotomic arithmetic."""

from fractions import Fraction

import pytest

from stabgeo.exact import CycQ8, ExactScalar, QuadReal, SqrtFraction, parse_scalar


def test_scalar_values():
    one = ExactScalar.one()
    assert one.is_one and one.is_real
    i = ExactScalar.from_i_power(1)
    assert i.omega_exp == 2 and i.is_imaginary
    half = ExactScalar.of(0, 2)
    assert abs(half.to_complex() - 0.5) < 1e-12
    assert (i * i).omega_exp == 4  # i^2 = -1


def test_scalar_conjugate():
    s = ExactScalar.of(3, 1)
    c = s.conjugate()
    assert c.omega_exp == 5 and c.half_exp == 1
    assert (s * c).omega_exp == 0  # |s|^2 real


def test_scalar_text():
    cases = ["0", "1", "w^2", "2^-1/2", "w^7 * 2^-3/2"]
    for text in cases:
        assert str(parse_scalar(text)) == text
    assert parse_scalar("-1").omega_exp == 4
    assert parse_scalar("i").omega_exp == 2
    assert parse_scalar("-i").omega_exp == 6
    with pytest.raises(ValueError):
        parse_scalar("w^")


def test_cyc_omega_powers_cycle():
    w = CycQ8.omega_power(1)
    acc = CycQ8.one()
    for k in range(8):
        assert acc == CycQ8.omega_power(k)
        acc = acc * w
    assert acc == CycQ8.one()


def test_cyc_sqrt2_identity():
    s = CycQ8.sqrt2()
    assert s * s == CycQ8(2)
    inv_sqrt2 = s * Fraction(1, 2)
    assert inv_sqrt2 * inv_sqrt2 == CycQ8(Fraction(1, 2))


def test_cyc_inverse_and_conjugate():
    z = CycQ8(1, 2, Fraction(-1, 3), 5)
    assert z * z.inverse() == CycQ8.one()
    assert z.abs2().sign() > 0
    # conjugation is an involution and matches the complex embedding
    assert z.conjugate().conjugate() == z
    assert abs(z.conjugate().to_complex() - z.to_complex().conjugate()) < 1e-12


def test_exact_scalar_to_cyc_round():
    for m in range(8):
        for k in range(4):
            s = ExactScalar.of(m, k)
            assert abs(s.to_cyc().to_complex() - s.to_complex()) < 1e-12


def test_quadreal_comparisons():
    a = QuadReal(1, 0)
    b = QuadReal(0, 1)          # sqrt(2)
    c = QuadReal(Fraction(3, 2), 0)
    assert a < b < c
    assert QuadReal(-1, 1).sign() > 0   # sqrt(2) - 1 > 0
    assert QuadReal(3, -2).sign() > 0   # 3 - 2 sqrt(2) = 0.17...
    assert QuadReal(1, -1).sign() < 0   # 1 - sqrt(2) < 0
    assert QuadReal(-3, 2).sign() < 0
    assert QuadReal(0, 0).sign() == 0


def test_sqrt_fraction():
    assert SqrtFraction(Fraction(1)) == 1
    assert SqrtFraction(Fraction(0)) == 0
    assert SqrtFraction(Fraction(1, 2)) == SqrtFraction(Fraction(1, 2))
    assert SqrtFraction(Fraction(3, 4)) != 1
    assert str(SqrtFraction(Fraction(1, 2))) == "sqrt(1/2)"
    assert str(SqrtFraction(Fraction(4))) == "2"
    assert abs(float(SqrtFraction(Fraction(3, 4))) - 0.75 ** 0.5) < 1e-12
