from fractions import Fraction

import pytest

from arith.padic import PadicResidue, hensel_root, p_valuation, padic_frac, rational_residue, split_off
from arith.quadelem import QuadElem, embedding_sign, quad_arith
from utils.errors import NoDegreeOnePlace, ThetaError


def omega17():
	return QuadElem.from_omega(0, 1, 17)


def test_p_valuation():
	assert p_valuation(Fraction(12, 5), 2) == 2
	assert p_valuation(Fraction(3, 8), 2) == -3
	assert p_valuation(7, 3) == 0
	with pytest.raises(ThetaError):
		p_valuation(0, 2)


def test_split_off():
	assert split_off(Fraction(40, 3), 2) == (3, Fraction(5, 3))


def test_padic_frac():
	assert padic_frac(Fraction(1, 24), 2) == Fraction(3, 8)
	assert padic_frac(Fraction(1, 24), 3) == Fraction(2, 3)
	assert padic_frac(Fraction(5, 7), 2) == 0


def test_rational_residue():
	assert rational_residue(Fraction(1, 3), 2, 3) == 3
	with pytest.raises(ThetaError):
		rational_residue(Fraction(1, 2), 2, 1)


def test_padic_residue_reduces_value():
	r = PadicResidue(3, 2, 20)
	assert r.value == 2
	assert r.reduce(1).value == 2
	assert r.is_unit()


@pytest.mark.parametrize("label", [1, 2])
def test_hensel_root_lifts(label):
	r = hensel_root(17, 2, 6, label).value
	assert (r * r - r - 4) % 64 == 0


def test_hensel_roots_are_distinct():
	assert hensel_root(17, 2, 1, 1).value != hensel_root(17, 2, 1, 2).value


def test_hensel_root_needs_a_split_prime():
	with pytest.raises(NoDegreeOnePlace):
		hensel_root(5, 2, 3)


def test_quadelem_invariants():
	w = omega17()
	assert w == QuadElem(Fraction(1, 2), Fraction(1, 2), 17)
	assert w.norm() == -4
	assert w.trace() == 1
	assert w.omega_coords() == (0, 1)
	assert w.is_integral()
	assert (w / 2).denominator() == 2


def test_quadelem_inverse_and_power():
	w = omega17()
	assert w * w.inverse() == 1
	assert w ** 2 == w + 4
	assert w ** -2 * w ** 2 == 1


def test_rational_division():
	x = QuadElem.rational(3)
	assert x / 2 == Fraction(3, 2)
	assert x.inverse() == Fraction(1, 3)
	assert QuadElem.rational(-4) ** -2 == Fraction(1, 16)
	assert quad_arith(x, QuadElem.rational(6), "div") == Fraction(1, 2)


def test_quadelem_compares_with_rationals():
	x = QuadElem.rational(3, 17)
	assert x == 3
	assert x == Fraction(3)
	assert hash(x) == hash(3)
	assert omega17() != 3


def test_rational_context_rejects_sqrt_part():
	with pytest.raises(ThetaError):
		QuadElem(Fraction(1), Fraction(1), 1)


def test_embedding_sign_is_exact():
	a = QuadElem(4, -1, 17)
	assert embedding_sign(a, 1) == -1
	assert embedding_sign(a, 2) == 1
	# 33^2 = 1089 against 8^2 * 17 = 1088
	b = QuadElem(33, -8, 17)
	assert embedding_sign(b, 1) == 1
	assert not (-b).is_totally_positive()
	assert b.is_totally_positive()


def test_quad_arith():
	a = QuadElem(Fraction(1, 2), Fraction(1, 2), 17)
	b = QuadElem(3, -1, 17)
	assert quad_arith(a, b, "add") == QuadElem(Fraction(7, 2), Fraction(-1, 2), 17)
	assert quad_arith(a, b, "sub") == QuadElem(Fraction(-5, 2), Fraction(3, 2), 17)
	assert quad_arith(a, b, "mul") == QuadElem(-7, 1, 17)
	assert quad_arith(quad_arith(a, b, "div"), b, "mul") == a
	with pytest.raises(ZeroDivisionError):
		quad_arith(a, QuadElem(0, 0, 17), "div")
	with pytest.raises(ThetaError):
		quad_arith(a, b, "pow")
