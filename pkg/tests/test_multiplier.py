from fractions import Fraction
from itertools import product

import mpmath
import pytest

from existence.construct import construct_triple
from localsymbols.sl2 import S, SL2Mat, T, identity, minus_identity, random_word, small_matrices, u_minus, u_plus
from multiplier.automorphy import act, automorphy_J, weight_factor
from multiplier.characters import genuine_character_table
from multiplier.systems import (
	MultiplierSpec,
	cocycle_check,
	gamma1_4_check,
	kappa_v,
	principal_congruence_check,
	psi_local,
	v_eta,
	v_lambda,
)
from multiplier.unitroot import UnitRoot
from quadfield.ideals import FracIdeal
from quadfield.places import primes_above, t3_places, two_places
from quadfield.triple import HALF, THREE_HALVES, GTriple
from utils.errors import ThetaError


def e(r):
	return UnitRoot(Fraction(r))


SMALL = small_matrices(2)


def test_unit_root_arithmetic():
	assert e(Fraction(1, 2)) * e(Fraction(1, 2)) == UnitRoot.one()
	assert UnitRoot.from_sign(-1).order == 2
	assert e(Fraction(1, 8)) ** 8 == UnitRoot.one()
	assert e(Fraction(-1, 8)) == e(Fraction(7, 8))
	assert e(Fraction(1, 3)) * -1 == e(Fraction(5, 6))
	assert abs(e(Fraction(1, 4)).to_complex() - 1j) < 1e-12
	with pytest.raises(ThetaError):
		UnitRoot.from_sign(0)


def test_psi_local_over_q(rational):
	beta = rational.elem(Fraction(1, 24))
	two, = primes_above(rational, 2)
	three, = primes_above(rational, 3)
	assert psi_local(beta, -1, two) == e(Fraction(3, 8))
	assert psi_local(beta, -1, three) == e(Fraction(2, 3))
	assert psi_local(beta, 0, two).is_one()


def test_kappa_for_eta(rational, eta_triple):
	spec = MultiplierSpec(eta_triple)
	two, = two_places(rational)
	three, = t3_places(rational)
	assert kappa_v(spec, T(rational), two) == e(Fraction(3, 8))
	assert kappa_v(spec, T(rational), three) == e(Fraction(2, 3))
	assert kappa_v(spec, S(rational), three).is_one()
	five, = primes_above(rational, 5)
	with pytest.raises(ThetaError):
		kappa_v(spec, T(rational), five)


def test_v_eta_values(rational):
	assert v_eta(T(rational)) == e(Fraction(1, 24))
	assert v_eta(S(rational)) == e(Fraction(-1, 8))
	assert v_eta(minus_identity(rational)) == e(Fraction(1, 4))


def test_v_lambda_values(rational, eta_triple):
	spec = MultiplierSpec(eta_triple)
	assert spec(T(rational)) == e(Fraction(1, 24))
	assert spec(S(rational)) == e(Fraction(7, 8))
	assert spec(identity(rational)).is_one()


@pytest.fixture(scope="module")
def bounded_by_twenty():
	return small_matrices(20)


@pytest.mark.parametrize("bound", [2, 6])
def test_v_lambda_is_v_eta(eta_triple, bound):
	spec = MultiplierSpec(eta_triple)
	for g in small_matrices(bound):
		assert v_lambda(spec, g) == v_eta(g), str(g)


@pytest.mark.parametrize("bound", [2, 6])
def test_v_lambda_is_v_eta_cubed(eta3_triple, bound):
	spec = MultiplierSpec(eta3_triple)
	for g in small_matrices(bound):
		assert spec(g) == v_eta(g) ** 3, str(g)


@pytest.mark.slow
def test_v_lambda_is_v_eta_entries_up_to_twenty(eta_triple, eta3_triple, bounded_by_twenty):
	spec, spec3 = MultiplierSpec(eta_triple), MultiplierSpec(eta3_triple)
	for g in bounded_by_twenty:
		assert spec(g) == v_eta(g), str(g)
		assert spec3(g) == v_eta(g) ** 3, str(g)


def test_v_lambda_is_v_eta_on_random_words(rational, eta_triple, eta3_triple, rng):
	spec, spec3 = MultiplierSpec(eta_triple), MultiplierSpec(eta3_triple)
	for _ in range(500):
		g = random_word(rational, rng, 16)
		assert spec(g) == v_eta(g), str(g)
		assert spec3(g) == v_eta(g) ** 3, str(g)


@pytest.mark.parametrize("entries", [(-5, -4, 4, 3), (-5, -2, -2, -1), (2, -1, 3, -1)])
def test_v_lambda_on_even_and_negative_bottom_rows(rational, eta_triple, entries):
	g = SL2Mat.of(rational, *entries)
	assert MultiplierSpec(eta_triple)(g) == v_eta(g)


def test_v_eta_cocycle():
	for g, h in product(SMALL[::3], repeat=2):
		assert cocycle_check(v_eta, g, h), (str(g), str(h))


def test_v_lambda_cocycle_over_q(rational, eta_triple, rng):
	spec = MultiplierSpec(eta_triple)
	for _ in range(100):
		g, h = random_word(rational, rng, 6), random_word(rational, rng, 6)
		assert cocycle_check(spec, g, h), (str(g), str(h))


def test_v_lambda_cocycle_over_q17(q17_triple, rng):
	spec = MultiplierSpec(q17_triple)
	for _ in range(10):
		g, h = random_word(q17_triple.ctx, rng, 4), random_word(q17_triple.ctx, rng, 4)
		assert cocycle_check(spec, g, h), (str(g), str(h))


@pytest.mark.slow
def test_v_lambda_cocycle_over_q17_many(q17_triple, rng):
	spec = MultiplierSpec(q17_triple)
	for _ in range(100):
		g, h = random_word(q17_triple.ctx, rng, 6), random_word(q17_triple.ctx, rng, 6)
		assert cocycle_check(spec, g, h), (str(g), str(h))


def test_kappa_at_u_plus_one_has_expected_order(q17_triple):
	spec = MultiplierSpec(q17_triple)
	for v in q17_triple.S2:
		assert kappa_v(spec, u_plus(q17_triple.ctx, 1), v).order == 8


def test_principal_congruence(rational, eta_triple):
	spec = MultiplierSpec(eta_triple)
	g = u_plus(rational, 24) @ u_minus(rational, 24)
	assert principal_congruence_check(spec, g)
	with pytest.raises(ThetaError):
		principal_congruence_check(spec, T(rational))


def test_gamma1_4(rational):
	mats = [
		u_minus(rational, 4),
		T(rational),
		SL2Mat.of(rational, 5, 1, 4, 1),
		SL2Mat.of(rational, -3, 1, -16, 5),
	]
	for g, h in product(mats, repeat=2):
		assert gamma1_4_check(g, h)
	with pytest.raises(ThetaError):
		gamma1_4_check(S(rational), T(rational))


def test_spec_rejects_unnormalized_triples(rational, eta_triple):
	scaled = GTriple(
		rational,
		eta_triple.beta * 4,
		eta_triple.S3,
		FracIdeal.unit(rational) * rational.elem(2),
		(HALF,),
	)
	with pytest.raises(ThetaError):
		MultiplierSpec(scaled)


def test_automorphy_conventions(rational):
	i = mpmath.mpc(0, 1)
	assert automorphy_J(identity(rational), 1, i) == 1
	assert mpmath.almosteq(automorphy_J(minus_identity(rational), 1, i) ** 2, -1)
	assert mpmath.almosteq(automorphy_J(S(rational), 1, i), mpmath.expjpi(mpmath.mpf(1) / 4))
	with pytest.raises(ThetaError):
		automorphy_J(S(rational), 1, -i)


def test_automorphy_squares_to_cz_plus_d(rational):
	z = mpmath.mpc(0.3, 0.7)
	for g in SMALL:
		a, b, c, d = g.embed(1)
		assert mpmath.almosteq(automorphy_J(g, 1, z) ** 2, c * z + d)


def test_weight_factor_and_action(q17):
	z = [mpmath.mpc(0.1, 1.1), mpmath.mpc(-0.2, 0.9)]
	g = u_plus(q17, q17.omega)
	assert mpmath.almosteq(weight_factor(g, z, (HALF, HALF)), 1)
	assert mpmath.almosteq(act(g, 2, z[1]), z[1] + q17.omega.to_mpf(2))


def test_genuine_characters(rational):
	two, = primes_above(rational, 2)
	three, = primes_above(rational, 3)
	five, = primes_above(rational, 5)
	q2 = genuine_character_table(rational, two)
	assert sorted(r.exponent for r in q2) == [Fraction(u, 8) for u in (1, 3, 5, 7)]
	assert [r.exponent for r in genuine_character_table(rational, three)] == [0, Fraction(1, 3), Fraction(2, 3)]
	assert genuine_character_table(rational, five) == [UnitRoot.one()]


def test_genuine_characters_over_q793(q793):
	for v in two_places(q793):
		assert len({r.order for r in genuine_character_table(q793, v)}) == 1
	for v in t3_places(q793):
		assert len(genuine_character_table(q793, v)) == 3


@pytest.mark.slow
@pytest.mark.parametrize("weights", [(HALF, HALF), (HALF, THREE_HALVES)])
def test_v_lambda_cocycle_over_q793(q793, rng, weights):
	spec = MultiplierSpec(construct_triple(q793, weights))
	for _ in range(100):
		g, h = random_word(q793, rng, 6), random_word(q793, rng, 6)
		assert cocycle_check(spec, g, h), (str(g), str(h))
