import io
import json
from fractions import Fraction

import mpmath
import pytest

from configuration.config_system import config
from existence.construct import construct_for_case, construct_triple
from existence.criteria import C2
from localsymbols.sl2 import S, T, u_plus
from quadfield.ideals import FracIdeal
from quadfield.places import primes_above
from quadfield.triple import HALF, THREE_HALVES, GTriple, normalize_triple
from theta.eta import eta, eta_cubed, eta_cubed_jacobi
from theta.lattice import WeightedLattice
from theta.series import evaluate, export_jsonl, finite_part, local_factor, q_expansion
from theta.verify import is_well_conditioned, transform_suite, verify_transform
from utils.errors import BoundExceeded, ThetaError


def test_local_factor_over_q(rational, eta_triple):
	two, = primes_above(rational, 2)
	three, = primes_above(rational, 3)
	five = rational.elem(5)
	assert local_factor(eta_triple, five, two) == 1
	assert local_factor(eta_triple, five, three) == -1
	assert local_factor(eta_triple, rational.elem(6), two) == 0
	assert local_factor(eta_triple, rational.elem(0), two) == 0
	with pytest.raises(ThetaError):
		local_factor(eta_triple, five, primes_above(rational, 5)[0])


def test_finite_part_is_chi12(rational, eta_triple):
	chi12 = {1: 1, 5: -1, 7: -1, 11: 1}
	for m in range(1, 40):
		assert finite_part(eta_triple, rational.elem(m)) == chi12.get(m % 12, 0)


def test_finite_part_parity(q17_triple):
	ctx = q17_triple.ctx
	sign = (-1) ** (len(q17_triple.S2) + len(q17_triple.S3))
	for x in range(-4, 5):
		for y in range(-4, 5):
			xi = ctx.from_omega(x, y)
			assert finite_part(q17_triple, -xi) == sign * finite_part(q17_triple, xi)


def test_eta_expansion(eta_triple):
	expansion = q_expansion(eta_triple, 5)
	assert [e.xi for e in expansion.entries] == [1, 5, 7]
	assert [e.sign for e in expansion.entries] == [1, -1, -1]
	assert [e.coeff for e in expansion.entries] == [2.0, -2.0, -2.0]
	assert expansion.entries[0].nu == Fraction(1, 24)


def test_eta_cubed_expansion(eta3_triple):
	expansion = q_expansion(eta3_triple, 5)
	assert [e.xi for e in expansion.entries] == [1, 3, 5]
	assert [e.coeff for e in expansion.entries] == [2.0, -6.0, 10.0]


def test_small_bound_gives_no_terms(eta_triple):
	assert q_expansion(eta_triple, Fraction(1, 100)).entries == []


def test_quadratic_expansion_is_supported_on_totally_positive(q17_triple):
	expansion = q_expansion(q17_triple, 20)
	assert expansion.entries
	for entry in expansion.entries:
		assert entry.nu.is_totally_positive()
		assert entry.nu == q17_triple.beta * entry.xi * entry.xi
		assert entry.trace <= 20
		assert entry.coeff != 0


def test_export_jsonl(eta_triple):
	buffer = io.StringIO()
	export_jsonl(q_expansion(eta_triple, 5), buffer)
	lines = buffer.getvalue().splitlines()
	assert len(lines) == 3
	first = json.loads(lines[0])
	assert first == {
		"nu": {"x": "1/24", "y": "0"},
		"trace": pytest.approx(1 / 24),
		"xi": {"x": "1", "y": "0"},
		"sign": 1,
		"coeff": 2.0,
	}


def test_lattice_enumeration_is_complete(q17):
	lattice = WeightedLattice(FracIdeal.unit(q17), [1, 2])
	found = {(x.x, x.y) for x in lattice.short_vectors(30) if lattice.form(x) <= 30}
	a, b = FracIdeal.unit(q17).zbasis()
	brute = set()
	for i in range(-40, 41):
		for j in range(-40, 41):
			x = a * i + b * j
			if lattice.form(x) <= 30:
				brute.add((x.x, x.y))
	assert found == brute


def test_eta_functional_equations():
	i = mpmath.mpc(0, 1)
	assert mpmath.almosteq(eta(i + 1), mpmath.expjpi(mpmath.mpf(1) / 12) * eta(i), 1e-14)
	z = 2 * i
	assert mpmath.almosteq(eta(-1 / z), mpmath.sqrt(-i * z) * eta(z), 1e-14)
	assert abs(eta(i).imag) < 1e-12
	assert eta(i).real > 0


def test_eta_cubed_matches_jacobi_theta():
	for z in (mpmath.mpc(0.3, 0.7), mpmath.mpc(-0.4, 1.2)):
		assert mpmath.almosteq(eta_cubed(z), eta_cubed_jacobi(z), 1e-14)


def test_eta_rejects_lower_half_plane():
	with pytest.raises(ThetaError):
		eta(mpmath.mpc(0, -1))


def test_theta_is_twice_eta(eta_triple):
	i = mpmath.mpc(0, 1)
	assert abs(evaluate(eta_triple, [i]) - 2 * eta(i)) < 1e-9


def test_theta_is_twice_eta_cubed(eta3_triple):
	z = mpmath.mpc(0.3, 0.7)
	assert abs(evaluate(eta3_triple, [z]) - 2 * eta_cubed(z)) < 1e-9


def _rel_error(value, expected):
	return abs(value - expected) / abs(expected)


def test_theta_matches_eta_at_random_points(eta_triple, eta3_triple, rng):
	for _ in range(20):
		z = mpmath.mpc(rng.uniform(-0.5, 0.5), rng.uniform(0.3, 3))
		assert _rel_error(evaluate(eta_triple, [z]), 2 * eta(z)) < 1e-9, z
		assert _rel_error(evaluate(eta3_triple, [z]), 2 * eta_cubed(z)) < 1e-9, z


def test_evaluate_tolerances_agree(q17_triple):
	z = [mpmath.mpc(0.1, 0.8), mpmath.mpc(-0.3, 1.1)]
	loose = evaluate(q17_triple, z, 1e-6)
	tight = evaluate(q17_triple, z, 1e-12)
	assert abs(loose - tight) < 1e-6


def test_evaluate_large_imaginary_part(eta_triple):
	z = mpmath.mpc(0, 6)
	leading = 2 * mpmath.exp(2j * mpmath.pi * z / 24)
	assert mpmath.almosteq(evaluate(eta_triple, [z]), leading, 1e-10)


def test_evaluate_tolerance_is_relative(eta_triple):
	z = mpmath.mpc(0.1, 40)
	assert _rel_error(evaluate(eta_triple, [z], 1e-6), 2 * eta(z)) < 1e-6
	# below the tolerance only an absolute bound is possible
	assert abs(evaluate(eta_triple, [mpmath.mpc(0, 400)], 1e-6)) < 1e-40


def test_evaluate_rejects_lower_half_plane(eta_triple):
	with pytest.raises(ThetaError):
		evaluate(eta_triple, [mpmath.mpc(0, -1)])


def test_verify_t_and_s(rational, eta_triple):
	i = mpmath.mpc(0, 1)
	assert verify_transform(eta_triple, T(rational), [i], 1e-9).ok
	assert verify_transform(eta_triple, S(rational), [i], 1e-9).ok


def test_verify_translation_over_q17(q17_triple):
	g = u_plus(q17_triple.ctx, q17_triple.ctx.omega)
	report = verify_transform(q17_triple, g, [mpmath.mpc(0.2, 0.9), mpmath.mpc(-0.1, 1.2)], 1e-6)
	assert report.ok, report.rel_error


def test_well_conditioned(rational):
	assert is_well_conditioned(S(rational), 1)
	assert not is_well_conditioned(u_plus(rational, 1) @ S(rational) @ u_plus(rational, 50) @ S(rational), 10)


def test_rational_suite(eta_triple):
	summary = transform_suite(eta_triple, words=5, points=2, seed=3)
	assert summary.ok
	assert summary.words_tested == 5


def test_suite_redraws_badly_conditioned_words(monkeypatch, eta_triple):
	monkeypatch.setitem(config._values, "max_denominator", 1)
	summary = transform_suite(eta_triple, words=4, points=1, seed=5)
	assert summary.ok
	assert summary.words_tested == 4


def test_suite_gives_up_after_max_word_draws(monkeypatch, eta_triple):
	monkeypatch.setitem(config._values, "max_word_draws", 3)
	with pytest.raises(BoundExceeded):
		transform_suite(eta_triple, words=5, points=1, seed=5)


def test_suite_is_deterministic(eta3_triple):
	a = transform_suite(eta3_triple, words=3, points=1, seed=11).as_dict()
	b = transform_suite(eta3_triple, words=3, points=1, seed=11).as_dict()
	assert a == b


@pytest.mark.slow
@pytest.mark.parametrize("name", ["eta_triple", "q17_triple"])
def test_transform_suite(request, name):
	summary = transform_suite(request.getfixturevalue(name), words=50, seed=0)
	assert summary.ok, summary.max_rel_error
	assert summary.words_tested == 50


@pytest.mark.slow
def test_transform_suite_q793(q793):
	t = construct_triple(q793, (HALF, THREE_HALVES))
	summary = transform_suite(t, words=50, seed=0)
	assert summary.ok, summary.max_rel_error
	assert summary.words_tested == 50


def test_theta_needs_a_normalized_triple(q17_triple):
	ctx = q17_triple.ctx
	gamma = ctx.from_omega(2, 1)
	scaled = GTriple(ctx, gamma * gamma * q17_triple.beta, q17_triple.S3, q17_triple.ideal * gamma, q17_triple.weights)
	assert q17_triple.is_normalized
	assert not scaled.is_normalized
	with pytest.raises(ThetaError):
		q_expansion(scaled, 4)
	with pytest.raises(ThetaError):
		evaluate(scaled, [mpmath.mpc(0, 1), mpmath.mpc(0, 1)])
	with pytest.raises(ThetaError):
		local_factor(scaled, ctx.one, q17_triple.S2[0])
	assert normalize_triple(scaled).is_normalized


def test_theta_rejects_the_raw_793_triple(q793):
	raw = construct_for_case(q793, (HALF, THREE_HALVES), C2)
	assert not raw.is_normalized
	with pytest.raises(ThetaError):
		q_expansion(raw, 2)
	assert q_expansion(normalize_triple(raw), 2).triple.is_normalized
