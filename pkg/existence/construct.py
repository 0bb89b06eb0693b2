from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import mpmath

from arith.quadelem import QuadElem
from classgroup.group import narrow_class_group, theorem2_check
from configuration.config_system import config
from existence.criteria import C1, C2, C3, ExistenceReport, quadratic_criteria, representations
from quadfield.field import FieldCtx
from quadfield.ideals import FracIdeal, different, ideal_sqrt, prime_ideal, principal
from quadfield.places import PrimePlace, t3_places, two_places
from quadfield.triple import GTriple, check_weights, infinite_s, normalize_triple
from quadfield.units import fundamental_unit, principal_generator, totally_positive_unit, tp_generator, unit_index
from utils.errors import ThetaError
from utils.logger import get_logger, log_performance

logger = get_logger("Existence")


def special_ideal(ctx: FieldCtx, S3: Sequence[PrimePlace]) -> FracIdeal:
	"""d * prod_{v in S3} p_v."""
	result = different(ctx)
	for v in S3:
		result = result * prime_ideal(v)
	return result


def is_in_G(t: GTriple) -> bool:
	"""
	(8 beta) d prod_{S3} p_v = a^2 with beta totally positive, S3 inside T3 and
	|S2| + |S3| + |S_inf| even.
	"""
	if not t.beta or not t.beta.is_totally_positive():
		return False
	T3 = set(t.T3)
	if any(v not in T3 for v in t.S3):
		return False
	if len(set(t.S3)) != len(t.S3):
		return False
	if not t.parity_ok():
		return False
	lhs = principal(t.ctx, t.beta * 8) * special_ideal(t.ctx, t.S3)
	return lhs == t.ideal * t.ideal


def admissible_s3(ctx: FieldCtx, weights) -> List[Tuple[PrimePlace, ...]]:
	"""Subsets of T3 satisfying the parity condition, smallest first."""
	weights = check_weights(weights, ctx)
	fixed = len(two_places(ctx)) + len(infinite_s(weights))
	T3 = t3_places(ctx)
	return [
		S3
		for size in range(len(T3) + 1)
		for S3 in combinations(T3, size)
		if (fixed + size) % 2 == 0
	]


def _rational_triple(ctx: FieldCtx, weights) -> GTriple:
	"""(1/24, {3}, Z) in weight 1/2 and (1/8, {}, Z) in weight 3/2."""
	if infinite_s(weights):
		return GTriple(ctx, ctx.elem(Fraction(1, 8)), (), FracIdeal.unit(ctx), weights)
	return GTriple(ctx, ctx.elem(Fraction(1, 24)), tuple(t3_places(ctx)), FracIdeal.unit(ctx), weights)


def _rho(ctx: FieldCtx, k: int) -> QuadElem:
	"""rho = (v + sqrt D)/2 from D = k u^2 + v^2 with v odd and the smallest such v."""
	reps = [(u, v) for u, v in representations(ctx.D, k) if u > 0 and v % 2 == 1]
	if not reps:
		raise ThetaError(f"{ctx.D} has no representation as {k}u^2 + v^2 with v odd")
	u, v = min(reps, key=lambda r: r[1])
	logger.debug(f"{ctx.D} = {k}*{u}^2 + {v}^2")
	return ctx.elem(Fraction(v, 2), Fraction(1, 2))


def _odd_t3(ctx: FieldCtx, x: QuadElem) -> Tuple[PrimePlace, ...]:
	ideal = principal(ctx, x)
	return tuple(v for v in t3_places(ctx) if ideal.ord_at(v) % 2)


def _triple_from(ctx: FieldCtx, beta8: QuadElem, S3: Sequence[PrimePlace], weights) -> GTriple:
	square = principal(ctx, beta8) * special_ideal(ctx, S3)
	ideal = ideal_sqrt(square)
	if ideal is None:
		raise ThetaError(f"{square} is not the square of an ideal")
	return GTriple(ctx, beta8 / 8, tuple(S3), ideal, weights)


def construct_for_case(ctx: FieldCtx, weights, case: str) -> GTriple:
	"""
	Explicit triple from rho = (v + sqrt D)/2.

	C1: D = u^2 + v^2, 8 beta = rho sqrt D, S3 empty. C2: D = 3u^2 + v^2,
	8 beta = rho sqrt D, S3 the place over 3 dividing rho to odd order. C3:
	8 beta = rho sqrt D / 3 with rho from C1 and S3 = T3.
	"""
	weights = check_weights(weights, ctx)
	if case == C1:
		rho = _rho(ctx, 1)
		beta8, S3 = rho * ctx.sqrt_D, ()
	elif case == C2:
		rho = _rho(ctx, 3)
		beta8, S3 = rho * ctx.sqrt_D, _odd_t3(ctx, rho)
	elif case == C3:
		rho = _rho(ctx, 1)
		beta8, S3 = rho * ctx.sqrt_D / 3, tuple(t3_places(ctx))
	else:
		raise ThetaError(f"unknown case {case!r}")
	return _triple_from(ctx, beta8, S3, weights)


@log_performance("construct_triple")
def construct_triple(ctx: FieldCtx, weights, case: Optional[str] = None) -> Optional[GTriple]:
	"""A normalized triple for the weights, or None when none exists."""
	weights = check_weights(weights, ctx)
	if ctx.is_rational:
		t = _rational_triple(ctx, weights)
	else:
		report = quadratic_criteria(ctx, weights)
		if case is None:
			if not report.exists:
				return None
			case = report.case
		elif not report.criteria.get(case):
			return None
		t = construct_for_case(ctx, weights, case)
	t = normalize_triple(t)
	if not is_in_G(t):
		raise ThetaError(f"constructed triple {t} fails the class identity")
	logger.info(f"Triple over {ctx}: {t}")
	return t


def decide(ctx: FieldCtx, weights, with_witness: bool = True, with_count: bool = False) -> ExistenceReport:
	"""Congruence verdict, optionally with a witness triple and the class count."""
	report = quadratic_criteria(ctx, weights)
	if with_witness and report.exists:
		report.witness = construct_triple(ctx, weights)
	if with_count:
		report.class_count = equiv_classes(ctx, weights)
	return report


@log_performance("equiv_classes")
def equiv_classes(ctx: FieldCtx, weights) -> int:
	"""[E+ : E^2] * sum over admissible S3 of |Sq^-1([d prod p_v])|."""
	ctx.require_two_split()
	g = narrow_class_group(ctx)
	total = 0
	for S3 in admissible_s3(ctx, weights):
		target = g.class_of(special_ideal(ctx, S3))
		total += g.sq_preimage_count(target)
	return unit_index(ctx) * total


def class_witnesses(ctx: FieldCtx, weights) -> List[GTriple]:
	"""One normalized triple per equivalence class."""
	ctx.require_two_split()
	weights = check_weights(weights, ctx)
	g = narrow_class_group(ctx)
	units = [ctx.one]
	if unit_index(ctx) == 2:
		units.append(totally_positive_unit(ctx))
	result = []
	for S3 in admissible_s3(ctx, weights):
		base = special_ideal(ctx, S3)
		for x in g.sq_preimages(g.class_of(base)):
			b = g.class_representative(x)
			sigma = tp_generator(base / (b * b))
			if sigma is None:
				raise ThetaError(f"{base} / {b}^2 is not narrowly principal")
			for eps in units:
				t = normalize_triple(GTriple(ctx, eps / (sigma * 8), S3, b, weights))
				if not is_in_G(t):
					raise ThetaError(f"witness {t} fails the class identity")
				result.append(t)
	return result


def _is_unit_square(mu: QuadElem) -> bool:
	"""Whether a totally positive element is the square of a unit."""
	ctx = FieldCtx(mu.D)
	if ctx.is_rational:
		return mu == 1
	if not mu.is_integral() or abs(mu.norm()) != 1 or not mu.is_totally_positive():
		return False
	eps, norm = fundamental_unit(ctx)
	if norm == -1:
		# every totally positive unit is an even power of eps
		return True
	with mpmath.workdps(config.mp_dps):
		m = int(mpmath.nint(mpmath.log(mu.to_mpf(1)) / mpmath.log(eps.to_mpf(1))))
	return m % 2 == 0 and eps ** m == mu


def triples_equivalent(t1: GTriple, t2: GTriple) -> bool:
	"""Some gamma with beta2 = gamma^2 beta1, a2 = gamma a1 and equal S3."""
	if t1.ctx != t2.ctx or tuple(t1.S3) != tuple(t2.S3):
		return False
	gamma = principal_generator(t2.ideal / t1.ideal)
	if gamma is None:
		return False
	mu = t2.beta / (t1.beta * gamma * gamma)
	return _is_unit_square(mu)


def criteria_agree(ctx: FieldCtx, weights) -> bool:
	"""Congruence verdict equals the class group verdict."""
	return quadratic_criteria(ctx, weights).exists == theorem2_check(narrow_class_group(ctx), weights)["exists"]
