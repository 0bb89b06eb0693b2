import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, TextIO

import mpmath

from arith.quadelem import QuadElem, embedding_sign
from configuration.config_system import config
from quadfield.places import PrimePlace, residue_at, valuation
from quadfield.triple import GTriple
from theta.lattice import WeightedLattice, point_count_bound
from utils.errors import ThetaError
from utils.logger import get_logger, log_performance

logger = get_logger("Theta")


def _require_normalized(t: GTriple):
	if not t.is_normalized:
		raise ThetaError(f"{t} has ord_v a != 0 at a place of S2 or S3; normalize the triple first")


def local_factor(t: GTriple, xi: QuadElem, v: PrimePlace) -> int:
	"""
	f_v(xi): 1 on 1 + 2p_v, -1 on -1 + 2p_v, 0 elsewhere.

	At the places of S2 the completion is Q_2 and the test is xi mod 4; at the
	places of S3 two is a unit, so the test is xi mod p_v.
	"""
	if v in t.S2:
		k, modulus = 2, 4
	elif v in t.S3:
		k, modulus = 1, 3
	else:
		raise ThetaError(f"{v} is not a special place of {t}")
	_require_normalized(t)
	if not xi or valuation(xi, v) != 0:
		return 0
	r = residue_at(xi, v, k).value % modulus
	if r == 1:
		return 1
	if r == modulus - 1:
		return -1
	return 0


def finite_part(t: GTriple, xi: QuadElem) -> int:
	"""Product of the local factors over S2 and S3."""
	result = 1
	for v in t.special_places:
		result *= local_factor(t, xi, v)
		if not result:
			return 0
	return result


def infinite_part(t: GTriple, xi: QuadElem):
	"""prod_{i in S_inf} iota_i(xi)."""
	result = mpmath.mpf(1)
	for i in t.S_inf:
		result *= xi.to_mpf(i)
	return result


@dataclass
class ThetaEntry:
	nu: QuadElem
	xi: QuadElem
	sign: int
	coeff: float

	@property
	def trace(self) -> Fraction:
		return self.nu.trace()

	def as_dict(self) -> Dict[str, Any]:
		return {
			"nu": {"x": str(self.nu.x), "y": str(self.nu.y)},
			"trace": float(self.trace),
			"xi": {"x": str(self.xi.x), "y": str(self.xi.y)},
			"sign": self.sign,
			"coeff": self.coeff,
		}


@dataclass
class ThetaExpansion:
	"""Fourier coefficients at nu = beta xi^2 for Tr(nu) <= bound, xi and -xi merged."""
	triple: GTriple
	bound: Fraction
	entries: List[ThetaEntry] = field(default_factory=list)

	def coefficient(self, nu: QuadElem) -> float:
		for entry in self.entries:
			if entry.nu == nu:
				return entry.coeff
		return 0.0

	def rows(self) -> List[List[Any]]:
		return [
			[str(e.nu), str(e.trace), str(e.xi), "+" if e.sign > 0 else "-", f"{e.coeff:.10g}"]
			for e in self.entries
		]


def _entry_key(xi: QuadElem, nu: QuadElem):
	return nu.trace(), nu.x, nu.y, xi.x, xi.y


@log_performance("q_expansion")
def q_expansion(t: GTriple, bound=None) -> ThetaExpansion:
	bound = Fraction(config.default_trace_bound if bound is None else bound)
	_require_normalized(t)
	beta = t.beta
	if not beta.is_totally_positive():
		raise ThetaError(f"beta = {beta} is not totally positive")
	dual = t.ideal.inverse()
	entries = []
	with mpmath.workdps(config.mp_dps):
		lattice = WeightedLattice(dual, [beta.to_mpf(i) for i in t.ctx.real_places])
		# slack for the floating point ellipse; the exact trace test follows
		for xi in lattice.short_vectors(mpmath.mpf(bound.numerator) / bound.denominator + 1):
			if not xi or embedding_sign(xi, 1) < 0:
				continue
			nu = beta * xi * xi
			if nu.trace() > bound:
				continue
			sign = finite_part(t, xi)
			if not sign:
				continue
			coeff = 2 * sign * infinite_part(t, xi)
			entries.append(ThetaEntry(nu, xi, sign, float(coeff)))
	entries.sort(key=lambda e: _entry_key(e.xi, e.nu))
	logger.debug(f"q-expansion of {t} up to trace {bound}: {len(entries)} terms")
	return ThetaExpansion(t, bound, entries)


def export_jsonl(expansion: ThetaExpansion, stream: TextIO):
	"""One JSON object per coefficient."""
	for entry in expansion.entries:
		stream.write(json.dumps(entry.as_dict(), sort_keys=True) + "\n")


def _check_point(zs: Sequence, n: int) -> List:
	zs = [mpmath.mpc(z) for z in zs]
	if len(zs) != n:
		raise ThetaError(f"expected a point with {n} coordinates, got {len(zs)}")
	for z in zs:
		if z.imag <= 0:
			raise ThetaError(f"{z} is not in the upper half plane")
	return zs


def tail_bound(lattice: WeightedLattice, Y, inf_scales: Sequence, n_inf: int):
	"""
	Bound on sum |f(xi)| prod |iota_i(xi)| exp(-2 pi form(xi)) over form(xi) > Y.

	Shell j holds the points with Y + j < form <= Y + j + 1; each term there is
	at most (Y + j + 1)^(n_inf/2) / sqrt(prod scales) times exp(-2 pi (Y + j)).
	"""
	Y = mpmath.mpf(Y)
	scale = mpmath.mpf(1)
	for s in inf_scales:
		scale *= s
	total = mpmath.mpf(0)
	j = 0
	while True:
		R = Y + j + 1
		term = point_count_bound(lattice, R) * R ** (mpmath.mpf(n_inf) / 2) / mpmath.sqrt(scale)
		term *= mpmath.exp(-2 * mpmath.pi * (Y + j))
		total += term
		j += 1
		if j > 2 and term < total * mpmath.mpf(10) ** (-20):
			return 2 * total


def _partial_sum(t: GTriple, lattice: WeightedLattice, Y, zs: Sequence):
	ctx, beta = t.ctx, t.beta
	total = mpmath.mpc(0)
	two_pi_i = 2j * mpmath.pi
	for xi in lattice.short_vectors(Y):
		sign = finite_part(t, xi)
		if not sign:
			continue
		nu = beta * xi * xi
		phase = sum(z * nu.to_mpf(i) for i, z in zip(ctx.real_places, zs))
		total += sign * infinite_part(t, xi) * mpmath.exp(two_pi_i * phase)
	return total


@log_performance("theta_evaluate")
def evaluate(t: GTriple, zs: Sequence, tol: Optional[float] = None):
	"""
	theta(z) as an mpc, with the discarded tail certified below tol * |theta(z)|.

	Values smaller than tol itself are only certified to absolute error tol.
	"""
	tol = config.eval_tol if tol is None else tol
	if tol <= 0:
		raise ThetaError("tolerance must be positive")
	_require_normalized(t)
	ctx, beta = t.ctx, t.beta
	with mpmath.workdps(config.mp_dps):
		zs = _check_point(zs, ctx.degree)
		beta_emb = [beta.to_mpf(i) for i in ctx.real_places]
		weights = [z.imag * b for z, b in zip(zs, beta_emb)]
		lattice = WeightedLattice(t.ideal.inverse(), weights)
		inf_scales = [weights[i - 1] for i in t.S_inf]

		Y, target = mpmath.mpf(1), mpmath.mpf(tol)
		while True:
			while tail_bound(lattice, Y, inf_scales, len(t.S_inf)) >= target:
				Y *= mpmath.mpf(3) / 2
			total = _partial_sum(t, lattice, Y, zs)
			magnitude = abs(total)
			if magnitude <= tol or target <= tol * magnitude:
				break
			# magnitude is only known to within target
			target = tol * magnitude / 2
		logger.debug(f"theta{tuple(zs)} summed over form <= {mpmath.nstr(Y, 6)}")
		return total
