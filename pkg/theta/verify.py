from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

import mpmath
import numpy as np

from configuration.config_system import config
from localsymbols.sl2 import SL2Mat, random_word
from multiplier.automorphy import act, weight_factor
from multiplier.systems import MultiplierSpec
from quadfield.triple import GTriple
from theta.series import evaluate
from utils.errors import BoundExceeded
from utils.logger import get_logger

logger = get_logger("Verify")


@dataclass
class TransformReport:
	matrix: SL2Mat
	point: List
	lhs: Any
	rhs: Any
	rel_error: float
	tol: float

	@property
	def ok(self) -> bool:
		return self.rel_error < self.tol

	def as_dict(self) -> Dict[str, Any]:
		return {
			"matrix": self.matrix.as_dict(),
			"point": [str(z) for z in self.point],
			"lhs": [float(self.lhs.real), float(self.lhs.imag)],
			"rhs": [float(self.rhs.real), float(self.rhs.imag)],
			"rel_error": self.rel_error,
			"ok": self.ok,
		}


def verify_transform(t: GTriple, g: SL2Mat, zs: Sequence, tol: Optional[float] = None,
					 spec: Optional[MultiplierSpec] = None) -> TransformReport:
	"""theta(g z) against v(g) prod_i J(iota_i(g), z_i)^(2 w_i) theta(z)."""
	tol = config.default_tol if tol is None else tol
	spec = spec or MultiplierSpec(t)
	with mpmath.workdps(config.mp_dps):
		zs = [mpmath.mpc(z) for z in zs]
		gz = [act(g, i, z) for i, z in enumerate(zs, 1)]
		lhs = evaluate(t, gz)
		rhs = spec(g).to_mpc() * weight_factor(g, zs, t.weights) * evaluate(t, zs)
		scale = max(abs(lhs), abs(rhs), mpmath.mpf(10) ** (-30))
		rel = float(abs(lhs - rhs) / scale)
	return TransformReport(g, zs, lhs, rhs, rel, tol)


@dataclass
class SuiteSummary:
	max_rel_error: float
	words_tested: int
	words_rejected: int
	failures: List[TransformReport]

	@property
	def ok(self) -> bool:
		return not self.failures

	def as_dict(self) -> Dict[str, Any]:
		return {
			"max_rel_error": self.max_rel_error,
			"words_tested": self.words_tested,
			"words_rejected": self.words_rejected,
			"failures": [r.as_dict() for r in self.failures],
			"ok": self.ok,
		}


def is_well_conditioned(g: SL2Mat, bound: int) -> bool:
	"""Every real embedding of c and d is at most `bound` in absolute value."""
	with mpmath.workdps(config.mp_dps):
		return all(
			abs(e.to_mpf(i)) <= bound
			for e in (g.c, g.d)
			for i in g.ctx.real_places
		)


def random_point(rng: np.random.Generator, n: int) -> List[complex]:
	return [complex(rng.uniform(-0.5, 0.5), rng.uniform(0.7, 1.3)) for _ in range(n)]


def transform_suite(t: GTriple, words: Optional[int] = None, points: Optional[int] = None,
					seed: Optional[int] = None, tol: Optional[float] = None) -> SuiteSummary:
	"""
	`words` well-conditioned random generator words, `points` random points each.

	Words whose bottom row is large at some embedding are redrawn, up to
	max_word_draws draws in total.
	"""
	words = config.transform_words if words is None else words
	points = config.transform_points if points is None else points
	seed = config.default_seed if seed is None else seed
	rng = np.random.default_rng(seed)
	spec = MultiplierSpec(t)
	n = t.ctx.degree
	limit = config.max_word_draws

	worst, tested, rejected, failures = 0.0, 0, 0, []
	while tested < words:
		if tested + rejected >= limit:
			raise BoundExceeded("random word draws", tested + rejected + 1, limit)
		g = random_word(t.ctx, rng, config.word_length)
		if not is_well_conditioned(g, config.max_denominator):
			rejected += 1
			continue
		tested += 1
		for _ in range(points):
			report = verify_transform(t, g, random_point(rng, n), tol, spec)
			worst = max(worst, report.rel_error)
			if not report.ok:
				logger.warning(f"Transformation law off by {report.rel_error:.3e} for {g}")
				failures.append(report)
	logger.info(f"{tested} words tested, {rejected} redrawn, max relative error {worst:.3e}")
	return SuiteSummary(worst, tested, rejected, failures)
