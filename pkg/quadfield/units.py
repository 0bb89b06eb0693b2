from math import isqrt
from typing import Optional, Tuple

import mpmath

from arith.quadelem import QuadElem, embedding_sign
from configuration.config_system import config
from quadfield.field import FieldCtx
from quadfield.ideals import FracIdeal
from utils.cache import cached
from utils.errors import ThetaError
from utils.logger import get_logger

logger = get_logger("Units")


def _floor_quadratic(P: int, Q: int, D: int) -> int:
	"""floor((P + sqrt D) / Q) for non-square D."""
	s = isqrt(D)
	if Q > 0:
		return (P + s) // Q
	return (-P - s - 1) // (-Q)


@cached("fundamental_unit")
def fundamental_unit(ctx: FieldCtx) -> Tuple[QuadElem, int]:
	"""
	Fundamental unit eps > 1 and its norm, from the continued fraction of omega.

	The expansion of omega = (P0 + sqrt D)/Q0 is run until a complete quotient
	equals omega + m for an integer m; with q_n the convergent denominators the
	unit is q_n * (omega + m) + q_{n-1}.
	"""
	if ctx.is_rational:
		return ctx.one, 1
	D = ctx.D
	P0, Q0 = (1, 2) if D % 4 == 1 else (0, 1)
	P, Q = P0, Q0
	q_prev, q_curr = 1, 0
	steps = 0
	while True:
		a = _floor_quadratic(P, Q, D)
		q_prev, q_curr = q_curr, a * q_curr + q_prev
		P = a * Q - P
		Q = (D - P * P) // Q
		steps += 1
		if Q == Q0 and (P - P0) % Q0 == 0:
			m = (P - P0) // Q0
			break
	# q_curr is q_n and q_prev is q_{n-1} at this point
	eps = (ctx.omega + m) * q_curr + q_prev
	norm = int(eps.norm())
	if norm not in (1, -1):
		raise ThetaError(f"continued fraction produced non-unit {eps} of norm {norm}")
	logger.debug(f"Fundamental unit of {ctx}: {eps} (norm {norm}, period {steps})")
	return eps, norm


def unit_index(ctx: FieldCtx) -> int:
	"""[E+ : E^2]: 2 exactly when the fundamental unit has norm 1."""
	if ctx.is_rational:
		return 1
	return 2 if fundamental_unit(ctx)[1] == 1 else 1


def totally_positive_unit(ctx: FieldCtx) -> QuadElem:
	"""Generator of E+ modulo torsion."""
	eps, norm = fundamental_unit(ctx)
	return eps if norm == 1 else eps * eps


class EmbeddedElem:
	"""Exact element with cached real embeddings, for lattice reduction."""
	__slots__ = ("elem", "e1", "e2")

	def __init__(self, elem: QuadElem, e1, e2):
		self.elem, self.e1, self.e2 = elem, e1, e2

	@classmethod
	def of(cls, elem: QuadElem) -> "EmbeddedElem":
		return cls(elem, elem.to_mpf(1), elem.to_mpf(2))

	def __sub__(self, other: "EmbeddedElem") -> "EmbeddedElem":
		return EmbeddedElem(self.elem - other.elem, self.e1 - other.e1, self.e2 - other.e2)

	def __add__(self, other: "EmbeddedElem") -> "EmbeddedElem":
		return EmbeddedElem(self.elem + other.elem, self.e1 + other.e1, self.e2 + other.e2)

	def scaled(self, k: int) -> "EmbeddedElem":
		return EmbeddedElem(self.elem * k, self.e1 * k, self.e2 * k)


def gauss_reduce(b1: EmbeddedElem, b2: EmbeddedElem, w1, w2) -> Tuple[EmbeddedElem, EmbeddedElem]:
	"""Lagrange-Gauss reduction under the form w1*x1^2 + w2*x2^2."""
	def dot(u, v):
		return w1 * u.e1 * v.e1 + w2 * u.e2 * v.e2

	n1, n2 = dot(b1, b1), dot(b2, b2)
	if n2 < n1:
		b1, b2, n1, n2 = b2, b1, n2, n1
	while True:
		mu = int(mpmath.nint(dot(b1, b2) / n1))
		if mu:
			b2 = b2 - b1.scaled(mu)
			n2 = dot(b2, b2)
		if n2 >= n1:
			return b1, b2
		b1, b2, n1, n2 = b2, b1, n2, n1


def principal_generator(ideal: FracIdeal) -> Optional[QuadElem]:
	"""
	Some x with (x) = ideal, or None when the ideal is not principal.

	A generator scaled by units balances its two embeddings somewhere in
	[-log eps, log eps]; at that twist it is a shortest vector of the ideal,
	so scanning twists and testing short vectors for |N(x)| = N(ideal) finds it.
	"""
	ctx = ideal.ctx
	if ctx.is_rational:
		return ctx.elem(ideal.scale)

	target = ideal.norm()
	eps, _ = fundamental_unit(ctx)
	step = config.tp_search_step
	with mpmath.workdps(config.mp_dps):
		L = mpmath.log(eps.to_mpf(1))
		b1, b2 = (EmbeddedElem.of(x) for x in ideal.zbasis())
		count = int(mpmath.ceil(2 * L / step)) + 1
		for i in range(count + 1):
			tau = -L + i * step
			b1, b2 = gauss_reduce(b1, b2, mpmath.exp(tau), mpmath.exp(-tau))
			for cand in (b1.elem, b2.elem, (b1 + b2).elem, (b1 - b2).elem):
				if cand and abs(cand.norm()) == target:
					return cand
	return None


def tp_generator(ideal: FracIdeal) -> Optional[QuadElem]:
	"""A totally positive generator, or None when the ideal is not narrowly principal."""
	g = principal_generator(ideal)
	if g is None:
		return None
	ctx = ideal.ctx
	if ctx.is_rational:
		return g if g.x > 0 else -g
	s1, s2 = embedding_sign(g, 1), embedding_sign(g, 2)
	if s1 == s2:
		return g * s1
	eps, norm = fundamental_unit(ctx)
	if norm == -1:
		g = g * eps
		return g * embedding_sign(g, 1)
	return None


def is_narrowly_principal(ideal: FracIdeal) -> bool:
	return tp_generator(ideal) is not None
