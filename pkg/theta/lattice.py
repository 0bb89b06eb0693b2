from typing import Iterator, Sequence

import mpmath

from arith.quadelem import QuadElem
from configuration.config_system import config
from quadfield.ideals import FracIdeal
from quadfield.units import EmbeddedElem, gauss_reduce
from utils.errors import BoundExceeded, ThetaError


class WeightedLattice:
	"""
	A fractional ideal with the positive definite form sum_i w_i * iota_i(x)^2.

	The basis is Gauss-reduced for that form once; `short_vectors` then walks
	the ellipse row by row (Fincke-Pohst in rank two).
	"""

	def __init__(self, ideal: FracIdeal, weights: Sequence):
		self.ideal = ideal
		self.weights = [mpmath.mpf(w) for w in weights]
		if any(w <= 0 for w in self.weights):
			raise ThetaError("lattice weights must be positive")
		if len(self.weights) != ideal.ctx.degree:
			raise ThetaError(f"expected {ideal.ctx.degree} weights, got {len(self.weights)}")
		basis = ideal.zbasis()
		if len(basis) == 1:
			self.basis = [basis[0]]
			self.gram = [[self.weights[0] * basis[0].to_mpf(1) ** 2]]
		else:
			b1, b2 = gauss_reduce(EmbeddedElem.of(basis[0]), EmbeddedElem.of(basis[1]), *self.weights)
			self.basis = [b1.elem, b2.elem]
			vecs = [b1, b2]
			self.gram = [[self.dot(u, v) for v in vecs] for u in vecs]

	def dot(self, u: EmbeddedElem, v: EmbeddedElem):
		w1, w2 = self.weights
		return w1 * u.e1 * v.e1 + w2 * u.e2 * v.e2

	def form(self, x: QuadElem):
		return sum(w * x.to_mpf(i) ** 2 for i, w in enumerate(self.weights, 1))

	@property
	def min_eigenvalue(self):
		"""Smallest eigenvalue of the Gram matrix: form(x b) >= lambda |x|^2."""
		if len(self.gram) == 1:
			return self.gram[0][0]
		(A, B), (_, C) = self.gram
		return (A + C) / 2 - mpmath.sqrt(((A - C) / 2) ** 2 + B * B)

	def short_vectors(self, bound) -> Iterator[QuadElem]:
		"""Every x in the ideal with form(x) <= bound (and possibly a few just above)."""
		bound = mpmath.mpf(bound)
		limit = config.max_lattice_points
		count = 0
		for x in self._candidates(bound):
			count += 1
			if count > limit:
				raise BoundExceeded("lattice points", count, limit)
			yield x

	def _candidates(self, bound) -> Iterator[QuadElem]:
		if len(self.basis) == 1:
			(A,), = self.gram
			r = int(mpmath.floor(mpmath.sqrt(bound / A))) + 1
			for k in range(-r, r + 1):
				yield self.basis[0] * k
			return
		(A, B), (_, C) = self.gram
		b1, b2 = self.basis
		schur = C - B * B / A
		y_max = int(mpmath.floor(mpmath.sqrt(bound / schur))) + 1
		for y in range(-y_max, y_max + 1):
			rest = bound - schur * y * y
			if rest < 0:
				continue
			center = -B * y / A
			r = mpmath.sqrt(rest / A)
			for x in range(int(mpmath.floor(center - r)), int(mpmath.ceil(center + r)) + 1):
				yield b1 * x + b2 * y


def point_count_bound(lattice: WeightedLattice, R) -> int:
	"""Upper bound for #{x : form(x) <= R} from the coordinate box."""
	r = mpmath.sqrt(mpmath.mpf(R) / lattice.min_eigenvalue)
	return int((2 * mpmath.floor(r) + 1) ** len(lattice.basis))

