from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from arith.quadelem import QuadElem, embedding_sign
from localsymbols.jacobi import jacobi
from quadfield.field import FieldCtx
from quadfield.places import (
	INERT,
	RATIONAL_PRIME,
	SPLIT,
	PrimePlace,
	primes_above,
	residue_at,
	unit_part,
	valuation,
)
from utils.errors import NoMultiplierSystem, ThetaError

Scalar = Union[int, Fraction, QuadElem]


@dataclass(frozen=True)
class LocalContext:
	"""A place of F: a finite PrimePlace or a real embedding index (1 or 2)."""
	ctx: FieldCtx
	place: Optional[PrimePlace] = None
	real_index: Optional[int] = None

	def __post_init__(self):
		if (self.place is None) == (self.real_index is None):
			raise ThetaError("a local context is either finite or real")
		if self.real_index is not None and self.real_index not in self.ctx.real_places:
			raise ThetaError(f"{self.ctx} has no real place {self.real_index}")

	@classmethod
	def finite(cls, place: PrimePlace) -> "LocalContext":
		return cls(FieldCtx(place.D), place=place)

	@classmethod
	def real(cls, ctx: FieldCtx, index: int) -> "LocalContext":
		return cls(ctx, real_index=index)

	@property
	def is_real(self) -> bool:
		return self.real_index is not None

	@property
	def q(self) -> Optional[int]:
		return None if self.is_real else self.place.q

	@property
	def is_q2(self) -> bool:
		"""The completion is Q_2 itself."""
		return not self.is_real and self.place.p == 2 and self.place.kind in (SPLIT, RATIONAL_PRIME)

	def __str__(self):
		return f"inf_{self.real_index}" if self.is_real else str(self.place)


def all_places(ctx: FieldCtx, primes) -> Tuple[LocalContext, ...]:
	"""Real places followed by every finite place above the given primes."""
	finite = tuple(LocalContext.finite(v) for p in sorted(set(primes)) for v in primes_above(ctx, p))
	return tuple(LocalContext.real(ctx, i) for i in ctx.real_places) + finite


def _unit_residue_char(u: QuadElem, v: PrimePlace) -> int:
	"""Quadratic character of the residue of a v-adic unit, for odd p."""
	if v.kind != INERT:
		return jacobi(residue_at(u, v, 1).value, v.p)
	return _fp2_char(u, v)


def _fp2_char(u: QuadElem, v: PrimePlace) -> int:
	"""u^((p^2-1)/2) in F_p[t]/(t^2 - T t - N0)."""
	p = v.p
	T, N0 = FieldCtx(v.D).omega_poly
	X, Y = u.omega_coords()
	x = (X.numerator * pow(X.denominator, -1, p) % p, Y.numerator * pow(Y.denominator, -1, p) % p)

	def mul(s, t):
		# (s0 + s1 t)(t0 + t1 t) with t^2 = T t + N0
		s0t0 = s[0] * t[0]
		c2 = s[1] * t[1]
		c1 = s[0] * t[1] + s[1] * t[0]
		return ((s0t0 + c2 * N0) % p, (c1 + c2 * T) % p)

	result, base, k = (1, 0), x, (p * p - 1) // 2
	while k:
		if k & 1:
			result = mul(result, base)
		base = mul(base, base)
		k >>= 1
	if result == (1, 0):
		return 1
	if result == (p - 1, 0):
		return -1
	raise ThetaError(f"{u} is not a unit at {v}")


def _eps2(u: int) -> int:
	return ((u - 1) // 2) % 2


def _omega2(u: int) -> int:
	return ((u * u - 1) // 8) % 2


def _two_adic_parts(x: QuadElem, v: PrimePlace) -> Tuple[int, int]:
	"""(alpha, u mod 8) with x = 2^alpha * u in Q_2."""
	alpha = valuation(x, v)
	return alpha, residue_at(x / Fraction(2) ** alpha, v, 3).value


def hilbert(a: Scalar, b: Scalar, lc: LocalContext) -> int:
	"""Quadratic Hilbert symbol <a, b> at the given place."""
	a, b = lc.ctx.elem(a), lc.ctx.elem(b)
	if not a or not b:
		raise ThetaError("Hilbert symbol of zero")

	if lc.is_real:
		negative = embedding_sign(a, lc.real_index) < 0 and embedding_sign(b, lc.real_index) < 0
		return -1 if negative else 1

	v = lc.place
	if v.p == 2:
		if not lc.is_q2:
			raise NoMultiplierSystem(f"Hilbert symbol at the dyadic place {v} is not Q_2")
		alpha, u = _two_adic_parts(a, v)
		beta, w = _two_adic_parts(b, v)
		exponent = _eps2(u) * _eps2(w) + alpha * _omega2(w) + beta * _omega2(u)
		return -1 if exponent % 2 else 1

	alpha, u = unit_part(a, v)
	beta, w = unit_part(b, v)
	result = 1
	if (alpha * beta) % 2 and (v.q - 1) // 2 % 2:
		result = -result
	if beta % 2:
		result *= _unit_residue_char(u, v)
	if alpha % 2:
		result *= _unit_residue_char(w, v)
	return result


def is_local_square(x: Scalar, lc: LocalContext) -> bool:
	x = lc.ctx.elem(x)
	if not x:
		raise ThetaError("zero is not in the multiplicative group")
	if lc.is_real:
		return embedding_sign(x, lc.real_index) > 0
	v = lc.place
	if v.p == 2:
		if not lc.is_q2:
			raise NoMultiplierSystem(f"square classes at {v} are not those of Q_2")
		alpha, u = _two_adic_parts(x, v)
		return alpha % 2 == 0 and u == 1
	alpha, u = unit_part(x, v)
	return alpha % 2 == 0 and _unit_residue_char(u, v) == 1


def min_unit_sq_val(lc: LocalContext) -> int:
	"""min ord(a^2 - 1) over units a with a^2 != 1, by a residue scan."""
	if lc.is_real:
		raise ThetaError("minimum square valuation needs a finite place")
	v = lc.place
	if v.p == 2 and not lc.is_q2:
		raise NoMultiplierSystem(f"dyadic place {v} is not Q_2")
	ctx = lc.ctx
	span = v.p ** 2
	ys = range(span) if not ctx.is_rational else (0,)
	best = None
	for X in range(span):
		for Y in ys:
			a = ctx.from_omega(X, Y)
			if not a or valuation(a, v) != 0:
				continue
			sq = a * a - 1
			if not sq:
				continue
			m = valuation(sq, v)
			if best is None or m < best:
				best = m
				if best == 0:
					return 0
	return best
