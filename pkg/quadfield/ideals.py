from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List, Tuple

from sympy import factorint, isprime

from arith.quadelem import QuadElem, RATIONAL
from configuration.config_system import config
from quadfield.field import FieldCtx
from quadfield.places import INERT, RATIONAL_PRIME, PrimePlace, primes_above, valuation
from utils.errors import NormTooLarge, ThetaError


def _egcd(a: int, b: int) -> Tuple[int, int, int]:
	"""(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
	s0, s1, t0, t1 = 1, 0, 0, 1
	while b:
		q, a, b = a // b, b, a % b
		s0, s1 = s1, s0 - q * s1
		t0, t1 = t1, t0 - q * t1
	if a < 0:
		return -a, -s0, -t0
	return a, s0, t0


def _rational_gcd(values: Iterable[Fraction]) -> Fraction:
	num, den = 0, 1
	for value in values:
		value = Fraction(value)
		if value:
			num = gcd(num, value.numerator)
			den = lcm(den, value.denominator)
	return Fraction(num, den)


@dataclass(frozen=True)
class FracIdeal:
	"""
	Fractional ideal scale * (a*Z + (b + c*omega)*Z) of the ring of integers.

	The integral part is primitive (gcd(a, b, c) = 1) with c | a, c | b and
	0 <= b < a, so equal ideals have equal fields. Over Q the triple is (1, 0, 0)
	and the ideal is scale*Z.
	"""
	D: int
	scale: Fraction
	a: int
	b: int
	c: int

	@classmethod
	def from_zbasis(cls, D: int, gens: Iterable[QuadElem]) -> "FracIdeal":
		"""Ideal spanned over Z by `gens` (which must already be an O-module)."""
		gens = [g for g in gens if g]
		if not gens:
			raise ThetaError("the zero ideal is not a fractional ideal")
		if D == RATIONAL:
			return cls(D, _rational_gcd(g.x for g in gens), 1, 0, 0)

		coords = [g.omega_coords() for g in gens]
		L = lcm(*(lcm(X.denominator, Y.denominator) for X, Y in coords))
		rows = [(int(X * L), int(Y * L)) for X, Y in coords]

		pivot = None
		x_axis = 0
		for x, y in rows:
			if y == 0:
				x_axis = gcd(x_axis, x)
			elif pivot is None:
				pivot = (x, y)
			else:
				px, py = pivot
				g, s, t = _egcd(py, y)
				pivot = (s * px + t * x, g)
				x_axis = gcd(x_axis, (py // g) * x - (y // g) * px)
		if pivot is None or x_axis == 0:
			raise ThetaError("generators do not span a rank two lattice")

		B, C = pivot
		if C < 0:
			B, C = -B, -C
		A = x_axis
		B %= A
		g = gcd(gcd(A, B), C)
		return cls(D, Fraction(g, L), A // g, B // g, C // g)

	@classmethod
	def from_generators(cls, ctx: FieldCtx, gens: Iterable[QuadElem]) -> "FracIdeal":
		"""The O-ideal generated by `gens`."""
		gens = [ctx.elem(g) for g in gens]
		if ctx.is_rational:
			return cls.from_zbasis(ctx.D, gens)
		omega = ctx.omega
		return cls.from_zbasis(ctx.D, gens + [g * omega for g in gens])

	@classmethod
	def unit(cls, ctx: FieldCtx) -> "FracIdeal":
		if ctx.is_rational:
			return cls(ctx.D, Fraction(1), 1, 0, 0)
		return cls(ctx.D, Fraction(1), 1, 0, 1)

	@property
	def ctx(self) -> FieldCtx:
		return FieldCtx(self.D)

	def zbasis(self) -> Tuple[QuadElem, ...]:
		if self.D == RATIONAL:
			return (QuadElem.rational(self.scale),)
		return (
			QuadElem.from_omega(self.scale * self.a, 0, self.D),
			QuadElem.from_omega(self.scale * self.b, self.scale * self.c, self.D),
		)

	def __mul__(self, other: "FracIdeal") -> "FracIdeal":
		if isinstance(other, QuadElem):
			other = principal(self.ctx, other)
		if not isinstance(other, FracIdeal):
			return NotImplemented
		if other.D != self.D:
			raise ThetaError(f"mixed field contexts {self.D} and {other.D}")
		if self.D == RATIONAL:
			return FracIdeal(self.D, self.scale * other.scale, 1, 0, 0)
		return FracIdeal.from_zbasis(self.D, [x * y for x in self.zbasis() for y in other.zbasis()])

	__rmul__ = __mul__

	def __truediv__(self, other: "FracIdeal") -> "FracIdeal":
		if isinstance(other, QuadElem):
			other = principal(self.ctx, other)
		return self * other.inverse()

	def __pow__(self, k: int) -> "FracIdeal":
		return self.power(k)

	def conjugate(self) -> "FracIdeal":
		if self.D == RATIONAL:
			return self
		return FracIdeal.from_zbasis(self.D, [x.conjugate() for x in self.zbasis()])

	def norm(self) -> Fraction:
		if self.D == RATIONAL:
			return self.scale
		return self.scale ** 2 * self.a * self.c

	def inverse(self) -> "FracIdeal":
		if self.D == RATIONAL:
			return FracIdeal(self.D, 1 / self.scale, 1, 0, 0)
		conj, n = self.conjugate(), self.norm()
		return FracIdeal(conj.D, conj.scale / n, conj.a, conj.b, conj.c)

	def power(self, k: int) -> "FracIdeal":
		base = self if k >= 0 else self.inverse()
		result = FracIdeal.unit(self.ctx)
		for _ in range(abs(k)):
			result = result * base
		return result

	def is_integral(self) -> bool:
		return all(x.is_integral() for x in self.zbasis())

	def is_unit(self) -> bool:
		return self == FracIdeal.unit(self.ctx)

	def contains(self, x: QuadElem) -> bool:
		if not x:
			return True
		if self.D == RATIONAL:
			return (x.x / self.scale).denominator == 1
		X, Y = (x / self.scale).omega_coords()
		if X.denominator != 1 or Y.denominator != 1 or Y % self.c:
			return False
		k = Y // self.c
		return (X - k * self.b) % self.a == 0

	def ord_at(self, v: PrimePlace) -> int:
		return min(valuation(x, v) for x in self.zbasis())

	def support_primes(self) -> List[int]:
		"""Rational primes below every place where the ideal has nonzero order."""
		values = [self.scale.numerator, self.scale.denominator]
		if self.D != RATIONAL:
			values.append(self.a * self.c)
		primes = set()
		for value in values:
			primes.update(_trial_factor(abs(value)))
		return sorted(primes)

	def factor(self) -> Dict[PrimePlace, int]:
		ctx = self.ctx
		result = {}
		for p in self.support_primes():
			for v in primes_above(ctx, p):
				e = self.ord_at(v)
				if e:
					result[v] = e
		return result

	def __str__(self):
		if self.D == RATIONAL:
			return f"({self.scale})"
		return f"{self.scale}*[{self.a}, {self.b}+{self.c}w]"


def _trial_factor(n: int) -> List[int]:
	if n <= 1:
		return []
	bound = config.factor_trial_bound
	factors = factorint(n, limit=bound)
	for q in factors:
		if q > bound and not isprime(q):
			raise NormTooLarge(n, bound)
	return list(factors)


def principal(ctx: FieldCtx, x: QuadElem) -> FracIdeal:
	return FracIdeal.from_generators(ctx, [x])


def prime_ideal(v: PrimePlace) -> FracIdeal:
	if v.kind == RATIONAL_PRIME:
		return FracIdeal(v.D, Fraction(v.p), 1, 0, 0)
	if v.kind == INERT:
		return FracIdeal(v.D, Fraction(v.p), 1, 0, 1)
	a, b, c = v.hnf
	return FracIdeal(v.D, Fraction(1), a, b, c)


def from_factorization(ctx: FieldCtx, factors: Dict[PrimePlace, int]) -> FracIdeal:
	result = FracIdeal.unit(ctx)
	for v, e in sorted(factors.items()):
		result = result * prime_ideal(v).power(e)
	return result


def different(ctx: FieldCtx) -> FracIdeal:
	"""(sqrt d_K) for quadratic fields, the unit ideal over Q."""
	if ctx.is_rational:
		return FracIdeal.unit(ctx)
	generator = ctx.sqrt_D if ctx.D % 4 == 1 else 2 * ctx.sqrt_D
	return principal(ctx, generator)


def ideal_sqrt(ideal: FracIdeal):
	"""The ideal whose square is `ideal`, or None when some prime exponent is odd."""
	factors = ideal.factor()
	if any(e % 2 for e in factors.values()):
		return None
	return from_factorization(ideal.ctx, {v: e // 2 for v, e in factors.items()})


def ideal_ops(a: FracIdeal, b, op: str):
	if op == "mul":
		return a * b
	if op == "div":
		return a / b
	if op == "norm":
		return a.norm()
	if op == "ord_at":
		return a.ord_at(b)
	if op == "factor":
		return sorted(a.factor().items())
	raise ThetaError(f"unknown ideal operation {op!r}")
