from dataclasses import dataclass
from typing import List, Tuple

from arith.quadelem import QuadElem
from quadfield.field import FieldCtx
from quadfield.places import PrimePlace, valuation
from quadfield.units import fundamental_unit
from utils.errors import ThetaError


@dataclass(frozen=True)
class SL2Mat:
	"""(a b; c d) with entries in F and determinant exactly 1."""
	a: QuadElem
	b: QuadElem
	c: QuadElem
	d: QuadElem

	def __post_init__(self):
		if self.a * self.d - self.b * self.c != 1:
			raise ThetaError(f"matrix {self} does not have determinant 1")

	@classmethod
	def of(cls, ctx: FieldCtx, a, b, c, d) -> "SL2Mat":
		return cls(ctx.elem(a), ctx.elem(b), ctx.elem(c), ctx.elem(d))

	@property
	def D(self) -> int:
		return self.a.D

	@property
	def ctx(self) -> FieldCtx:
		return FieldCtx(self.D)

	def entries(self) -> Tuple[QuadElem, QuadElem, QuadElem, QuadElem]:
		return self.a, self.b, self.c, self.d

	def __matmul__(self, other: "SL2Mat") -> "SL2Mat":
		return SL2Mat(
			self.a * other.a + self.b * other.c,
			self.a * other.b + self.b * other.d,
			self.c * other.a + self.d * other.c,
			self.c * other.b + self.d * other.d,
		)

	def inverse(self) -> "SL2Mat":
		return SL2Mat(self.d, -self.b, -self.c, self.a)

	def x(self) -> QuadElem:
		"""c if c != 0, else d."""
		return self.c if self.c else self.d

	def is_integral(self) -> bool:
		return all(e.is_integral() for e in self.entries())

	def is_integral_at(self, v: PrimePlace) -> bool:
		return all(not e or valuation(e, v) >= 0 for e in self.entries())

	def is_identity(self) -> bool:
		return self == identity(self.ctx)

	def embed(self, place: int) -> Tuple:
		"""Entries at a real place, as mpmath reals under the caller's precision."""
		return tuple(e.to_mpf(place) for e in self.entries())

	def as_dict(self):
		return {name: {"x": str(e.x), "y": str(e.y)} for name, e in zip("abcd", self.entries())}

	def __str__(self):
		return f"({self.a} {self.b}; {self.c} {self.d})"


def identity(ctx: FieldCtx) -> SL2Mat:
	return SL2Mat.of(ctx, 1, 0, 0, 1)


def minus_identity(ctx: FieldCtx) -> SL2Mat:
	return SL2Mat.of(ctx, -1, 0, 0, -1)


def u_plus(ctx: FieldCtx, t) -> SL2Mat:
	return SL2Mat.of(ctx, 1, t, 0, 1)


def u_minus(ctx: FieldCtx, t) -> SL2Mat:
	return SL2Mat.of(ctx, 1, 0, t, 1)


def diag(ctx: FieldCtx, e: QuadElem) -> SL2Mat:
	e = ctx.elem(e)
	return SL2Mat(e, ctx.zero, ctx.zero, e.inverse())


def S(ctx: FieldCtx) -> SL2Mat:
	return SL2Mat.of(ctx, 0, -1, 1, 0)


def T(ctx: FieldCtx) -> SL2Mat:
	return u_plus(ctx, 1)


def generators(ctx: FieldCtx) -> List[SL2Mat]:
	"""u+(+-1), u-(+-1), u+(+-omega), u-(+-omega), diag(eps)^+-1 and -1."""
	gens = [u_plus(ctx, s) for s in (1, -1)] + [u_minus(ctx, s) for s in (1, -1)]
	if not ctx.is_rational:
		omega = ctx.omega
		gens += [u_plus(ctx, omega), u_plus(ctx, -omega), u_minus(ctx, omega), u_minus(ctx, -omega)]
		eps, _ = fundamental_unit(ctx)
		gens += [diag(ctx, eps), diag(ctx, eps.inverse())]
	gens.append(minus_identity(ctx))
	return gens


def random_word(ctx: FieldCtx, rng, max_length: int, min_length: int = 1) -> SL2Mat:
	"""Product of between min_length and max_length generators, drawn with a numpy Generator."""
	if not 0 <= min_length <= max_length:
		raise ThetaError(f"bad word length range [{min_length}, {max_length}]")
	gens = generators(ctx)
	length = int(rng.integers(min_length, max_length + 1))
	g = identity(ctx)
	for i in rng.integers(0, len(gens), size=length):
		g = g @ gens[int(i)]
	return g


def small_matrices(bound: int) -> List[SL2Mat]:
	"""Every element of SL2(Z) with entries bounded by `bound` in absolute value."""
	ctx = FieldCtx.rational()
	result = []
	for a in range(-bound, bound + 1):
		for b in range(-bound, bound + 1):
			for c in range(-bound, bound + 1):
				if a == 0:
					if b * c == -1:
						result.extend(SL2Mat.of(ctx, a, b, c, d) for d in range(-bound, bound + 1))
					continue
				if (1 + b * c) % a == 0:
					d = (1 + b * c) // a
					if abs(d) <= bound:
						result.append(SL2Mat.of(ctx, a, b, c, d))
	return result
