from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from sympy import factorint

from arith.quadelem import QuadElem, RATIONAL, omega_polynomial
from utils.errors import NoMultiplierSystem, ThetaError


@dataclass(frozen=True)
class FieldCtx:
	"""Q (D == 1) or the real quadratic field Q(sqrt D) with D square-free."""
	D: int

	def __post_init__(self):
		if self.D < 1:
			raise ThetaError(f"D must be a positive square-free integer, got {self.D}")
		if self.D > 1 and any(e > 1 for e in factorint(self.D).values()):
			raise ThetaError(f"D={self.D} is not square-free")

	@classmethod
	def rational(cls) -> "FieldCtx":
		return cls(RATIONAL)

	@classmethod
	def parse(cls, text: str) -> "FieldCtx":
		if str(text).strip().lower() in ("rational", "q", "1"):
			return cls.rational()
		return cls(int(text))

	@property
	def is_rational(self) -> bool:
		return self.D == RATIONAL

	@property
	def degree(self) -> int:
		return 1 if self.is_rational else 2

	@property
	def disc(self) -> int:
		if self.is_rational:
			return 1
		return self.D if self.D % 4 == 1 else 4 * self.D

	@property
	def omega_poly(self) -> Tuple[int, int]:
		return omega_polynomial(self.D)

	@property
	def real_places(self) -> Tuple[int, ...]:
		return (1,) if self.is_rational else (1, 2)

	def elem(self, x: Union[int, Fraction, QuadElem], y: Union[int, Fraction] = 0) -> QuadElem:
		if isinstance(x, QuadElem):
			return x
		return QuadElem(Fraction(x), Fraction(y), self.D)

	def from_omega(self, X, Y=0) -> QuadElem:
		return QuadElem.from_omega(X, Y, self.D)

	@property
	def one(self) -> QuadElem:
		return self.elem(1)

	@property
	def zero(self) -> QuadElem:
		return self.elem(0)

	@property
	def omega(self) -> QuadElem:
		if self.is_rational:
			raise ThetaError("the rationals have no omega")
		return self.from_omega(0, 1)

	@property
	def sqrt_D(self) -> QuadElem:
		return self.elem(0, 1)

	def require_two_split(self):
		"""A half-integral weight multiplier needs 2 to split completely."""
		if not self.is_rational and self.D % 8 != 1:
			raise NoMultiplierSystem(f"2 does not split completely in Q(sqrt {self.D})")

	def __str__(self):
		return "Q" if self.is_rational else f"Q(sqrt {self.D})"
