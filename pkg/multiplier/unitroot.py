from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import mpmath

from utils.errors import ThetaError


@dataclass(frozen=True)
class UnitRoot:
	"""Exact root of unity e(r) = exp(2 pi i r), r stored in [0, 1)."""
	exponent: Fraction

	def __post_init__(self):
		object.__setattr__(self, "exponent", Fraction(self.exponent) % 1)

	@classmethod
	def one(cls) -> "UnitRoot":
		return cls(Fraction(0))

	@classmethod
	def from_sign(cls, sign: int) -> "UnitRoot":
		if sign not in (1, -1):
			raise ThetaError(f"{sign} is not a sign")
		return cls(Fraction(0) if sign == 1 else Fraction(1, 2))

	def __mul__(self, other: Union["UnitRoot", int]) -> "UnitRoot":
		if isinstance(other, int):
			other = UnitRoot.from_sign(other)
		if not isinstance(other, UnitRoot):
			return NotImplemented
		return UnitRoot(self.exponent + other.exponent)

	__rmul__ = __mul__

	def __truediv__(self, other: "UnitRoot") -> "UnitRoot":
		return self * other.inverse()

	def __pow__(self, k: int) -> "UnitRoot":
		return UnitRoot(self.exponent * k)

	def inverse(self) -> "UnitRoot":
		return UnitRoot(-self.exponent)

	@property
	def order(self) -> int:
		return self.exponent.denominator

	def is_one(self) -> bool:
		return self.exponent == 0

	def to_complex(self) -> complex:
		return complex(self.to_mpc())

	def to_mpc(self):
		return mpmath.expjpi(2 * mpmath.mpf(self.exponent.numerator) / self.exponent.denominator)

	def __str__(self):
		return f"e({self.exponent})"
