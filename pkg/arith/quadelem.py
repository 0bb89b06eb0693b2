from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Tuple, Union

import mpmath

from utils.errors import ThetaError

Number = Union[int, Fraction]

RATIONAL = 1  # D-context marker for the field of rationals


def omega_polynomial(D: int) -> Tuple[int, int]:
	"""(T, N0) with omega^2 = T*omega + N0 for the ring of integers of Q(sqrt D)."""
	if D % 4 == 1:
		return 1, (D - 1) // 4
	return 0, D


@dataclass(frozen=True)
class QuadElem:
	"""Exact element x + y*sqrt(D). D == 1 stands for the rationals, where y is always 0."""
	x: Fraction
	y: Fraction
	D: int

	def __post_init__(self):
		object.__setattr__(self, "x", Fraction(self.x))
		object.__setattr__(self, "y", Fraction(self.y))
		if self.D == RATIONAL and self.y != 0:
			raise ThetaError(f"rational context cannot hold sqrt part {self.y}")

	# -- construction -------------------------------------------------
	@classmethod
	def rational(cls, value: Number, D: int = RATIONAL) -> "QuadElem":
		return cls(Fraction(value), Fraction(0), D)

	@classmethod
	def from_omega(cls, X: Number, Y: Number, D: int) -> "QuadElem":
		"""Element X + Y*omega."""
		X, Y = Fraction(X), Fraction(Y)
		if D == RATIONAL:
			if Y:
				raise ThetaError("rational context has no omega")
			return cls(X, Fraction(0), D)
		if D % 4 == 1:
			return cls(X + Y / 2, Y / 2, D)
		return cls(X, Y, D)

	def _coerce(self, other) -> "QuadElem":
		if isinstance(other, QuadElem):
			if other.D != self.D:
				raise ThetaError(f"mixed field contexts {self.D} and {other.D}")
			return other
		if isinstance(other, (int, Fraction)):
			return QuadElem(Fraction(other), Fraction(0), self.D)
		return NotImplemented

	# -- ring operations ----------------------------------------------
	def __add__(self, other):
		other = self._coerce(other)
		if other is NotImplemented:
			return other
		return QuadElem(self.x + other.x, self.y + other.y, self.D)

	__radd__ = __add__

	def __neg__(self):
		return QuadElem(-self.x, -self.y, self.D)

	def __sub__(self, other):
		other = self._coerce(other)
		if other is NotImplemented:
			return other
		return QuadElem(self.x - other.x, self.y - other.y, self.D)

	def __rsub__(self, other):
		return (-self) + other

	def __mul__(self, other):
		other = self._coerce(other)
		if other is NotImplemented:
			return other
		return QuadElem(
			self.x * other.x + self.y * other.y * self.D,
			self.x * other.y + self.y * other.x,
			self.D,
		)

	__rmul__ = __mul__

	def inverse(self) -> "QuadElem":
		n = self.x * self.x - self.y * self.y * self.D
		if n == 0:
			raise ZeroDivisionError(f"division by zero in Q(sqrt {self.D})")
		return QuadElem(self.x / n, -self.y / n, self.D)

	def __truediv__(self, other):
		other = self._coerce(other)
		if other is NotImplemented:
			return other
		return self * other.inverse()

	def __rtruediv__(self, other):
		return self.inverse() * other

	def __pow__(self, k: int):
		if k < 0:
			return self.inverse() ** (-k)
		result, base = QuadElem(Fraction(1), Fraction(0), self.D), self
		while k:
			if k & 1:
				result = result * base
			base = base * base
			k >>= 1
		return result

	def __bool__(self):
		return bool(self.x) or bool(self.y)

	def __eq__(self, other):
		if isinstance(other, QuadElem):
			return self.x == other.x and self.y == other.y and self.D == other.D
		if isinstance(other, (int, Fraction)):
			return self.y == 0 and self.x == other
		return NotImplemented

	def __hash__(self):
		if self.y == 0:
			return hash(self.x)
		return hash((self.x, self.y, self.D))

	# -- invariants ---------------------------------------------------
	def conjugate(self) -> "QuadElem":
		return QuadElem(self.x, -self.y, self.D)

	def norm(self) -> Fraction:
		if self.D == RATIONAL:
			return self.x
		return self.x * self.x - self.y * self.y * self.D

	def trace(self) -> Fraction:
		if self.D == RATIONAL:
			return self.x
		return 2 * self.x

	def omega_coords(self) -> Tuple[Fraction, Fraction]:
		"""(X, Y) with self = X + Y*omega."""
		if self.D != RATIONAL and self.D % 4 == 1:
			return self.x - self.y, 2 * self.y
		return self.x, self.y

	def is_integral(self) -> bool:
		X, Y = self.omega_coords()
		return X.denominator == 1 and Y.denominator == 1

	def denominator(self) -> int:
		X, Y = self.omega_coords()
		return lcm(X.denominator, Y.denominator)

	def is_rational(self) -> bool:
		return self.y == 0

	# -- real embeddings ----------------------------------------------
	def is_totally_positive(self) -> bool:
		places = (1,) if self.D == RATIONAL else (1, 2)
		return all(embedding_sign(self, i) == 1 for i in places)

	def to_mpf(self, place: int = 1):
		"""High precision value at a real place, under the caller's mpmath precision."""
		x = mpmath.mpf(self.x.numerator) / self.x.denominator
		if self.y == 0:
			return x
		y = mpmath.mpf(self.y.numerator) / self.y.denominator
		root = mpmath.sqrt(self.D)
		return x + y * root if place == 1 else x - y * root

	def embed(self, place: int = 1, dps: int = 60) -> float:
		with mpmath.workdps(dps):
			return float(self.to_mpf(place))

	def __repr__(self):
		if self.D == RATIONAL or self.y == 0:
			return f"{self.x}"
		return f"{self.x}{'+' if self.y >= 0 else '-'}{abs(self.y)}*sqrt({self.D})"


def _sign(q: Fraction) -> int:
	return (q > 0) - (q < 0)


def embedding_sign(a: QuadElem, place: int) -> int:
	"""Exact sign of x + y*sqrt(D) (place 1) or x - y*sqrt(D) (place 2)."""
	if place not in (1, 2):
		raise ThetaError(f"real place index must be 1 or 2, got {place}")
	sx = _sign(a.x)
	sy = _sign(a.y) if place == 1 else -_sign(a.y)
	if sy == 0:
		return sx
	if sx == 0 or sx == sy:
		return sy
	# opposite signs: the larger absolute value wins
	return sx if a.x * a.x > a.y * a.y * a.D else sy


def quad_arith(a: QuadElem, b: QuadElem, op: str) -> QuadElem:
	if op == "add":
		return a + b
	if op == "sub":
		return a - b
	if op == "mul":
		return a * b
	if op == "div":
		if not b:
			raise ZeroDivisionError("division by zero")
		return a / b
	raise ThetaError(f"unknown operation {op!r}")
