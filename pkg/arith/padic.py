from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from sympy.ntheory import sqrt_mod

from arith.quadelem import omega_polynomial
from utils.cache import cached
from utils.errors import NoDegreeOnePlace, ThetaError


@dataclass(frozen=True)
class PadicResidue:
	p: int
	k: int
	value: int

	def __post_init__(self):
		if self.k < 1:
			raise ThetaError(f"precision must be positive, got {self.k}")
		object.__setattr__(self, "value", self.value % self.modulus)

	@property
	def modulus(self) -> int:
		return self.p ** self.k

	def reduce(self, j: int) -> "PadicResidue":
		if j > self.k:
			raise ThetaError(f"cannot raise precision {self.k} to {j}")
		return PadicResidue(self.p, j, self.value)

	def is_unit(self) -> bool:
		return self.value % self.p != 0


def p_valuation(n: Union[int, Fraction], p: int) -> int:
	n = Fraction(n)
	if n == 0:
		raise ThetaError("valuation of zero")
	v = 0
	num, den = n.numerator, n.denominator
	while num % p == 0:
		num //= p
		v += 1
	while den % p == 0:
		den //= p
		v -= 1
	return v


def split_off(n: Union[int, Fraction], p: int) -> Tuple[int, Fraction]:
	"""n = p**v * u with u a p-adic unit."""
	v = p_valuation(n, p)
	return v, Fraction(n) / Fraction(p) ** v


def rational_residue(x: Union[int, Fraction], p: int, k: int) -> int:
	"""x mod p**k for a p-integral rational x."""
	x = Fraction(x)
	mod = p ** k
	if x.denominator % p == 0:
		raise ThetaError(f"{x} is not {p}-integral")
	return x.numerator * pow(x.denominator, -1, mod) % mod


def padic_frac(x: Union[int, Fraction], p: int) -> Fraction:
	"""The r in [0, 1) with p-power denominator such that x - r is p-integral."""
	x = Fraction(x)
	den, k = x.denominator, 0
	while den % p == 0:
		den //= p
		k += 1
	if k == 0:
		return Fraction(0)
	mod = p ** k
	r = x.numerator * pow(den, -1, mod) % mod
	return Fraction(r, mod)


def _roots_mod_p(T: int, N0: int, p: int) -> List[int]:
	if p == 2:
		return [t for t in (0, 1) if (t * t - T * t - N0) % 2 == 0 and (2 * t - T) % 2]
	disc = (T * T + 4 * N0) % p
	if disc == 0:
		return []
	roots = sqrt_mod(disc, p, all_roots=True) or []
	inv2 = pow(2, -1, p)
	return sorted({(T + s) * inv2 % p for s in roots})


@cached("hensel_root")
def hensel_root(D: int, p: int, k: int, label: int = 1) -> PadicResidue:
	"""
	Root of omega's minimal polynomial modulo p**k.

	Label 1 lifts the smaller root modulo p, label 2 the larger one.
	"""
	T, N0 = omega_polynomial(D)
	roots = _roots_mod_p(T, N0, p)
	if len(roots) != 2:
		raise NoDegreeOnePlace(f"p={p} does not split in Q(sqrt {D})")
	if label not in (1, 2):
		raise ThetaError(f"place label must be 1 or 2, got {label}")

	r, prec = roots[label - 1], 1
	while prec < k:
		prec = min(2 * prec, k)
		mod = p ** prec
		f = r * r - T * r - N0
		r = (r - f * pow(2 * r - T, -1, mod)) % mod
	return PadicResidue(p, k, r)
