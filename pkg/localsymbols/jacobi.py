from math import gcd

from utils.errors import UndefinedSymbol

UPPER = "upper"
LOWER = "lower"


def jacobi(a: int, n: int) -> int:
	"""Jacobi symbol (a/n) for odd positive n; 0 when gcd(a, n) > 1."""
	if n <= 0 or n % 2 == 0:
		raise UndefinedSymbol(f"Jacobi symbol needs an odd positive modulus, got {n}")
	a %= n
	result = 1
	while a:
		while a % 2 == 0:
			a //= 2
			if n % 8 in (3, 5):
				result = -result
		a, n = n, a
		if a % 4 == 3 and n % 4 == 3:
			result = -result
		a %= n
	return result if n == 1 else 0


def jacobi_star(c: int, d: int, variant: str = UPPER) -> int:
	"""
	(c/d)^* = (c/|d|) and (c/d)_* = t(c, d) (c/d)^*, with t = -1 iff c, d < 0.

	Conventions at zero: (0/+-1)^* = (0/1)_* = 1 and (0/-1)_* = -1.
	"""
	if variant not in (UPPER, LOWER):
		raise UndefinedSymbol(f"unknown symbol variant {variant!r}")
	if d % 2 == 0:
		raise UndefinedSymbol(f"({c}/{d}) needs an odd denominator")
	if c == 0:
		if abs(d) != 1:
			raise UndefinedSymbol(f"(0/{d}) is undefined")
		return 1 if variant == UPPER else d
	if gcd(c, d) != 1:
		raise UndefinedSymbol(f"({c}/{d}) needs coprime entries")
	value = jacobi(c, abs(d))
	if variant == LOWER and c < 0 and d < 0:
		value = -value
	return value
