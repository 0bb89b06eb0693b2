from math import gcd, isqrt
from typing import Dict, Iterator, List, NamedTuple, Tuple

from sympy import divisors

from utils.errors import ThetaError


class QForm(NamedTuple):
	"""Indefinite binary quadratic form a*x^2 + b*x*y + c*y^2."""
	a: int
	b: int
	c: int

	@property
	def disc(self) -> int:
		return self.b * self.b - 4 * self.a * self.c

	def __call__(self, x: int, y: int) -> int:
		return self.a * x * x + self.b * x * y + self.c * y * y

	def transform(self, x: int, u: int, y: int, w: int) -> "QForm":
		"""Form in the new variables given by the matrix (x u; y w) of determinant 1."""
		if x * w - u * y != 1:
			raise ThetaError("form transformation must have determinant 1")
		a, b, c = self
		return QForm(
			self(x, y),
			2 * a * x * u + b * (x * w + u * y) + 2 * c * y * w,
			self(u, w),
		)

	def __str__(self):
		return f"({self.a}, {self.b}, {self.c})"


def is_reduced(f: QForm) -> bool:
	"""0 < b < sqrt(disc) and sqrt(disc) - b < 2|a| < sqrt(disc) + b, decided in integers."""
	disc = f.disc
	a2 = 2 * abs(f.a)
	if f.b <= 0 or f.b * f.b >= disc:
		return False
	if disc >= (a2 + f.b) ** 2:
		return False
	return a2 - f.b < 0 or (a2 - f.b) ** 2 < disc


def rho(f: QForm) -> QForm:
	"""One step of the reduction operator; a proper equivalence."""
	a, b, c = f
	disc = f.disc
	if c == 0:
		raise ThetaError(f"form {f} represents zero")
	s = isqrt(disc)
	m = 2 * abs(c)
	if c * c < disc:
		r = s - ((s + b) % m)
	else:
		r = (-b) % m
		if r > abs(c):
			r -= m
	return QForm(c, r, (r * r - disc) // (4 * c))


def reduce_form(f: QForm, max_steps: int = 100000) -> QForm:
	for _ in range(max_steps):
		if is_reduced(f):
			return f
		f = rho(f)
	raise ThetaError(f"form {f} did not reduce")


def principal_form(disc: int) -> QForm:
	b = disc % 2
	return QForm(1, b, (b * b - disc) // 4)


def reduced_forms(disc: int) -> Iterator[QForm]:
	"""Every reduced form of the given (non-square) discriminant."""
	s = isqrt(disc)
	for b in range(1, s + 1):
		if (b - disc) % 2:
			continue
		n = (disc - b * b) // 4
		if n <= 0:
			continue
		for d in divisors(n):
			for a in (d, -d):
				f = QForm(a, b, -n // a)
				if is_reduced(f):
					yield f


def cycle_of(f: QForm) -> List[QForm]:
	cycle = [f]
	g = rho(f)
	while g != f:
		cycle.append(g)
		g = rho(g)
	return cycle


def cycles(disc: int) -> List[List[QForm]]:
	"""Partition of the reduced forms into rho-cycles, one cycle per proper class."""
	seen = set()
	result = []
	for f in sorted(reduced_forms(disc)):
		if f in seen:
			continue
		cycle = cycle_of(f)
		seen.update(cycle)
		result.append(cycle)
	return result


def _coprime_positive(f: QForm, other: int, radius: int = 50) -> QForm:
	"""Equivalent form whose first coefficient is positive and coprime to `other`."""
	if f.a > 0 and gcd(f.a, other) == 1:
		return f
	for R in range(1, radius + 1):
		for x in range(-R, R + 1):
			for y in (R, -R, *range(-R + 1, R)):
				if gcd(x, y) != 1:
					continue
				value = f(x, y)
				if value > 0 and gcd(value, other) == 1:
					_, w, u = _bezout(x, y)
					return f.transform(x, u, y, w)
	raise ThetaError(f"no coprime representative for {f} against {other}")


def _bezout(x: int, y: int) -> Tuple[int, int, int]:
	"""(1, w, u) with x*w - u*y = 1 for coprime x, y."""
	s0, s1, t0, t1 = 1, 0, 0, 1
	a, b = x, y
	while b:
		q, a, b = a // b, b, a % b
		s0, s1 = s1, s0 - q * s1
		t0, t1 = t1, t0 - q * t1
	# s0*x + t0*y = a = +-1
	if a < 0:
		s0, t0 = -s0, -t0
	return 1, s0, -t0


def compose(f: QForm, g: QForm) -> QForm:
	"""Dirichlet composition of two forms of the same discriminant, reduced."""
	disc = f.disc
	if g.disc != disc:
		raise ThetaError(f"cannot compose forms of discriminants {disc} and {g.disc}")
	f = _coprime_positive(f, 1)
	g = _coprime_positive(g, f.a)
	a1, b1, _ = f
	a2, b2, _ = g
	k = ((b2 - b1) // 2) * pow(a1, -1, a2) % a2 if a2 > 1 else 0
	B = b1 + 2 * a1 * k
	A = a1 * a2
	return reduce_form(QForm(A, B, (B * B - disc) // (4 * A)))


def form_index(all_cycles: List[List[QForm]]) -> Dict[QForm, int]:
	return {f: i for i, cycle in enumerate(all_cycles) for f in cycle}
