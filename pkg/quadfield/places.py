from dataclasses import dataclass
from itertools import chain
from typing import Iterable, Iterator, List, Tuple

from sympy import isprime, legendre_symbol

from arith.padic import PadicResidue, hensel_root, p_valuation, rational_residue
from arith.quadelem import QuadElem
from quadfield.field import FieldCtx
from utils.cache import cached
from utils.errors import NegativeValuation, NoDegreeOnePlace, PrecisionError, ThetaError

SPLIT = "split"
INERT = "inert"
RAMIFIED = "ramified"
RATIONAL_PRIME = "rational"


@dataclass(frozen=True, order=True)
class PrimePlace:
	"""
	A finite place of F. For split primes `label` distinguishes the two places
	(1 is the Hensel lift of the smaller root of omega's polynomial mod p);
	`root` is that residue mod p, or the double root for ramified primes.
	"""
	p: int
	label: int
	kind: str
	f: int
	e: int
	root: int
	D: int

	@property
	def q(self) -> int:
		return self.p ** self.f

	@property
	def hnf(self) -> Tuple[int, int, int]:
		"""(a, b, c) of the prime ideal as a Z-module a*Z + (b + c*omega)*Z (before scaling)."""
		if self.kind == RATIONAL_PRIME:
			return self.p, 0, 0
		if self.kind == INERT:
			return 1, 0, 1
		return self.p, (-self.root) % self.p, 1

	def __str__(self):
		if self.kind == RATIONAL_PRIME:
			return f"({self.p})"
		if self.kind == INERT:
			return f"({self.p})inert"
		if self.kind == RAMIFIED:
			return f"P{self.p}"
		return f"P{self.p},{self.label}"


@cached("primes_above")
def primes_above(ctx: FieldCtx, p: int) -> Tuple[PrimePlace, ...]:
	if not isprime(p):
		raise ThetaError(f"{p} is not prime")
	if ctx.is_rational:
		return (PrimePlace(p, 1, RATIONAL_PRIME, 1, 1, 0, ctx.D),)

	T, N0 = ctx.omega_poly
	d = ctx.disc
	if d % p == 0:
		if p == 2:
			root = ctx.D % 2
		else:
			root = T * pow(2, -1, p) % p
		return (PrimePlace(p, 1, RAMIFIED, 1, 2, root, ctx.D),)

	if p == 2:
		is_split = d % 8 == 1
	else:
		is_split = legendre_symbol(d % p, p) == 1
	if not is_split:
		return (PrimePlace(p, 1, INERT, 2, 1, -1, ctx.D),)

	return tuple(
		PrimePlace(p, label, SPLIT, 1, 1, hensel_root(ctx.D, p, 1, label).value, ctx.D)
		for label in (1, 2)
	)


def two_places(ctx: FieldCtx) -> List[PrimePlace]:
	"""S2: the places with residue field of size 2."""
	return [v for v in primes_above(ctx, 2) if v.q == 2]


def t3_places(ctx: FieldCtx) -> List[PrimePlace]:
	"""T3: the places with residue field of size 3 (split or ramified 3, never inert)."""
	return [v for v in primes_above(ctx, 3) if v.q == 3]


def _ctx(v: PrimePlace) -> FieldCtx:
	return FieldCtx(v.D)


def _integral_coords(x: QuadElem) -> Tuple[int, int, int]:
	"""(nX, nY, L) with L*x = nX + nY*omega integral."""
	X, Y = x.omega_coords()
	L = x.denominator()
	return int(X * L), int(Y * L), L


def valuation(x: QuadElem, v: PrimePlace) -> int:
	"""ord_v(x) for nonzero x."""
	if not x:
		raise ThetaError("valuation of zero")
	if v.kind == RATIONAL_PRIME:
		return p_valuation(x.x, v.p)
	if v.kind == RAMIFIED:
		return p_valuation(x.norm(), v.p)
	if v.kind == INERT:
		return p_valuation(x.norm(), v.p) // 2

	nX, nY, L = _integral_coords(x)
	e = p_valuation(L, v.p)
	n_norm = int(x.norm() * L * L)
	K = p_valuation(n_norm, v.p) + 1
	r = hensel_root(v.D, v.p, K, v.label).value
	image = (nX + nY * r) % v.p ** K
	return p_valuation(image, v.p) - e


def residue_at(x: QuadElem, v: PrimePlace, k: int = 1) -> PadicResidue:
	"""Image of a v-integral x in Z_p / p^k under the embedding at a degree-one place."""
	if v.kind == INERT:
		raise NoDegreeOnePlace(f"{v} has residue degree 2")
	if not x:
		return PadicResidue(v.p, k, 0)
	if valuation(x, v) < 0:
		raise NegativeValuation(x, v)

	if v.kind == RATIONAL_PRIME:
		return PadicResidue(v.p, k, rational_residue(x.x, v.p, k))

	nX, nY, L = _integral_coords(x)
	if v.kind == RAMIFIED:
		if k != 1:
			raise PrecisionError(f"ramified place {v} only supports residues mod the prime")
		# v-integral at the unique place above p means p-integral coordinates
		X, Y = x.omega_coords()
		return PadicResidue(v.p, 1, rational_residue(X, v.p, 1) + rational_residue(Y, v.p, 1) * v.root)

	e = p_valuation(L, v.p)
	unit_den = L // v.p ** e
	mod = v.p ** (k + e)
	r = hensel_root(v.D, v.p, k + e, v.label).value
	image = (nX + nY * r) % mod
	if image % v.p ** e:
		raise PrecisionError(f"lost divisibility computing residue of {x} at {v}")
	value = (image // v.p ** e) * pow(unit_den, -1, v.p ** k)
	return PadicResidue(v.p, k, value)


def uniformizer(v: PrimePlace) -> QuadElem:
	"""An integral element of valuation 1 at v."""
	ctx = _ctx(v)
	if v.kind in (RATIONAL_PRIME, INERT):
		return ctx.elem(v.p)
	if v.kind == RAMIFIED and v.p != 2:
		return ctx.sqrt_D
	return ctx.from_omega(-v.root, 1) if valuation(ctx.from_omega(-v.root, 1), v) == 1 \
		else ctx.from_omega(v.p - v.root, 1)


def unit_part(x: QuadElem, v: PrimePlace) -> Tuple[int, QuadElem]:
	"""(alpha, u) with x = pi^alpha * u, pi = uniformizer(v), u a v-adic unit."""
	alpha = valuation(x, v)
	return alpha, x / uniformizer(v) ** alpha


def _box_shells(ctx: FieldCtx, radius: int) -> Iterator[QuadElem]:
	for R in range(1, radius + 1):
		for X in range(-R, R + 1):
			for Y in (-R, R):
				yield ctx.from_omega(X, Y)
		for Y in range(-R + 1, R):
			for X in (-R, R):
				yield ctx.from_omega(X, Y)


def uniformizer_away(v: PrimePlace, avoid: Iterable[PrimePlace], radius: int = 64) -> QuadElem:
	"""An integral element of valuation 1 at v and 0 at every other place in `avoid`."""
	others = [w for w in avoid if w != v]
	ctx = _ctx(v)
	candidates = [uniformizer(v)]
	if not ctx.is_rational:
		candidates = chain(candidates, _box_shells(ctx, radius))
	for cand in candidates:
		if cand and valuation(cand, v) == 1 and all(valuation(cand, w) == 0 for w in others):
			return cand
	raise ThetaError(f"no uniformizer for {v} avoiding {[str(w) for w in others]} within radius {radius}")
