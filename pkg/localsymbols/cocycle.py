from typing import Set

from sympy import primefactors

from localsymbols.hilbert import LocalContext, hilbert
from localsymbols.sl2 import SL2Mat
from quadfield.places import RAMIFIED, PrimePlace, primes_above, valuation
from utils.errors import NegativeValuation


def kubota_cocycle(g: SL2Mat, h: SL2Mat, lc: LocalContext) -> int:
	"""c(g, h) = <x(g) x(gh), x(h) x(gh)> at the given place."""
	gh = g @ h
	return hilbert(g.x() * gh.x(), h.x() * gh.x(), lc)


def c_infinity(g: SL2Mat, h: SL2Mat) -> int:
	"""Product of the real Kubota cocycles over every real embedding."""
	ctx = g.ctx
	result = 1
	for i in ctx.real_places:
		result *= kubota_cocycle(g, h, LocalContext.real(ctx, i))
	return result


def splitting_s(g: SL2Mat, v: PrimePlace) -> int:
	"""1 if c is a v-unit, <c, d> if c lies in the prime, <-1, d> if c = 0."""
	if not g.is_integral_at(v):
		raise NegativeValuation(g, v)
	lc = LocalContext.finite(v)
	if not g.c:
		return hilbert(-1, g.d, lc)
	if valuation(g.c, v) == 0:
		return 1
	return hilbert(g.c, g.d, lc)


def v0_places(g: SL2Mat) -> Set[PrimePlace]:
	"""Finite places where s_v can differ from 1: above 2, and above N(c) (or ramified primes if c = 0)."""
	ctx = g.ctx
	primes = {2}
	if g.c:
		primes.update(primefactors(abs(g.c.norm().numerator)))
	places = {v for p in primes for v in primes_above(ctx, p)}
	if not g.c and not ctx.is_rational:
		places.update(v for p in primefactors(ctx.disc) for v in primes_above(ctx, p) if v.kind == RAMIFIED)
	return places


def v0(g: SL2Mat) -> int:
	"""The global sign character: product of s_v over the finite places."""
	result = 1
	for v in sorted(v0_places(g)):
		result *= splitting_s(g, v)
	return result
