from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from arith.padic import padic_frac
from arith.quadelem import QuadElem
from localsymbols.cocycle import c_infinity, v0
from localsymbols.jacobi import LOWER, UPPER, jacobi_star
from localsymbols.sl2 import SL2Mat
from quadfield.ideals import different
from quadfield.places import INERT, RAMIFIED, RATIONAL_PRIME, PrimePlace, residue_at, valuation
from quadfield.triple import GTriple
from multiplier.unitroot import UnitRoot
from utils.errors import ThetaError

Scalar = Union[int, Fraction, QuadElem]


def psi_local(beta: QuadElem, x: Scalar, v: PrimePlace) -> UnitRoot:
	"""psi_v(beta x) = e(-{Tr_v(beta x)}_p)."""
	y = beta * x
	if not y:
		return UnitRoot.one()
	if v.kind == RATIONAL_PRIME:
		return UnitRoot(-padic_frac(y.x, v.p))
	if v.kind in (RAMIFIED, INERT):
		return UnitRoot(-padic_frac(y.trace(), v.p))
	K = max(0, -valuation(y, v))
	if K == 0:
		return UnitRoot.one()
	scale = v.p ** K
	frac = Fraction(residue_at(y * scale, v, K).value, scale)
	return UnitRoot(-frac)


@dataclass(frozen=True)
class MultiplierSpec:
	"""
	The genuine character attached to a normalized triple: mu_beta at the places
	of S2 and S3, the trivial genuine character elsewhere.
	"""
	triple: GTriple

	def __post_init__(self):
		t = self.triple
		d = different(t.ctx)
		for v, expected in [(v, -3) for v in t.S2] + [(v, -1) for v in t.S3]:
			order = valuation(t.beta, v) + d.ord_at(v)
			if order != expected:
				raise ThetaError(f"ord psi_beta at {v} is {order}, expected {expected}; normalize the triple first")

	@property
	def ctx(self):
		return self.triple.ctx

	@property
	def beta(self) -> QuadElem:
		return self.triple.beta

	def __call__(self, g: SL2Mat) -> UnitRoot:
		return v_lambda(self, g)


def kappa_v(spec: MultiplierSpec, g: SL2Mat, v: PrimePlace) -> UnitRoot:
	"""Local correction at v in S2 (residue field F_2) or S3 (residue field F_3)."""
	a, b, c, d = g.entries()
	if v in spec.triple.S2:
		if c and valuation(c, v) == 0:
			arg = -(a + d) * c + 3 * c
		else:
			arg = (c - b) * d - 3 * (d - 1)
	elif v in spec.triple.S3:
		arg = -(a + d) * c + b * d * (c * c - 1)
	else:
		raise ThetaError(f"{v} is not in S2 or S3")
	return psi_local(spec.beta, arg, v)


def v_lambda(spec: MultiplierSpec, g: SL2Mat) -> UnitRoot:
	"""v0(g) times the local corrections over S2 and S3."""
	if not g.is_integral():
		raise ThetaError(f"{g} is not in SL2 of the ring of integers")
	result = UnitRoot.from_sign(v0(g))
	for v in spec.triple.special_places:
		result = result * kappa_v(spec, g, v)
	return result


def _int(e: QuadElem) -> int:
	if e.y or e.x.denominator != 1:
		raise ThetaError(f"{e} is not a rational integer")
	return int(e.x)


def v_eta(g: SL2Mat) -> UnitRoot:
	"""Multiplier system of the Dedekind eta function on SL2(Z)."""
	a, b, c, d = (_int(e) for e in g.entries())
	if c % 2:
		sign = jacobi_star(d, c, UPPER)
		num = (a + d) * c - b * d * (c * c - 1) - 3 * c
	else:
		sign = jacobi_star(c, d, LOWER)
		num = (a + d) * c - b * d * (c * c - 1) + 3 * d - 3 - 3 * c * d
	return UnitRoot.from_sign(sign) * UnitRoot(Fraction(num, 24))


def cocycle_check(multiplier: Callable[[SL2Mat], UnitRoot], g1: SL2Mat, g2: SL2Mat) -> bool:
	"""v(g1) v(g2) = c_inf(g1, g2) v(g1 g2)."""
	lhs = multiplier(g1) * multiplier(g2)
	rhs = UnitRoot.from_sign(c_infinity(g1, g2)) * multiplier(g1 @ g2)
	return lhs == rhs


def is_principal_congruence(g: SL2Mat, level: int) -> bool:
	"""a = d = 1 and b = c = 0 modulo `level` (entry-wise in the ring of integers)."""
	a, b, c, d = g.entries()
	return all(((e - target) / level).is_integral() for e, target in ((a, 1), (b, 0), (c, 0), (d, 1)))


def principal_congruence_check(spec: MultiplierSpec, g: SL2Mat, level: int = 24) -> bool:
	"""On the principal congruence subgroup of level 24 the corrections vanish: v_lambda = v0."""
	if not is_principal_congruence(g, level):
		raise ThetaError(f"{g} is not congruent to the identity modulo {level}")
	return v_lambda(spec, g) == UnitRoot.from_sign(v0(g))


def is_gamma1_4(g: SL2Mat) -> bool:
	c, d = g.c, g.d
	return (c / 4).is_integral() and ((d - 1) / 4).is_integral()


def gamma1_4_check(g1: SL2Mat, g2: SL2Mat) -> bool:
	"""v0 alone satisfies the multiplier identity on c = 0, d = 1 mod 4."""
	if not (is_gamma1_4(g1) and is_gamma1_4(g2)):
		raise ThetaError("both matrices must satisfy c = 0, d = 1 mod 4")
	return cocycle_check(lambda g: UnitRoot.from_sign(v0(g)), g1, g2)
