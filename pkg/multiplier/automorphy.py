from typing import Sequence

import mpmath

from localsymbols.sl2 import SL2Mat
from utils.errors import ThetaError


def automorphy_J(g: SL2Mat, place: int, z):
	"""
	J(g, z) at a real place: sqrt(d) or -sqrt(d) by the sign of d when c = 0,
	otherwise the principal root of cz + d with arg in (-pi, pi].
	"""
	z = mpmath.mpc(z)
	if z.imag <= 0:
		raise ThetaError(f"{z} is not in the upper half plane")
	c = g.c.to_mpf(place) if g.c else None
	d = g.d.to_mpf(place)
	if c is None:
		if d > 0:
			return mpmath.mpc(mpmath.sqrt(d))
		return -mpmath.sqrt(mpmath.mpc(d))
	return mpmath.sqrt(c * z + d)


def weight_factor(g: SL2Mat, zs: Sequence, weights: Sequence) -> mpmath.mpc:
	"""prod_i J(iota_i(g), z_i)^(2 w_i)."""
	result = mpmath.mpc(1)
	for i, (z, w) in enumerate(zip(zs, weights), 1):
		result *= automorphy_J(g, i, z) ** int(2 * w)
	return result


def act(g: SL2Mat, place: int, z):
	"""Moebius action of iota_place(g) on the upper half plane."""
	a, b, c, d = g.embed(place)
	z = mpmath.mpc(z)
	return (a * z + b) / (c * z + d)
