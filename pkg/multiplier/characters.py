from fractions import Fraction
from typing import List

from localsymbols.hilbert import LocalContext
from quadfield.field import FieldCtx
from quadfield.places import PrimePlace
from multiplier.systems import psi_local
from multiplier.unitroot import UnitRoot


def genuine_character_table(ctx: FieldCtx, v: PrimePlace) -> List[UnitRoot]:
	"""
	Values at u+(1) of the genuine characters of the inverse image of SL2(O_v).

	At a Q_2 place these are mu_beta for beta = u/8 (u odd mod 8), at a place
	with residue field F_3 the trivial genuine character together with mu_beta
	for beta = 1/3, 2/3; elsewhere only the trivial genuine character.
	"""
	lc = LocalContext.finite(v)
	if lc.is_q2:
		params = [Fraction(u, 8) for u in (1, 3, 5, 7)]
		values = []
	elif v.q == 3:
		params = [Fraction(u, 3) for u in (1, 2)]
		values = [UnitRoot.one()]
	else:
		return [UnitRoot.one()]
	values += [psi_local(ctx.elem(beta), -1, v) for beta in params]
	return sorted(values, key=lambda r: r.exponent)
