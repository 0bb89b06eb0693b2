from dataclasses import dataclass, field
from math import isqrt
from typing import Any, Dict, List, Optional, Tuple

from sympy import primefactors

from quadfield.field import FieldCtx
from quadfield.places import two_places
from quadfield.triple import GTriple, check_weights, infinite_s

C1 = "C1"
C2 = "C2"
C3 = "C3"


@dataclass
class ExistenceReport:
	exists: bool
	case: str
	witness: Optional[GTriple] = None
	class_count: Optional[int] = None
	criteria: Dict[str, bool] = field(default_factory=dict)

	def as_dict(self) -> Dict[str, Any]:
		result = {"exists": self.exists, "case": self.case}
		if self.criteria:
			result["criteria"] = dict(self.criteria)
		if self.witness is not None:
			result["witness"] = self.witness.as_dict()
		if self.class_count is not None:
			result["class_count"] = self.class_count
		return result


def representations(N: int, k: int) -> List[Tuple[int, int]]:
	"""Every (u, v) with u, v >= 0 and N = k*u^2 + v^2, ordered by u."""
	result = []
	u = 0
	while k * u * u <= N:
		rest = N - k * u * u
		v = isqrt(rest)
		if v * v == rest:
			result.append((u, v))
		u += 1
	return result


def two_squares(N: int) -> Optional[Tuple[int, int]]:
	"""N = u^2 + v^2 with the smallest u, or None."""
	reps = representations(N, 1)
	return reps[0] if reps else None


def three_u2_v2(N: int) -> Optional[Tuple[int, int]]:
	"""N = 3u^2 + v^2 with the smallest u, or None."""
	reps = representations(N, 3)
	return reps[0] if reps else None


def is_norm_from(N: int, k: int) -> bool:
	"""
	For square-free N: no prime factor of N is inert in Q(sqrt -1) (k = 1)
	or Q(sqrt -3) (k = 3).
	"""
	if k == 1:
		return all(p % 4 != 3 for p in primefactors(N))
	if k == 3:
		return all(p % 3 != 2 for p in primefactors(N))
	raise ValueError(f"unsupported norm form k={k}")


def congruence_conditions(D: int) -> Dict[str, bool]:
	"""The three congruence conditions on the prime divisors of D."""
	primes = primefactors(D)
	c1 = all(p % 4 == 1 for p in primes)
	c2 = all(p % 3 in (0, 1) for p in primes)
	c3 = D % 24 == 1 and c1
	return {C1: c1, C2: c2, C3: c3}


def quadratic_criteria(ctx: FieldCtx, weights) -> ExistenceReport:
	"""Existence decided by congruences on D: C1 or C3 for even |S_inf|, C2 for odd."""
	ctx.require_two_split()
	weights = check_weights(weights, ctx)
	n_inf = len(infinite_s(weights))
	if ctx.is_rational:
		# case 1 when |S2| + |S_inf| is even
		case = "1" if (len(two_places(ctx)) + n_inf) % 2 == 0 else "2"
		return ExistenceReport(True, case)
	conditions = congruence_conditions(ctx.D)
	if n_inf % 2 == 0:
		if conditions[C1]:
			return ExistenceReport(True, C1, criteria=conditions)
		return ExistenceReport(False, C1, criteria=conditions)
	return ExistenceReport(conditions[C2], C2, criteria=conditions)
