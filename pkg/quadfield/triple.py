from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from typing import Any, Dict, Iterable, Tuple

from arith.quadelem import QuadElem
from quadfield.field import FieldCtx
from quadfield.ideals import FracIdeal
from quadfield.places import PrimePlace, t3_places, two_places, uniformizer_away
from utils.errors import ThetaError

HALF = Fraction(1, 2)
THREE_HALVES = Fraction(3, 2)


def parse_weights(text: str, ctx: FieldCtx) -> Tuple[Fraction, ...]:
	"""'1/2,3/2' -> (1/2, 3/2), checked against the field degree."""
	parts = [p.strip() for p in str(text).split(",") if p.strip()]
	try:
		weights = tuple(Fraction(p) for p in parts)
	except (ValueError, ZeroDivisionError):
		raise ThetaError(f"cannot parse weights {text!r}")
	return check_weights(weights, ctx)


def check_weights(weights: Iterable, ctx: FieldCtx) -> Tuple[Fraction, ...]:
	weights = tuple(Fraction(w) for w in weights)
	if len(weights) != ctx.degree:
		raise ThetaError(f"expected {ctx.degree} weights for {ctx}, got {len(weights)}")
	for w in weights:
		if w not in (HALF, THREE_HALVES):
			raise ThetaError(f"weight {w} is not 1/2 or 3/2")
	return weights


def infinite_s(weights: Iterable[Fraction]) -> Tuple[int, ...]:
	"""Real places (1-based) of weight 3/2."""
	return tuple(i for i, w in enumerate(weights, 1) if w == THREE_HALVES)


@dataclass(frozen=True)
class GTriple:
	"""(beta, S3, a) together with the weight vector it is attached to."""
	ctx: FieldCtx
	beta: QuadElem
	S3: Tuple[PrimePlace, ...]
	ideal: FracIdeal
	weights: Tuple[Fraction, ...] = field(default=())

	def __post_init__(self):
		object.__setattr__(self, "S3", tuple(sorted(self.S3)))
		object.__setattr__(self, "weights", check_weights(self.weights, self.ctx))
		if self.beta.D != self.ctx.D or self.ideal.D != self.ctx.D:
			raise ThetaError("triple components live in different fields")

	@property
	def S2(self) -> Tuple[PrimePlace, ...]:
		return tuple(two_places(self.ctx))

	@property
	def T3(self) -> Tuple[PrimePlace, ...]:
		return tuple(t3_places(self.ctx))

	@property
	def S_inf(self) -> Tuple[int, ...]:
		return infinite_s(self.weights)

	@property
	def special_places(self) -> Tuple[PrimePlace, ...]:
		"""S2 followed by S3."""
		return self.S2 + self.S3

	@cached_property
	def is_normalized(self) -> bool:
		"""ord_v a = 0 at every place of S2 and S3."""
		return all(self.ideal.ord_at(v) == 0 for v in self.special_places)

	def parity_ok(self) -> bool:
		return (len(self.S2) + len(self.S3) + len(self.S_inf)) % 2 == 0

	def as_dict(self) -> Dict[str, Any]:
		return {
			"field": "rational" if self.ctx.is_rational else self.ctx.D,
			"beta": {"x": str(self.beta.x), "y": str(self.beta.y)},
			"S3": [str(v) for v in self.S3],
			"ideal": {
				"scale": str(self.ideal.scale),
				"hnf": [self.ideal.a, self.ideal.b, self.ideal.c],
			},
			"weights": [str(w) for w in self.weights],
		}

	def __str__(self):
		S3 = "{" + ", ".join(str(v) for v in self.S3) + "}"
		return f"({self.beta}, {S3}, {self.ideal})"


def normalize_triple(t: GTriple) -> GTriple:
	"""
	Equivalent triple with ord_v a = 0 at every v in S2 and S3.

	Uses gamma = prod pi_v^(-ord_v a) with pi_v a uniformizer at v that is a
	unit at the other special places; then beta' = gamma^2 beta, a' = gamma a.
	"""
	places = t.special_places
	gamma = t.ctx.one
	for v in places:
		k = t.ideal.ord_at(v)
		if k:
			gamma = gamma * uniformizer_away(v, places) ** (-k)
	if gamma == t.ctx.one:
		return t
	return GTriple(t.ctx, gamma * gamma * t.beta, t.S3, t.ideal * gamma, t.weights)
