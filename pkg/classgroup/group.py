from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from sympy import primefactors

from classgroup.forms import QForm, compose, cycles, form_index, principal_form, reduce_form
from configuration.config_system import config
from quadfield.field import FieldCtx
from quadfield.ideals import FracIdeal, different, prime_ideal
from quadfield.places import PrimePlace, t3_places, two_places
from quadfield.triple import infinite_s
from utils.cache import cached
from utils.errors import BoundExceeded, ThetaError
from utils.logger import get_logger, log_performance

logger = get_logger("ClassGroup")


@dataclass(frozen=True)
class ClassGroup:
	"""
	Narrow class group Cl+ of a real quadratic field, as proper classes of forms
	of discriminant d_K. Element i is the cycle of reduced forms `cycles[i]`;
	`table[i][j]` is the index of the product class. Over Q the group is trivial.
	"""
	ctx: FieldCtx
	cycles: Tuple[Tuple[QForm, ...], ...]
	table: Tuple[Tuple[int, ...], ...]
	identity: int
	index: Dict[QForm, int]
	sqrt_d_class: int

	@property
	def order(self) -> int:
		return len(self.cycles)

	@property
	def elements(self) -> range:
		return range(self.order)

	def mul(self, i: int, j: int) -> int:
		return self.table[i][j]

	def inverse(self, i: int) -> int:
		return next(j for j in self.elements if self.table[i][j] == self.identity)

	def power(self, i: int, k: int) -> int:
		base = i if k >= 0 else self.inverse(i)
		result = self.identity
		for _ in range(abs(k)):
			result = self.mul(result, base)
		return result

	def square(self, i: int) -> int:
		return self.mul(i, i)

	def representative(self, i: int) -> QForm:
		"""The smallest form with positive first coefficient in the cycle."""
		return min(f for f in self.cycles[i] if f.a > 0)

	def class_of_form(self, f: QForm) -> int:
		return self.index[reduce_form(f)]

	def class_of(self, ideal: FracIdeal) -> int:
		"""Narrow class of a fractional ideal."""
		if self.ctx.is_rational:
			return self.identity
		if ideal.D != self.ctx.D:
			raise ThetaError("ideal from another field")
		A, B = ideal.a // ideal.c, ideal.b // ideal.c
		T, _ = self.ctx.omega_poly
		b = -(2 * B + T)
		disc = self.ctx.disc
		return self.class_of_form(QForm(A, b, (b * b - disc) // (4 * A)))

	def class_representative(self, i: int) -> FracIdeal:
		"""An integral ideal in class i."""
		if self.ctx.is_rational:
			return FracIdeal.unit(self.ctx)
		a, b, _ = self.representative(i)
		T, _ = self.ctx.omega_poly
		gen = self.ctx.from_omega(Fraction(-b - T, 2), 1)
		return FracIdeal.from_zbasis(self.ctx.D, [self.ctx.elem(a), gen])

	# -- subgroups ----------------------------------------------------
	def closure(self, gens: Iterable[int]) -> FrozenSet[int]:
		group = {self.identity}
		frontier = list(group)
		gens = list(gens)
		while frontier:
			x = frontier.pop()
			for g in gens:
				y = self.mul(x, g)
				if y not in group:
					group.add(y)
					frontier.append(y)
		return frozenset(group)

	def squares(self) -> FrozenSet[int]:
		return frozenset(self.square(i) for i in self.elements)

	@property
	def wide_kernel(self) -> FrozenSet[int]:
		"""Kernel of Cl+ -> Cl: the classes of principal ideals, i.e. {1, [(sqrt D)]}."""
		return frozenset({self.identity, self.sqrt_d_class})

	def wide_classes(self) -> List[FrozenSet[int]]:
		"""Cosets of the wide kernel: the elements of the wide class group Cl."""
		seen, result = set(), []
		for i in self.elements:
			if i in seen:
				continue
			coset = frozenset(self.mul(i, k) for k in self.wide_kernel)
			seen.update(coset)
			result.append(coset)
		return result

	def sq_preimage_count(self, target: int) -> int:
		"""#{x in Cl : x^2 = target in Cl+}."""
		roots = sum(1 for i in self.elements if self.square(i) == target)
		return roots // len(self.wide_kernel)

	def sq_preimages(self, target: int) -> List[int]:
		"""One narrow class per wide class whose square is the target."""
		result = []
		for coset in self.wide_classes():
			i = min(coset)
			if self.square(i) == target:
				result.append(i)
		return result


def _trivial(ctx: FieldCtx) -> ClassGroup:
	return ClassGroup(ctx, ((QForm(1, 0, 0),),), ((0,),), 0, {}, 0)


@cached("narrow_class_group")
@log_performance("narrow_class_group")
def narrow_class_group(ctx: FieldCtx) -> ClassGroup:
	if ctx.is_rational:
		return _trivial(ctx)
	disc = ctx.disc
	bound = config.discriminant_bound
	if disc > bound:
		raise BoundExceeded("discriminant", disc, bound)

	all_cycles = [tuple(c) for c in cycles(disc)]
	index = form_index(all_cycles)
	reps = [min(f for f in c if f.a > 0) for c in all_cycles]
	table = tuple(
		tuple(index[compose(f, g)] for g in reps)
		for f in reps
	)
	identity = index[reduce_form(principal_form(disc))]
	group = ClassGroup(ctx, tuple(all_cycles), table, identity, index, identity)
	sqrt_d_class = group.class_of(different(ctx))
	group = ClassGroup(ctx, tuple(all_cycles), table, identity, index, sqrt_d_class)
	logger.debug(f"Cl+ of {ctx}: order {group.order}, (sqrt D) class {sqrt_d_class}")
	return group


def class_number_check(g: ClassGroup) -> bool:
	"""Group axioms on the table and the genus bound 2^(t-1) | h+."""
	if g.ctx.is_rational:
		return g.order == 1
	elems = list(g.elements)
	for i in elems:
		if g.mul(g.identity, i) != i:
			return False
		for j in elems:
			if g.mul(i, j) != g.mul(j, i):
				return False
	for i, j, k in product(elems, repeat=3):
		if g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k)):
			return False
	t = len(primefactors(g.ctx.disc))
	return g.order % (2 ** (t - 1)) == 0


def v0_place(ctx: FieldCtx) -> Optional[PrimePlace]:
	"""The fixed T3 place: label 1 over the smallest prime with residue field of size 3."""
	t3 = t3_places(ctx)
	return t3[0] if t3 else None


def h_bar(g: ClassGroup) -> FrozenSet[int]:
	"""Subgroup of Cl+ generated by Cl+^2 and the even products of T3 prime classes."""
	ctx = g.ctx
	gens = set(g.squares())
	v0 = v0_place(ctx)
	if v0 is not None:
		c0 = g.class_of(prime_ideal(v0))
		for v in t3_places(ctx):
			gens.add(g.mul(g.class_of(prime_ideal(v)), c0))
	return g.closure(gens)


def theorem2_check(g: ClassGroup, weights) -> Dict[str, object]:
	"""
	Existence of a triple through the narrow class group.

	Case 1 (|S2| + |S_inf| even): [d] in H-bar. Case 2 (odd): T3 nonempty and
	[d p_v0] in H-bar.
	"""
	ctx = g.ctx
	ctx.require_two_split()
	n2 = len(two_places(ctx))
	n_inf = len(infinite_s(weights))
	hb = h_bar(g)
	d_class = g.class_of(different(ctx))
	if (n2 + n_inf) % 2 == 0:
		return {"exists": d_class in hb, "case": 1}
	v0 = v0_place(ctx)
	if v0 is None:
		return {"exists": False, "case": 2}
	target = g.mul(d_class, g.class_of(prime_ideal(v0)))
	return {"exists": target in hb, "case": 2}
