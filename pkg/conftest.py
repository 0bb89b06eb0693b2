from fractions import Fraction

import numpy as np
import pytest

from existence.construct import construct_triple
from quadfield.field import FieldCtx
from quadfield.ideals import FracIdeal
from quadfield.places import t3_places
from quadfield.triple import HALF, THREE_HALVES, GTriple


@pytest.fixture(scope="session")
def rational():
	return FieldCtx.rational()


@pytest.fixture(scope="session")
def q17():
	return FieldCtx(17)


@pytest.fixture(scope="session")
def q73():
	return FieldCtx(73)


@pytest.fixture(scope="session")
def q793():
	return FieldCtx(793)


@pytest.fixture(scope="session")
def eta_triple(rational):
	"""(1/24, {3}, Z): theta is 2 eta."""
	return GTriple(rational, rational.elem(Fraction(1, 24)), tuple(t3_places(rational)), FracIdeal.unit(rational), (HALF,))


@pytest.fixture(scope="session")
def eta3_triple(rational):
	"""(1/8, {}, Z): theta is 2 eta^3."""
	return GTriple(rational, rational.elem(Fraction(1, 8)), (), FracIdeal.unit(rational), (THREE_HALVES,))


@pytest.fixture(scope="session")
def q17_triple(q17):
	return construct_triple(q17, (HALF, HALF))


@pytest.fixture
def rng():
	return np.random.default_rng(20240601)
