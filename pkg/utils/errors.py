class ThetaError(ValueError):
	"""Base class for every domain failure raised by the library."""


class NoDegreeOnePlace(ThetaError):
	def __init__(self, detail: str = ""):
		super().__init__(f"no degree-one place{': ' + detail if detail else ''}")


class NormTooLarge(ThetaError):
	def __init__(self, value, bound: int):
		self.value = value
		self.bound = bound
		super().__init__(f"norm too large: {value} does not factor below {bound}")


class BoundExceeded(ThetaError):
	def __init__(self, what: str, value, bound):
		self.value = value
		self.bound = bound
		super().__init__(f"{what} {value} exceeds configured bound {bound}")


class NoMultiplierSystem(ThetaError):
	MESSAGE = "no multiplier system of half-integral weight exists"

	def __init__(self, detail: str = ""):
		super().__init__(f"{self.MESSAGE}{' (' + detail + ')' if detail else ''}")


class NegativeValuation(ThetaError):
	def __init__(self, x, place):
		super().__init__(f"{x} is not integral at {place}")


class UndefinedSymbol(ThetaError):
	pass


class PrecisionError(ThetaError):
	pass
