import mpmath

from utils.errors import ThetaError


def _upper(z) -> mpmath.mpc:
	z = mpmath.mpc(z)
	if z.imag <= 0:
		raise ThetaError(f"{z} is not in the upper half plane")
	return z


def eta(z) -> mpmath.mpc:
	"""Dedekind eta: e(z/24) prod_{m >= 1} (1 - e(mz))."""
	z = _upper(z)
	q = mpmath.expjpi(2 * z)
	return mpmath.expjpi(z / 12) * mpmath.qp(q)


def eta_cubed(z) -> mpmath.mpc:
	return eta(z) ** 3


def eta_cubed_jacobi(z) -> mpmath.mpc:
	"""eta^3 through 2 eta(z)^3 = theta_2 theta_3 theta_4 at nome e(z/2)."""
	z = _upper(z)
	nome = mpmath.expjpi(z)
	return mpmath.jtheta(2, 0, nome) * mpmath.jtheta(3, 0, nome) * mpmath.jtheta(4, 0, nome) / 2
