"""Exact equivariant localization, iterated residues and jet invariants."""

from fractions import Fraction

from . import _core
from ._core import EquilocError, canonical, euler, rho_symbolic, run, thom

__all__ = [
    "EquilocError",
    "canonical",
    "euler",
    "flag_check",
    "gg",
    "grass_integrate",
    "minors",
    "residue",
    "rho",
    "rho_symbolic",
    "run",
    "theta",
    "thom",
]


def _jet(v):
    return [[str(Fraction(x)) for x in row] for row in v]


def residue(numerator, denominators, order, cap=256):
    return _core.residue(numerator, list(denominators), list(order), cap)


def grass_integrate(n, k, cls, seed=1):
    return Fraction(_core.grass_integrate(n, k, cls, seed))


def flag_check(n, d, trials=20, seed=1):
    return _core.flag_check(n, d, trials, seed)


def theta(n):
    return Fraction(_core.theta(n))


def gg(n):
    r = _core.gg(n)
    r["theta"] = Fraction(r["theta"])
    return r


def rho(v):
    return [[Fraction(x) for x in row] for row in _core.rho(_jet(v))]


def minors(v):
    return [Fraction(x) for x in _core.minors(_jet(v))]
