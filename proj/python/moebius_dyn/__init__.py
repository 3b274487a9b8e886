"""Dynamics of x -> (x + a)/(b x + c) with rational parameters.

Parameters and points may be int, Fraction or "n/m" strings. Exact results
come back as Fraction.
"""

import json
from fractions import Fraction

from . import _core
from ._core import InvalidMap, InvalidPrime, ParseError

__all__ = [
    "Map",
    "InvalidMap",
    "InvalidPrime",
    "ParseError",
    "padic_val",
]


def _s(x):
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a Fraction or a string")
    return str(Fraction(x))


def padic_val(x, p):
    """v_p(x) as a Fraction, or None for x = 0."""
    v = _core.padic_val(_s(x), int(p))
    return None if v is None else Fraction(v)


class Map:
    def __init__(self, a, b, c):
        self.a, self.b, self.c = Fraction(_s(a)), Fraction(_s(b)), Fraction(_s(c))
        self._abc = (_s(self.a), _s(self.b), _s(self.c))
        # validates b != 0 and c != ab
        _core.k_sequence(*self._abc, 1)

    def __repr__(self):
        return f"Map(a={self.a}, b={self.b}, c={self.c})"

    @property
    def pole(self):
        return -self.c / self.b

    @property
    def discriminant(self):
        return (self.c - 1) ** 2 + 4 * self.a * self.b

    def __call__(self, x):
        """f(x), or None at the pole."""
        y = _core.apply(*self._abc, _s(x))
        return None if y is None else Fraction(y)

    def orbit(self, x, n):
        """x, f(x), ..., f^n(x), truncated at a pole hit."""
        points, _ = _core.iterate(*self._abc, _s(x), n)
        return [Fraction(v) for v in points]

    def k(self, qmax):
        return [Fraction(v) for v in _core.k_sequence(*self._abc, qmax)]

    def min_period(self, qmax=64):
        return _core.min_period(*self._abc, qmax)

    def bad_points(self, depth):
        points, stop = _core.bad_points(*self._abc, depth)
        return [Fraction(v) for v in points], stop

    def limit(self, x0, tol=1e-10, nmax=100000):
        """(status, value, steps) for the float orbit of x0."""
        return _core.limit_of_orbit(*self._abc, float(x0), tol, nmax)

    def classify(self, p=None, qmax=64):
        return json.loads(_core.classify_json(*self._abc, p, qmax))

    def periods(self, qmax=64):
        return json.loads(_core.periods_json(*self._abc, qmax))
