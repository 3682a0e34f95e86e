"""Extended Catalan numbers and the rooted-triangulation series A = 1 + X*A^2.

The coefficient extraction conventions used throughout the package live
here: ``catalan(r)`` is the usual Catalan number when r is a nonnegative
integer and 0 for any other rational index, and ``a_power_coeff(k, r)``
is the coefficient of x^r in A(x)^k under the same convention.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .series import UniSeries

CATALAN_POWER_METHODS = ("alternating-sum", "closed-form", "series-product")


def binomial(a: int, b: int) -> int:
    """C(a, b), taken to be 0 whenever a < 0, b < 0 or b > a."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def as_integer_index(r) -> int | None:
    """The value of r as a nonnegative int, or None if r is fractional/negative."""
    if isinstance(r, int):
        return r if r >= 0 else None
    if isinstance(r, Fraction):
        if r.denominator == 1 and r >= 0:
            return int(r)
        return None
    raise TypeError(f"index must be an int or Fraction, not {type(r).__name__}")


@lru_cache(maxsize=None)
def _catalan_int(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def catalan(r) -> int:
    """Catalan number extended to rational indices: 0 off the nonnegative integers."""
    n = as_integer_index(r)
    return 0 if n is None else _catalan_int(n)


def catalan_list(order: int) -> list[int]:
    """[c_0, ..., c_order] via the convolution recurrence."""
    cs = [1]
    for n in range(order):
        cs.append(sum(cs[i] * cs[n - i] for i in range(n + 1)))
    return cs


@lru_cache(maxsize=None)
def a_series(order: int) -> UniSeries:
    """A(x) truncated at ``order``; satisfies A = 1 + x*A^2 at that order."""
    s = UniSeries(catalan_list(order), order)
    if not (1 + UniSeries.x(order) * s * s) == s:
        raise AssertionError("A series fails its defining equation")
    return s


def a_plus_series(order: int) -> UniSeries:
    """A(x) - 1."""
    return a_series(order) - 1


@lru_cache(maxsize=None)
def _a_power(k: int, order: int) -> UniSeries:
    return a_series(order) ** k


def a_power_coeff(k: int, r) -> int:
    """Coefficient of x^r in A(x)^k; 0 when r is fractional or negative."""
    if k < 0:
        raise ValueError("power must be nonnegative")
    n = as_integer_index(r)
    if n is None:
        return 0
    if k == 0:
        return 1 if n == 0 else 0
    return catalan_power(n, k)


def catalan_power(n: int, k: int, method: str = "closed-form") -> int:
    """Coefficient of x^n in A(x)^k, computable by three independent routes.

    ``alternating-sum`` expands A^k over shifted Catalan numbers,
    ``closed-form`` evaluates (k/n)*C(2n-1+k, n-1) (with value 1 at n = 0),
    and ``series-product`` multiplies the truncated series directly.
    """
    if k < 1:
        raise ValueError("power k must be >= 1")
    if n < 0:
        raise ValueError("index n must be >= 0")
    if method == "alternating-sum":
        return sum(
            (-1) ** i * binomial(k - 1 - i, i) * catalan(n + k - 1 - i)
            for i in range((k - 1) // 2 + 1)
        )
    if method == "closed-form":
        if n == 0:
            return 1
        num = k * binomial(2 * n - 1 + k, n - 1)
        if num % n:
            raise AssertionError(f"closed form not integral at n={n}, k={k}")
        return num // n
    if method == "series-product":
        c = _a_power(k, n).coefficient(n)
        return int(c)
    raise ValueError(f"unknown method {method!r}; expected one of {CATALAN_POWER_METHODS}")
