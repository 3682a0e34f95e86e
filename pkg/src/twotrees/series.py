"""Exact truncated series arithmetic.

Two series types cover everything the toolkit needs:

* ``UniSeries`` -- univariate power series with rational coefficients,
  truncated at a fixed order.
* ``IndexSeries`` -- sparse series in the cycle-index variables
  x_1, x_2, ... (one sort) or x_1, x_2, ..., y_1, y_2, ... (two sorts).
  The variable x_i (or y_i) carries weight i and every series is truncated
  at a fixed total weight.

Both are immutable values; every operation returns a new object and all
arithmetic is exact over ``Fraction``.  Mixed-cap arithmetic truncates to
the smaller cap, but *comparing* series with different caps raises, so a
test can never silently compare series truncated at different orders.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected an exact rational, got {type(c).__name__}")


class UniSeries:
    """A univariate power series truncated at ``order`` (inclusive)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        coeffs = [_frac(c) for c in coeffs]
        if order is None:
            order = max(len(coeffs) - 1, 0)
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        coeffs = coeffs[: order + 1]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, *a):
        raise AttributeError("UniSeries is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "UniSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "UniSeries":
        return cls([1], order)

    @classmethod
    def x(cls, order: int) -> "UniSeries":
        return cls([0, 1], order)

    @classmethod
    def monomial(cls, n: int, order: int, coeff=1) -> "UniSeries":
        c = [Fraction(0)] * (order + 1)
        if n <= order:
            c[n] = _frac(coeff)
        return cls(c, order)

    # -- access ------------------------------------------------------------

    def coefficient(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficient(n)

    def integer_coefficients(self) -> list[int]:
        """All coefficients as ints; raises if any is non-integral."""
        out = []
        for n, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise ValueError(f"coefficient of x^{n} is non-integral: {c}")
            out.append(c.numerator)
        return out

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, UniSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return UniSeries([other], self.order)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        order = min(self.order, other.order)
        return UniSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(order + 1)], order
        )

    __radd__ = __add__

    def __neg__(self):
        return UniSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            s = _frac(other)
            return UniSeries([c * s for c in self.coeffs], self.order)
        if not isinstance(other, UniSeries):
            return NotImplemented
        order = min(self.order, other.order)
        out = [Fraction(0)] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if a == 0:
                continue
            for j in range(order + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return UniSeries(out, order)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("series powers must be nonnegative integers")
        result = UniSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def substitute_power(self, m: int) -> "UniSeries":
        """Substitute x -> x^m (m >= 1), keeping the truncation order."""
        if m < 1:
            raise ValueError("substitution exponent must be >= 1")
        out = [Fraction(0)] * (self.order + 1)
        for i, c in enumerate(self.coeffs):
            if c != 0 and i * m <= self.order:
                out[i * m] = c
        return UniSeries(out, self.order)

    def shift(self, k: int) -> "UniSeries":
        """Multiply by x^k."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        return UniSeries([Fraction(0)] * k + list(self.coeffs), self.order)

    def truncate(self, order: int) -> "UniSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return UniSeries(self.coeffs[: order + 1], order)

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, UniSeries):
            return NotImplemented
        if self.order != other.order:
            raise ValueError(
                f"comparing series with different truncation orders "
                f"({self.order} vs {other.order})"
            )
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:9])
        if self.order > 8:
            shown += ", ..."
        return f"UniSeries([{shown}], order={self.order})"


# ---------------------------------------------------------------------------
# Index series
# ---------------------------------------------------------------------------

# A monomial is a pair (xpart, ypart); each part is a tuple of (index, exp)
# pairs sorted by index, with index >= 1 and exp >= 1.
Monomial = tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]

MON_ONE: Monomial = ((), ())


def mon_weight(mon: Monomial) -> int:
    return sum(i * e for i, e in mon[0]) + sum(j * e for j, e in mon[1])


def _merge_parts(a, b):
    d = dict(a)
    for i, e in b:
        d[i] = d.get(i, 0) + e
    return tuple(sorted(d.items()))


def mon_mul(a: Monomial, b: Monomial) -> Monomial:
    return (_merge_parts(a[0], b[0]), _merge_parts(a[1], b[1]))


def mon_str(mon: Monomial) -> str:
    bits = []
    for name, part in zip("xy", mon):
        for i, e in part:
            bits.append(f"{name}{i}" if e == 1 else f"{name}{i}^{e}")
    return "*".join(bits) if bits else "1"


def _mon_sort_key(mon: Monomial):
    return (mon_weight(mon), mon[0], mon[1])


class IndexSeries:
    """Sparse cycle-index-style series truncated at a total weight cap."""

    __slots__ = ("sorts", "cap", "terms")

    def __init__(self, sorts: int, cap: int, terms: Mapping[Monomial, object] | None = None):
        if sorts not in (1, 2):
            raise ValueError("sorts must be 1 or 2")
        if cap < 0:
            raise ValueError("weight cap must be nonnegative")
        clean: dict[Monomial, Fraction] = {}
        for mon, c in (terms or {}).items():
            c = _frac(c)
            if c == 0:
                continue
            xpart, ypart = mon
            if ypart and sorts == 1:
                raise ValueError("y variables in a one-sort series")
            mon = (tuple(sorted(xpart)), tuple(sorted(ypart)))
            if any(e <= 0 or i <= 0 for i, e in mon[0] + mon[1]):
                raise ValueError(f"bad monomial {mon}")
            if mon_weight(mon) > cap:
                continue
            clean[mon] = clean.get(mon, Fraction(0)) + c
            if clean[mon] == 0:
                del clean[mon]
        object.__setattr__(self, "sorts", sorts)
        object.__setattr__(self, "cap", cap)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("IndexSeries is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, sorts: int, cap: int) -> "IndexSeries":
        return cls(sorts, cap, {})

    @classmethod
    def constant(cls, c, sorts: int, cap: int) -> "IndexSeries":
        return cls(sorts, cap, {MON_ONE: _frac(c)})

    @classmethod
    def one(cls, sorts: int, cap: int) -> "IndexSeries":
        return cls.constant(1, sorts, cap)

    @classmethod
    def x(cls, i: int, cap: int, sorts: int = 1, exp: int = 1) -> "IndexSeries":
        return cls(sorts, cap, {(((i, exp),), ()): Fraction(1)})

    @classmethod
    def y(cls, j: int, cap: int, exp: int = 1) -> "IndexSeries":
        return cls(2, cap, {((), ((j, exp),)): Fraction(1)})

    @classmethod
    def from_uniseries(cls, u: UniSeries, index: int = 1, cap: int | None = None,
                       sorts: int = 1) -> "IndexSeries":
        """The series u(x_index), truncated at ``cap`` (default: u.order * index)."""
        if cap is None:
            cap = u.order * index
        terms: dict[Monomial, Fraction] = {}
        for n, c in enumerate(u.coeffs):
            if c == 0:
                continue
            mon: Monomial = MON_ONE if n == 0 else ((((index, n),)), ())
            terms[mon] = c
        return cls(sorts, cap, terms)

    # -- access ------------------------------------------------------------

    def coefficient(self, mon: Monomial) -> Fraction:
        mon = (tuple(sorted(mon[0])), tuple(sorted(mon[1])))
        return self.terms.get(mon, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    # -- arithmetic --------------------------------------------------------

    def _check_compat(self, other: "IndexSeries"):
        if self.sorts != other.sorts:
            raise ValueError("mismatched sort counts")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = IndexSeries.constant(other, self.sorts, self.cap)
        if not isinstance(other, IndexSeries):
            return NotImplemented
        self._check_compat(other)
        cap = min(self.cap, other.cap)
        terms = dict(self.terms)
        for mon, c in other.terms.items():
            terms[mon] = terms.get(mon, Fraction(0)) + c
        return IndexSeries(self.sorts, cap, terms)

    __radd__ = __add__

    def __neg__(self):
        return IndexSeries(self.sorts, self.cap, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = IndexSeries.constant(other, self.sorts, self.cap)
        if not isinstance(other, IndexSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            s = _frac(other)
            return IndexSeries(self.sorts, self.cap,
                               {m: c * s for m, c in self.terms.items()})
        if not isinstance(other, IndexSeries):
            return NotImplemented
        self._check_compat(other)
        cap = min(self.cap, other.cap)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            w1 = mon_weight(m1)
            if w1 > cap:
                continue
            for m2, c2 in other.terms.items():
                if w1 + mon_weight(m2) > cap:
                    continue
                m = mon_mul(m1, m2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return IndexSeries(self.sorts, cap, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("series powers must be nonnegative integers")
        result = IndexSeries.one(self.sorts, self.cap)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def truncate(self, cap: int) -> "IndexSeries":
        if cap > self.cap:
            raise ValueError("cannot extend a truncated series")
        return IndexSeries(self.sorts, cap, self.terms)

    def scale_variables(self, factor: int) -> "IndexSeries":
        """Substitute x_i -> x_{factor*i} (and y_j -> y_{factor*j})."""
        if factor < 1:
            raise ValueError("variable scale factor must be >= 1")
        terms = {}
        for (xs, ys), c in self.terms.items():
            mon = (tuple((i * factor, e) for i, e in xs),
                   tuple((j * factor, e) for j, e in ys))
            if mon_weight(mon) <= self.cap:
                terms[mon] = c
        return IndexSeries(self.sorts, self.cap, terms)

    # -- substitution ------------------------------------------------------

    def plethysm(self, g: "IndexSeries") -> "IndexSeries":
        """Plethystic substitution x_i -> g(x_i, x_2i, x_3i, ...).

        Both series must be one-sort.  If g has a nonzero constant term the
        result is only meaningful when self has finitely many terms (all our
        outer series are polynomials); the dropped tail of a truncated outer
        series would otherwise feed back into low weights.
        """
        if self.sorts != 1 or g.sorts != 1:
            raise ValueError("plethysm is defined for one-sort series")
        cap = min(self.cap, g.cap)
        scaled: dict[int, IndexSeries] = {}
        out = IndexSeries.zero(1, cap)
        for (xs, _), c in self.terms.items():
            term = IndexSeries.constant(c, 1, cap)
            for i, e in xs:
                if i not in scaled:
                    scaled[i] = g.scale_variables(i).truncate(min(cap, g.cap))
                term = term * scaled[i] ** e
            out = out + term
        return out

    def substitute_y_series(self, g: "IndexSeries") -> "IndexSeries":
        """Substitute y_j -> g(x_j, x_2j, ...) into a two-sort series.

        Returns a one-sort series; self must have finitely many terms (ours
        are molecular polynomials), so a nonzero constant term in g is fine.
        """
        if self.sorts != 2 or g.sorts != 1:
            raise ValueError("substitute_y_series needs a two-sort target")
        cap = min(self.cap, g.cap)
        scaled: dict[int, IndexSeries] = {}
        out = IndexSeries.zero(1, cap)
        for (xs, ys), c in self.terms.items():
            term = IndexSeries(1, cap, {(xs, ()): c})
            for j, e in ys:
                if j not in scaled:
                    scaled[j] = g.scale_variables(j).truncate(min(cap, g.cap))
                term = term * scaled[j] ** e
            out = out + term
        return out

    def substitute_y_power(self, k: int) -> "IndexSeries":
        """Substitute y_j -> x_j^k (k = 0 erases the y variables)."""
        if self.sorts != 2:
            raise ValueError("substitute_y_power needs a two-sort series")
        if k < 0:
            raise ValueError("power must be nonnegative")
        terms: dict[Monomial, Fraction] = {}
        for (xs, ys), c in self.terms.items():
            extra = tuple((j, e * k) for j, e in ys) if k else ()
            mon = (_merge_parts(xs, extra), ())
            if mon_weight(mon) <= self.cap:
                terms[mon] = terms.get(mon, Fraction(0)) + c
        return IndexSeries(1, self.cap, terms)

    # -- calculus ----------------------------------------------------------

    def _derivative(self, which: int) -> "IndexSeries":
        terms: dict[Monomial, Fraction] = {}
        for mon, c in self.terms.items():
            part = dict(mon[which])
            e = part.get(1, 0)
            if not e:
                continue
            if e == 1:
                del part[1]
            else:
                part[1] = e - 1
            new = list(mon)
            new[which] = tuple(sorted(part.items()))
            new_mon = (new[0], new[1])
            terms[new_mon] = terms.get(new_mon, Fraction(0)) + c * e
        return IndexSeries(self.sorts, self.cap, terms)

    def d_dx1(self) -> "IndexSeries":
        """Formal partial derivative with respect to x_1."""
        return self._derivative(0)

    def d_dy1(self) -> "IndexSeries":
        """Formal partial derivative with respect to y_1."""
        return self._derivative(1)

    # -- specializations ----------------------------------------------------

    def specialize(self, mode: str) -> UniSeries:
        """Collapse a one-sort series to a univariate one.

        ``labelled`` sets x_1 -> x and x_i -> 0 for i >= 2; ``unlabelled``
        and ``asymmetric-bar`` both set x_i -> x^i (which substitution is
        meaningful depends on whether self is a Z- or a Gamma-series).
        """
        if self.sorts != 1:
            raise ValueError("specialize works on one-sort series")
        if mode not in ("labelled", "unlabelled", "asymmetric-bar"):
            raise ValueError(f"unknown specialization mode {mode!r}")
        out = [Fraction(0)] * (self.cap + 1)
        for (xs, _), c in self.terms.items():
            if mode == "labelled":
                if any(i != 1 for i, _ in xs):
                    continue
                deg = sum(e for _, e in xs)
            else:
                deg = sum(i * e for i, e in xs)
            if deg <= self.cap:
                out[deg] += c
        return UniSeries(out, self.cap)

    def specialize_two(self, mode: str) -> dict[tuple[int, int], Fraction]:
        """Bivariate specialization of a two-sort series: {(i, j): coeff of x^i y^j}."""
        if self.sorts != 2:
            raise ValueError("specialize_two works on two-sort series")
        if mode not in ("labelled", "unlabelled", "asymmetric-bar"):
            raise ValueError(f"unknown specialization mode {mode!r}")
        out: dict[tuple[int, int], Fraction] = {}
        for (xs, ys), c in self.terms.items():
            if mode == "labelled":
                if any(i != 1 for i, _ in xs) or any(j != 1 for j, _ in ys):
                    continue
                key = (sum(e for _, e in xs), sum(e for _, e in ys))
            else:
                key = (sum(i * e for i, e in xs), sum(j * e for j, e in ys))
            out[key] = out.get(key, Fraction(0)) + c
            if out[key] == 0:
                del out[key]
        return out

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, IndexSeries):
            return NotImplemented
        if self.sorts != other.sorts:
            raise ValueError("comparing series over different sort counts")
        if self.cap != other.cap:
            raise ValueError(
                f"comparing series with different weight caps ({self.cap} vs {other.cap})"
            )
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.sorts, self.cap, tuple(sorted(self.terms.items()))))

    def sorted_items(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: _mon_sort_key(kv[0]))

    def canonical_text(self) -> str:
        """Deterministic rendering, monomials in (weight, index-lex) order."""
        if not self.terms:
            return "0"
        bits = []
        for mon, c in self.sorted_items():
            coeff = "" if (c == 1 and mon != MON_ONE) else str(c)
            body = mon_str(mon)
            if mon == MON_ONE:
                bits.append(str(c))
            elif coeff:
                bits.append(f"{coeff}*{body}")
            else:
                bits.append(body)
        return " + ".join(bits)

    def to_json_obj(self):
        return {
            "sorts": self.sorts,
            "cap": self.cap,
            "terms": [[mon_str(m), str(c)] for m, c in self.sorted_items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    def __repr__(self):
        text = self.canonical_text()
        if len(text) > 120:
            text = text[:117] + "..."
        return f"IndexSeries(sorts={self.sorts}, cap={self.cap}, {text})"
