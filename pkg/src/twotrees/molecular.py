"""Molecular expansions of plane and planar 2-trees.

A molecular expansion maps structural tags (X^k, E2(X^k), X*C3(X^k),
P4bic(X,X^k), ...) to nonnegative integer multiplicities.  The expansions
of the pointed and unpointed species are computed along two routes:

* the *compositional* route assembles them from the addition formulas for
  E2, C3, P4bic and P6bic applied to the rooted-triangulation series A
  (this is the canonical route); and
* the *printed* route evaluates the published closed-form coefficient
  lists, with their published summation ranges.

The two routes agree except where the printed lists carry typos; those
differences are collected by the report module rather than patched here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .catalan import a_power_coeff, catalan, catalan_list
from .series import IndexSeries, UniSeries
from .species import builtin

PLANE = "plane"
PLANAR = "planar"
FAMILIES = (PLANE, PLANAR)

POINTINGS = ("edge", "triangle", "triangle-edge")


@dataclass(frozen=True)
class Tag:
    """A molecular-species tag; ``fam`` names the shape, ``k`` its argument."""

    fam: str
    k: int = 0

    _DEGREE = {
        "1": lambda k: 0,
        "X": lambda k: k,
        "E2": lambda k: 2 * k,
        "XE2": lambda k: 2 * k + 1,
        "X2E2": lambda k: 2 * k + 2,
        "C3": lambda k: 3 * k,
        "XC3": lambda k: 3 * k + 1,
        "E3": lambda k: 3,
        "XE3": lambda k: 4,
        "P4": lambda k: 4 * k + 2,
        "P6": lambda k: 6 * k + 3,
        "XP6": lambda k: 6 * k + 4,
    }

    def __post_init__(self):
        if self.fam not in self._DEGREE:
            raise ValueError(f"unknown tag family {self.fam!r}")
        if self.k < 0:
            raise ValueError("tag argument must be nonnegative")

    @property
    def degree(self) -> int:
        return self._DEGREE[self.fam](self.k)

    def canonical(self) -> "Tag":
        """Identify the k = 0 degenerate quotients with their classical species."""
        if self.k == 0:
            return _CANONICAL_AT_ZERO.get(self.fam, self)
        return self

    def shift_by_x(self) -> "Tag":
        """The tag of X times this molecular species."""
        fam, k = self.fam, self.k
        if fam == "1":
            return Tag("X", 1)
        if fam == "X":
            return Tag("X", k + 1)
        if fam in _X_SHIFT:
            return Tag(_X_SHIFT[fam], k)
        raise ValueError(f"no tag for X*{self.render()}")

    def index_series(self, kind: str, cap: int) -> IndexSeries:
        return _tag_index_series(self, kind, cap)

    def render(self) -> str:
        fam, k = self.fam, self.k
        if fam == "1":
            return "1"
        if fam == "X":
            return "X" if k == 1 else f"X^{k}"
        arg = "X" if k == 1 else f"X^{k}"
        if fam == "E2":
            return f"E2({arg})"
        if fam == "XE2":
            return f"X*E2({arg})"
        if fam == "X2E2":
            return f"X^2*E2({arg})"
        if fam == "C3":
            return f"C3({arg})"
        if fam == "XC3":
            return f"X*C3({arg})"
        if fam == "E3":
            return "E3(X)"
        if fam == "XE3":
            return "X*E3(X)"
        if fam == "P4":
            return f"P4bic(X,{arg})" if k else "P4bic(X,1)"
        if fam == "P6":
            return f"P6bic(X,{arg})" if k else "P6bic(X,1)"
        if fam == "XP6":
            return f"X*P6bic(X,{arg})" if k else "X*P6bic(X,1)"
        raise AssertionError(fam)

    def sort_key(self):
        return (self.degree, _FAMILY_RANK[self.fam], self.k)


_X_SHIFT = {"E2": "XE2", "XE2": "X2E2", "C3": "XC3", "E3": "XE3", "P6": "XP6"}

_CANONICAL_AT_ZERO = {
    "1": Tag("1"),
    "X": Tag("1"),
    "E2": Tag("1"),
    "XE2": Tag("X", 1),
    "X2E2": Tag("X", 2),
    "C3": Tag("1"),
    "XC3": Tag("X", 1),
    "E3": Tag("E3"),
    "XE3": Tag("XE3"),
    "P4": Tag("E2", 1),
    "P6": Tag("E3"),
    "XP6": Tag("XE3"),
}

# Rendering order within one degree, chosen so the plane expansion prints as
# 1 + X + E2(X) + X^3 + X*C3(X) + 2*E2(X^2) + X^4 + 6*X^5 + ...
_FAMILY_RANK = {
    "1": 0, "C3": 1, "XC3": 2, "E2": 3, "XE2": 4, "X2E2": 5,
    "E3": 6, "XE3": 7, "P4": 8, "P6": 9, "XP6": 10, "X": 11,
}


def _x_power_series(exp: int, cap: int) -> IndexSeries:
    return IndexSeries.one(1, cap) if exp == 0 else IndexSeries.x(1, cap, exp=exp)


@lru_cache(maxsize=None)
def _tag_index_series(tag: Tag, kind: str, cap: int) -> IndexSeries:
    fam, k = tag.fam, tag.k
    if fam == "1":
        return IndexSeries.one(1, cap)
    if fam == "X":
        return _x_power_series(k, cap)
    if fam in ("E2", "XE2", "X2E2"):
        if k == 0:
            return _tag_index_series(tag.canonical(), kind, cap)
        base = builtin("E2", kind, cap).plethysm(_x_power_series(k, cap))
        prefix = {"E2": 0, "XE2": 1, "X2E2": 2}[fam]
        return _x_power_series(prefix, cap) * base
    if fam in ("C3", "XC3"):
        if k == 0:
            return _tag_index_series(tag.canonical(), kind, cap)
        base = builtin("C3", kind, cap).plethysm(_x_power_series(k, cap))
        return base if fam == "C3" else _x_power_series(1, cap) * base
    if fam == "E3":
        return builtin("E3", kind, cap)
    if fam == "XE3":
        return _x_power_series(1, cap) * builtin("E3", kind, cap)
    if fam == "P4":
        if k == 0:
            return _tag_index_series(Tag("E2", 1), kind, cap)
        return builtin("P4bic", kind, cap).substitute_y_power(k)
    if fam in ("P6", "XP6"):
        if k == 0:
            base = builtin("E3", kind, cap)
        else:
            base = builtin("P6bic", kind, cap).substitute_y_power(k)
        return base if fam == "P6" else _x_power_series(1, cap) * base
    raise AssertionError(fam)


class MolecularExpansion:
    """A finite nonnegative-integer combination of molecular tags."""

    def __init__(self, terms: dict[Tag, int], max_degree: int, check_nonneg: bool = True):
        clean: dict[Tag, int] = {}
        for tag, c in terms.items():
            if c == 0:
                continue
            if not isinstance(c, int):
                raise ValueError(f"non-integer multiplicity {c} for {tag.render()}")
            if check_nonneg and c < 0:
                raise ValueError(f"negative multiplicity {c} for {tag.render()}")
            if tag.degree > max_degree:
                continue
            clean[tag] = c
        self.terms = clean
        self.max_degree = max_degree

    def coefficient(self, tag: Tag) -> int:
        return self.terms.get(tag, 0)

    def __add__(self, other: "MolecularExpansion") -> "MolecularExpansion":
        d = min(self.max_degree, other.max_degree)
        terms = dict(self.terms)
        for tag, c in other.terms.items():
            terms[tag] = terms.get(tag, 0) + c
        return MolecularExpansion(terms, d, check_nonneg=False)

    def __sub__(self, other: "MolecularExpansion") -> "MolecularExpansion":
        d = min(self.max_degree, other.max_degree)
        terms = dict(self.terms)
        for tag, c in other.terms.items():
            terms[tag] = terms.get(tag, 0) - c
        return MolecularExpansion(terms, d, check_nonneg=False)

    def shift_by_x(self) -> "MolecularExpansion":
        return MolecularExpansion(
            {tag.shift_by_x(): c for tag, c in self.terms.items()},
            self.max_degree + 1, check_nonneg=False,
        )

    def assert_nonnegative(self) -> "MolecularExpansion":
        for tag, c in self.terms.items():
            if c < 0:
                raise ValueError(f"negative multiplicity {c} for {tag.render()}")
        return self

    def canonical_terms(self) -> dict[Tag, int]:
        """Terms with index-series-equal tags merged (P4bic(X,1) -> E2(X), ...)."""
        out: dict[Tag, int] = {}
        for tag, c in self.terms.items():
            t = tag.canonical()
            out[t] = out.get(t, 0) + c
            if out[t] == 0:
                del out[t]
        return out

    def degree_slice(self, degree: int) -> dict[Tag, int]:
        return {t: c for t, c in self.canonical_terms().items() if t.degree == degree}

    def to_index_series(self, kind: str, cap: int) -> IndexSeries:
        out = IndexSeries.zero(1, cap)
        for tag, c in self.terms.items():
            if tag.degree > cap:
                continue
            out = out + c * tag.index_series(kind, cap)
        return out

    def bar_series(self, order: int | None = None) -> UniSeries:
        """Ordinary generating series of the asymmetric part (X^k and 1 tags)."""
        order = self.max_degree if order is None else order
        coeffs = [Fraction(0)] * (order + 1)
        for tag, c in self.canonical_terms().items():
            if tag.fam == "1":
                coeffs[0] += c
            elif tag.fam == "X" and tag.k <= order:
                coeffs[tag.k] += c
        return UniSeries(coeffs, order)

    def render(self) -> str:
        items = sorted(self.canonical_terms().items(), key=lambda kv: kv[0].sort_key())
        if not items:
            return "0"
        bits = []
        for tag, c in items:
            if tag.fam == "1":
                bits.append(str(c))
            elif c == 1:
                bits.append(tag.render())
            else:
                bits.append(f"{c}*{tag.render()}")
        return " + ".join(bits)

    def to_json_dict(self) -> dict[str, int]:
        return {tag.render(): c
                for tag, c in sorted(self.canonical_terms().items(),
                                     key=lambda kv: kv[0].sort_key())}

    def __eq__(self, other):
        if not isinstance(other, MolecularExpansion):
            return NotImplemented
        return self.canonical_terms() == other.canonical_terms()

    def __repr__(self):
        text = self.render()
        if len(text) > 100:
            text = text[:97] + "..."
        return f"MolecularExpansion(max_degree={self.max_degree}, {text})"


class RouteMismatchError(AssertionError):
    """Raised when two routes that must agree produce different expansions."""


# ---------------------------------------------------------------------------
# Addition formulas: molecular expansion of F(B) for an asymmetric series B.
# ---------------------------------------------------------------------------

def _b_coeffs(b, need: int) -> list[int]:
    if isinstance(b, UniSeries):
        coeffs = b.integer_coefficients()
    else:
        coeffs = list(b)
    if any((not isinstance(c, int)) or c < 0 for c in coeffs):
        raise ValueError("an asymmetric species has nonnegative integer coefficients")
    coeffs += [0] * (need + 1 - len(coeffs))
    return coeffs


def _conv(a: list[int], b: list[int], order: int) -> list[int]:
    out = [0] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x:
            for j in range(order + 1 - i):
                out[i + j] += x * b[j]
    return out


def _at(coeffs: list[int], idx: Fraction) -> int:
    """coeffs[idx] under the fractional-index-is-zero convention."""
    if idx.denominator != 1 or idx < 0:
        return 0
    i = int(idx)
    return coeffs[i] if i < len(coeffs) else 0


def _exact_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ValueError(f"{what} is not an integer: {value}")
    return value.numerator


def add_e2(b, max_degree: int) -> MolecularExpansion:
    """E2(B) = sum b_k E2(X^k) + sum alpha_k X^k for an asymmetric series B."""
    bs = _b_coeffs(b, max_degree)
    b2 = _conv(bs, bs, max_degree)
    terms: dict[Tag, int] = {}
    for k in range(1, max_degree // 2 + 1):
        terms[Tag("E2", k)] = bs[k]
    alpha0 = _exact_int(Fraction(bs[0] * bs[0] + bs[0], 2), "alpha_0")
    terms[Tag("1")] = terms.get(Tag("1"), 0) + alpha0
    for k in range(1, max_degree + 1):
        alpha = Fraction(b2[k], 2) - Fraction(1, 2) * _at(bs, Fraction(k, 2))
        terms[Tag("X", k)] = _exact_int(alpha, f"alpha_{k}")
    return MolecularExpansion(terms, max_degree)


def add_c3(b, max_degree: int) -> MolecularExpansion:
    """C3(B) = sum b_k C3(X^k) + sum beta_k X^k for an asymmetric series B."""
    bs = _b_coeffs(b, max_degree)
    b3 = _conv(_conv(bs, bs, max_degree), bs, max_degree)
    terms: dict[Tag, int] = {}
    for k in range(1, max_degree // 3 + 1):
        terms[Tag("C3", k)] = bs[k]
    beta0 = _exact_int(Fraction(bs[0] ** 3 + 2 * bs[0], 3), "beta_0")
    terms[Tag("1")] = terms.get(Tag("1"), 0) + beta0
    for k in range(1, max_degree + 1):
        beta = Fraction(b3[k], 3) - Fraction(1, 3) * _at(bs, Fraction(k, 3))
        terms[Tag("X", k)] = _exact_int(beta, f"beta_{k}")
    return MolecularExpansion(terms, max_degree)


def add_p4bic(b, max_degree: int) -> MolecularExpansion:
    """Molecular expansion of P4bic(X, B) for an asymmetric series B.

    Tags: X^k (the asymmetric part), E2(X^k), X^2 E2(X^k) and P4bic(X, X^k).
    The asymmetric coefficients follow from the bar specialization of the
    asymmetry index series of the bicolored square,
    (x^2/4)(B^4(x) - 3 B^2(x^2) + 2 B(x^4)).
    """
    bs = _b_coeffs(b, max_degree)
    b2 = _conv(bs, bs, max_degree)
    b4 = _conv(b2, b2, max_degree)
    terms: dict[Tag, int] = {}
    for k in range(max_degree + 1):
        a1 = (Fraction(_at(b4, Fraction(k - 2)), 4)
              - Fraction(3, 4) * _at(b2, Fraction(k - 2, 2))
              + Fraction(1, 2) * _at(bs, Fraction(k - 2, 4)))
        if k == 0:
            terms[Tag("1")] = terms.get(Tag("1"), 0) + _exact_int(a1, "a'_0")
        else:
            terms[Tag("X", k)] = _exact_int(a1, f"a'_{k}")
    for k in range(1, max_degree // 2 + 1):
        a2 = Fraction(_at(b2, Fraction(k - 1)) - _at(bs, Fraction(k - 1, 2)))
        terms[Tag("E2", k)] = _exact_int(a2, f"a''_{k}")
    for k in range(1, (max_degree - 2) // 2 + 1):
        a3 = Fraction(_at(b2, Fraction(k)) - _at(bs, Fraction(k, 2)), 2)
        terms[Tag("X2E2", k)] = _exact_int(a3, f"a'''_{k}")
    for k in range((max_degree - 2) // 4 + 1):
        terms[Tag("P4", k)] = bs[k]
    return MolecularExpansion(terms, max_degree)


def add_p6bic(b, max_degree: int) -> MolecularExpansion:
    """Molecular expansion of P6bic(X, B) for an asymmetric series B.

    Tags: X^k, X E2(X^k), C3(X^k) and P6bic(X, X^k).  The asymmetric part is
    the bar specialization of the asymmetry index series of the bicolored
    hexagon, (x^3/6)(B^6(x) - 3 B^3(x^2) - B^2(x^3) + 3 B(x^6)); note that
    this differs from one published display of the same coefficients, which
    the report module tracks as a known discrepancy.
    """
    bs = _b_coeffs(b, max_degree)
    b2 = _conv(bs, bs, max_degree)
    b3 = _conv(b2, bs, max_degree)
    b6 = _conv(b3, b3, max_degree)
    terms: dict[Tag, int] = {}
    for k in range(max_degree + 1):
        d1 = (Fraction(_at(b6, Fraction(k - 3)), 6)
              - Fraction(1, 2) * _at(b3, Fraction(k - 3, 2))
              - Fraction(1, 6) * _at(b2, Fraction(k - 3, 3))
              + Fraction(1, 2) * _at(bs, Fraction(k - 3, 6)))
        if k == 0:
            terms[Tag("1")] = terms.get(Tag("1"), 0) + _exact_int(d1, "d'_0")
        else:
            terms[Tag("X", k)] = _exact_int(d1, f"d'_{k}")
    for k in range(1, (max_degree - 1) // 2 + 1):
        d2 = Fraction(_at(b3, Fraction(k - 1)) - _at(bs, Fraction(k - 1, 3)))
        terms[Tag("XE2", k)] = _exact_int(d2, f"d''_{k}")
    for k in range(1, max_degree // 3 + 1):
        d3 = Fraction(_at(b2, Fraction(k - 1)) - _at(bs, Fraction(k - 1, 2)), 2)
        terms[Tag("C3", k)] = _exact_int(d3, f"d'''_{k}")
    for k in range((max_degree - 3) // 6 + 1):
        terms[Tag("P6", k)] = bs[k]
    return MolecularExpansion(terms, max_degree)


def product_expansion(u: UniSeries, max_degree: int) -> MolecularExpansion:
    """An asymmetric series as an expansion: sum u_k X^k (all multiplicities)."""
    terms: dict[Tag, int] = {}
    for k, c in enumerate(u.integer_coefficients()[: max_degree + 1]):
        terms[Tag("1") if k == 0 else Tag("X", k)] = c
    return MolecularExpansion(terms, max_degree)


# ---------------------------------------------------------------------------
# Plane 2-trees
# ---------------------------------------------------------------------------

def _a_coeffs(order: int) -> list[int]:
    return catalan_list(order)


def plane_coefficient_b(k) -> Fraction:
    """Closed-form multiplicity of X^k in the plane expansion (k >= 2)."""
    k = Fraction(k)
    return (Fraction(2, 3) * catalan(k) - Fraction(1, 6) * catalan(k + 1)
            - Fraction(1, 2) * catalan(k / 2) - Fraction(1, 3) * catalan((k - 1) / 3))


def plane_expansion_compositional(max_degree: int) -> MolecularExpansion:
    """E2(A) + X*C3(A) - A_+*A, assembled from the addition formulas."""
    a = _a_coeffs(max_degree)
    e2_part = add_e2(a, max_degree)
    c3_part = add_c3(_a_coeffs(max_degree - 1), max_degree - 1).shift_by_x() \
        if max_degree >= 1 else MolecularExpansion({}, max_degree)
    aa = UniSeries([catalan(k + 1) - catalan(k) for k in range(max_degree + 1)])
    return (e2_part + c3_part - product_expansion(aa, max_degree)).assert_nonnegative()


def plane_expansion_closed_form(max_degree: int) -> MolecularExpansion:
    """1 + X + sum b_k X^k + sum c_k E2(X^k) + sum c_k X C3(X^k)."""
    terms: dict[Tag, int] = {Tag("1"): 1}
    if max_degree >= 1:
        terms[Tag("X", 1)] = 1
    for k in range(2, max_degree + 1):
        terms[Tag("X", k)] = _exact_int(plane_coefficient_b(k), f"b_{k}")
    for k in range(1, max_degree // 2 + 1):
        terms[Tag("E2", k)] = catalan(k)
    for k in range(1, (max_degree - 1) // 3 + 1):
        terms[Tag("XC3", k)] = catalan(k)
    return MolecularExpansion(terms, max_degree)


@lru_cache(maxsize=None)
def plane_expansion(max_degree: int) -> MolecularExpansion:
    """Molecular expansion of plane 2-trees; both routes must agree exactly."""
    comp = plane_expansion_compositional(max_degree)
    closed = plane_expansion_closed_form(max_degree)
    if comp != closed:
        raise RouteMismatchError(
            "plane expansion: compositional and closed-form routes disagree"
        )
    return comp


# ---------------------------------------------------------------------------
# Planar 2-trees: the three pointed species and the unpointed species
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def planar_pointed_expansion(which: str, max_degree: int) -> MolecularExpansion:
    """Canonical (compositional) expansion of a pointed planar species.

    edge:          1 + X*E2(A) + P4bic(X, A)
    triangle:      X + X^2*E2(A) + X*E2(A_+) + X*P6bic(X, A)
    triangle-edge: X*E2(A) + X^2*E2(A^2)
    """
    d = max_degree
    a = _a_coeffs(d)
    if which == "edge":
        out = MolecularExpansion({Tag("1"): 1}, d)
        if d >= 1:
            out = out + add_e2(a, d - 1).shift_by_x()
        out = out + add_p4bic(a, d)
        return out.assert_nonnegative()
    if which == "triangle":
        terms = {Tag("X", 1): 1} if d >= 1 else {}
        out = MolecularExpansion(terms, d)
        if d >= 2:
            out = out + add_e2(a, d - 2).shift_by_x().shift_by_x()
        if d >= 1:
            a_plus = [0] + a[1:]
            out = out + add_e2(a_plus, d - 1).shift_by_x()
            out = out + add_p6bic(a, d - 1).shift_by_x()
        return out.assert_nonnegative()
    if which == "triangle-edge":
        out = MolecularExpansion({}, d)
        if d >= 1:
            out = out + add_e2(a, d - 1).shift_by_x()
        if d >= 2:
            a2 = [a_power_coeff(2, k) for k in range(d - 1)]
            out = out + add_e2(a2, d - 2).shift_by_x().shift_by_x()
        return out.assert_nonnegative()
    raise ValueError(f"unknown pointing {which!r}")


@lru_cache(maxsize=None)
def planar_expansion(max_degree: int) -> MolecularExpansion:
    """Molecular expansion of planar 2-trees via the dissymmetry combination."""
    out = (planar_pointed_expansion("edge", max_degree)
           + planar_pointed_expansion("triangle", max_degree)
           - planar_pointed_expansion("triangle-edge", max_degree))
    return out.assert_nonnegative()


# -- printed coefficient lists (evaluated exactly as displayed) --------------

def _cat(x) -> Fraction:
    return Fraction(catalan(Fraction(x)))


def planar_printed_coefficients(which: str, k) -> dict[str, Fraction]:
    """The published closed-form coefficient lists for the planar expansions.

    ``which`` is one of the three pointings or "unpointed"; keys of the
    result name the tag family each coefficient multiplies.
    """
    k = Fraction(k)
    if which == "edge":
        return {
            "X": Fraction(1, 4) * _cat(k + 1) - Fraction(3, 4) * _cat(k / 2)
            - Fraction(1, 2) * _cat((k - 1) / 2) + Fraction(1, 2) * _cat((k - 2) / 4),
            "E2": _cat(k) - _cat((k - 1) / 2),
            "XE2": _cat(k),
            "X2E2": Fraction(1, 2) * (_cat(k + 1) - _cat(k / 2)),
            "P4": _cat(k),
        }
    if which == "triangle":
        return {
            "X": Fraction(1, 6) * (_cat(k + 1) - _cat(k)) - Fraction(1, 2) * _cat(k / 2)
            - _cat((k - 2) / 2) - Fraction(1, 2) * _cat((k - 1) / 2)
            - Fraction(1, 6) * _cat((k - 1) / 3) + Fraction(1, 2) * _cat((k - 4) / 6),
            "XE2": _cat(k),
            "X2E2": _cat(k + 1) - _cat((k - 1) / 3),
            "XC3": Fraction(1, 2) * (_cat(k) - _cat((k - 1) / 2)),
            "XP6": _cat(k),
        }
    if which == "triangle-edge":
        return {
            "X": Fraction(1, 2) * (_cat(k + 1) - _cat(k) - _cat((k - 1) / 2) - _cat(k / 2)),
            "XE2": _cat(k),
            "X2E2": _cat(k + 1),
        }
    if which == "unpointed":
        return {
            "X": -Fraction(1, 12) * _cat(k + 1) + Fraction(1, 3) * _cat(k)
            - Fraction(3, 4) * _cat(k / 2) - Fraction(1, 2) * _cat((k - 1) / 2)
            - Fraction(1, 6) * _cat((k - 1) / 3) + Fraction(1, 2) * _cat((k - 2) / 4)
            + Fraction(1, 2) * _cat((k - 4) / 6),
            "E2": _cat(k) - _cat((k - 1) / 2),
            "XE2": _cat(k),
            "X2E2": Fraction(1, 2) * (_cat(k + 1) - _cat(k / 2)) - _cat((k - 1) / 3),
            "XC3": Fraction(1, 2) * (_cat(k) - _cat((k - 1) / 2)),
            "P4": _cat(k),
            "XP6": _cat(k),
        }
    raise ValueError(f"unknown expansion {which!r}")


# The published summation ranges: {tag family: first k}.  A constant entry
# of None under "const" means the display carries no standalone constant.
PRINTED_RANGES = {
    "edge": {"const": 1, "X": 0, "E2": 1, "XE2": 1, "X2E2": 1, "P4": 1},
    "triangle": {"const": 1, "X": 0, "XE2": 1, "X2E2": 2, "XC3": 2, "XP6": 2},
    "triangle-edge": {"const": None, "X": 0, "XE2": 1, "X2E2": 1},
    "unpointed": {"const": 1, "X": 1, "E2": 1, "XE2": 1, "X2E2": 2,
                  "XC3": 2, "P4": 0, "XP6": 0},
}


def planar_printed_expansion(which: str, max_degree: int) -> dict[Tag, Fraction]:
    """The printed expansion, with its printed ranges; may carry non-integers."""
    ranges = PRINTED_RANGES[which]
    out: dict[Tag, Fraction] = {}
    if ranges["const"] is not None:
        out[Tag("1")] = Fraction(ranges["const"])
    for fam, start in ranges.items():
        if fam == "const":
            continue
        k = start
        while True:
            degree = k if fam == "X" else Tag(fam, k).degree
            if degree > max_degree:
                break
            tag = (Tag("1") if k == 0 else Tag("X", k)) if fam == "X" else Tag(fam, k)
            c = planar_printed_coefficients(which, k)[fam]
            if c:
                out[tag] = out.get(tag, Fraction(0)) + c
            k += 1
    return {t: c for t, c in out.items() if c}
