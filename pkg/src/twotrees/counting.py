"""Closed-form counting and generating series for plane and planar 2-trees.

Every count is available along up to three routes:

* ``series`` -- coefficient extraction from the canonical generating
  series, built from the rooted series A by the substitution calculus
  (this is the route the rest of the package treats as authoritative);
* ``formula`` -- the published closed form, evaluated exactly as printed
  (several of these carry typos or restricted validity ranges; they are
  compared, not trusted);
* ``oracle`` -- exhaustive orbit counting over polygon triangulations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import oracle as oracle_mod
from .catalan import a_plus_series, a_series, catalan
from .molecular import PLANAR, PLANE, plane_expansion, planar_expansion
from .series import IndexSeries, UniSeries

FAMILIES = (PLANE, PLANAR)
POINTINGS = ("none", "edge", "triangle", "triangle-edge")
MODES = ("labelled", "unlabelled", "asymmetric")
ROUTES = ("formula", "series", "oracle")

_ORACLE_GROUP = {PLANE: "cyclic", PLANAR: "dihedral"}


@dataclass(frozen=True)
class CountKind:
    family: str
    pointing: str = "none"
    mode: str = "unlabelled"

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}")
        if self.pointing not in POINTINGS:
            raise ValueError(f"pointing must be one of {POINTINGS}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.family == PLANAR and self.pointing != "none" and self.mode == "asymmetric":
            raise ValueError(
                "asymmetric counts of pointed planar 2-trees have no closed form here; "
                "only unpointed and plane-pointed asymmetric counts are supported"
            )


def all_count_kinds() -> list[CountKind]:
    kinds = []
    for family in FAMILIES:
        for pointing in POINTINGS:
            for mode in MODES:
                if family == PLANAR and pointing != "none" and mode == "asymmetric":
                    continue
                kinds.append(CountKind(family, pointing, mode))
    return kinds


# ---------------------------------------------------------------------------
# Canonical generating series (exact A-expressions)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def gf(family: str, pointing: str, form: str, order: int) -> UniSeries:
    """Canonical generating series: ``form`` is "egf", "ogf" or "bar".

    The egf carries coefficients f_n / n!.  All three are assembled from
    A = 1 + x A^2, its powers, and substitutions x -> x^m; the unpointed
    series follow from the pointed ones by the dissymmetry combination
    edge + triangle - triangle-edge.
    """
    if form not in ("egf", "ogf", "bar"):
        raise ValueError(f"unknown series form {form!r}")
    if family not in FAMILIES or pointing not in POINTINGS:
        raise ValueError("unknown family/pointing")
    o = order
    A = a_series(o)
    Ap = a_plus_series(o)
    x = UniSeries.x(o)
    A2 = A * A
    half, third = Fraction(1, 2), Fraction(1, 3)

    def sub(series: UniSeries, m: int) -> UniSeries:
        return series.substitute_power(m)

    if family == PLANE:
        if pointing == "edge":
            if form == "egf":
                return half * (1 + A2)
            if form == "ogf":
                return half * (A2 + sub(A, 2))
            return 1 + half * (A2 - sub(A, 2))
        if pointing == "triangle":
            if form == "egf":
                return third * x * (2 + A2 * A)
            if form == "ogf":
                return third * x * (A2 * A + 2 * sub(A, 3))
            return x + third * x * (A2 * A - sub(A, 3))
        if pointing == "triangle-edge":
            return A2 - A
        # unpointed
        if form == "egf":
            return half + Fraction(2, 3) * x + A - half * A2 + third * x * A2 * A
        if form == "ogf":
            return (A + third * x * A2 * A + half * sub(A, 2)
                    + Fraction(2, 3) * x * sub(A, 3) - half * A2)
        return (1 + x + A + third * x * A2 * A - half * sub(A, 2)
                - third * x * sub(A, 3) - half * A2)

    # planar
    A4 = A2 * A2
    if pointing == "edge":
        if form == "egf":
            return 1 + half * x * (1 + A2) + Fraction(1, 4) * x * x * (1 + A4)
        if form == "ogf":
            return (1 + half * x * (A2 + sub(A, 2))
                    + Fraction(1, 4) * x * x * (A4 + 3 * sub(A, 2) ** 2))
        raise ValueError("no asymmetric series for pointed planar 2-trees")
    if pointing == "triangle":
        if form == "egf":
            return (x + half * x * x * (1 + A2) + half * x * Ap * Ap
                    + Fraction(1, 6) * x ** 4 * A4 * A2)
        if form == "ogf":
            return (x + half * x * x * (A2 + sub(A, 2))
                    + half * x * (Ap * Ap + sub(Ap, 2))
                    + Fraction(1, 6) * x ** 4
                    * (A4 * A2 + 2 * sub(A, 3) ** 2 + 3 * sub(A, 2) ** 3))
        raise ValueError("no asymmetric series for pointed planar 2-trees")
    if pointing == "triangle-edge":
        if form == "egf":
            return half * x * (1 + A2) + half * x * x * (1 + A4)
        if form == "ogf":
            return (half * x * (A2 + sub(A, 2))
                    + half * x * x * (A4 + sub(A, 2) ** 2))
        raise ValueError("no asymmetric series for pointed planar 2-trees")
    # unpointed
    if form == "bar":
        return planar_expansion(o).bar_series(o)
    return (gf(family, "edge", form, o) + gf(family, "triangle", form, o)
            - gf(family, "triangle-edge", form, o))


def count(kind: CountKind, n: int, route: str = "series",
          oracle_max: int = oracle_mod.DEFAULT_MAX_N) -> int:
    """The number of structures of the given kind on n triangles."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if route == "series":
        if kind.mode == "labelled":
            c = gf(kind.family, kind.pointing, "egf", n).coefficient(n) * factorial(n)
        elif kind.mode == "unlabelled":
            c = gf(kind.family, kind.pointing, "ogf", n).coefficient(n)
        else:
            c = gf(kind.family, kind.pointing, "bar", n).coefficient(n)
        if c.denominator != 1 or c < 0:
            raise AssertionError(f"canonical count came out invalid: {c}")
        return int(c)
    if route == "formula":
        v = formula_value(kind, n)
        if v.denominator != 1:
            raise FormulaAnomaly(
                f"{formula_name(kind)} is non-integral at n={n}: {v}"
            )
        return int(v)
    if route == "oracle":
        return count_oracle(kind, n, oracle_max)
    raise ValueError(f"route must be one of {ROUTES}")


def count_oracle(kind: CountKind, n: int, oracle_max: int = oracle_mod.DEFAULT_MAX_N) -> int:
    data = oracle_mod.oracle_counts(n, _ORACLE_GROUP[kind.family], kind.pointing,
                                    max_n=oracle_max)
    return data[kind.mode]


class FormulaAnomaly(ValueError):
    """A printed closed form produced a non-integral count."""


# ---------------------------------------------------------------------------
# Printed closed forms, evaluated exactly as displayed
# ---------------------------------------------------------------------------

def _cat(x) -> Fraction:
    return Fraction(catalan(Fraction(x)))


def _plane_none(mode: str, n: Fraction) -> Fraction:
    base = Fraction(2, 3) * _cat(n) - Fraction(1, 6) * _cat(n + 1)
    if mode == "labelled":
        return factorial(int(n)) * base
    if mode == "unlabelled":
        return base + Fraction(1, 2) * _cat(n / 2) + Fraction(2, 3) * _cat((n - 1) / 3)
    # the printed display divides the dropped term's index by 3, not 2
    return base - Fraction(1, 2) * _cat(n / 3) - Fraction(1, 3) * _cat((n - 1) / 3)


def _planar_none(mode: str, n: Fraction) -> Fraction:
    base = Fraction(1, 3) * _cat(n) - Fraction(1, 12) * _cat(n + 1)
    if mode == "labelled":
        return factorial(int(n)) * base
    if mode == "unlabelled":
        return (base + Fraction(1, 2) * _cat((n - 1) / 2)
                + Fraction(1, 3) * _cat((n - 1) / 3) + Fraction(3, 4) * _cat(n / 2))
    return (-Fraction(1, 12) * _cat(n + 1) + Fraction(1, 3) * _cat(n)
            - Fraction(3, 4) * _cat(n / 2) - Fraction(1, 2) * _cat((n - 1) / 2)
            - Fraction(1, 6) * _cat((n - 1) / 3) + Fraction(1, 2) * _cat((n - 2) / 4)
            + Fraction(1, 2) * _cat((n - 4) / 6))


_PLANE_POINTED = {
    ("edge", "labelled"): lambda n: Fraction(factorial(int(n)), 2) * _cat(n + 1),
    ("edge", "unlabelled"): lambda n: Fraction(1, 2) * (_cat(n + 1) + _cat(n / 2)),
    ("edge", "asymmetric"): lambda n: Fraction(1, 2) * (_cat(n + 1) - _cat(n / 2)),
    ("triangle", "labelled"):
        lambda n: Fraction(factorial(int(n)), 3) * (_cat(n + 1) - _cat(n)),
    ("triangle", "unlabelled"):
        lambda n: Fraction(1, 3) * (_cat(n + 1) - _cat(n) + 2 * _cat((n - 1) / 3)),
    ("triangle", "asymmetric"):
        lambda n: Fraction(1, 3) * (_cat(n + 1) - _cat(n) - _cat((n - 1) / 3)),
    ("triangle-edge", "labelled"):
        lambda n: factorial(int(n)) * (_cat(n + 1) - _cat(n)),
    ("triangle-edge", "unlabelled"): lambda n: _cat(n + 1) - _cat(n),
    ("triangle-edge", "asymmetric"): lambda n: _cat(n + 1) - _cat(n),
}


def _planar_triangle_unlabelled(n: Fraction) -> Fraction:
    small = {1: 1, 2: 1, 3: 2, 4: 6}
    if n in small:
        return Fraction(small[int(n)])
    return (Fraction(1, 6) * (_cat(n + 1) - _cat(n))
            + Fraction(1, 2) * (_cat((n - 1) / 2) + _cat(n / 2))
            + Fraction(1, 3) * _cat((n - 1) / 3))


_PLANAR_POINTED = {
    ("edge", "labelled"): lambda n: Fraction(factorial(int(n)), 4) * _cat(n + 1),
    ("edge", "unlabelled"):
        lambda n: (Fraction(1, 4) * _cat(n + 1) + Fraction(1, 2) * _cat((n - 1) / 2)
                   + Fraction(3, 4) * _cat(n / 2)),
    ("triangle", "labelled"):
        lambda n: Fraction(factorial(int(n)), 6) * (_cat(n + 1) - _cat(n)),
    ("triangle", "unlabelled"): _planar_triangle_unlabelled,
    # the printed display omits the 1/2 in front of the two symmetric terms
    ("triangle-edge", "labelled"):
        lambda n: Fraction(factorial(int(n)), 2) * (_cat(n + 1) - _cat(n)),
    ("triangle-edge", "unlabelled"):
        lambda n: (Fraction(1, 2) * (_cat(n + 1) - _cat(n))
                   + _cat((n - 1) / 2) + _cat(n / 2)),
}


def formula_value(kind: CountKind, n: int) -> Fraction:
    """The printed closed form for the count, with no range policing."""
    m = Fraction(n)
    if kind.pointing == "none":
        return _plane_none(kind.mode, m) if kind.family == PLANE else _planar_none(kind.mode, m)
    table = _PLANE_POINTED if kind.family == PLANE else _PLANAR_POINTED
    return table[(kind.pointing, kind.mode)](m)


def formula_name(kind: CountKind) -> str:
    return f"count:{kind.family}/{kind.pointing}/{kind.mode}"


# ---------------------------------------------------------------------------
# Index series of the unpointed species
# ---------------------------------------------------------------------------

def index_series(family: str, kind: str, cap: int) -> IndexSeries:
    """Explicit cycle/asymmetry index series of the unpointed species.

    For plane 2-trees these are direct x1/x2/x3 expansions; the planar
    Gamma series is the published seven-family expansion; the planar Z
    series is assembled from the pointed species by dissymmetry.  All of
    them must (and do) agree with the molecular-expansion route, which the
    test suite checks.
    """
    if kind not in ("Z", "gamma"):
        raise ValueError("kind must be 'Z' or 'gamma'")
    A1 = IndexSeries.from_uniseries(a_series(cap), 1, cap)
    A2 = _a_of_xi(2, cap)
    A3 = _a_of_xi(3, cap)
    x1 = IndexSeries.x(1, cap)
    if family == PLANE:
        body = A1 + Fraction(1, 3) * x1 * A1 ** 3 - Fraction(1, 2) * A1 * A1
        if kind == "Z":
            return body + Fraction(1, 2) * A2 + Fraction(2, 3) * x1 * A3
        return 1 + x1 + body - Fraction(1, 2) * A2 - Fraction(1, 3) * x1 * A3
    if family == PLANAR:
        if kind == "Z":
            return _planar_z_by_dissymmetry(cap)
        return _planar_gamma_printed(cap)
    raise ValueError(f"unknown family {family!r}")


def _a_of_xi(i: int, cap: int) -> IndexSeries:
    return IndexSeries.from_uniseries(a_series(max(cap // i, 0)), i, cap)


def _planar_z_by_dissymmetry(cap: int) -> IndexSeries:
    from .species import builtin
    A1 = IndexSeries.from_uniseries(a_series(cap), 1, cap)
    Ap1 = IndexSeries.from_uniseries(a_plus_series(cap), 1, cap)
    x1 = IndexSeries.x(1, cap)
    zE2A = builtin("E2", "Z", cap).plethysm(A1)
    zE2Ap = builtin("E2", "Z", cap).plethysm(Ap1)
    zE2A2 = builtin("E2", "Z", cap).plethysm(A1 * A1)
    zP4 = builtin("P4bic", "Z", cap).substitute_y_series(A1)
    zP6 = builtin("P6bic", "Z", cap).substitute_y_series(A1)
    edge = 1 + x1 * zE2A + zP4
    tri = x1 + x1 * x1 * zE2A + x1 * zE2Ap + x1 * zP6
    triedge = x1 * zE2A + x1 * x1 * zE2A2
    return edge + tri - triedge


def _planar_gamma_printed(cap: int) -> IndexSeries:
    terms: dict = {}

    def put(coeff: Fraction, xs: tuple):
        if coeff:
            mon = (tuple(xs), ())
            terms[mon] = terms.get(mon, Fraction(0)) + coeff

    put(Fraction(1), ())
    put(Fraction(1), ((1, 1),))
    for n in range(2, cap + 1):
        put(-Fraction(1, 12) * _cat(n + 1) + Fraction(1, 3) * _cat(n), ((1, n),))
    n = 1
    while 2 * n <= cap:
        put(-Fraction(1, 2) * _cat(n), ((2, n),))
        n += 1
    n = 1
    while 2 * n + 1 <= cap:
        put(-Fraction(1, 2) * _cat(n), ((1, 1), (2, n)))
        n += 1
    n = 1
    while 2 * n + 2 <= cap:
        put(-Fraction(1, 4) * _cat(n + 1), ((1, 2), (2, n)))
        n += 1
    n = 1
    while 3 * n + 1 <= cap:
        put(-Fraction(1, 6) * _cat(n), ((1, 1), (3, n)))
        n += 1
    n = 1
    while 4 * n + 2 <= cap:
        put(Fraction(1, 2) * _cat(n), ((2, 1), (4, n)))
        n += 1
    n = 0
    while 6 * n + 4 <= cap:
        put(Fraction(1, 2) * _cat(n), ((1, 1), (3, 1), (6, n)) if n else ((1, 1), (3, 1)))
        n += 1
    return IndexSeries(1, cap, terms)


# ---------------------------------------------------------------------------
# The Palmer-Read recombination route
# ---------------------------------------------------------------------------

def labelled_formula_series(family: str, order: int) -> UniSeries:
    """The closed-form labelled coefficients as a power series in x."""
    if family == PLANE:
        coeffs = [Fraction(2, 3) * _cat(n) - Fraction(1, 6) * _cat(n + 1)
                  for n in range(order + 1)]
    else:
        coeffs = [Fraction(1, 3) * _cat(n) - Fraction(1, 12) * _cat(n + 1)
                  for n in range(order + 1)]
    return UniSeries(coeffs, order)


def symmetric_part_series(family: str, k: int, order: int) -> UniSeries:
    """The published series of structures with stabilizer order exactly k >= 2."""
    A = a_series(order)
    x = UniSeries.x(order)

    def s(m):
        return A.substitute_power(m)

    if family == PLANE:
        table = {2: s(2), 3: x * s(3)}
    else:
        table = {
            2: Fraction(3, 2) * (s(2) - x ** 2 * s(4)) + x * s(2) - x ** 4 * s(6),
            3: Fraction(1, 2) * (x * s(3) - x ** 4 * s(6)),
            4: x ** 2 * s(4),
            6: x ** 4 * s(6),
        }
    if k not in table:
        raise ValueError(f"no stabilizer-order-{k} part for {family} 2-trees")
    return table[k]


def palmer_read(family: str, order: int) -> UniSeries:
    """Unlabelled ogf recombined from the symmetric-part decomposition.

    The labelled term is the closed-form coefficient series (not the true
    egf, which deviates from it below n = 2 for plane and n = 3 for planar
    2-trees); with that reading the recombination reproduces the unlabelled
    series at every order.
    """
    base = labelled_formula_series(family, order)
    if family == PLANE:
        ks = (2, 3)
    else:
        ks = (2, 3, 4, 6)
    out = base
    for k in ks:
        out = out + Fraction(k - 1, k) * symmetric_part_series(family, k, order)
    return out


# ---------------------------------------------------------------------------
# Table export
# ---------------------------------------------------------------------------

def table_rows(kinds, n_values, routes=("series",),
               oracle_max: int = oracle_mod.DEFAULT_MAX_N) -> list[dict]:
    """Rows of {n, family, pointing, mode, value, route} for export."""
    rows = []
    for kind in kinds:
        for route in routes:
            for n in n_values:
                if route == "formula":
                    v = formula_value(kind, n)
                    value = str(v) if v.denominator != 1 else str(int(v))
                else:
                    value = str(count(kind, n, route, oracle_max))
                rows.append({
                    "n": n,
                    "family": kind.family,
                    "pointing": kind.pointing,
                    "mode": kind.mode,
                    "value": value,
                    "route": route,
                })
    return rows
