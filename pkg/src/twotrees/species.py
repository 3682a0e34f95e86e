"""Cycle and asymmetry index series of the named species.

The closed forms for E2, E3, C3, L2 and the two bicolored-polygon species
are available both directly and through small permutation groups acting on
two sorts of points, so every closed form can be cross-checked against the
group-theoretic definition (average of cycle-type monomials for Z, a
Moebius sum over the subgroup lattice for Gamma).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .series import IndexSeries, Monomial

Perm = tuple[int, ...]
Element = tuple[Perm, Perm]

KINDS = ("Z", "gamma")


def _identity(n: int) -> Perm:
    return tuple(range(n))


def perm_compose(p: Perm, q: Perm) -> Perm:
    """p after q: (p*q)[i] = p[q[i]]."""
    return tuple(p[q[i]] for i in range(len(q)))


def element_compose(a: Element, b: Element) -> Element:
    return (perm_compose(a[0], b[0]), perm_compose(a[1], b[1]))


def cycle_counts(p: Perm) -> dict[int, int]:
    """{cycle length: number of cycles} of a permutation."""
    seen = [False] * len(p)
    counts: dict[int, int] = {}
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        counts[length] = counts.get(length, 0) + 1
    return counts


def orbit_size_counts(perms, n: int) -> dict[int, int]:
    """{orbit size: count} for the group generated by ``perms`` acting on [n]."""
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for p in perms:
        for i in range(n):
            a, b = find(i), find(p[i])
            if a != b:
                parent[a] = b
    sizes: dict[int, int] = {}
    for i in range(n):
        sizes[find(i)] = sizes.get(find(i), 0) + 1
    counts: dict[int, int] = {}
    for s in sizes.values():
        counts[s] = counts.get(s, 0) + 1
    return counts


class PermGroupTwoSort:
    """A group of simultaneous permutations of n X-points and m Y-points."""

    def __init__(self, n: int, m: int, elements):
        elements = frozenset(elements)
        ident = (_identity(n), _identity(m))
        if ident not in elements:
            raise ValueError("group must contain the identity")
        for a in elements:
            if len(a[0]) != n or len(a[1]) != m:
                raise ValueError("element degree mismatch")
            for b in elements:
                if element_compose(a, b) not in elements:
                    raise ValueError("element set is not closed under composition")
        self.n = n
        self.m = m
        self.elements = elements

    @classmethod
    def from_generators(cls, n: int, m: int, generators) -> "PermGroupTwoSort":
        elems = {(_identity(n), _identity(m))}
        frontier = [tuple(g) for g in generators]
        elems.update((tuple(gx), tuple(gy)) for gx, gy in frontier)
        changed = True
        while changed:
            changed = False
            for a in list(elems):
                for b in list(elems):
                    c = element_compose(a, b)
                    if c not in elems:
                        elems.add(c)
                        changed = True
        return cls(n, m, elems)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(sorted(self.elements))

    def subgroups(self, limit: int = 24) -> list[frozenset]:
        """All subgroups, as frozensets of elements (brute-force closure)."""
        if self.order > limit:
            raise ValueError(
                f"group of order {self.order} exceeds the subgroup-enumeration "
                f"bound {limit}"
            )
        ident = (_identity(self.n), _identity(self.m))

        def closure(seed: frozenset) -> frozenset:
            elems = set(seed)
            changed = True
            while changed:
                changed = False
                for a in list(elems):
                    for b in list(elems):
                        c = element_compose(a, b)
                        if c not in elems:
                            elems.add(c)
                            changed = True
            return frozenset(elems)

        found = {frozenset([ident])}
        frontier = [frozenset([ident])]
        while frontier:
            new_frontier = []
            for sub in frontier:
                for g in self.elements:
                    if g in sub:
                        continue
                    bigger = closure(sub | {g})
                    if bigger not in found:
                        found.add(bigger)
                        new_frontier.append(bigger)
            frontier = new_frontier
        return sorted(found, key=lambda s: (len(s), sorted(s)))

    def moebius_from_bottom(self, limit: int = 24) -> dict[frozenset, int]:
        """mu({1}, V) for every subgroup V, from the defining recursion."""
        subs = self.subgroups(limit)
        mu: dict[frozenset, int] = {}
        for v in subs:  # sorted by size, so proper subgroups come first
            if len(v) == 1:
                mu[v] = 1
            else:
                mu[v] = -sum(mu[w] for w in subs if w != v and w <= v)
        return mu


def _monomial_from_counts(xc: dict[int, int], yc: dict[int, int]) -> Monomial:
    return (tuple(sorted(xc.items())), tuple(sorted(yc.items())))


def z_from_group(group: PermGroupTwoSort, cap: int) -> IndexSeries:
    """Cycle index series: average of cycle-type monomials over the group."""
    sorts = 2 if group.m > 0 else 1
    terms: dict[Monomial, Fraction] = {}
    for gx, gy in group.elements:
        mon = _monomial_from_counts(cycle_counts(gx), cycle_counts(gy))
        terms[mon] = terms.get(mon, Fraction(0)) + Fraction(1, group.order)
    return IndexSeries(sorts, cap, terms)


def gamma_from_group(group: PermGroupTwoSort, cap: int, limit: int = 24) -> IndexSeries:
    """Asymmetry index series via the Moebius sum over the subgroup lattice."""
    sorts = 2 if group.m > 0 else 1
    mu = group.moebius_from_bottom(limit)
    terms: dict[Monomial, Fraction] = {}
    for sub, mu_v in mu.items():
        if mu_v == 0:
            continue
        xc = orbit_size_counts([e[0] for e in sub], group.n)
        yc = orbit_size_counts([e[1] for e in sub], group.m)
        mon = _monomial_from_counts(xc, yc)
        terms[mon] = terms.get(mon, Fraction(0)) + Fraction(mu_v, group.order)
    return IndexSeries(sorts, cap, terms)


# ---------------------------------------------------------------------------
# The specific groups: D2 on (2 triangles, 4 edge slots) for the bicolored
# square, S3 on (3 triangles, 6 edge slots) for the bicolored hexagon.
# ---------------------------------------------------------------------------

# h = (a,b)(1,2)(3,4)   v = (a)(b)(1,4)(2,3)
_H = ((1, 0), (1, 0, 3, 2))
_V = ((0, 1), (3, 2, 1, 0))

# s = (a)(b,c)(1,2)(3,6)(4,5)   w = (a,b,c)(1,3,5)(2,4,6)
_S = ((0, 2, 1), (1, 0, 5, 4, 3, 2))
_W = ((1, 2, 0), (2, 3, 4, 5, 0, 1))


@lru_cache(maxsize=None)
def d2_group() -> PermGroupTwoSort:
    """Z2 x Z2 stabilizer of the bicolored square (2 X-points, 4 Y-points)."""
    return PermGroupTwoSort.from_generators(2, 4, [_H, _V])


@lru_cache(maxsize=None)
def s3_group() -> PermGroupTwoSort:
    """S3 stabilizer of the bicolored hexagon (3 X-points, 6 Y-points)."""
    return PermGroupTwoSort.from_generators(3, 6, [_S, _W])


@lru_cache(maxsize=None)
def symmetric_group_3() -> PermGroupTwoSort:
    """S3 acting naturally on three X-points (no Y-points)."""
    return PermGroupTwoSort.from_generators(3, 0, [((1, 0, 2), ()), ((1, 2, 0), ())])


def _series(cap, sorts, term_list) -> IndexSeries:
    terms = {}
    for coeff, xs, ys in term_list:
        terms[(tuple(xs), tuple(ys))] = Fraction(*coeff) if isinstance(coeff, tuple) else Fraction(coeff)
    return IndexSeries(sorts, cap, terms)


@lru_cache(maxsize=None)
def _gamma_e3(cap: int) -> IndexSeries:
    return gamma_from_group(symmetric_group_3(), cap)


def builtin(species: str, kind: str, cap: int, n: int = 1) -> IndexSeries:
    """Closed-form Z or Gamma series of a named species.

    ``species`` is one of ``E2``, ``E3``, ``C3``, ``L2``, ``X`` (the power
    species X^n, using the ``n`` argument), ``P4bic`` or ``P6bic``.  The two
    bicolored-polygon species are two-sort; everything else is one-sort.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    z = kind == "Z"
    half = Fraction(1, 2)
    third = Fraction(1, 3)
    sixth = Fraction(1, 6)
    quarter = Fraction(1, 4)
    if species == "X":
        return _series(cap, 1, [(1, [(1, n)], [])]) if n else IndexSeries.one(1, cap)
    if species == "L2":
        return _series(cap, 1, [(1, [(1, 2)], [])])
    if species == "E2":
        return _series(cap, 1, [(half, [(1, 2)], []), (half if z else -half, [(2, 1)], [])])
    if species == "C3":
        if z:
            return _series(cap, 1, [(third, [(1, 3)], []), (2 * third, [(3, 1)], [])])
        return _series(cap, 1, [(third, [(1, 3)], []), (-third, [(3, 1)], [])])
    if species == "E3":
        if z:
            return _series(cap, 1, [
                (sixth, [(1, 3)], []),
                (3 * sixth, [(1, 1), (2, 1)], []),
                (2 * sixth, [(3, 1)], []),
            ])
        return _gamma_e3(cap)
    if species == "P4bic":
        if z:
            return _series(cap, 2, [
                (quarter, [(1, 2)], [(1, 4)]),
                (2 * quarter, [(2, 1)], [(2, 2)]),
                (quarter, [(1, 2)], [(2, 2)]),
            ])
        return _series(cap, 2, [
            (quarter, [(1, 2)], [(1, 4)]),
            (-quarter, [(1, 2)], [(2, 2)]),
            (-2 * quarter, [(2, 1)], [(2, 2)]),
            (2 * quarter, [(2, 1)], [(4, 1)]),
        ])
    if species == "P6bic":
        if z:
            return _series(cap, 2, [
                (sixth, [(1, 3)], [(1, 6)]),
                (2 * sixth, [(3, 1)], [(3, 2)]),
                (3 * sixth, [(1, 1), (2, 1)], [(2, 3)]),
            ])
        return _series(cap, 2, [
            (sixth, [(1, 3)], [(1, 6)]),
            (-sixth, [(3, 1)], [(3, 2)]),
            (-3 * sixth, [(1, 1), (2, 1)], [(2, 3)]),
            (3 * sixth, [(3, 1)], [(6, 1)]),
        ])
    raise ValueError(f"unknown species {species!r}")


def gamma_compose_nonzero_const(outer: str, g_gamma: IndexSeries, g0) -> IndexSeries:
    """Gamma series of E2(G) or C3(G) when G has constant term g0.

    Plain plethysm of Gamma series is only valid for constant-term-zero inner
    species; these are the two special-case formulas that replace it.
    """
    g0 = Fraction(g0)
    if outer == "E2":
        return g0 + Fraction(1, 2) * (g_gamma * g_gamma - g_gamma.scale_variables(2))
    if outer == "C3":
        return g0 + Fraction(1, 3) * (g_gamma * g_gamma * g_gamma - g_gamma.scale_variables(3))
    raise ValueError("outer species must be E2 or C3")


def compose_molecular_unit_shift(group: PermGroupTwoSort, inner_plus: IndexSeries,
                                 kind: str, cap: int) -> IndexSeries:
    """Index series of M(X, 1 + B) for a two-sort molecular M = X^n Y^m / H.

    B must have zero constant term (``inner_plus`` is its Z- or Gamma-series,
    matching ``kind``).  Decomposes by the set S of Y-slots holding a
    B-structure: each orbit of supports contributes the molecular quotient of
    (X-points, S) by the image of the setwise stabilizer of S, with B
    substituted into the surviving slots.  Because the restricted inner
    series has no constant term, the same decomposition is valid for Z and
    for Gamma; this is the general form of the unit-shifted substitution
    formulas for E2 and C3.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    if inner_plus.sorts != 1 or inner_plus.coefficient(((), ())) != 0:
        raise ValueError("inner series must be one-sort with zero constant term")
    n, m = group.n, group.m
    total = IndexSeries.zero(1, cap)
    seen: set[frozenset] = set()
    subsets = [frozenset(j for j in range(m) if mask >> j & 1) for mask in range(1 << m)]
    for s in subsets:
        if s in seen:
            continue
        orbit = {frozenset(e[1][j] for j in s) for e in group.elements}
        seen |= orbit
        slots = sorted(s)
        pos = {v: i for i, v in enumerate(slots)}
        restricted = set()
        for gx, gy in group.elements:
            if frozenset(gy[j] for j in s) != s:
                continue
            restricted.add((gx, tuple(pos[gy[v]] for v in slots)))
        sub = PermGroupTwoSort(n, len(slots), restricted)
        base = z_from_group(sub, cap) if kind == "Z" else gamma_from_group(sub, cap)
        if len(slots) == 0:
            # the base is already one-sort
            total = total + base
        else:
            total = total + base.substitute_y_series(inner_plus)
    return total
