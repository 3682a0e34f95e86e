"""Brute-force ground truth from exhaustive polygon triangulations.

A 2-tree on n triangles corresponds to a triangulation of a convex
(n+2)-gon; plane 2-trees are triangulations up to rotation, planar 2-trees
up to rotation and reflection.  This module enumerates all triangulations,
partitions them into orbits, reads off automorphism data, classifies each
orbit by its molecular tag, and counts pointed structures, entirely
independently of the formula modules.

Two automorphism orders appear on an orbit record:

* ``stab_order`` -- order of the polygon-symmetry stabilizer (it satisfies
  orbit_size * stab_order = |group| and drives the symmetric-part
  decomposition by stabilizer order);
* ``aut_order`` -- order of the induced permutation group on the triangles
  (the species-level automorphism group, which drives labelled counts,
  asymmetry counts and the molecular classification).

The two coincide as soon as no polygon symmetry fixes every triangle,
which holds for n >= 3; they differ for tiny n (a rotation of the lone
triangle fixes its only triangle, and one reflection of the two-triangle
quadrilateral fixes both triangles).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .catalan import catalan
from .molecular import Tag

CYCLIC = "cyclic"
DIHEDRAL = "dihedral"
GROUPS = (CYCLIC, DIHEDRAL)

DEFAULT_MAX_N = 12

POINTINGS = ("none", "edge", "triangle", "triangle-edge")


def _check_n(n: int, max_n: int):
    if not 1 <= n <= max_n:
        raise ValueError(f"oracle supports 1 <= n <= {max_n}, got {n}")


@lru_cache(maxsize=None)
def triangulations(n: int, max_n: int = DEFAULT_MAX_N) -> tuple:
    """All triangulations of the (n+2)-gon as sorted tuples of diagonals.

    Generated by recursing on the triangle attached to the base edge
    (0, p-1); yields exactly catalan(n) triangulations, each once.
    """
    _check_n(n, max_n)
    p = n + 2

    @lru_cache(maxsize=None)
    def chains(i: int, j: int) -> tuple:
        # triangulations of the sub-polygon on vertices i..j
        if j - i < 2:
            return ((),)
        out = []
        for k in range(i + 1, j):
            left = ((i, k),) if k - i > 1 else ()
            right = ((k, j),) if j - k > 1 else ()
            for a in chains(i, k):
                for b in chains(k, j):
                    out.append(tuple(sorted(left + right + a + b)))
        return tuple(out)

    result = chains(0, p - 1)
    chains.cache_clear()
    if len(result) != catalan(n):
        raise AssertionError("triangulation count disagrees with catalan(n)")
    return result


def triangles_of(diagonals: tuple, p: int) -> tuple:
    """The p-2 triangles of a triangulation, as sorted vertex triples."""
    edges = set(diagonals)
    for i in range(p):
        edges.add(tuple(sorted((i, (i + 1) % p))))
    out = []

    def walk(i: int, j: int):
        if j - i < 2:
            return
        for k in range(i + 1, j):
            if tuple(sorted((i, k))) in edges and tuple(sorted((k, j))) in edges:
                out.append((i, k, j))
                walk(i, k)
                walk(k, j)
                return
        raise AssertionError("no apex found; not a triangulation")

    walk(0, p - 1)
    return tuple(sorted(out))


def polygon_group(p: int, group: str) -> tuple:
    """Rotations i -> i+r (and, for dihedral, reflections i -> c-i) of [p]."""
    if group not in GROUPS:
        raise ValueError(f"group must be one of {GROUPS}")
    perms = [tuple((i + r) % p for i in range(p)) for r in range(p)]
    if group == DIHEDRAL:
        perms += [tuple((c - i) % p for i in range(p)) for c in range(p)]
    return tuple(perms)


def apply_to_pairs(perm: tuple, pairs) -> tuple:
    return tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in pairs))


def _induced_triangle_perm(perm: tuple, tris: tuple, index: dict) -> tuple:
    return tuple(index[tuple(sorted((perm[a], perm[b], perm[c])))] for a, b, c in tris)


def _cycle_type(perm: tuple) -> tuple:
    seen = [False] * len(perm)
    lengths = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        ln, j = 0, i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            ln += 1
        lengths.append(ln)
    return tuple(sorted(lengths))


@dataclass(frozen=True)
class OrbitRecord:
    """One orbit of triangulations under the polygon group."""

    rep: tuple                 # orbit representative (diagonal tuple)
    canonical: tuple           # lexicographically least image
    orbit_size: int
    stab: tuple                # polygon symmetries fixing the representative
    stab_order: int
    triangles: tuple
    induced: tuple             # induced triangle permutations (deduplicated)
    aut_order: int
    aut_cycle_types: tuple     # cycle type of each induced permutation
    tag: Tag | None


def classify_molecular(induced: tuple, n: int) -> Tag | None:
    """Match an induced triangle action against the molecular tag catalogue.

    Matching is by group order plus the multiset of cycle types, which
    separates every tag family that can occur; None means unclassified.
    """
    order = len(induced)
    types = sorted(_cycle_type(p) for p in induced)

    def matches(candidate: list[tuple]) -> bool:
        return types == sorted(candidate)

    ident = tuple([1] * n)
    if order == 1:
        return Tag("X", n) if n >= 1 else Tag("1")
    if order == 2:
        invol = [t for t in types if t != ident]
        if len(invol) != 1:
            return None
        fixed = invol[0].count(1)
        pairs = invol[0].count(2)
        if fixed + 2 * pairs != n or set(invol[0]) - {1, 2}:
            return None
        if fixed == 0:
            return Tag("E2", pairs)
        if fixed == 1:
            return Tag("XE2", pairs)
        if fixed == 2:
            return Tag("X2E2", pairs)
        return None
    if order == 3:
        rots = [t for t in types if t != ident]
        if len(rots) != 2 or rots[0] != rots[1]:
            return None
        fixed = rots[0].count(1)
        cycles = rots[0].count(3)
        if fixed + 3 * cycles != n or set(rots[0]) - {1, 3}:
            return None
        if fixed == 0:
            return Tag("C3", cycles)
        if fixed == 1:
            return Tag("XC3", cycles)
        return None
    if order == 4:
        if n % 4 != 2:
            return None
        k = (n - 2) // 4
        expected = [ident,
                    tuple([2] * (2 * k + 1)),
                    tuple([2] * (2 * k + 1)),
                    tuple(sorted([1, 1] + [2] * (2 * k)))]
        return Tag("P4", k) if matches(expected) else None
    if order == 6:
        if n % 6 != 4:
            return None
        k = (n - 4) // 6
        expected = [ident,
                    tuple(sorted([1] + [3] * (2 * k + 1))),
                    tuple(sorted([1] + [3] * (2 * k + 1))),
                    tuple(sorted([1, 1] + [2] * (3 * k + 1))),
                    tuple(sorted([1, 1] + [2] * (3 * k + 1))),
                    tuple(sorted([1, 1] + [2] * (3 * k + 1)))]
        if not matches(expected):
            return None
        return Tag("XE3") if k == 0 else Tag("XP6", k)
    return None


@lru_cache(maxsize=None)
def orbits(n: int, group: str, max_n: int = DEFAULT_MAX_N) -> tuple[OrbitRecord, ...]:
    """All orbits of triangulations of the (n+2)-gon under the chosen group."""
    _check_n(n, max_n)
    p = n + 2
    perms = polygon_group(p, group)
    records = []
    seen: set[tuple] = set()
    for t in triangulations(n, max_n):
        if t in seen:
            continue
        images = [apply_to_pairs(g, t) for g in perms]
        orbit = set(images)
        seen |= orbit
        stab = tuple(g for g, img in zip(perms, images) if img == t)
        tris = triangles_of(t, p)
        index = {tri: i for i, tri in enumerate(tris)}
        induced = tuple(sorted({_induced_triangle_perm(g, tris, index) for g in stab}))
        if len(orbit) * len(stab) != len(perms):
            raise AssertionError("orbit-stabilizer mismatch")
        records.append(OrbitRecord(
            rep=t,
            canonical=min(orbit),
            orbit_size=len(orbit),
            stab=stab,
            stab_order=len(stab),
            triangles=tris,
            induced=induced,
            aut_order=len(induced),
            aut_cycle_types=tuple(sorted(_cycle_type(q) for q in induced)),
            tag=classify_molecular(induced, n),
        ))
    records.sort(key=lambda r: r.canonical)
    return tuple(records)


def burnside_count(n: int, group: str, max_n: int = DEFAULT_MAX_N) -> int:
    """Number of orbits by averaging fixed-point counts (no orbit machinery)."""
    _check_n(n, max_n)
    p = n + 2
    perms = polygon_group(p, group)
    all_t = triangulations(n, max_n)
    total = 0
    for g in perms:
        total += sum(1 for t in all_t if apply_to_pairs(g, t) == t)
    q, r = divmod(total, len(perms))
    if r:
        raise AssertionError("Burnside sum not divisible by the group order")
    return q


def _elements_for_pointing(rec: OrbitRecord, p: int, pointing: str) -> list:
    sides = [tuple(sorted((i, (i + 1) % p))) for i in range(p)]
    if pointing == "edge":
        return sides + list(rec.rep)
    if pointing == "triangle":
        return list(rec.triangles)
    if pointing == "triangle-edge":
        out = []
        for (a, b, c) in rec.triangles:
            for e in ((a, b), (a, c), (b, c)):
                out.append(((a, b, c), e))
        return out
    raise ValueError(f"unknown pointing {pointing!r}")


def _apply_to_element(g: tuple, el, pointing: str):
    if pointing == "edge":
        return tuple(sorted((g[el[0]], g[el[1]])))
    if pointing == "triangle":
        return tuple(sorted(g[v] for v in el))
    tri, e = el
    return (tuple(sorted(g[v] for v in tri)), tuple(sorted((g[e[0]], g[e[1]]))))


def oracle_counts(n: int, group: str, pointing: str = "none",
                  max_n: int = DEFAULT_MAX_N) -> dict:
    """Unlabelled / labelled / asymmetric counts plus classification data.

    For pointing "none" the result also carries ``by_stab_order`` (orbits
    keyed by polygon-stabilizer order) and ``by_tag`` (orbits keyed by
    molecular tag).  Pointed variants count orbits of (triangulation,
    pointed element) pairs.
    """
    if pointing not in POINTINGS:
        raise ValueError(f"pointing must be one of {POINTINGS}")
    p = n + 2
    recs = orbits(n, group, max_n)
    unlabelled = 0
    labelled = Fraction(0)
    asymmetric = 0
    by_stab: dict[int, int] = {}
    by_tag: dict[Tag, int] = {}
    for rec in recs:
        index = {tri: i for i, tri in enumerate(rec.triangles)}
        if pointing == "none":
            unlabelled += 1
            labelled += Fraction(factorial(n), rec.aut_order)
            if rec.aut_order == 1:
                asymmetric += 1
            by_stab[rec.stab_order] = by_stab.get(rec.stab_order, 0) + 1
            by_tag[rec.tag] = by_tag.get(rec.tag, 0) + 1
            continue
        elements = _elements_for_pointing(rec, p, pointing)
        seen = set()
        for el in elements:
            if el in seen:
                continue
            el_orbit = {_apply_to_element(g, el, pointing) for g in rec.stab}
            seen |= el_orbit
            el_stab = [g for g in rec.stab if _apply_to_element(g, el, pointing) == el]
            induced = {_induced_triangle_perm(g, rec.triangles, index) for g in el_stab}
            unlabelled += 1
            labelled += Fraction(factorial(n), len(induced))
            if len(induced) == 1:
                asymmetric += 1
            by_stab[len(el_stab)] = by_stab.get(len(el_stab), 0) + 1
    if labelled.denominator != 1:
        raise AssertionError("labelled count came out fractional")
    out = {
        "n": n,
        "group": group,
        "pointing": pointing,
        "unlabelled": unlabelled,
        "labelled": int(labelled),
        "asymmetric": asymmetric,
        "by_stab_order": dict(sorted(by_stab.items())),
    }
    if pointing == "none":
        out["by_tag"] = by_tag
    return out


def by_tag_at_degree(n: int, group: str, max_n: int = DEFAULT_MAX_N) -> dict[Tag, int]:
    """Molecular-tag census of the degree-n orbits (canonical tags)."""
    counts = oracle_counts(n, group, max_n=max_n)["by_tag"]
    merged: dict[Tag, int] = {}
    for tag, c in counts.items():
        if tag is None:
            raise AssertionError(f"unclassified orbit at n={n}, group={group}")
        t = tag.canonical()
        merged[t] = merged.get(t, 0) + c
    return merged


def rooted_external_edge_count(n: int, group: str, max_n: int = DEFAULT_MAX_N) -> int:
    """Orbits of (triangulation, external base edge) pairs.

    Under rotations the base side is unoriented; under the dihedral group it
    carries an orientation.  Both counts equal catalan(n), which is the
    defining property of the rooted series A.
    """
    p = n + 2
    total = 0
    for rec in orbits(n, group, max_n):
        if group == CYCLIC:
            sides = [tuple(sorted((i, (i + 1) % p))) for i in range(p)]
            act = lambda g, e: tuple(sorted((g[e[0]], g[e[1]])))
        else:
            sides = [(i, (i + 1) % p) for i in range(p)]
            sides += [((i + 1) % p, i) for i in range(p)]
            act = lambda g, e: (g[e[0]], g[e[1]])
        seen = set()
        for e in sides:
            if e in seen:
                continue
            seen |= {act(g, e) for g in rec.stab}
            total += 1
    return total


def orbit_records_json(n: int, group: str, max_n: int = DEFAULT_MAX_N) -> list[dict]:
    """Orbit records in a stable JSON-friendly form (sorted by canonical form)."""
    out = []
    for rec in orbits(n, group, max_n):
        out.append({
            "canonical": [list(d) for d in rec.canonical],
            "orbit_size": rec.orbit_size,
            "stab_order": rec.stab_order,
            "aut_order": rec.aut_order,
            "aut_cycle_types": [list(t) for t in rec.aut_cycle_types],
            "tag": rec.tag.render() if rec.tag is not None else "unclassified",
        })
    return out
