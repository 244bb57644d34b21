"""Coordinatized domains: vertex lists, coordinate indicators, adjacency.

Every family is built to the same shape: a canonically ordered vertex
list, a canonically ordered coordinate list, a 0/1 incidence matrix
whose column 0 is the all-ones constant, and a symmetric irreflexive
adjacency.  The column span of the incidence matrix (constant included)
is the degree-1 space the rest of the package works with.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from math import comb

import numpy as np

from .gf import FieldSpec
from .forms import PolarSpec, make_polar_spec
from .subspaces import (
    QuotientMap,
    Subspace,
    all_points,
    contains,
    enumerate_subspaces,
    gaussian,
    rref_gf,
    span_dim,
)


class DomainError(ValueError):
    """Invalid domain parameters or incompatible operands."""


@dataclass(eq=False)
class Domain:
    family: str
    params: dict
    vertices: tuple
    vertex_keys: tuple[str, ...]
    coords: tuple
    coord_keys: tuple[str, ...]
    incidence: np.ndarray  # v x (1+c), int8; column 0 is the constant
    neighbors: tuple[tuple[int, ...], ...]
    valency: int | None
    field: FieldSpec | None = None
    polar: PolarSpec | None = None
    excluded: Subspace | None = None  # the forbidden subspace of bilinear domains
    _cache: dict = dc_field(default_factory=dict, repr=False)

    @property
    def v(self) -> int:
        return len(self.vertices)

    @property
    def c(self) -> int:
        return len(self.coords)

    def vertex_index(self, key: str) -> int:
        idx = self._cache.get("vindex")
        if idx is None:
            idx = {k: i for i, k in enumerate(self.vertex_keys)}
            self._cache["vindex"] = idx
        return idx[key]

    def compatible(self, other: "Domain") -> bool:
        return self is other or (
            self.family == other.family and self.vertex_keys == other.vertex_keys
        )

    def manifest(self) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "v": self.v,
            "c": self.c,
            "valency": self.valency,
            "vertex_keys": list(self.vertex_keys),
            "coordinate_keys": list(self.coord_keys),
        }

    def adjacency_matrix(self) -> np.ndarray:
        a = self._cache.get("adj")
        if a is None:
            a = np.zeros((self.v, self.v), dtype=np.int8)
            for i, nbrs in enumerate(self.neighbors):
                for j in nbrs:
                    a[i, j] = 1
            self._cache["adj"] = a
        return a


def _assemble(
    family,
    params,
    vertices,
    vertex_keys,
    coords,
    coord_keys,
    indicator,
    adjacent,
    *,
    field=None,
    polar=None,
    excluded=None,
    require_regular=True,
) -> Domain:
    order = sorted(range(len(vertices)), key=lambda i: vertex_keys[i])
    vertices = tuple(vertices[i] for i in order)
    vertex_keys = tuple(vertex_keys[i] for i in order)
    if len(set(vertex_keys)) != len(vertex_keys):
        raise DomainError("duplicate vertex keys")
    v, c = len(vertices), len(coords)
    inc = np.zeros((v, 1 + c), dtype=np.int8)
    inc[:, 0] = 1
    for i, vtx in enumerate(vertices):
        for j, coord in enumerate(coords):
            if indicator(vtx, coord):
                inc[i, 1 + j] = 1
    nbr_sets: list[list[int]] = [[] for _ in range(v)]
    for i in range(v):
        vi = vertices[i]
        for j in range(i + 1, v):
            if adjacent(vi, vertices[j]):
                nbr_sets[i].append(j)
                nbr_sets[j].append(i)
    nbrs = [tuple(sorted(r)) for r in nbr_sets]
    degrees = {len(r) for r in nbrs}
    if require_regular and len(degrees) > 1:
        raise DomainError(f"domain {family} is not regular: degrees {degrees}")
    return Domain(
        family,
        params,
        vertices,
        vertex_keys,
        tuple(coords),
        tuple(coord_keys),
        inc,
        tuple(nbrs),
        len(nbrs[0]) if len(degrees) == 1 else None,
        field=field,
        polar=polar,
        excluded=excluded,
    )


def build_hamming(n: int, m: int) -> Domain:
    """H(n, m): words of length n over m colors, adjacency = distance 1."""
    if n < 1 or m < 2:
        raise DomainError("hamming needs n >= 1, m >= 2")
    if m > 10:
        raise DomainError("color count > 10 breaks single-digit vertex keys")
    vertices = list(itertools.product(range(m), repeat=n))
    keys = ["".join(map(str, v)) for v in vertices]
    coords = [(i, j) for i in range(n) for j in range(m)]
    ckeys = [f"{i}:{j}" for i, j in coords]
    return _assemble(
        "hamming",
        {"n": n, "m": m},
        vertices,
        keys,
        coords,
        ckeys,
        lambda v, ij: v[ij[0]] == ij[1],
        lambda a, b: sum(x != y for x, y in zip(a, b)) == 1,
    )


def build_johnson(n: int, k: int) -> Domain:
    """J(n, k): k-subsets of [n], adjacency = meet in k-1 elements."""
    if not 0 < k < n:
        raise DomainError("johnson needs 0 < k < n")
    width = len(str(n - 1))  # fixed width keeps string order = tuple order
    vertices = list(itertools.combinations(range(n), k))
    keys = ["".join(f"{i:0{width}d}" for i in v) for v in vertices]
    coords = list(range(n))
    return _assemble(
        "johnson",
        {"n": n, "k": k},
        vertices,
        keys,
        coords,
        [str(i) for i in coords],
        lambda v, i: i in v,
        lambda a, b: len(set(a) & set(b)) == k - 1,
    )


def build_multislice(parts) -> Domain:
    """M(k_1..k_m): colorings with a fixed histogram, adjacency = transpositions."""
    parts = tuple(int(x) for x in parts)
    if len(parts) < 2 or any(p < 1 for p in parts):
        raise DomainError("multislice needs >= 2 positive part sizes")
    m = len(parts)
    n = sum(parts)
    if m > 10:
        raise DomainError("color count > 10 breaks single-digit vertex keys")
    vertices = [
        w
        for w in itertools.product(range(m), repeat=n)
        if all(w.count(i) == parts[i] for i in range(m))
    ]
    keys = ["".join(map(str, v)) for v in vertices]
    coords = [(i, j) for i in range(n) for j in range(m)]
    ckeys = [f"{i}:{j}" for i, j in coords]

    def adjacent(a, b):
        diff = [i for i in range(n) if a[i] != b[i]]
        return len(diff) == 2 and a[diff[0]] == b[diff[1]] and a[diff[1]] == b[diff[0]]

    return _assemble(
        "multislice",
        {"parts": list(parts)},
        vertices,
        keys,
        coords,
        ckeys,
        lambda v, ij: v[ij[0]] == ij[1],
        adjacent,
    )


def _subspace_adjacent(k: int):
    return lambda a, b: span_dim(a, b) == k + 1


def build_grassmann(field: FieldSpec, n: int, k: int) -> Domain:
    """J_q(n, k): k-spaces of GF(q)^n, adjacency = meet in dimension k-1."""
    if not 0 < k < n:
        raise DomainError("grassmann needs 0 < k < n")
    vertices = enumerate_subspaces(field, n, k)
    points = all_points(field.q, n)
    dom = _assemble(
        "grassmann",
        {"q": field.q, "n": n, "k": k},
        vertices,
        [s.key() for s in vertices],
        points,
        [p.key() for p in points],
        lambda K, p: K.contains_vector(p.basis[0]),
        _subspace_adjacent(k),
        field=field,
    )
    _check_point_row_sums(dom, k, field.q)
    return dom


def build_polar(spec: PolarSpec, k: int) -> Domain:
    """C_q(n, k, e): totally isotropic k-spaces of a polar space.

    Only k >= 2 is supported: for k = 1 the natural coordinates would be
    the maximals, not the points, and that regime is out of scope.
    """
    if k == 1:
        raise DomainError("polar domains with k = 1 are not supported")
    if not 2 <= k <= spec.rank:
        raise DomainError(f"polar needs 2 <= k <= rank, got k={k}")
    vertices = spec.isotropic_subspaces(k)
    points = spec.isotropic_points()
    dom = _assemble(
        "polar",
        {
            "family": spec.family,
            "q": spec.q,
            "n": spec.rank,
            "k": k,
            "e": spec.e_tag,
            "form": spec.key(),
        },
        vertices,
        [s.key() for s in vertices],
        points,
        [p.key() for p in points],
        lambda K, p: K.contains_vector(p.basis[0]),
        _subspace_adjacent(k),
        field=spec.field,
        polar=spec,
    )
    _check_point_row_sums(dom, k, spec.q)
    return dom


def build_bilinear(
    field: FieldSpec, l: int, k: int, excluded: Subspace | None = None
) -> Domain:
    """H_q(l, k): k-spaces of GF(q)^(k+l) disjoint from a fixed l-space.

    By default the excluded space is spanned by the last l standard
    basis vectors; an explicit override is accepted so that e.g. a
    passant line of a quadric can play that role.
    """
    if not 1 <= l <= k:
        raise DomainError("bilinear needs 1 <= l <= k")
    n = k + l
    if excluded is None:
        rows = [
            tuple(1 if j == n - l + i else 0 for j in range(n)) for i in range(l)
        ]
        excluded = Subspace(field.q, n, tuple(rows))
    if excluded.q != field.q or excluded.n != n or excluded.dim != l:
        raise DomainError("excluded space must be an l-space of GF(q)^(k+l)")
    vertices = [
        s
        for s in enumerate_subspaces(field, n, k)
        if span_dim(s, excluded) == k + l
    ]
    if len(vertices) != field.q ** (l * k):
        raise DomainError("bilinear vertex count mismatch")
    points = all_points(field.q, n)
    dom = _assemble(
        "bilinear",
        {"q": field.q, "l": l, "k": k, "excluded": excluded.key()},
        vertices,
        [s.key() for s in vertices],
        points,
        [p.key() for p in points],
        lambda K, p: K.contains_vector(p.basis[0]),
        _subspace_adjacent(k),
        field=field,
        excluded=excluded,
    )
    _check_point_row_sums(dom, k, field.q)
    return dom


def _check_point_row_sums(dom: Domain, k: int, q: int):
    expect = gaussian(k, 1, q)
    sums = dom.incidence[:, 1:].sum(axis=1)
    if not (sums == expect).all():
        raise DomainError("vertex point-count invariant violated")


@dataclass
class Restriction:
    child: Domain
    parent_indices: tuple[int, ...]  # child vertex i sits at parent_indices[i]


def restrict(parent: Domain, selector) -> Restriction:
    """Coordinate-induced subdomain on the selected vertices.

    ``selector`` is a predicate on vertex objects or an iterable of
    parent vertex indices.  The child keeps the parent's coordinate
    labels; functions restrict by bit extraction along the index map.
    """
    if callable(selector):
        idx = [i for i, vtx in enumerate(parent.vertices) if selector(vtx)]
    else:
        idx = sorted(set(selector))
    if not idx:
        raise DomainError("restriction selects no vertices")
    sub_inc = parent.incidence[idx, :]
    lookup = {p: c for c, p in enumerate(idx)}
    nbrs = tuple(
        tuple(lookup[j] for j in parent.neighbors[p] if j in lookup) for p in idx
    )
    degrees = {len(r) for r in nbrs}
    child = Domain(
        f"restriction:{parent.family}",
        {"parent": parent.params, "size": len(idx)},
        tuple(parent.vertices[i] for i in idx),
        tuple(parent.vertex_keys[i] for i in idx),
        parent.coords,
        parent.coord_keys,
        sub_inc.copy(),
        nbrs,
        len(nbrs[0]) if len(degrees) == 1 else None,
        field=parent.field,
        polar=parent.polar,
        excluded=parent.excluded,
    )
    return Restriction(child, tuple(idx))


@dataclass
class PointRestriction:
    child: Domain
    parent_indices: tuple[int, ...]
    point: Subspace

    def transport(self, f):
        """Carry a function on the parent to the quotient child."""
        from .boolfn import BoolFn

        bits = 0
        for ci, pi in enumerate(self.parent_indices):
            if (f.bits >> pi) & 1:
                bits |= 1 << ci
        return BoolFn(self.child, bits)


def restrict_to_point(parent: Domain, a: Subspace) -> PointRestriction:
    """Quotient domain of all vertices through a point a.

    For a Grassmann parent the child is the Grassmann domain of the
    quotient space; for a polar parent it is the polar domain of the
    quotient form on perp(a)/a.
    """
    if parent.family == "grassmann":
        return _grassmann_point_restriction(parent, a)
    if parent.family == "polar":
        return _polar_point_restriction(parent, a)
    raise DomainError(f"restrict_to_point unsupported for {parent.family}")


def _grassmann_point_restriction(parent: Domain, a: Subspace) -> PointRestriction:
    if a.dim != 1:
        raise DomainError("restriction point must be 1-dimensional")
    n, k = parent.params["n"], parent.params["k"]
    if k < 2:
        raise DomainError("quotient needs k >= 2")
    child = build_grassmann(parent.field, n - 1, k - 1)
    qmap = QuotientMap(modulus=a)
    pairs = []
    for i, K in enumerate(parent.vertices):
        if contains(K, a):
            img = qmap.apply(K)
            pairs.append((child.vertex_index(img.key()), i))
    return _finish_point_restriction(child, pairs, a)


def _polar_point_restriction(parent: Domain, a: Subspace) -> PointRestriction:
    spec = parent.polar
    k = parent.params["k"]
    if a.dim != 1 or not spec.is_isotropic_vector(a.basis[0]):
        raise DomainError("restriction point must be an isotropic point")
    if k < 3:
        raise DomainError("polar quotient would need k-1 >= 2 (unsupported k=1)")
    fld = spec.field
    perp_a = spec.perp(a)
    qmap = QuotientMap(modulus=a)
    w_basis, w_piv = rref_gf(fld, [qmap.apply_vector(r) for r in perp_a.basis])
    lifts = [qmap.lift_vector(w) for w in w_basis]
    d = len(w_basis)

    def project(vec) -> tuple[int, ...]:
        img = qmap.apply_vector(vec)
        return tuple(img[c] for c in w_piv)

    if spec.quad is not None:
        quad = [[0] * d for _ in range(d)]
        for i in range(d):
            quad[i][i] = spec.quad_value(lifts[i])
            for j in range(i + 1, d):
                quad[i][j] = spec.bilinear(lifts[i], lifts[j])
        child_spec = make_polar_spec(
            spec.family, spec.rank - 1, fld, quad=quad, ambient_dim=d
        )
    else:
        gram = [
            [spec.bilinear(lifts[i], lifts[j]) for j in range(d)] for i in range(d)
        ]
        child_spec = make_polar_spec(
            spec.family,
            spec.rank - 1,
            fld,
            gram=gram,
            conj_power=spec.conj_power,
            ambient_dim=d,
        )
    child = build_polar(child_spec, k - 1)
    pairs = []
    for i, K in enumerate(parent.vertices):
        if contains(K, a):
            img = Subspace.from_vectors(fld, d, [project(r) for r in K.basis])
            pairs.append((child.vertex_index(img.key()), i))
    return _finish_point_restriction(child, pairs, a)


def _finish_point_restriction(child, pairs, a) -> PointRestriction:
    if len(pairs) != child.v or len({c for c, _ in pairs}) != child.v:
        raise DomainError("quotient map is not a bijection onto the child")
    pairs.sort()
    return PointRestriction(child, tuple(p for _, p in pairs), a)


# --- packed-bit views of incidence data ---


def coordinate_column_bits(domain: Domain) -> list[int]:
    """Per-coordinate indicator columns packed as ints (bit i = vertex i)."""
    cols = domain._cache.get("colbits")
    if cols is None:
        cols = []
        for j in range(domain.c):
            col = 0
            for i in range(domain.v):
                if domain.incidence[i, 1 + j]:
                    col |= 1 << i
            cols.append(col)
        domain._cache["colbits"] = cols
    return cols


def vertices_inside_bits(domain: Domain, s: Subspace) -> int:
    """Packed support of the vertices contained in the subspace s."""
    cache = domain._cache.setdefault("insidebits", {})
    got = cache.get(s.basis)
    if got is None:
        got = 0
        for i, K in enumerate(domain.vertices):
            if contains(s, K):
                got |= 1 << i
        cache[s.basis] = got
    return got


# --- closed-form vertex counts, used as oracles in tests ---


def expected_vertex_count(family: str, **kw) -> int:
    if family == "hamming":
        return kw["m"] ** kw["n"]
    if family == "johnson":
        return comb(kw["n"], kw["k"])
    if family == "multislice":
        parts = kw["parts"]
        n = sum(parts)
        out = 1
        rem = n
        for p in parts:
            out *= comb(rem, p)
            rem -= p
        return out
    if family == "grassmann":
        return gaussian(kw["n"], kw["k"], kw["q"])
    if family == "bilinear":
        return kw["q"] ** (kw["l"] * kw["k"])
    raise DomainError(f"no closed form for {family}")
