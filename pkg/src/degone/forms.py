"""Quadratic, alternating and Hermitian forms: the classical polar spaces.

Six families are supported, tagged O_plus, O_odd, O_minus, Sp, U_even,
U_odd (parameters e = 0, 1, 2, 1*, 1/2, 3/2 in the same order).  A spec
fixes one concrete form on GF(q)^m; all geometry (isotropy, polarity,
hyperplane sections) is computed against that form, exactly.

O_odd in characteristic 2 is rejected: total singularity is not captured
by the bilinear radical there, and that polar space is isomorphic to Sp
of the same rank, which is supported.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .gf import FieldSpec, field_spec
from .subspaces import (
    Subspace,
    all_points,
    contains,
    enumerate_subspaces,
    kernel_gf,
    rref_gf,
    span,
)


FAMILY_E_TAG = {
    "O_plus": "0",
    "O_odd": "1",
    "O_minus": "2",
    "Sp": "1*",
    "U_even": "1/2",
    "U_odd": "3/2",
}

# e as a number, where arithmetic on it is meaningful (Sp excluded).
FAMILY_E_VALUE = {
    "O_plus": Fraction(0),
    "O_odd": Fraction(1),
    "O_minus": Fraction(2),
    "U_even": Fraction(1, 2),
    "U_odd": Fraction(3, 2),
}

_AMBIENT = {
    "O_plus": lambda n: 2 * n,
    "O_odd": lambda n: 2 * n + 1,
    "O_minus": lambda n: 2 * n + 2,
    "Sp": lambda n: 2 * n,
    "U_even": lambda n: 2 * n,
    "U_odd": lambda n: 2 * n + 1,
}


class FormsError(ValueError):
    """Invalid polar-space parameters or operands."""


@dataclass(frozen=True)
class PolarSpec:
    """One concrete classical form on GF(q)^ambient_dim.

    ``gram`` is the matrix of the bilinear (or sesquilinear) part; for
    orthogonal families ``quad`` holds the upper-triangular coefficients
    of the quadratic form and ``gram`` is its polarization.
    ``conj_power`` is the Frobenius power used on the right argument of
    the form (nonzero only for unitary families).
    """

    family: str
    rank: int
    q: int
    ambient_dim: int
    gram: tuple[tuple[int, ...], ...]
    quad: tuple[tuple[int, ...], ...] | None
    conj_power: int

    @property
    def field(self) -> FieldSpec:
        return field_spec(self.q)

    @property
    def e_tag(self) -> str:
        return FAMILY_E_TAG[self.family]

    def key(self) -> str:
        return f"{self.family}:{self.rank}:{self.q}"

    def conj(self, a: int) -> int:
        return self.field.frobenius(a, self.conj_power) if self.conj_power else a

    def bilinear(self, u, v) -> int:
        fld = self.field
        acc = 0
        for i, ui in enumerate(u):
            if not ui:
                continue
            row = self.gram[i]
            s = 0
            for j, vj in enumerate(v):
                if vj and row[j]:
                    s = fld.add(s, fld.mul(row[j], self.conj(vj)))
            acc = fld.add(acc, fld.mul(ui, s))
        return acc

    def quad_value(self, v) -> int:
        if self.quad is None:
            raise FormsError(f"{self.family} has no quadratic form")
        fld = self.field
        acc = 0
        for i, vi in enumerate(v):
            if not vi:
                continue
            for j in range(i, len(v)):
                c = self.quad[i][j]
                if c and v[j]:
                    acc = fld.add(acc, fld.mul(c, fld.mul(vi, v[j])))
        return acc

    def is_isotropic_vector(self, v) -> bool:
        if self.quad is not None:
            return self.quad_value(v) == 0
        return self.bilinear(v, v) == 0

    def is_totally_isotropic(self, s: Subspace) -> bool:
        self._check_ambient(s)
        rows = s.basis
        if self.quad is not None:
            if any(self.quad_value(r) != 0 for r in rows):
                return False
            return all(
                self.bilinear(rows[i], rows[j]) == 0
                for i in range(len(rows))
                for j in range(i + 1, len(rows))
            )
        return all(
            self.bilinear(rows[i], rows[j]) == 0
            for i in range(len(rows))
            for j in range(i, len(rows))
        )

    def perp(self, s: Subspace) -> Subspace:
        """The polarity: all vectors orthogonal to s under the form."""
        self._check_ambient(s)
        fld = self.field
        constraints = []
        for b in s.basis:
            w = tuple(
                # B(v, b) = sum_i v_i * w_i
                _dot_row(fld, self.gram[i], [self.conj(x) for x in b])
                for i in range(self.ambient_dim)
            )
            constraints.append(w)
        rows = kernel_gf(fld, constraints, self.ambient_dim)
        return Subspace.from_vectors(fld, self.ambient_dim, rows)

    def isotropic_points(self) -> tuple[Subspace, ...]:
        return _isotropic_points(self)

    def isotropic_subspaces(self, k: int) -> list[Subspace]:
        if k == 0:
            return [Subspace.zero(self.field, self.ambient_dim)]
        if k == 1:
            return list(self.isotropic_points())
        return [
            s
            for s in enumerate_subspaces(self.field, self.ambient_dim, k)
            if self.is_totally_isotropic(s)
        ]

    def collinear(self, p: Subspace, r: Subspace) -> bool:
        """Do two distinct isotropic points lie on a common isotropic line?"""
        return p != r and self.bilinear(p.basis[0], r.basis[0]) == 0

    def hyperplane_section_type(self, pi: Subspace) -> "SectionType":
        self._check_ambient(pi)
        if pi.dim != self.ambient_dim - 1:
            raise FormsError(f"expected a hyperplane, got dim {pi.dim}")
        apex = self.perp(pi)
        assert apex.dim == 1
        if self.is_isotropic_vector(apex.basis[0]):
            return SectionType("degenerate", apex=apex, family=None, rank=None)
        fam, rk = self._nondegenerate_section_family(pi)
        return SectionType("nondegenerate", apex=None, family=fam, rank=rk)

    def _nondegenerate_section_family(self, pi: Subspace) -> tuple[str, int]:
        n = self.rank
        if self.family == "O_plus":
            return "O_odd", n - 1
        if self.family == "O_minus":
            return "O_odd", n
        if self.family == "U_odd":
            return "U_even", n
        if self.family == "U_even":
            return "U_odd", n - 1
        if self.family == "O_odd":
            # two possibilities; decided by counting isotropic points in pi
            cnt = sum(
                1 for p in pi.points() if self.is_isotropic_vector(p.basis[0])
            )
            if cnt == isotropic_point_count("O_plus", n, self.q):
                return "O_plus", n
            if cnt == isotropic_point_count("O_minus", n - 1, self.q):
                return "O_minus", n - 1
            raise FormsError(f"section point count {cnt} matches no candidate")
        raise FormsError(f"{self.family} has no non-degenerate hyperplane sections")

    def _check_ambient(self, s: Subspace):
        if s.q != self.q or s.n != self.ambient_dim:
            raise FormsError(
                f"subspace of GF({s.q})^{s.n} incompatible with {self.key()}"
            )


@dataclass(frozen=True)
class SectionType:
    kind: str  # "degenerate" | "nondegenerate"
    apex: Subspace | None
    family: str | None
    rank: int | None


def _dot_row(fld: FieldSpec, row, vec) -> int:
    acc = 0
    for a, b in zip(row, vec):
        if a and b:
            acc = fld.add(acc, fld.mul(a, b))
    return acc


@lru_cache(maxsize=None)
def _isotropic_points(spec: PolarSpec) -> tuple[Subspace, ...]:
    return tuple(
        p
        for p in all_points(spec.q, spec.ambient_dim)
        if spec.is_isotropic_vector(p.basis[0])
    )


def isotropic_point_count(family: str, rank: int, q: int) -> int:
    """Closed-form isotropic point count (q^n-1)(q^(n-1+e)+1)/(q-1).

    For unitary families q must be a square; Sp is handled as e=1 (all
    points are isotropic there, and the formula agrees).
    """
    n = rank
    if family == "Sp":
        e_num, e_den = 1, 1
    else:
        e = FAMILY_E_VALUE[family]
        e_num, e_den = e.numerator, e.denominator
    if e_den == 2:
        root = _integer_sqrt(q)
        qe = root**e_num
    else:
        qe = q**e_num
    num = (q**n - 1) * (q ** (n - 1) * qe + 1)
    assert num % (q - 1) == 0
    return num // (q - 1)


def _integer_sqrt(q: int) -> int:
    r = int(round(q**0.5))
    if r * r != q:
        raise FormsError(f"{q} is not a square")
    return r


def _least_irreducible_c(field: FieldSpec) -> int:
    """Least c such that z^2 + z + c has no root in GF(q)."""
    for c in range(field.q):
        if all(
            field.add(field.add(field.mul(z, z), z), c) != 0
            for z in range(field.q)
        ):
            return c
    raise FormsError("no irreducible binary quadratic found")


def _polarize(field: FieldSpec, quad, m: int):
    """Gram matrix of the bilinear polarization B(u,v)=Q(u+v)-Q(u)-Q(v)."""
    gram = [[0] * m for _ in range(m)]
    for i in range(m):
        gram[i][i] = field.mul(2 % field.p, quad[i][i])
        for j in range(i + 1, m):
            gram[i][j] = quad[i][j]
            gram[j][i] = quad[i][j]
    return tuple(tuple(r) for r in gram)


def make_polar_spec(
    family: str,
    rank: int,
    field: FieldSpec,
    *,
    gram=None,
    quad=None,
    conj_power: int = 0,
    ambient_dim: int | None = None,
) -> PolarSpec:
    """Build and verify a PolarSpec from explicit form data."""
    if family not in FAMILY_E_TAG:
        raise FormsError(f"unknown family {family!r}")
    m = ambient_dim if ambient_dim is not None else _AMBIENT[family](rank)
    if quad is not None:
        quad = tuple(tuple(r) for r in quad)
        gram = _polarize(field, quad, m)
    else:
        gram = tuple(tuple(r) for r in gram)
    spec = PolarSpec(family, rank, field.q, m, gram, quad, conj_power)
    _verify_spec(spec)
    return spec


def _verify_spec(spec: PolarSpec):
    fld = spec.field
    m = spec.ambient_dim
    # nondegeneracy: the (conjugate-)bilinear part has full rank
    _, piv = rref_gf(fld, spec.gram)
    if len(piv) != m:
        raise FormsError("degenerate form: gram matrix is singular")
    witness = _greedy_maximal_isotropic(spec)
    if witness.dim != spec.rank:
        raise FormsError(
            f"form has Witt index {witness.dim}, expected rank {spec.rank}"
        )


def _greedy_maximal_isotropic(spec: PolarSpec) -> Subspace:
    """Extend the zero space by canonical-first isotropic points until
    stuck; the result is a maximal totally isotropic subspace."""
    cur = Subspace.zero(spec.field, spec.ambient_dim)
    pts = spec.isotropic_points()
    changed = True
    while changed:
        changed = False
        for p in pts:
            if contains(cur, p):
                continue
            v = p.basis[0]
            if all(spec.bilinear(v, b) == 0 for b in cur.basis) and all(
                spec.bilinear(b, v) == 0 for b in cur.basis
            ):
                cur = span(cur, p)
                changed = True
                break
    return cur


def standard_polar(family: str, n: int, field: FieldSpec) -> PolarSpec:
    """The fixed standard form of each family (see module docstring)."""
    if n < 1:
        raise FormsError("rank must be >= 1")
    q = field.q
    if family in ("U_even", "U_odd"):
        if field.deg % 2 != 0:
            raise FormsError(f"unitary families need square q, got {q}")
        m = _AMBIENT[family](n)
        gram = tuple(
            tuple(1 if i == j else 0 for j in range(m)) for i in range(m)
        )
        return make_polar_spec(
            family, n, field, gram=gram, conj_power=field.deg // 2
        )
    if family == "Sp":
        m = 2 * n
        gram = [[0] * m for _ in range(m)]
        for i in range(n):
            gram[2 * i][2 * i + 1] = 1
            gram[2 * i + 1][2 * i] = field.neg(1)
        return make_polar_spec(family, n, field, gram=gram)
    if family == "O_plus":
        m = 2 * n
        quad = [[0] * m for _ in range(m)]
        for i in range(n):
            quad[2 * i][2 * i + 1] = 1
        return make_polar_spec(family, n, field, quad=quad)
    if family == "O_odd":
        if field.p == 2:
            raise FormsError(
                "O_odd in characteristic 2 is not supported; use the "
                "isomorphic Sp of the same rank"
            )
        m = 2 * n + 1
        quad = [[0] * m for _ in range(m)]
        quad[0][0] = 1
        for i in range(n):
            quad[2 * i + 1][2 * i + 2] = 1
        return make_polar_spec(family, n, field, quad=quad)
    if family == "O_minus":
        m = 2 * n + 2
        quad = [[0] * m for _ in range(m)]
        quad[0][0] = 1
        quad[0][1] = 1
        quad[1][1] = _least_irreducible_c(field)
        for i in range(n):
            quad[2 * i + 2][2 * i + 3] = 1
        return make_polar_spec(family, n, field, quad=quad)
    raise FormsError(f"unknown family {family!r}")
