import random

import pytest

from degone.forms import (
    FormsError,
    isotropic_point_count,
    standard_polar,
)
from degone.gf import field_spec
from degone.subspaces import Subspace, contains, enumerate_subspaces


def test_hyperbolic_o_plus_4_2_point_count():
    spec = standard_polar("O_plus", 2, field_spec(2))
    assert len(spec.isotropic_points()) == 9


def test_elliptic_quadric_point_count():
    spec = standard_polar("O_minus", 1, field_spec(3))
    assert len(spec.isotropic_points()) == 10  # q^2 + 1


def test_symplectic_every_point_isotropic():
    spec = standard_polar("Sp", 2, field_spec(2))
    assert len(spec.isotropic_points()) == 15


@pytest.mark.parametrize("n,q", [(2, 2), (2, 3), (3, 2)])
def test_o_plus_count_matches_closed_form(n, q):
    spec = standard_polar("O_plus", n, field_spec(q))
    expect = (q ** (n - 1) + 1) * (q**n - 1) // (q - 1)
    assert len(spec.isotropic_points()) == expect
    assert isotropic_point_count("O_plus", n, q) == expect


def test_totally_isotropic_basics():
    spec = standard_polar("O_plus", 2, field_spec(2))
    zero = Subspace.zero(field_spec(2), 4)
    assert spec.is_totally_isotropic(zero)
    w = Subspace.from_vectors(
        field_spec(2), 4, [(1, 0, 0, 0), (0, 0, 1, 0)]
    )  # span{e1, e3} under Q = x1 x2 + x3 x4
    assert spec.is_totally_isotropic(w)
    assert not spec.is_totally_isotropic(Subspace.full(field_spec(2), 4))


@pytest.mark.parametrize(
    "family,n,q",
    [
        ("O_plus", 3, 2),
        ("O_plus", 2, 3),
        ("O_minus", 1, 3),
        ("O_odd", 2, 3),
        ("Sp", 2, 2),
        ("U_odd", 1, 4),
    ],
)
def test_perp_involution_and_dimensions(family, n, q):
    spec = standard_polar(family, n, field_spec(q))
    m = spec.ambient_dim
    zero = Subspace.zero(field_spec(q), m)
    assert spec.perp(zero).dim == m
    rng = random.Random(11)
    for k in range(1, m):
        subs = enumerate_subspaces(field_spec(q), m, k)
        sample = subs if len(subs) <= 40 else rng.sample(subs, 40)
        for s in sample:
            p = spec.perp(s)
            assert p.dim == m - s.dim
            assert spec.perp(p) == s
    for pt in spec.isotropic_points()[:10]:
        assert contains(spec.perp(pt), pt)


def test_degenerate_sections_have_isotropic_apex():
    spec = standard_polar("O_plus", 2, field_spec(2))
    degenerate = 0
    for pi in enumerate_subspaces(field_spec(2), 4, 3):
        st = spec.hyperplane_section_type(pi)
        if st.kind == "degenerate":
            degenerate += 1
            assert spec.is_isotropic_vector(st.apex.basis[0])
            assert spec.perp(st.apex) == pi
    # degenerate hyperplanes <-> isotropic points
    assert degenerate == len(spec.isotropic_points())


def test_parabolic_sections_split_into_both_types():
    spec = standard_polar("O_odd", 2, field_spec(3))
    kinds = set()
    degenerate = 0
    for pi in enumerate_subspaces(field_spec(3), 5, 4):
        st = spec.hyperplane_section_type(pi)
        if st.kind == "nondegenerate":
            kinds.add((st.family, st.rank))
        else:
            degenerate += 1
    assert kinds == {("O_plus", 2), ("O_minus", 1)}
    assert degenerate == len(spec.isotropic_points())


def test_symplectic_has_no_nondegenerate_sections():
    spec = standard_polar("Sp", 2, field_spec(2))
    for pi in enumerate_subspaces(field_spec(2), 4, 3):
        assert spec.hyperplane_section_type(pi).kind == "degenerate"


def test_unitary_sections_and_counts():
    spec = standard_polar("U_odd", 1, field_spec(4))
    assert len(spec.isotropic_points()) == isotropic_point_count("U_odd", 1, 4)
    kinds = {
        spec.hyperplane_section_type(pi).kind
        for pi in enumerate_subspaces(field_spec(4), 3, 2)
    }
    assert kinds == {"degenerate", "nondegenerate"}


def test_o_odd_char2_rejected():
    with pytest.raises(FormsError, match="isomorphic Sp"):
        standard_polar("O_odd", 2, field_spec(2))


def test_unitary_needs_square_order():
    with pytest.raises(FormsError, match="square"):
        standard_polar("U_even", 1, field_spec(3))


def test_witt_index_verified_at_construction():
    for family, n, q in (
        ("O_plus", 2, 3),
        ("O_minus", 1, 5),
        ("Sp", 2, 3),
        ("U_even", 1, 9),
        ("O_odd", 2, 3),
    ):
        spec = standard_polar(family, n, field_spec(q))
        assert spec.rank == n
        assert len(spec.isotropic_subspaces(n)) > 0


def test_collinearity_is_isotropic_line_relation():
    spec = standard_polar("O_plus", 2, field_spec(2))
    pts = spec.isotropic_points()
    from degone.subspaces import span

    for a in pts:
        for b in pts:
            if a == b:
                continue
            line_iso = spec.is_totally_isotropic(span(a, b))
            assert spec.collinear(a, b) == line_iso
