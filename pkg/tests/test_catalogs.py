import pytest

from degone.boolfn import BoolFn
from degone.catalogs import (
    BilinearUnion,
    CatalogError,
    Constant,
    PointOrHyperplane,
    PolarApexUnion,
    PolarPointUnion,
    catalog,
    catalog_bits,
    match_catalog,
)
from degone.classify import is_degree_one
from degone.domains import (
    build_bilinear,
    build_grassmann,
    build_hamming,
    build_johnson,
    build_multislice,
    build_polar,
)
from degone.forms import standard_polar
from degone.gf import field_spec
from degone.subspaces import all_points, contains, enumerate_subspaces


F2 = field_spec(2)


def brute_degree1(dom):
    return {b for b in range(1 << dom.v) if is_degree_one(dom, BoolFn(dom, b))}


def test_johnson42_catalog_is_exactly_degree1():
    j = build_johnson(4, 2)
    cat = catalog_bits(j)
    assert len(cat) == 10
    assert cat == brute_degree1(j)


def test_hamming23_catalog_count_and_dedup():
    h = build_hamming(2, 3)
    entries = catalog(h)
    assert len(entries) == 14  # 2 constants + 2*(2^3 - 2) per-position forms
    assert catalog_bits(h) == brute_degree1(h)
    # constants collapse descriptors from every position
    zero = next(e for e in entries if e.fn.weight == 0)
    assert len(zero.descriptors) >= 2


def test_grassmann_catalog_count():
    g = build_grassmann(F2, 4, 2)
    assert len(catalog(g)) == 302


def test_catalog_closed_under_complement():
    for dom in (
        build_johnson(4, 2),
        build_hamming(2, 3),
        build_grassmann(F2, 4, 2),
        build_polar(standard_polar("O_plus", 2, F2), 2),
        build_bilinear(F2, 2, 2),
        build_multislice([2, 2, 1]),
    ):
        bits = catalog_bits(dom)
        mask = (1 << dom.v) - 1
        assert all((mask ^ b) in bits for b in bits)


def test_every_catalog_member_is_degree_one_small():
    for dom in (
        build_johnson(4, 2),
        build_hamming(3, 2),
        build_polar(standard_polar("O_plus", 2, F2), 2),
        build_multislice([1, 1, 1, 1]),
    ):
        for e in catalog(dom):
            assert is_degree_one(dom, e.fn)


def test_match_catalog_roundtrip_and_nonmember():
    j = build_johnson(4, 2)
    for e in catalog(j):
        assert match_catalog(e.fn) == e.descriptors
    # weight-1 functions are not degree-1 on J(4,2)
    assert match_catalog(BoolFn(j, 1)) == ()
    zero = BoolFn(j, 0)
    assert any(isinstance(d, Constant) and d.value == 0 for d in match_catalog(zero))


def test_grassmann_side_condition_point_in_hyperplane():
    g = build_grassmann(F2, 4, 2)
    pi = enumerate_subspaces(F2, 4, 3)[0]
    inside = next(p for p in all_points(2, 4) if contains(pi, p))
    with pytest.raises(CatalogError, match="hyperplane"):
        PointOrHyperplane(inside, pi, True).evaluate(g)


def test_polar_collinear_points_rejected():
    dom = build_polar(standard_polar("O_plus", 2, F2), 2)
    spec = dom.polar
    pts = spec.isotropic_points()
    a = pts[0]
    b = next(p for p in pts if p != a and spec.collinear(a, p))
    with pytest.raises(CatalogError, match="non-collinear"):
        PolarPointUnion((a, b), True).evaluate(dom)


def test_polar_apex_shape_weight_matches_enumeration():
    dom = build_polar(standard_polar("O_plus", 2, F2), 2)
    spec = dom.polar
    p1 = spec.isotropic_points()[0]
    fn = PolarApexUnion(p1, (), True).evaluate(dom)
    pi = spec.perp(p1)
    expect = sum(
        1
        for i, K in enumerate(dom.vertices)
        if contains(pi, K) and not K.contains_vector(p1.basis[0])
    )
    assert fn.weight == expect


def test_bilinear_side_conditions():
    dom = build_bilinear(F2, 2, 2)
    ell = dom.excluded
    from degone.subspaces import meet

    lines = [
        g for g in enumerate_subspaces(F2, 4, 2) if meet(g, ell).dim == 1
    ]
    g = lines[0]
    pts = [p for p in g.points() if not contains(ell, p)]
    traces = [t for t in ell.points()]
    hyp = next(
        h
        for h in enumerate_subspaces(F2, 4, 3)
        if meet(h, ell) == traces[0] and any(contains(h, p) for p in pts)
    )
    bad_p = next(p for p in pts if contains(hyp, p))
    with pytest.raises(CatalogError, match="hyperplane"):
        BilinearUnion(g, traces[0], (bad_p,), (hyp,), True).evaluate(dom)
    off_line = next(
        p for p in all_points(2, 4) if not contains(g, p) and not contains(ell, p)
    )
    with pytest.raises(CatalogError, match="line"):
        BilinearUnion(g, None, (off_line,), (), True).evaluate(dom)


def test_multislice_position_of_color_needs_multiplicity_one():
    dom = build_multislice([2, 2, 1])
    from degone.catalogs import PositionOfColor

    fn = PositionOfColor(2, frozenset({0, 1})).evaluate(dom)
    assert fn.weight == sum(1 for w in dom.vertices if w.index(2) in (0, 1))
    with pytest.raises(CatalogError, match="multiplicity"):
        PositionOfColor(0, frozenset({0})).evaluate(dom)


def test_s4_catalog_descriptor_overlap():
    dom = build_multislice([1, 1, 1, 1])
    entries = catalog(dom)
    # row and column forms coincide for singleton index sets, so some
    # functions must carry several descriptors
    assert any(len(e.descriptors) > 1 for e in entries)


def test_catalog_unsupported_family():
    from degone.domains import restrict

    g = build_johnson(4, 2)
    child = restrict(g, lambda s: 0 in s).child
    with pytest.raises(CatalogError, match="no catalog"):
        catalog(child)


def test_bilinear_catalog_scale_guard():
    dom = build_bilinear(field_spec(4), 2, 2)
    with pytest.raises(CatalogError, match="desk scale"):
        catalog(dom)
