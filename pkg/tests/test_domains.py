import pytest

from degone.boolfn import BoolFn
from degone.catalogs import catalog
from degone.classify import is_degree_one
from degone.domains import (
    DomainError,
    build_bilinear,
    build_grassmann,
    build_hamming,
    build_johnson,
    build_multislice,
    build_polar,
    expected_vertex_count,
    restrict,
    restrict_to_point,
)
from degone.forms import standard_polar
from degone.gf import field_spec
from degone.subspaces import all_points, contains, gaussian


F2 = field_spec(2)
F3 = field_spec(3)


def test_hamming_counts_and_row_sums():
    h = build_hamming(3, 2)
    assert (h.v, h.c) == (8, 6)
    assert h.incidence[:, 1:].sum(axis=1).tolist() == [3] * 8
    h23 = build_hamming(2, 3)
    assert (h23.v, h23.c) == (9, 6)


def test_johnson_counts():
    j = build_johnson(4, 2)
    assert j.v == 6
    assert build_johnson(10, 4).v == 210
    assert j.incidence[:, 1:].sum(axis=1).tolist() == [2] * 6


def test_multislice_counts():
    assert build_multislice([1, 1, 1, 1]).v == 24
    assert build_multislice([2, 2]).v == expected_vertex_count(
        "johnson", n=4, k=2
    )
    assert build_multislice([2, 2, 1]).v == 30


def test_grassmann_counts_and_row_sums():
    g = build_grassmann(F2, 4, 2)
    assert (g.v, g.c) == (35, 15)
    assert build_grassmann(F2, 5, 2).v == 155
    assert g.incidence[:, 1:].sum(axis=1).tolist() == [3] * 35


def test_polar_counts():
    p = build_polar(standard_polar("O_plus", 2, F2), 2)
    assert (p.v, p.c) == (6, 9)
    p3 = build_polar(standard_polar("O_plus", 3, F2), 2)
    # flag-count formula: gaussian(n,k,q) * prod_{i=n-k+1..n} (q^(i-1+e)+1)
    assert p3.v == gaussian(3, 2, 2) * (2**1 + 1) * (2**2 + 1) == 105


def test_polar_k1_unsupported():
    with pytest.raises(DomainError, match="k = 1"):
        build_polar(standard_polar("O_plus", 2, F2), 1)


def test_bilinear_counts():
    assert build_bilinear(F2, 2, 2).v == 16
    assert build_bilinear(F3, 2, 2).v == 81
    assert build_bilinear(F2, 2, 3).v == 64


def test_adjacency_symmetric_irreflexive_regular():
    for dom in (
        build_hamming(2, 3),
        build_johnson(5, 2),
        build_multislice([2, 2, 1]),
        build_grassmann(F2, 4, 2),
        build_polar(standard_polar("O_plus", 2, F2), 2),
        build_bilinear(F2, 2, 2),
    ):
        assert dom.valency is not None
        for i, nbrs in enumerate(dom.neighbors):
            assert i not in nbrs
            assert len(nbrs) == dom.valency
            for j in nbrs:
                assert i in dom.neighbors[j]


def test_vertex_keys_strictly_increasing():
    for dom in (build_johnson(4, 2), build_grassmann(F2, 4, 2)):
        assert list(dom.vertex_keys) == sorted(dom.vertex_keys)


def test_restrict_to_vertices_through_point():
    g = build_grassmann(F2, 4, 2)
    a = g.coords[0]
    r = restrict(g, lambda K: contains(K, a))
    assert r.child.v == gaussian(3, 1, 2) == 7
    assert r.child.coord_keys == g.coord_keys


def test_restrict_to_hyperplane_interior():
    g = build_grassmann(F2, 4, 2)
    from degone.subspaces import enumerate_subspaces

    pi = enumerate_subspaces(F2, 4, 3)[0]
    r = restrict(g, lambda K: contains(pi, K))
    assert r.child.v == gaussian(3, 2, 2) == 7


def test_restrict_to_all_is_identity():
    g = build_grassmann(F2, 4, 2)
    r = restrict(g, lambda K: True)
    assert r.child.vertex_keys == g.vertex_keys
    assert r.parent_indices == tuple(range(g.v))


def test_restrict_empty_selection_rejected():
    g = build_johnson(4, 2)
    with pytest.raises(DomainError, match="no vertices"):
        restrict(g, lambda K: False)


def test_grassmann_point_restriction_is_quotient_domain():
    g = build_grassmann(F2, 4, 2)
    a = all_points(2, 4)[0]
    pr = restrict_to_point(g, a)
    assert pr.child.family == "grassmann"
    assert pr.child.v == gaussian(3, 1, 2) == 7
    assert len(pr.parent_indices) == pr.child.v


def test_transported_point_indicator_is_point_or_constant():
    g = build_grassmann(F2, 4, 2)
    from degone.catalogs import PointIndicator

    for a in all_points(2, 4):
        pr = restrict_to_point(g, a)
        child_point_bits = {
            PointIndicator(pc, True).evaluate(pr.child).bits
            for pc in pr.child.coords
        }
        for p in all_points(2, 4):
            fn = PointIndicator(p, True).evaluate(g)
            moved = pr.transport(fn)
            if p == a:
                assert moved.bits == (1 << pr.child.v) - 1  # constant one
            else:
                assert moved.bits in child_point_bits


@pytest.mark.parametrize("n", [4, 5])
def test_full_catalog_transports_into_quotient_catalog(n):
    # every catalog function restricted to the lines through a point is,
    # in the quotient, again a catalog function of the smaller geometry
    from degone.catalogs import catalog_bits

    g = build_grassmann(F2, n, 2)
    entries = catalog(g)
    for a in all_points(2, n):
        pr = restrict_to_point(g, a)
        child_bits = catalog_bits(pr.child)
        for e in entries:
            assert pr.transport(e.fn).bits in child_bits


def test_transported_constant_stays_constant():
    g = build_grassmann(F2, 4, 2)
    a = all_points(2, 4)[1]
    pr = restrict_to_point(g, a)
    one = BoolFn.constant(g, 1)
    assert pr.transport(one).bits == (1 << pr.child.v) - 1


def test_polar_point_restriction_quotient():
    dual = build_polar(standard_polar("O_plus", 3, F2), 3)
    a = dual.coords[0]
    pr = restrict_to_point(dual, a)
    assert pr.child.family == "polar"
    assert pr.child.params["n"] == 2 and pr.child.params["k"] == 2
    assert pr.child.v == 6  # the rank-2 hyperbolic dual polar graph
    for e in catalog(dual)[:40]:
        moved = pr.transport(e.fn)
        assert is_degree_one(pr.child, moved)


def test_johnson_inside_hamming_transport():
    # J(4,2) is the weight-2 slice of H(4,2), coordinate-induced: every
    # degree-1 function of the cube restricts to a degree-1 function
    h = build_hamming(4, 2)
    r = restrict(h, lambda w: sum(w) == 2)
    assert r.child.v == build_johnson(4, 2).v
    for e in catalog(h):
        bits = 0
        for ci, pi in enumerate(r.parent_indices):
            if e.fn.value(pi):
                bits |= 1 << ci
        assert is_degree_one(r.child, BoolFn(r.child, bits))


def test_grassmann_lines_embed_in_big_johnson():
    # the 35 lines of GF(2)^4, viewed as 3-subsets of the 15 points, form
    # a coordinate-induced subdomain of J(15,3); its degree-1 functions
    # restrict to degree-1 functions on the line domain
    g = build_grassmann(F2, 4, 2)
    big = build_johnson(15, 3)
    subsets = [
        tuple(
            sorted(
                j
                for j, p in enumerate(g.coords)
                if K.contains_vector(p.basis[0])
            )
        )
        for K in g.vertices
    ]
    assert len(set(subsets)) == 35 and all(len(s) == 3 for s in subsets)
    idx = {v: i for i, v in enumerate(big.vertices)}
    r = restrict(big, [idx[s] for s in subsets])
    for e in catalog(big):
        bits = 0
        for ci, pi in enumerate(r.parent_indices):
            if e.fn.value(pi):
                bits |= 1 << ci
        assert is_degree_one(r.child, BoolFn(r.child, bits))


def test_symplectic_point_restriction_quotient():
    # quotient of the rank-3 symplectic dual polar graph by a point is
    # the rank-2 one; the gram-only form transport path
    from degone.catalogs import HyperplaneIndicator, PointIndicator
    from degone.subspaces import enumerate_subspaces

    dual = build_polar(standard_polar("Sp", 3, F2), 3)
    a = dual.coords[0]
    pr = restrict_to_point(dual, a)
    assert pr.child.params["family"] == "Sp"
    assert pr.child.params["n"] == 2 and pr.child.v == 15
    fns = [
        BoolFn.constant(dual, 1),
        PointIndicator(dual.coords[1], True).evaluate(dual),
        HyperplaneIndicator(enumerate_subspaces(F2, 6, 5)[0], True).evaluate(dual),
    ]
    for fn in fns:
        assert is_degree_one(pr.child, pr.transport(fn))


def test_manifest_shape():
    g = build_grassmann(F2, 4, 2)
    man = g.manifest()
    assert man["family"] == "grassmann"
    assert man["v"] == 35 and man["c"] == 15
    assert man["valency"] == 18
    assert len(man["vertex_keys"]) == 35
    assert len(man["coordinate_keys"]) == 15


def test_bilinear_override_must_be_disjointness_compatible():
    with pytest.raises(DomainError):
        build_bilinear(F2, 2, 2, excluded=all_points(2, 4)[0])
