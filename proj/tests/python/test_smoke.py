import pytest

mc = pytest.importorskip("mnfcomplex")


def pentagon():
    return mc.Complex(5, [[1, 3], [1, 4], [2, 4], [2, 5], [3, 5]])


def test_basic_invariants():
    p = pentagon()
    assert (p.n, p.m, p.dim, p.alpha) == (5, 5, 1, 2)
    assert p.f_vector() == [1, 5, 5]
    assert len(p.facets()) == 5
    assert p.is_face([1, 2])
    assert not p.is_face([1, 3])


def test_homology_and_lattice():
    p = pentagon()
    assert mc.reduced_betti(p) == [0, 0, 1]
    assert mc.is_homology_sphere(p, "rat")
    assert mc.betti_totals(p) == [1, 5, 5, 1]
    assert mc.duality_violations(p) == 0
    assert mc.duality_violations(mc.cross_minus_facet(3)) > 0


def test_isomorphism_and_generators():
    assert mc.are_isomorphic(mc.cyclic_boundary(2, 5), pentagon())
    assert mc.canonical_key(mc.codim3_sphere(7)) == mc.canonical_key(mc.cyclic_boundary(4, 7))
    s = mc.one_point_suspension(pentagon(), 1)
    assert s.n == 6
    assert mc.canonical_key(mc.unsuspend(s)) == mc.canonical_key(pentagon())


def test_parse_format_round_trip():
    p = pentagon()
    assert mc.Complex.parse(p.format()) == p


def test_errors():
    with pytest.raises(mc.MnfError):
        mc.Complex(3, [[1, 2], [1, 2, 3]])
    with pytest.raises(ValueError):
        mc.Complex.parse("garbage")


def test_report_and_census():
    r = mc.analyze(pentagon())
    assert r["lcm"]["total_betti"] == [1, 5, 5, 1]
    records, summary = mc.census(5, 5, unsuspended=True)
    assert [x["key"] for x in records] == [mc.canonical_key(pentagon())]
    assert summary["complete"]
