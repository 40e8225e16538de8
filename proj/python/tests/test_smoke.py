from fractions import Fraction

import pytest

import ocpoly


def fork():
    return ocpoly.Poset(4, [(1, 2), (1, 3), (3, 4)])


def test_fork_volumes():
    p = fork()
    small = ocpoly.EdgePartition(p, [(1, 2)])
    large = ocpoly.EdgePartition(p, [(1, 2), (1, 3)])
    assert ocpoly.volume(small) == Fraction(1, 24)
    assert ocpoly.volume(small, "order") == Fraction(3, 24)
    assert ocpoly.volume(small, "chain") == Fraction(3, 24)
    assert ocpoly.volume(large) == Fraction(5, 24)
    assert p.linear_extensions() == 3


def test_four_cycle_half_vertex():
    p = ocpoly.Poset(4, [(1, 2), (1, 3), (2, 4), (3, 4)])
    l1 = ocpoly.EdgePartition(p, [(1, 2), (2, 4), (3, 4)])
    assert (Fraction(1, 2),) * 4 in ocpoly.vertices(l1)
    assert not ocpoly.is_integral(l1)
    assert ocpoly.is_integral(l1.complement())


def test_hrep_text():
    l = ocpoly.EdgePartition(ocpoly.chain(7), [(1, 2), (4, 5), (5, 6)])
    rows = ocpoly.hrep(l)
    assert "x2 + x3 + x4 <= 1" in rows
    assert "-x1 + x2 <= 0" in rows
    assert len(rows) == 19


def test_new_type_fingerprint():
    text = open(__file__.replace("python/tests/test_smoke.py", "data/new-type-6.poset")).read()
    f = ocpoly.fingerprint(ocpoly.parse_poset_file(text))
    assert (f["vertex_count"], f["facet_count"]) == (10, 13)


def test_x_equivalence():
    x = ocpoly.Poset(5, [(1, 3), (2, 3), (3, 4), (3, 5)])
    mixed = ocpoly.EdgePartition(x, [(1, 3), (3, 4), (3, 5)])
    r = ocpoly.equivalent(mixed, "order-chain", mixed, "order")
    assert r["verdict"] == "equivalent"
    assert x.contains_forbidden_x()
    r = ocpoly.equivalent(mixed, "order", mixed, "chain")
    assert r["verdict"] == "distinct"


def test_descent_statistics():
    assert ocpoly.beta(4, [2]) == 5
    assert len(ocpoly.family_f(8)) == 42
    value, argmaxes = ocpoly.max_beta(5)
    assert value == 11
    assert argmaxes == [[1, 4], [2, 3]]


def test_posets_up_to_iso():
    assert [len(ocpoly.posets_up_to_iso(n)) for n in range(1, 6)] == [1, 2, 5, 16, 63]


def test_errors():
    with pytest.raises(ocpoly.Error, match="DirectedCycle"):
        ocpoly.Poset(2, [(1, 2), (2, 1)])
    with pytest.raises(ocpoly.Error):
        ocpoly.EdgePartition(ocpoly.chain(3), [(1, 3)])
    with pytest.raises(ValueError):
        ocpoly.max_beta(11)


def test_verify_and_cli():
    assert "forbidden-x" in ocpoly.suite_slugs()
    report = ocpoly.verify("fibonacci-family")
    assert report["passed"]
    code, out, err = ocpoly.run_cli(["descent-max", "4", "--format", "json"])
    assert code == 0 and '"max_beta": 3' in out
    assert ocpoly.run_cli(["nope"])[0] == 2
