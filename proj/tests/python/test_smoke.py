import pytest

import braidlab


def test_braid_operations():
    assert braidlab.normalize_braid("aB") == "s1 s2^-1"
    assert braidlab.sign("s1 s2^-1") == (1, 1)
    assert braidlab.sign("s2^-3") == (-1, 2)
    assert braidlab.sign("") == (0, 0)
    assert braidlab.handle_reduce("s1 s2 s1^-1") == ("s2^-1 s1 s2", 1)
    assert braidlab.compare("s1 s2 s1", "s2 s1 s2") == "equal"
    assert braidlab.braid_equal("s1 s2 s1", "s2 s1 s2")
    assert braidlab.exponent_sum("s1 s2 s1 s1 s2 s1 s2^-6") == 0
    assert braidlab.cofinal_bound("s2") == 1


def test_burau_entries_are_exact_integers():
    m = braidlab.burau("s1")
    assert m[0][0] == {1: -1}
    assert m[0][1] == {0: 1}
    big = braidlab.burau(" ".join(["s1 s2^-1"] * 120))
    assert max(abs(c) for row in big for p in row for c in p.values()) > 2**63


def test_free_group_operations():
    assert braidlab.apply_automorphism("phi", "x") == "x y^-1 x"
    assert braidlab.apply_automorphism("phi", "y", -1) == "x^-1 y x^-2 y"
    assert braidlab.abelianize("x y^-1 x^2") == [3, -1]
    assert braidlab.embed("y") == "s1^2 s2^-2"
    assert braidlab.commutator_rewrite("s1 s2^-1") == "x"
    assert braidlab.kn_basis(3) == ["y", "x^2", "x y x"]
    assert braidlab.kn_rewrite("x y x^-1", 3) == "g3 g2^-1"
    assert braidlab.kn_member("x^2", 3) and not braidlab.kn_member("x", 3)
    assert braidlab.subgroup_contains(["x^2", "y", "x y x^-1"], "x y x")
    assert braidlab.subgroup_rank(braidlab.kn_basis(5)) == 5


def test_orders_and_probes():
    assert braidlab.exotic_compare("x", "y") == "less"
    assert braidlab.exotic_compare("1", "g2", "kn:3") == "less"
    w = braidlab.convexity_probe(["x"])
    assert w is not None and w["valid"]
    assert braidlab.convexity_probe([""]) is None
    g, h = braidlab.conradian_violation_search("f2", 6)
    assert braidlab.exotic_compare("1", g) == "less"


def test_errors():
    with pytest.raises(braidlab.ParseError):
        braidlab.sign("s1 q")
    with pytest.raises(braidlab.DomainError):
        braidlab.sign("s3")
    with pytest.raises(ValueError):
        braidlab.kn_rewrite("x", 3)


def test_verify_is_deterministic():
    a = braidlab.verify(seed=3, trials=10)
    assert a["all_passed"]
    assert all(c["status"] == "pass" for c in a["checks"])
    assert a == braidlab.verify(seed=3, trials=10, threads=2)
