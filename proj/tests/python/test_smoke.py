import json

import pytest

import achain


def test_validate_and_stats():
    c = achain.validate([1, 2, 3, 5, 10, 20, 23])
    assert c.length == 6
    assert c.target == 23
    assert c.elements == [1, 2, 3, 5, 10, 20, 23]
    s = achain.stats(c)
    assert s.star
    assert s.small_steps == c.length - achain.lambda_(23)


def test_validate_rejects_bad_chain():
    with pytest.raises(achain.ChainError):
        achain.validate([1, 2, 5])
    with pytest.raises(ValueError):
        achain.validate([2, 3])


def test_big_integers_round_trip():
    big = 2**200 + 1
    c = achain.binary_chain(big)
    assert c.target == big
    assert achain.nu(big) == 2
    assert achain.lambda_(big) == 200


def test_exact_search():
    o = achain.exact_length(191)
    assert o.length == 11
    assert o.proven_minimal
    assert o.certificate.target == 191
    assert achain.exact_length(1479).length == 14


def test_oracle_agrees_with_search():
    table = achain.bfs_oracle(64)
    assert table[0] == -1
    for n in range(1, 65):
        assert achain.exact_length(n).length == table[n]


def test_lift_star():
    c = achain.validate([1, 2, 3])
    lifted = achain.lift_star(c)
    assert lifted.values() == [1, 2, 3, 6, 7]
    assert lifted.length == 4
    assert lifted.verify()
    assert json.loads(lifted.accounting())["shifts_total"] == 2


def test_families():
    assert achain.u_chain(6).target == 1479
    assert achain.family2_n(1, 3) == 5517
    assert achain.family2_chain(1, 3).length == 16
    lifted = achain.u_mersenne_chain(1)
    assert lifted.exponent == 53
    assert lifted.values()[-1] == 2**53 - 1
    assert achain.match_family2(5517) == (1, 3)


def test_scholz_check():
    r = achain.scholz_check(7)
    assert r.verdict == "PROVEN"
    assert r.route == "star-lift"
    assert r.lifted_length == r.bound == 10
    assert json.loads(r.to_json())["ell_n"] == 4
    r = achain.scholz_check(5517)
    assert r.route == "family-theorem-5"
    with pytest.raises(ValueError):
        achain.scholz_check(100, route="family-theorem-3")


def test_doubling_transfer_and_sweep():
    r = achain.doubling_transfer(achain.scholz_check(3), 3)
    assert r.n == 6
    assert r.lifted.values()[-1] == 2**6 - 1
    with pytest.raises(achain.HypothesisViolated):
        achain.doubling_transfer(achain.scholz_check(5), 3)
    reports = achain.sweep(20, workers=2)
    assert [r.n for r in reports] == list(range(1, 21))
    assert all(r.verdict == "PROVEN" for r in reports)


def test_chain_text_round_trip():
    c = achain.family2_chain(1, 3)
    assert achain.read_chain(c.to_text()) == c
    with pytest.raises(achain.ParseError):
        achain.read_chain("# chain-v1\n1\n2\n5\n")
