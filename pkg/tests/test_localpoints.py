import pytest

from dscurves.errors import InvalidInput
from dscurves.fpoly import Poly, parse_poly
from dscurves.localpoints import (LocalWitness, fast_m_bound,
                                  _fast_m_bound_generic, lambda_cutoff,
                                  lambda_set, local_all, local_infinity,
                                  local_ramified_prime, witness_ok,
                                  witness_search)
from dscurves.splitting import QuadraticField, QuaternionData


def table_D(q, ptxt, stxt):
    return QuaternionData(ram1=parse_poly(ptxt, q), ram2=parse_poly(stxt, q))


def table_K(q, D, eps=1):
    return QuadraticField(eps=eps, radical=parse_poly("t", q) * D.ram1 * D.ram2)


def test_witness_ok_checks_all_conditions():
    q = 3
    D = table_D(q, "t^3+t^2+t+2", "t+1")
    l = parse_poly("t", q)
    w = witness_search(D, l)
    assert w is not None and witness_ok(D, w)
    # degree bound on a
    bad = LocalWitness(l=l, a=parse_poly("t^2", q), c=w.c)
    assert not witness_ok(D, bad)
    # c must be a unit
    assert not witness_ok(D, LocalWitness(l=l, a=w.a, c=0))


def test_witness_search_is_deterministic_first_hit():
    q = 3
    D = table_D(q, "t^3+t^2+t+2", "t+1")
    l = parse_poly("t^2+1", q)
    w = witness_search(D, l)
    assert w == witness_search(D, l)
    # nothing earlier in the (c, a) order also works
    if w is not None:
        from dscurves.fpoly import polys_of_degree_at_most
        for c in range(1, w.c + 1):
            for a in polys_of_degree_at_most(q, l.degree // 2):
                cand = LocalWitness(l=l, a=a, c=c)
                if (c, a.sort_key()) < (w.c, w.a.sort_key()):
                    assert not witness_ok(D, cand)


def test_witness_search_rejects_ramified_prime():
    q = 3
    D = table_D(q, "t^3+t^2+t+2", "t+1")
    with pytest.raises(InvalidInput):
        witness_search(D, D.ram1)


def test_local_infinity_parity():
    q = 3
    D_oddodd = table_D(q, "t^3+t^2+t+2", "t+1")
    K = table_K(q, D_oddodd)
    assert local_infinity(D_oddodd, K)
    # an even-degree ramified prime with split infinity fails
    D_mixed = table_D(q, "t^2+1", "t+1")
    K_split = QuadraticField(eps=1, radical=parse_poly("t^2+t+2", q)
                             * parse_poly("t^2+2t+2", q))
    from dscurves.splitting import SplitType, infinity_behavior
    assert infinity_behavior(K_split) == SplitType.SPLIT
    assert not local_infinity(D_mixed, K_split)


def test_local_ramified_prime_table_case():
    q = 3
    D = table_D(q, "t^3+t^2+t+2", "t+1")
    K = table_K(q, D)
    ok1, mu1 = local_ramified_prime(D, K, "ram1")
    ok2, mu2 = local_ramified_prime(D, K, "ram2")
    assert ok1 and ok2
    assert mu1 is not None and mu2 is not None  # both primes ramify in K


def test_local_ramified_prime_bad_which():
    q = 3
    D = table_D(q, "t^3+t^2+t+2", "t+1")
    with pytest.raises(InvalidInput):
        local_ramified_prime(D, table_K(q, D), "ram3")


def test_lambda_cutoff_and_set():
    q = 3
    D = table_D(q, "t^3+t^2+t+2", "t+1")
    assert lambda_cutoff(D) == 6
    ls = lambda_set(D, max_degree=2)
    assert D.ram1 not in ls and D.ram2 not in ls
    assert [l.degree for l in ls] == sorted(l.degree for l in ls)


def test_fast_m_bound_table_case():
    q = 3
    D = table_D(q, "t^3+t^2+t+2", "t+1")
    m = fast_m_bound(D)
    assert m is not None
    assert 0 <= m <= D.ram1.degree + D.ram2.degree - 2


def test_fast_m_bound_matches_generic_path():
    q = 3
    for ptxt, stxt in [("t^3+t^2+t+2", "t+1"), ("t^2+1", "t+2")]:
        D = table_D(q, ptxt, stxt)
        assert fast_m_bound(D) == _fast_m_bound_generic(D)


def test_local_all_known_triples_fast_rows():
    for q, ptxt, stxt in [(3, "t^3+t^2+t+2", "t+1"),
                          (3, "t^4+t^3+2t+1", "t^2+1"),
                          (3, "t^5+2t+1", "t+2")]:
        D = table_D(q, ptxt, stxt)
        K = table_K(q, D)
        report = local_all(D, K)
        assert report.ok
        assert report.infinity_ok and report.ram1_ok and report.ram2_ok
        assert not report.unwitnessed
        assert report.witness_cutoff <= report.lambda_cutoff
        covered = {w.l for w in report.witnesses}
        for l in lambda_set(D, max_degree=report.witness_cutoff):
            assert l in covered
        for w in report.witnesses:
            assert witness_ok(D, w)


def test_local_all_rejects_nonsplitting_field():
    q = 3
    D = table_D(q, "t^3+t^2+t+2", "t+1")
    # a field in which ram2 = t+1 splits cannot split D
    from dscurves.fpoly import monic_irreducibles
    from dscurves.splitting import SplitType, place_behavior
    for r in monic_irreducibles(q, 2):
        K = QuadraticField(eps=1, radical=r)
        if place_behavior(D.ram2, K) == SplitType.SPLIT:
            with pytest.raises(InvalidInput):
                local_all(D, K)
            break
    else:
        pytest.skip("no splitting radical of degree 2")
