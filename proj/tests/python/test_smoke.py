from fractions import Fraction

import dualgraph as dg


def test_chain_det():
    assert dg.chain_det([-2, -2, -2, -2, -2, -3]) == 13
    assert dg.chain_det([]) == 1
    assert dg.tree_det([-2, -2, -2, -2], [(0, 1), (0, 2), (0, 3)]) == 4


def test_twig_data():
    td = dg.twig_data([-3, -3])
    assert td["d"] == 8
    assert td["capacity"] == Fraction(3, 8)


def test_hj_round_trip():
    assert dg.chain_from_pair(8, 3) == [-3, -3]
    assert dg.pair_from_chain([-3, -2, -2]) == (7, 3)
    assert len(dg.enumerate_chains(12)) == 4


def test_bark():
    assert dg.bark_twig([-2])["square"] == Fraction(-1, 2)
    assert dg.bark_fork(2, [[-2], [-3], [-2, -2, -2]])["square"] == Fraction(-8, 5)


def test_fork_enumeration():
    recs = dg.enumerate_forks(10)
    assert len(recs) == 1
    assert recs[0]["type"] == (2, 3, 4)
    assert recs[0]["size"] == 6
    assert not dg.feasible_a(6)["t233"]
    assert dg.classify_fork(2, [[-2], [-2], [-2]]) == (2, 2, 2)
    assert dg.classify_fork(1, [[-2], [-2], [-2]]) is None


def test_numerology_row():
    n = dg.assemble(1, [[-2], [-3], [-3, -3]], 2, [[-2], [-3], [-2, -2, -2]])
    assert n["b2"] == 11
    assert n["KDE2"] == -2
    assert n["P2"] == Fraction(1, 120)
    assert n["bkD2"] == Fraction(-29, 24)
    assert n["bkE2"] == Fraction(-8, 5)
    assert n["residual"] == Fraction(4, 5)


def test_tables_and_scan():
    assert dg.check_table("1") == []
    assert dg.check_table("1bis") == []
    assert dg.check_table("2") == []
    summary = dg.cases_summary()
    assert summary["survivors"] == 6
    assert len(summary["survivor_list"]) == 6
    assert dg.r4_ok()
    assert dg.lemma59_ok()
