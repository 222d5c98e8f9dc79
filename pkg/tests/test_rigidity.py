import itertools
import math

import pytest

from quasirigid import fixtures
from quasirigid.perm import Permutation, compose, conjugate, from_cycles, identity, inverse
from quasirigid.quasigroup import Isotopy, dual, from_rows, is_isotopy, special_tracks
from quasirigid.rigidity import (
    AutotopismSearch,
    OracleLimitError,
    autotopisms,
    autotopisms_bruteforce,
    automorphisms,
    automorphisms_bruteforce,
    census,
    enumerate_latin_squares,
    is_rigid,
    is_super_rigid,
)
from quasirigid.spins import SpinTable, special_parts

NAMES = fixtures.NAMES


@pytest.fixture(scope="module")
def auts(tables):
    return {name: automorphisms(q) for name, q in tables.items()}


@pytest.fixture(scope="module")
def atps(tables):
    return {name: autotopisms(q) for name, q in tables.items()}


def test_fig1_is_rigid(auts):
    assert auts["fig1"] == [identity(4)]


def test_cyclic_group_of_order_4_has_two_automorphisms(auts):
    assert len(auts["Z4"]) == 2
    assert auts["Z4"][1] == from_cycles([[2, 4]], 4)


@pytest.mark.parametrize("name", ["fig1", "ex4", *fixtures.RIGID_LOOPS, "ex8", "ex9"])
def test_rigid_fixtures(name, tables):
    assert is_rigid(tables[name])


@pytest.mark.parametrize("name", ["ex1a", "ex1b", "ex2", "Z3", "Z4"])
def test_non_rigid_fixtures(name, tables):
    assert not is_rigid(tables[name])


@pytest.mark.parametrize("name", [n for n in NAMES if fixtures.load(n).order <= 8])
def test_automorphisms_match_bruteforce(name, tables, auts):
    assert automorphisms_bruteforce(tables[name]) == auts[name]


@pytest.mark.parametrize("name", NAMES)
def test_autotopisms_match_bruteforce(name, tables, atps):
    assert autotopisms_bruteforce(tables[name]) == atps[name]


def test_order_one():
    q = from_rows([[1]])
    assert automorphisms(q) == automorphisms_bruteforce(q) == [identity(1)]
    assert autotopisms(q) == [Isotopy.identity(1)]
    assert is_rigid(q) and is_super_rigid(q)


def test_order_three_proof_automorphisms():
    # an idempotent e gives the automorphism (e.xy.); with no idempotent the
    # square is commutative and (123.) is an automorphism
    for q in enumerate_latin_squares(3):
        found = set(automorphisms(q))
        idem = [x for x in (1, 2, 3) if q(x, x) == x]
        if idem:
            e = idem[0]
            x, y = [v for v in (1, 2, 3) if v != e]
            assert from_cycles([[x, y]], 3) in found
        else:
            assert dual(q) == q
            assert from_cycles([[1, 2, 3]], 3) in found


def test_group_autotopism_counts(tables, atps):
    # |G|^2 |Aut G| for a group G
    for name, n in (("Z2", 2), ("Z3", 3), ("Z4", 4)):
        aut = automorphisms_bruteforce(tables[name])
        assert len(atps[name]) == n * n * len(aut)
    assert len(atps["Z4"]) == 32
    assert len(atps["Z2"]) == 4


def test_super_rigid_examples(tables, atps):
    assert atps["ex8"] == [Isotopy.identity(7)]
    assert atps["ex9"] == [Isotopy.identity(9)]
    assert is_super_rigid(dual(tables["ex8"]))
    assert not is_super_rigid(tables["ex1a"])


def test_gamma_candidates(tables):
    # special parts 1..5 leave gamma the choice of swapping 6 and 7
    s = AutotopismSearch(tables["ex8"])
    assert [str(g) for g in s.gammas()] == ["(1.2.3.4.5.6.7.)", "(1.2.3.4.5.67.)"]
    assert s.special == {1, 2, 3, 4, 5}


def test_results_sorted_identity_first(atps, auts):
    for name in NAMES:
        assert atps[name][0].is_identity()
        assert auts[name][0].is_identity()
        keys = [t.sort_key() for t in atps[name]]
        assert keys == sorted(keys)


def test_parallel_autotopisms_agree(tables, atps):
    assert autotopisms(tables["ex2"], jobs=2) == atps["ex2"]


@pytest.mark.parametrize("name", NAMES)
def test_group_closure(name, auts, atps):
    a = set(auts[name])
    assert all(compose(x, y) in a for x in a for y in a)
    assert all(inverse(x) in a for x in a)
    t = set(atps[name])
    assert all(x * y in t for x in t for y in t)
    assert all(x.inverse() in t for x in t)


@pytest.mark.parametrize("name", NAMES)
def test_automorphisms_are_diagonal_autotopisms(name, auts, atps):
    t = set(atps[name])
    assert all(Isotopy(a, a, a) in t for a in auts[name])


@pytest.mark.parametrize("name", NAMES)
def test_special_track_constraints(name, tables, auts):
    q = tables[name]
    ts = q.tracks()
    special = special_tracks(q)
    for a in auts[name]:
        for i in range(1, q.order + 1):
            # phi_{a(i)} = a phi_i a^-1
            assert ts[a(i) - 1] == conjugate(a, ts[i - 1])
        for k in special:
            phi = ts[k - 1]
            assert a(k) == k
            assert compose(phi, a) == compose(a, phi)
            assert a(phi(k)) == phi(k)
            for j in special:
                assert a(phi(j)) == phi(j)


@pytest.mark.parametrize("name", NAMES)
def test_special_part_and_spin_constraints(name, tables, atps):
    q = tables[name]
    table = SpinTable(q)
    special = special_parts(q, table)
    n = q.order
    for t in atps[name]:
        assert all(t.gamma(i) == i for i in special)
        for i, j in itertools.permutations(range(1, n + 1), 2):
            assert table.spin(t.gamma(i), t.gamma(j)) == conjugate(t.beta, table.spin(i, j))


@pytest.mark.parametrize("name", NAMES)
def test_dual_symmetry(name, tables, auts, atps):
    q = tables[name]
    d = dual(q)
    assert automorphisms(d) == auts[name]
    swapped = sorted((Isotopy(t.beta, t.alpha, t.gamma) for t in atps[name]), key=Isotopy.sort_key)
    assert autotopisms(d) == swapped
    assert is_rigid(d) == is_rigid(q)
    assert is_super_rigid(d) == is_super_rigid(q)


def test_every_order_two_square_is_rigid_not_super_rigid():
    squares = list(enumerate_latin_squares(2))
    assert len(squares) == 2
    assert all(is_rigid(q) and not is_super_rigid(q) for q in squares)


def test_no_rigid_order_three():
    squares = list(enumerate_latin_squares(3))
    assert len(squares) == 12
    assert not any(is_rigid(q) for q in squares)


def test_super_rigid_implies_rigid_order_four():
    for q in enumerate_latin_squares(4):
        if is_super_rigid(q):
            assert is_rigid(q)


def test_pruned_matches_bruteforce_order_four():
    for q in itertools.islice(enumerate_latin_squares(4), 0, None, 7):
        assert automorphisms(q) == automorphisms_bruteforce(q)
        assert autotopisms(q) == autotopisms_bruteforce(q)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 12), (4, 576)])
def test_latin_square_counts(n, count):
    # n! (n-1)! times the number of reduced squares: 1, 1, 1, 4
    reduced = {1: 1, 2: 1, 3: 1, 4: 4}[n]
    assert count == math.factorial(n) * math.factorial(n - 1) * reduced
    squares = list(enumerate_latin_squares(n))
    assert len(squares) == count
    assert len(set(squares)) == count
    assert [q.rows for q in squares] == sorted(q.rows for q in squares)


def test_enumeration_order_five_count():
    assert sum(1 for _ in enumerate_latin_squares(5)) == 120 * 24 * 56


def test_enumeration_cap():
    with pytest.raises(ValueError, match="8.1e8"):
        next(enumerate_latin_squares(6))


def test_enumeration_first_row():
    squares = list(enumerate_latin_squares(4, (2, 1, 4, 3)))
    assert len(squares) == 24
    assert all(q.rows[0] == (2, 1, 4, 3) for q in squares)


def test_census_small_orders():
    assert census(2).summary() == {"order": 2, "total": 2, "rigid": 2, "super_rigid": 0}
    assert census(3).summary() == {"order": 3, "total": 12, "rigid": 0, "super_rigid": 0}
    c4 = census(4, keep_tables=True)
    assert c4.total == 576 and c4.super_rigid == 0
    assert fixtures.load("fig1") in c4.rigid_tables
    assert c4.rigid == len(c4.rigid_tables) >= 1


def test_census_independent_of_jobs():
    assert census(4, jobs=2).summary() == census(4).summary()


def test_oracle_limits(monkeypatch, tables):
    with pytest.raises(OracleLimitError):
        automorphisms_bruteforce(tables["ex9"])
    with pytest.raises(OracleLimitError):
        autotopisms_bruteforce(tables["ex8"], limit=6)
    monkeypatch.setenv("QF_ORACLE_LIMIT", "3")
    with pytest.raises(OracleLimitError):
        automorphisms_bruteforce(tables["fig1"])
    assert automorphisms_bruteforce(tables["Z3"]) == automorphisms(tables["Z3"])


def test_is_isotopy_rejects_non_autotopism(tables):
    q = tables["ex8"]
    swap = Permutation((1, 2, 3, 4, 5, 7, 6))
    assert not is_isotopy(q, Isotopy(swap, identity(7), swap))
