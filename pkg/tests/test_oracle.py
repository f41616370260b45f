from fractions import Fraction

import pytest
import sympy as sp

from nilorbits.core import DomainError, Partition, SimpleType, partitions
from nilorbits.oracle import (
    G0,
    OracleFailure,
    centralizer_dimension,
    centralizer_dimension_by_rank,
    check_descent_conditions_sl3,
    check_mu_theta,
    check_wa_identity,
    conj,
    exact_matrix,
    format_entry,
    format_matrix,
    run_fixtures,
    stabilizer_element,
    standard_sl2_triple,
    wdd_from_triple,
)
from nilorbits.orbits import OrbitLabel, orbit_dimension, weighted_dynkin

I = sp.I


def test_triple_for_two():
    t = standard_sl2_triple(Partition((2,)))
    assert t.x == sp.Matrix([[0, 1], [0, 0]])
    assert t.h == sp.diag(1, -1)
    assert t.y == sp.Matrix([[0, 0], [1, 0]])


def test_triple_for_three():
    t = standard_sl2_triple(Partition((3,)))
    assert t.h == sp.diag(2, 0, -2)
    assert (t.y[1, 0], t.y[2, 1]) == (2, 2)
    assert t.relations_hold()


def test_triple_for_one():
    t = standard_sl2_triple(Partition((1,)))
    assert t.x == t.h == t.y == sp.zeros(1, 1)


def test_triples_satisfy_relations_up_to_8():
    for n in range(1, 9):
        for p in partitions(n):
            tr = standard_sl2_triple(p)
            assert tr.relations_hold(), p
            assert tr.h.trace() == 0


@pytest.mark.parametrize("parts,labels", [((3,), (2, 2)), ((2, 1), (1, 1)), ((1, 1, 1), (0, 0))])
def test_wdd_from_triple_examples(parts, labels):
    assert wdd_from_triple(standard_sl2_triple(Partition(parts)), 3).labels == labels


def test_wdd_from_triple_rejects_non_integer():
    tr = standard_sl2_triple(Partition((2,)))
    bad = type(tr)(tr.x, sp.ImmutableMatrix(sp.diag(sp.Rational(1, 2), sp.Rational(-1, 2))), tr.y)
    with pytest.raises(DomainError):
        wdd_from_triple(bad, 2)


@pytest.mark.parametrize("parts,expected", [((2, 1), 5), ((4,), 4), ((1, 1, 1), 9), ((3, 3), 12)])
def test_centralizer_dimension_examples(parts, expected):
    assert centralizer_dimension(Partition(parts)) == expected


def test_centralizer_dimension_matches_rank_up_to_6():
    for n in range(1, 7):
        for p in partitions(n):
            assert centralizer_dimension(p) == centralizer_dimension_by_rank(p), p


def test_oracle_matches_recipes_up_to_8():
    for n in range(2, 9):
        t = SimpleType("A", n - 1)
        for p in partitions(n):
            o = OrbitLabel(p)
            assert wdd_from_triple(standard_sl2_triple(p), n) == weighted_dynkin(t, o)
            dim = n * n - centralizer_dimension(p)
            assert dim == orbit_dimension(t, o) and dim % 2 == 0


def test_descent_instance():
    inst = check_descent_conditions_sl3()
    assert inst.passed
    assert inst.checks["sigma(g0) g0 = 1"]
    assert inst.checks["g0 H(a,b,c) g0^-1 = H(a,b,c+ib)"]


def test_descent_concrete_values():
    assert conj(G0) * G0 == sp.eye(3)
    assert G0 * stabilizer_element(1, 1, 0) * G0.inv() == stabilizer_element(1, 1, I)
    assert conj(stabilizer_element(1, I, 0)) == stabilizer_element(1, -I, 0)


def test_descent_failure_is_loud():
    from nilorbits.oracle import DescentData

    inst = DescentData()
    with pytest.raises(OracleFailure, match="deliberately false"):
        inst.record("deliberately false", False)
    assert not inst.passed


@pytest.mark.parametrize("num,den", [(0, 1), (1, 2), (1, 1), (3, 2), (5, 2), (-1, 2)])
def test_mu_theta_involution(num, den):
    assert check_mu_theta(num, den)


@pytest.mark.parametrize("num,den", [(1, 3), (1, 4), (1, 0)])
def test_mu_theta_unsupported(num, den):
    with pytest.raises(DomainError):
        check_mu_theta(num, den)


@pytest.mark.parametrize("a", [Fraction(1), Fraction(1, 2), Fraction(-3), Fraction(7, 5)])
def test_wa_identity(a):
    assert check_wa_identity(a)


def test_wa_identity_rejects_zero():
    with pytest.raises(DomainError):
        check_wa_identity(0)


def test_exact_matrix_and_format():
    m = exact_matrix([[1, I / 2], [sp.Rational(1, 3) - 2 * I, 0]])
    assert format_entry(m[0, 1]) == "1/2 i"
    assert format_entry(m[1, 0]) == "1/3 - 2 i"
    assert format_matrix(m).splitlines()[0] == "[1, 1/2 i]"
    with pytest.raises(DomainError):
        exact_matrix([[1, 2]])
    with pytest.raises(DomainError):
        exact_matrix([[sp.sqrt(2)]])


def test_run_fixtures_all_pass():
    results = run_fixtures(max_n=4)
    assert results and all(r.ok for r in results)
