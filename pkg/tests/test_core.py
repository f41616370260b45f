import itertools

import pytest
from hypothesis import given, strategies as st

from nilorbits.core import (
    DiagramAutomorphism,
    DomainError,
    Partition,
    SimpleType,
    WeightedDiagram,
    apply_automorphism,
    build_dynkin,
    diagram_automorphisms,
    dominance_leq,
    named_automorphism,
    partitions,
    preserves_diagram,
    transpose_partition,
)

ALL_TYPES = (
    [SimpleType("A", n) for n in range(1, 8)]
    + [SimpleType(f, n) for f in "BC" for n in range(2, 7)]
    + [SimpleType("D", n) for n in range(3, 7)]
    + [SimpleType(f, r) for f, r in [("E6", 6), ("E7", 7), ("E8", 8), ("F4", 4), ("G2", 2)]]
)


def brute_force_automorphisms(t):
    d = build_dynkin(t)
    return {p for p in itertools.permutations(range(1, t.rank + 1)) if preserves_diagram(d, p)}


@pytest.mark.parametrize("text,family,rank", [("A2", "A", 2), ("d4", "D", 4), ("E6", "E6", 6), ("G2", "G2", 2)])
def test_parse_type(text, family, rank):
    t = SimpleType.parse(text)
    assert (t.family, t.rank) == (family, rank)
    assert str(t) == text.upper()


@pytest.mark.parametrize("family,rank", [("B", 1), ("C", 1), ("D", 2), ("A", 0), ("E6", 7), ("H", 3)])
def test_inadmissible_types(family, rank):
    with pytest.raises(DomainError, match=str(rank)):
        SimpleType(family, rank)


def test_d3_is_flagged_not_rejected():
    assert SimpleType("D", 3).is_d3_alias
    assert not SimpleType("D", 4).is_d3_alias


def test_build_dynkin_shapes():
    assert build_dynkin(SimpleType("A", 2)).edges == {(1, 2, 1)}
    d4 = build_dynkin(SimpleType("D", 4))
    assert d4.neighbours(2) == {1, 3, 4}
    assert all(d4.neighbours(i) == {2} for i in (1, 3, 4))
    assert build_dynkin(SimpleType("B", 2)).edges == {(1, 2, 2)}
    assert build_dynkin(SimpleType("C", 2)).edges == {(2, 1, 2)}
    d6 = build_dynkin(SimpleType("D", 6))
    assert d6.neighbours(4) == {3, 5, 6}


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_automorphisms_match_brute_force(t):
    got = diagram_automorphisms(t)
    assert got[0].is_identity
    assert {a.perm for a in got} == brute_force_automorphisms(t)
    for a in got:
        assert preserves_diagram(build_dynkin(t), a.perm)


@pytest.mark.parametrize("t,order", [
    (SimpleType("A", 1), 1), (SimpleType("B", 3), 1), (SimpleType("C", 4), 1), (SimpleType("E7", 7), 1),
    (SimpleType("A", 3), 2), (SimpleType("D", 5), 2), (SimpleType("E6", 6), 2), (SimpleType("D", 4), 6),
])
def test_automorphism_group_orders(t, order):
    assert len(diagram_automorphisms(t)) == order


def test_d4_automorphisms_fix_centre():
    auts = diagram_automorphisms(SimpleType("D", 4))
    assert all(a(2) == 2 for a in auts)
    assert sorted(a.order for a in auts) == [1, 2, 2, 2, 3, 3]


def test_apply_automorphism_examples():
    d4 = SimpleType("D", 4)
    w = WeightedDiagram(d4, (0, 2, 0, 2))
    assert apply_automorphism(DiagramAutomorphism.identity(d4), w) == w
    assert apply_automorphism(named_automorphism(d4, "swap34"), w).labels == (0, 2, 2, 0)
    a2 = SimpleType("A", 2)
    assert apply_automorphism(named_automorphism(a2, "reverse"), WeightedDiagram(a2, (1, 1))).labels == (1, 1)


def test_apply_automorphism_uses_inverse_on_three_cycle():
    d4 = SimpleType("D", 4)
    rot = DiagramAutomorphism(d4, (3, 2, 4, 1))  # 1 -> 3 -> 4 -> 1
    out = apply_automorphism(rot, WeightedDiagram(d4, (1, 0, 2, 0)))
    # label at node i is the old label at rot^-1(i)
    assert out.labels == (0, 0, 1, 2)


def test_apply_automorphism_type_mismatch():
    with pytest.raises(DomainError):
        apply_automorphism(DiagramAutomorphism.identity(SimpleType("A", 3)), WeightedDiagram(SimpleType("D", 3), (0, 0, 0)))


@pytest.mark.parametrize("t", [t for t in ALL_TYPES if t.family in ("A", "D", "E6")], ids=str)
def test_involutions_square_to_identity(t):
    labels = tuple(range(t.rank))
    w = WeightedDiagram(t, tuple(x % 3 for x in labels))
    for a in diagram_automorphisms(t):
        if a.order == 2:
            assert apply_automorphism(a, apply_automorphism(a, w)) == w


@pytest.mark.parametrize("parts,expected", [((3, 1), (2, 1, 1)), ((1,), (1,)), ((4, 4), (2, 2, 2, 2))])
def test_transpose_examples(parts, expected):
    assert transpose_partition(Partition(parts)).parts == expected


def test_transpose_is_involution_up_to_12():
    for n in range(1, 13):
        for p in partitions(n):
            assert transpose_partition(transpose_partition(p)) == p


def test_partition_counts():
    # p(n) for n = 1..12
    assert [len(partitions(n)) for n in range(1, 13)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


def test_partition_validation_and_parsing():
    assert Partition.parse("[3^2,1^2]").parts == (3, 3, 1, 1)
    assert str(Partition.parse("[4, 4]")) == "[4,4]"
    assert Partition((4, 4)).sum == 8
    for bad in [(1, 2), (0,), (3, -1)]:
        with pytest.raises(DomainError):
            Partition(bad)
    with pytest.raises(DomainError):
        Partition.parse("4,4")


@pytest.mark.parametrize("p,q,expected", [((2, 2), (2, 2), True), ((2, 2), (4,), True), ((4,), (2, 2), False)])
def test_dominance_examples(p, q, expected):
    assert dominance_leq(Partition(p), Partition(q)) is expected


def test_dominance_needs_equal_sums():
    with pytest.raises(DomainError):
        dominance_leq(Partition((2,)), Partition((3,)))


def test_dominance_is_a_partial_order_up_to_10():
    for n in range(1, 11):
        ps = partitions(n)
        leq = {(p, q): dominance_leq(p, q) for p in ps for q in ps}
        for p in ps:
            assert leq[p, p]
        for p in ps:
            for q in ps:
                if p != q:
                    assert not (leq[p, q] and leq[q, p])
                if leq[p, q]:
                    for r in ps:
                        if leq[q, r]:
                            assert leq[p, r]


def test_dominance_reversed_by_transpose():
    for p in partitions(8):
        for q in partitions(8):
            assert dominance_leq(p, q) == dominance_leq(transpose_partition(q), transpose_partition(p))


@given(st.lists(st.integers(1, 9), min_size=1, max_size=12))
def test_transpose_preserves_size(parts):
    p = Partition.of(parts)
    tp = transpose_partition(p)
    assert tp.sum == p.sum
    assert len(tp) == p.parts[0]
