from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from drgcayley.groups import (Group, alternating, closure, construct_group,
                              cyclic, dihedral, direct_product,
                              elementary_abelian, generalized_dihedral_extension,
                              is_normal, is_subgroup, load_group_table,
                              metacyclic, parse_connection_labels,
                              parse_cycle_notation, perm_cycle_label,
                              quotient_group, right_cosets, save_group_table,
                              special_linear_2, subgroups_of_order, symmetric)


def test_cyclic_basic():
    G = cyclic(6)
    assert G.n == 6 and G.is_abelian
    assert G.order_of(1) == 6
    assert G.order_of(2) == 3
    assert G.inv(1) == 5


def test_dihedral_relations():
    G = dihedral(12)
    a = G.index_of("a")
    b = G.index_of("b")
    assert G.order_of(a) == 6
    assert G.order_of(b) == 2
    # bab^-1 = a^-1
    assert G.mul(G.mul(b, a), G.inv(b)) == G.inv(a)
    assert not G.is_abelian
    assert len(G.involutions()) == 7


def test_dihedral_rejects_odd_order():
    with pytest.raises(ValueError):
        dihedral(7)


def test_elementary_abelian():
    G = elementary_abelian(2, 3)
    assert G.n == 8 and G.is_abelian and G.exponent() == 2
    G = elementary_abelian(3, 2)
    assert G.n == 9 and G.exponent() == 3


def test_metacyclic_relation():
    # b a b^-1 = a^r in metacyclic(m, k, r)
    G = metacyclic(7, 3, 2)
    assert G.n == 21
    a = G.index_of("(1,0)")
    b = G.index_of("(0,1)")
    assert G.order_of(a) == 7 and G.order_of(b) == 3
    lhs = G.mul(G.mul(b, a), G.inv(b))
    assert lhs == G.mul(a, a)


def test_metacyclic_rejects_bad_twist():
    # r^k must be 1 mod m
    with pytest.raises(ValueError):
        metacyclic(7, 3, 3)


def test_direct_product():
    G = direct_product(cyclic(4), cyclic(4))
    assert G.n == 16 and G.is_abelian
    H = direct_product(cyclic(3), symmetric(3))
    assert H.n == 18 and not H.is_abelian


def test_symmetric_alternating():
    assert symmetric(4).n == 24
    assert alternating(4).n == 12
    assert alternating(5).n == 60
    assert not alternating(4).is_abelian


def test_sl2():
    G = special_linear_2(3)
    assert G.n == 24
    assert len(G.involutions()) == 1   # -I is the unique involution


def test_closure_and_subgroup():
    G = symmetric(4)
    t = G.index_of("(12)")
    c = G.index_of("(1234)")
    assert len(closure(G, (t, c))) == 24
    H = closure(G, (G.index_of("(123)"),))
    assert len(H) == 3 and is_subgroup(G, H)


def test_klein_four_normal_in_sym4():
    G = symmetric(4)
    v4 = closure(G, (G.index_of("(12)(34)"), G.index_of("(13)(24)")))
    assert len(v4) == 4
    assert is_normal(G, v4)
    assert not is_normal(G, closure(G, (G.index_of("(12)"),)))
    Q = quotient_group(G, v4)
    assert Q.n == 6 and not Q.is_abelian


def test_right_cosets_partition():
    G = dihedral(12)
    H = closure(G, (G.index_of("a"),))
    cosets = right_cosets(G, H)
    assert len(cosets) == 2
    seen = sorted(x for cs in cosets for x in cs)
    assert seen == list(range(12))


def test_subgroups_of_order_counts():
    G = symmetric(4)
    assert len(subgroups_of_order(G, 6)) == 4    # the point stabilizers
    assert len(subgroups_of_order(G, 12)) == 1   # Alt(4)
    assert len(subgroups_of_order(G, 8)) == 3    # Sylow 2-subgroups


def test_generalized_dihedral_is_dihedral_for_cyclic():
    G = generalized_dihedral_extension(cyclic(5))
    D = dihedral(10)
    assert G.n == 10
    assert sorted(G.element_orders()) == sorted(D.element_orders())


def test_construct_group_vocabulary():
    cases = {
        "cyclic(9)": 9,
        "dihedral(14)": 14,
        "elementary(2,4)": 16,
        "sym(3)": 6,
        "alt(4)": 12,
        "metacyclic(7,3,2)": 21,
        "product(cyclic(3),cyclic(15))": 45,
        "gendihedral(cyclic(6))": 12,
        "sl2(3)": 24,
        "aw": 32,
    }
    for spec, order in cases.items():
        assert construct_group(spec).n == order, spec


def test_construct_group_rejects_garbage():
    for bad in ("cyclic", "cyclic(a)", "frobnicate(5)", "product(cyclic(2))"):
        with pytest.raises(ValueError):
            construct_group(bad)


def test_armanios_wells_group_shape():
    G = construct_group("aw")
    assert G.n == 32 and not G.is_abelian
    s = parse_connection_labels(G, "g1,g2,g3,g4,g1g2g3g4")
    assert all(G.order_of(x) == 2 for x in s)
    assert len(closure(G, s)) == 32


def test_parse_connection_labels_cycle_normalization():
    G = symmetric(4)
    # '(21)' and '(2 1)' both normalize to the element labeled '(12)'
    a, b, c = parse_connection_labels(G, "(21),(2 1),(12)")
    assert a == b == c
    with pytest.raises(KeyError):
        parse_connection_labels(G, "nonsense")


def test_parse_connection_labels_respects_nested_commas():
    G = direct_product(cyclic(4), cyclic(4))
    out = parse_connection_labels(G, "(1,0),(0,1)")
    assert len(out) == 2


def test_cycle_notation_roundtrip():
    p = parse_cycle_notation("(123)(45)", 6)
    assert perm_cycle_label(p) == "(123)(45)"
    assert parse_cycle_notation("e", 4) == (0, 1, 2, 3)


def test_group_table_roundtrip(tmp_path):
    G = metacyclic(5, 4, 2)
    path = tmp_path / "g.grp"
    save_group_table(G, path)
    H = load_group_table(path)
    assert H.n == G.n
    assert H.table == G.table
    assert H.labels == G.labels


def test_group_audit_catches_broken_table():
    # constant rows: no identity element
    with pytest.raises(ValueError):
        Group([[0, 0], [0, 0]])


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["cyclic(5)", "cyclic(8)", "dihedral(8)", "dihedral(10)",
                        "sym(3)", "alt(4)", "elementary(3,2)",
                        "metacyclic(5,4,2)", "product(cyclic(2),cyclic(6))"]),
       st.data())
def test_group_axioms_hold(spec, data):
    G = construct_group(spec)
    n = G.n
    a = data.draw(st.integers(0, n - 1))
    b = data.draw(st.integers(0, n - 1))
    c = data.draw(st.integers(0, n - 1))
    e = G.identity
    assert G.mul(a, e) == a and G.mul(e, a) == a
    assert G.mul(a, G.inv(a)) == e
    assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
    assert n % G.order_of(a) == 0   # Lagrange
