from collections import Counter

from hypothesis import given, strategies as st

from a6curves.groups import (Permutation, a6_standard, a6_subgroup_classes, alternating_group,
                             brute_force_subgroups, generate, has_subgroup_of_order, matrix_closure,
                             order_census, subgroup_classes, symmetric_group, table_rows,
                             total_subgroup_count, valentiner_generators)

perms = st.permutations(range(6)).map(lambda p: Permutation(tuple(p)))


@given(perms, perms, perms)
def test_permutation_group_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == Permutation.identity()
    assert (a * b).is_even() == (a.is_even() == b.is_even())


def test_a6_is_alternating():
    G = a6_standard()
    assert G.order == 360
    assert set(G) == set(alternating_group(6))
    assert G.element_order_census() == {1: 1, 2: 45, 3: 80, 4: 90, 5: 144}


def test_a6_subgroup_lattice():
    classes = list(a6_subgroup_classes())
    assert len(classes) == 22
    assert total_subgroup_count(classes) == 501
    orders = Counter(c.order for c in classes)
    assert 15 not in orders and 30 not in orders and 180 not in orders
    assert not has_subgroup_of_order(a6_standard(), 15, classes)
    rows = table_rows(classes)
    assert [r["no"] for r in rows] == list(range(1, 23))
    assert all(r["order"] * r["index"] == 360 for r in rows)


def test_small_groups_against_brute_force():
    for G, n_classes, n_total in ((alternating_group(5), 9, 59), (symmetric_group(4), 11, 30)):
        classes = subgroup_classes(G)
        assert len(classes) == n_classes
        assert total_subgroup_count(classes) == n_total
        assert len(brute_force_subgroups(G)) == n_total


def test_generate_closes():
    g = Permutation.from_cycles([(1, 2, 3, 4, 5)])
    assert generate([g]).order == 5


def test_valentiner_closure():
    K, gens = valentiner_generators()
    els = matrix_closure(gens)
    assert len(els) == 360
    assert order_census(els) == {1: 1, 2: 45, 3: 80, 4: 90, 5: 144}
    assert all(m.determinant() != K.zero() for m in gens)
