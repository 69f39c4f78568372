"""Table enumeration oracle: counts, canonical forms, regular representations."""

import random

import pytest

import cyclicnum as cn
from cyclicnum import (
    CapacityError,
    CayleyTable,
    canonical_form,
    element_orders,
    enumerate_groups,
    regular_representation,
    table_is_cyclic,
    validate_table,
    verify_theorem_small,
)
from cyclicnum.cayley import _all_labeled_tables

# a Latin square with identity 0 that is not associative: (1*1)*1 = 3 but
# 1*(1*1) = 0 (built from the order-6 cyclic table by swapping the
# intercalate at rows {1,4}, columns {2,5})
NON_ASSOCIATIVE_LOOP = (
    (0, 1, 2, 3, 4, 5),
    (1, 2, 0, 4, 5, 3),
    (2, 3, 4, 5, 0, 1),
    (3, 4, 5, 0, 1, 2),
    (4, 5, 3, 1, 2, 0),
    (5, 0, 1, 2, 3, 4),
)


def circulant(n):
    return tuple(tuple((i + j) % n for j in range(n)) for i in range(n))


def relabel(table, rho):
    """Apply the identity-fixing relabeling rho (new label -> old label)."""
    n = len(table)
    sigma = [0] * n
    for new, old in enumerate(rho):
        sigma[old] = new
    return tuple(
        tuple(sigma[table[rho[x]][rho[y]]] for y in range(n)) for x in range(n)
    )


class TestValidateTable:
    def test_accepts_cyclic_tables(self):
        for n in (1, 2, 5, 9):
            validate_table(circulant(n))

    def test_rejects_broken_identity(self):
        with pytest.raises(ValueError):
            validate_table(((1, 2, 0), (0, 1, 2), (2, 0, 1)))

    def test_rejects_non_latin(self):
        with pytest.raises(ValueError):
            validate_table(((0, 1), (1, 1)))

    def test_rejects_ragged_or_empty(self):
        with pytest.raises(ValueError):
            validate_table(((0, 1), (1,)))
        with pytest.raises(ValueError):
            validate_table(())

    def test_rejects_non_associative_loop(self):
        with pytest.raises(ValueError, match="associativity"):
            validate_table(NON_ASSOCIATIVE_LOOP)

    def test_cayley_table_constructor_validates(self):
        with pytest.raises(ValueError):
            CayleyTable(NON_ASSOCIATIVE_LOOP)
        assert CayleyTable(circulant(4)).n == 4


class TestEnumeration:
    def test_class_counts_up_to_seven(self):
        assert [len(enumerate_groups(n)) for n in range(1, 8)] == [1, 1, 1, 2, 1, 2, 1]

    def test_class_count_order_eight(self, oracle_pack):
        classes, _ = oracle_pack
        assert len(classes[8]) == 5
        assert sum(1 for c in classes[8] if table_is_cyclic(c)) == 1

    def test_labeled_table_counts(self):
        # identity-fixed group tables: sum over classes of (n-1)!/|Aut|
        assert [len(_all_labeled_tables(n)) for n in range(1, 7)] == [1, 1, 1, 4, 6, 80]

    def test_labeled_table_count_order_eight(self):
        # 7!/4 + 7!/8 + 7!/168 + 7!/8 + 7!/24 over the five classes
        assert len(_all_labeled_tables(8)) == 2760

    def test_order_eight_multisets(self, oracle_pack):
        classes, _ = oracle_pack
        seen = {element_orders(c) for c in classes[8]}
        assert seen == {
            (1, 2, 2, 2, 2, 2, 2, 2),
            (1, 2, 2, 2, 2, 2, 4, 4),
            (1, 2, 2, 2, 4, 4, 4, 4),
            (1, 2, 4, 4, 4, 4, 4, 4),
            (1, 2, 4, 4, 8, 8, 8, 8),
        }

    def test_prime_orders_all_cyclic(self, oracle_pack):
        classes, _ = oracle_pack
        for n in (2, 3, 5, 7):
            assert len(classes[n]) == 1
            assert table_is_cyclic(classes[n][0])

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            enumerate_groups(0)

    def test_cap_below_request(self):
        with pytest.raises(CapacityError):
            enumerate_groups(9)

    def test_hard_limit(self):
        with pytest.raises(CapacityError):
            enumerate_groups(11, cap=20)

    def test_above_default_warns(self, monkeypatch):
        # point the searcher at an empty result so the warning path is cheap
        monkeypatch.setattr("cyclicnum.cayley._all_labeled_tables", lambda n: [])
        with pytest.warns(RuntimeWarning):
            assert enumerate_groups(9, cap=10) == []


class TestCanonicalForm:
    def test_idempotent(self, oracle_pack):
        classes, _ = oracle_pack
        for n, tables in classes.items():
            for t in tables:
                assert canonical_form(t.table) == t.table

    def test_invariant_under_relabeling_500_trials(self, oracle_pack):
        classes, _ = oracle_pack
        rng = random.Random(20260825)
        for n, tables in classes.items():
            for t in tables:
                reference = canonical_form(t)
                for _ in range(500):
                    rho = [0] + rng.sample(range(1, n), n - 1) if n > 1 else [0]
                    shuffled = relabel(t.table, rho)
                    assert canonical_form(shuffled) == reference

    def test_separates_the_two_order_four_groups(self):
        z4, v4 = circulant(4), ((0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0))
        assert canonical_form(z4) != canonical_form(v4)


class TestTableQueries:
    def test_cyclic_tables_detected(self):
        for n in (1, 2, 3, 6, 11):
            assert table_is_cyclic(circulant(n))

    def test_klein_table_not_cyclic(self):
        v4 = ((0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0))
        assert not table_is_cyclic(v4)

    def test_element_orders_read_off_table(self):
        assert element_orders(circulant(6)) == (1, 2, 3, 3, 6, 6)
        assert element_orders(((0,),)) == (1,)


class TestRegularRepresentation:
    def test_trivial_table(self):
        G = regular_representation(((0,),))
        assert len(G) == 1

    def test_cyclic_six(self):
        G = regular_representation(circulant(6))
        assert len(G) == 6
        assert cn.is_cyclic(G) is not None

    def test_cyclicity_agrees_with_table_for_all_classes(self, oracle_pack):
        classes, _ = oracle_pack
        for n, tables in classes.items():
            for t in tables:
                G = regular_representation(t)
                assert len(G) == n
                assert (cn.is_cyclic(G) is not None) == table_is_cyclic(t)

    def test_nonabelian_order_six_matches_witness(self, oracle_pack):
        classes, _ = oracle_pack
        noncyclic = [t for t in classes[6] if not table_is_cyclic(t)]
        assert len(noncyclic) == 1
        witness_group = cn.closure(cn.witness_arrow_case(6, 2, 3).generators)
        witness_orders = tuple(sorted(cn.perm_order(g) for g in witness_group))
        assert element_orders(noncyclic[0]) == witness_orders

    def test_witness_multisets_appear_among_classes(self, oracle_pack):
        classes, _ = oracle_pack
        for n in (4, 6, 8):
            cert = cn.build_witness(n)
            G = cn.closure(cert.generators)
            mine = tuple(sorted(cn.perm_order(g) for g in G))
            assert mine in {element_orders(t) for t in classes[n]}


class TestTheoremReport:
    def test_small_run_agrees(self):
        rows = verify_theorem_small(6)
        assert all(row.agree for row in rows)
        by_n = {row.n: row for row in rows}
        assert (by_n[6].group_count, by_n[6].cyclic_count) == (2, 1)
        assert (by_n[4].group_count, by_n[4].cyclic_count) == (2, 1)
        assert by_n[5].all_cyclic and by_n[5].predicted
        assert not by_n[4].all_cyclic and not by_n[4].predicted
