import pytest

from dynred import (
    CapacityError,
    brute_force_core,
    brute_force_reducts,
    is_reduct,
    parse_decision_table,
    positive_region,
)

from conftest import idx, reduct_names


class TestFixtureValues:
    # Frozen from hand derivation; these are the project's reference values.
    def test_fix_a(self, fix_a):
        assert reduct_names(fix_a, brute_force_reducts(fix_a)) == [["a", "b"], ["a", "c"]]
        assert brute_force_core(fix_a) == idx(fix_a, "a")

    def test_fix_b(self, fix_b):
        assert reduct_names(fix_b, brute_force_reducts(fix_b)) == [["b"]]
        assert brute_force_core(fix_b) == idx(fix_b, "b")

    def test_fix_c(self, fix_c):
        assert brute_force_reducts(fix_c) == (frozenset(),)
        assert brute_force_core(fix_c) == frozenset()


class TestReductProperties:
    def test_members_are_reducts_and_deletion_breaks(self, fix_a, fix_b, fix_c):
        for s in (fix_a, fix_b, fix_c):
            target = positive_region(s, range(s.n_attrs))
            for r in brute_force_reducts(s):
                assert is_reduct(s, r)
                for a in r:
                    assert positive_region(s, r - {a}) != target

    def test_core_inside_every_reduct(self, fix_a):
        core = brute_force_core(fix_a)
        assert all(core <= r for r in brute_force_reducts(fix_a))


class TestCapacity:
    def test_too_many_attributes(self):
        header = ",".join([f"c{i}" for i in range(17)] + ["d"])
        row = ",".join(["0"] * 17 + ["0"])
        s = parse_decision_table(f"{header}\n{row}\n", "d")
        with pytest.raises(CapacityError):
            brute_force_reducts(s)

    def test_too_many_objects(self):
        body = "".join(f"{i % 2},{i % 3}\n" for i in range(65))
        s = parse_decision_table("a,d\n" + body, "d")
        with pytest.raises(CapacityError):
            brute_force_reducts(s)
