"""Tests for fields, row algebras, conflict search and forward elimination."""

import random

import pytest

import fmzs.elimination.engine as engine_module
from fmzs.config import RunConfig
from fmzs.elimination import (
    GF2,
    Assignment,
    BaseField,
    BitsetRowAlgebra,
    FieldCombination,
    FieldRowAlgebra,
    GF2Field,
    RowAlgebraFactory,
    bucket_rows,
    check_conflict,
    conflict_search,
    dense_eliminate_oracle,
    find_pivot,
    find_pivot_reordered,
    forward_eliminate,
    pack_rows,
    reduce_with_evidence,
)
from fmzs.errors import InvariantError, SizeGuardError
from fmzs.relations import PairFamily, generate_system


class GF5(BaseField):
    """Prime field used to exercise the generic path."""

    name = "GF(5)"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % 5

    def negate(self, a):
        return (-a) % 5

    def multiply(self, a, b):
        return (a * b) % 5

    def invert(self, a):
        if a % 5 == 0:
            raise ZeroDivisionError("0 has no inverse in GF(5)")
        return pow(a, 3, 5)


@pytest.fixture
def run_config(tmp_path):
    return RunConfig(tmp_path / "missing.yaml")


def span_leads(supports, n):
    """Leading columns of every non-zero GF(2) combination, by enumeration."""
    rows = [sum(1 << (c - 1) for c in support) for support in supports]
    spans = {0}
    for row in rows:
        spans |= {value ^ row for value in spans}
    return {(value & -value).bit_length() for value in spans if value}


def leads_mod_p(supports, n, p):
    """Leading columns of the row space over GF(p), by dense reduction."""
    matrix = [[1 if c in support else 0 for c in range(1, n + 1)] for support in supports]
    leads = set()
    rank = 0
    for col in range(n):
        found = next((r for r in range(rank, len(matrix)) if matrix[r][col] % p), None)
        if found is None:
            continue
        matrix[rank], matrix[found] = matrix[found], matrix[rank]
        inverse = pow(matrix[rank][col], p - 2, p)
        for r in range(rank + 1, len(matrix)):
            factor = matrix[r][col] * inverse % p
            if factor:
                matrix[r] = [(a - factor * b) % p for a, b in zip(matrix[r], matrix[rank])]
        leads.add(col + 1)
        rank += 1
    return leads


def random_instance(rng, max_columns=10, max_rows=8):
    n = rng.randint(1, max_columns)
    supports = []
    for _ in range(rng.randint(0, max_rows)):
        supports.append(sorted(c for c in range(1, n + 1) if rng.random() < 0.35))
    return supports, n


class TestFields:
    """Field contract and GF(2)."""

    def test_gf2_operations(self):
        assert GF2.add(1, 1) == 0
        assert GF2.multiply(1, 1) == 1
        assert GF2.negate(1) == 1
        assert GF2.subtract(0, 1) == 1
        assert GF2.invert(1) == 1
        assert GF2.dot([(1, 1), (1, 1), (1, 0)]) == 0
        assert GF2.is_zero(0)

    def test_gf2_zero_has_no_inverse(self):
        with pytest.raises(ZeroDivisionError):
            GF2.invert(0)

    def test_custom_field(self):
        field_ = GF5()
        assert field_.multiply(field_.invert(3), 3) == 1
        assert field_.subtract(1, 3) == 3

    def test_base_field_is_abstract(self):
        with pytest.raises(TypeError):
            BaseField()


class TestFieldCombination:
    """Linear forms with leading index and coefficient."""

    def test_lead_and_coefficient(self):
        form = FieldCombination(GF5(), {4: 2, 2: 3, 3: 0}, 5)
        assert form.ind == 2
        assert form.cf == 3
        assert form.support() == (2, 4)
        assert form.coefficient(3) == 0

    def test_zero_form(self):
        form = FieldCombination.from_support([], 4)
        assert form.is_zero
        assert form.ind == 5
        assert form.cf == 0

    def test_axpy(self):
        field_ = GF5()
        a = FieldCombination(field_, {1: 1, 2: 4}, 3)
        b = FieldCombination(field_, {1: 2, 3: 1}, 3)
        result = a.axpy(2, b)
        assert result.terms == {2: 4, 3: 2}
        assert result.ind == 2

    def test_from_support_over_gf2(self):
        form = FieldCombination.from_support([3, 1], 4)
        assert form.terms == {1: 1, 3: 1}
        assert form.ind == 1


class TestRowAlgebras:
    """Bitset and field rows."""

    def test_factory(self):
        assert isinstance(RowAlgebraFactory.create(4), BitsetRowAlgebra)
        assert isinstance(RowAlgebraFactory.create(4, "field"), FieldRowAlgebra)
        assert isinstance(RowAlgebraFactory.create(4, "auto", GF5()), FieldRowAlgebra)
        algebra = BitsetRowAlgebra(3)
        assert RowAlgebraFactory.create(3, algebra) is algebra

    def test_factory_errors(self):
        with pytest.raises(ValueError, match="only support GF"):
            RowAlgebraFactory.create(4, "bitset", GF5())
        with pytest.raises(ValueError, match="unknown row algebra"):
            RowAlgebraFactory.create(4, "sparse")

    @pytest.mark.parametrize("kind", ["bitset", "field"])
    def test_basic_operations(self, kind):
        algebra = RowAlgebraFactory.create(6, kind)
        row = algebra.make_row([2, 5, 6])
        assert algebra.support(row) == (2, 5, 6)
        assert algebra.lead(row) == 2
        assert algebra.lead(row, algebra.skip_mask([2])) == 5
        assert algebra.lead(algebra.make_row([])) == 7
        assert algebra.coefficient(row, 5) == 1
        assert algebra.coefficient(row, 3) == 0
        assert algebra.to_bits(row) == 0b110010
        reduced, factor = algebra.eliminate(row, algebra.make_row([2, 3]), 2)
        assert algebra.support(reduced) == (3, 5, 6)
        assert factor == 1

    @pytest.mark.parametrize("kind", ["bitset", "field"])
    def test_evaluate_and_solve(self, kind):
        algebra = RowAlgebraFactory.create(5, kind)
        assignment = Assignment.start(4)
        assignment.assign(3, 1, GF2)
        row = algebra.make_row([3, 4, 5])
        assert algebra.evaluate(row, assignment) == 0
        pivot = algebra.make_row([2, 4])
        assert algebra.solve_for(pivot, 2, assignment) == 1

    def test_bitset_make_row_parity(self):
        algebra = BitsetRowAlgebra(4)
        assert algebra.make_row([1, 2, 1]) == 0b10
        assert algebra.make_row([1, 2], [2, 3]) == 0b10

    def test_field_solve_for_gf5(self):
        field_ = GF5()
        algebra = FieldRowAlgebra(3, field_)
        assignment = Assignment.start(3, field_.one)
        pivot = algebra.make_row([1, 3], [2, 1])
        value = algebra.solve_for(pivot, 1, assignment)
        assignment.assign(1, value, field_)
        assert algebra.evaluate(pivot, assignment) == 0


class TestAssignment:
    """Suffix assignments."""

    def test_start(self):
        assignment = Assignment.start(3)
        assert assignment.values == {3: 1}
        assert assignment.ones == 0b100
        assert assignment.frontier == 3

    def test_assign_moves_frontier(self):
        assignment = Assignment.start(5)
        assignment.assign(3, 0, GF2)
        assignment.assign(2, 1, GF2)
        assert assignment.frontier == 2
        assert assignment.values == {5: 1, 2: 1}
        assert assignment.value(3) == 0

    def test_assign_rejects_columns_above_frontier(self):
        assignment = Assignment.start(3)
        with pytest.raises(ValueError, match="frontier"):
            assignment.assign(4, 1, GF2)

    def test_copy_is_independent(self):
        assignment = Assignment.start(3)
        clone = assignment.copy()
        clone.assign(1, 1, GF2)
        assert assignment.values == {3: 1}


class TestConflictSearch:
    """Single-column pivot search."""

    @pytest.fixture
    def algebra(self):
        return BitsetRowAlgebra(3)

    def test_finds_pivot_through_reduction(self, algebra):
        rows = [algebra.make_row([1, 3])]
        pivots = {1: algebra.make_row([1, 2])}
        reduction = find_pivot(rows, pivots, 2, algebra, debug_checks=True)
        assert algebra.support(reduction.row) == (2, 3)
        assert reduction.source_row == 1
        assert reduction.reducers == ((1, 1),)

    def test_no_pivot(self, algebra):
        rows = [algebra.make_row([1, 2])]
        pivots = {1: algebra.make_row([1, 2])}
        assert find_pivot(rows, pivots, 2, algebra) is None

    def test_find_pivot_needs_full_prefix(self, algebra):
        with pytest.raises(ValueError, match="find_pivot_reordered"):
            find_pivot([algebra.make_row([2])], {}, 2, algebra)

    def test_reordered_skips_deficient_columns(self, algebra):
        rows = [algebra.make_row([1, 2, 3])]
        reduction = find_pivot_reordered(rows, {}, 2, algebra, debug_checks=True)
        assert reduction.source_row == 1
        assert algebra.support(reduction.row) == (1, 2, 3)
        assert algebra.lead(reduction.row, algebra.skip_mask([1])) == 2

    def test_bucket_rows(self, algebra):
        rows = [algebra.make_row([2, 3]), algebra.make_row([]), algebra.make_row([1, 3]), algebra.make_row([3])]
        buckets = bucket_rows(rows, algebra, deficient=[1], limit=2)
        assert {lead: [row_id for row_id, _ in group] for lead, group in buckets.items()} == {2: [1]}

    def test_conflict_conditions(self, algebra):
        rows = [algebra.make_row([1, 3])]
        pivots = {1: algebra.make_row([1, 2])}
        conflict = conflict_search(bucket_rows(rows, algebra), pivots, 2, algebra)
        assert conflict.row_id == 1
        assert conflict.frontier == 1
        check_conflict(conflict, pivots, algebra)

    def test_check_conflict_rejects_vanishing_row(self, algebra):
        rows = [algebra.make_row([1, 3])]
        pivots = {1: algebra.make_row([1, 2])}
        conflict = conflict_search(bucket_rows(rows, algebra), pivots, 2, algebra)
        broken = type(conflict)(conflict.row_id, algebra.make_row([1, 2]), conflict.assignment)
        with pytest.raises(InvariantError, match="vanishes"):
            check_conflict(broken, pivots, algebra)

    def test_reduce_with_evidence(self, algebra):
        rows = [algebra.make_row([1, 3])]
        pivots = {1: algebra.make_row([1, 2])}
        conflict = conflict_search(bucket_rows(rows, algebra), pivots, 2, algebra)
        reduction = reduce_with_evidence(conflict, pivots, algebra)
        assert algebra.support(reduction.row) == (2, 3)
        assert reduction.source_row == 1
        assert reduction.reducers == ((1, 1),)

    def test_reduce_with_evidence_rejects_wrong_lead(self, algebra):
        rows = [algebra.make_row([1, 3])]
        pivots = {1: algebra.make_row([1, 2])}
        conflict = conflict_search(bucket_rows(rows, algebra), pivots, 2, algebra)
        broken = type(conflict)(conflict.row_id, algebra.make_row([1, 2]), conflict.assignment)
        with pytest.raises(InvariantError, match="expected 2"):
            reduce_with_evidence(broken, pivots, algebra)


class TestForwardElimination:
    """The elimination engine."""

    def test_weight_four(self, run_config):
        system = generate_system(4, config=run_config)
        pivots = forward_eliminate(system, debug_checks=True)
        assert pivots.rank == 3
        assert pivots.corank == 1
        assert pivots.pivot_columns == (1, 2, 4)
        assert pivots.pivotless == (3,)
        assert pivots.consumed_rows() == {1: 2, 2: 1, 4: 3}
        assert pivots.dumps() == "# n=4 rank=3 corank=1\n1 2 : 1 2 3\n2 1 : 2 3 4\n4 3 : 4\n# pivotless 3\n"

    def test_raw_supports_need_n(self):
        with pytest.raises(ValueError, match="n is required"):
            forward_eliminate([[1, 2]])

    def test_empty_system(self):
        pivots = forward_eliminate([], n=3)
        assert pivots.rank == 0
        assert pivots.pivotless == (1, 2, 3)

    def test_duplicate_rows(self):
        pivots = forward_eliminate([[1, 2], [1, 2], [2]], n=3, debug_checks=True)
        assert pivots.pivot_columns == (1, 2)
        assert pivots.pivotless == (3,)

    def test_pivot_found_by_conflict(self):
        pivots = forward_eliminate([[1, 2], [1, 3]], n=3, debug_checks=True)
        assert pivots.pivot_columns == (1, 2)
        assert pivots.support(2).support == (2, 3)
        assert pivots.pivots[2].source_row == 2
        assert pivots.expand_rows(2) == (1, 2)

    @pytest.mark.parametrize("kind", ["bitset", "field"])
    def test_random_instances_match_enumeration(self, kind):
        rng = random.Random(2024)
        for _ in range(300):
            supports, n = random_instance(rng)
            pivots = forward_eliminate(supports, algebra=kind, n=n, debug_checks=True)
            assert set(pivots.pivot_columns) == span_leads(supports, n)

    @pytest.mark.slow
    def test_ten_thousand_random_instances(self):
        rng = random.Random(99)
        for _ in range(10_000):
            supports, n = random_instance(rng)
            pivots = forward_eliminate(supports, n=n, debug_checks=True)
            assert set(pivots.pivot_columns) == span_leads(supports, n)

    def test_expansion_reproduces_pivots(self):
        rng = random.Random(5)
        for _ in range(50):
            supports, n = random_instance(rng, max_columns=30, max_rows=40)
            rows = [sum(1 << (c - 1) for c in support) for support in supports]
            pivots = forward_eliminate(supports, n=n)
            for column in pivots.pivot_columns:
                total = 0
                for row_id in pivots.expand_rows(column):
                    total ^= rows[row_id - 1]
                assert total == pivots.bits(column)

    def test_generic_field_matches_dense_reduction(self):
        rng = random.Random(17)
        field_ = GF5()
        for _ in range(60):
            supports, n = random_instance(rng, max_columns=8, max_rows=8)
            pivots = forward_eliminate(supports, field_=field_, n=n, debug_checks=True)
            assert pivots.field is field_
            assert set(pivots.pivot_columns) == leads_mod_p(supports, n, 5)
            for column in pivots.pivot_columns:
                expected = {}
                for row_id, coefficient in pivots.expand(column).items():
                    for c in supports[row_id - 1]:
                        expected[c] = (expected.get(c, 0) + coefficient) % 5
                expected = {c: v for c, v in expected.items() if v}
                assert expected == pivots.pivots[column].row.terms

    def test_bitset_and_field_agree_on_systems(self, run_config):
        system = generate_system(7, config=run_config)
        bitset = forward_eliminate(system, algebra="bitset")
        generic = forward_eliminate(system, algebra="field")
        assert bitset.pivot_columns == generic.pivot_columns
        assert bitset.consumed_rows() == generic.consumed_rows()

    def test_debug_checks_from_config(self, tmp_path, mocker):
        path = tmp_path / "fmzs.yaml"
        path.write_text("debug_checks: true\n")
        spy = mocker.spy(engine_module, "_check_echelon")
        forward_eliminate([[1, 2]], n=2, config=RunConfig(path))
        assert spy.call_count == 1


class TestOracle:
    """Dense packed-bit elimination."""

    def test_pack_rows(self):
        packed = pack_rows([[1, 9], []], 10)
        assert packed.shape == (2, 2)
        assert packed[0, 0] == 0x80
        assert packed[0, 1] == 0x80
        assert not packed[1].any()

    def test_small_instance(self):
        rank, columns = dense_eliminate_oracle([[1, 2], [1, 3], [2, 3]], n=3)
        assert rank == 2
        assert columns == {1, 2}

    def test_size_guard(self):
        with pytest.raises(SizeGuardError, match="limited to 5 columns"):
            dense_eliminate_oracle([[1]], n=10, max_columns=5)

    def test_random_instances(self):
        rng = random.Random(11)
        for _ in range(100):
            supports, n = random_instance(rng, max_columns=40, max_rows=50)
            pivots = forward_eliminate(supports, n=n)
            rank, columns = dense_eliminate_oracle(supports, n=n, max_columns=64)
            assert rank == pivots.rank
            assert columns == set(pivots.pivot_columns)

    @pytest.mark.parametrize("family", list(PairFamily))
    @pytest.mark.parametrize("k", range(2, 11))
    def test_families_agree_with_engine(self, family, k, run_config):
        system = generate_system(k, family, config=run_config)
        pivots = forward_eliminate(system, config=run_config)
        rank, columns = dense_eliminate_oracle(system, config=run_config)
        assert rank == pivots.rank
        assert columns == set(pivots.pivot_columns)

    @pytest.mark.slow
    @pytest.mark.parametrize("family", list(PairFamily))
    @pytest.mark.parametrize("k", [11, 12])
    def test_families_agree_with_engine_large(self, family, k, run_config):
        system = generate_system(k, family, config=run_config)
        pivots = forward_eliminate(system, config=run_config)
        rank, columns = dense_eliminate_oracle(system, config=run_config)
        assert rank == pivots.rank
        assert columns == set(pivots.pivot_columns)


def test_gf2_field_singleton():
    assert isinstance(GF2, GF2Field)
    assert GF2.name == "GF(2)"
