import random
import time

import pytest

from src.arith import FieldTag
from src.errors import InfiniteFieldError, ShapeError
from src.fpt import count_mk_dp, count_mk_dp_rows, dp_tables, min_k, search_min_k, smallest_row_bound
from src.linalg import Matrix
from src.problems import Graph
from src.reductions.dominating_set import DECISION, dominating_set_to_vest
from src.vest import TargetVariant, VestInstance, exists_up_to, mk_bruteforce
from tests.conftest import Z2, Z3, all_z2_instances, random_instance, scalar_instance

PATH = Graph.of(3, [(0, 1), (1, 2)])


class TestDp:
    def test_two_scalars(self):
        assert count_mk_dp(scalar_instance(Z2, [1, 0]), 2) == 3

    def test_level_one_is_a_tally(self, rng):
        for _ in range(20):
            inst = random_instance(rng, Z3, 2, 4)
            expected = sum(1 for t in inst.transforms if inst.accepts(t))
            assert count_mk_dp(inst, 1) == expected

    def test_path_decision_gadget(self):
        inst, _ = dominating_set_to_vest(PATH, 1, DECISION, Z2)
        assert count_mk_dp(inst, 1) == 1

    def test_level_totals(self, rng):
        inst = random_instance(rng, Z3, 2, 3)
        for table in dp_tables(inst, 5):
            assert table.total == inst.m ** table.level

    def test_matrix_targets(self):
        nilpotent = Matrix.from_rows(Z2, [[0, 1], [0, 0]])
        inst = VestInstance(Z2, 2, (nilpotent, Matrix.identity(Z2, 2)), target=TargetVariant.MATRIX_ZERO)
        assert count_mk_dp(inst, 3) == mk_bruteforce(inst, 3)
        inst = inst.with_transforms((Matrix.identity(Z2, 2), Matrix.from_rows(Z2, [[0, 1], [1, 0]])))
        identity = VestInstance(Z2, 2, inst.transforms, target=TargetVariant.MATRIX_IDENTITY)
        assert count_mk_dp(identity, 4) == mk_bruteforce(identity, 4) == 8

    def test_rational_rejected(self):
        with pytest.raises(InfiniteFieldError):
            count_mk_dp(scalar_instance(FieldTag.rational(), [1]), 2)

    def test_k_zero(self):
        assert count_mk_dp(scalar_instance(Z2, [1], s=0), 0) == 1

    def test_trace(self):
        seen = []
        count_mk_dp(scalar_instance(Z2, [1, 0]), 3, trace=lambda level, states, total: seen.append((level, states, total)))
        assert seen == [(1, 2, 2), (2, 2, 4), (3, 2, 8)]

    def test_threads(self, rng):
        inst = random_instance(rng, Z3, 2, 4)
        assert count_mk_dp(inst, 5, threads=4) == count_mk_dp(inst, 5)

    @pytest.mark.slow
    def test_matches_brute_force_exhaustively(self):
        for d, m in ((1, 1), (1, 2), (1, 3), (2, 1), (2, 2)):
            for inst in all_z2_instances(d, m):
                for k in range(1, 5):
                    assert count_mk_dp(inst, k) == mk_bruteforce(inst, k)

    @pytest.mark.slow
    def test_matches_brute_force_random_z3(self):
        rng = random.Random(11)
        for _ in range(100):
            inst = random_instance(rng, Z3, 2, rng.randint(1, 4), h=rng.randint(1, 2))
            k = rng.randint(1, 5)
            assert count_mk_dp(inst, k) == mk_bruteforce(inst, k)

    @pytest.mark.slow
    def test_fast_on_long_sequences(self):
        rng = random.Random(5)
        inst = random_instance(rng, Z2, 3, 10)
        started = time.perf_counter()
        count = count_mk_dp(inst, 50)
        assert time.perf_counter() - started < 1
        assert 0 <= count <= 10 ** 50


class TestDpRows:
    def test_p_equals_d(self, rng):
        for _ in range(10):
            inst = random_instance(rng, Z2, 2, 3)
            assert count_mk_dp_rows(inst, 2, 3) == count_mk_dp(inst, 3)

    def test_k_one_tally(self, rng):
        inst = random_instance(rng, Z2, 3, 4, zero_below=1)
        assert count_mk_dp_rows(inst, 1, 1) == sum(1 for t in inst.transforms if inst.accepts(t))

    def test_smallest_row_bound(self, rng):
        inst = random_instance(rng, Z2, 4, 3, zero_below=2)
        assert smallest_row_bound(inst) <= 2

    def test_rows_below_p_must_be_zero(self):
        inst = scalar_instance(Z2, [1])
        with pytest.raises(ShapeError):
            count_mk_dp_rows(inst, 0, 2)

    def test_matrix_targets(self):
        t = Matrix.from_rows(Z2, [[1, 1], [0, 0]])
        inst = VestInstance(Z2, 2, (t, Matrix.from_rows(Z2, [[0, 1], [0, 0]])), target=TargetVariant.MATRIX_ZERO)
        for k in range(1, 5):
            assert count_mk_dp_rows(inst, 1, k) == mk_bruteforce(inst, k)

    @pytest.mark.slow
    def test_matches_brute_force_random(self):
        rng = random.Random(17)
        for _ in range(60):
            d = rng.randint(2, 4)
            p = rng.randint(1, 2)
            inst = random_instance(rng, Z2, d, rng.randint(1, 4), zero_below=p)
            k = rng.randint(1, 5)
            expected = mk_bruteforce(inst, k)
            assert count_mk_dp_rows(inst, p, k) == expected
            assert count_mk_dp(inst, k) == expected


class TestMinK:
    def test_zero_transform(self):
        assert min_k(scalar_instance(Z2, [0])) == 1

    def test_identity_never(self):
        result = search_min_k(scalar_instance(Z2, [1]))
        assert result.k is None
        assert result.levels == 2

    def test_rows_mode(self, rng):
        for _ in range(20):
            inst = random_instance(rng, Z2, 3, 2, zero_below=1)
            assert min_k(inst, p_rows=1) == min_k(inst)

    def test_rational_rejected(self):
        with pytest.raises(InfiniteFieldError):
            min_k(scalar_instance(FieldTag.rational(), [0]))

    @pytest.mark.slow
    def test_agrees_with_bounded_search(self):
        rng = random.Random(23)
        for _ in range(200):
            d = rng.randint(1, 3)
            inst = random_instance(rng, Z2, d, rng.randint(1, 3))
            result = search_min_k(inst)
            assert result.k == exists_up_to(inst, 512)
            assert result.levels <= 2 ** (d * d)
