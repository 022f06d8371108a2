import itertools
import json
import random

import pytest

from src.arith import FieldTag
from src.errors import BudgetExceeded, MalformedInputError, MixedFieldError, ShapeError, VariantError
from src.linalg import Matrix, Vector
from src.problems import Graph, PcpInstance
from src.reductions.dominating_set import COUNTING, dominating_set_to_vest
from src.reductions.pcp import pcp_to_vest
from src.vest import (TargetVariant, VestInstance, decide, exists_up_to, find_witness, instance_from_json,
                      instance_to_json, load_instance, mk_bruteforce)
from tests.conftest import Z2, Z3, all_z2_instances, random_instance, scalar_instance

Q = FieldTag.rational()
TRIANGLE = Graph.of(3, [(0, 1), (1, 2), (0, 2)])


class TestInstance:
    def test_vector_zero_needs_v(self):
        with pytest.raises(VariantError):
            VestInstance(Z2, 1, (Matrix.identity(Z2, 1),))

    def test_matrix_targets_take_no_s(self):
        with pytest.raises(VariantError):
            VestInstance(Z2, 1, (), Matrix.identity(Z2, 1), target=TargetVariant.MATRIX_ZERO)

    def test_shapes_checked(self):
        with pytest.raises(ShapeError):
            VestInstance(Z2, 2, (Matrix.identity(Z2, 1),), v=Vector.of(Z2, [1, 0]))
        with pytest.raises(ShapeError):
            VestInstance(Z2, 1, (), Matrix.identity(Z2, 2), Vector.of(Z2, [1]))

    def test_fields_checked(self):
        with pytest.raises(MixedFieldError):
            VestInstance(Z2, 1, (Matrix.identity(Z3, 1),), v=Vector.of(Z2, [1]))

    def test_sequence_product_order(self):
        a, b = Matrix.from_rows(Q, [[1, 1], [0, 1]]), Matrix.from_rows(Q, [[1, 0], [1, 1]])
        inst = VestInstance(Q, 2, (a, b), target=TargetVariant.MATRIX_ZERO)
        # (i_1, i_2) = (a, b) multiplies to b a
        assert inst.sequence_product([0, 1]) == b @ a

    def test_describe(self):
        assert scalar_instance(Z2, [1, 0]).describe() == "vector_zero instance over Z_2: d=1, m=2, S=1x1"


class TestBruteForce:
    def test_two_scalars_over_z2(self):
        assert mk_bruteforce(scalar_instance(Z2, [1, 0]), 2) == 3

    def test_identity_powers(self):
        inst = VestInstance(Q, 2, (Matrix.identity(Q, 2),), target=TargetVariant.MATRIX_IDENTITY)
        assert mk_bruteforce(inst, 5) == 1

    def test_triangle_counting_gadget(self):
        inst, _ = dominating_set_to_vest(TRIANGLE, 1, COUNTING)
        assert mk_bruteforce(inst, 1) == 3

    def test_empty_product_convention(self):
        assert mk_bruteforce(scalar_instance(Z2, [0]), 0) == 0
        assert mk_bruteforce(scalar_instance(Z2, [0], s=0), 0) == 1
        inst = VestInstance(Q, 1, (), target=TargetVariant.MATRIX_IDENTITY)
        assert mk_bruteforce(inst, 0) == 1

    def test_empty_product_convention_random(self, rng):
        for _ in range(30):
            inst = random_instance(rng, Z3, rng.randint(1, 3), rng.randint(1, 3))
            expected = 1 if inst.accepts_vector(inst.v) else 0
            assert mk_bruteforce(inst, 0) == expected

    def test_counts_are_bounded_by_m_to_the_k(self, rng):
        for _ in range(20):
            inst = random_instance(rng, Z2, 2, 3)
            assert 0 <= mk_bruteforce(inst, 3) <= 27

    def test_threads_do_not_change_the_count(self, rng):
        inst = random_instance(rng, Z3, 2, 4)
        assert mk_bruteforce(inst, 4, threads=3) == mk_bruteforce(inst, 4)

    def test_permuting_transforms(self, rng):
        for _ in range(10):
            inst = random_instance(rng, Z3, 2, 3)
            for k in range(1, 4):
                expected = mk_bruteforce(inst, k)
                for order in itertools.permutations(inst.transforms):
                    assert mk_bruteforce(inst.with_transforms(order), k) == expected

    def test_budget(self):
        with pytest.raises(BudgetExceeded) as info:
            mk_bruteforce(scalar_instance(Z2, [1, 0]), 10, budget=1000)
        assert info.value.needed == 1024

    def test_witness(self):
        assert find_witness(scalar_instance(Z2, [1, 0]), 2) == [0, 1]
        assert find_witness(scalar_instance(Z2, [1]), 3) is None


class TestDecide:
    def test_triangle(self):
        inst, _ = dominating_set_to_vest(TRIANGLE, 1, COUNTING)
        assert decide(inst, 1)

    def test_single_zero(self):
        assert decide(scalar_instance(Z2, [0]), 1)

    def test_identities_never(self):
        inst = VestInstance(Q, 2, (Matrix.identity(Q, 2),) * 2, Matrix.identity(Q, 2), Vector.of(Q, [1, 2]))
        assert not any(decide(inst, k) for k in range(1, 5))

    @pytest.mark.slow
    def test_matches_count_exhaustively(self):
        for d, m in ((1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3)):
            for inst in all_z2_instances(d, m):
                for k in range(1, 5):
                    assert decide(inst, k) == (mk_bruteforce(inst, k) > 0)


class TestExistsUpTo:
    def test_single_zero(self):
        assert exists_up_to(scalar_instance(Z2, [0]), 5) == 1

    def test_pcp_equal_words(self):
        inst, _ = pcp_to_vest(PcpInstance.of([("01", "01")]))
        assert exists_up_to(inst, 3) == 1

    def test_pcp_unequal_words(self):
        inst, _ = pcp_to_vest(PcpInstance.of([("0", "1")]))
        assert exists_up_to(inst, 5) is None

    def test_empty_product_is_not_a_witness(self):
        inst, _ = pcp_to_vest(PcpInstance.of([("0", "1")]))
        assert mk_bruteforce(inst, 0) == 1
        assert exists_up_to(inst, 0) is None

    def test_agrees_with_decide(self, rng):
        for _ in range(30):
            inst = random_instance(rng, Z2, 2, 2)
            found = exists_up_to(inst, 4)
            first = next((k for k in range(1, 5) if decide(inst, k)), None)
            assert found == first

    def test_long_bound_over_small_field(self):
        assert exists_up_to(scalar_instance(Z2, [1]), 512) is None


class TestCodec:
    def test_json_round_trip(self):
        inst = scalar_instance(FieldTag.prime(5), [1, 3], s=2, v=4)
        data = json.loads(json.dumps(instance_to_json(inst, 7)))
        assert instance_from_json(data) == (inst, 7)

    def test_rationals_are_fractions_in_json(self):
        inst = VestInstance(Q, 1, (Matrix.from_rows(Q, [[3]]),), v=Vector.of(Q, ["1/2"]))
        data = instance_to_json(inst)
        assert data["matrices"] == [[["3/1"]]]
        assert data["v"] == ["1/2"]
        assert data["s"] is None

    def test_integer_shorthand_accepted(self):
        data = {"field": {"kind": "prime", "p": 2}, "dim": 1, "target": "vector_zero",
                "s": [[1]], "v": [1], "matrices": [[[1]], [[0]]], "k": 2}
        inst, k = instance_from_json(data)
        assert mk_bruteforce(inst, k) == 3

    def test_malformed(self):
        with pytest.raises(MalformedInputError):
            instance_from_json({"field": {"kind": "prime", "p": 2}})
        with pytest.raises(MalformedInputError):
            instance_from_json([1, 2])
        with pytest.raises(MalformedInputError):
            instance_from_json({"field": {"kind": "rational"}, "dim": 1, "matrices": [[["x"]]], "v": [1]})

    def test_load_instance(self, tmp_path):
        path = tmp_path / "inst.json"
        path.write_text(json.dumps(instance_to_json(scalar_instance(Z2, [1, 0]), 2)), encoding="utf-8")
        inst, k = load_instance(str(path))
        assert (inst.m, k) == (2, 2)

    def test_load_instance_bad_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{", encoding="utf-8")
        with pytest.raises(MalformedInputError):
            load_instance(str(path))
