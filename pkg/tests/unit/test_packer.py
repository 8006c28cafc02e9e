"""Unit tests for the bit-budget key packer."""

import itertools
import json

import pytest

from pairing_functions.errors import (
    DocumentError,
    DomainError,
    IntegrityError,
    UsageError,
)
from pairing_functions.intmath import len_base
from pairing_functions.packer import (
    PackPlan,
    pack,
    perfect_tupler,
    plan,
    plan_from_file,
    unpack,
)
from pairing_functions.proportional import Proportions


def step_pairs(key_plan):
    return [(step.a, step.b) for step in key_plan.steps]


class TestPlan:
    """Test plan compilation"""

    def test_composition_example(self):
        """Test 32, 48 and 64 bit fields fold into 144 bits"""
        key_plan = plan([32, 48, 64])
        assert key_plan.k == 16
        assert step_pairs(key_plan) == [(2, 3), (5, 4)]
        assert key_plan.total_bits == 144
        assert key_plan.proportions == [Proportions(2, 3), Proportions(5, 4)]

    def test_single_field(self):
        """Test one field needs no steps"""
        key_plan = plan([8])
        assert key_plan.k == 8
        assert key_plan.steps == []
        assert key_plan.total_bits == 8

    def test_coprime_widths(self):
        """Test coprime widths keep their own ratio"""
        key_plan = plan([3, 5])
        assert key_plan.k == 1
        assert step_pairs(key_plan) == [(3, 5)]
        assert key_plan.total_bits == 8

    def test_steps_are_reduced(self):
        """Test every step uses a/b = accumulated width / next width in lowest terms"""
        widths = [12, 18, 6, 24]
        key_plan = plan(widths)
        accumulated = widths[0]
        for step, w in zip(key_plan.steps, widths[1:]):
            assert step.a * w == step.b * accumulated
            accumulated += w
        assert step_pairs(key_plan) == [(2, 3), (5, 1), (3, 2)]

    @pytest.mark.parametrize("widths", [[], [8, 0], [-1]])
    def test_invalid_widths(self, widths):
        """Test empty lists and widths below 1 are domain errors"""
        with pytest.raises(DomainError):
            plan(widths)


class TestPackUnpack:
    """Test pack and unpack"""

    def test_zero(self):
        """Test all-zero fields pack to 0 and back"""
        key_plan = plan([32, 48, 64])
        assert pack(key_plan, [0, 0, 0]) == 0
        assert unpack(key_plan, 0) == [0, 0, 0]

    def test_full_sixteen_bits(self):
        """Test two full bytes fill 16 bits exactly"""
        key_plan = plan([8, 8])
        assert pack(key_plan, [255, 255]) == 65535
        assert unpack(key_plan, 65535) == [255, 255]

    def test_small_values(self):
        """Test a round trip of small values on the wide plan"""
        key_plan = plan([32, 48, 64])
        assert unpack(key_plan, pack(key_plan, [1, 2, 3])) == [1, 2, 3]

    def test_wide_boundaries(self):
        """Test field extremes of the 144-bit plan stay within budget"""
        key_plan = plan([32, 48, 64])
        extremes = [[0, 1, 2**w - 1] for w in key_plan.widths]
        for values in itertools.product(*extremes):
            z = pack(key_plan, list(values))
            assert len_base(2, z) <= 144
            assert unpack(key_plan, z) == list(values)

    @pytest.mark.parametrize("widths", [[2, 3], [4, 4], [1, 1, 1], [3, 5], [2, 1, 3]])
    def test_exhaustive_small_plans(self, widths):
        """Test the box of every small plan maps onto [0, 2^total)"""
        key_plan = plan(widths)
        codes = []
        for values in itertools.product(*(range(2**w) for w in widths)):
            z = pack(key_plan, list(values))
            assert unpack(key_plan, z) == list(values)
            codes.append(z)
        assert sorted(codes) == list(range(2**key_plan.total_bits))

    def test_exhaustive_two_bytes(self):
        """Test all 65536 keys of [8, 8] round trip inside 16 bits"""
        key_plan = plan([8, 8])
        for x in range(256):
            for y in range(256):
                z = pack(key_plan, [x, y])
                assert z < 65536
                assert unpack(key_plan, z) == [x, y]


class TestErrors:
    """Test pack and unpack errors"""

    def test_count_mismatch(self):
        """Test a wrong number of values is a usage error"""
        with pytest.raises(UsageError, match="Plan has 2 fields, got 3 values"):
            pack(plan([8, 8]), [1, 2, 3])

    def test_field_overflow(self):
        """Test an over-wide value names its field"""
        with pytest.raises(DomainError, match="Field 1"):
            pack(plan([8, 8]), [1, 256])

    def test_negative_field(self):
        """Test negative values name their field"""
        with pytest.raises(DomainError, match="Field 0"):
            pack(plan([8, 8]), [-1, 0])

    def test_foreign_key(self):
        """Test decoding a key outside the plan's range is an integrity error"""
        with pytest.raises(IntegrityError, match="not packed with this plan"):
            unpack(plan([8, 8]), 65536)

    def test_negative_key(self):
        """Test a negative key is a domain error"""
        with pytest.raises(DomainError):
            unpack(plan([8, 8]), -1)


class TestDocuments:
    """Test the JSON form of plans"""

    def test_json_form(self):
        """Test the documented JSON layout"""
        data = json.loads(plan([32, 48, 64]).to_json_str())
        assert data == {
            "k": 16,
            "widths": [32, 48, 64],
            "steps": [{"a": 2, "b": 3}, {"a": 5, "b": 4}],
            "total_bits": 144,
        }

    def test_load(self, json_file):
        """Test a saved plan loads to an equal plan"""
        key_plan = plan([32, 48, 64])
        loaded = plan_from_file(json_file(key_plan.to_json_str(), "plan.json"))
        assert loaded == key_plan
        assert unpack(loaded, pack(loaded, [7, 8, 9])) == [7, 8, 9]

    @pytest.mark.parametrize(
        "change,field",
        [
            ({"k": 8}, "k"),
            ({"total_bits": 128}, "total_bits"),
            ({"steps": [{"a": 2, "b": 3}]}, "steps"),
            ({"steps": [{"a": 3, "b": 2}, {"a": 5, "b": 4}]}, "steps[0]"),
            ({"steps": [{"a": 0, "b": 3}, {"a": 5, "b": 4}]}, "steps[0].a"),
            ({"widths": [32, 0, 64]}, "widths[1]"),
            ({"widths": "32,48,64"}, "widths"),
        ],
    )
    def test_validation_names_field(self, json_file, change, field):
        """Test a tampered plan is rejected naming the field"""
        data = plan([32, 48, 64]).to_dict()
        data.update(change)
        with pytest.raises(DocumentError) as exc_info:
            plan_from_file(json_file(json.dumps(data)))
        assert exc_info.value.field == field

    def test_missing_file(self, tmp_path):
        """Test an unreadable file is a document error"""
        with pytest.raises(DocumentError, match="Cannot read"):
            plan_from_file(str(tmp_path / "missing.json"))

    def test_from_str(self):
        """Test PackPlan.from_str re-validates"""
        assert PackPlan.from_str(plan([3, 5]).to_json_str()) == plan([3, 5])


class TestPerfectTupler:
    """Test the composed equal-width d-tupling function"""

    def test_steps(self):
        """Test step i uses constants (i, 1)"""
        tupler = perfect_tupler(4)
        assert tupler.steps == (
            Proportions(1, 1),
            Proportions(2, 1),
            Proportions(3, 1),
        )

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_box_is_code_prefix(self, d):
        """Test [0, 2^k)^d maps onto [0, 2^(dk))"""
        tupler = perfect_tupler(d)
        for k in range(3):
            side = 2**k
            codes = sorted(
                tupler.pack(xs) for xs in itertools.product(range(side), repeat=d)
            )
            assert codes == list(range(side**d))

    def test_round_trip(self):
        """Test unpack(pack(x)) == x on unbounded coordinates"""
        tupler = perfect_tupler(3)
        xs = (2**70, 5, 2**40 + 1)
        assert tupler.unpack(tupler.pack(xs)) == xs

    def test_errors(self):
        """Test arity, sign and dimension checks"""
        with pytest.raises(DomainError):
            perfect_tupler(0)
        with pytest.raises(DomainError, match="Expected 3 coordinates"):
            perfect_tupler(3).pack((1, 2))
        with pytest.raises(DomainError):
            perfect_tupler(2).pack((1, -2))
