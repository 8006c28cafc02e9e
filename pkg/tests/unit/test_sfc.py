"""Unit tests for permutation-defined space-filling curves."""

import itertools
import json

import pytest

from pairing_functions.errors import DocumentError, DomainError, UnknownCurveError
from pairing_functions.sfc import (
    CurveDocument,
    CurveSpec,
    builtin,
    builtin_names,
    cell_map,
    decode,
    delta,
    encode,
    is_isometric,
    load_curve,
    trace,
    undelta,
)

CURVES_2D = ["hilbert2", "zorder2", "gray2", "nonisometric2", "peano3"]


class TestFigures:
    """Test curve traces against the figure panels"""

    @pytest.mark.parametrize("name", CURVES_2D)
    def test_trace(self, figures, name):
        """Test the visiting order of every drawn point"""
        expected = [tuple(point) for point in figures[name]]
        assert trace(builtin(name), len(expected)) == expected

    @pytest.mark.parametrize("name", CURVES_2D)
    def test_encode_figure(self, figures, name):
        """Test encode numbers the drawn points 0, 1, 2, ..."""
        spec = builtin(name)
        for z, point in enumerate(figures[name]):
            assert encode(spec, point) == z

    def test_peano_first_points(self):
        """Test the Peano curve starts up the first column"""
        assert trace(builtin("peano3"), 3) == [(0, 0), (0, 1), (0, 2)]

    def test_hilbert_value(self):
        """Test hilbert2 visits (1, 1) third"""
        assert encode(builtin("hilbert2"), (1, 1)) == 2
        assert decode(builtin("hilbert2"), 2) == (1, 1)


class TestRoundTrip:
    """Test encode and decode are mutually inverse"""

    @pytest.mark.parametrize("name", builtin_names())
    def test_decode_then_encode(self, name):
        """Test encode(decode(z)) == z for z < 10^4"""
        spec = builtin(name)
        for z in range(10_000):
            assert encode(spec, decode(spec, z)) == z

    @pytest.mark.parametrize("name", builtin_names())
    def test_box_is_code_prefix(self, name):
        """Test the box [0, n^k)^d maps onto [0, n^(dk))"""
        spec = builtin(name)
        for k in range(3):
            side = spec.base**k
            codes = sorted(
                encode(spec, point)
                for point in itertools.product(range(side), repeat=spec.dim)
            )
            assert codes == list(range(side**spec.dim))

    def test_wide_coordinates(self):
        """Test exactness far beyond machine words"""
        spec = builtin("hilbert3")
        point = (2**100 + 3, 2**99, 7)
        assert decode(spec, encode(spec, point)) == point

    def test_symbol_packing(self):
        """Test delta and undelta on a 3-D base-2 curve"""
        spec = builtin("hilbert3")
        assert delta(spec, (1, 0, 1)) == 5
        assert undelta(spec, 5) == (1, 0, 1)


class TestIsometry:
    """Test which curves move cells by grid symmetries"""

    @pytest.mark.parametrize("name", ["hilbert2", "zorder2", "gray2", "peano3"])
    def test_isometric_curves(self, name):
        """Test every sigma_i of the classical curves is a grid symmetry"""
        spec = builtin(name)
        assert all(is_isometric(spec, i) for i in range(spec.symbols))

    def test_nonisometric_curve(self):
        """Test the example curve uses non-isometric cell maps"""
        spec = builtin("nonisometric2")
        assert not all(is_isometric(spec, i) for i in range(spec.symbols))
        assert not is_isometric(spec, 0)

    def test_hilbert_cell_maps(self):
        """Test hilbert2 transposes the first quadrant"""
        assert list(cell_map(builtin("hilbert2"), 0)) == [0, 2, 1, 3]
        assert cell_map(builtin("hilbert2"), 1).is_identity()


class TestDocuments:
    """Test curve spec documents"""

    def test_round_trip(self):
        """Test a built-in curve survives to_document and to_spec"""
        spec = builtin("gray2")
        document = CurveDocument.from_str(spec.to_document().to_json_str())
        assert document.to_spec() == spec

    def test_load_from_file(self, json_file):
        """Test load_curve reads a custom curve"""
        path = json_file(builtin("hilbert2").to_document().to_json_str())
        spec = load_curve(path)
        assert spec.name == "hilbert2"
        assert encode(spec, (1, 1)) == 2

    @pytest.mark.parametrize(
        "change,field",
        [
            ({"base": 1}, "base"),
            ({"dim": 4}, "dim"),
            ({"tau": [1, 0, 2, 3]}, "tau"),
            ({"tau": [0, 1, 2]}, "tau"),
            ({"sigmas": [[0, 1, 2, 3]] * 3}, "sigmas"),
            ({"sigmas": [[0, 1, 2, 2]] + [[0, 1, 2, 3]] * 3}, "sigmas[0]"),
            ({"sigmas": [[1, 0, 2, 3]] + [[0, 1, 2, 3]] * 3}, "sigmas[0]"),
        ],
    )
    def test_validation_names_field(self, json_file, change, field):
        """Test invalid documents raise DocumentError naming the field"""
        data = builtin("zorder2").to_document().to_dict()
        data.update(change)
        with pytest.raises(DocumentError) as exc_info:
            load_curve(json_file(json.dumps(data)))
        assert exc_info.value.field == field

    def test_unknown_key(self, json_file):
        """Test unknown keys are rejected under strict loading"""
        data = builtin("zorder2").to_document().to_dict()
        data["colour"] = "red"
        with pytest.raises(DocumentError) as exc_info:
            load_curve(json_file(json.dumps(data)))
        assert exc_info.value.field == "colour"

    def test_from_tables_validates(self):
        """Test CurveSpec.from_tables applies the same checks"""
        with pytest.raises(DocumentError, match="tau"):
            CurveSpec.from_tables("bad", 2, 2, [0, 1, 2], [[0, 1, 2, 3]] * 4)


class TestBuiltins:
    """Test the built-in registry"""

    def test_names(self):
        """Test the six built-in curves are listed"""
        assert builtin_names() == [
            "gray2",
            "hilbert2",
            "hilbert3",
            "nonisometric2",
            "peano3",
            "zorder2",
        ]

    def test_unknown_curve(self):
        """Test unknown names raise UnknownCurveError listing valid names"""
        with pytest.raises(UnknownCurveError, match="hilbert2"):
            builtin("moore2")

    def test_unknown_curve_is_lookup_error(self):
        """Test UnknownCurveError is also a DomainError and LookupError"""
        with pytest.raises(LookupError):
            builtin("moore2")
        with pytest.raises(DomainError):
            builtin("moore2")

    def test_dimension_mismatch(self):
        """Test encoding a point of the wrong dimension raises"""
        with pytest.raises(DomainError, match="takes 2 coordinates"):
            encode(builtin("hilbert2"), (1, 2, 3))

    def test_origin(self):
        """Test the origin encodes to zero on every curve"""
        for name in builtin_names():
            spec = builtin(name)
            assert encode(spec, (0,) * spec.dim) == 0
            assert decode(spec, 0) == (0,) * spec.dim
