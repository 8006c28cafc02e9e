"""Perfectness and proportionality suite over the built-in families."""

import pytest

from pairing_functions import verify
from pairing_functions.pairing_core import MonotoneSource, phi
from pairing_functions.proportional import Proportions, g_ab, pair
from pairing_functions.sfc import builtin, builtin_names

PROPORTIONS = [(1, 1), (1, 2), (2, 1), (3, 2), (2, 3), (5, 4)]


class TestPerfectness:
    """Test base-n perfectness of r_d and the curves"""

    @pytest.mark.parametrize("n", [2, 3, 5])
    @pytest.mark.parametrize("d", [2, 3])
    def test_rosenberg_strong(self, n, d):
        """Test r_d is base-n perfect for every base"""
        result = verify.check_base_n_perfect(verify.handle_rs(d), n, 2)
        assert result.passed, str(result)
        assert result.exhaustive

    @pytest.mark.parametrize("name", builtin_names())
    def test_curves_at_own_base(self, name):
        """Test each curve is perfect in the base its digits use"""
        spec = builtin(name)
        k_max = 3 if spec.dim == 2 else 2
        handle = verify.handle_curve(spec)
        result = verify.check_base_n_perfect(handle, spec.base, k_max)
        assert result.passed, str(result)
        assert result.exhaustive

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_tuple_pack(self, d):
        """Test the composed equal-width tupler is base-2 perfect"""
        result = verify.check_base_n_perfect(verify.handle_tuple_pack(d), 2, 2)
        assert result.passed, str(result)


class TestProportionality:
    """Test p_{a,b} against its own and scaled constants"""

    @pytest.mark.parametrize("a,b", PROPORTIONS)
    @pytest.mark.parametrize("n", [2, 3])
    def test_own_constants(self, a, b, n):
        """Test p_{a,b} is base-n proportional with constants (a, b)"""
        p = Proportions(a, b)
        result = verify.check_proportional(verify.handle_pab(p), n, p, 2)
        assert result.passed, str(result)

    @pytest.mark.parametrize("scale", [2, 3])
    def test_scaled_constants(self, scale):
        """Test p_{1,2} keeps its guarantee with constants (c, 2c)"""
        handle = verify.handle_pab(Proportions(1, 2))
        constants = Proportions(scale, 2 * scale)
        assert verify.check_proportional(handle, 2, constants, 2).passed


@pytest.mark.slow
@pytest.mark.parametrize("a,b", PROPORTIONS)
def test_closed_form_matches_generic_construction(a, b):
    """Test pair == phi over g_{a,b} with a searched pseudo-inverse on [0, 200]^2"""
    p = Proportions(a, b)
    searched = MonotoneSource(lambda x: g_ab(p, x), f"g_{{{a},{b}}}")
    for x in range(201):
        for y in range(201):
            assert pair(p, x, y) == phi(searched, x, y), (x, y)
