"""Unit tests for p-adic regulator valuations and global p-th power checks."""

import pytest

from fopkit.exceptions import InvalidInputError
from fopkit.prationality import (
    local_pth_power_test,
    mbpow_bound,
    regulator_report,
    regulator_scan,
    regulator_valuation,
    strip_pth_powers,
    w_factor,
)
from fopkit.quadfield.numbers import QuadInt
from fopkit.quadfield.units import fundamental_unit

GOLDEN = QuadInt(5, 1, 1)


@pytest.mark.business_logic
class TestRegulatorValuation:
    """Tests for regulator_valuation()"""

    @pytest.mark.parametrize(
        "unit,p,expected,reason",
        [
            (GOLDEN, 3, 0, "Q(sqrt 5) is 3-rational"),
            (QuadInt(58, 198, 26), 3, 1, "99 + 13 sqrt 58 is a local cube at 3"),
            (QuadInt(85, 9, 1), 3, 1, "(9 + sqrt 85)/2 is a local cube at 3"),
            (GOLDEN, 5, 0, "ramified at 5"),
            (GOLDEN, 7, 0, "inert at 7"),
        ],
    )
    def test_known_valuations(self, unit: QuadInt, p: int, expected: int, reason: str):
        assert regulator_valuation(unit, unit.M, p) == expected, f"Failed for: {reason}"

    def test_power_of_unit_adds_valuation(self):
        """eps^p gains exactly one factor p."""
        assert regulator_valuation(GOLDEN**3, 5, 3) == regulator_valuation(GOLDEN, 5, 3) + 1

    def test_square_keeps_valuation(self):
        """Exponents prime to p leave the valuation unchanged."""
        eps = fundamental_unit(58).unit
        assert regulator_valuation(eps * eps, 58, 3) == 1

    @pytest.mark.parametrize(
        "unit,M,p,reason",
        [
            (QuadInt(5, 2, 0), 5, 3, "the unit 1"),
            (QuadInt(7, 6, 2), 7, 3, "norm 2, not a unit"),
            (GOLDEN, 13, 3, "unit of another field"),
            (GOLDEN, 5, 2, "p = 2"),
            (GOLDEN, 5, 9, "p not prime"),
        ],
    )
    def test_rejects_invalid(self, unit: QuadInt, M: int, p: int, reason: str):
        with pytest.raises(InvalidInputError):
            regulator_valuation(unit, M, p)

    def test_local_pth_power(self):
        """Local cubes have positive valuation; 1 is trivially a cube."""
        assert local_pth_power_test(QuadInt(58, 198, 26), 58, 3)
        assert not local_pth_power_test(GOLDEN, 5, 3)
        assert local_pth_power_test(QuadInt(5, 2, 0), 5, 3)


@pytest.mark.business_logic
class TestPthPowers:
    """Tests for strip_pth_powers() and regulator_report()"""

    @pytest.mark.parametrize(
        "E,p,expected,reason",
        [
            (GOLDEN**9, 3, (GOLDEN, 2), "ninth power"),
            (GOLDEN**6, 3, (GOLDEN**2, 1), "one cube removed from the sixth power"),
            (GOLDEN**4, 3, (GOLDEN**4, 0), "not a cube"),
            (GOLDEN**5, 5, (GOLDEN, 1), "fifth power"),
        ],
    )
    def test_strip(self, E: QuadInt, p: int, expected: tuple[QuadInt, int], reason: str):
        assert strip_pth_powers(E, p) == expected, f"Failed for: {reason}"

    def test_report_flags_global_power(self):
        """A cube of the fundamental unit is an exception; its valuation is that of eps."""
        report = regulator_report(GOLDEN**3, 3, with_exponent=True)

        assert report.exception
        assert report.regulator_valuation == 0
        assert report.unit_exponent_n == 3
        assert not report.w_factor

    def test_report_without_exponent(self):
        report = regulator_report(QuadInt(85, 9, 1), 3)

        assert (report.M, report.regulator_valuation, report.exception) == (85, 1, False)
        assert report.unit_exponent_n is None


@pytest.mark.business_logic
class TestScanAndBounds:
    """Tests for regulator_scan(), w_factor() and mbpow_bound()"""

    def test_scan_hits(self):
        """Known primes dividing the regulator of Q(sqrt((p + 1)^2 - d))."""
        hits = {(hit.p, hit.d, hit.M): hit for hit in regulator_scan(20)}

        assert hits[(13, -4, 2)].regulator_valuation >= 1
        assert hits[(11, -1, 145)].regulator_valuation >= 1
        assert hits[(3, 1, 15)].w_factor

    def test_scan_rejects_bad_shift(self):
        with pytest.raises(InvalidInputError):
            regulator_scan(10, shifts=(2,))

    @pytest.mark.parametrize(
        "M,p,expected",
        [(15, 3, True), (6, 3, True), (33, 3, True), (3, 3, False), (15, 5, False)],
    )
    def test_w_factor(self, M: int, p: int, expected: bool):
        """Only p = 3 with M = 6 mod 9."""
        assert w_factor(M, p) is expected

    @pytest.mark.parametrize(
        "c,h,p,B,expected",
        [(9, 1, 3, 10**6, 43267.0), (25, 1, 5, 500, 43.53)],
    )
    def test_mbpow_bound(self, c: int, h: int, p: int, B: int, expected: float):
        assert mbpow_bound(c, h, p, B) == pytest.approx(expected, rel=1e-3)
