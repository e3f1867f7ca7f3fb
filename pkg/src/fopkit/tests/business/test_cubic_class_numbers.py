"""
Business logic tests for 3-class numbers of the mirror fields Q(sqrt -3M).

The cubic families build units of Q(sqrt M) that are local cubes at 3. By reflection,
a unit that is not a global cube forces 3 | h(Q(sqrt -3M)).
"""

import pytest

from fopkit.imagclass import cubic_pipeline, quintic_list
from fopkit.prationality import regulator_valuation

MAX_M = 10_000


@pytest.fixture(scope="module")
def unfiltered():
    return cubic_pipeline(1000, max_M=MAX_M)


@pytest.mark.business_logic
class TestCubicReflection:
    """Tests for the 3-divisibility claim along the cubic pipeline."""

    def test_non_cubes_have_three_rank(self, unfiltered):
        checked = [report for report in unfiltered.reports if report.h is not None and not report.exception]

        assert checked
        for report in checked:
            assert report.v3 >= 1, f"M={report.M}, D={report.D_neg}, h={report.h}"

    def test_class_numbers_only_below_cap(self, unfiltered):
        for report in unfiltered.reports:
            assert (report.h is not None) == (report.M <= MAX_M)

    def test_filtered_run_has_no_exception(self):
        """Witness residues mod 7 rule out global cubes."""
        result = cubic_pipeline(200, filtered=True, max_M=MAX_M)

        assert result.exceptions == []
        for report in result.reports:
            if report.h is not None:
                assert report.v3 >= 1


@pytest.mark.business_logic
class TestQuinticUnits:
    """Units of 625 t^2 - 4s are local fifth powers: 5 | regulator off the exceptions."""

    @pytest.mark.parametrize("s", [-1, 1])
    def test_regulator_divisible_by_five(self, s: int):
        result = quintic_list(5, s, 100)
        family = result.run.families[0]

        assert len(result.records) == 100
        for record in result.run.records:
            if record.payload["exception"]:
                continue
            E = family.unit(record.t, record.M, record.r)
            assert regulator_valuation(E, record.M, 5) >= 1, f"M={record.M}"
