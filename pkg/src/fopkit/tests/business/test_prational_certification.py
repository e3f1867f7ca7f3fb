"""
Business logic tests for non-p-rationality certificates.

A unit built by the local p-th power families is a p-th power in the completion at p.
Unless it is a global p-th power, p divides the regulator of Q(sqrt M):
- every record that is not an exception has vp_reg >= 1
- the valuation from the swept unit equals the one from eps_M
"""

import pytest

from fopkit.fop.engine import DedupKey, run_fop_multi
from fopkit.prationality import Variant, build_families, certify_run, nonrational_list, regulator_valuation
from fopkit.quadfield.units import fundamental_unit

B = 1000


@pytest.fixture(scope="module", params=[(3, "A"), (5, "A"), (7, "A"), (3, "B"), (5, "B"), (7, "B")], ids=str)
def certified(request):
    p, variant = request.param
    run = run_fop_multi(build_families(p, Variant(variant)), B, DedupKey.RADICAL)
    uncertified = certify_run(run, p)
    return p, run, uncertified


@pytest.mark.business_logic
@pytest.mark.slow
class TestLocalPowerCertificate:
    """The regulator of a field with a local, non-global p-th power unit is divisible by p."""

    def test_non_exceptions_have_divisible_regulator(self, certified):
        p, run, _ = certified
        for record in run.records:
            if record.degenerate:
                continue
            if not record.payload["exception"]:
                assert record.payload["vp_reg"] >= 1, f"p={p}, M={record.M}"

    def test_uncertified_are_global_powers(self, certified):
        _, _, uncertified = certified

        assert all(record.payload["exception"] for record in uncertified)

    def test_valuation_matches_fundamental_unit(self, certified):
        p, run, _ = certified
        for record in run.records:
            if record.degenerate or record.M > 10_000:
                continue
            eps = fundamental_unit(record.M).unit

            assert record.payload["vp_reg"] == regulator_valuation(eps, record.M, p), f"M={record.M}"


@pytest.mark.business_logic
class TestNonRationalList:
    """Residue-filtered lists have no global p-th power exceptions."""

    @pytest.mark.parametrize(
        "p,q,reason",
        [
            (3, 7, "smallest q for p = 3"),
            (3, 13, "second q for p = 3"),
            (5, 11, "smallest q for p = 5"),
        ],
    )
    def test_every_record_certified(self, p: int, q: int, reason: str):
        result = nonrational_list(p, q, 100, certify=True)

        assert result.uncertified == [], f"Failed for: {reason}"
        for record in result.run.records:
            assert record.payload["local"], f"Failed for: {reason}"
            assert record.payload["vp_reg"] >= 1, f"Failed for: {reason}"
