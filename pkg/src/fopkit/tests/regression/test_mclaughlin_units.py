"""
Regression tests for the McLaughlin listing of mcl_10 over eps = (22745 + 1311 sqrt 301)/2.

No record of that listing is a proper power of its fundamental unit.
"""

import pytest

from fopkit.mclaughlin import fop_mcl, make_mcl

MCL10_PREFIX = [
    (656527122296918386395032242, 2, 1),
    (1594671238615711306590405613, 63245, 1),
    (6538031892707128354912512481, 1400, 1),
    (8374054846220987469202089646, 14, 1),
    (13294653599300065679245260247, 4, 1),
    (17461037237177260272395675419, 140, 1),
    (28515629817043220531451663970, 7672, 1),
    (42017686932862256394245096245, 1, 1),
]

MCL10_LAST = (2626102383534535069268098426753041168301, 1, 1)


@pytest.fixture(scope="module")
def mcl10():
    return make_mcl(10, 301, 22745, 1311)


@pytest.mark.regression
class TestMcl10:
    """mcl_10 at m = 301."""

    def test_first_value(self, mcl10):
        """t = 1 gives the smallest radical of the listing."""
        result = fop_mcl(mcl10, 1, certify=True)
        record = result.run.records[0]

        assert (record.M, record.r, record.payload["n"]) == MCL10_PREFIX[0]
        assert result.exceptions == []

    @pytest.mark.slow
    def test_listing(self, mcl10):
        result = fop_mcl(mcl10, 1000, certify=True)
        records = result.run.records

        assert result.run.stats.N == 1000
        assert [(r.M, r.r, r.payload["n"]) for r in records[: len(MCL10_PREFIX)]] == MCL10_PREFIX
        assert (records[-1].M, records[-1].r, records[-1].payload["n"]) == MCL10_LAST
        assert result.exceptions == []
        assert result.failures == []
