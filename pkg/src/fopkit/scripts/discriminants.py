"""
Fundamental discriminants of Q(sqrt M) over t^2 - 1 and t^2 + 1 together, first occurrences sorted by D.

Usage:
    fopkit discriminants --bound 1000000
    fopkit discriminants --poly t2m4 t2p4 --bound 100000 --format pretty
"""

from fopkit.fop.engine import DedupKey
from fopkit.scripts.radicals import RadicalsScript


class DiscriminantsScript(RadicalsScript):
    """F.O.P. over radical polynomials, keyed by the discriminant of Q(sqrt M)."""

    columns = ("D",)
    default_polys = ("t2m1", "t2p1")
    key = DedupKey.DISCRIMINANT
