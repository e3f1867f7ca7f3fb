"""
Regression tests for the pinned fundamental-solution lists of u^2 - M v^2 = 4 s nu.

Prefixes list [M, t] including the negative and degenerate radicals of s = 1. The
listing for nu = 1009 left out M = 1 at t = 1008, so it is compared on positive radicals.
"""

import pytest

from fopkit.normeq import fop_norm_solutions

NORMS_1_2 = [
    (-7, 1), (-1, 2), (1, 3), (2, 4), (7, 6), (14, 8), (17, 5), (23, 10), (31, 78), (34, 12), (41, 7),
    (46, 312), (47, 14), (62, 16), (71, 118), (73, 9), (79, 18), (89, 217), (94, 2928), (97, 69),
    (103, 954), (113, 11), (119, 22), (127, 4350), (137, 199), (142, 24), (151, 83142), (158, 176),
    (161, 13), (167, 26), (191, 5998), (193, 56445), (194, 28), (199, 255078), (206, 488), (217, 15),
    (223, 30), (233, 6121), (238, 216),
]  # fmt: skip

NORMS_M1_3 = [
    (1, 2), (3, 6), (7, 4), (13, 1), (19, 8), (21, 3), (31, 22), (37, 5), (39, 12), (43, 26), (57, 30),
    (61, 7), (67, 16), (73, 34), (91, 38), (93, 9), (97, 1694), (103, 20), (109, 73), (111, 42),
    (127, 586), (129, 318), (133, 11), (139, 448), (151, 172), (157, 50), (163, 1864), (181, 13),
    (183, 54), (193, 379486), (199, 28), (201, 1758), (211, 58), (217, 766), (237, 15), (241, 62),
    (247, 220), (259, 32), (271, 428),
]  # fmt: skip

NORMS_1_15 = [
    (-59, 1), (-51, 3), (-35, 5), (-14, 2), (-11, 4), (-6, 6), (1, 8), (10, 10), (21, 9), (34, 14),
    (61, 11), (66, 18), (85, 20), (106, 22), (109, 13), (129, 24), (154, 26), (165, 15), (181, 28),
    (201, 312), (210, 30), (229, 17), (241, 32), (265, 1400), (274, 34), (301, 19), (309, 36),
    (346, 38), (349, 131), (354, 414), (381, 21), (385, 40), (394, 278), (409, 41216), (421, 3919),
]  # fmt: skip

NORMS_M1_15 = [
    (1, 2), (6, 6), (10, 10), (15, 30), (19, 4), (31, 8), (34, 22), (46, 26), (51, 12), (61, 1),
    (69, 3), (79, 16), (85, 5), (94, 38), (106, 82), (109, 7), (114, 42), (115, 20), (139, 94),
    (141, 9), (151, 98), (159, 24), (166, 206), (181, 11), (186, 54), (190, 110), (199, 536),
    (211, 28), (214, 58), (229, 13), (241, 52658), (249, 126), (265, 130), (271, 32), (274, 1258),
    (285, 15), (310, 70), (331, 7714), (334, 146), (339, 36),
]  # fmt: skip

NORMS_M1_225 = [
    (1, 16), (2, 30), (5, 15), (10, 10), (13, 20), (17, 120), (26, 6), (29, 12), (34, 18), (37, 5),
    (41, 24), (53, 105), (58, 70), (61, 25), (65, 240), (73, 80), (74, 42), (82, 270), (85, 35),
    (89, 48), (97, 1280), (101, 3), (106, 54), (109, 9), (113, 23280), (122, 330), (130, 110),
    (137, 52320), (145, 360), (146, 66), (149, 21), (157, 55), (170, 390), (173, 195), (178, 130),
    (181, 27), (185, 2040),
]  # fmt: skip

NORMS_M1_1009 = [
    (2, 14), (5, 13), (10, 102), (29, 100), (37, 21), (41, 8), (58, 42), (74, 58), (101, 305),
    (109, 1617), (113, 656), (137, 2504), (157, 108), (173, 17), (185, 1168), (197, 259),
    (202, 35958), (205, 33), (209, 4192), (218, 854), (241, 380808), (253, 681), (269, 620),
    (290, 158), (313, 384), (314, 2090), (317, 1316), (337, 6792), (341, 67), (353, 16496),
    (370, 1422), (394, 86742),
]  # fmt: skip

NORMS_1_210 = [
    (-839, 1), (-831, 3), (-815, 5), (-791, 7), (-759, 9), (-719, 11), (-671, 13), (-615, 15),
    (-551, 17), (-479, 19), (-399, 21), (-311, 23), (-215, 25), (-209, 2), (-206, 4), (-201, 6),
    (-194, 8), (-185, 10), (-174, 12), (-161, 14), (-146, 16), (-129, 18), (-111, 27), (-110, 20),
    (-89, 22), (-66, 24), (-41, 26), (-14, 28), (1, 29), (15, 30), (46, 32), (79, 34), (114, 36),
    (151, 38), (190, 40), (226, 332), (231, 42), (249, 33), (274, 44), (319, 46), (366, 48),
    (385, 35), (415, 50), (466, 52), (511, 2758), (519, 54), (526, 872), (574, 56), (609, 273),
    (610, 4100), (631, 58), (679, 574), (681, 39), (690, 60), (721, 511), (751, 62), (814, 64),
    (834, 636), (865, 1265), (879, 66), (919, 2486), (946, 68), (991, 30158), (1009, 43),
]  # fmt: skip

CASES = [
    (1, 2, NORMS_1_2, 999909),
    (-1, 3, NORMS_M1_3, 999866),
    (1, 15, NORMS_1_15, 999815),
    (-1, 15, NORMS_M1_15, 999782),
    (-1, 225, NORMS_M1_225, 999448),
    (1, 210, NORMS_1_210, 999715),
]


def _prefix(run, length: int) -> list[tuple[int, int]]:
    return [(record.M, record.t) for record in run.records[:length]]


@pytest.mark.regression
@pytest.mark.slow
class TestNormLists:
    """Full listings at B = 10^6."""

    @pytest.mark.parametrize("s,nu,expected,count", CASES)
    def test_prefix_and_count(self, s: int, nu: int, expected: list[tuple[int, int]], count: int):
        run = fop_norm_solutions(s, nu, 1_000_000)

        assert _prefix(run, len(expected)) == expected
        assert run.stats.N == count

    def test_nu_1009_positive_radicals(self):
        run = fop_norm_solutions(-1, 1009, 1_000_000)
        positive = [(record.M, record.t) for record in run.records if not record.degenerate]

        assert positive[: len(NORMS_M1_1009)] == NORMS_M1_1009
        assert run.stats.N == 999664


@pytest.mark.regression
class TestNormPrefixes:
    """Listings whose largest t stays below 10^5."""

    @pytest.mark.parametrize(
        "s,nu,expected,reason",
        [
            (1, 15, NORMS_1_15, "largest t is 41216 at M = 409"),
            (-1, 15, NORMS_M1_15, "largest t is 52658 at M = 241"),
            (-1, 225, NORMS_M1_225, "largest t is 52320 at M = 137"),
            (1, 210, NORMS_1_210, "largest t is 30158 at M = 991"),
        ],
    )
    def test_prefix(self, s: int, nu: int, expected: list[tuple[int, int]], reason: str):
        run = fop_norm_solutions(s, nu, 100_000)

        assert _prefix(run, len(expected)) == expected, f"Failed for: {reason}"
