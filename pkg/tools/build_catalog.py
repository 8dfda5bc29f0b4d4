"""Generate ``src/logdelta/data/catalog.json``.

The rows below are a hand transcription of the classification table.  For
weighted projective planes and toric surfaces the local shape of every
boundary curve at every torus fixed point is derived from the monomials of a
general member (Cox coordinates); intersection points in the smooth locus
are the remainder of the global intersection number after the fixed-point
contributions, and must be a non-negative integer.  Surfaces given by a
resolution graph are transcribed directly.

Run from the repository root:  python tools/build_catalog.py
"""

from __future__ import annotations

import itertools
import json
import sys
from fractions import Fraction as F
from math import gcd
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from logdelta.cyclic import CyclicQuot, hj_expand  # noqa: E402
from logdelta.exact import AffineForm, fmt_rat  # noqa: E402
from logdelta.germs import Axis, Newton, Tangent  # noqa: E402
from logdelta.linalg import solve  # noqa: E402

INF = 10**9
SCHEMA_VERSION = 1
H = F(1, 2)
T_TEXT = AffineForm(0, 1).to_text("t")
T3 = F(2, 3)
Q4 = F(3, 4)
V5 = F(4, 5)
S6 = F(5, 6)


def std(k):
    return F(k - 1, k)


# ---------------------------------------------------------------------------
# transcription of the weighted projective cases

class Row:
    def __init__(self, sid, marker, weights, c, bs, high, params=None, open_=False, variants=(), endpoint=None, text=""):
        self.sid = sid
        self.marker = marker
        self.weights = weights
        self.c = c
        self.bs = bs
        self.high = high
        self.params = params
        self.open = open_
        self.variants = variants
        self.endpoint = endpoint
        self.text = text


def fixed(sid, marker, weights, c, bs, **kw):
    return Row(sid, marker, weights, c, bs, F(6, 7), **kw)


ROWS = [
    Row("1-1", 4, (1, 1, 1), 2, lambda k: [(H, 1), (std(k), 1)], lambda k: F(3, 4) + F(1, 2 * k), {"k": [3, 4]},
        text="D = tX_2 + 1/2 X_1 + (k-1)/k X_1, k = 3,4, t in [6/7, 3/4 + 1/(2k)]"),
    Row("1-2", 1, (1, 1, 1), 1, lambda k: [(H, 1), (Q4, 1), (std(k), 1)], lambda k: F(3, 4) + F(1, k), {"k": [5, 6]},
        text="D = tX_1 + 1/2 X_1 + 3/4 X_1 + (k-1)/k X_1, k = 5,6, t in [6/7, 3/4 + 1/k]"),
    Row("1-3", 1, (1, 1, 1), 1, [(H, 1), (V5, 1), (V5, 1)], F(9, 10),
        text="D = tX_1 + 1/2 X_1 + 4/5 X_1 + 4/5 X_1, t in [6/7, 9/10]"),
    Row("1-4", 1, (1, 1, 1), 1, lambda k: [(T3, 2), (std(k), 1)], lambda k: F(2, 3) + F(1, k), {"k": [4, 5]},
        variants=[
            ("split", "X_1 + X_1 instead of X_2", {"replace": (0, [(T3, 1), (T3, 1)])}, None),
            ("tangent", "the line X_1 tangent to X_2 (k = 4 only)", {"smooth_tangent": ("B1", "B2", 2)}, {"k": 4}),
        ],
        text="D = tX_1 + 2/3 X_2 + (k-1)/k X_1, k = 4,5, t in [6/7, 2/3 + 1/k]"),
    Row("2-1", "ell", (1, 1, 2), 4, [(H, 1)], F(7, 8), text="D = tX_4 + 1/2 X_1, t in [6/7, 7/8]"),
    Row("2-2", 4, (1, 1, 2), 3, [(T3, 2)], F(8, 9), text="D = tX_3 + 2/3 X_2, t in [6/7, 8/9]"),
    Row("2-3", 2, (1, 1, 2), 2, [(S6, 2), (H, 1)], F(11, 12), text="D = tX_2 + 5/6 X_2 + 1/2 X_1, t in [6/7, 11/12]"),
    Row("2-4", 2, (1, 1, 2), 2, lambda k: [(V5, 2), (std(k), 1)], lambda k: F(6, 5) - F(k - 1, 2 * k), {"k": [2, 3]},
        text="D = tX_2 + 4/5 X_2 + (k-1)/k X_1, k = 2,3, t in [6/7, 6/5 - (k-1)/(2k)]"),
    Row("2-5", 2, (1, 1, 2), 2, lambda k: [(Q4, 2), (std(k), 1)], lambda k: F(5, 4) - F(k - 1, 2 * k), {"k": [3, 4]},
        text="D = tX_2 + 3/4 X_2 + (k-1)/k X_1, k = 3,4, t in [6/7, 5/4 - (k-1)/(2k)]"),
    Row("2-6", 2, (1, 1, 2), 2, lambda k: [(T3, 2), (std(k), 1)], lambda k: F(4, 3) - F(k - 1, 2 * k), {"k": [4, 5, 6]},
        text="D = tX_2 + 2/3 X_2 + (k-1)/k X_1, k = 4,5,6, t in [6/7, 4/3 - (k-1)/(2k)]"),
    Row("2-7", 2, (1, 1, 2), 2, lambda k: [(H, 3), (std(k), 1)], lambda k: F(5, 4) - F(k - 1, 2 * k), {"k": [3, 4]},
        variants=[("split", "X_2 + X_1 instead of X_3", {"replace": (0, [(H, 2), (H, 1)])}, None)],
        text="D = tX_2 + 1/2 X_3 + (k-1)/k X_1, k = 3,4, t in [6/7, 5/4 - (k-1)/(2k)]"),
    Row("2-8", 0, (1, 1, 2), 1, lambda k: [(H, 2), (T3, 2), (std(k), 1)], lambda k: F(2, 3) + F(1, k), {"k": [4, 5]},
        text="D = tX_1 + 1/2 X_2 + 2/3 X_2 + (k-1)/k X_1, k = 4,5, t in [6/7, 2/3 + 1/k]"),
    Row("2-9", 0, (1, 1, 2), 1, [(H, 3), (V5, 2)], F(9, 10),
        variants=[("split", "X_2 + X_1 instead of X_3", {"replace": (0, [(H, 2), (H, 1)])}, None)],
        text="D = tX_1 + 1/2 X_3 + 4/5 X_2, t in [6/7, 9/10]"),
    Row("2-10", 0, (1, 1, 2), 1, [(Q4, 2), (V5, 2)], F(9, 10), text="D = tX_1 + 3/4 X_2 + 4/5 X_2, t in [6/7, 9/10]"),
    Row("3-1", 5, (1, 1, 3), 4, [(H, 3)], F(7, 8), text="D = tX_4 + 1/2 X_3, t in [6/7, 7/8]"),
    Row("3-2", 3, (1, 1, 3), 3, lambda k: [(std(k), 3)], lambda k: F(5, 3) - std(k), {"k": [4, 5]},
        text="D = tX_3 + (k-1)/k X_3, k = 4,5, t in [6/7, 5/3 - (k-1)/k]"),
    Row("3-3", 3, (1, 1, 3), 3, lambda k: [(H, 3), (std(k), 1)], lambda k: F(5, 6) + F(1, 3 * k), {"k": [3, 4, 5, 6]},
        text="D = tX_3 + 1/2 X_3 + (k-1)/k X_1, k = 3..6, t in [6/7, 5/6 + 1/(3k)]"),
    Row("4", 4, (1, 1, 4), 4, [(H, 5)], F(7, 8),
        variants=[("alt", "D = tX_4 + 1/2 X_4 + 1/2 X_1", {"replace": (0, [(H, 4), (H, 1)])}, None)],
        text="D = tX_4 + 1/2 X_5 or tX_4 + 1/2 X_4 + 1/2 X_1, t in [6/7, 7/8]"),
    Row("5", 5, (1, 1, 5), 5, [(H, 5)], F(9, 10), text="D = tX_5 + 1/2 X_5, t in [6/7, 9/10]"),
    Row("6-1", "ell", (1, 2, 3), 6, lambda k: [(std(k), 1)], lambda k: 1 - F(k - 1, 6 * k), {"k": [2, 3, 4, 5, 6]},
        text="D = tX_6 + (k-1)/k X_1, 2 <= k <= 6, t in [6/7, 1 - (k-1)/(6k)]"),
    fixed("6-2", "ell", (1, 2, 3), 7, [], text="D = 6/7 X_7"),
    Row("6-3", 3, (1, 2, 3), 5, [(H, 3)], F(9, 10), text="D = tX_5 + 1/2 X_3, t in [6/7, 9/10]"),
    Row("6-4", 2, (1, 2, 3), 4, lambda k: [(std(k), 3)], lambda k: F(3, 4) + F(3, 4 * k), {"k": [4, 5, 6]},
        text="D = tX_4 + (k-1)/k X_3, k = 4,5,6, t in [6/7, 3/4 + 3/(4k)]"),
    Row("6-5", 2, (1, 2, 3), 4, [(H, 5)], F(7, 8),
        variants=[("split", "X_3 + X_2 instead of X_5", {"replace": (0, [(H, 3), (H, 2)])}, None)],
        text="D = tX_4 + 1/2 X_5, t in [6/7, 7/8]"),
    Row("6-6", 1, (1, 2, 3), 3, lambda k1, k2: [(std(k1), 3), (std(k2), 2)],
        lambda k1, k2: F(1, 3) + F(1, k1) + F(2, 3 * k2), {"k1,k2": [(2, 5), (2, 6), (3, 3), (4, 2), (5, 2)]},
        text="D = tX_3 + (k1-1)/k1 X_3 + (k2-1)/k2 X_2, (k1,k2) in {(2,5),(2,6),(3,3),(4,2),(5,2)}, t in [6/7, 1/3 + 1/k1 + 2/(3k2)]"),
    Row("6-7", 1, (1, 2, 3), 3, [(H, 4), (T3, 2)], F(8, 9), text="D = tX_3 + 1/2 X_4 + 2/3 X_2, t in [6/7, 8/9]"),
    Row("6-8", 1, (1, 2, 3), 3, [(T3, 5)], F(8, 9), text="D = tX_3 + 2/3 X_5, t in [6/7, 8/9]"),
    Row("6-9", 1, (1, 2, 3), 3, [(T3, 4), (H, 1)], F(17, 18), text="D = tX_3 + 2/3 X_4 + 1/2 X_1, t in [6/7, 17/18]"),
    Row("6-10", 1, (1, 2, 3), 3, lambda k: [(std(k), 4)], lambda k: F(2, 3) + F(4, 3 * k), {"k": [5, 6]},
        text="D = tX_3 + (k-1)/k X_4, k = 5,6, t in [6/7, 2/3 + 4/(3k)]"),
    Row("6-11", 0, (1, 2, 3), 2, [(H, 3), (T3, 4)], F(11, 12), text="D = tX_2 + 1/2 X_3 + 2/3 X_4, t in [6/7, 11/12]"),
    Row("6-12", 0, (1, 2, 3), 2, [(Q4, 3), (H, 4)], F(7, 8), text="D = tX_2 + 3/4 X_3 + 1/2 X_4, t in [6/7, 7/8]"),
    Row("6-13", 0, (1, 2, 3), 2, [(T3, 3), (Q4, 3)], F(7, 8), text="D = tX_2 + 2/3 X_3 + 3/4 X_3, t in [6/7, 7/8]"),
    Row("7-1", 3, (1, 2, 5), 6, [(H, 5)], F(11, 12), text="D = tX_6 + 1/2 X_5, t in [6/7, 11/12]"),
    Row("7-2", 2, (1, 2, 5), 5, [(T3, 5)], F(14, 15), text="D = tX_5 + 2/3 X_5, t in [6/7, 14/15]"),
    Row("7-3", 2, (1, 2, 5), 5, [(H, 7)], F(9, 10),
        variants=[("split", "X_5 + X_2 instead of X_7", {"replace": (0, [(H, 5), (H, 2)])}, None)],
        text="D = tX_5 + 1/2 X_7, t in [6/7, 9/10]"),
    Row("7-4", 2, (1, 2, 5), 5, [(H, 6), (H, 1)], F(9, 10), text="D = tX_5 + 1/2 X_6 + 1/2 X_1, t in [6/7, 9/10]"),
    Row("7-5", 0, (1, 2, 5), 2, [(H, 5), (Q4, 5)], F(7, 8), text="D = tX_2 + 1/2 X_5 + 3/4 X_5, t in [6/7, 7/8]"),
    Row("8-1", "ell", (1, 3, 4), 9, [], F(8, 9), text="D = tX_9, t in [6/7, 8/9]"),
    fixed("8-2", 3, (1, 3, 4), 7, [(H, 4)], text="D = 6/7 X_7 + 1/2 X_4"),
    Row("8-3", 1, (1, 3, 4), 4, lambda k1, k2: [(std(k1), 4), (std(k2), 3)],
        lambda k1, k2: F(3, 4) + F(3, 4 * k2) if k1 == 2 else F(19, 21), {"k1,k2": [(2, 4), (2, 5), (2, 6), (3, 2)]},
        open_=lambda k1, k2: k1 == 3,
        text="D = tX_4 + (k1-1)/k1 X_4 + (k2-1)/k2 X_3, (k1,k2) in {(2,4),(2,5),(2,6),(3,2)}, t in [6/7, 3/4 + 3/(4k2)] if k1 = 2, t in [6/7, 19/21) if k1 = 3"),
    Row("8-4", 1, (1, 3, 4), 4, [(H, 9)], F(7, 8),
        variants=[("split", "X_6 + X_3 instead of X_9", {"replace": (0, [(H, 6), (H, 3)])}, None)],
        text="D = tX_4 + 1/2 X_9, t in [6/7, 7/8]"),
    Row("8-5", 1, (1, 3, 4), 4, [(Q4, 6)], F(7, 8), text="D = tX_4 + 3/4 X_6, t in [6/7, 7/8]"),
    Row("8-6", 0, (1, 3, 4), 3, lambda k: [(H, 4), (std(k), 4)], lambda k: F(2, 3) + F(4, 3 * k), {"k": [5, 6]},
        text="D = tX_3 + 1/2 X_4 + (k-1)/k X_4, k = 5,6, t in [6/7, 2/3 + 4/(3k)]"),
    Row("8-7", 0, (1, 3, 4), 3, [(T3, 8)], F(8, 9),
        variants=[("split", "X_4 + X_4 instead of X_8", {"replace": (0, [(T3, 4), (T3, 4)])}, None)],
        text="D = tX_3 + 2/3 X_8, t in [6/7, 8/9]"),
    Row("9-1", "ell", (1, 3, 5), 10, [], F(9, 10), text="D = tX_10, t in [6/7, 9/10]"),
    Row("9-2", 2, (1, 3, 5), 6, lambda k: [(std(k), 5)], lambda k: F(2, 3) + F(5, 6 * k), {"k": [3, 4]},
        text="D = tX_6 + (k-1)/k X_5, k = 3,4, t in [6/7, 2/3 + 5/(6k)]"),
    Row("9-3", 1, (1, 3, 5), 5, [(H, 9)], F(9, 10),
        variants=[
            ("cusp", "the monomial x_1x_2x_3 absent from the equation of X_9", {"drop_monomial": (0, (1, 1, 1))}, None),
            ("split", "X_6 + X_3 instead of X_9", {"replace": (0, [(H, 6), (H, 3)])}, None),
        ],
        text="D = tX_5 + 1/2 X_9, t in [6/7, 9/10]"),
    Row("9-4", 1, (1, 3, 5), 5, [(Q4, 6)], F(9, 10), text="D = tX_5 + 3/4 X_6, t in [6/7, 9/10]"),
    Row("9-5", 0, (1, 3, 5), 3, [(T3, 5), (H, 6)], F(8, 9), text="D = tX_3 + 2/3 X_5 + 1/2 X_6, t in [6/7, 8/9]"),
    Row("9-6", 0, (1, 3, 5), 3, [(H, 5), (Q4, 5)], F(11, 12), text="D = tX_3 + 1/2 X_5 + 3/4 X_5, t in [6/7, 11/12]"),
    fixed("10-1", 3, (1, 2, 7), 7, [(H, 8)], text="D = 6/7 X_7 + 1/2 X_8"),
    Row("10-2", 3, (1, 2, 7), 7, [(H, 7)], F(13, 14), text="D = tX_7 + 1/2 X_7, t in [6/7, 13/14]"),
    Row("10-3", 0, (1, 2, 7), 2, [(H, 7), (T3, 7)], F(11, 12),
        variants=[("tangent", "(B_1 . B_2) at (0:1:0) equal to 3/2", {"vertex_tangent": (1, "B1", "B2", 3)}, None)],
        text="D = tX_2 + 1/2 X_7 + 2/3 X_7, t in [6/7, 11/12]"),
    Row("11-1", 1, (1, 4, 5), 5, lambda k: [(H, 5), (std(k), 4)],
        lambda k: F(19, 21) if k == 3 else F(7, 10) + F(4, 5 * k), {"k": [3, 4, 5]}, open_=lambda k: k == 3,
        text="D = tX_5 + 1/2 X_5 + (k-1)/k X_4, k = 3,4,5, t in [6/7, 19/21) if k = 3, t in [6/7, 7/10 + 4/(5k)] if k >= 4"),
    Row("11-2", 1, (1, 4, 5), 5, [(T3, 8)], F(14, 15), text="D = tX_5 + 2/3 X_8, t in [6/7, 14/15]"),
    Row("11-3", 0, (1, 4, 5), 4, lambda k: [(H, 5), (std(k), 5)], lambda k: F(5, 8) + F(5, 4 * k), {"k": [4, 5]},
        text="D = tX_4 + 1/2 X_5 + (k-1)/k X_5, k = 4,5, t in [6/7, 5/8 + 5/(4k)]"),
    Row("12-1", 1, (2, 3, 5), 8, [(H, 5)], F(15, 16), text="D = tX_8 + 1/2 X_5, t in [6/7, 15/16]"),
    Row("12-2", 0, (2, 3, 5), 5, [(H, 11)], F(9, 10),
        variants=[("split", "X_6 + X_5 instead of X_11", {"replace": (0, [(H, 6), (H, 5)])}, None)],
        text="D = tX_5 + 1/2 X_11, t in [6/7, 9/10]"),
    Row("12-3", 0, (2, 3, 5), 5, [(T3, 8)], F(19, 21), open_=True, text="D = tX_5 + 2/3 X_8, t in [6/7, 19/21)"),
    Row("13-1", 2, (1, 3, 7), 7, [(T3, 7)], F(19, 21), open_=True, endpoint=2,
        text="D = tX_7 + 2/3 X_7, t in [6/7, 19/21); delta = 2 at t = 19/21"),
    fixed("13-2", 2, (1, 3, 7), 7, [(H, 10)],
          variants=[("split", "X_7 + X_3 instead of X_10", {"replace": (0, [(H, 7), (H, 3)])}, None)],
          text="D = 6/7 X_7 + 1/2 X_10"),
    Row("13-3", 2, (1, 3, 7), 7, [(H, 9)], F(13, 14), text="D = tX_7 + 1/2 X_9, t in [6/7, 13/14]"),
    Row("13-4", 0, (1, 3, 7), 3, [(H, 7), (T3, 7)], F(17, 18), text="D = tX_3 + 1/2 X_7 + 2/3 X_7, t in [6/7, 17/18]"),
    Row("14-1", 3, (1, 3, 8), 9, [(H, 8)], F(8, 9), text="D = tX_9 + 1/2 X_8, t in [6/7, 8/9]"),
    Row("14-2", 2, (1, 3, 8), 8, [(H, 9)], F(15, 16), text="D = tX_8 + 1/2 X_9, t in [6/7, 15/16]"),
    Row("14-3", 0, (1, 3, 8), 3, [(H, 8), (T3, 8)], F(8, 9), text="D = tX_3 + 1/2 X_8 + 2/3 X_8, t in [6/7, 8/9]"),
    Row("15-1", 2, (1, 4, 7), 8, [(T3, 7)], F(11, 12), text="D = tX_8 + 2/3 X_7, t in [6/7, 11/12]"),
    fixed("15-2", 1, (1, 4, 7), 7, [(H, 12)],
          variants=[("split", "X_8 + X_4 instead of X_12", {"replace": (0, [(H, 8), (H, 4)])}, None)],
          text="D = 6/7 X_7 + 1/2 X_12"),
    Row("15-3", 1, (1, 4, 7), 7, lambda k: [(std(k), 8)], lambda k: F(4, 7) + F(8, 7 * k), {"k": [3, 4]},
        text="D = tX_7 + (k-1)/k X_8, k = 3,4, t in [6/7, 4/7 + 8/(7k)]"),
    Row("16", 0, (1, 5, 6), 5, [(H, 6), (Q4, 6)], F(9, 10), text="D = tX_5 + 1/2 X_6 + 3/4 X_6, t in [6/7, 9/10]"),
    Row("17-1", 1, (2, 3, 7), 9, [(H, 7)], F(17, 18), text="D = tX_9 + 1/2 X_7, t in [6/7, 17/18]"),
    fixed("17-2", 0, (2, 3, 7), 7, [(H, 12)], text="D = 6/7 X_7 + 1/2 X_12"),
    fixed("17-3", 0, (2, 3, 7), 7, [(T3, 9)], text="D = 6/7 X_7 + 2/3 X_9"),
    Row("17-4", -1, (2, 3, 7), 3, [(T3, 14)], F(8, 9), text="D = tX_3 + 2/3 X_14, t in [6/7, 8/9]"),
    Row("18-1", 1, (3, 4, 5), 13, [], F(12, 13), text="D = tX_13, t in [6/7, 12/13]"),
    Row("18-2", 0, (3, 4, 5), 9, [(H, 8)], F(8, 9), text="D = tX_9 + 1/2 X_8, t in [6/7, 8/9]"),
    Row("18-3", 0, (3, 4, 5), 8, [(H, 9)], F(25, 28), open_=True, text="D = tX_8 + 1/2 X_9, t in [6/7, 25/28)"),
    Row("18-4", 0, (3, 4, 5), 8, [(H, 10)], F(7, 8), text="D = tX_8 + 1/2 X_10, t in [6/7, 7/8]"),
    Row("18-5", -1, (3, 4, 5), 5, [(H, 15)], F(9, 10), text="D = tX_5 + 1/2 X_15, t in [6/7, 9/10]"),
    Row("19", "ell", (1, 5, 7), 15, [], F(13, 15), text="D = tX_15, t in [6/7, 13/15]"),
    Row("20", 3, (1, 3, 10), 10, [(H, 10)], F(9, 10), text="D = tX_10 + 1/2 X_10, t in [6/7, 9/10]"),
    Row("21-1", 2, (1, 4, 9), 9, [(H, 12)], F(8, 9), text="D = tX_9 + 1/2 X_12, t in [6/7, 8/9]"),
    Row("21-2", 0, (1, 4, 9), 4, [(H, 9), (T3, 9)], F(7, 8), text="D = tX_4 + 1/2 X_9 + 2/3 X_9, t in [6/7, 7/8]"),
    Row("22-1", "ell", (1, 5, 8), 16, [], F(7, 8), text="D = tX_16, t in [6/7, 7/8]"),
    Row("22-2", 1, (1, 5, 8), 8, [(T3, 10)], F(11, 12), text="D = tX_8 + 2/3 X_10, t in [6/7, 11/12]"),
    Row("23", 0, (3, 4, 7), 7, [(H, 15)], F(13, 14), open_=True, text="D = tX_7 + 1/2 X_15, t in [6/7, 13/14)"),
    Row("24", 1, (1, 5, 9), 9, [(T3, 10)], F(25, 27), text="D = tX_9 + 2/3 X_10, t in [6/7, 25/27]"),
    Row("25-1", 1, (3, 5, 7), 17, [], F(15, 17), text="D = tX_17, t in [6/7, 15/17]"),
    Row("25-2", -1, (3, 5, 7), 5, [(H, 21)], F(9, 10), text="D = tX_5 + 1/2 X_21, t in [6/7, 9/10]"),
    Row("26", 2, (1, 4, 11), 11, [(H, 12)], F(10, 11), text="D = tX_11 + 1/2 X_12, t in [6/7, 10/11]"),
    Row("27", 1, (2, 3, 11), 11, [(H, 11)], F(21, 22), text="D = tX_11 + 1/2 X_11, t in [6/7, 21/22]"),
    Row("28", 0, (2, 5, 9), 9, [(H, 15)], F(17, 18), text="D = tX_9 + 1/2 X_15, t in [6/7, 17/18]"),
    Row("29", 3, (1, 4, 13), 13, [(H, 13)], F(23, 26), text="D = tX_13 + 1/2 X_13, t in [6/7, 23/26]"),
    Row("30", 1, (1, 6, 11), 11, [(T3, 12)], F(10, 11), text="D = tX_11 + 2/3 X_12, t in [6/7, 10/11]"),
    Row("31", 0, (2, 5, 11), 11, [(H, 15)], F(21, 22), text="D = tX_11 + 1/2 X_15, t in [6/7, 21/22]"),
    Row("32", 0, (3, 4, 11), 11, [(H, 15)], F(21, 22), text="D = tX_11 + 1/2 X_15, t in [6/7, 21/22]"),
    fixed("33", -1, (3, 7, 8), 7, [(H, 24)], text="D = 6/7 X_7 + 1/2 X_24"),
    Row("34", 2, (1, 5, 13), 13, [(H, 15)], F(23, 26), text="D = tX_13 + 1/2 X_15, t in [6/7, 23/26]"),
    Row("35", "ell", (1, 7, 11), 22, [], F(19, 22), text="D = tX_22, t in [6/7, 19/22]"),
    Row("36", 2, (1, 5, 14), 14, [(H, 15)], F(25, 28), text="D = tX_14 + 1/2 X_15, t in [6/7, 25/28]"),
    Row("37", 0, (2, 5, 13), 13, [(H, 15)], F(25, 26), text="D = tX_13 + 1/2 X_15, t in [6/7, 25/26]"),
    Row("38", 0, (3, 4, 13), 13, [(H, 16)], F(12, 13), text="D = tX_13 + 1/2 X_16, t in [6/7, 12/13]"),
    Row("39", -1, (4, 5, 11), 11, [(H, 20)], F(10, 11), text="D = tX_11 + 1/2 X_20, t in [6/7, 10/11]"),
    Row("40", 2, (1, 6, 17), 17, [(H, 18)], F(15, 17), text="D = tX_17 + 1/2 X_18, t in [6/7, 15/17]"),
    Row("41", 0, (3, 5, 17), 17, [(H, 20)], F(15, 17), text="D = tX_17 + 1/2 X_20, t in [6/7, 15/17]"),
    Row("42", 1, (3, 4, 19), 19, [(H, 19)], F(33, 38), text="D = tX_19 + 1/2 X_19, t in [6/7, 33/38]"),
]


# ---------------------------------------------------------------------------
# local analysis of general members in Cox coordinates

def wps_sections(weights, d):
    """Exponent triples of monomials of degree ``d``."""
    a = weights
    out = []
    for e0 in range(d // a[0] + 1):
        for e1 in range((d - e0 * a[0]) // a[1] + 1):
            rest = d - e0 * a[0] - e1 * a[1]
            if rest % a[2] == 0:
                out.append((e0, e1, rest // a[2]))
    return out


def minimal(points):
    pts = set(points)
    return sorted(p for p in pts if not any(o != p and o[0] <= p[0] and o[1] <= p[1] for o in pts))


def local_raw(sections, i, j=None, k=None):
    """Raw local description of a general member near the fixed point where only x_i is nonzero.

    Coordinates are ``x = x_j``, ``y = x_k`` (by default ``j < k``).
    """
    if j is None:
        j, k = [m for m in range(3) if m != i]
    exps = minimal({(e[j], e[k]) for e in sections})
    if (0, 0) in exps:
        return None
    lin_x = (1, 0) in exps
    lin_y = (0, 1) in exps
    if lin_x and lin_y:
        return ("line",)
    if lin_x:
        pure = [b for a, b in exps if a == 0]
        return ("lin", 1, min(pure) if pure else None)
    if lin_y:
        pure = [a for a, b in exps if b == 0]
        return ("lin", 2, min(pure) if pure else None)
    px = [a for a, b in exps if b == 0]
    py = [b for a, b in exps if a == 0]
    if exps == [(0, 2), (1, 1), (2, 0)]:
        # a quadratic cone with all three monomials: q = 1 and it splits into two lines
        return ("fixed", [Axis(1), Axis(2)])
    if (1, 1) in exps:
        shapes = []
        shapes.append(Tangent(1, py[0] - 1) if py and py[0] > 2 else Axis(1))
        shapes.append(Tangent(2, px[0] - 1) if px and px[0] > 2 else Axis(2))
        if (py and py[0] == 2) or (px and px[0] == 2):
            raise ValueError(f"degenerate node {exps}")
        return ("fixed", shapes)
    if px and py and all(F(a, px[0]) + F(b, py[0]) > 1 for a, b in exps if a and b):
        # only the two pure powers lie on the Newton boundary
        return ("fixed", [Newton(px[0], py[0])])
    raise ValueError(f"unhandled singular member with exponents {exps}")


def assemble(raws, n):
    """Turn raw descriptions of several curves at one point into branch shapes."""
    groups = {1: [], 2: []}
    lines = []
    fixed_shapes = []
    for name, raw in raws:
        if raw[0] == "lin":
            groups[raw[1]].append((name, raw[2]))
        elif raw[0] == "line":
            lines.append(name)
        else:
            fixed_shapes.extend((name, s) for s in raw[1])
    if fixed_shapes and (lines or groups[1] or groups[2] or len({nm for nm, _ in fixed_shapes}) > 1):
        # x^p + y^r survives straightening y + x^m (or x + y^m) into an axis when m*r > p (m*p > r)
        ok = not lines and len(fixed_shapes) == 1 and isinstance(fixed_shapes[0][1], Newton)
        if ok:
            nw = fixed_shapes[0][1]
            for ax in (1, 2):
                if len(groups[ax]) > 1:
                    ok = False
                for _name, m in groups[ax]:
                    if m is not None and not (m * nw.p > nw.r if ax == 1 else m * nw.r > nw.p):
                        ok = False
        if not ok:
            raise ValueError("singular member meets other boundary curves at a fixed point")
        return fixed_shapes + [(g[0][0], Axis(ax)) for ax, g in groups.items() if g]
    out = list(fixed_shapes)
    for ax in (1, 2):
        g = sorted(groups[ax], key=lambda item: -(item[1] if item[1] is not None else INF))
        for idx, (name, m) in enumerate(g):
            if idx == 0:
                out.append((name, Axis(ax)))
            else:
                if m is None:
                    raise ValueError("two curves coincide locally")
                out.append((name, Tangent(ax, m)))
    free = [ax for ax in (1, 2) if not groups[ax]]
    if len(lines) > len(free):
        raise ValueError(f"too many transverse curves through one point: {raws}")
    for name, ax in zip(lines, free):
        out.append((name, Axis(ax)))
    return out


def param_orders(shape):
    if isinstance(shape, Axis):
        return (INF, 1) if shape.axis == 1 else (1, INF)
    if isinstance(shape, Tangent):
        return (shape.order, 1) if shape.axis == 1 else (1, shape.order)
    return (shape.r, shape.p)


def local_intersection(s1, s2):
    v = s1.value(*param_orders(s2))
    if v >= INF:
        raise ValueError("coincident branches")
    return v


def shape_json(shape):
    if isinstance(shape, Axis):
        return {"kind": "axis", "axis": shape.axis}
    if isinstance(shape, Tangent):
        return {"kind": "tangent", "axis": shape.axis, "order": shape.order}
    return {"kind": "newton", "p": shape.p, "r": shape.r}


def r(x):
    return fmt_rat(F(x))


# ---------------------------------------------------------------------------
# weighted projective records

def wps_record(rid, family, row, params, curves, text, variant=None, overrides=None, high=None, open_=False):
    overrides = overrides or {}
    weights = row.weights
    vol = weights[0] * weights[1] * weights[2]
    names = ["C"] + [f"B{i + 1}" for i in range(len(curves) - 1)]
    boundary = []
    sections = {}
    for name, (coef, deg) in zip(names, curves):
        boundary.append({"name": name, "coefficient": T_TEXT if name == "C" else r(coef), "curve": deg})
        secs = wps_sections(weights, deg)
        drop = overrides.get("drop_monomial")
        if drop and name == names[drop[0] + 1]:
            secs = [e for e in secs if e != drop[1]]
        sections[name] = secs
    germs = []
    local_total = {}
    for i in range(3):
        n = weights[i]
        if n == 1:
            continue
        raws = []
        for name in names:
            raw = local_raw(sections[name], i)
            if raw is not None:
                raws.append((name, raw))
        if not raws:
            continue
        shapes = assemble(raws, n)
        vt = overrides.get("vertex_tangent")
        if vt and vt[0] == i:
            _, a, b, order = vt
            axis_a = dict(shapes)[a].axis
            shapes = [(nm, Tangent(axis_a, order) if nm == b else sh) for nm, sh in shapes]
        j, k = [m for m in range(3) if m != i]
        quot = CyclicQuot(n, (weights[j] * pow(weights[k], -1, n)) % n)
        germs.append({"label": f"P{i + 1}", "quot": [quot.n, quot.q],
                      "branches": [{"curve": nm, **shape_json(sh)} for nm, sh in shapes]})
        for (n1, s1), (n2, s2) in itertools.combinations(shapes, 2):
            key = tuple(sorted((n1, n2)))
            local_total[key] = local_total.get(key, F(0)) + F(local_intersection(s1, s2), n)
    tangent = overrides.get("smooth_tangent")
    for a, b in itertools.combinations(names, 2):
        da, db = dict((nm, c[1]) for nm, c in zip(names, curves))[a], dict((nm, c[1]) for nm, c in zip(names, curves))[b]
        total = F(da * db, vol)
        rem = total - local_total.get(tuple(sorted((a, b))), 0)
        if rem < 0 or rem.denominator != 1:
            raise ValueError(f"{rid}: non-integral smooth intersection {a}.{b} = {rem}")
        rem = int(rem)
        idx = 0
        if tangent and {a, b} == {tangent[0], tangent[1]}:
            order = tangent[2]
            if rem < order:
                raise ValueError(f"{rid}: tangency exceeds intersection number")
            rem -= order
            idx += 1
            germs.append({"label": f"{a}*{b}#{idx}", "quot": [1, 0], "branches": [
                {"curve": tangent[0], "kind": "axis", "axis": 1},
                {"curve": tangent[1], "kind": "tangent", "axis": 1, "order": order}]})
        for _ in range(rem):
            idx += 1
            germs.append({"label": f"{a}*{b}#{idx}", "quot": [1, 0], "branches": [
                {"curve": a, "kind": "axis", "axis": 1}, {"curve": b, "kind": "axis", "axis": 2}]})
    rec = {
        "id": rid,
        "family": family,
        "params": params or {},
        "variant": variant,
        "marker": row.marker,
        "surface": {"kind": "wps", "weights": list(weights)},
        "boundary": boundary,
        "germs": germs,
        "t_interval": {"low": "6/7", "high": r(high), "high_open": bool(open_)},
        "provenance": text,
    }
    if row.endpoint is not None:
        rec["endpoint_delta"] = row.endpoint
    return rec


def expand_rows():
    out = []
    for row in ROWS:
        family = int(row.sid.split("-")[0])
        if row.params:
            (pname, values), = row.params.items()
            combos = [(v if isinstance(v, tuple) else (v,)) for v in values]
            keys = pname.split(",")
        else:
            combos, keys = [()], []
        for combo in combos:
            params = dict(zip(keys, combo))
            tag = "[" + ",".join(f"{k}={v}" for k, v in params.items()) + "]" if params else ""
            curves_b = row.bs(*combo) if callable(row.bs) else row.bs
            high = row.high(*combo) if callable(row.high) else row.high
            open_ = row.open(*combo) if callable(row.open) else row.open
            curves = [(None, row.c)] + list(curves_b)
            rid = row.sid + tag
            out.append(wps_record(rid, family, row, params, curves, row.text, high=high, open_=open_))
            for vname, vtext, change, only in row.variants:
                if only and any(params.get(k) != v for k, v in only.items()):
                    continue
                vcurves = list(curves)
                ov = {}
                if "replace" in change:
                    idx, repl = change["replace"]
                    vcurves = vcurves[: idx + 1] + list(repl) + vcurves[idx + 2:]
                else:
                    ov = change
                out.append(wps_record(f"{rid}/{vname}", family, row, params, vcurves, row.text,
                                      variant=vtext, overrides=ov, high=high, open_=open_))
    return out


# ---------------------------------------------------------------------------
# toric surfaces with three rays

def cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def cone_type(u, v):
    """``(n, q)`` of the cone spanned by ``u, v`` (counter-clockwise) with ``x`` dual to ``u``."""
    n = cross(u, v)
    if n == 1:
        return (1, 0)
    for a in range(n):
        for b in range(n):
            w = (a, b)
            lam, mu = F(cross(w, v), n), F(cross(u, w), n)
            if (mu * n) % n == 1 and (mu * n).denominator == 1:
                return (n, int((lam * n) % n))
    raise AssertionError("no lattice point")


def same_type(t1, t2):
    n1, q1 = t1
    n2, q2 = t2
    if n1 != n2:
        return False
    if n1 == 1:
        return True
    return q1 == q2 or q1 * q2 % n1 == 1


class Fan:
    """Complete fan with rays ``u[0], u[1], u[2]`` in counter-clockwise order."""

    def __init__(self, rays):
        self.u = [tuple(r) for r in rays]
        self.cones = []  # (i, j, k): fixed point where x_i != 0, cone (u_j, u_k) ccw
        for i in range(3):
            j, k = (i + 1) % 3, (i + 2) % 3
            self.cones.append((i, j, k))

    def quot(self, i):
        _, j, k = self.cones[i]
        return cone_type(self.u[j], self.u[k])

    def dot_basis(self):
        """Intersection numbers of the torus invariant divisors."""
        m = [[F(0)] * 3 for _ in range(3)]
        for i, j, k in self.cones:
            m[j][k] = m[k][j] = F(1, cross(self.u[j], self.u[k]))
        for a in range(3):
            for mvec in ((1, 0), (0, 1)):
                pa = mvec[0] * self.u[a][0] + mvec[1] * self.u[a][1]
                if pa:
                    m[a][a] = -sum(m[a][b] * (mvec[0] * self.u[b][0] + mvec[1] * self.u[b][1]) for b in range(3) if b != a) / pa
                    break
        return m

    def dot(self, d, e):
        m = self.dot_basis()
        return sum(d[a] * e[b] * m[a][b] for a in range(3) for b in range(3))

    def sections(self, d, box=40):
        out = []
        for m0 in range(-box, box + 1):
            for m1 in range(-box, box + 1):
                e = tuple(m0 * u[0] + m1 * u[1] + d[i] for i, u in enumerate(self.u))
                if min(e) >= 0:
                    out.append(e)
        return out


def primitive(v):
    return gcd(abs(v[0]), abs(v[1])) == 1


def find_fans(types, box=40):
    """Fans whose three fixed points realise ``types`` (in some order), up to SL_2(Z)."""
    found = []
    n1, _ = types[0]
    for a in range(n1):
        if gcd(a, n1) != 1:
            continue
        u1, u2 = (1, 0), (a, n1)
        if not primitive(u2):
            continue
        for p in range(-box, box + 1):
            for r_ in range(-box, 0):
                u3 = (p, r_)
                if not primitive(u3) or cross(u2, u3) <= 0 or cross(u3, u1) <= 0:
                    continue
                fan = Fan([u1, u2, u3])
                got = [fan.quot(i) for i in range(3)]
                for perm in itertools.permutations(range(3)):
                    if all(same_type(got[perm[t]], types[t]) for t in range(3)):
                        found.append((fan, perm))
    return found


def toric_invariants(fan):
    """SL_2-invariant fingerprint: sorted cone types and self-intersections."""
    m = fan.dot_basis()
    return tuple(sorted((fan.quot(i), m[i][i]) for i in range(3)))


def _matvec(m, x):
    return [sum(a * b for a, b in zip(row, x)) for row in m]


def toric_record(rid, family, marker, fan, curves, coefs, high, open_, text, variant=None, params=None):
    """Record for a toric surface.

    ``curves`` maps a boundary name to ``("ray", rho)`` or ``("class", cox_vector)``.
    """
    from logdelta.cyclic import resolution_valuations

    names = list(curves)
    secs, cls = {}, {}
    for name, (kind, val) in curves.items():
        if kind == "ray":
            e = [0, 0, 0]
            e[val] = 1
            secs[name] = [tuple(e)]
            cls[name] = e
        else:
            secs[name] = fan.sections(val)
            cls[name] = list(val)

    # germs on S
    germs = []
    local_total = {}
    for i, j, k in fan.cones:
        n, q = fan.quot(i)
        raws = []
        for name in names:
            raw = local_raw(secs[name], i, j, k)
            if raw is not None:
                raws.append((name, raw))
        if not raws:
            continue
        shapes = assemble(raws, n)
        germs.append({"label": f"P{i + 1}", "quot": [n, q],
                      "branches": [{"curve": nm, **shape_json(sh)} for nm, sh in shapes]})
        for (n1, s1), (n2, s2) in itertools.combinations(shapes, 2):
            key = tuple(sorted((n1, n2)))
            local_total[key] = local_total.get(key, F(0)) + F(local_intersection(s1, s2), n)
    for a, b in itertools.combinations(names, 2):
        rem = fan.dot(cls[a], cls[b]) - local_total.get(tuple(sorted((a, b))), 0)
        if rem < 0 or rem.denominator != 1:
            raise ValueError(f"{rid}: non-integral smooth intersection {a}.{b} = {rem}")
        for idx in range(int(rem)):
            germs.append({"label": f"{a}*{b}#{idx + 1}", "quot": [1, 0], "branches": [
                {"curve": a, "kind": "axis", "axis": 1}, {"curve": b, "kind": "axis", "axis": 2}]})

    # minimal resolution
    vertices, edges, vals = [], [], []
    for i, j, k in fan.cones:
        n, q = fan.quot(i)
        if n == 1:
            continue
        chain = hj_expand(CyclicQuot(n, q))
        ids = [f"E{i + 1}.{t + 1}" for t in range(len(chain))]
        for vid, c, w in zip(ids, chain, resolution_valuations(CyclicQuot(n, q))):
            vertices.append((vid, c))
            vals.append((vid, j, k, w))
        edges += list(zip(ids, ids[1:]))
    idx = {v: t for t, (v, _) in enumerate(vertices)}
    mat = [[0] * len(vertices) for _ in vertices]
    for t, (_v, c) in enumerate(vertices):
        mat[t][t] = c
    for a, b in edges:
        mat[idx[a]][idx[b]] = mat[idx[b]][idx[a]] = 1
    corr = {}
    for name in names:
        corr[name] = [min(w.x * e[j] + w.y * e[k] for e in secs[name]) for _vid, j, k, w in vals]
    (z,) = solve(mat, [[2 + c for _v, c in vertices]])
    kvec = [-1, -1, -1]
    handles = []
    for hi, name in enumerate(names):
        x = corr[name]
        mx = _matvec(mat, x)
        inc = []
        for (vid, _c), val in zip(vertices, mx):
            m = -val
            if m < 0 or m.denominator != 1:
                raise ValueError(f"{rid}: bad incidence of {name} with {vid}: {m}")
            if m:
                inc.append([vid, int(m)])
        for other in names[hi + 1:]:
            y = corr[other]
            m = fan.dot(cls[name], cls[other]) + sum(a * b for a, b in zip(x, _matvec(mat, y)))
            if m < 0 or m.denominator != 1:
                raise ValueError(f"{rid}: bad strict intersection {name}.{other}: {m}")
            if m:
                inc.append([other, int(m)])
        self_int = fan.dot(cls[name], cls[name]) + sum(a * b for a, b in zip(x, mx))
        kh = fan.dot(kvec, cls[name]) + sum(a * b for a, b in zip(z, mx))
        two_g = self_int + kh + 2
        if self_int.denominator != 1 or two_g % 2 or two_g < 0:
            raise ValueError(f"{rid}: {name} has strict self-intersection {self_int}, 2g = {two_g}")
        handles.append({"name": name, "selfint": int(self_int), "genus": int(two_g // 2), "incidences": inc})
    boundary = [{"name": nm, "coefficient": T_TEXT if nm == "C" else r(coefs[nm]), "curve": nm} for nm in names]
    return {
        "id": rid,
        "family": family,
        "params": params or {},
        "variant": variant,
        "marker": marker,
        "surface": {"kind": "graph", "vertices": [[v, c] for v, c in vertices], "edges": [[a, b] for a, b in edges],
                    "handles": handles},
        "boundary": boundary,
        "germs": germs,
        "t_interval": {"low": "6/7", "high": r(high), "high_open": bool(open_)},
        "provenance": text,
    }


A1, A2, A3, A5 = (2, 1), (3, 2), (4, 3), (6, 5)

TORIC = [
    # id, marker, types, layout, coefficient of B1, high, open, row text
    ("43", 1, [A1, (4, 1), (14, 9)], "C~B1", H, F(13, 14), True,
     "S = S(A_1 + 1/4(1,1) + 1/14(9,1)) toric; D = tC + 1/2 B_1, C ~ B_1 the orbit closure through the first and second points, t in [6/7, 13/14)"),
    ("44", 1, [(3, 1), (3, 1), (15, 11)], "C~B1", H, F(9, 10), False,
     "S = S(1/3(1,1) + 1/3(1,1) + 1/15(11,1)) toric; D = tC + 1/2 B_1, C ~ B_1 the orbit closure through the first and second points, t in [6/7, 9/10]"),
    ("45", 1, [(3, 1), A2, (9, 4)], "C~B1+T", H, F(7, 8), False,
     "S = S(1/3(1,1) + A_2 + 1/9(4,1)) toric; D = tC + 1/2 B_1, B_1 the orbit closure through the first and second points, C ~ B_1 + T with T through the second and third, t in [6/7, 7/8]"),
    ("46", 1, [(4, 1), A1, A5], "C~B1+T", H, F(9, 10), False,
     "S = S(1/4(1,1) + A_1 + A_5) toric; D = tC + 1/2 B_1, C and B_1 as in 45, t in [6/7, 9/10]"),
    ("47-1", 1, [A1, A1, A3], "C~B1+T", T3, F(8, 9), False,
     "S = S(A_1 + A_1 + A_3) toric; D = tC + 2/3 B_1, C and B_1 as in 45, t in [6/7, 8/9]"),
    ("47-2", 0, [A1, A1, A3], "B1~3T", Q4, F(7, 8), False,
     "S = S(A_1 + A_1 + A_3) toric; D = tC + 3/4 B_1, C through the first and second points, B_1 ~ 3T with T through the first and third, t in [6/7, 7/8]"),
    ("48", 1, [A1, A1, (8, 5)], "B1~C+T", H, F(7, 8), False,
     "S = S(A_1 + A_1 + 1/8(5,1)) toric; D = tC + 1/2 B_1, C through the first and second points, B_1 ~ C + T with T through the second and third, t in [6/7, 7/8]"),
    ("49", 0, [A1, A5, (16, 11)], "B1~3T", H, F(15, 16), False,
     "S = S(A_1 + A_5 + 1/16(11,1)) toric; D = tC + 1/2 B_1, C through the first and second points, B_1 ~ 3T with T through the first and third, t in [6/7, 15/16]"),
    ("50", 0, [(4, 1), A3, (16, 13)], "B1~5T", H, F(7, 8), False,
     "S = S(1/4(1,1) + A_3 + 1/16(13,1)) toric; D = tC + 1/2 B_1, C through the first and second points, B_1 ~ 5T with T through the first and third, t in [6/7, 7/8]"),
]


def toric_layouts(layout, perm):
    """Candidate curve assignments; the orbit closure through listed points a, b is ray ``3 - pa - pb``."""
    def ray(a, b):
        return 3 - perm[a] - perm[b]

    def e(rho, k=1):
        v = [0, 0, 0]
        v[rho] = k
        return v

    r12, r23, r13 = ray(0, 1), ray(1, 2), ray(0, 2)
    if layout == "C~B1":
        return [{"C": ("ray", r12), "B1": ("class", e(r12))}, {"C": ("class", e(r12)), "B1": ("ray", r12)}]
    if layout == "C~B1+T":
        cl = [a + b for a, b in zip(e(r12), e(r23))]
        return [{"C": ("class", cl), "B1": ("ray", r12)}]
    if layout == "B1~C+T":
        cl = [a + b for a, b in zip(e(r12), e(r23))]
        return [{"C": ("ray", r12), "B1": ("class", cl)}]
    k = 3 if layout == "B1~3T" else 5
    return [{"C": ("ray", r12), "B1": ("class", e(r13, k))}]


def toric_records():
    from logdelta.catalog import load_records, verify_case

    out = []
    for sid, marker, types, layout, coef, high, open_, text in TORIC:
        family = int(sid.split("-")[0])
        good, seen = [], set()
        for fan, perm in find_fans(types):
            for curves in toric_layouts(layout, perm):
                try:
                    rec = toric_record(sid, family, marker, fan, curves, {"B1": coef}, high, open_, text)
                    (loaded,) = load_records({"schema_version": SCHEMA_VERSION, "records": [rec]})
                except ValueError:
                    continue
                key = json.dumps(rec["surface"]["handles"], sort_keys=True) + json.dumps(sorted(v for _, v in rec["surface"]["vertices"]))
                if verify_case(loaded).passed:
                    fp = (toric_invariants(fan), key)
                    if fp not in seen:
                        seen.add(fp)
                        good.append((fan, rec))
        if not good:
            raise ValueError(f"{sid}: no fan reproduces the row")
        out.append(good[0][1])
        print(f"{sid}: {len(good)} passing fan layouts, rays {good[0][0].u}", file=sys.stderr)
    return out


def graph_record(rid, family, marker, chains, edges, curves, coefs, high, text, params=None, variant=None):
    """Record given directly by its minimal resolution graph.

    ``chains`` maps a vertex prefix to its self-intersections (consecutive
    vertices are joined); ``curves`` lists ``(name, selfint, genus, meets)``.
    """
    vertices, all_edges = [], [list(e) for e in edges]
    for prefix, cs in chains.items():
        ids = [f"{prefix}{i + 1}" for i in range(len(cs))]
        vertices += [[v, c] for v, c in zip(ids, cs)]
        all_edges += [[a, b] for a, b in zip(ids, ids[1:])]
    handles = [{"name": nm, "selfint": si, "genus": g, "incidences": [[t, 1] for t in meets]}
               for nm, si, g, meets in curves]
    boundary = [{"name": nm, "coefficient": T_TEXT if nm == "C" else r(c), "curve": nm} for nm, c in coefs.items()]
    return {
        "id": rid,
        "family": family,
        "params": params or {},
        "variant": variant,
        "marker": marker,
        "surface": {"kind": "graph", "vertices": vertices, "edges": all_edges, "handles": handles},
        "boundary": boundary,
        "germs": [],
        "t_interval": {"low": "6/7", "high": r(high), "high_open": False},
        "provenance": text,
    }


def graph_records():
    out = []
    t = F(1)
    for k in (2, 3):
        b = F(k - 1, k)
        out.append(graph_record(
            f"51-1[k={k}]", 51, "ell", {"a": [-2, -2, -2, -2]}, [],
            [("C", 5, 1, ["B1"]), ("B1", -1, 0, ["a3"])], {"C": t, "B1": b}, 1 - F(k - 1, 5 * k),
            "A_4 chain with a (-1)-curve B_1 on its third node meeting C (C~^2 = 5); D = tC + (k-1)/k B_1, t in [6/7, 1-(k-1)/(5k)]",
            params={"k": k}))
    for k in (1, 2):
        coefs = {"C": t} if k == 1 else {"C": t, "B1": F(k - 1, k)}
        out.append(graph_record(
            f"51-2[k={k}]", 51, "ell", {"a": [-2, -2, -3, -2], "w": [-2]}, [],
            [("C", 5, 1, ["w1"]), ("B1", -1, 0, ["a3", "w1"])], coefs, F(10, 11) - F(k - 1, 11 * k),
            "chain [-2,-2,-3,-2] with a (-1)-curve B_1 on the (-3)-node and on a (-2)-curve meeting C (C~^2 = 5); "
            "D = tC + (k-1)/k B_1, t in [6/7, 10/11-(k-1)/(11k)]",
            params={"k": k}))
    for case, c, tail, high in ((3, -4, 2, F(15, 17)), (4, -5, 3, F(20, 23)), (5, -6, 4, F(25, 29))):
        out.append(graph_record(
            f"51-{case}", 51, "ell", {"a": [-2, -2, c, -2], "z": [-2] * tail}, [],
            [("C", 5, 1, [f"z{tail}"]), ("G", -1, 0, ["a3", "z1"])], {"C": t}, high,
            f"chain [-2,-2,{c},-2]; a (-1)-curve joins the {c}-node to a chain of {tail} (-2)-curves ending at C (C~^2 = 5); "
            f"D = tC, t in [6/7, {high}]"))
    out.append(graph_record(
        "51-6", 51, "ell", {"a": [-2, -2, -3, -2], "w": [-2], "u": [-3]}, [["a3", "w1"]],
        [("C", 5, 1, ["u1"]), ("G", -1, 0, ["w1", "u1"])], {"C": t}, F(7, 8),
        "chain [-2,-2,-3,-2] with a (-2)-curve on the (-3)-node, then a (-1)-curve, a (-3)-curve and C (C~^2 = 5); D = tC, t in [6/7, 7/8]"))
    out.append(graph_record(
        "52-1", 52, "ell", {"a": [-2, -2, -2], "d": [-2], "e": [-2]}, [],
        [("C", 4, 1, ["B1", "F"]), ("B1", -1, 0, ["a1", "d1"]), ("F", -1, 0, ["a3", "e1"])], {"C": t, "B1": H}, F(7, 8),
        "toric; A_3 chain, (-1)-curves B_1 and F on its ends each meeting C (C~^2 = 4) and a further (-2)-curve; "
        "D = tC + 1/2 B_1, t in [6/7, 7/8]"))
    out.append(graph_record(
        "52-2", 52, "ell", {"a": [-3, -2, -2], "d": [-2, -2], "e": [-2]}, [],
        [("C", 4, 1, ["d1", "F"]), ("G", -1, 0, ["a1", "d1"]), ("F", -1, 0, ["a3", "e1"])], {"C": F(6, 7)}, F(6, 7),
        "S = P(2,3,7); D = 6/7 C"))
    out.append(graph_record(
        "53-1", 53, "ell", {"a": [-2, -2, -2, -2], "w": [-2]}, [["a3", "w1"]],
        [("C", 4, 1, ["B1"]), ("B1", -1, 0, ["w1"])], {"C": t, "B1": H}, F(7, 8),
        "D_5 configuration; a (-1)-curve B_1 on the short arm meets C (C~^2 = 4); D = tC + 1/2 B_1, t in [6/7, 7/8]"))
    out.append(graph_record(
        "53-2", 53, "ell", {"a": [-2, -2, -2, -2], "u": [-3], "z": [-2]}, [["a3", "u1"]],
        [("C", 4, 1, ["z1"]), ("G", -1, 0, ["u1", "z1"])], {"C": t}, F(8, 9),
        "A_4 chain with a (-3)-curve on its third node, then a (-1)-curve, a (-2)-curve and C (C~^2 = 4); D = tC, t in [6/7, 8/9]"))
    out.append(graph_record(
        "54", 54, "ell", {"p": [-2, -3, -2, -2, -2], "r": [-2], "s": [-2]}, [],
        [("C", 3, 1, ["r1", "G2"]), ("G1", -1, 0, ["p2", "r1"]), ("G2", -1, 0, ["p5", "s1"])], {"C": F(6, 7)}, F(6, 7),
        "chain [-2,-3,-2,-2,-2]; (-1)-curves G_1 (on the (-3)-node) and G_2 (on the last node) lead to C (C~^2 = 3); D = 6/7 C"))
    out.append(graph_record(
        "55", 55, 0, {"a": [-2], "b": [-2, -2, -2, -2], "c": [-3, -2, -2]}, [],
        [("C", 0, 0, ["a1", "b1", "c1"]), ("G1", -1, 0, ["b1", "c3"]), ("G2", -1, 0, ["c1", "b4"])], {"C": t}, F(10, 11),
        "C (C~^2 = 0) meets a (-2)-curve, an A_4 chain and a chain [-3,-2,-2]; two (-1)-curves join their ends; D = tC, t in [6/7, 10/11]"))
    out.append(graph_record(
        "56", 56, 0, {"a": [-2, -2, -2], "d": [-2, -3, -2], "e": [-2, -2]}, [],
        [("C", 0, 0, ["a1", "d1", "e1"]), ("G1", -1, 0, ["e2", "d2"]), ("G2", -1, 0, ["d1", "a3"]),
         ("G3", -1, 0, ["a1", "d3"])], {"C": F(6, 7)}, F(6, 7),
        "C (C~^2 = 0) meets an A_3 chain, a chain [-2,-3,-2] and an A_2 chain; three (-1)-curves join them; D = 6/7 C"))
    return out


# The printed open endpoint 19/21 is not a degeneration of this pair: delta
# stays 1 up to the P2 germ becoming deep at 13/14.  Kept verbatim so the
# verifier reports it.
KNOWN_FAILURES = {"11-1[k=3]"}


def check(records):
    from logdelta.catalog import load_records, verify_case

    loaded = load_records({"schema_version": SCHEMA_VERSION, "records": records})
    bad = []
    for rec in loaded:
        rep = verify_case(rec)
        if not rep.passed:
            bad.append(rec.id)
            for c in rep.checks:
                if not c.passed:
                    print(f"{rec.id}: {c.name}: expected {c.expected}; got {c.actual}")
    return bad


def main(argv):
    records = expand_rows() + toric_records() + graph_records()
    bad = check(records)
    print(f"{len(records)} records, {len(bad)} failing")
    if set(bad) - KNOWN_FAILURES and "--force" not in argv:
        return 1
    out = ROOT / "src" / "logdelta" / "data" / "catalog.json"
    out.write_text(json.dumps({"schema_version": SCHEMA_VERSION, "records": records}, indent=1) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
