"""Reference values copied from worked examples, with the graphs they belong to.

The source figures print no edge lists.  The edge sets below were rebuilt
from the printed eigenvalue coefficients and are admitted only because they
reproduce every printed coefficient (see ``test_printed_examples.py``).
"""

import re
from fractions import Fraction

from zeonlap import Graph


def _graph(m, edges):
    return Graph(m, frozenset(edges))


FIVE_VERTEX = _graph(5, [(1, 2), (1, 5), (3, 5), (4, 5)])

SEVEN_VERTEX = _graph(
    7,
    [(i, 7) for i in range(1, 7)] + [(1, 3), (1, 4), (1, 6), (2, 6), (3, 5), (4, 5), (5, 6)],
)

# vertices 3 and 7 are pendants hanging off 2 and 4; their placement is
# invisible to both printed eigenvalues, which only see cycles through 1 and 9
TEN_VERTEX = _graph(
    10,
    [(1, 2), (1, 4), (1, 6), (1, 8), (1, 9), (1, 10), (6, 8), (6, 9), (8, 9), (9, 10), (2, 5), (5, 9), (2, 3), (4, 7)],
)

_TERM = re.compile(r"([+-]?)\s*(?:\\frac\{(\d+)\}\{(\d+)\})?\s*\\zeta\s*_\{\\\{([\d,]+)\\\}\}")


def parse_printed(text: str, scalar) -> dict:
    """``{frozenset: Fraction}`` from a printed sum of ``\\frac{a}{b} \\zeta _{\\{...\\}}`` terms."""
    out = {frozenset(): Fraction(scalar)}
    for sign, num, den, idx in _TERM.findall(text):
        c = Fraction(int(num), int(den)) if num else Fraction(1)
        if sign == "-":
            c = -c
        key = frozenset(int(x) for x in idx.split(","))
        assert key not in out
        out[key] = c
    return out


SEVEN_LAMBDA = parse_printed(
    r"""
+\frac{1}{2} \zeta _{\{1,7\}}+\frac{1}{4} \zeta _{\{2,7\}}+\frac{1}{3} \zeta _{\{3,7\}}+\frac{1}{3} \zeta _{\{4,7\}}+\frac{1}{2} \zeta _{\{5,7\}}+\frac{1}{2} \zeta _{\{6,7\}}
-\frac{1}{3} \zeta _{\{1,3,7\}}-\frac{1}{3} \zeta _{\{1,4,7\}}-\frac{1}{2} \zeta _{\{1,6,7\}}-\frac{1}{4} \zeta _{\{2,6,7\}}-\frac{1}{3} \zeta _{\{3,5,7\}}-\frac{1}{3} \zeta _{\{4,5,7\}}
-\frac{1}{2} \zeta _{\{5,6,7\}}+\frac{1}{8} \zeta _{\{1,2,6,7\}}+\frac{1}{9} \zeta _{\{1,3,4,7\}}+\frac{1}{6} \zeta _{\{1,3,5,7\}}+\frac{1}{6} \zeta _{\{1,3,6,7\}}+\frac{1}{6} \zeta _{\{1,4,5,7\}}
+\frac{1}{6} \zeta _{\{1,4,6,7\}}+\frac{1}{4} \zeta _{\{1,5,6,7\}}+\frac{1}{8} \zeta _{\{2,5,6,7\}}+\frac{1}{9} \zeta _{\{3,4,5,7\}}+\frac{1}{6} \zeta _{\{3,5,6,7\}}+\frac{1}{6} \zeta _{\{4,5,6,7\}}
-\frac{1}{24} \zeta _{\{1,2,3,6,7\}}-\frac{1}{24} \zeta _{\{1,2,4,6,7\}}-\frac{2}{9} \zeta _{\{1,3,4,5,7\}}-\frac{1}{3} \zeta _{\{1,3,5,6,7\}}-\frac{1}{3} \zeta _{\{1,4,5,6,7\}}
-\frac{1}{24} \zeta _{\{2,3,5,6,7\}}-\frac{1}{24} \zeta _{\{2,4,5,6,7\}}+\frac{1}{24} \zeta _{\{1,2,3,5,6,7\}}+\frac{1}{24} \zeta _{\{1,2,4,5,6,7\}}
+\frac{1}{6} \zeta _{\{1,3,4,5,6,7\}}-\frac{1}{36} \zeta _{\{1,2,3,4,5,6,7\}}
""",
    6,
)

SEVEN_EXP77 = parse_printed(
    r"""
+\frac{1}{2} \zeta _{\{1,7\}}+\frac{1}{2} \zeta _{\{2,7\}}+\frac{1}{2} \zeta _{\{3,7\}}+\frac{1}{2} \zeta _{\{4,7\}}+\frac{1}{2} \zeta _{\{5,7\}}
+\frac{1}{2} \zeta _{\{6,7\}}+\frac{1}{3} \zeta _{\{1,3,7\}}+\frac{1}{3} \zeta _{\{1,4,7\}}+\frac{1}{3} \zeta _{\{1,6,7\}}+\frac{1}{3} \zeta _{\{2,6,7\}}
+\frac{1}{3} \zeta _{\{3,5,7\}}+\frac{1}{3} \zeta _{\{4,5,7\}}+\frac{1}{3} \zeta _{\{5,6,7\}}+\frac{1}{12} \zeta _{\{1,2,6,7\}}+\frac{1}{12} \zeta _{\{1,3,4,7\}}
+\frac{1}{12} \zeta _{\{1,3,5,7\}}+\frac{1}{12} \zeta _{\{1,3,6,7\}}+\frac{1}{12} \zeta _{\{1,4,5,7\}}+\frac{1}{12} \zeta _{\{1,4,6,7\}}
+\frac{1}{12} \zeta _{\{1,5,6,7\}}+\frac{1}{12} \zeta _{\{2,5,6,7\}}+\frac{1}{12} \zeta _{\{3,4,5,7\}}+\frac{1}{12} \zeta _{\{3,5,6,7\}}
+\frac{1}{12} \zeta _{\{4,5,6,7\}}+\frac{1}{60} \zeta _{\{1,2,3,6,7\}}+\frac{1}{60} \zeta _{\{1,2,4,6,7\}}+\frac{1}{15} \zeta _{\{1,3,4,5,7\}}
+\frac{1}{15} \zeta _{\{1,3,5,6,7\}}+\frac{1}{15} \zeta _{\{1,4,5,6,7\}}+\frac{1}{60} \zeta _{\{2,3,5,6,7\}}+\frac{1}{60} \zeta _{\{2,4,5,6,7\}}
+\frac{1}{180} \zeta _{\{1,2,3,5,6,7\}}+\frac{1}{180} \zeta _{\{1,2,4,5,6,7\}}+\frac{1}{60} \zeta _{\{1,3,4,5,6,7\}}
+\frac{1}{630} \zeta _{\{1,2,3,4,5,6,7\}}
""",
    1,
)

TEN_LAMBDA_V1 = parse_printed(
    r"""
+\frac{1}{3} \zeta _{\{1,2\}}+\frac{1}{4} \zeta _{\{1,4\}}+\frac{1}{3} \zeta _{\{1,6\}}+\frac{1}{3} \zeta _{\{1,8\}}+\zeta _{\{1,9\}}+\frac{1}{4} \zeta _{\{1,10\}}
-\frac{2}{9} \zeta _{\{1,6,8\}}
-\frac{2}{3} \zeta _{\{1,6,9\}}-\frac{2}{3} \zeta _{\{1,8,9\}}-\frac{1}{2} \zeta _{\{1,9,10\}}+\frac{1}{6} \zeta _{\{1,2,5,9\}}+\frac{2}{3} \zeta _{\{1,6,8,9\}}+\frac{1}{6} \zeta _{\{1,6,9,10\}}
+\frac{1}{6} \zeta _{\{1,8,9,10\}}-\frac{1}{18} \zeta _{\{1,2,5,6,9\}}-\frac{1}{18} \zeta _{\{1,2,5,8,9\}}-\frac{1}{24} \zeta _{\{1,2,5,9,10\}}
-\frac{1}{9} \zeta _{\{1,6,8,9,10\}}+\frac{1}{27} \zeta _{\{1,2,5,6,8,9\}}
""",
    6,
)

TEN_LAMBDA_V9 = parse_printed(
    r"""
-\zeta _{\{1,9\}}+\frac{1}{3} \zeta _{\{5,9\}}+\frac{1}{2} \zeta _{\{6,9\}}+\frac{1}{2} \zeta _{\{8,9\}}+\frac{1}{3} \zeta _{\{9,10\}}+\zeta _{\{1,6,9\}}+\zeta _{\{1,8,9\}}
+\frac{2}{3} \zeta _{\{1,9,10\}}-\frac{1}{2} \zeta _{\{6,8,9\}}-\frac{1}{3} \zeta _{\{1,2,5,9\}}-\frac{3}{2} \zeta _{\{1,6,8,9\}}-\frac{1}{3} \zeta _{\{1,6,9,10\}}
-\frac{1}{3} \zeta _{\{1,8,9,10\}}+\frac{1}{6} \zeta _{\{1,2,5,6,9\}}+\frac{1}{6} \zeta _{\{1,2,5,8,9\}}+\frac{1}{9} \zeta _{\{1,2,5,9,10\}}+\frac{1}{3} \zeta _{\{1,6,8,9,10\}}
-\frac{1}{6} \zeta _{\{1,2,5,6,8,9\}}
""",
    5,
)
