"""Hand-checked fixtures shared across the suite.

The four-vertex m=2 mutation cycle and the two-vertex m=3 colour cycle were
verified arrow by arrow by hand; the 12-gon grid below lists the diagonal
quiver row by row with its staggered arrow pattern.
"""

from mcluster import ColouredQuiver

CYCLE4_VERTICES = ("X", "I4", "I1", "Y1")

# base labelled with the 12-gon diagonals used by the polygon tests
CYCLE4_DIAGONAL_LABELS = ("3,8", "5,8", "3,12", "9,12")

_CYCLE4_ARROWS = (
    # step 0
    (
        ("X", "I4", 0), ("I4", "X", 2), ("X", "I1", 0), ("I1", "X", 2),
        ("X", "Y1", 1), ("Y1", "X", 1), ("I1", "Y1", 0), ("Y1", "I1", 2),
    ),
    # after mutating at X
    (
        ("X", "I4", 2), ("I4", "X", 0), ("X", "I1", 2), ("I1", "X", 0),
        ("X", "Y1", 0), ("Y1", "X", 2), ("I4", "Y1", 1), ("Y1", "I4", 1),
    ),
    # after mutating at X twice
    (
        ("X", "I4", 1), ("I4", "X", 1), ("X", "I1", 1), ("I1", "X", 1),
        ("X", "Y1", 2), ("Y1", "X", 0), ("I1", "Y1", 0), ("Y1", "I1", 2),
    ),
)


def cycle4(labels=CYCLE4_VERTICES):
    """The three quivers of the m=2 mutation cycle, relabelled at will."""
    rename = dict(zip(CYCLE4_VERTICES, labels))
    out = []
    for arrows in _CYCLE4_ARROWS:
        out.append(ColouredQuiver.build(
            2, labels, [(rename[i], rename[j], c) for i, j, c in arrows]))
    return tuple(out)


def two_vertex_cycle_patterns():
    """Arrow colours (a->b, b->a) along the m=3 cycle, mutating at b."""
    return ((1, 2), (2, 1), (3, 0), (0, 3))


# the 24 diagonals of the 12-gon (m=2, n=5) arranged in translation rows;
# rows 1 and 3 sit half a column to the right of rows 2 and 4
GAMMA_GRID_ROWS = (
    ((3, 6), (5, 8), (7, 10), (9, 12), (11, 2), (1, 4)),
    ((1, 6), (3, 8), (5, 10), (7, 12), (9, 2), (11, 4)),
    ((1, 8), (3, 10), (5, 12), (7, 2), (9, 4), (11, 6)),
    ((11, 8), (1, 10), (3, 12), (5, 2), (7, 4), (9, 6)),
)

BASE_ANGULATION_DIAGONALS = ((3, 8), (5, 8), (3, 12), (9, 12))

EXCHANGE_TRIPLE = ((3, 8), (5, 12), (4, 9))  # successive complements at one slot


def norm(d):
    a, b = d
    return (a, b) if a < b else (b, a)


def gamma_grid_arrows():
    """Expected arrow set of the 12-gon diagonal quiver, read off the grid."""
    rows = [[norm(d) for d in row] for row in GAMMA_GRID_ROWS]
    arrows = set()
    for k in range(6):
        arrows.add((rows[0][k], rows[1][(k + 1) % 6]))
        arrows.add((rows[1][k], rows[0][k]))
        arrows.add((rows[1][k], rows[2][k]))
        arrows.add((rows[2][k], rows[1][(k + 1) % 6]))
        arrows.add((rows[2][k], rows[3][(k + 1) % 6]))
        arrows.add((rows[3][k], rows[2][k]))
    return arrows
