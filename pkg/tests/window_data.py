"""Frozen classification of the Hermitian q=3 window [-8,9] x [-8,10].

Golden data for the two-point semigroup at (infinity, origin) of the curve
x^4 = y^3 + y over the field with nine elements: the 17 maximal elements
and the 120 remaining members inside the window.  The lists were tallied by
hand from the staircase table (0, 5, 2, -1) with period 4 and are also
reproduced independently by the monomial-count oracle, so they pin down the
combinatorial machinery from two directions.
"""

MAXIMALS_Q3_WINDOW = {
    (-8, 8), (-6, 10), (-5, 7), (-4, 4), (-3, 9), (-2, 6), (-1, 3),
    (0, 0), (1, 5), (2, 2), (3, -1), (4, -4), (5, 1), (6, -2), (7, -5),
    (8, -8), (9, -3),
}

NONMAXIMAL_MEMBERS_Q3_WINDOW = {
    (0, 3), (0, 4), (0, 6), (0, 7), (0, 8), (0, 9), (0, 10),
    (3, 0), (4, 0), (6, 0), (7, 0), (8, 0), (9, 0),
    (1, 6), (1, 7), (1, 8), (1, 9), (1, 10),
    (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (2, 8), (2, 9), (2, 10),
    (3, 2), (3, 3), (3, 4), (3, 5), (3, 6), (3, 7), (3, 8), (3, 9), (3, 10),
    (4, -1), (4, 2), (4, 3), (4, 4), (4, 5), (4, 6), (4, 7), (4, 8), (4, 9), (4, 10),
    (5, 2), (5, 3), (5, 4), (5, 5), (5, 6), (5, 7), (5, 8), (5, 9), (5, 10),
    (6, -1), (6, 1), (6, 2), (6, 3), (6, 4), (6, 5), (6, 6), (6, 7), (6, 8), (6, 9), (6, 10),
    (7, -4), (7, -2), (7, -1), (7, 1), (7, 2), (7, 3), (7, 4), (7, 5), (7, 6),
    (7, 7), (7, 8), (7, 9), (7, 10),
    (8, -5), (8, -4), (8, -2), (8, -1), (8, 1), (8, 2), (8, 3), (8, 4), (8, 5),
    (8, 6), (8, 7), (8, 8), (8, 9), (8, 10),
    (9, -2), (9, -1), (9, 1), (9, 2), (9, 3), (9, 4), (9, 5), (9, 6), (9, 7),
    (9, 8), (9, 9), (9, 10),
    (-1, 10), (-2, 10), (-3, 10), (-4, 10), (-5, 10),
    (-1, 9), (-2, 9),
    (-1, 8), (-2, 8), (-4, 8), (-5, 8),
    (-1, 7), (-2, 7), (-4, 7),
    (-1, 6),
    (-1, 4),
}

MEMBERS_Q3_WINDOW = MAXIMALS_Q3_WINDOW | NONMAXIMAL_MEMBERS_Q3_WINDOW

assert len(MAXIMALS_Q3_WINDOW) == 17
assert len(NONMAXIMAL_MEMBERS_Q3_WINDOW) == 120
assert len(MEMBERS_Q3_WINDOW) == 137
