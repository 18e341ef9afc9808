"""Published reference values for the counting tables.

These are literal fixtures: the table commands compare freshly computed
values against them, so any formula regression is caught bit-exactly.
Layout follows the source tables (rows indexed by color count m, columns
by leaf count s, except the triangle which is (inner vertices k, leaves n)).
"""

# Symbolic ultrametrics / labeled m-partite series-reduced trees,
# rows m = 1..8, columns s = 1..8.
ULTRAMETRIC_TABLE = {
    1: [1, 1, 1, 1, 1, 1, 1, 1],
    2: [1, 2, 8, 52, 472, 5504, 78416, 1320064],
    3: [1, 3, 21, 243, 3933, 81819, 2080053, 62490339],
    4: [1, 4, 40, 664, 15424, 460576, 16808320, 724904896],
    5: [1, 5, 65, 1405, 42505, 1653125, 78578225, 4414067725],
    6: [1, 6, 96, 2556, 95256, 4563936, 267253776, 18494891136],
    7: [1, 7, 133, 4207, 186277, 10603999, 737769781, 60662126959],
    8: [1, 8, 176, 6448, 330688, 21804224, 1757138048, 167347010944],
}

# Fully colored labeled trees, rows m = 1..6, columns s = 1..6.
FULLY_COLORED_LABELED_TABLE = {
    1: [1, 0, 0, 0, 0, 0],
    2: [2, 2, 8, 52, 472, 5504],
    3: [3, 12, 168, 3888, 125856, 5236416],
    4: [4, 36, 1080, 53784, 3748032, 335759904],
    5: [5, 80, 4160, 359680, 43525120, 6771200000],
    6: [6, 150, 12000, 1597500, 297675000, 71311500000],
}

# Labeled multipartite mobiles, rows m = 1..8, columns s = 1..8.
MOBILES_TABLE = {
    1: [1, 1, 2, 6, 24, 120, 720, 5040],
    2: [1, 2, 10, 82, 938, 13778, 247210, 5240338],
    3: [1, 3, 24, 318, 5892, 140304, 4082712, 140389824],
    4: [1, 4, 44, 804, 20556, 675588, 27135468, 1288020708],
    5: [1, 5, 70, 1630, 53120, 2225480, 113950720, 6895234480],
    6: [1, 6, 102, 2886, 114294, 5819190, 362107110, 26628964710],
    7: [1, 7, 140, 4662, 217308, 13022688, 953817480, 82561002048],
    8: [1, 8, 184, 7048, 377912, 26052104, 2195014072, 218563826824],
}

# Rooted unlabeled series-reduced trees by (inner vertices k, leaves n),
# n = 2..10.
RIORDAN_TRIANGLE = {
    (1, 2): 1, (1, 3): 1, (1, 4): 1, (1, 5): 1, (1, 6): 1,
    (1, 7): 1, (1, 8): 1, (1, 9): 1, (1, 10): 1,
    (2, 3): 1, (2, 4): 2, (2, 5): 3, (2, 6): 4, (2, 7): 5,
    (2, 8): 6, (2, 9): 7, (2, 10): 8,
    (3, 4): 2, (3, 5): 5, (3, 6): 10, (3, 7): 16, (3, 8): 24,
    (3, 9): 33, (3, 10): 44,
    (4, 5): 3, (4, 6): 12, (4, 7): 29, (4, 8): 57, (4, 9): 99,
    (4, 10): 157,
    (5, 6): 6, (5, 7): 28, (5, 8): 84, (5, 9): 192, (5, 10): 382,
    (6, 7): 11, (6, 8): 66, (6, 9): 231, (6, 10): 615,
    (7, 8): 23, (7, 9): 157, (7, 10): 634,
    (8, 9): 46, (8, 10): 373,
    (9, 10): 98,
}

# Column sums of the triangle: total unlabeled counts for s = 1..10.
UNLABELED_SEQUENCE = [1, 1, 2, 5, 12, 33, 90, 261, 766, 2312]

# Unlabeled m-partite trees, rows m = 1..8, columns s = 1..8.
MULTIPARTITE_UNLABELED_TABLE = {
    1: [1, 1, 1, 1, 1, 1, 1, 1],
    2: [1, 2, 4, 10, 24, 66, 180, 522],
    3: [1, 3, 9, 39, 153, 723, 3321, 16479],
    4: [1, 4, 16, 100, 544, 3652, 23536, 165532],
    5: [1, 5, 25, 205, 1425, 12405, 102825, 936765],
    6: [1, 6, 36, 366, 3096, 33126, 335556, 3755286],
    7: [1, 7, 49, 595, 5929, 75271, 900865, 11958667],
    8: [1, 8, 64, 904, 10368, 152328, 2102976, 32301144],
}

# Fully colored unlabeled trees, rows m = 1..6, columns s = 1..6.
FULLY_COLORED_UNLABELED_TABLE = {
    1: [1, 0, 0, 0, 0, 0],
    2: [2, 2, 4, 10, 24, 66],
    3: [3, 12, 72, 624, 4896, 46272],
    4: [4, 36, 432, 8100, 132192, 2662308],
    5: [5, 80, 1600, 52480, 1459200, 50810880],
    6: [6, 150, 4500, 228750, 9675000, 517593750],
}

# Labeled-count polynomials in m for s = 1..7, ascending coefficients.
A_POLYNOMIALS = {
    1: [1],
    2: [0, 1],
    3: [0, -2, 3],
    4: [0, 6, -20, 15],
    5: [0, -24, 130, -210, 105],
    6: [0, 120, -924, 2380, -2520, 945],
    7: [0, -720, 7308, -26432, 44100, -34650, 10395],
}

# Unlabeled-count polynomials in m for s = 1..8, ascending coefficients.
UNLABELED_POLYNOMIALS = {
    1: [1],
    2: [0, 1],
    3: [0, 0, 1],
    4: [0, 1, -2, 2],
    5: [0, 0, 2, -4, 3],
    6: [0, 1, -4, 10, -12, 6],
    7: [0, 0, 3, -13, 27, -27, 11],
    8: [0, 3, -15, 42, -79, 99, -72, 23],
}
