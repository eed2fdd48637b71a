"""Published upper bounds on R(m,n) with method labels ("" = taken as input).

Layout: m -> (first n, [value or (value, label), ...]).
"""


def _expand(rows):
    out = {}
    for m, (n0, cells) in rows.items():
        for k, cell in enumerate(cells):
            value, label = cell if isinstance(cell, tuple) else (cell, "")
            out[(m, n0 + k)] = (value, label)
    return out


REFERENCE_10x15 = _expand({
    5: (5, [48, 87, (142, "b"), (215, "c"), 316, 442, (629, "c"), (846, "c"), (1102, "c"),
            (1442, "c"), (1832, "c")]),
    6: (6, [165, 298, 495, 780, 1171, (1782, "c"), (2549, "c"), (3526, "c"), (4927, "c"), (6614, "c")]),
    7: (7, [539, (1029, "b"), (1711, "c"), (2775, "c"), (4518, "c"), (6821, "c"), (10017, "c"),
            (14841, "c"), (20928, "c")]),
    8: (8, [1865, (3576, "a"), (6061, "b"), (10297, "c"), (16777, "b"), (25933, "c"), (40140, "c"),
            (59916, "c")]),
    9: (9, [6582, (12643, "a"), (22161, "b"), (38000, "c"), (62763, "c"), (100614, "c"), (157549, "c")]),
    10: (10, [23327, (45488, "a"), (80231, "b"), (139767, "c"), (236772, "b"), (385139, "c")]),
})

REFERENCE_6x23 = _expand({
    4: (16, [514, (615, "b"), (720, "c"), (851, "a"), (988, "b"), (1129, "c"), (1300, "a"), (1476, "b")]),
    5: (16, [(2321, "c"), (2916, "c"), (3576, "c"), (4397, "c"), (5350, "c"), (6381, "c"), (7651, "c"),
             (9074, "c")]),
    6: (16, [(8745, "c"), (11596, "c"), (14903, "c"), (19037, "c"), (24272, "c"), (30177, "c"),
             (37497, "c"), (46374, "c")]),
})

# Cells where the printed label is not the weakest method that certifies the
# printed value against the final table. At (7,9), hwplus with
# (alpha, beta, gamma, delta) = (315, 538, 779, 1028) already fails at p = 1711
# (lhs 2383740 > max 2383360 at d = 779), so the computed label is b.
KNOWN_LABEL_DIFFERENCES = {(7, 9): ("c", "b")}
