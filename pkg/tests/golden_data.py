"""Frozen expected values for the golden tests.

Series are stored as {t_order: {exponents: coefficient}} maps; sequence rows
are plain lists indexed from n = 1.  Two published values are known typos and
are deliberately not frozen here; see the notes next to them.
"""

# A^(p)(t, z): {n: {z_exponent: coeff}}
A2 = {
    0: {0: 1},
    1: {1: 1},
    2: {1: 2, 2: 1},
    3: {1: 6, 2: 4, 3: 1},
    4: {1: 21, 2: 18, 3: 6, 4: 1},
    5: {1: 84, 2: 87, 3: 36, 4: 8, 5: 1},
    6: {1: 380, 2: 456, 3: 222, 4: 60, 5: 10, 6: 1},
}

# The z^2 coefficient at t^6 is omitted: the commonly quoted 140 is a
# misprint (it is out of scale with the neighbouring 1490 and 564, and the
# evaluator and the brute-force oracle independently agree on 1440).  The
# acceptance suite asserts evaluator == oracle for it instead.
A3 = {
    0: {0: 1},
    1: {1: 1},
    2: {1: 3, 2: 1},
    3: {1: 12, 2: 6, 3: 1},
    4: {1: 54, 2: 36, 3: 9, 4: 1},
    5: {1: 270, 2: 222, 3: 72, 4: 12, 5: 1},
    6: {1: 1490, 3: 564, 4: 120, 5: 15, 6: 1},
}
A3_FLAGGED_EXPONENT = (6, 2)  # (t_order, z_exponent) left out above

# The z^3 coefficient at t^5 is omitted: the commonly quoted 90 is a
# misprint.  Exhaustive enumeration gives 120, and the (independently
# verified) primitive row R4 forces the same value through the repetition
# substitution: sum C(4, s-1) r_{s,4} = 1 + 16 + 120 + 440 + 670 = 1247
# = 660 + 450 + 120 + 16 + 1.
A4 = {
    0: {0: 1},
    1: {1: 1},
    2: {1: 4, 2: 1},
    3: {1: 20, 2: 8, 3: 1},
    4: {1: 110, 2: 60, 3: 12, 4: 1},
    5: {1: 660, 2: 450, 4: 16, 5: 1},
    6: {1: 4300, 2: 3480, 3: 1140, 4: 200, 5: 20, 6: 1},
}
A4_FLAGGED_EXPONENT = (5, 3)  # (t_order, z_exponent) left out above

# R^(p)(t) coefficient rows for t^0 .. t^9
R2 = [1, 1, 2, 6, 21, 87, 413, 2213, 13205, 86828]
R3 = [1, 1, 3, 12, 54, 276, 1574, 9916, 68394, 512671]
R4 = [1, 1, 4, 20, 110, 670, 4470, 32440, 254490, 2146525]

# G^(p)_1(t, u, 1, z): {n: {(u_exp, z_exp): coeff}}
G2_1_U = {
    2: {(1, 1): 2},
    3: {(2, 1): 3, (1, 1): 3, (1, 2): 2},
    4: {(3, 1): 4, (2, 1): 13, (2, 2): 9, (1, 1): 4, (1, 2): 3, (1, 3): 2},
    5: {
        (4, 1): 5,
        (3, 1): 39, (3, 2): 28,
        (2, 1): 35, (2, 2): 34, (2, 3): 15,
        (1, 1): 5, (1, 2): 4, (1, 3): 3, (1, 4): 2,
    },
}

G3_1_U = {
    2: {(1, 1): 3},
    3: {(2, 1): 6, (1, 1): 6, (1, 2): 3},
    4: {(3, 1): 10, (2, 1): 34, (2, 2): 18, (1, 1): 10, (1, 2): 6, (1, 3): 3},
    5: {
        (4, 1): 15,
        (3, 1): 125, (3, 2): 70,
        (2, 1): 115, (2, 2): 88, (2, 3): 30,
        (1, 1): 15, (1, 2): 10, (1, 3): 6, (1, 4): 3,
    },
}

G4_1_U = {
    2: {(1, 1): 4},
    3: {(2, 1): 10, (1, 1): 10, (1, 2): 4},
    4: {(3, 1): 20, (2, 1): 70, (2, 2): 30, (1, 1): 20, (1, 2): 10, (1, 3): 4},
    5: {
        (4, 1): 35,
        (3, 1): 305, (3, 2): 140,
        (2, 1): 285, (2, 2): 180, (2, 3): 50,
        (1, 1): 35, (1, 2): 20, (1, 3): 10, (1, 4): 4,
    },
}

# G^(p)_1(t, u, v, z): {n: {(u_exp, v_exp, z_exp): coeff}}
G2_1_FULL = {
    2: {(1, 1, 1): 1, (1, 2, 1): 1},
    3: {(1, 1, 1): 2, (1, 2, 1): 1, (2, 2, 1): 1, (2, 3, 1): 2, (1, 0, 2): 2},
    4: {
        (1, 1, 1): 3, (2, 1, 1): 3,
        (1, 2, 1): 1, (2, 2, 1): 5,
        (2, 3, 1): 5, (3, 3, 1): 1,
        (3, 4, 1): 3,
        (1, 0, 2): 3, (2, 0, 2): 3,
        (2, 1, 2): 2, (2, 2, 2): 2, (2, 3, 2): 2,
        (1, 0, 3): 2,
    },
    5: {
        (1, 1, 1): 4, (2, 1, 1): 13, (3, 1, 1): 4,
        (1, 2, 1): 1, (2, 2, 1): 13, (3, 2, 1): 7,
        (2, 3, 1): 9, (3, 3, 1): 12,
        (3, 4, 1): 16, (4, 4, 1): 1,
        (4, 5, 1): 4,
        (1, 0, 2): 4, (2, 0, 2): 13, (3, 0, 2): 4,
        (2, 1, 2): 9, (3, 1, 2): 3,
        (2, 2, 2): 7, (3, 2, 2): 5,
        (2, 3, 2): 5, (3, 3, 2): 7,
        (3, 4, 2): 9,
        (1, 0, 3): 3, (2, 0, 3): 9,
        (2, 1, 3): 2, (2, 2, 3): 2, (2, 3, 3): 2,
        (1, 0, 4): 2,
    },
}

G3_1_FULL = {
    2: {(1, 1, 1): 1, (1, 2, 1): 1, (1, 3, 1): 1},
    3: {
        (1, 1, 1): 3,
        (1, 2, 1): 2, (2, 2, 1): 1,
        (1, 3, 1): 1, (2, 3, 1): 2,
        (2, 4, 1): 3,
        (1, 0, 2): 3,
    },
    4: {
        (1, 1, 1): 6, (2, 1, 1): 6,
        (1, 2, 1): 3, (2, 2, 1): 9,
        (1, 3, 1): 1, (2, 3, 1): 10, (3, 3, 1): 1,
        (2, 4, 1): 9, (3, 4, 1): 3,
        (3, 5, 1): 6,
        (1, 0, 2): 6, (2, 0, 2): 6,
        (2, 1, 2): 3, (2, 2, 2): 3, (2, 3, 2): 3, (2, 4, 2): 3,
        (1, 0, 3): 3,
    },
    5: {
        (1, 1, 1): 10, (2, 1, 1): 34, (3, 1, 1): 10,
        (1, 2, 1): 4, (2, 2, 1): 34, (3, 2, 1): 16,
        (1, 3, 1): 1, (2, 3, 1): 28, (3, 3, 1): 25,
        (2, 4, 1): 19, (3, 4, 1): 34, (4, 4, 1): 1,
        (3, 5, 1): 40, (4, 5, 1): 4,
        (4, 6, 1): 10,
        (1, 0, 2): 10, (2, 0, 2): 34, (3, 0, 2): 10,
        (2, 1, 2): 18, (3, 1, 2): 6,
        (2, 2, 2): 15, (3, 2, 2): 9,
        (2, 3, 2): 12, (3, 3, 2): 12,
        (2, 4, 2): 9, (3, 4, 2): 15,
        (3, 5, 2): 18,
        (1, 0, 3): 6, (2, 0, 3): 18,
        (2, 1, 3): 3, (2, 2, 3): 3, (2, 3, 3): 3, (2, 4, 3): 3,
        (1, 0, 4): 3,
    },
}

# avoider counts indexed from n = 1
AVOID_2_10 = [1, 3, 8, 20, 48, 112, 256]
AVOID_2_012 = [1, 3, 8, 20, 48, 112, 256]
AVOID_3_012 = [1, 4, 13, 38, 104, 272, 688]
# the n = 10 value is often quoted as 26264; brute force, the closed form
# 2^(n-5)(n^3+12n^2+29n+6)/3 = 32*2496/3, and the peeling recursion all give
# 26624, so 26264 is a digit transposition and is not frozen here
AVOID_4_012 = [1, 5, 19, 63, 192, 552, 1520, 4048, 10496, 26624]
AVOID_3_00 = [1, 3, 9, 24, 57, 122, 239, 435, 745, 1213, 1893, 2850]
AVOID_4_00 = [1, 4, 16, 58, 190, 564, 1526, 3794]


def as_terms(table, shape):
    """Expand a golden map into {(n, eu, ev, ez, ex): coeff} terms.

    shape names the exponent axes present in the table values: "z",
    "uz", or "uvz".
    """
    out = {}
    for n, row in table.items():
        for exps, c in row.items():
            if shape == "z":
                key = (n, 0, 0, exps, 0)
            elif shape == "uz":
                eu, ez = exps
                key = (n, eu, 0, ez, 0)
            elif shape == "uvz":
                eu, ev, ez = exps
                key = (n, eu, ev, ez, 0)
            else:
                raise ValueError(shape)
            if c:
                out[key] = c
    return out


def series_terms_through(series, n_max):
    """Nonzero terms of a TSeries with t-order at most n_max."""
    return {exp: c for exp, c in series.terms().items() if exp[0] <= n_max}
