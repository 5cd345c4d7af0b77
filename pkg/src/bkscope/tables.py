"""Embedded reference data.

These tables pin down the labelling conventions of the whole package: the 60
joint eigenstates and their home triads, the 24 tetrads and 16 partner-line
pairs of the S1 kaleidoscope, the point/triangle table driving the 20-state
apparitions, the state relabelings that carry S1 onto S2..S10 (and thereby
fix which generated square gets which name), the known per-qubit letter
relabelings between squares, and the six maximal families of mutually
unbiased triads.

Everything here is redundant: the library recomputes each object from
scratch and the verification suite checks the recomputation against these
tables.  Coordinates are (re, im) integer pairs.
"""

from __future__ import annotations

# --- the 60-state catalog -------------------------------------------------
# 15 rows, one per triad of commuting observables; each row lists the triad
# members followed by its four joint eigenstates, already in canonical form
# (content 1, first nonzero coordinate a positive integer).  Rows flagged
# True have eigenvalue-signature product -1 for every state in the row.

O = (0, 0)
P = (1, 0)   # +1
N = (-1, 0)  # -1
J = (0, 1)   # +i
K = (0, -1)  # -i

STATE_ROWS: tuple[tuple[tuple[str, str, str], bool, tuple[tuple, ...]], ...] = (
    (("ZI", "IZ", "ZZ"), False, ((P, O, O, O), (O, P, O, O), (O, O, P, O), (O, O, O, P))),
    (("XI", "IX", "XX"), False, ((P, P, P, P), (P, N, P, N), (P, P, N, N), (P, N, N, P))),
    (("YY", "XZ", "ZX"), False, ((P, P, P, N), (P, N, N, N), (P, N, P, P), (P, P, N, P))),
    (("XI", "IZ", "XZ"), False, ((P, O, P, O), (O, P, O, P), (P, O, N, O), (O, P, O, N))),
    (("ZI", "IX", "ZX"), False, ((P, P, O, O), (P, N, O, O), (O, O, P, P), (O, O, P, N))),
    (("XX", "ZZ", "YY"), True, ((P, O, O, P), (O, P, P, O), (P, O, O, N), (O, P, N, O))),
    (("YZ", "ZY", "XX"), False, ((P, J, J, P), (P, K, K, P), (P, K, J, N), (P, J, K, N))),
    (("XY", "YZ", "ZX"), True, ((P, N, J, J), (P, P, K, J), (P, P, J, K), (P, N, K, K))),
    (("YX", "ZY", "XZ"), True, ((P, J, N, J), (P, K, P, J), (P, J, P, K), (P, K, N, K))),
    (("XY", "YX", "ZZ"), False, ((P, O, O, J), (P, O, O, K), (O, P, J, O), (O, P, K, O))),
    (("YI", "IZ", "YZ"), False, ((P, O, J, O), (P, O, K, O), (O, P, O, J), (O, P, O, K))),
    (("YI", "IY", "YY"), False, ((P, J, J, N), (P, K, K, N), (P, J, K, P), (P, K, J, P))),
    (("ZI", "IY", "ZY"), False, ((P, J, O, O), (P, K, O, O), (O, O, P, J), (O, O, P, K))),
    (("XI", "IY", "XY"), False, ((P, J, P, J), (P, K, P, K), (P, J, N, K), (P, K, N, J))),
    (("YI", "IX", "YX"), False, ((P, P, J, J), (P, N, J, K), (P, P, K, K), (P, N, K, J))),
)

# --- the S1 kaleidoscope --------------------------------------------------
# The 24 tetrads of mutually orthogonal states among labels 1..24.

S1_TETRADS: tuple[tuple[int, int, int, int], ...] = (
    (1, 2, 3, 4), (3, 4, 17, 18), (6, 8, 17, 19), (10, 11, 17, 20),
    (1, 2, 19, 20), (5, 6, 7, 8), (7, 8, 13, 14), (10, 12, 13, 16),
    (1, 3, 14, 16), (5, 6, 15, 16), (9, 10, 11, 12), (11, 12, 22, 23),
    (1, 4, 22, 24), (5, 7, 18, 20), (9, 10, 21, 24), (13, 14, 15, 16),
    (2, 3, 21, 23), (5, 8, 23, 24), (9, 11, 14, 15), (17, 18, 19, 20),
    (2, 4, 13, 15), (6, 7, 21, 22), (9, 12, 18, 19), (21, 22, 23, 24),
)

# The 16 line pairs between the two dual 12-point configurations of S1.
# Every state on the left line is orthogonal to every state on the right.

S1_PARTNER_LINES: tuple[tuple[tuple[int, int, int], tuple[int, int, int]], ...] = (
    ((1, 5, 10), (16, 20, 24)),
    ((1, 6, 12), (16, 19, 22)),
    ((1, 7, 11), (14, 20, 22)),
    ((1, 8, 9), (14, 19, 24)),
    ((2, 7, 10), (13, 20, 21)),
    ((2, 5, 11), (15, 20, 23)),
    ((2, 6, 9), (15, 19, 21)),
    ((2, 8, 12), (13, 19, 23)),
    ((3, 7, 9), (14, 18, 21)),
    ((3, 6, 10), (16, 17, 21)),
    ((3, 5, 12), (16, 18, 23)),
    ((3, 8, 11), (14, 17, 23)),
    ((4, 5, 9), (15, 18, 24)),
    ((4, 8, 10), (13, 17, 24)),
    ((4, 7, 12), (13, 18, 22)),
    ((4, 6, 11), (15, 17, 22)),
)

# For each state of S1, the four triangles in the opposite configuration all
# of whose members are orthogonal to it.  Point + triangle = the 4 states
# excluded when building a 20-state apparition.

S1_POINT_TRIANGLES: dict[int, tuple[tuple[int, int, int], ...]] = {
    1: ((14, 19, 22), (14, 20, 24), (16, 19, 24), (16, 20, 22)),
    2: ((13, 19, 21), (13, 20, 23), (15, 19, 23), (15, 20, 21)),
    3: ((14, 17, 21), (14, 18, 23), (16, 17, 23), (16, 18, 21)),
    4: ((13, 17, 22), (13, 18, 24), (15, 17, 24), (15, 18, 22)),
    5: ((15, 18, 23), (15, 20, 24), (16, 18, 24), (16, 20, 23)),
    6: ((15, 17, 21), (15, 19, 22), (16, 17, 22), (16, 19, 21)),
    7: ((13, 18, 21), (13, 20, 22), (14, 18, 22), (14, 20, 21)),
    8: ((13, 17, 23), (13, 19, 24), (14, 17, 24), (14, 19, 23)),
    9: ((14, 18, 24), (14, 19, 21), (15, 18, 21), (15, 19, 24)),
    10: ((13, 17, 21), (13, 20, 24), (16, 17, 24), (16, 20, 21)),
    11: ((14, 17, 22), (14, 20, 23), (15, 17, 23), (15, 20, 22)),
    12: ((13, 18, 23), (13, 19, 22), (16, 18, 22), (16, 19, 23)),
    13: ((2, 7, 12), (2, 8, 10), (4, 7, 10), (4, 8, 12)),
    14: ((1, 7, 9), (1, 8, 11), (3, 7, 11), (3, 8, 9)),
    15: ((2, 5, 9), (2, 6, 11), (4, 5, 11), (4, 6, 9)),
    16: ((1, 5, 12), (1, 6, 10), (3, 5, 10), (3, 6, 12)),
    17: ((3, 6, 11), (3, 8, 10), (4, 6, 10), (4, 8, 11)),
    18: ((3, 5, 9), (3, 7, 12), (4, 5, 12), (4, 7, 9)),
    19: ((1, 6, 9), (1, 8, 12), (2, 6, 12), (2, 8, 9)),
    20: ((1, 5, 11), (1, 7, 10), (2, 5, 10), (2, 7, 11)),
    21: ((2, 6, 10), (2, 7, 9), (3, 6, 9), (3, 7, 10)),
    22: ((1, 6, 11), (1, 7, 12), (4, 6, 12), (4, 7, 11)),
    23: ((2, 5, 12), (2, 8, 11), (3, 5, 11), (3, 8, 12)),
    24: ((1, 5, 9), (1, 8, 10), (4, 5, 10), (4, 8, 9)),
}

# --- relabelings between the ten kaleidoscopes ----------------------------
# Column k maps state s of S1 (index s-1) to the corresponding state of Sk.
# These columns both verify the tetrad-preserving relabelings and pin which
# generated square carries which of the names S2..S10.

SQUARE_RELABELINGS: dict[str, tuple[int, ...]] = {
    "S2": (1, 2, 3, 4, 53, 54, 55, 56, 35, 36, 34, 33,
           13, 14, 15, 16, 49, 50, 51, 52, 37, 40, 38, 39),
    "S3": (1, 2, 3, 4, 57, 58, 59, 60, 31, 32, 29, 30,
           41, 43, 42, 44, 17, 18, 19, 20, 37, 39, 38, 40),
    "S4": (1, 2, 3, 4, 25, 27, 28, 26, 45, 46, 48, 47,
           41, 44, 42, 43, 49, 50, 52, 51, 21, 22, 23, 24),
    "S5": (50, 49, 51, 52, 57, 60, 59, 58, 9, 10, 11, 12,
           34, 33, 36, 35, 17, 18, 19, 20, 48, 45, 46, 47),
    "S6": (37, 40, 39, 38, 26, 27, 28, 25, 9, 10, 11, 12,
           34, 36, 33, 35, 30, 29, 32, 31, 21, 22, 23, 24),
    "S7": (49, 50, 51, 52, 5, 6, 7, 8, 30, 32, 29, 31,
           53, 54, 55, 56, 17, 18, 19, 20, 25, 26, 28, 27),
    "S8": (41, 44, 42, 43, 54, 53, 55, 56, 9, 10, 11, 12,
           13, 14, 15, 16, 31, 29, 32, 30, 48, 46, 45, 47),
    "S9": (42, 44, 41, 43, 5, 6, 7, 8, 35, 33, 34, 36,
           13, 14, 15, 16, 59, 60, 57, 58, 26, 25, 28, 27),
    "S10": (37, 39, 40, 38, 5, 6, 7, 8, 45, 46, 47, 48,
            53, 54, 56, 55, 57, 60, 59, 58, 21, 22, 23, 24),
}

# --- known per-qubit letter relabelings between squares --------------------
# Each entry maps S1 onto the named square by permuting the Pauli letters on
# each qubit independently.  No such map exists for S1 -> S6; that hole is
# filled by searching the full symplectic group (see transforms.find_maps).

LOCAL_MAP_ROWS: dict[str, tuple[dict[str, str], dict[str, str]]] = {
    "S2": ({"X": "Z", "Z": "X", "Y": "Y"}, {"X": "Y", "Y": "X", "Z": "Z"}),
    "S3": ({"X": "Z", "Z": "Y", "Y": "X"}, {"X": "X", "Y": "Y", "Z": "Z"}),
    "S4": ({"X": "Y", "Y": "X", "Z": "Z"}, {"X": "Y", "Y": "X", "Z": "Z"}),
    "S5": ({"X": "Z", "Z": "Y", "Y": "X"}, {"X": "Y", "Y": "Z", "Z": "X"}),
    "S7": ({"X": "X", "Y": "Y", "Z": "Z"}, {"X": "Y", "Y": "Z", "Z": "X"}),
    "S8": ({"X": "X", "Z": "Y", "Y": "Z"}, {"X": "Y", "Y": "X", "Z": "Z"}),
    "S9": ({"X": "X", "Y": "Z", "Z": "Y"}, {"X": "Z", "Z": "X", "Y": "Y"}),
    "S10": ({"X": "Y", "Y": "Z", "Z": "X"}, {"X": "Y", "Y": "Z", "Z": "X"}),
}

# --- maximal families of mutually unbiased triads --------------------------
# Six families of five pairwise-disjoint triads; together they cover each
# triad exactly twice.

MUB_SETS: tuple[tuple[tuple[str, str, str], ...], ...] = (
    (("ZI", "IZ", "ZZ"), ("XI", "IX", "XX"), ("YI", "IY", "YY"),
     ("XY", "YZ", "ZX"), ("YX", "ZY", "XZ")),
    (("ZI", "IZ", "ZZ"), ("XI", "IY", "XY"), ("YI", "IX", "YX"),
     ("ZX", "XZ", "YY"), ("YZ", "ZY", "XX")),
    (("XI", "IZ", "XZ"), ("ZI", "IX", "ZX"), ("YI", "IY", "YY"),
     ("XY", "YX", "ZZ"), ("YZ", "ZY", "XX")),
    (("XI", "IZ", "XZ"), ("ZI", "IY", "ZY"), ("YI", "IX", "YX"),
     ("XX", "YY", "ZZ"), ("XY", "YZ", "ZX")),
    (("ZI", "IX", "ZX"), ("YI", "IZ", "YZ"), ("XI", "IY", "XY"),
     ("XX", "YY", "ZZ"), ("YX", "ZY", "XZ")),
    (("XI", "IX", "XX"), ("YI", "IZ", "YZ"), ("ZI", "IY", "ZY"),
     ("XY", "YX", "ZZ"), ("ZX", "XZ", "YY")),
)


def golden_payload() -> dict:
    """All embedded tables in plain JSON-ready form (for --dump-golden)."""
    return {
        "state_rows": [
            {
                "triad": list(members),
                "signature_product": -1 if starred else 1,
                "states": [[list(c) for c in coords] for coords in states],
            }
            for members, starred, states in STATE_ROWS
        ],
        "s1_tetrads": [list(t) for t in S1_TETRADS],
        "s1_partner_lines": [[list(a), list(b)] for a, b in S1_PARTNER_LINES],
        "s1_point_triangles": {
            str(p): [list(t) for t in triangles]
            for p, triangles in S1_POINT_TRIANGLES.items()
        },
        "square_relabelings": {
            sid: list(col) for sid, col in SQUARE_RELABELINGS.items()
        },
        "local_map_rows": {
            sid: [dict(p1), dict(p2)] for sid, (p1, p2) in LOCAL_MAP_ROWS.items()
        },
        "mub_sets": [[list(t) for t in row] for row in MUB_SETS],
    }
