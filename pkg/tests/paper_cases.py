"""Worked examples transcribed by hand from the source material.

Tableaux are given in the package text format (rows bottom to top).  Tests
treat these strings as frozen golden values.
"""

# -- validity example: T1 is valid, T2 violates row 1 twice / column 1 once
T1 = "1+1^2|3+3,4^4|4+4,5^9 / 3+3,5^4,6|6+7"
T1_WEIGHT = {
    "a": {1: 3, 2: 3, 3: 2},
    "b": {1: 3, 2: 2},
    "x": {1: 2, 2: 1, 3: 4, 4: 5, 5: 2, 6: 2, 7: 1, 9: 1},
}
T2 = "1+2,2^3,4|3+4,5^5|5+6,7^7,8|7 / 4+4,5^7|7+8,9"
T2_VIOLATIONS = {
    ("RowViolation", (1, 1), (1, 2)),
    ("RowViolation", (1, 3), (1, 4)),
    ("ColumnViolation", (1, 1), (2, 1)),
}

# -- arm-bumping trace (four tableaux, boldface 4 then 5 then 7 move)
ARM_BUMP_TRACE = [
    "1+1|1+2^2|3^5,6|7^8 / 2|3+4|9",
    "1+1|1+2^2|3+5^4,6|7^8 / 2|3|9",
    "1+1|1+2^2|3^4|5+7^6,8 / 2|3|9",
    "1+1|1+2^2|3^4|5^6|7^8 / 2|3|9",
]

# -- leg-bumping trace (three tableaux, boldface 3 then 5 move)
LEG_BUMP_TRACE = [
    "1^2|2+2,4^3|4+5 / 3+3|5+6 / 4",
    "1^2|2+2|4+5 / 3+3|3+4,6^5 / 4",
    "1^2|2+2|4+5 / 3+3|3+4 / 4|5+6",
]

# -- the full uncrowding run T -> A -> A -> L -> L with its (P, Q)
UNCROWD_INPUT = "1|1|1|3^5 / 2|2+4 / 3|5+7^6 / 4"
UNCROWD_TRACE = [
    "1|1|1|3^5 / 2|2+4|7 / 3|5^6 / 4",
    "1|1|1|3^5 / 2|2|4|7 / 3|5^6 / 4",
    "1|1|1|3^5 / 2|2|4|7 / 3|5 / 4|6",
    "1|1|1|3 / 2|2|4|5 / 3|5|7 / 4|6",
]
UNCROWD_P = "1|1|1|3 / 2|2|4|5 / 3|5|7 / 4|6"
UNCROWD_Q = ".|.|.|. / .|.|a2|a2 / .|.|b1 / .|b3"

# -- single-uncrowding records: (origin column, created cell) for the first
# arm step and (origin row, created cell) for the first leg step above
UNCROWD_FIRST_ARM = (2, (2, 3))
UNCROWD_FIRST_LEG = (3, (4, 2))

# -- switching endpoints (the shuffle example uses the same tableau); the
# second display is one switch into the procedure
SWITCH_START = ".|a2|a2|a1|b5|b1 / a2|a1|b6|b2|b1 / b8|b6|b5|b2"
SWITCH_SECOND = ".|a2|a2|b5|a1|b1 / a2|a1|b6|b2|b1 / b8|b6|b5|b2"
SWITCH_END = ".|b6|b5|b2|b1|a1 / b8|b6|b5|b1|a2 / b2|a2|a2|a1"

# after each pick-and-slide round of the shuffle
SHUFFLE_TRACE = [
    ".|a2|a2|b5|b1|a1 / a2|a1|b6|b2|b1 / b8|b6|b5|b2",
    ".|a2|a2|b5|b1|a1 / a2|b6|b5|b2|b1 / b8|b6|b2|a1",
    ".|a2|b5|b2|b1|a1 / a2|b6|b5|b1|a2 / b8|b6|b2|a1",
    ".|b6|b5|b2|b1|a1 / a2|b6|b5|b1|a2 / b8|b2|a2|a1",
    ".|b6|b5|b2|b1|a1 / b8|b6|b5|b1|a2 / b2|a2|a2|a1",
]

# -- GG-jdt example in its true coordinates: rows 7..9 of a big skew shape
_FULL_ROW = ".|.|.|.|.|.|.|."
GGJDT_INPUT = " / ".join(
    [_FULL_ROW] * 6
    + [
        ".|.|.|a2|a2|a1|b5|b1",
        ".|.|a2|a1|b6|b2|b1",
        ".|.|b8|b6|b5|b2",
    ]
)


def _gg(row7, row8, row9):
    return " / ".join([_FULL_ROW] * 6 + [row7, row8, row9])


# tableau after each elementary slide (the figure displays slides 2,4,5,6,7)
GGJDT_TRACE = [
    _gg(".|.|.|a2|a2|b5|a1|b1", ".|.|a2|a1|b6|b2|b1", ".|.|b8|b6|b5|b2"),
    _gg(".|.|.|a2|a2|b5|b1|a1", ".|.|a2|a1|b6|b2|b1", ".|.|b8|b6|b5|b2"),
    _gg(".|.|.|a2|a2|b5|b1|a1", ".|.|a2|b6|a1|b2|b1", ".|.|b8|b6|b5|b2"),
    _gg(".|.|.|a2|a2|b5|b1|a1", ".|.|a2|b6|b5|b2|b1", ".|.|b8|b6|a1|b2"),
    _gg(".|.|.|a2|b5|a2|b1|a1", ".|.|a2|b6|b5|b2|b1", ".|.|b8|b6|a1|b2"),
    _gg(".|.|.|b6|b5|a2|b1|a1", ".|.|a2|a2|b5|b2|b1", ".|.|b8|b6|a1|b2"),
    _gg(".|.|.|b6|b5|a2|b1|a1", ".|.|b8|a2|b5|b2|b1", ".|.|a2|b6|a1|b2"),
]
GGJDT_RESULT = GGJDT_TRACE[-1]
GGJDT_DISPLAYED_STEPS = [GGJDT_TRACE[i] for i in (1, 3, 4, 5, 6)]
GGJDT_CBETA_PLUS = _gg(
    ".|.|.|b3|b3|a2|b1|a1", ".|.|b3|a2|b2|b0|b0", ".|.|a2|b1|a1|b-1"
)

# -- the four exquisite tableaux of shape (3,3,1)/(2,1), display order
EXQ_331_21 = [
    ".|.|a2 / .|b1|a1 / b2",
    ".|.|a2 / .|b1|a1 / b1",
    ".|.|a2 / .|a1|a1 / b2",
    ".|.|a2 / .|a1|a1 / b1",
]

# -- the four biflagged tableaux of the same shape, display order, plus the
# displayed non-member (whose shuffle puts beta_1 outside the flags)
BFT_331_21 = [
    ".|.|a2 / .|a1|b1 / b2",
    ".|.|a2 / .|a1|b1 / b1",
    ".|.|a2 / .|a1|a1 / b2",
    ".|.|a2 / .|a1|a1 / b1",
]
BFT_NON_MEMBER = ".|.|a1 / .|a1|b1 / b2"
BFT_NON_MEMBER_SHUFFLED = ".|.|b1 / .|a1|a1 / b2"

# GG-jdt sends the biflagged list to the exquisite list in display order
GGJDT_PAIRS = list(zip(BFT_331_21, EXQ_331_21))

# -- the negative control for arm-only uncrowding: the pair (P1, Q1) cannot
# occur; continuing with leg uncrowding and combining the recordings gives
# (P, Q) with Q failing biflaggedness.  (The source display shows a 2 in the
# top cell of P; entry conservation and weight preservation force a 3.)
NEG_P1 = "1^2|2^3 / 3"
NEG_Q1_ENTRIES = {(1, 2): ("a", 1)}
NEG_Q1_INNER = (1, 1)
NEG_LEG_CONTINUATION = ["1^2|2 / 3|3", "1|2 / 2|3 / 3"]
NEG_P = "1|2 / 2|3 / 3"
NEG_Q = ".|a1 / .|b1 / b1"
NEG_Q_SHUFFLED = ".|b1 / .|a1 / b1"

# -- Schur-expansion coefficient of s_{(3,3,1)} in G_{(2,1)}: the weight sum
# of the four exquisite tableaux above, as (alpha exponents, beta exponents)
EXQ_331_21_WEIGHTS = [
    ({1: 1, 2: 1}, {1: 1, 2: 1}),
    ({1: 1, 2: 1}, {1: 2}),
    ({1: 2, 2: 1}, {2: 1}),
    ({1: 2, 2: 1}, {1: 1}),
]

# -- typed-word example: both single bumps create a cell, and the composite
# words observed in the display
TYPE_EXAMPLE = "1|1|2|2^3 / 2+2,2|2^3|3^4 / 4 / 5+5"
TYPE_HAS = [
    [("A", 1)],
    [("L", 1)],
    [("L", 0), ("A", 1)],
    [("A", 1), ("L", 1)],
]
