"""Reference data: the three reduced rank-3 initial seeds of finite type A3
and the hand-computed list of their 14 unlabeled clusters.

Arrow ``i -> j`` means ``b_ij = +1``.  Cluster rows are numbered 1..14 and
their entries are written in the order used for exponent vectors.
"""

CASE_MATRICES = {
    # 1 -> 2 <- 3
    "inward": ((0, 1, 0), (-1, 0, -1), (0, 1, 0)),
    # 1 -> 2 -> 3
    "straightforward": ((0, 1, 0), (-1, 0, 1), (0, -1, 0)),
    # 1 -> 2 -> 3 -> 1
    "cyclic": ((0, 1, -1), (-1, 0, 1), (1, -1, 0)),
}

CASES = tuple(CASE_MATRICES)

# small-rank seeds used by the rank-1/rank-2 campaigns
SMALL_RANK_MATRICES = {
    "A1": ((0,),),
    "A2": ((0, 1), (-1, 0)),
}

LINEAR_A4_MATRIX = (
    (0, 1, 0, 0),
    (-1, 0, 1, 0),
    (0, -1, 0, 1),
    (0, 0, -1, 0),
)

_W = "(x1*x3 + x2 + 1)"          # shared numerators, inward case
_Y = "(x1*x3 + (x2 + 1)^2)"

REFERENCE_CLUSTERS = {
    "inward": (
        ("x1", "x2", "x3"),
        (f"{_W}/(x1*x2)", "(x1*x3 + 1)/x2", f"{_W}/(x2*x3)"),
        ("(x2 + 1)/x3", f"{_Y}/(x1*x2*x3)", "(x2 + 1)/x1"),
        ("x1", "(x1*x3 + 1)/x2", "x3"),
        (f"{_W}/(x1*x2)", f"{_Y}/(x1*x2*x3)", f"{_W}/(x2*x3)"),
        ("(x2 + 1)/x3", "x2", "(x2 + 1)/x1"),
        ("x3", "(x1*x3 + 1)/x2", f"{_W}/(x1*x2)"),
        (f"{_W}/(x2*x3)", f"{_Y}/(x1*x2*x3)", "(x2 + 1)/x3"),
        ("(x2 + 1)/x1", "x2", "x3"),
        ("x1", "(x1*x3 + 1)/x2", f"{_W}/(x2*x3)"),
        (f"{_W}/(x1*x2)", f"{_Y}/(x1*x2*x3)", "(x2 + 1)/x1"),
        ("(x2 + 1)/x3", "x2", "x1"),
        ("(x2 + 1)/x1", f"{_W}/(x1*x2)", "x3"),
        ("(x2 + 1)/x3", f"{_W}/(x2*x3)", "x1"),
    ),
    "straightforward": (
        ("x1", "x2", "x3"),
        ("(1 + x2)/x1", "x2", "x3"),
        ("x1", "(x1 + x3)/x2", "x3"),
        ("x1", "x2", "(1 + x2)/x3"),
        ("(1 + x2)/x1", "(x1 + x3 + x2*x3)/(x1*x2)", "x3"),
        ("(1 + x2)/x1", "x2", "(1 + x2)/x3"),
        ("(x1 + x3 + x2*x3)/(x1*x2)", "(x1 + x3)/x2", "x3"),
        ("x1", "(x1 + x3)/x2", "(x1 + x3 + x1*x2)/(x2*x3)"),
        ("x1", "(x1 + x3 + x1*x2)/(x2*x3)", "(1 + x2)/x3"),
        ("(1 + x2)/x1", "(x1 + x3 + x2*x3)/(x1*x2)", "(1 + x2)*(x1 + x3)/(x1*x2*x3)"),
        ("(1 + x2)/x1", "(1 + x2)*(x1 + x3)/(x1*x2*x3)", "(1 + x2)/x3"),
        ("(x1 + x3 + x2*x3)/(x1*x2)", "(x1 + x3)/x2", "(1 + x2)*(x1 + x3)/(x1*x2*x3)"),
        ("(1 + x2)*(x1 + x3)/(x1*x2*x3)", "(x1 + x3)/x2", "(x1 + x3 + x1*x2)/(x2*x3)"),
        ("(1 + x2)*(x1 + x3)/(x1*x2*x3)", "(x1 + x3 + x1*x2)/(x2*x3)", "(1 + x2)/x3"),
    ),
    "cyclic": (
        ("x1", "x2", "x3"),
        ("(x2 + x3)/x1", "x2", "x3"),
        ("x1", "(x1 + x3)/x2", "x3"),
        ("x1", "x2", "(x1 + x2)/x3"),
        ("(x2 + x3)/x1", "(x1 + x2 + x3)/(x1*x2)", "x3"),
        ("(x1 + x3)/x2", "(x1 + x2 + x3)/(x1*x2)", "x3"),
        ("(x1 + x3)/x2", "(x1 + x2 + x3)/(x1*x2)", "(x1 + x2 + x3)/(x2*x3)"),
        ("(x1 + x3)/x2", "x1", "(x1 + x2 + x3)/(x2*x3)"),
        ("(x1 + x2)/x3", "x1", "(x1 + x2 + x3)/(x2*x3)"),
        ("(x1 + x2)/x3", "(x1 + x2 + x3)/(x1*x3)", "(x1 + x2 + x3)/(x2*x3)"),
        ("(x1 + x2)/x3", "(x1 + x2 + x3)/(x1*x3)", "x2"),
        ("(x2 + x3)/x1", "(x1 + x2 + x3)/(x1*x3)", "x2"),
        ("(x2 + x3)/x1", "(x1 + x2 + x3)/(x1*x3)", "(x1 + x2 + x3)/(x1*x2)"),
        ("(x1 + x2 + x3)/(x1*x2)", "(x1 + x2 + x3)/(x1*x3)", "(x1 + x2 + x3)/(x2*x3)"),
    ),
}

# Two log-concave Laurent polynomials whose product is not log-concave.
PRODUCT_FACTORS = (
    "(2 + 3*x1 + x1^2 + 3*x2 + 4*x1*x2 + 3*x1^2*x2 + 4*x1*x2^2)/(x1*x2)",
    "(5 + 5*x1 + x1^2 + 4*x2 + 4*x1*x2 + x1^2*x2 + x1^2*x2^2)/(x1*x2)",
)
PRODUCT_WITNESS = (23, 8, 4)

# (case, row, exponents) of a worked cluster monomial, with its numerator
# grouped by powers of x1 (descending) and listed in ascending x2 within
# each group; the displayed numerator sits over x1*x2^3*x3^2.
WORKED_MONOMIAL = ("straightforward", 13, (1, 1, 1))
WORKED_NUMERATOR_ROWS = ((1, 2, 1), (3, 5, 2), (3, 4, 1), (1, 1))
WORKED_DENOMINATOR = (1, 3, 2)
