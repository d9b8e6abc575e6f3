"""Reference values for the worked rank-one example at twisting weight five.

These are the stored expectations that the verification suite compares
against; exponent keys are (first block, second block) in the variable order
of each coordinate system.
"""

from fractions import Fraction

# Casimir eigenvalues x(x+2) at x = -1, 0, 1, 2, 3.
CASIMIR_TABLE = {-1: -1, 0: 0, 1: 3, 2: 8, 3: 15}

# Weights of the six-dimensional irreducible, all multiplicity one.
WEIGHTS_K5 = [-5, -3, -1, 1, 3, 5]

# Defining conics in the (C2, Mtilde1) coordinates, keyed by orbit.
TILDE_FACTORS_K5 = {
    1: {(2, 0): 1, (1, 1): -2, (0, 2): 1, (1, 0): -2, (0, 1): -2, (0, 0): -3},
    3: {(2, 0): 1, (1, 1): -2, (0, 2): 1, (1, 0): -18, (0, 1): -18, (0, 0): 45},
    5: {(2, 0): 1, (1, 1): -2, (0, 2): 1, (1, 0): -50, (0, 1): -50, (0, 0): 525},
}

# The same ideal in the shifted (C2, M1) coordinates.
ROZHKOVSKAYA_FACTORS_K5 = {
    1: {(0, 2): 1, (0, 1): 68, (1, 0): -4, (0, 0): 1152},
    3: {(0, 2): 1, (0, 1): 52, (1, 0): -36, (0, 0): 640},
    5: {(0, 2): 1, (0, 1): 20, (1, 0): -100},
}

# Leading forms presenting the graded algebra, in (c2, M1).
GRADED_FACTORS_K5 = {
    1: {(0, 2): 1, (1, 0): -4},
    3: {(0, 2): 1, (1, 0): -36},
    5: {(0, 2): 1, (1, 0): -100},
}

# Shift between the two filtered coordinate systems at k = 5.
TILDE_SHIFT_K5 = 35

# Casimir values with singular fibers.
DISCRIMINANT_K5 = [-1, 0, 3, 8, 15]

# Block decompositions of the tensor product at small highest weights.
# Each entry is the ordered (label, character) list.
DECOMPOSITIONS_K5 = {
    -1: [("P:-6", 24), ("P:-4", 8), ("P:-2", 0)],
    0: [("P:-5", 15), ("P:-3", 3), ("M:-1", -1), ("M:5", 35)],
    1: [("P:-4", 8), ("P:-2", 0), ("M:4", 24), ("M:6", 48)],
    2: [("P:-3", 3), ("M:-1", -1), ("M:3", 15), ("M:5", 35), ("M:7", 63)],
    3: [("P:-2", 0), ("M:2", 8), ("M:4", 24), ("M:6", 48), ("M:8", 80)],
}

# Central character multisets {value: multiplicity} of the tensor product.
TENSOR_CHARACTERS_K5 = {
    -1: {0: 2, 8: 2, 24: 2},
    0: {-1: 1, 3: 2, 15: 2, 35: 1},
    1: {0: 2, 8: 2, 24: 1, 48: 1},
}

FIBER_DIMENSION_K5 = 6
FIBER_DIMENSION_A2_ADJOINT = 10

# Coefficient/generator swap on the pair of representatives (3, 2):
# images are (-2 - 2, -3 - 2) with characters (8, 15).
PHI_EXAMPLE = {"input": (3, 2), "reps": (-4, -5), "characters": (8, 15)}


def as_fraction_map(d):
    return {k: Fraction(v) for k, v in d.items()}
