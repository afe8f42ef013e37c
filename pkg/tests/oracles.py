"""Frozen expected values, written down before the implementation was exercised.

Exact constants are stored in the rendering grammar of ``ExactConst.render``.
Floating oracles are either closed forms evaluated by mpmath or hand-derived
rationals; none of them is produced by the package under test.
"""

from fractions import Fraction

# sum_k C(2k,k)/(16^k (2k+n+1)) for even n
X_HALF_P1 = {
    0: "1/3*pi",
    2: "2/3*pi - sqrt(3)",
    4: "2*pi - 7/2*sqrt(3)",
    6: "20/3*pi - 12*sqrt(3)",
    8: "70/3*pi - 169/4*sqrt(3)",
    10: "84*pi - 1523/10*sqrt(3)",
}

# sum_{k>=1} 1/(C(2k,k) k (2k+n)) for even n
X_HALF_P2 = {
    0: "1/36*pi^2",
    2: "1/18*pi^2 - 1/6*pi*sqrt(3) + 1/2",
    4: "1/6*pi^2 - 7/12*pi*sqrt(3) + 13/8",
    6: "5/9*pi^2 - 2*pi*sqrt(3) + 197/36",
}

CENTRAL_BINOM = {0: 1, 1: 2, 5: 252}
ODD_SQUARE_PARTIAL = {0: Fraction(0), 1: Fraction(1), 3: Fraction(259, 225)}
EVEN_SQUARE_PARTIAL = {1: Fraction(0), 2: Fraction(1, 4), 4: Fraction(49, 144)}
POCHHAMMER = {(3, 0): 1, (Fraction(1, 2), 2): Fraction(3, 4), (1, 5): 120}

# x = 1 constants
P2_N1_AT_ONE = "2"  # sum 4^k/(C(2k,k) k (2k+1))
P3_N0_AT_ONE = "1/48*pi^3"

# rescaled x = 1 sums at n = 0: the limits' base case
SCALED_AT_ZERO = {1: "pi", 2: "1/2*pi^2", 3: "1/3*pi^3", 4: "1/4*pi^4"}

# |scaled - pi^2| * sqrt(n) for the p = 2 rescaled sum tends to 2*sqrt(2*pi)
P2_ERROR_CONSTANT = 5.0132565492620005

# inner limits at x = 1/2
INNER_78_HALF = "2/sqrt(3)"
INNER_79_HALF = "pi*sqrt(3)/9"
