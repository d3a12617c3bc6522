# # Minimum-edge ratios for larger alpha
#
# For each construction and each alpha we find the sparsest floor(alpha n)
# subset and compare the ratio e/n^2 with the two closed forms: the complete
# bipartite value (2 alpha - 1)/4 and the C_5 blow-up value (5 alpha - 2)/25.

import sys
from fractions import Fraction

from sparsehalves import beta_table, blow_up, complete_bipartite, generalized_andrasfai, petersen
from sparsehalves.density import beta_table_csv

constructions = [
    ("K(10,10)", complete_bipartite(10, 10)),
    ("F(2,2)x4", blow_up(generalized_andrasfai(2, 2), 4).result),
    ("petersen x2", blow_up(petersen(), 2).result),
]
alphas = [Fraction(1, 2), Fraction(3, 5), Fraction(7, 10), Fraction(4, 5)]
sys.stdout.write(beta_table_csv(beta_table(constructions, alphas)))
