"""Exhaustive check of the (n-1)^2 single-error count.

Every codeword of the length-n thermometer code is hit with every single-bit
error, decoded by minimum distance, and the successes are counted.
"""

from unary_ecc import TiePolicy, correction_census
from unary_ecc.decoder import COMPLETE_POLICIES, render_census_table, words_at_distance

print(render_census_table(correction_census(5, 1, TiePolicy.PAPER_PARITY)))

# The total does not depend on how ties are broken
for n in range(1, 11):
    totals = {p.value: correction_census(n, 1, p).total for p in COMPLETE_POLICIES}
    print(n, (n - 1) ** 2, totals)

# Rejecting ties instead of guessing corrects only the unambiguous words
print("reject-ties, n=5:", correction_census(5, 1, TiePolicy.REJECT_TIES).total)

# Double errors at n=5: ten words sit at distance exactly 2 from the code
print(render_census_table(correction_census(5, 2, TiePolicy.LOWEST_VALUE)))
print("words at distance 2:", words_at_distance(5, 2))

# For even n the per-codeword split differs from the odd-n pattern,
# though the total is still (n-1)^2
print("n=6 counts:", correction_census(6, 1, TiePolicy.PAPER_PARITY).counts)
