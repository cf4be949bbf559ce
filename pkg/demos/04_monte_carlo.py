"""Simulate the binary symmetric channel and compare with the closed forms."""

from unary_ecc import TiePolicy, monte_carlo_estimate

report = monte_carlo_estimate(5, 0.2, 10**6, seed=0, policy=TiePolicy.PAPER_PARITY)
print(report.render())

z_cond = (report.empirical_conditional - report.expected_conditional()) / report.standard_error
z_uncond = (report.empirical_unconditional - report.expected_unconditional()) / report.standard_error_unconditional
print(f"z (conditional) = {z_cond:+.2f}, z (unconditional) = {z_uncond:+.2f}")

# Same seed and stream count -> identical report
a = monte_carlo_estimate(5, 0.2, 100_000, seed=7, streams=4)
b = monte_carlo_estimate(5, 0.2, 100_000, seed=7, streams=4)
print("reproducible:", a == b)

# Sweep p: the corrected fraction peaks near 1/n
for p in (0.05, 0.1, 0.2, 0.3, 0.5):
    r = monte_carlo_estimate(5, p, 200_000, seed=1)
    print(f"p={p:.2f}  corrected/trials={r.empirical_unconditional:.4f}  expected={r.expected_unconditional():.4f}")
