"""Tour of the code families: unary, thermometer, space and Golomb."""

from unary_ecc import (
    UnaryVariant,
    decode_golomb,
    encode_golomb,
    encode_space,
    encode_thermometer,
    encode_unary,
)
from unary_ecc.codec import Distribution, distribution_stats

# Variable-length unary, both conventions
for v in range(6):
    print(v, encode_unary(v), encode_unary(v, UnaryVariant.ZEROS_THEN_ONE))

# The fixed-length unary code used for error correction is a thermometer code
print([encode_thermometer(v, 5) for v in range(6)])

# Space coding: mark a slot, fill everything to its left with ones
print({v: encode_space(v, 4) for v in range(1, 5)})

# Golomb-8: unary quotient + 3-bit remainder
for N in range(8, 14):
    code = encode_golomb(N, 8)
    print(N, code, decode_golomb(code, 8))

# m=5 is not a power of two, so the remainder uses truncated binary
print([encode_golomb(N, 5) for N in range(6)])

# Unary is optimal for p(i) = 2^-i: expected length equals entropy
dist = Distribution.truncated(lambda i: 2.0 ** -i, 40)
stats = distribution_stats(dist)
print(f"E[len]={stats.expected_length:.12f}  H={stats.entropy:.12f}  tail={dist.residual:.3g}")
