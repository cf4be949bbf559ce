"""Error-correction analysis of unary codes.

Codecs for unary, thermometer, space and Golomb codes; a binary symmetric
channel; exhaustive minimum-distance decoding of the fixed-length unary code;
closed-form capacities with Monte Carlo validation; and the CC4
corner-classification network.
"""

from .bits import Bitstring, hamming_distance
from .capacity import (
    CapacityPoint,
    MonteCarloReport,
    capacity_curve,
    double_correction_capacity,
    monte_carlo_estimate,
    optimal_p,
    single_correction_capacity,
    single_correction_probability,
)
from .cc4 import Cc4Network, hidden_activations, predict, train
from .channel import ChannelParams, ErrorPattern, apply_error_pattern, enumerate_patterns, transmit
from .codec import (
    Distribution,
    GolombParams,
    UnaryVariant,
    decode_golomb,
    decode_space,
    decode_thermometer_strict,
    decode_unary,
    distribution_stats,
    encode_golomb,
    encode_space,
    encode_thermometer,
    encode_unary,
)
from .decoder import (
    Codebook,
    CorrectionCensus,
    DecodeOutcome,
    TiePolicy,
    build_codebook,
    correctable_set,
    correction_census,
    decode,
    nearest_set,
)
from .errors import (
    EmptyTrainingSet,
    Infeasible,
    InvalidDistribution,
    LengthMismatch,
    MalformedCodeword,
    NotACodeword,
    OutOfRange,
    RangeError,
    UnaryEccError,
)

__version__ = "0.1.0"
