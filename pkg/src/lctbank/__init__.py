"""Two-channel paraunitary filter banks in the discrete-time LCT domain."""

from .construct import (
    FilterBank,
    VerificationReport,
    bank_from_prototype,
    build_bank,
    derive_h1,
    derive_synthesis,
    lift_prototype,
    modulation_matrix,
    paraunitary_error,
    polyphase_matrix,
    power_symmetry_error,
    verify_bank,
)
from .design import design_halfband, design_prototype, spectral_factor
from .run import (
    analysis,
    generate_multitone,
    modulation_prediction,
    polyphase_run,
    reconstruct,
    run_pr_check,
    synthesis,
)
from .sampling import (
    PolyKind,
    PolyphasePair,
    delay_pow,
    downsample,
    lct_convolve,
    polyphase_merge,
    polyphase_split,
    upsample,
)
from .transform import (
    FrequencyGrid,
    LctParams,
    Signal,
    Spectrum,
    dtlct,
    quasi_period_factor,
    time_chirp,
    validate_params,
)

__version__ = "0.1.0"
