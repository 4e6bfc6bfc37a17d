"""Exact Leonard-trio realization, q-Racah and Wilson functions, and identity verification."""
from .errors import ConfigError, GenericityError, GenericityExhausted, NondegeneracyError, PoleError
from .kernels import BACKEND as KERNEL_BACKEND
from .linalg import DenseMatrix, band_predicates
from .params import HeunConstants, ParameterSet, heun_constants
from .qaskey import QRacahParams, qracah_eval
from .qseries import PhiSpec, phi, q_pochhammer, q_pochhammer_multi, very_well_poised_phi
from .report import VerificationReport
from .scalar import SCALAR_BACKEND, Q
from .trio import TrioRealization, build_realization, overlap_w, overlap_w_partner
from .wilson import WilsonParams, wilson_eval

__version__ = "0.1.0"

__all__ = [
    "ConfigError", "GenericityError", "GenericityExhausted", "NondegeneracyError", "PoleError",
    "KERNEL_BACKEND", "SCALAR_BACKEND", "DenseMatrix", "band_predicates", "HeunConstants", "ParameterSet",
    "heun_constants", "QRacahParams", "qracah_eval", "PhiSpec", "phi", "q_pochhammer", "q_pochhammer_multi",
    "very_well_poised_phi", "VerificationReport", "Q", "TrioRealization", "build_realization", "overlap_w",
    "overlap_w_partner", "WilsonParams", "wilson_eval", "__version__",
]
