from .interface import Generated, Reduction, ReductionCertificate, TrialResult
from .registry import discover_reductions, get_reduction
