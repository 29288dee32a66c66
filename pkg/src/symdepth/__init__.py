"""Exact depth, Stanley depth, and symbolic-power stability toolkit for
squarefree monomial ideals."""

from .complexes import HomologyProfile, SimplicialComplex, complex_of_ideal
from .depth import (
    BettiTable,
    DegreePair,
    DepthWitness,
    EngineDisagreement,
    betti_table,
    depth,
    depth_via_betti,
    depth_via_takayama,
    takayama_complex,
    upper_koszul_complex,
)
from .monomial import MonomialIdeal, unit_ideal, zero_ideal
from .sdepth import (
    INFINITY,
    BudgetExceeded,
    CharacteristicPoset,
    Interval,
    IntervalPartition,
    SdepthResult,
    characteristic_poset,
    sdepth,
    sdepth_at_least,
    sdepth_from_poset,
    split_by_variable,
)
from .stability import (
    CheckResult,
    MatroidReport,
    SequenceReport,
    StabilityReport,
    analyze_stability,
    matroid_report,
    sequence,
    verify_colon_identity,
    verify_depth_comparison,
    verify_power_membership,
    verify_sdepth_comparison,
    verify_splitting_bound,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
