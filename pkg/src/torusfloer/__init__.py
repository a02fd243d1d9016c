"""Exact Heegaard Floer, Casson, and signature invariants for +1 and -1
surgeries on torus knots T(p, q).

All arithmetic is exact (integers and Fractions).  Every headline invariant is
computed along several independent routes and the package refuses to report
values whose routes disagree.
"""

__version__ = "0.1.0"

from .floer import (
    CrossCheckError,
    DualityReport,
    HFDecomposition,
    SawtoothDiagram,
    Tower,
    casson_minus_one,
    casson_plus_one,
    duality_check,
    grading_identity_holds,
    hf_minus_one,
    hf_plus_one,
    sawtooth_from_sequence,
    tau_minus_one_profile,
)
from .numtheory import (
    dedekind_sum,
    dedekind_sum_general,
    divides_indicator,
    divides_indicator_pair,
    mod_inverse_neg,
    sawtooth,
    sawtooth_partial_sum,
)
from .report import InvariantReport, build_report, coprime_pairs, table_rows
from .seifert import (
    SeifertData,
    TauProfile,
    d_via_dedekind,
    d_via_gap_count,
    d_via_tau,
    k2_plus_s,
    plus_one_surgery,
    tau_compact,
    tau_compact_alt,
    tau_direct,
    tau_direct_values,
    tau_profile,
    tau_step,
    tau_step_sawtooth,
)
from .semigroup import (
    AlexanderData,
    CoprimePair,
    SemigroupData,
    Witness,
    alexander,
    build_semigroup,
    count_gaps_ge,
    membership,
)
from .signature import (
    InequalityReport,
    SignatureReport,
    SpectrumData,
    classical_signature,
    d_via_signature,
    gap_count_identity_check,
    inequality_suite,
    levine_tristram,
    mu_plus,
    spectrum,
    tilde_c,
)

__all__ = [name for name in dir() if not name.startswith("_")]
