"""Exact equivalence of exponential sums with real frequencies.

Frequencies are rational vectors over declared ground generators, so every
decision (natural basis, equivalence, class membership) runs in exact rational
arithmetic. Value sets are sampled numerically with numpy/scipy.
"""

from .congruence import (
    Feasible,
    Infeasible,
    PhaseSystem,
    check_certificate,
    column_hnf,
    row_modulus,
    solve_phase_system,
)
from .document import dump_sum, load_sum, parse_document, serialize_sum
from .equivalence import (
    EquivVerdict,
    admissible_residues,
    align,
    check_verdict,
    decide_equiv,
    decide_equiv_prop1_all_n,
    generate_member,
    residues_from_shift,
    shift_for_residues,
    translation_parameters,
)
from .errors import *  # noqa: F401,F403
from .exponents import (
    BasisData,
    ChangeOfBasis,
    ExponentSet,
    Frequency,
    GroundGeneratorSet,
    change_of_basis,
    natural_basis,
)
from .sums import (
    ExactPolar,
    ExponentialSum,
    NumericComplex,
    evaluate,
    evaluate_many,
    recover_coefficient,
)
from .valuesets import (
    ValueCloud,
    compare_strip_values,
    directed_hausdorff,
    eval_aux,
    eval_aux_many,
    grid_tolerance,
    hausdorff,
    sample_line,
    sample_torus,
    sample_torus_in_basis,
    verify_lemma1,
    verify_prop3,
    verify_prop4,
    verify_theorem1,
)

__version__ = "0.1.0"
