"""Corner statistics of lattice-path shuffles: enumeration, closed forms,
bijections, (x+1)-positivity and a brute-force verification harness."""

from .bijections import (
    BlueRedColoring,
    ToggleClass,
    coloring_decode,
    coloring_encode,
    flip,
    shuffle_to_word,
    toggle,
    toggle_class,
    word_to_shuffle,
)
from .enumeration import (
    Distribution,
    binary_words,
    distribution,
    gf_abs_signed,
    gf_peak_Q,
    gf_peak_shuffleclass,
    gf_signed_Q,
    parity_difference,
    quarter_planar_loops,
    quarter_planar_set,
    shuffles,
    signed_peak_closed_form,
    super_catalan,
)
from .paths import ClassParams, Step, complement, is_quarter_planar, parse_word, projections
from .polynomials import (
    IntPoly,
    ShiftedCoeffs,
    balanced_loop_shifted,
    bin_lower,
    bin_lower_shifted,
    bin_upper,
    bin_upper_shifted,
    from_shifted_basis,
    is_toggle_buildable,
    is_x_plus_1_positive,
    to_shifted_basis,
    toggle_basis_decompose,
)
from .report import VerdictReport, emit_report
from .stats import (
    absolute_even_count,
    even_count,
    in_vert,
    odd_indexed_pairs,
    pattern_count,
    peak_count,
    shifted_even_count,
    shifted_in_vert,
    signed_peak_count,
)

__version__ = "0.1.0"
