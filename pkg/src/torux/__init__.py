"""torux: exact classification of hyperbolic 2-torus automorphisms, their
continued-fraction invariants, and their simplest Markov partitions."""

from .qfield import Rational, RadicandMismatch, Surd
from .gl2z import (
    EigenData,
    InvalidDeterminant,
    MatZ2,
    NotHyperbolic,
    eigen_data,
    fixpoint_count,
    fixpoint_lattice_basis,
    fixpoints,
    generators,
    is_hyperbolic,
)
from .cfrac import (
    CFExpansion,
    Convergent,
    RationalInput,
    apply_T,
    apply_T_cf,
    best_approx_one_sided,
    best_approx_two_sided,
    canonical_period,
    convergents,
    evaluate,
    expand,
    semiconvergent,
)
from .conjugacy import (
    ConjugacyWitness,
    NotConjugate,
    QuadraticForm,
    are_conjugate_gl,
    are_conjugate_sl,
    centralizer_generator,
    centralizer_power,
    check_diagram,
    conjugate_by,
    find_conjugator,
    form_action,
    from_form,
    self_conjugator_shift,
    to_form,
)
from .geometry import Frame, Rect
from .partitions import (
    Counterexample15,
    TConfiguration,
    TorusPartition,
    TransitionGraph,
    ValidationReport,
    VertexPreMp,
    build_qmp,
    classify_type,
    count_classes,
    counterexample_15,
    edge_type_shifts,
    eigenframe,
    enumerate_vertex_premps,
    map_partition,
    refine,
    t_configuration,
    transition_graph,
    validate_partition,
    vertex_premp,
)
from .symbolic import (
    Cylinder,
    DoublingCode,
    EntropyCert,
    MarkovSubset,
    MeasureSpec,
    SymbolSequence,
    arc_F_N,
    cylinder_measure,
    doubling_code,
    doubling_decode,
    encode_point,
    encode_point_boxes,
    encode_point_naive,
    entropy,
    fair_coin,
    markov_cylinder_measure,
    markov_from_graph,
    rho_window,
    shift_preimage,
    uniform_markov_chain,
)
from .mixing import cat_mask, mixing_report

__version__ = "0.1.0"
