"""Exact chromatic symmetric and quasisymmetric functions of finite
simple graphs, with hook coefficients verified along independent routes."""

from .chromatic import (
    ESinkReport,
    SinkProfile,
    chromatic_polynomial_value,
    cqf_fundamental_via_orientations,
    cqf_monomial,
    csf_monomial,
    csf_monomial_by_colorings,
    csf_schur,
    dual_linear_extensions,
    hook_coefficient_via_orientations_t,
    hook_coefficient_via_sinks,
    sink_minimal_increasing_labeling,
    sink_profile,
    verify_e_sink_identity,
)
from .graphs import (
    Graph,
    Labeling,
    Orientation,
    acyclic_orientations,
    ascents,
    complete_graph,
    descents,
    edgeless_graph,
    is_claw_free,
    is_proper_coloring,
    load_graph,
    parse_graph_text,
    path_graph,
    proper_colorings_bounded,
    sinks,
    stable_partitions_by_type,
    star_graph,
)
from .partitions import (
    composition_from_descents,
    compositions_of,
    conjugate,
    descents_from_composition,
    dominance_leq,
    hook_partition,
    partition_of,
    partitions_of,
)
from .posets import (
    HookReport,
    Poset,
    all_posets,
    count_p_tableaux_hook,
    incomparability_graph,
    load_poset,
    parse_poset_text,
    verify_hook_proposition,
)
from .symfunc import (
    QuasisymmetricF,
    QuasisymmetricM,
    SymmetricFunctionM,
    canonical_items,
    collapse_t,
    elementary_m_expansion,
    gessel_schur_F,
    hook_coefficient_of_F,
    is_symmetric,
    m_to_e,
    m_to_s,
    monomial_to_quasi,
    qsym_F_to_M,
    qsym_M_to_F,
    schur_m_expansion,
    serialize,
    specialize_w_k,
)
from .tableaux import (
    Tableau,
    descent_set,
    ides,
    inverse_permutation,
    kostka,
    reading_word,
    standard_tableaux,
)
from .tpoly import TPoly

__version__ = "0.1.0"
