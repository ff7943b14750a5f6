"""Exact enumeration of lozenge tilings of dented, barriered and halved
hexagons, with a verification harness for their product formulas and
shuffling ratios."""

from .counting import (
    CapExceeded,
    DualGraph,
    Tiling,
    clear_count_cache,
    count_reflective,
    count_tilings,
    count_tilings_oracle,
    dual_graph,
    enumerate_tilings,
    free_axis_positions,
    kuo_counts,
)
from .formulas import (
    DELTA_KINDS,
    QUARTERED_VARIANTS,
    RATIO_FAMILIES,
    RatioSpec,
    ciucu,
    clp,
    delta,
    h2,
    pp,
    proctor,
    quartered,
    shuffle_ratio,
)
from .lattice import (
    LozengePlacement,
    Orient,
    TriangleCell,
    canonical_orient,
    down,
    is_canonical,
    lozenge_between,
    neighbors,
    up,
)
from .regions import (
    FAMILIES,
    InvalidSpec,
    Region,
    RegionSpec,
    axis_midpoint_mirror,
    build_region,
    edge_between,
    expand_rs,
    f_spec,
    fbar_spec,
    h_spec,
    hex_spec,
    l_spec,
    lbar_spec,
    mirror_cell,
    mirror_constant,
    mirror_edge,
    p_spec,
    parse_spec,
    pprime_spec,
    reduce_reflective,
    remove_forced_lozenges,
    rs_spec,
    semihex_spec,
    spec_to_dict,
    w_spec,
    wbar_spec,
)
from .verify import (
    Cluster,
    ClusterSpec,
    ProbeReport,
    VerificationReport,
    all_passed,
    asymptotic_probe,
    check_base_cases,
    check_decomposition,
    check_fern_reduction,
    check_kuo_recurrence,
    check_shuffling,
    random_shuffle_cases,
    run_suite,
    summary_table,
)

__version__ = "0.1.0"
