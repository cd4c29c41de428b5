"""Exact n-systems, canvases, Diophantine exponents, and the n=3 chain and
six-exponent spectrum machinery."""

from .core import (
    InputError,
    PgnError,
    TOOL_VERSION,
    comp_inf_sup,
    dec12,
    fmt,
    fmt_point,
    hull2,
    parse_point,
    phi_sort,
    rat,
    set_dist,
)
from .canvas import (
    Canvas,
    CanvasReport,
    build_system,
    canvas_from_json,
    canvas_to_json,
    from_system,
    reduce,
    validate,
)
from .nsystem import (
    Event,
    FloatNSystem,
    NSystem,
    SystemReport,
    division_data,
    export_graph,
    glue,
    power_transform,
    require_valid,
    rescale,
    restrict,
    selfsim_extend,
    switch_numbers,
    system_from_json,
    system_to_json,
    validate_float_system,
    validate_system,
)
from .deform import (
    ReparamMap,
    adjust_segment,
    extend_stages,
    extend_to,
    extension_bounds,
    selfsimilarize,
    translate_by,
)
from .exponents import (
    FSet,
    LinearMap,
    SpectrumPoint6,
    f_set,
    mu_T,
    phi_preset,
    psi_preset,
    six_exponents,
    spectrum_point_from_json,
)
from .chains3 import (
    ClosedChain,
    ElementaryPath,
    canonicalize_chain,
    chain_from_json,
    chain_from_system,
    chain_to_json,
    classify,
    densify_path,
    extract_paths,
    join_chains,
    path_from_json,
    path_inf_sup,
    path_to_json,
    plot_chain,
    system_from_chain,
    validate_chain,
    validate_path,
)
from .spectrum6 import (
    ConstraintReport,
    PathConstruction,
    RealizeResult,
    check_dual,
    check_primal,
    construct_path_lower,
    construct_path_upper,
    dualize,
    jarnik_solve,
    membership,
    realize,
    sample_spectrum,
)

__version__ = TOOL_VERSION

__all__ = [name for name in dir() if not name.startswith("_")]
