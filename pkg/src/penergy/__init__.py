"""Graph p-energies: spectra, Coulson-type integral formulas, bounds,
and exhaustive extremal verification over small connected graphs."""

from .graphs import (
    CanonicalForm,
    Graph,
    Graph6Error,
    canonical_form,
    complete,
    cycle,
    emit_graph6,
    from_edges,
    is_bipartite,
    is_complete_graph,
    is_connected,
    is_path_graph,
    is_star_graph,
    named_graph,
    parse_graph6,
    path,
    relabel,
    star,
)
from .spectral import (
    CharPoly,
    Spectrum,
    char_poly_exact,
    closed_walk_count,
    eigenvalues,
    eval_at_complex,
    log_abs_poly_ix_sq,
    named_charpoly,
    p_energy,
    schatten_norm,
    spectral_radius,
)
from .coulson import (
    PsiProduct,
    QuadratureResult,
    cj_difference,
    coulson_energy,
    du1_energy,
    du2_difference,
    integrate_half_line,
    log_ratio_integrand,
    psi_eval,
    psi_log_ratio_integrand,
    psi_product,
)
from .bounds import (
    BoundReport,
    GridMarginReport,
    bipartite_lower_check,
    e4_check,
    hong_check,
    inequality16_probe,
    key_claim_check,
    p_upper_check,
)
from .enumeration import (
    VerificationReport,
    connected_graph_list,
    connected_graphs,
    ingest_graph6,
    verify_extremal,
    verify_extremal_grid,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
