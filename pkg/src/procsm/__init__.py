"""Exact intersection-theory engine for CSM classes of SNC complements."""

__version__ = "0.1.0"

from procsm.chern import (  # noqa: E402
    TotalChernClass,
    dual_chern,
    structure_sheaf_chern,
    tangent_chern,
    whitney_quotient,
)
from procsm.characteristic import (  # noqa: E402
    CompactificationDiagram,
    char_class_localization,
    compactification_compat,
    verify_main_identity,
    verify_silclaim_induction,
)
from procsm.chow_ring import (  # noqa: E402
    BlowDownMap,
    ChowClass,
    ProductAmbient,
    SurfaceAmbient,
    blow_up_surface,
    class_add,
    class_mul,
    degree,
    make_product_ambient,
    make_surface_ambient,
    pushforward_blowdown,
)
from procsm.log_csm import (  # noqa: E402
    DivisorArrangement,
    additivity_check,
    arrangement,
    csm_open,
    csm_zero,
    log_cotangent_chern,
    silred_rhs,
    stratum_csm_pushed,
)
from procsm.motivic import (  # noqa: E402
    GWElement,
    chi_compact,
    chi_compact_quadratic,
    chi_homological_quadratic,
    gw_add,
    gw_invariants,
    gw_mul,
)
