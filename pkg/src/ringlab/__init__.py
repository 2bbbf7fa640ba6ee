"""ringlab: exact computation on finite unital rings.

Construction of rings from declarative specs, canonical element sets
(idempotents, units, nilpotents, radical, center), clean-decomposition
analysis, classification into the uniqueness taxonomy, and an
executable verification suite over a catalog of small rings.
"""

from .core import (
    DEFAULT_THRESHOLD,
    ElementSet,
    FiniteRing,
    LazyRing,
    TableRing,
    ValidationReport,
    table_ring,
    validate_axioms,
)
from .errors import (
    AxiomCheckLimitError,
    BimoduleError,
    EndomorphismError,
    IdealError,
    LatticeLimitError,
    RingConstructionError,
    RinglabError,
    SizeOverflowError,
    SpecError,
    UnknownElementError,
)
from .groups import Group, cyclic, dihedral, group_from_spec, klein_four, quaternion8, symmetric3
from .construct import (
    build,
    corner_ring,
    formal_triangular,
    gf,
    group_ring,
    ideal_extension,
    matrix_ring,
    opposite_ring,
    product_ring,
    quotient_ring,
    resolve_endomorphism,
    skew_trunc_poly,
    subring_generated,
    triangular_ring,
    trivial_extension,
    trivial_morita,
    trunc_poly,
    validate_spec,
    zn,
)
from .invariants import (
    center,
    ideal_generated,
    idempotents,
    idempotents_lift_mod,
    jacobson_radical,
    left_ideals,
    maximal_left_ideals,
    maximal_right_ideals,
    nilpotents,
    right_ideals,
    two_good_elements,
    ucn0,
    unit_inverses,
    units,
)
from .elements import (
    Decomposition,
    ElementProfile,
    clean_decompositions,
    decomposition_counts,
    element_profile,
    is_uniquely_clean_element,
    is_usc_element,
    strongly_clean_decompositions,
)
from .classify import (
    Classification,
    CLASSIFICATION_FIELDS,
    IsoResult,
    check_isomorphic,
    classify,
    classify_element_summary,
)
from .polyring import (
    PolyCleanData,
    PolyRingView,
    poly_clean_set,
    poly_is_clean,
    poly_is_cusc,
    poly_view,
)
from .catalog import CatalogEntry, catalog_from_manifest, default_catalog, load_catalog_file
from .theorems import (
    CHECKS,
    SuiteContext,
    TheoremReport,
    check_closure_props,
    check_examples_1_4_and_2_3,
    check_extension_corollaries,
    check_group_ring_theorems,
    check_prop_2_1,
    check_thm_3_1,
    check_thm_3_4_and_3_9_3_10,
    check_thm_3_11,
    run_suite,
    suite_to_json,
)

__version__ = "0.1.0"
