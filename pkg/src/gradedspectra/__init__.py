"""Graded prime and second spectra of finite graded rings and modules.

Build finite graded commutative rings and modules from small description
trees, enumerate their graded ideal/submodule lattices, compute spectra
with their Zariski topologies, radicals and socles, and run the bundled
verification suites over generated corpora.
"""

from .errors import (
    GradedAlgebraError,
    ImproperIdeal,
    InvalidGrading,
    NonHomogeneousGenerator,
    NotAModule,
    NotARing,
    ParseError,
    PreconditionFailed,
    RingMismatch,
    SizeExceeded,
    ValidationError,
    ZeroModule,
    ZeroRing,
)
from .groups import FiniteAbelianGroup
from .kernels import BACKEND_NAME
from .rings import (
    GradedIdeal,
    GradedRing,
    enumerate_graded_ideals,
    graded_jacobson_radical,
    graded_radical,
    hom_power_in,
    homogeneous_components,
    ideal_combine,
    ideal_generated,
    is_graded_field,
    is_graded_ideal,
    is_graded_prime,
    jacobson_radical_e,
    make_ideal,
    max_spectrum,
    quotient_ring,
)
from .constructors import build_ring
from .spectrum import (
    basic_open_sets,
    build_topology,
    graded_prime_spectrum,
    has_property_radical_fg,
    intersection_ideal,
    irreducible_components_of_variety,
    is_irreducible,
    is_noetherian_space,
    minimal_prime_divisors,
    radical_decomposition,
    radical_fg_witness,
    spectrum_closure,
    variety,
)
from .modules import has_property_zariski_socle_fg
from .modules import (
    GradedModule,
    GradedSubmodule,
    ann_hom_mask,
    ann_in_module,
    ann_in_ring,
    annihilator_variety,
    build_module,
    containment_variety,
    enumerate_graded_submodules,
    graded_submodule_containing,
    is_comultiplication,
    is_cotop,
    is_faithful,
    is_second,
    is_secondful,
    is_secondless,
    is_weak_comultiplication,
    make_submodule,
    module_annihilator,
    module_predicates,
    natural_map,
    points_sum,
    quotient_module,
    quotient_spectrum_points,
    second_basic_open_sets,
    second_socle,
    second_spectrum,
    second_topology,
    submodule_generated,
    zariski_socle,
    zariski_socle_decomposition,
    zariski_socle_fg_witness,
)

__version__ = "0.1.0"
