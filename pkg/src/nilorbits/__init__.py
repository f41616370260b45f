"""Nilpotent orbits of classical Lie algebras and their equivariant real structures."""

from .core import (
    DiagramAutomorphism,
    DomainError,
    DynkinDiagram,
    Partition,
    SimpleType,
    WeightedDiagram,
    apply_automorphism,
    build_dynkin,
    diagram_automorphisms,
    dominance_leq,
    transpose_partition,
)
from .decision import (
    ClassificationReport,
    DecisionReport,
    ProductOrbit,
    admits_real_structure_product,
    admits_real_structure_simple,
    aut_shape,
    classify_orbits,
)
from .orbits import (
    OrbitLabel,
    closure_leq,
    enumerate_orbits,
    half_spectrum,
    hasse_diagram,
    is_very_even,
    normality_status,
    orbit_dimension,
    validate_label,
    weighted_dynkin,
)
from .realforms import (
    RealFormSpec,
    SemisimpleSpec,
    StarAction,
    TwistClass,
    catalog_forms,
    parse_form,
    product_structure,
    sigma_D_of_form,
    twist_class,
)

__version__ = "0.1.0"
