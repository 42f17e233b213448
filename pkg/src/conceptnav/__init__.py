"""Concept-lattice toolkit for resource meta-information.

Ingests raw metadata records (summary-object templates, resource
characteristics, TEI-like markup), interprets them through conceptual
scaling into formal contexts, computes complete concept lattices,
converts between the context and lattice interchange formats, and lays
lattices out as line diagrams for the command line, files, and an
interactive exploration service.
"""

from .core import (
    AttributeTerm,
    Concept,
    ConceptLattice,
    FormalContext,
    Op,
    OrderedContext,
    enumerate_concepts,
    order_close_incidence,
)
from .errors import (
    ConceptNavError,
    CycleError,
    MagnitudeError,
    ParseError,
    ScalingError,
    ValidationError,
)
from .scaling import RawRecord, Scale, ScaleKind, ScaleSet, apply_scales

__all__ = [
    "AttributeTerm",
    "Concept",
    "ConceptLattice",
    "ConceptNavError",
    "CycleError",
    "FormalContext",
    "MagnitudeError",
    "Op",
    "OrderedContext",
    "ParseError",
    "RawRecord",
    "Scale",
    "ScaleKind",
    "ScaleSet",
    "ScalingError",
    "ValidationError",
    "apply_scales",
    "enumerate_concepts",
    "order_close_incidence",
]

__version__ = "0.1.0"
