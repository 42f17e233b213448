"""Parsers, serializers, and conversions for the supported formats."""

from .clif import ClifDocument, parse_clif, serialize_clif
from .convert import (
    clif_to_fcif,
    context_from_fcif,
    context_from_table,
    fcif_from_context,
    fcif_to_clif,
    lattice_of,
)
from .fcif import FcifDocument, parse_fcif, serialize_fcif
from .sgml import parse_urc_sgml, serialize_urc_sgml
from .soif import SoifTemplate, parse_soif, serialize_soif, soif_to_records
from .table import parse_context_table, serialize_context_table
from .urc import (
    UrcLocation,
    UrcRecord,
    parse_urc,
    serialize_urc,
    urc_to_records,
)

__all__ = [
    "ClifDocument",
    "FcifDocument",
    "SoifTemplate",
    "UrcLocation",
    "UrcRecord",
    "clif_to_fcif",
    "context_from_fcif",
    "context_from_table",
    "fcif_from_context",
    "fcif_to_clif",
    "lattice_of",
    "parse_clif",
    "parse_context_table",
    "parse_fcif",
    "parse_soif",
    "parse_urc",
    "parse_urc_sgml",
    "serialize_clif",
    "serialize_context_table",
    "serialize_fcif",
    "serialize_soif",
    "serialize_urc",
    "serialize_urc_sgml",
    "soif_to_records",
    "urc_to_records",
]
