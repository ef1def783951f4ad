"""Recognition, counting and extraction tools for graphs with forbidden induced patterns."""
from ._accel import backend
from .errors import BlockadeError, CertificateError, DomainError, EHGraphsError, InputError, ParseError
from .graph import Graph, OrderedGraph, Tournament, complement, induced, reverse_order, substitute, substitute_ordered

__version__ = "0.1.0"
