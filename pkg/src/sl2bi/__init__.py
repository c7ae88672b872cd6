"""Exact computations with the sl2 skew group ring, Bannai-Ito modules and odd graphs."""
from .exactlinalg import BACKEND, Matrix
from .skewring import RingElement, TensorElement, normal_form, parse_element
from .sl2modules import IrrLabel, Representation, build_irreducible, powerset_rep, tensor_rep
from .bannaiito import BIModuleParams, BITriple, build_bi_module, identify_irreducible, leonard_check
from .v1functor import bi_on_v1, identify_v1, v1_of
from .oddgraph import build_odd_graph, decompose_standard_module

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BIModuleParams",
    "BITriple",
    "IrrLabel",
    "Matrix",
    "Representation",
    "RingElement",
    "TensorElement",
    "bi_on_v1",
    "build_bi_module",
    "build_irreducible",
    "build_odd_graph",
    "decompose_standard_module",
    "identify_irreducible",
    "identify_v1",
    "leonard_check",
    "normal_form",
    "parse_element",
    "powerset_rep",
    "tensor_rep",
    "v1_of",
]
