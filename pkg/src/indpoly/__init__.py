"""Exact independence polynomials of small graphs, with class recognizers
and executable checks of coefficient inequalities."""

__version__ = "0.1.0"

from .graph import Graph, GraphError, make_graph
from .independence import InstanceTooLarge, independence_polynomial, omega_profile
from .polyseq import CoeffSeq, shape

__all__ = [
    "CoeffSeq",
    "Graph",
    "GraphError",
    "InstanceTooLarge",
    "independence_polynomial",
    "make_graph",
    "omega_profile",
    "shape",
]
