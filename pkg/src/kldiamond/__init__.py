"""Exact Kazhdan-Lusztig coefficients, moment graphs and diamond closures
for finite simply-laced Weyl groups."""

from .coxeter import (
    ConfigurationError,
    CoxeterSpec,
    CoxeterSystem,
    EmptyIntervalError,
    GroupElement,
    build_system,
)
from .kl import KLContext
from .moment_graph import EdgeSet, IntervalGraph, build_interval_graph, diamond_closure, g_min
from .polynomial import IntPolynomial

__all__ = [
    "ConfigurationError",
    "CoxeterSpec",
    "CoxeterSystem",
    "EdgeSet",
    "EmptyIntervalError",
    "GroupElement",
    "IntPolynomial",
    "IntervalGraph",
    "KLContext",
    "build_interval_graph",
    "build_system",
    "diamond_closure",
    "g_min",
]
