"""Tete-a-tete ribbon graphs and the Seifert-fibered mapping tori of their monodromies."""

from .forward import Analysis, analyze
from .horizontal import HorizontalClass, horizontal_class
from .inverse import Infeasible, build_lambda, realize_tat
from .ribbon import RibbonGraph, faces, surface_invariants, validate
from .seifert import PlumbingGraph, SeifertFibering, SeifertPair
from .tat import check_tat, safe_walk, tat_map

__version__ = "0.1.0"

__all__ = [
    "Analysis", "HorizontalClass", "Infeasible", "PlumbingGraph", "RibbonGraph", "SeifertFibering",
    "SeifertPair", "analyze", "build_lambda", "check_tat", "faces", "horizontal_class", "realize_tat",
    "safe_walk", "surface_invariants", "tat_map", "validate",
]
