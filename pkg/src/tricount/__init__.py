"""Exact counting, enumeration and uniform sampling of triangulations and
pointed pseudo-triangulations of planar integer point sets."""

from .analysis import BoundSequence, SweepReport, bound_sequence, report
from .errors import TricountError
from .geom import PointSet, convex_hull, validate_point_set
from .oracle import (
    EnumerationResult,
    catalan,
    collect_paths,
    enumerate_pointed_pseudotriangulations,
    enumerate_triangulations,
)
from .ptpath import (
    PTPath,
    extract_ptpath,
    is_pointed,
    pt_good_edge,
    ptpath_successors,
    validate_pseudotriangulation,
    validate_ptpath,
)
from .sampler import ReconstructedStructure, SampleRun, reconstruct, sample
from .sweep import (
    PT_SYSTEM,
    TRI_SYSTEM,
    SweepStats,
    initial_path,
    paths_cross,
    run_sweep,
    system_for,
)
from .tpath import (
    TPath,
    extract_tpath,
    flip,
    is_flippable,
    is_good_edge,
    tpath_successors,
    validate_tpath,
)

__version__ = "0.1.0"

__all__ = [
    "BoundSequence", "SweepReport", "bound_sequence", "report",
    "TricountError", "PointSet", "convex_hull", "validate_point_set",
    "EnumerationResult", "catalan", "collect_paths",
    "enumerate_pointed_pseudotriangulations", "enumerate_triangulations",
    "PTPath", "extract_ptpath", "is_pointed", "pt_good_edge",
    "ptpath_successors", "validate_pseudotriangulation", "validate_ptpath",
    "ReconstructedStructure", "SampleRun", "reconstruct", "sample",
    "PT_SYSTEM", "TRI_SYSTEM", "SweepStats", "initial_path", "paths_cross",
    "run_sweep", "system_for",
    "TPath", "extract_tpath", "flip", "is_flippable", "is_good_edge",
    "tpath_successors", "validate_tpath",
]
