"""Cech complexes, the domination poset of simplicial complexes, and the Cech
stratification of Ran space."""

import json

from ._core import (
    CapExceeded,
    PreconditionError,
    SimplicialComplex,
    ValidationError,
    are_isomorphic,
    canonical_form,
    canonical_key,
    cech_complex,
    dominates,
    hasse_dot,
    hausdorff,
    local_map,
    meb,
)
from . import _core


def enumerate_classes(n_max):
    """Universe of iso-classes on up to n_max vertices as a dict."""
    return json.loads(_core.enumerate_json(n_max))


def hasse(n_max):
    return json.loads(_core.hasse_json(n_max))


def cech_filtration(points, max_dim=None):
    return json.loads(_core.cech_filtration_json(points, max_dim))


def stratum(points, radius):
    """Stratum label with the safe ball radius and its case."""
    return json.loads(_core.stratum_json(points, radius))


def cech_path(points, t_max):
    return json.loads(_core.cech_path_json(points, t_max))


def zigzag(path, resolution=1e-3, as_filtration=False):
    """Zigzag diagram of a path given as a dict in the path JSON format."""
    return json.loads(_core.zigzag_json(json.dumps(path), resolution, as_filtration))


def frontier_demo(samples=10000, probe_radius=0.05, seed=0):
    return json.loads(_core.frontier_demo_json(samples, probe_radius, seed))


__all__ = [
    "CapExceeded",
    "PreconditionError",
    "SimplicialComplex",
    "ValidationError",
    "are_isomorphic",
    "canonical_form",
    "canonical_key",
    "cech_complex",
    "cech_filtration",
    "cech_path",
    "dominates",
    "enumerate_classes",
    "frontier_demo",
    "hasse",
    "hasse_dot",
    "hausdorff",
    "local_map",
    "meb",
    "stratum",
    "zigzag",
]
