# Copyright 2026 The pathspace Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Path graphs of 2-connected graphs, cycle spaces and Δ*-closures.

Paths are vertex lists and cycles are sorted lists of edge indices. Report
producing calls return decoded JSON.
"""

import json as _json

from ._core import (
    Graph,
    PathGraph,
    PathLimitExceeded,
    PathspaceError,
    are_adjacent,
    bounded_route,
    complete_graph,
    cycle_graph,
    cycle_space_dimension,
    cycles_through_edge,
    cycles_through_vertex,
    delta_star_closure,
    enumerate_all_cycles,
    enumerate_uv_paths,
    internal_faces,
    interpolate,
    is_cycle,
    is_delta_star_dense,
    k4_fixture,
    merge_walk,
    path_graph,
    spans_cycle_space,
    theorem_ids,
)
from . import _core

__version__ = "0.1.0"


def has_property_delta_star(graph, sigma, cycles):
    """Returns (holds, witnesses); one witness dict per unicycle when it holds."""
    holds, witnesses = _core.has_property_delta_star(graph, sigma, cycles)
    return holds, _json.loads(witnesses)


def run_theorem_suite(corpus="k4", theorems=(), max_n=5, count=50, seed=None):
    """Runs the theorem checks on a named corpus and returns the report dict."""
    kwargs = {"corpus": corpus, "theorems": list(theorems), "max_n": max_n, "count": count}
    if seed is not None:
        kwargs["seed"] = seed
    return _json.loads(_core.run_theorem_suite(**kwargs))


def search_tightness_witness(max_n=5):
    """Best (diameter, distance) pair over 2-connected graphs up to max_n vertices."""
    return _json.loads(_core.search_tightness_witness(max_n))


__all__ = [
    "Graph",
    "PathGraph",
    "PathLimitExceeded",
    "PathspaceError",
    "are_adjacent",
    "bounded_route",
    "complete_graph",
    "cycle_graph",
    "cycle_space_dimension",
    "cycles_through_edge",
    "cycles_through_vertex",
    "delta_star_closure",
    "enumerate_all_cycles",
    "enumerate_uv_paths",
    "has_property_delta_star",
    "internal_faces",
    "interpolate",
    "is_cycle",
    "is_delta_star_dense",
    "k4_fixture",
    "merge_walk",
    "path_graph",
    "run_theorem_suite",
    "search_tightness_witness",
    "spans_cycle_space",
    "theorem_ids",
]
