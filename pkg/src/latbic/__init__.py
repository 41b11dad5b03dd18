"""Bicircular matroids meet lattice path matroids: constructions, the
excluded-minor catalog, template graph families, and three independent
recognition routes for deciding when a bicircular matroid is a lattice
path matroid."""

from .multigraph import (Multigraph, parse_graph, format_graph, graph_from_edges,
                         contract_edge, delete_edge, subdivide_edge, smooth,
                         block_structure)
from .matroid import (Matroid, from_independence, is_isomorphic, has_minor,
                      fundamental_flats, are_clones, two_sum, cosimplify,
                      extend_parallel, extend_series, extend_clone,
                      parse_matroid, format_matroid, uniform)
from .bicircular import bicircular, is_bicircular_independent, classify_circuit
from .latticepath import (LatticePath, BoundedPathPair, parse_path_pair,
                          standard_presentation, transversal_matroid,
                          validate_interval_presentation, enumerate_lpms,
                          is_lpm, lpm_matroid)
from .catalog import (EXCLUDED_MINOR_NAMES, excluded_minor, prism_presentation,
                      has_excluded_bicircular_minor, FamilySpec, FamilyWitness,
                      family_generate, family_member)
from .recognizer import (decide_lpm, decide_lpm_via_minors,
                         decide_lpm_via_oracle, cross_check,
                         bicircular_connected, Decision)

__all__ = [n for n in dir() if not n.startswith("_")]
