"""Neutrosophic n-matrices, n-graphs, and cognitive and relational maps."""
from __future__ import division, print_function, absolute_import

from .neutro import (NeutroValue, ThresholdMode, ThresholdPolicy, ZERO, ONE,
                     MINUS_ONE, INDET, nv_add, nv_mul, threshold_scalar,
                     threshold_policy, parse_value, format_value)
from .nmatrix import (NMatrix, NVector, MatrixShape, MatrixContent, nm_add,
                      nm_scalar_mul, nm_negate, nm_vec_mul, nm_transpose,
                      nm_classify, nm_equal, nm_zeros, nm_component,
                      format_nmatrix, parse_nmatrix)
from .ngraph import (Graph, NGraph, Edge, EdgeKind, gluing_classify,
                     adjacency_nmatrix, weighted_nmatrix, incidence_nmatrix,
                     kirchhoff_nmatrix, complement, bidegree, is_biregular,
                     ngraph_order, neutrosophic_classify,
                     connectivity_classify, partition_check,
                     bipartite_structure)
from .cognitive import (CognitiveMap, StateVector, HiddenPattern,
                        cmap_from_ngraph, cstep, find_hidden_pattern,
                        combine_cmaps)
from .relational import (RelationalMap, RelationalState, Side,
                         RelationalHiddenPattern, rmap_from_ngraph,
                         rstep_forward, rstep_backward, rfind_hidden_pattern,
                         combine_rmaps)
from .mapfile import (parse, serialize, load, dump, scenario_state,
                      document_to_cognitive_map, document_to_relational_map)
from .errors import (NMapsError, DimensionError, AlignmentError,
                     ValidationError, DomainError, MapFileError)
from .utils import logger, set_log_level
