"""2-edge-connected blocks of directed graphs."""

from .algorithms import QueryStructure, are_2ec, are_2ec_many, build_query, fast_2ecb, rec_2ecb
from .auxiliary import (AuxiliaryGraph, SubtreeDecomposition, build_auxiliary_graphs,
                        compressed_marked_tree, decompose_subtrees)
from .certificate import (Certificate, SpanningTreePair, independent_spanning_trees,
                          sparse_certificate, verify_independence)
from .blocks import (BlockPartition, block_of_vertex, blocks_oracle, simple_2ecb,
                     two_edge_connected_from)
from .dominators import (DominatorTree, dominator_tree, dominators_oracle, flow_bridges,
                         strong_bridges)
from .estimator import TwoEdgeBlocks
from .graph import (Digraph, VertexPartition, generate, is_strongly_connected, parse_graph,
                    remove_edge_view, reverse, strongly_connected_components)

__all__ = [
    "AuxiliaryGraph", "BlockPartition", "Certificate", "Digraph", "DominatorTree",
    "QueryStructure", "SpanningTreePair", "SubtreeDecomposition", "TwoEdgeBlocks",
    "VertexPartition", "are_2ec", "are_2ec_many", "block_of_vertex", "blocks_oracle", "build_auxiliary_graphs",
    "build_query", "compressed_marked_tree", "decompose_subtrees", "dominator_tree",
    "dominators_oracle", "fast_2ecb", "flow_bridges", "generate", "independent_spanning_trees",
    "is_strongly_connected", "parse_graph", "rec_2ecb", "remove_edge_view", "reverse",
    "simple_2ecb", "sparse_certificate", "strong_bridges", "strongly_connected_components",
    "two_edge_connected_from", "verify_independence",
]
