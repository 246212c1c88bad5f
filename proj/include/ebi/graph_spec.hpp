#pragma once

#include <string>

#include "ebi/graph.hpp"

namespace ebi {

// Builds a graph from a colon-separated descriptor:
//
//   complete:N                          K_N
//   bipartite:M,N                       K_{M,N}
//   path:N                              path on N vertices
//   cycle:N                             cycle on N vertices
//   crown:N                             K_N x K_2 (complete bipartite minus a
//                                       perfect matching)
//   cube:D                              D-dimensional hypercube
//   file:PATH                           edge list file (PATH is one token and
//                                       may not contain ':')
//   product:lex:SPEC:SPEC               lexicographic product
//   product:direct:SPEC:SPEC            direct (tensor) product
//   product:cartesian:SPEC:SPEC         cartesian product
//
// Product operands are themselves descriptors and may nest. Throws
// std::invalid_argument naming the offending token on malformed input.
Graph parse_graph_spec(const std::string& spec);

// One-line summary of the descriptor grammar, for CLI help text.
const char* graph_spec_help();

}  // namespace ebi
