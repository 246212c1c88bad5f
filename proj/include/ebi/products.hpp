#pragma once

#include "ebi/graph.hpp"

namespace ebi {

// All three products number the vertex (u, v) of G1 * G2 as
// u * p(G2) + v (row-major). Each construction checks its size identity
//   q(G1[G2])    = p(G2)^2 q(G1) + p(G1) q(G2)
//   q(G1 x G2)   = 2 q(G1) q(G2)
//   q(G1 [] G2)  = p(G2) q(G1) + p(G1) q(G2)
// as a postcondition and throws std::logic_error if it ever fails.

/// Lexicographic product G1[G2]: (u1,v1) ~ (u2,v2) iff u1 ~ u2, or
/// u1 = u2 and v1 ~ v2.
Graph lexicographic_product(const Graph& g1, const Graph& g2);

/// Direct (tensor) product G1 x G2: adjacent iff u1 ~ u2 and v1 ~ v2.
Graph direct_product(const Graph& g1, const Graph& g2);

/// Cartesian product G1 [] G2: adjacent iff u1 = u2 and v1 ~ v2, or
/// v1 = v2 and u1 ~ u2.
Graph cartesian_product(const Graph& g1, const Graph& g2);

}  // namespace ebi
