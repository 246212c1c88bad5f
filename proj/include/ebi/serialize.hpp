#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ebi/labeling.hpp"
#include "ebi/search.hpp"

namespace ebi {

// All JSON emitters use ordered_json so that repeated runs produce
// byte-identical documents.
using json = nlohmann::ordered_json;

json counts_to_json(const LabelCounts& c);

/// {"graph": {"p", "q", "regularity"}, "edge_bits", "vertex_labels",
///  "counts"}; vertex_labels is a string over {'0', '1', 'u'}.
json labeling_to_json(const EdgeLabeling& l);

/// Full search report: graph shape, completeness, visit counts and one
/// witness labeling (as an edge-bit string) per attained index.
json report_to_json(const EbiReport& r);

/// Graphviz document drawn the way the labelings are usually pictured:
/// only the 1-edges appear, and vertices are filled by their induced label
/// (black = one, gray = zero, white = unlabeled). `names` overrides the
/// default v0..v{p-1} node names.
std::string labeling_to_dot(const EdgeLabeling& l,
                            const std::vector<std::string>& names = {});

/// a0..a{n-1}, b0..b{n-1}: the conventional names for the two sides of a
/// crown graph's vertex set.
std::vector<std::string> crown_vertex_names(int n);

}  // namespace ebi
