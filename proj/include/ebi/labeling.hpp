#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ebi/graph.hpp"

namespace ebi {

enum class VertexLabel : std::uint8_t { zero, one, unlabeled };

/// Total 0/1 edge labeling of a fixed graph, indexed by canonical edge
/// index. Value semantics; the underlying graph is shared and immutable.
class EdgeLabeling {
  public:
    EdgeLabeling(GraphPtr graph, std::vector<std::uint8_t> labels);

    static EdgeLabeling all_zero(GraphPtr graph);
    static EdgeLabeling from_one_edges(GraphPtr graph, const std::vector<Edge>& ones);
    static EdgeLabeling from_bits(GraphPtr graph, std::string_view bits);

    const Graph& graph() const { return *graph_; }
    const GraphPtr& graph_ptr() const { return graph_; }
    std::uint8_t label(int edge_index) const;
    const std::vector<std::uint8_t>& labels() const { return labels_; }

    /// Labels as a string of q characters '0'/'1' in canonical edge order.
    std::string bits() const;

    friend bool operator==(const EdgeLabeling& a, const EdgeLabeling& b) {
        return *a.graph_ == *b.graph_ && a.labels_ == b.labels_;
    }

  private:
    GraphPtr graph_;
    std::vector<std::uint8_t> labels_;
};

/// Vertex labels induced by edge majority; ties stay unlabeled.
struct PartialVertexLabeling {
    std::vector<VertexLabel> values;
    int count(VertexLabel l) const;
};

struct LabelCounts {
    int e0 = 0;
    int e1 = 0;
    int v0 = 0;
    int v1 = 0;
    int unlabeled = 0;
    int index = 0;  // |v0 - v1|
};

/// |e0 - e1| <= 1.
bool is_edge_friendly(const EdgeLabeling& l);

PartialVertexLabeling induced_vertex_labeling(const EdgeLabeling& l);

LabelCounts counts(const EdgeLabeling& l);

/// Exchanges the labels of a 0-edge and a 1-edge (given by canonical index)
/// and returns the new labeling. Throws std::invalid_argument when the
/// current labels are not as required; a violation mid-schedule means the
/// schedule is corrupt.
EdgeLabeling swap_pair(const EdgeLabeling& l, int zero_edge, int one_edge);

/// Flips every edge label.
EdgeLabeling complement(const EdgeLabeling& l);

/// e0 = e1 and v0 = v1.
bool is_strongly_edge_balanced(const EdgeLabeling& l);

/// Text form: the graph's edge-list document followed by one line of q
/// characters in {0,1} in canonical edge order.
std::string to_labeling_text(const EdgeLabeling& l);
EdgeLabeling from_labeling_text(std::string_view text);

}  // namespace ebi
