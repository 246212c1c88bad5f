#include "ebi/labeling.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace ebi {

EdgeLabeling::EdgeLabeling(GraphPtr graph, std::vector<std::uint8_t> labels)
    : graph_(std::move(graph)), labels_(std::move(labels)) {
    if (!graph_) throw std::invalid_argument("EdgeLabeling: null graph");
    if (labels_.size() != static_cast<std::size_t>(graph_->edge_count()))
        throw std::invalid_argument("EdgeLabeling: label count does not match edge count");
    for (std::uint8_t b : labels_)
        if (b > 1) throw std::invalid_argument("EdgeLabeling: labels must be 0 or 1");
}

EdgeLabeling EdgeLabeling::all_zero(GraphPtr graph) {
    std::vector<std::uint8_t> labels(graph ? graph->edge_count() : 0, 0);
    return EdgeLabeling(std::move(graph), std::move(labels));
}

EdgeLabeling EdgeLabeling::from_one_edges(GraphPtr graph, const std::vector<Edge>& ones) {
    if (!graph) throw std::invalid_argument("EdgeLabeling: null graph");
    std::vector<std::uint8_t> labels(graph->edge_count(), 0);
    for (const Edge& e : ones) {
        auto idx = graph->edge_index(e.u, e.v);
        if (!idx)
            throw std::invalid_argument("EdgeLabeling: {" + std::to_string(e.u) + ", " +
                                        std::to_string(e.v) + "} is not an edge");
        labels[*idx] = 1;
    }
    return EdgeLabeling(std::move(graph), std::move(labels));
}

EdgeLabeling EdgeLabeling::from_bits(GraphPtr graph, std::string_view bits) {
    if (!graph) throw std::invalid_argument("EdgeLabeling: null graph");
    std::vector<std::uint8_t> labels;
    labels.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("EdgeLabeling: bit string may contain only 0/1");
        labels.push_back(c == '1');
    }
    return EdgeLabeling(std::move(graph), std::move(labels));
}

std::uint8_t EdgeLabeling::label(int edge_index) const {
    if (edge_index < 0 || edge_index >= static_cast<int>(labels_.size()))
        throw std::out_of_range("EdgeLabeling::label: edge index " + std::to_string(edge_index));
    return labels_[edge_index];
}

std::string EdgeLabeling::bits() const {
    std::string s(labels_.size(), '0');
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i]) s[i] = '1';
    return s;
}

int PartialVertexLabeling::count(VertexLabel l) const {
    return static_cast<int>(std::count(values.begin(), values.end(), l));
}

bool is_edge_friendly(const EdgeLabeling& l) {
    int e1 = 0;
    for (std::uint8_t b : l.labels()) e1 += b;
    int e0 = static_cast<int>(l.labels().size()) - e1;
    return std::abs(e0 - e1) <= 1;
}

PartialVertexLabeling induced_vertex_labeling(const EdgeLabeling& l) {
    const Graph& g = l.graph();
    std::vector<int> one_degree(g.vertex_count(), 0);
    for (int i = 0; i < g.edge_count(); ++i) {
        if (!l.labels()[i]) continue;
        Edge e = g.edge(i);
        ++one_degree[e.u];
        ++one_degree[e.v];
    }
    PartialVertexLabeling out;
    out.values.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        int twice = 2 * one_degree[v];
        int d = g.degree(v);
        out.values[v] = twice > d   ? VertexLabel::one
                        : twice < d ? VertexLabel::zero
                                    : VertexLabel::unlabeled;
    }
    return out;
}

LabelCounts counts(const EdgeLabeling& l) {
    LabelCounts c;
    for (std::uint8_t b : l.labels()) (b ? c.e1 : c.e0)++;
    PartialVertexLabeling pvl = induced_vertex_labeling(l);
    c.v0 = pvl.count(VertexLabel::zero);
    c.v1 = pvl.count(VertexLabel::one);
    c.unlabeled = pvl.count(VertexLabel::unlabeled);
    c.index = std::abs(c.v0 - c.v1);
    return c;
}

EdgeLabeling swap_pair(const EdgeLabeling& l, int zero_edge, int one_edge) {
    if (l.label(zero_edge) != 0)
        throw std::invalid_argument("swap_pair: edge " + std::to_string(zero_edge) +
                                    " is labeled 1, expected 0");
    if (l.label(one_edge) != 1)
        throw std::invalid_argument("swap_pair: edge " + std::to_string(one_edge) +
                                    " is labeled 0, expected 1");
    std::vector<std::uint8_t> labels = l.labels();
    labels[zero_edge] = 1;
    labels[one_edge] = 0;
    return EdgeLabeling(l.graph_ptr(), std::move(labels));
}

EdgeLabeling complement(const EdgeLabeling& l) {
    std::vector<std::uint8_t> labels = l.labels();
    for (std::uint8_t& b : labels) b ^= 1;
    return EdgeLabeling(l.graph_ptr(), std::move(labels));
}

bool is_strongly_edge_balanced(const EdgeLabeling& l) {
    LabelCounts c = counts(l);
    return c.e0 == c.e1 && c.v0 == c.v1;
}

std::string to_labeling_text(const EdgeLabeling& l) {
    return to_edge_list(l.graph()) + l.bits() + "\n";
}

EdgeLabeling from_labeling_text(std::string_view text) {
    // The label line is the first line after the vertex-count line that
    // consists solely of 0/1 characters (edge lines always contain a space);
    // everything before it is the edge-list document.
    std::size_t pos = 0;
    bool past_count = false;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::size_t end = (eol == std::string_view::npos) ? text.size() : eol;
        std::string_view line = text.substr(pos, end - pos);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.remove_suffix(1);
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
            line.remove_prefix(1);
        if (!line.empty()) {
            if (past_count && line.find_first_not_of("01") == std::string_view::npos) {
                Graph g = from_edge_list(text.substr(0, pos));
                if (line.size() != static_cast<std::size_t>(g.edge_count()))
                    throw std::runtime_error("labeling text: expected " +
                                             std::to_string(g.edge_count()) +
                                             " label bits, got " + std::to_string(line.size()));
                return EdgeLabeling::from_bits(share(std::move(g)), line);
            }
            past_count = true;
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    // An edgeless graph has an empty label line; accept the bare edge list.
    Graph g = from_edge_list(text);
    if (g.edge_count() != 0) throw std::runtime_error("labeling text: missing label line");
    return EdgeLabeling::all_zero(share(std::move(g)));
}

}  // namespace ebi
