#include "ebi/serialize.hpp"

#include <sstream>

namespace ebi {

json counts_to_json(const LabelCounts& c) {
    return json{{"e0", c.e0},         {"e1", c.e1},
                {"v0", c.v0},         {"v1", c.v1},
                {"unlabeled", c.unlabeled}, {"index", c.index}};
}

namespace {

json graph_shape(const Graph& g) {
    json shape{{"p", g.vertex_count()}, {"q", g.edge_count()}};
    auto r = g.regularity();
    shape["regularity"] = r ? json(*r) : json(nullptr);
    return shape;
}

std::string vertex_label_string(const EdgeLabeling& l) {
    PartialVertexLabeling vl = induced_vertex_labeling(l);
    std::string out;
    out.reserve(vl.values.size());
    for (VertexLabel v : vl.values)
        out.push_back(v == VertexLabel::zero ? '0' : v == VertexLabel::one ? '1' : 'u');
    return out;
}

}  // namespace

json labeling_to_json(const EdgeLabeling& l) {
    return json{{"graph", graph_shape(l.graph())},
                {"edge_bits", l.bits()},
                {"vertex_labels", vertex_label_string(l)},
                {"counts", counts_to_json(counts(l))}};
}

json report_to_json(const EbiReport& r) {
    json out{{"graph", json{{"p", r.p}, {"q", r.q}}},
             {"complete", r.complete},
             {"enumerated", r.enumerated},
             {"index_set", r.index_set}};
    out["graph"]["regularity"] = r.regularity ? json(*r.regularity) : json(nullptr);
    json histogram = json::object();
    for (const auto& [index, visits] : r.histogram)
        histogram[std::to_string(index)] = visits;
    out["histogram"] = std::move(histogram);
    json witnesses = json::object();
    for (const auto& [index, labeling] : r.witnesses)
        witnesses[std::to_string(index)] = labeling.bits();
    out["witnesses"] = std::move(witnesses);
    return out;
}

std::string labeling_to_dot(const EdgeLabeling& l, const std::vector<std::string>& names) {
    const Graph& g = l.graph();
    auto name = [&](int v) {
        return v < static_cast<int>(names.size()) ? names[v] : "v" + std::to_string(v);
    };
    PartialVertexLabeling vl = induced_vertex_labeling(l);
    std::ostringstream out;
    out << "graph labeling {\n";
    out << "  node [shape=circle style=filled fontcolor=black];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        const char* fill = "white";
        const char* font = "black";
        if (vl.values[v] == VertexLabel::one) {
            fill = "black";
            font = "white";
        } else if (vl.values[v] == VertexLabel::zero) {
            fill = "lightgray";
        }
        out << "  " << name(v) << " [fillcolor=" << fill << " fontcolor=" << font << "];\n";
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        if (l.label(e) == 0) continue;  // only the 1-edges are drawn
        Edge edge = g.edge(e);
        out << "  " << name(edge.u) << " -- " << name(edge.v) << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::vector<std::string> crown_vertex_names(int n) {
    std::vector<std::string> names;
    names.reserve(2 * n);
    for (int i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
    for (int j = 0; j < n; ++j) names.push_back("b" + std::to_string(j));
    return names;
}

}  // namespace ebi
