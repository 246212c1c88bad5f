#include "ebi/graph_spec.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "ebi/products.hpp"

namespace ebi {

namespace {

[[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("graph descriptor: " + what);
}

struct Tokens {
    std::vector<std::string> items;
    std::size_t pos = 0;

    bool done() const { return pos == items.size(); }

    const std::string& take(const std::string& wanted) {
        if (done()) fail("expected " + wanted + " but the descriptor ended");
        return items[pos++];
    }
};

int parse_int(const std::string& token, int min, const std::string& what) {
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size())
        fail("'" + token + "' is not a valid " + what);
    if (value < min)
        fail(what + " must be at least " + std::to_string(min) + ", got '" + token + "'");
    return value;
}

Graph cube_graph(int dim) {
    std::vector<Edge> edges;
    int p = 1 << dim;
    for (int v = 0; v < p; ++v)
        for (int d = 0; d < dim; ++d)
            if (!(v & (1 << d))) edges.push_back({v, v | (1 << d)});
    return Graph(p, std::move(edges));
}

Graph from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return from_edge_list(text.str());
    } catch (const std::exception& e) {
        fail("'" + path + "': " + e.what());
    }
}

Graph parse(Tokens& t) {
    const std::string& kind = t.take("a graph kind");
    if (kind == "complete") return complete_graph(parse_int(t.take("a vertex count"), 1, "vertex count"));
    if (kind == "path") return path_graph(parse_int(t.take("a vertex count"), 1, "vertex count"));
    if (kind == "cycle") return cycle_graph(parse_int(t.take("a vertex count"), 3, "cycle length"));
    if (kind == "crown") return crown_graph(parse_int(t.take("a part size"), 2, "part size"));
    if (kind == "cube") {
        int d = parse_int(t.take("a dimension"), 1, "dimension");
        if (d > 6) fail("cube dimension must be at most 6, got " + std::to_string(d));
        return cube_graph(d);
    }
    if (kind == "bipartite") {
        const std::string& arg = t.take("part sizes M,N");
        auto comma = arg.find(',');
        if (comma == std::string::npos)
            fail("bipartite takes two part sizes 'M,N', got '" + arg + "'");
        return complete_bipartite(parse_int(arg.substr(0, comma), 1, "part size"),
                                  parse_int(arg.substr(comma + 1), 1, "part size"));
    }
    if (kind == "file") return from_file(t.take("a file path"));
    if (kind == "product") {
        const std::string& op = t.take("a product kind (lex, direct, cartesian)");
        Graph g1 = parse(t);
        Graph g2 = parse(t);
        if (op == "lex") return lexicographic_product(g1, g2);
        if (op == "direct") return direct_product(g1, g2);
        if (op == "cartesian") return cartesian_product(g1, g2);
        fail("unknown product kind '" + op + "' (expected lex, direct, or cartesian)");
    }
    fail("unknown graph kind '" + kind + "'");
}

}  // namespace

Graph parse_graph_spec(const std::string& spec) {
    Tokens t;
    std::size_t start = 0;
    while (true) {
        std::size_t colon = spec.find(':', start);
        t.items.push_back(spec.substr(start, colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    Graph g = parse(t);
    if (!t.done()) fail("unexpected trailing ':" + t.items[t.pos] + "'");
    return g;
}

const char* graph_spec_help() {
    return "complete:N | bipartite:M,N | path:N | cycle:N | crown:N | cube:D | "
           "file:PATH | product:{lex|direct|cartesian}:SPEC:SPEC";
}

}  // namespace ebi
