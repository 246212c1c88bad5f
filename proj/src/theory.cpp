#include "ebi/theory.hpp"

#include <numeric>
#include <stdexcept>

namespace ebi {

std::optional<RegularBound> lemma3_bound(int order, int regularity) {
    if (order < 1 || regularity < 0)
        throw std::invalid_argument("lemma3_bound: order must be >= 1 and regularity >= 0");
    if (regularity % 2 == 0) return std::nullopt;
    if (order % 2 != 0)
        throw std::domain_error("lemma3_bound: no graph of odd regularity has odd order");
    RegularBound b;
    b.order = order;
    b.regularity = regularity;
    b.numerator = std::int64_t(regularity - 1) * order + (order % 4 == 2 ? 4 : 0);
    b.denominator = regularity + 1;
    b.floor_value = b.numerator / b.denominator;
    std::int64_t g = std::gcd(b.numerator, b.denominator);
    if (g > 1) {
        b.numerator /= g;
        b.denominator /= g;
    }
    return b;
}

bool all_degrees_odd(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) % 2 == 0) return false;
    return g.vertex_count() > 0;
}

ParityConditions theorem3_conditions(const Graph& g1, const Graph& g2) {
    const bool p1 = g1.vertex_count() % 2 == 0;
    const bool q1 = g1.edge_count() % 2 == 0;
    const bool p2 = g2.vertex_count() % 2 == 0;
    const bool q2 = g2.edge_count() % 2 == 0;
    ParityConditions c;
    c.orders_both_even = p1 && p2;
    c.sizes_both_even = q1 && q2;
    c.first_order_size_even = p1 && q1;
    c.second_order_size_even = p2 && q2;
    c.all_four_odd = !p1 && !q1 && !p2 && !q2;
    c.any_holds = c.orders_both_even || c.sizes_both_even || c.first_order_size_even ||
                  c.second_order_size_even || c.all_four_odd;
    return c;
}

}  // namespace ebi
