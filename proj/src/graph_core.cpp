#include "plumbing/graph_core.hpp"

namespace plumbing {

ExactMatrix build_matrix(const PlumbingGraph& g) {
    const int s = g.size();
    std::vector<Rat> entries(static_cast<size_t>(s) * s, Rat(0));
    for (int i = 0; i < s; ++i) entries[static_cast<size_t>(i) * s + i] = Rat(g.vertex(i).weight);
    for (const auto& [u, v] : g.edges()) {
        entries[static_cast<size_t>(u) * s + v] = 1;
        entries[static_cast<size_t>(v) * s + u] = 1;
    }
    return ExactMatrix(s, std::move(entries));
}

const ExactMatrix& exact_inverse(const ExactMatrix& m) { return m.inverse(); }

Rat quadratic_form(const ExactMatrix& m, const VecI& l) {
    if (static_cast<int>(l.size()) != m.size())
        throw DimensionMismatch("vector length does not match matrix dimension");
    return -m.inverse().quadratic_value(l);
}

bool is_negative_definite(const ExactMatrix& m) { return m.negative_definite(); }

bool is_weakly_negative_definite(const PlumbingGraph& g, const ExactMatrix& m) {
    const ExactMatrix& inv = m.inverse();  // throws SingularMatrix if degenerate
    auto nodes = g.nodes();
    if (nodes.empty()) return true;
    return inv.principal_submatrix(nodes).negative_definite();
}

Rat gamma(const PlumbingGraph& g) { return gamma(g, build_matrix(g)); }

Rat gamma(const PlumbingGraph& g, const ExactMatrix& m) {
    if (!m.negative_definite())
        throw NotNegativeDefinite("gamma requires a negative definite plumbing matrix");
    return Rat(3 * g.size()) + Rat(g.trace()) + 2 - quadratic_form(m, g.canonical_vector());
}

}  // namespace plumbing
