#include "plumbing/spinc.hpp"

#include <utility>

namespace plumbing {

SpincSystem::SpincSystem(PlumbingGraph g)
    : graph_(std::move(g)), matrix_(build_matrix(graph_)) {
    const Rat& d = matrix_.det();
    if (d == 0) throw SingularMatrix("plumbing matrix is degenerate");
    det_ = numerator(d);

    const int s = graph_.size();
    std::vector<VecI> m_int(s, VecI(s, 0));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) m_int[i][j] = numerator(matrix_.at(i, j));
    snf_ = smith_normal_form(m_int);

    ExactMatrix adj = matrix_.adjugate();
    adjugate_int_.assign(s, VecI(s, 0));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) adjugate_int_[i][j] = numerator(adj.at(i, j));
}

void SpincSystem::check_parity(const VecI& b) const {
    if (static_cast<int>(b.size()) != graph_.size())
        throw DimensionMismatch("spin-c vector has wrong length");
    for (int i = 0; i < graph_.size(); ++i)
        if (mod_euclid(b[i] - graph_.degree(i), 2) != 0)
            throw ValidationError("vector is not congruent to delta mod 2");
}

VecI SpincSystem::residue_key(const VecI& b) const {
    // b = delta + 2x; classes correspond to x mod M Z^s, keyed by the Smith
    // residues of x.
    const int s = graph_.size();
    VecI x(s);
    for (int i = 0; i < s; ++i) x[i] = (b[i] - graph_.degree(i)) / 2;
    VecI t = snf_.apply_u(x);
    for (int i = 0; i < s; ++i) t[i] = mod_euclid(t[i], snf_.diag[i]);
    return t;
}

SpincClass SpincSystem::classify(VecI b) const {
    check_parity(b);
    VecI key = residue_key(b);
    return SpincClass(std::move(b), std::move(key));
}

SpincClass SpincSystem::canonical() const { return classify(graph_.canonical_vector()); }

std::vector<SpincClass> SpincSystem::enumerate() const {
    const int s = graph_.size();
    std::vector<SpincClass> out;
    VecI t(s, 0);
    for (;;) {
        VecI x = snf_.apply_u_inv(t);
        VecI b(s);
        for (int i = 0; i < s; ++i) b[i] = Int(graph_.degree(i)) + 2 * x[i];
        out.emplace_back(b, residue_key(b));
        int pos = s - 1;
        while (pos >= 0) {
            ++t[pos];
            if (t[pos] < snf_.diag[pos]) break;
            t[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

bool SpincSystem::same_class(const VecI& a, const VecI& b) const {
    check_parity(a);
    check_parity(b);
    // Solve M x = (a - b)/2 exactly and test integrality.
    const int s = graph_.size();
    VecI rhs(s);
    for (int i = 0; i < s; ++i) {
        Int diff = a[i] - b[i];
        if (mod_euclid(diff, 2) != 0) return false;
        rhs[i] = diff / 2;
    }
    VecR x = matrix_.inverse().multiply(rhs);
    for (const auto& xi : x)
        if (!is_integer(xi)) return false;
    return true;
}

SpincClass SpincSystem::conjugate(const SpincClass& c) const {
    VecI neg = c.representative();
    for (auto& v : neg) v = -v;
    return classify(std::move(neg));
}

VecI SpincSystem::characteristic_vector(const SpincClass& c) const {
    const int s = graph_.size();
    VecI k = c.representative();
    for (int i = 0; i < s; ++i) {
        k[i] += graph_.vertex(i).weight;
        k[i] += graph_.degree(i);  // (M u)_i = m_i + delta_i
    }
    return k;
}

bool SpincSystem::in_coset(const VecI& l, const VecI& target) const {
    // l - target in 2 M Z^s  <=>  adj(M) (l - target) in 2 det(M) Z^s.
    const int s = graph_.size();
    const Int modulus = 2 * det_;
    for (int i = 0; i < s; ++i) {
        Int acc = 0;
        for (int j = 0; j < s; ++j) {
            const Int d = l[j] - target[j];
            if (d != 0) acc += adjugate_int_[i][j] * d;
        }
        if (acc % modulus != 0) return false;
    }
    return true;
}

}  // namespace plumbing
