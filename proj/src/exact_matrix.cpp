#include "plumbing/exact_matrix.hpp"

#include <utility>

namespace plumbing {

ExactMatrix::ExactMatrix(int n, std::vector<Rat> entries) : n_(n), a_(std::move(entries)) {
    if (a_.size() != static_cast<size_t>(n) * n)
        throw DimensionMismatch("entry count does not match dimension");
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

ExactMatrix::ExactMatrix(const ExactMatrix& other)
    : n_(other.n_), a_(other.a_), cache_(other.cache_) {}

ExactMatrix& ExactMatrix::operator=(const ExactMatrix& other) {
    n_ = other.n_;
    a_ = other.a_;
    cache_ = other.cache_;
    return *this;
}

bool ExactMatrix::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool ExactMatrix::is_integer() const {
    for (const auto& v : a_)
        if (!plumbing::is_integer(v)) return false;
    return true;
}

Rat ExactMatrix::trace() const {
    Rat t = 0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

Rat ExactMatrix::compute_det() const {
    if (n_ == 0) return 1;
    if (is_integer()) {
        // Fraction-free Bareiss elimination; intermediate entries stay
        // integral (they are minors of the input).
        std::vector<Int> m(a_.size());
        for (size_t i = 0; i < a_.size(); ++i) m[i] = numerator(a_[i]);
        auto e = [&](int i, int j) -> Int& { return m[static_cast<size_t>(i) * n_ + j]; };
        int sign = 1;
        Int prev = 1;
        for (int k = 0; k + 1 < n_; ++k) {
            if (e(k, k) == 0) {
                int r = -1;
                for (int i = k + 1; i < n_; ++i)
                    if (e(i, k) != 0) { r = i; break; }
                if (r < 0) return 0;
                for (int j = 0; j < n_; ++j) std::swap(e(k, j), e(r, j));
                sign = -sign;
            }
            for (int i = k + 1; i < n_; ++i) {
                for (int j = k + 1; j < n_; ++j)
                    e(i, j) = (e(i, j) * e(k, k) - e(i, k) * e(k, j)) / prev;
                e(i, k) = 0;
            }
            prev = e(k, k);
        }
        return Rat(sign * e(n_ - 1, n_ - 1));
    }
    // Rational Gauss with partial (first nonzero) pivoting.
    std::vector<Rat> m = a_;
    auto e = [&](int i, int j) -> Rat& { return m[static_cast<size_t>(i) * n_ + j]; };
    Rat det = 1;
    for (int k = 0; k < n_; ++k) {
        int r = -1;
        for (int i = k; i < n_; ++i)
            if (e(i, k) != 0) { r = i; break; }
        if (r < 0) return 0;
        if (r != k) {
            for (int j = 0; j < n_; ++j) std::swap(e(k, j), e(r, j));
            det = -det;
        }
        det *= e(k, k);
        for (int i = k + 1; i < n_; ++i) {
            if (e(i, k) == 0) continue;
            Rat f = e(i, k) / e(k, k);
            for (int j = k; j < n_; ++j) e(i, j) -= f * e(k, j);
        }
    }
    return det;
}

ExactMatrix ExactMatrix::compute_inverse() const {
    if (det() == 0) throw SingularMatrix("matrix is singular");
    // Gauss-Jordan on [A | I].
    const int n = n_;
    std::vector<Rat> m(static_cast<size_t>(n) * 2 * n, Rat(0));
    auto e = [&](int i, int j) -> Rat& { return m[static_cast<size_t>(i) * 2 * n + j]; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) e(i, j) = at(i, j);
        e(i, n + i) = 1;
    }
    for (int k = 0; k < n; ++k) {
        int r = -1;
        for (int i = k; i < n; ++i)
            if (e(i, k) != 0) { r = i; break; }
        if (r < 0) throw SingularMatrix("matrix is singular");
        if (r != k)
            for (int j = 0; j < 2 * n; ++j) std::swap(e(k, j), e(r, j));
        Rat piv = e(k, k);
        for (int j = k; j < 2 * n; ++j) e(k, j) /= piv;
        for (int i = 0; i < n; ++i) {
            if (i == k || e(i, k) == 0) continue;
            Rat f = e(i, k);
            for (int j = k; j < 2 * n; ++j) e(i, j) -= f * e(k, j);
        }
    }
    ExactMatrix inv(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.set(i, j, e(i, n + j));
    return inv;
}

ExactMatrix::LdlPivots ExactMatrix::compute_ldl() const {
    std::vector<Rat> m = a_;
    auto e = [&](int i, int j) -> Rat& { return m[static_cast<size_t>(i) * n_ + j]; };
    LdlPivots out;
    for (int k = 0; k < n_; ++k) {
        if (e(k, k) == 0) {
            out.completed = false;
            return out;
        }
        out.pivots.push_back(e(k, k));
        for (int i = k + 1; i < n_; ++i) {
            if (e(i, k) == 0) continue;
            Rat f = e(i, k) / e(k, k);
            for (int j = k + 1; j < n_; ++j) e(i, j) -= f * e(k, j);
        }
    }
    return out;
}

const Rat& ExactMatrix::det() const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->det) cache_->det = compute_det();
    return *cache_->det;
}

const ExactMatrix& ExactMatrix::inverse() const {
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        if (cache_->inverse) return *cache_->inverse;
    }
    ExactMatrix inv = compute_inverse();
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->inverse) cache_->inverse = std::move(inv);
    return *cache_->inverse;
}

const ExactMatrix::LdlPivots& ExactMatrix::ldl_pivots() const {
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        if (cache_->ldl) return *cache_->ldl;
    }
    LdlPivots p = compute_ldl();
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->ldl) cache_->ldl = std::move(p);
    return *cache_->ldl;
}

ExactMatrix ExactMatrix::adjugate() const {
    ExactMatrix adj = inverse();
    ExactMatrix out(n_);
    const Rat& d = det();
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out.set(i, j, adj.at(i, j) * d);
    return out;
}

bool ExactMatrix::negative_definite() const {
    const LdlPivots& p = ldl_pivots();
    if (!p.completed) return false;
    for (const auto& piv : p.pivots)
        if (piv >= 0) return false;
    return true;
}

bool ExactMatrix::positive_definite() const {
    const LdlPivots& p = ldl_pivots();
    if (!p.completed) return false;
    for (const auto& piv : p.pivots)
        if (piv <= 0) return false;
    return true;
}

Rat ExactMatrix::quadratic_value(const VecI& l) const {
    if (static_cast<int>(l.size()) != n_)
        throw DimensionMismatch("vector length does not match matrix dimension");
    Rat total = 0;
    for (int i = 0; i < n_; ++i) {
        if (l[i] == 0) continue;
        Rat row = 0;
        for (int j = 0; j < n_; ++j) {
            if (l[j] == 0) continue;
            row += at(i, j) * Rat(l[j]);
        }
        total += Rat(l[i]) * row;
    }
    return total;
}

VecR ExactMatrix::multiply(const VecR& x) const {
    if (static_cast<int>(x.size()) != n_)
        throw DimensionMismatch("vector length does not match matrix dimension");
    VecR y(n_, Rat(0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (x[j] != 0 && at(i, j) != 0) y[i] += at(i, j) * x[j];
    return y;
}

VecR ExactMatrix::multiply(const VecI& x) const {
    VecR xr(x.size());
    for (size_t i = 0; i < x.size(); ++i) xr[i] = Rat(x[i]);
    return multiply(xr);
}

ExactMatrix ExactMatrix::principal_submatrix(const std::vector<int>& indices) const {
    ExactMatrix sub(static_cast<int>(indices.size()));
    for (size_t i = 0; i < indices.size(); ++i)
        for (size_t j = 0; j < indices.size(); ++j)
            sub.set(static_cast<int>(i), static_cast<int>(j), at(indices[i], indices[j]));
    return sub;
}

}  // namespace plumbing
