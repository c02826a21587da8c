#pragma once

#include "plumbing/errors.hpp"
#include "plumbing/numeric.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace plumbing {

/// Dense symmetric matrix over exact rationals with cached determinant,
/// adjugate, inverse and LDL pivots. Entries are immutable once built; the
/// caches are computed on demand under a lock so shared use from concurrent
/// tasks stays schedule-independent.
class ExactMatrix {
public:
    ExactMatrix() : n_(0) {}
    explicit ExactMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, Rat(0)) {}
    ExactMatrix(int n, std::vector<Rat> entries);

    static ExactMatrix identity(int n);

    ExactMatrix(const ExactMatrix& other);
    ExactMatrix& operator=(const ExactMatrix& other);
    ExactMatrix(ExactMatrix&&) = default;
    ExactMatrix& operator=(ExactMatrix&&) = default;

    int size() const { return n_; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    /// Mutation drops the cached factorizations (entries and caches must
    /// never disagree; copies made earlier keep the old shared cache).
    void set(int i, int j, Rat v) {
        a_[static_cast<size_t>(i) * n_ + j] = std::move(v);
        cache_ = std::make_shared<Cache>();
    }

    bool is_symmetric() const;
    bool is_integer() const;
    Rat trace() const;

    /// Exact determinant. Integer matrices go through fraction-free Bareiss
    /// elimination with row pivoting; rational ones through exact Gauss.
    const Rat& det() const;

    /// Exact inverse; throws SingularMatrix when det() == 0.
    const ExactMatrix& inverse() const;

    /// det(M) * M^{-1}; integral whenever the matrix is integral.
    ExactMatrix adjugate() const;

    /// Pivots of the LDL decomposition taken in natural order without row
    /// exchanges. `completed` is false when a zero pivot interrupted the
    /// sweep (indefinite or degenerate leading block).
    struct LdlPivots {
        std::vector<Rat> pivots;
        bool completed = true;
    };
    const LdlPivots& ldl_pivots() const;

    bool negative_definite() const;
    bool positive_definite() const;

    /// Raw quadratic value l^T A l.
    Rat quadratic_value(const VecI& l) const;
    VecR multiply(const VecR& x) const;
    VecR multiply(const VecI& x) const;

    ExactMatrix principal_submatrix(const std::vector<int>& indices) const;

    bool operator==(const ExactMatrix& other) const { return n_ == other.n_ && a_ == other.a_; }

private:
    struct Cache {
        std::mutex mutex;
        std::optional<Rat> det;
        std::optional<ExactMatrix> inverse;
        std::optional<LdlPivots> ldl;
    };

    Rat compute_det() const;
    ExactMatrix compute_inverse() const;
    LdlPivots compute_ldl() const;

    int n_;
    std::vector<Rat> a_;
    mutable std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace plumbing
