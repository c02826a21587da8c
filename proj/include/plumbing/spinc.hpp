#pragma once

#include "plumbing/exact_matrix.hpp"
#include "plumbing/graph.hpp"
#include "plumbing/graph_core.hpp"
#include "plumbing/snf.hpp"

#include <vector>

namespace plumbing {

/// One spin-c structure, i.e. a coset of 2MZ^s inside 2Z^s + delta. Holds
/// the representative it was built from plus the Smith-residue key that
/// identifies the coset; equality and ordering go through the key.
class SpincClass {
public:
    SpincClass(VecI representative, VecI key)
        : rep_(std::move(representative)), key_(std::move(key)) {}

    const VecI& representative() const { return rep_; }
    const VecI& key() const { return key_; }

    bool operator==(const SpincClass& other) const { return key_ == other.key_; }
    bool operator!=(const SpincClass& other) const { return key_ != other.key_; }
    bool operator<(const SpincClass& other) const { return key_ < other.key_; }

private:
    VecI rep_;
    VecI key_;
};

/// Per-graph spin-c arithmetic: plumbing matrix, its Smith normal form and
/// coset bookkeeping. Immutable after construction and safe to share.
class SpincSystem {
public:
    explicit SpincSystem(PlumbingGraph g);

    const PlumbingGraph& graph() const { return graph_; }
    const ExactMatrix& matrix() const { return matrix_; }
    const Int& det() const { return det_; }
    Int homology_order() const { return det_ < 0 ? Int(-det_) : det_; }

    /// Class of a vector b in 2Z^s + delta (validated).
    SpincClass classify(VecI b) const;

    /// The canonical structure, represented by 2u - delta.
    SpincClass canonical() const;

    /// All |det M| classes with Smith-derived representatives, in the
    /// deterministic lexicographic residue order.
    std::vector<SpincClass> enumerate() const;

    /// True iff (a - b)/2 lies in M Z^s (exact solve + integrality check).
    bool same_class(const VecI& a, const VecI& b) const;

    SpincClass conjugate(const SpincClass& c) const;

    /// Characteristic vector k = b + M u of the class representative.
    VecI characteristic_vector(const SpincClass& c) const;

    /// Membership test l in 2 M Z^s + target, over integers only.
    bool in_coset(const VecI& l, const VecI& target) const;

private:
    VecI residue_key(const VecI& b) const;
    void check_parity(const VecI& b) const;

    PlumbingGraph graph_;
    ExactMatrix matrix_;
    Int det_;
    SmithNormalForm snf_;
    std::vector<VecI> adjugate_int_;  // adj(M), for integer coset tests
};

}  // namespace plumbing
