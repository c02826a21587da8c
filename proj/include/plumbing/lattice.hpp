#pragma once

#include "plumbing/exact_matrix.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace plumbing {

/// Admissible values for one coordinate of a lattice query. At most one of
/// the two members is set; neither set means the coordinate is free.
struct CoordinateConstraint {
    std::optional<VecI> allowed;  // finite set, kept sorted
    struct ParityMin {
        int parity;   // residue mod 2
        Int min_abs;  // |x| >= min_abs
    };
    std::optional<ParityMin> parity_min;

    static CoordinateConstraint free() { return {}; }
    static CoordinateConstraint fixed(Int v) {
        CoordinateConstraint c;
        c.allowed = VecI{std::move(v)};
        return c;
    }
    static CoordinateConstraint finite_set(VecI values);
    static CoordinateConstraint parity_with_min(int parity, Int min_abs) {
        CoordinateConstraint c;
        c.parity_min = ParityMin{parity, std::move(min_abs)};
        return c;
    }
};

/// Ball query for a positive definite exact quadratic form: all integer x
/// with form(x - center) <= bound, the per-coordinate constraints, and an
/// optional acceptance predicate (used for coset filters, e.g. membership
/// in 2 M Z^s + target).
struct LatticeBallQuery {
    ExactMatrix form;
    Rat bound;
    std::vector<CoordinateConstraint> constraints;  // empty = unconstrained
    VecR center;                                    // empty = origin
    std::function<bool(const VecI&)> filter;        // empty = accept all
    std::vector<int> order;  // elimination order, innermost first; empty = natural
};

struct BallPoint {
    VecI x;
    Rat norm;  // form(x - center)
};

/// Complete, duplicate-free enumeration, sorted by (norm, lexicographic).
/// Completeness comes from exact rational interval bounds at every level of
/// the LDL recursion; throws NotPositiveDefinite if the form is not.
std::vector<BallPoint> enumerate_ball(const LatticeBallQuery& q);

/// Accepted points of minimal norm within bound (all ties), sorted
/// lexicographically; empty when none exists with norm <= bound. The bound
/// shrinks dynamically as better points are found.
std::vector<BallPoint> enumerate_min(const LatticeBallQuery& q);

}  // namespace plumbing
