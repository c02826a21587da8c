#pragma once

#include "plumbing/exact_matrix.hpp"
#include "plumbing/graph.hpp"

namespace plumbing {

/// Plumbing matrix M: weights on the diagonal, 1 for edges.
ExactMatrix build_matrix(const PlumbingGraph& g);

/// Exact rational inverse; throws SingularMatrix when det(M) = 0.
const ExactMatrix& exact_inverse(const ExactMatrix& m);

/// -l^2 = -l^T M^{-1} l, the positive definite normalization used for all
/// exponent computations. Exact rational with denominator dividing |det M|.
Rat quadratic_form(const ExactMatrix& m, const VecI& l);

/// LDL pivots in natural order all strictly negative. A zero pivot before
/// completion reports false (indefinite or degenerate leading block).
bool is_negative_definite(const ExactMatrix& m);

/// M nondegenerate and the principal block of M^{-1} indexed by the nodes
/// (degree >= 3) negative definite; vacuously true without nodes.
bool is_weakly_negative_definite(const PlumbingGraph& g, const ExactMatrix& m);

/// gamma(Y) = 3s + Tr(M) + 2 + (2u-delta)^T M^{-1} (2u-delta).
Rat gamma(const PlumbingGraph& g);
Rat gamma(const PlumbingGraph& g, const ExactMatrix& m);

}  // namespace plumbing
