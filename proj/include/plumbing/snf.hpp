#pragma once

#include "plumbing/numeric.hpp"

#include <vector>

namespace plumbing {

/// Smith normal form U * A * V = D of a square integer matrix, with U, V
/// unimodular and D = diag(d_1 | d_2 | ... ), d_i >= 0.
struct SmithNormalForm {
    std::vector<VecI> u;      // rows
    std::vector<VecI> v;
    std::vector<VecI> u_inv;  // exact integer inverse of u
    VecI diag;

    VecI apply_u(const VecI& x) const;
    VecI apply_u_inv(const VecI& x) const;
};

SmithNormalForm smith_normal_form(const std::vector<VecI>& a);

}  // namespace plumbing
