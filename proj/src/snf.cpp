#include "plumbing/snf.hpp"

#include "plumbing/errors.hpp"

#include <utility>

namespace plumbing {

namespace {

using Mat = std::vector<VecI>;

void swap_rows(Mat& m, int a, int b) { std::swap(m[a], m[b]); }

void swap_cols(Mat& m, int a, int b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}

void add_row(Mat& m, int dst, int src, const Int& f) {
    for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += f * m[src][j];
}

void add_col(Mat& m, int dst, int src, const Int& f) {
    for (auto& row : m) row[dst] += f * row[src];
}

void negate_row(Mat& m, int r) {
    for (auto& x : m[r]) x = -x;
}

Mat identity(int n) {
    Mat m(n, VecI(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// Exact integer inverse of a unimodular matrix by Gauss-Jordan over rationals.
Mat unimodular_inverse(const Mat& u) {
    const int n = static_cast<int>(u.size());
    std::vector<VecR> m(n, VecR(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = Rat(u[i][j]);
        m[i][n + i] = 1;
    }
    for (int k = 0; k < n; ++k) {
        int r = -1;
        for (int i = k; i < n; ++i)
            if (m[i][k] != 0) { r = i; break; }
        if (r < 0) throw SingularMatrix("unimodular inverse of singular matrix");
        std::swap(m[k], m[r]);
        Rat piv = m[k][k];
        for (int j = 0; j < 2 * n; ++j) m[k][j] /= piv;
        for (int i = 0; i < n; ++i) {
            if (i == k || m[i][k] == 0) continue;
            Rat f = m[i][k];
            for (int j = 0; j < 2 * n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    Mat out(n, VecI(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!is_integer(m[i][n + j]))
                throw SingularMatrix("inverse of unimodular matrix must be integral");
            out[i][j] = numerator(m[i][n + j]);
        }
    return out;
}

}  // namespace

VecI SmithNormalForm::apply_u(const VecI& x) const {
    const int n = static_cast<int>(u.size());
    VecI y(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) y[i] += u[i][j] * x[j];
    return y;
}

VecI SmithNormalForm::apply_u_inv(const VecI& x) const {
    const int n = static_cast<int>(u_inv.size());
    VecI y(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) y[i] += u_inv[i][j] * x[j];
    return y;
}

SmithNormalForm smith_normal_form(const std::vector<VecI>& a) {
    const int n = static_cast<int>(a.size());
    Mat d = a, u = identity(n), v = identity(n);

    auto abs_of = [](const Int& x) { return x < 0 ? Int(-x) : x; };

    for (int s = 0; s < n; ++s) {
        // Move a minimal nonzero entry of the trailing block to (s, s) and
        // clear its row and column; repeat until both are clean.
        for (;;) {
            int pr = -1, pc = -1;
            Int best = 0;
            for (int i = s; i < n; ++i)
                for (int j = s; j < n; ++j) {
                    if (d[i][j] == 0) continue;
                    Int m = abs_of(d[i][j]);
                    if (pr < 0 || m < best) {
                        best = m;
                        pr = i;
                        pc = j;
                    }
                }
            if (pr < 0) break;  // trailing block is zero
            if (pr != s) { swap_rows(d, s, pr); swap_rows(u, s, pr); }
            if (pc != s) { swap_cols(d, s, pc); swap_cols(v, s, pc); }

            bool dirty = false;
            for (int i = s + 1; i < n; ++i) {
                if (d[i][s] == 0) continue;
                Int q = floor_div(d[i][s], d[s][s]);
                add_row(d, i, s, -q);
                add_row(u, i, s, -q);
                if (d[i][s] != 0) dirty = true;
            }
            for (int j = s + 1; j < n; ++j) {
                if (d[s][j] == 0) continue;
                Int q = floor_div(d[s][j], d[s][s]);
                add_col(d, j, s, -q);
                add_col(v, j, s, -q);
                if (d[s][j] != 0) dirty = true;
            }
            if (dirty) continue;

            // Enforce divisibility of the trailing block by d[s][s].
            bool fixed = true;
            for (int i = s + 1; i < n && fixed; ++i)
                for (int j = s + 1; j < n && fixed; ++j)
                    if (d[i][j] % d[s][s] != 0) {
                        add_row(d, s, i, 1);
                        add_row(u, s, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (d[s][s] < 0) {
            negate_row(d, s);
            negate_row(u, s);
        }
    }

    SmithNormalForm out;
    out.diag.resize(n);
    for (int i = 0; i < n; ++i) out.diag[i] = d[i][i];
    out.u = std::move(u);
    out.v = std::move(v);
    out.u_inv = unimodular_inverse(out.u);
    return out;
}

}  // namespace plumbing
