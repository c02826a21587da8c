#include "plumbing/lattice.hpp"

#include <algorithm>

namespace plumbing {

CoordinateConstraint CoordinateConstraint::finite_set(VecI values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    CoordinateConstraint c;
    c.allowed = std::move(values);
    return c;
}

namespace {

// Largest integer x with (x + t)^2 <= r, assuming r >= 0.
Int quad_hi(const Rat& t, const Rat& r) {
    Int h = floor_rat(Rat(floor_sqrt_rat(r)) - t);
    auto ok = [&](const Int& x) {
        Rat y = Rat(x) + t;
        return y * y <= r;
    };
    while (ok(h + 1)) ++h;
    while (!ok(h)) --h;
    return h;
}

struct Enumerator {
    int n = 0;
    std::vector<int> order;                 // order[pos] = original index
    std::vector<std::vector<Rat>> l;        // unit lower triangular, permuted coords
    VecR d;                                 // positive pivots
    VecR center;                            // permuted
    std::vector<const CoordinateConstraint*> cons;  // permuted
    const std::function<bool(const VecI&)>* filter = nullptr;

    bool min_mode = false;
    Rat bound;                  // shrinks in min mode
    VecR offs;                  // offs[i] = sum_{j>i} L_ji * z_j
    VecI x;                     // permuted assignment
    std::vector<BallPoint> out;

    void emit(const Rat& norm) {
        VecI orig(n);
        for (int p = 0; p < n; ++p) orig[order[p]] = x[p];
        if (filter && *filter && !(*filter)(orig)) return;
        if (min_mode) {
            if (!out.empty() && norm < out.front().norm) out.clear();
            if (out.empty() || norm == out.front().norm) out.push_back({std::move(orig), norm});
            bound = out.front().norm;
        } else {
            out.push_back({std::move(orig), norm});
        }
    }

    void recurse(int pos, const Rat& acc) {
        const Rat remaining = bound - acc;
        if (remaining < 0) return;
        const Rat t = offs[pos] - center[pos];
        const Rat radius_sq = remaining / d[pos];
        const Int hi = quad_hi(t, radius_sq);
        const Int lo = -quad_hi(-t, radius_sq);
        if (lo > hi) return;

        auto step = [&](const Int& v) {
            Rat z = Rat(v) - center[pos];
            Rat y = z + offs[pos];
            Rat norm = acc + d[pos] * y * y;
            if (norm > bound) return;  // bound may have shrunk in min mode
            if (pos == 0) {
                x[0] = v;
                emit(norm);
                return;
            }
            x[pos] = v;
            if (z != 0)
                for (int i = 0; i < pos; ++i)
                    if (l[pos][i] != 0) offs[i] += l[pos][i] * z;
            recurse(pos - 1, norm);
            if (z != 0)
                for (int i = 0; i < pos; ++i)
                    if (l[pos][i] != 0) offs[i] -= l[pos][i] * z;
        };

        const CoordinateConstraint* c = cons[pos];
        if (c && c->allowed) {
            for (const Int& v : *c->allowed) {
                if (v < lo || v > hi) continue;
                step(v);
            }
        } else if (c && c->parity_min) {
            Int v = lo;
            if (mod_euclid(v, 2) != mod_euclid(Int(c->parity_min->parity), 2)) ++v;
            for (; v <= hi; v += 2) {
                Int a = v < 0 ? Int(-v) : v;
                if (a < c->parity_min->min_abs) continue;
                step(v);
            }
        } else {
            for (Int v = lo; v <= hi; ++v) step(v);
        }
    }
};

Enumerator prepare(const LatticeBallQuery& q) {
    const int n = q.form.size();
    if (!q.constraints.empty() && static_cast<int>(q.constraints.size()) != n)
        throw DimensionMismatch("constraint count does not match form dimension");
    if (!q.center.empty() && static_cast<int>(q.center.size()) != n)
        throw DimensionMismatch("center length does not match form dimension");
    if (!q.order.empty() && static_cast<int>(q.order.size()) != n)
        throw DimensionMismatch("order length does not match form dimension");

    Enumerator e;
    e.n = n;
    e.order.resize(n);
    for (int i = 0; i < n; ++i) e.order[i] = q.order.empty() ? i : q.order[i];

    // LDL^T of the permuted form; pivots must be positive.
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = q.form.at(e.order[i], e.order[j]);
    e.l.assign(n, std::vector<Rat>(n, Rat(0)));
    e.d.assign(n, Rat(0));
    for (int k = 0; k < n; ++k) {
        e.l[k][k] = 1;
        if (a[k][k] <= 0) throw NotPositiveDefinite("form is not positive definite");
        e.d[k] = a[k][k];
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rat f = a[i][k] / a[k][k];
            e.l[i][k] = f;
            for (int j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }

    e.center.assign(n, Rat(0));
    if (!q.center.empty())
        for (int i = 0; i < n; ++i) e.center[i] = q.center[e.order[i]];
    e.cons.assign(n, nullptr);
    if (!q.constraints.empty())
        for (int i = 0; i < n; ++i) e.cons[i] = &q.constraints[e.order[i]];
    e.filter = &q.filter;
    e.bound = q.bound;
    e.offs.assign(n, Rat(0));
    e.x.assign(n, Int(0));
    return e;
}

}  // namespace

std::vector<BallPoint> enumerate_ball(const LatticeBallQuery& q) {
    if (q.bound < 0) return {};
    Enumerator e = prepare(q);
    e.recurse(e.n - 1, Rat(0));
    std::sort(e.out.begin(), e.out.end(), [](const BallPoint& a, const BallPoint& b) {
        if (a.norm != b.norm) return a.norm < b.norm;
        return a.x < b.x;
    });
    return e.out;
}

std::vector<BallPoint> enumerate_min(const LatticeBallQuery& q) {
    if (q.bound < 0) return {};
    Enumerator e = prepare(q);
    e.min_mode = true;
    e.recurse(e.n - 1, Rat(0));
    std::sort(e.out.begin(), e.out.end(),
              [](const BallPoint& a, const BallPoint& b) { return a.x < b.x; });
    return e.out;
}

}  // namespace plumbing
