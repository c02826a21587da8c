#pragma once

#include "plumbing/lattice.hpp"
#include "plumbing/spinc.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace plumbing {

/// Coefficient of z^t in the symmetric expansion of (z - 1/z)^(2-degree).
/// Leaves carry +-1 at t = +-1; degree-2 vertices 1 at t = 0; an isolated
/// vertex the Laurent polynomial z^2 - 2 + z^-2; a node of degree d+2 >= 3
/// carries binom(k+d-1,k)/2 at t = -d-2k and (-1)^d binom(k+d-1,k)/2 at
/// t = d+2k. Zero off support.
Rat ctilde_vertex(int degree, const Int& t);

/// Product of the vertex factors; nonzero exactly on the support set.
Rat ctilde(const PlumbingGraph& g, const VecI& l);

/// Per-vertex admissible sets of the support: {-1,1} on leaves, {0} on
/// degree-2 vertices, {-2,0,2} on an isolated vertex, parity delta mod 2
/// with |t| >= delta-2 on nodes.
std::vector<CoordinateConstraint> support_constraints(const PlumbingGraph& g);

/// Finite q-series: strictly increasing exponents with nonzero exact
/// coefficients, complete up to level_bound.
struct QSeries {
    std::vector<std::pair<Rat, Rat>> terms;
    Rat level_bound;
};

/// Truncation of Zhat_b(q) at the given exponent level: the lattice sum
/// q^((-3s-Tr M)/4) * sum over support vectors in the coset -(2MZ^s + b) of
/// ctilde_l q^(-l^2/4), with cancelled exponent groups dropped.
QSeries zhat_series(const SpincSystem& sys, const SpincClass& b, const Rat& level);

struct DeltaResult {
    std::optional<Rat> value;  // empty = no surviving shell up to the cap
    Rat cap;                   // norm cap used for the search
    std::vector<VecI> minimizing_vectors;
    struct Shell {
        Rat norm;
        std::vector<VecI> vectors;
    };
    std::vector<Shell> cancelled_shells;  // nonempty shells whose coefficient sum vanished
    /// True when the support intersected with the coset was exhausted below
    /// the cap (possible without nodes), so an empty result certifies a
    /// vanishing series rather than a truncated search.
    bool certified_vanishing = false;

    bool infinite() const { return !value.has_value(); }
};

/// Smallest exponent of Zhat_b: shells of the coset-restricted support are
/// scanned in increasing norm -l^2; the first shell whose coefficients do
/// not cancel gives Delta_b = (-3s - Tr M + norm)/4. Without such a shell
/// up to the norm cap the result is reported infinite (tentatively, unless
/// the support is finite and exhausted).
DeltaResult delta(const SpincSystem& sys, const SpincClass& b,
                  std::optional<Rat> cap = std::nullopt);

/// Norm cap used by delta() when none is given: the norm of 2u - delta
/// plus 8 exponent steps (norms within one coset differ by multiples of 4).
Rat default_norm_cap(const SpincSystem& sys);

std::vector<std::pair<SpincClass, DeltaResult>> delta_all(
    const SpincSystem& sys, std::optional<Rat> cap = std::nullopt);

struct ConjectureReport {
    std::optional<Rat> min_delta;  // over classes with finite delta
    std::optional<SpincClass> minimizer;
    Rat bound;  // -gamma/4 + 1/2
    bool verdict = false;
    bool inconclusive = false;  // some classes came back infinite-up-to-cap
};

/// min_b Delta_b against -gamma/4 + 1/2.
ConjectureReport conjecture_report(const SpincSystem& sys,
                                   std::optional<Rat> cap = std::nullopt);

}  // namespace plumbing
