#pragma once

#include "plumbing/errors.hpp"
#include "plumbing/numeric.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace plumbing {

struct Vertex {
    std::string id;
    Int weight;
};

/// Decorated tree underlying a plumbed 3-manifold: integer Euler numbers on
/// the vertices, unordered edges, connected, acyclic. A single vertex of
/// degree 0 is a valid graph (lens spaces L(p,1) need it).
///
/// The input vertex order is preserved for all I/O; a stable permutation
/// sorting vertices as (leaves, degree-2, nodes) is kept alongside for the
/// routines that want the degree-partitioned ordering.
class PlumbingGraph {
public:
    static PlumbingGraph make(std::vector<Vertex> vertices,
                              std::vector<std::pair<std::string, std::string>> edges);

    int size() const { return static_cast<int>(vertices_.size()); }
    const Vertex& vertex(int i) const { return vertices_[i]; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int i) const { return adjacency_[i]; }
    int degree(int i) const { return static_cast<int>(adjacency_[i].size()); }

    /// Index of the vertex with the given id, or -1.
    int index_of(const std::string& id) const;

    VecI weights() const;
    Int trace() const;
    VecI degree_vector() const;

    std::vector<int> leaves() const;          // degree <= 1
    std::vector<int> chain_vertices() const;  // degree == 2
    std::vector<int> nodes() const;           // degree >= 3

    /// Stable permutation listing leaves first, then degree-2 vertices, then
    /// nodes; `canonical_order()[k]` is the input index in slot k.
    const std::vector<int>& canonical_order() const { return canonical_order_; }

    /// 2u - delta, the representative of the canonical spin-c structure.
    VecI canonical_vector() const;

    /// Isomorphism-invariant hash (weighted AHU encoding rooted at the tree
    /// center), stable across runs and platforms.
    std::uint64_t canonical_hash() const;

    bool same_labelled_graph(const PlumbingGraph& other) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<int> canonical_order_;
};

}  // namespace plumbing
