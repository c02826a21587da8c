#include "plumbing/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace plumbing {

PlumbingGraph PlumbingGraph::make(std::vector<Vertex> vertices,
                                  std::vector<std::pair<std::string, std::string>> edges) {
    PlumbingGraph g;
    if (vertices.empty()) throw ValidationError("graph must have at least one vertex");

    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        if (vertices[i].id.empty()) throw ValidationError("empty vertex id");
        if (!index.emplace(vertices[i].id, i).second)
            throw ValidationError("duplicate vertex id '" + vertices[i].id + "'");
    }
    g.vertices_ = std::move(vertices);
    g.adjacency_.assign(g.vertices_.size(), {});

    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : edges) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end()) throw ValidationError("edge endpoint '" + a + "' is not a vertex");
        if (ib == index.end()) throw ValidationError("edge endpoint '" + b + "' is not a vertex");
        int u = ia->second, v = ib->second;
        if (u == v) throw ValidationError("loop edge at '" + a + "'");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) throw ValidationError("repeated edge " + a + "-" + b);
        g.edges_.emplace_back(key.first, key.second);
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());

    const int s = g.size();
    if (static_cast<int>(g.edges_.size()) != s - 1)
        throw ValidationError("a tree on " + std::to_string(s) + " vertices needs " +
                              std::to_string(s - 1) + " edges, got " +
                              std::to_string(g.edges_.size()));
    // connectivity; with s-1 edges this also rules out cycles
    std::vector<char> visited(s, 0);
    std::vector<int> stack{0};
    visited[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.adjacency_[v])
            if (!visited[w]) {
                visited[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != s) throw ValidationError("graph is not connected");

    std::vector<int> order(s);
    for (int i = 0; i < s; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        auto bucket = [&](int v) {
            int d = g.degree(v);
            return d <= 1 ? 0 : (d == 2 ? 1 : 2);
        };
        return bucket(a) < bucket(b);
    });
    g.canonical_order_ = std::move(order);
    return g;
}

int PlumbingGraph::index_of(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
        if (vertices_[i].id == id) return i;
    return -1;
}

VecI PlumbingGraph::weights() const {
    VecI w(size());
    for (int i = 0; i < size(); ++i) w[i] = vertices_[i].weight;
    return w;
}

Int PlumbingGraph::trace() const {
    Int t = 0;
    for (const auto& v : vertices_) t += v.weight;
    return t;
}

VecI PlumbingGraph::degree_vector() const {
    VecI d(size());
    for (int i = 0; i < size(); ++i) d[i] = degree(i);
    return d;
}

std::vector<int> PlumbingGraph::leaves() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (degree(i) <= 1) out.push_back(i);
    return out;
}

std::vector<int> PlumbingGraph::chain_vertices() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (degree(i) == 2) out.push_back(i);
    return out;
}

std::vector<int> PlumbingGraph::nodes() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (degree(i) >= 3) out.push_back(i);
    return out;
}

VecI PlumbingGraph::canonical_vector() const {
    VecI v(size());
    for (int i = 0; i < size(); ++i) v[i] = Int(2) - degree(i);
    return v;
}

namespace {

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// AHU encoding of the tree rooted at `root`, children sorted by encoding.
std::string encode(const PlumbingGraph& g, int root, int parent) {
    std::vector<std::string> parts;
    for (int w : g.neighbors(root))
        if (w != parent) parts.push_back(encode(g, w, root));
    std::sort(parts.begin(), parts.end());
    std::string out = "(" + g.vertex(root).weight.str();
    for (const auto& p : parts) out += p;
    out += ")";
    return out;
}

}  // namespace

std::uint64_t PlumbingGraph::canonical_hash() const {
    // Find the tree center (one or two vertices) by leaf peeling.
    const int s = size();
    std::vector<int> deg(s);
    for (int i = 0; i < s; ++i) deg[i] = degree(i);
    std::vector<int> frontier;
    for (int i = 0; i < s; ++i)
        if (deg[i] <= 1) frontier.push_back(i);
    int remaining = s;
    std::vector<char> removed(s, 0);
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : frontier) {
            removed[v] = 1;
            --remaining;
            for (int w : neighbors(v))
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
        }
        frontier = std::move(next);
    }
    std::string best;
    for (int v = 0; v < s; ++v) {
        if (removed[v]) continue;
        std::string enc = encode(*this, v, -1);
        if (best.empty() || enc < best) best = enc;
    }
    return fnv1a(best);
}

bool PlumbingGraph::same_labelled_graph(const PlumbingGraph& other) const {
    if (size() != other.size() || edges_.size() != other.edges_.size()) return false;
    for (int i = 0; i < size(); ++i)
        if (vertices_[i].id != other.vertices_[i].id ||
            vertices_[i].weight != other.vertices_[i].weight)
            return false;
    return edges_ == other.edges_;
}

}  // namespace plumbing
