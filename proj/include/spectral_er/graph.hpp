#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ser {

// Subset of {0..n-1} as a bit mask.
struct VertexSet {
    std::uint64_t bits = 0;

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }
    bool contains(int v) const { return (bits >> v) & 1u; }
    void add(int v) { bits |= std::uint64_t(1) << v; }
    void remove(int v) { bits &= ~(std::uint64_t(1) << v); }
    int count() const { return __builtin_popcountll(bits); }
    bool empty() const { return bits == 0; }
    bool operator==(const VertexSet&) const = default;

    template <typename F>
    void for_each(F&& f) const {
        std::uint64_t b = bits;
        while (b) {
            int v = __builtin_ctzll(b);
            f(v);
            b &= b - 1;
        }
    }
    std::vector<int> to_vector() const;
};

// Simple undirected graph on up to 64 vertices, one neighborhood word per vertex.
// Immutable after construction; all operations on it are pure.
class Graph {
public:
    static constexpr int max_vertices = 64;

    Graph() = default;  // zero-vertex placeholder, not a valid graph

    // Builds from an edge list (duplicates allowed and merged). Throws
    // parameter_error on loops, out-of-range endpoints, or bad n.
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    std::uint64_t neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return __builtin_popcountll(adj_[v]); }
    std::uint64_t vertex_mask() const {
        return n_ == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n_) - 1);
    }
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
    friend Graph graph_with_rows(int n, std::vector<std::uint64_t> rows);
};

// Internal constructor for algorithms that already hold valid symmetric rows.
Graph graph_with_rows(int n, std::vector<std::uint64_t> rows);

inline Graph make_graph(int n, std::span<const std::pair<int, int>> edges) {
    return Graph::from_edges(n, edges);
}

// Number of 3-vertex subsets inducing a triangle (= trace(A^3)/6).
long long count_triangles(const Graph& g);

// Number of subgraphs of g isomorphic to the connected pattern f
// (injective homomorphisms divided by |Aut(f)|). Pattern capped at 8 vertices.
long long count_copies(const Graph& g, const Graph& f);
long long count_injective_homomorphisms(const Graph& g, const Graph& f);

// graph6 text form, bit-exact per the standard layout.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

// G* = G - {vj v : v in s} + {vi v : v in s}. Requires nonempty s inside
// N(vj) and disjoint from N(vi) and {vi}; preserves the edge count.
Graph rotate_edges(const Graph& g, int vi, int vj, VertexSet s);

// Canonical form: equal byte strings iff isomorphic graphs.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;   // n, then packed canonical adjacency triangle
    std::vector<int> position;         // position[v] = canonical index of vertex v
    std::vector<int> orbit;            // orbit[v] = smallest vertex in v's automorphism orbit
};
CanonicalForm canonicalize(const Graph& g);
std::vector<std::uint8_t> canonical_form(const Graph& g);

// Order of the automorphism group (exhaustive; intended for small n).
long long aut_order(const Graph& g);

}  // namespace ser
