#include "spectral_er/graph.hpp"

#include "spectral_er/errors.hpp"

#include <algorithm>
#include <numeric>

namespace ser {

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    for_each([&](int v) { out.push_back(v); });
    return out;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 1 || n > max_vertices)
        throw parameter_error("graph order must be between 1 and 64, got " + std::to_string(n));
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, 0);
    for (auto [u, v] : edges) {
        if (u == v) throw parameter_error("loop edge at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw parameter_error("edge endpoint out of range: (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
        g.adj_[u] |= std::uint64_t(1) << v;
        g.adj_[v] |= std::uint64_t(1) << u;
    }
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph graph_with_rows(int n, std::vector<std::uint64_t> rows) {
    Graph g;
    g.n_ = n;
    g.adj_ = std::move(rows);
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t upper = adj_[u] >> (u + 1);
        while (upper) {
            int v = u + 1 + __builtin_ctzll(upper);
            out.emplace_back(u, v);
            upper &= upper - 1;
        }
    }
    return out;
}

long long count_triangles(const Graph& g) {
    long long total = 0;
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        std::uint64_t upper = g.neighbors(u) >> (u + 1);
        while (upper) {
            int v = u + 1 + __builtin_ctzll(upper);
            total += __builtin_popcountll(g.neighbors(u) & g.neighbors(v));
            upper &= upper - 1;
        }
    }
    return total / 3;
}

namespace {

// DFS over an edge-preserving injective map of the pattern into the host.
long long injective_hom_count(const Graph& host, const Graph& pattern,
                              const std::vector<int>& order) {
    const int k = pattern.vertex_count();
    const int n = host.vertex_count();
    std::vector<int> image(k, -1);
    std::uint64_t used = 0;
    long long count = 0;

    auto dfs = [&](auto&& self, int depth) -> void {
        if (depth == k) {
            ++count;
            return;
        }
        int pv = order[depth];
        // candidates must cover all already-mapped pattern neighbors
        std::uint64_t cand = host.vertex_mask() & ~used;
        for (int d = 0; d < depth; ++d) {
            if (pattern.has_edge(pv, order[d])) cand &= host.neighbors(image[order[d]]);
        }
        while (cand) {
            int w = __builtin_ctzll(cand);
            cand &= cand - 1;
            image[pv] = w;
            used |= std::uint64_t(1) << w;
            self(self, depth + 1);
            used &= ~(std::uint64_t(1) << w);
        }
    };
    if (k > n) return 0;
    dfs(dfs, 0);
    return count;
}

std::vector<int> pattern_order(const Graph& f) {
    const int k = f.vertex_count();
    int start = 0;
    for (int v = 1; v < k; ++v)
        if (f.degree(v) > f.degree(start)) start = v;
    // BFS so every later vertex has a mapped neighbor (pattern is connected)
    std::vector<int> order;
    std::uint64_t seen = std::uint64_t(1) << start;
    order.push_back(start);
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::uint64_t nb = f.neighbors(order[i]) & ~seen;
        while (nb) {
            int v = __builtin_ctzll(nb);
            nb &= nb - 1;
            seen |= std::uint64_t(1) << v;
            order.push_back(v);
        }
    }
    return order;
}

}  // namespace

long long count_injective_homomorphisms(const Graph& g, const Graph& f) {
    if (f.vertex_count() > 8)
        throw parameter_error("pattern graphs are limited to 8 vertices, got " +
                              std::to_string(f.vertex_count()));
    if (!is_connected(f)) throw parameter_error("pattern graph must be connected");
    std::vector<int> order = pattern_order(f);
    return injective_hom_count(g, f, order);
}

long long count_copies(const Graph& g, const Graph& f) {
    long long homs = count_injective_homomorphisms(g, f);
    if (homs == 0) return 0;
    long long aut = count_injective_homomorphisms(f, f);
    return homs / aut;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    std::uint64_t left = g.vertex_mask();
    while (left) {
        int v = __builtin_ctzll(left);
        std::uint64_t comp = std::uint64_t(1) << v;
        for (;;) {
            std::uint64_t grown = comp;
            std::uint64_t b = comp;
            while (b) {
                int u = __builtin_ctzll(b);
                b &= b - 1;
                grown |= g.neighbors(u);
            }
            if (grown == comp) break;
            comp = grown;
        }
        out.push_back(VertexSet{comp});
        left &= ~comp;
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

Graph rotate_edges(const Graph& g, int vi, int vj, VertexSet s) {
    const int n = g.vertex_count();
    if (vi < 0 || vj < 0 || vi >= n || vj >= n || vi == vj)
        throw parameter_error("rotate_edges: invalid vertex pair");
    if (s.empty()) throw parameter_error("rotate_edges: empty rotation set");
    if (s.bits & ~g.neighbors(vj))
        throw parameter_error("rotate_edges: set is not contained in N(vj)");
    if (s.bits & (g.neighbors(vi) | (std::uint64_t(1) << vi)))
        throw parameter_error("rotate_edges: set meets N(vi) or vi itself");
    std::vector<std::uint64_t> rows(n);
    for (int v = 0; v < n; ++v) rows[v] = g.neighbors(v);
    rows[vj] &= ~s.bits;
    rows[vi] |= s.bits;
    s.for_each([&](int v) {
        rows[v] &= ~(std::uint64_t(1) << vj);
        rows[v] |= std::uint64_t(1) << vi;
    });
    return graph_with_rows(n, std::move(rows));
}

// --- graph6 ------------------------------------------------------------

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph from_graph6(std::string_view text) {
    if (text.empty()) throw parse_error("empty graph6 string", 0);
    std::size_t pos = 0;
    auto byte_at = [&](std::size_t i) -> int {
        int c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw parse_error("byte outside graph6 alphabet", i);
        return c - 63;
    };
    long n;
    if (static_cast<unsigned char>(text[0]) == 126) {
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
            throw parse_error("graph order beyond 64 is not supported", 1);
        if (text.size() < 4) throw parse_error("truncated graph6 header", text.size());
        n = (long(byte_at(1)) << 12) | (long(byte_at(2)) << 6) | long(byte_at(3));
        pos = 4;
    } else {
        n = byte_at(0);
        pos = 1;
    }
    if (n < 1) throw parse_error("graph6 order must be at least 1", 0);
    if (n > Graph::max_vertices) throw parse_error("graph order beyond 64 is not supported", 0);

    const long bits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() < pos + body) throw parse_error("truncated graph6 body", text.size());
    if (text.size() > pos + body) throw parse_error("trailing bytes after graph6 body", pos + body);

    std::vector<std::uint64_t> rows(n, 0);
    long bit = 0;
    for (std::size_t k = 0; k < body; ++k) {
        int v = byte_at(pos + k);
        for (int b = 5; b >= 0; --b, ++bit) {
            int set = (v >> b) & 1;
            if (bit >= bits) {
                if (set) throw parse_error("nonzero padding bits", pos + k);
                continue;
            }
            if (set) {
                // bit index -> (i, j) in column-major upper-triangle order
                long t = bit;
                long j = 1;
                while (t >= j) t -= j, ++j;
                long i = t;
                rows[i] |= std::uint64_t(1) << j;
                rows[j] |= std::uint64_t(1) << i;
            }
        }
    }
    return graph_with_rows(static_cast<int>(n), std::move(rows));
}

}  // namespace ser
