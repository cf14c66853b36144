#include "spectral_er/graph.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <numeric>

namespace ser {

namespace {

// Iterated neighborhood-color refinement (1-dimensional Weisfeiler-Leman).
// Color ids are assigned in sorted key order, so they are isomorphism-invariant.
std::vector<int> refine_colors(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, 0);
    int classes = 1;
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> keys(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> k;
            k.push_back(color[v]);
            std::uint64_t nb = g.neighbors(v);
            std::vector<int> ncols;
            while (nb) {
                int u = __builtin_ctzll(nb);
                nb &= nb - 1;
                ncols.push_back(color[u]);
            }
            std::sort(ncols.begin(), ncols.end());
            k.insert(k.end(), ncols.begin(), ncols.end());
            keys[v] = {std::move(k), v};
        }
        auto sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(n);
        int id = -1;
        const std::vector<int>* prev = nullptr;
        for (auto& [k, v] : sorted) {
            if (!prev || k != *prev) ++id, prev = &k;
            next[v] = id;
        }
        if (id + 1 == classes) return next;
        classes = id + 1;
        color = std::move(next);
    }
}

struct Searcher {
    const Graph& g;
    int n;
    std::vector<int> required_color;  // color expected at each canonical position
    std::vector<int> perm;            // position -> original vertex
    std::vector<int> pos_of;          // original vertex -> position (-1 if unassigned)
    std::vector<int> color;
    std::vector<std::uint64_t> rows;  // rows[p]: adjacency of perm[p] to earlier positions
    bool have_best = false;
    std::vector<std::uint64_t> best_rows;
    std::vector<int> best_perm;
    std::vector<std::vector<int>> autos;  // discovered automorphisms (vertex maps)
    std::vector<int> uf;                  // orbit union-find

    explicit Searcher(const Graph& graph) : g(graph), n(graph.vertex_count()) {
        color = refine_colors(g);
        std::vector<int> by_color(n);
        std::iota(by_color.begin(), by_color.end(), 0);
        std::stable_sort(by_color.begin(), by_color.end(),
                         [&](int a, int b) { return color[a] < color[b]; });
        required_color.resize(n);
        for (int p = 0; p < n; ++p) required_color[p] = color[by_color[p]];
        perm.assign(n, -1);
        pos_of.assign(n, -1);
        rows.assign(n, 0);
        uf.resize(n);
        std::iota(uf.begin(), uf.end(), 0);
    }

    int find(int v) { return uf[v] == v ? v : uf[v] = find(uf[v]); }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        uf[b] = a;  // keep smallest vertex as representative
    }

    std::uint64_t row_bits(int v, int p) const {
        std::uint64_t nb = g.neighbors(v);
        std::uint64_t row = 0;
        while (nb) {
            int u = __builtin_ctzll(nb);
            nb &= nb - 1;
            int q = pos_of[u];
            if (q >= 0 && q < p) row |= std::uint64_t(1) << (63 - q);
        }
        return row;
    }

    void record_automorphism() {
        std::vector<int> a(n);
        for (int p = 0; p < n; ++p) a[best_perm[p]] = perm[p];
        for (int v = 0; v < n; ++v) unite(v, a[v]);
        autos.push_back(std::move(a));
    }

    // true if some discovered automorphism fixes the assigned prefix pointwise
    // and maps v onto a candidate already handled at this node
    bool pruned_by_automorphism(int v, int p, const std::vector<int>& tried) const {
        for (const auto& a : autos) {
            bool fixes = true;
            for (int q = 0; q < p; ++q) {
                if (a[perm[q]] != perm[q]) {
                    fixes = false;
                    break;
                }
            }
            if (!fixes) continue;
            int image = a[v];
            if (std::find(tried.begin(), tried.end(), image) != tried.end()) return true;
        }
        return false;
    }

    // Returns true if best was replaced within this subtree.
    bool dfs(int p, bool tight) {
        if (p == n) {
            if (have_best && tight) {
                record_automorphism();
                return false;
            }
            best_rows = rows;
            best_perm = perm;
            have_best = true;
            return true;
        }
        bool replaced_any = false;
        std::vector<int> tried;
        for (int v = 0; v < n; ++v) {
            if (pos_of[v] >= 0 || color[v] != required_color[p]) continue;
            if (pruned_by_automorphism(v, p, tried)) {
                tried.push_back(v);
                continue;
            }
            std::uint64_t row = row_bits(v, p);
            bool child_tight = false;
            if (tight && have_best) {
                if (row > best_rows[p]) {
                    tried.push_back(v);
                    continue;
                }
                child_tight = (row == best_rows[p]);
            }
            perm[p] = v;
            pos_of[v] = p;
            rows[p] = row;
            bool rep = dfs(p + 1, child_tight);
            pos_of[v] = -1;
            perm[p] = -1;
            if (rep) {
                replaced_any = true;
                tight = true;  // the new best runs through this prefix
            }
            tried.push_back(v);
        }
        return replaced_any;
    }
};

}  // namespace

CanonicalForm canonicalize(const Graph& g) {
    const int n = g.vertex_count();
    Searcher s(g);
    s.dfs(0, true);

    CanonicalForm out;
    out.bytes.reserve(1 + (n * (n - 1) / 2 + 7) / 8);
    out.bytes.push_back(static_cast<std::uint8_t>(n));
    int acc = 0, nbits = 0;
    for (int p = 1; p < n; ++p) {
        for (int q = 0; q < p; ++q) {
            int bit = static_cast<int>((s.best_rows[p] >> (63 - q)) & 1u);
            acc = (acc << 1) | bit;
            if (++nbits == 8) {
                out.bytes.push_back(static_cast<std::uint8_t>(acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits) out.bytes.push_back(static_cast<std::uint8_t>(acc << (8 - nbits)));

    out.position.resize(n);
    for (int p = 0; p < n; ++p) out.position[s.best_perm[p]] = p;
    out.orbit.resize(n);
    for (int v = 0; v < n; ++v) out.orbit[v] = s.find(v);
    return out;
}

std::vector<std::uint8_t> canonical_form(const Graph& g) { return canonicalize(g).bytes; }

long long aut_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color = refine_colors(g);
    std::vector<int> map(n, -1);
    std::uint64_t used = 0;
    long long count = 0;
    // map vertex v (in index order) to an unused vertex of equal color whose
    // adjacency agrees with all earlier images
    auto dfs = [&](auto&& self, int v) -> void {
        if (v == n) {
            ++count;
            return;
        }
        for (int w = 0; w < n; ++w) {
            if ((used >> w) & 1u) continue;
            if (color[w] != color[v]) continue;
            bool ok = true;
            for (int u = 0; u < v; ++u) {
                if (g.has_edge(v, u) != g.has_edge(w, map[u])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[v] = w;
            used |= std::uint64_t(1) << w;
            self(self, v + 1);
            used &= ~(std::uint64_t(1) << w);
        }
        map[v] = -1;
    };
    dfs(dfs, 0);
    return count;
}

}  // namespace ser
