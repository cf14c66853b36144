#include "spectral_er/enumerate.hpp"

#include "spectral_er/errors.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_set>

namespace ser {

namespace {

struct BytesHash {
    std::size_t operator()(const std::vector<std::uint8_t>& b) const {
        std::size_t h = 1469598103934665603ull;
        for (auto c : b) h = (h ^ c) * 1099511628211ull;
        return h;
    }
};

}  // namespace

bool EnumerationFilter::admits(const Graph& g) const {
    const int m = g.edge_count();
    if (min_edges && m < *min_edges) return false;
    if (max_edges && m > *max_edges) return false;
    if (min_lambda_hint) {
        // lambda <= sqrt(2m): graphs with 2m safely below hint^2 cannot qualify
        double h2 = *min_lambda_hint * *min_lambda_hint;
        if (2.0 * m < h2 - 1e-9 * (1.0 + h2)) return false;
    }
    if (connected_only && !is_connected(g)) return false;
    return true;
}

std::vector<Graph> augment_children(const Graph& parent, std::optional<int> max_edges) {
    const int k = parent.vertex_count();
    std::vector<Graph> accepted;
    if (k >= Graph::max_vertices) return accepted;
    if (max_edges && parent.edge_count() > *max_edges) return accepted;

    std::unordered_set<std::vector<std::uint8_t>, BytesHash> seen;
    std::vector<std::uint64_t> rows(k + 1);
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << k); ++s) {
        if (max_edges && parent.edge_count() + __builtin_popcountll(s) > *max_edges) continue;
        for (int v = 0; v < k; ++v)
            rows[v] = parent.neighbors(v) | (((s >> v) & 1u) << k);
        rows[k] = s;
        Graph child = graph_with_rows(k + 1, rows);
        CanonicalForm canon = canonicalize(child);
        // canonical deletion: the vertex in the last canonical position must be
        // in the same orbit as the vertex we just added
        int delta = -1;
        for (int v = 0; v <= k; ++v)
            if (canon.position[v] == k) {
                delta = v;
                break;
            }
        if (canon.orbit[delta] != canon.orbit[k]) continue;
        // dedup only among accepted labelings: a rejected labeling of the same
        // class must not shadow an accepting one
        if (!seen.insert(canon.bytes).second) continue;
        accepted.push_back(std::move(child));
    }
    return accepted;
}

namespace {

std::vector<Graph> build_level(const std::vector<Graph>& parents, std::optional<int> max_edges,
                               int workers) {
    std::vector<std::vector<Graph>> slots(parents.size());
    if (workers <= 1 || parents.size() < 16) {
        for (std::size_t i = 0; i < parents.size(); ++i)
            slots[i] = augment_children(parents[i], max_edges);
    } else {
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= parents.size()) return;
                slots[i] = augment_children(parents[i], max_edges);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    std::vector<Graph> out;
    for (auto& s : slots)
        for (auto& g : s) out.push_back(std::move(g));
    return out;
}

std::mutex cache_mutex;
std::map<int, std::vector<Graph>> level_cache;

}  // namespace

const std::vector<Graph>& graph_classes(int k, int workers) {
    if (k < 1 || k > 9) throw parameter_error("graph_classes: cached levels cover 1 <= k <= 9");
    std::scoped_lock lock(cache_mutex);
    if (auto it = level_cache.find(k); it != level_cache.end()) return it->second;
    if (level_cache.empty()) level_cache.emplace(1, std::vector<Graph>{Graph::from_edges(1, {})});
    int have = level_cache.rbegin()->first;
    while (have < k) {
        const std::vector<Graph>& parents = level_cache.at(have);
        level_cache.emplace(have + 1, build_level(parents, std::nullopt, workers));
        ++have;
    }
    return level_cache.at(k);
}

void enumerate_nonisomorphic(int n, const EnumerationFilter& filter,
                             const std::function<void(const Graph&)>& visit, int workers) {
    if (n < 1) throw parameter_error("enumeration needs n >= 1");
    if (n > 10)
        throw parameter_error("enumeration is limited to n <= 10 (documented scale limit)");
    if (n <= 9) {
        for (const Graph& g : graph_classes(n, workers))
            if (filter.admits(g)) visit(g);
        return;
    }
    // n = 10: stream children of the cached level-9 classes
    const std::vector<Graph>& parents = graph_classes(9, workers);
    for (const Graph& p : parents)
        for (const Graph& child : augment_children(p, filter.max_edges))
            if (filter.admits(child)) visit(child);
}

std::vector<Graph> enumerate_nonisomorphic(int n, const EnumerationFilter& filter) {
    std::vector<Graph> out;
    enumerate_nonisomorphic(n, filter, [&](const Graph& g) { out.push_back(g); }, 1);
    return out;
}

}  // namespace ser
