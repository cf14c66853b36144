#include "spectral_er/constructions.hpp"

#include "spectral_er/errors.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace ser {

namespace {

std::vector<int> part_sizes(int n, int r) {
    std::vector<int> sizes(r, n / r);
    for (int i = 0; i < n % r; ++i) ++sizes[i];
    return sizes;
}

using EdgeList = std::vector<std::pair<int, int>>;

Graph complete_multipartite(const std::vector<int>& sizes, int n, EdgeList extra = {},
                            EdgeList removed = {}) {
    EdgeList edges;
    int start = 0;
    std::vector<std::pair<int, int>> ranges;
    for (int s : sizes) {
        ranges.emplace_back(start, start + s);
        start += s;
    }
    for (std::size_t p = 0; p < ranges.size(); ++p)
        for (std::size_t q = p + 1; q < ranges.size(); ++q)
            for (int u = ranges[p].first; u < ranges[p].second; ++u)
                for (int v = ranges[q].first; v < ranges[q].second; ++v)
                    edges.emplace_back(u, v);
    for (auto e : removed) {
        auto it = std::find(edges.begin(), edges.end(), e);
        if (it != edges.end()) edges.erase(it);
    }
    edges.insert(edges.end(), extra.begin(), extra.end());
    return Graph::from_edges(n, edges);
}

}  // namespace

Graph turan(int n, int r) {
    if (r < 1 || r > n) throw parameter_error("turan: need 1 <= r <= n");
    return complete_multipartite(part_sizes(n, r), n);
}

Graph turan_plus_star(int n, int r, int q) {
    if (r < 1 || r > n) throw parameter_error("turan_plus_star: need 1 <= r <= n");
    const int big = (n + r - 1) / r;  // ceil(n/r) = size of the first part
    if (q < 1 || q > big - 1)
        throw parameter_error("turan_plus_star: star with " + std::to_string(q) +
                              " edges does not fit in a part of size " + std::to_string(big));
    EdgeList star;
    for (int leaf = 1; leaf <= q; ++leaf) star.emplace_back(0, leaf);
    return complete_multipartite(part_sizes(n, r), n, star);
}

Graph k_plus(int n) {
    if (n < 3) throw parameter_error("k_plus: need n >= 3");
    return turan_plus_star(n, 2, 1);
}

std::optional<RemarkKind> remark_kind_from_name(const std::string& name) {
    if (name == "unbalanced-plus" || name == "unbalanced_plus") return RemarkKind::unbalanced_plus;
    if (name == "even-plus-minus" || name == "even_plus_minus") return RemarkKind::even_plus_minus;
    if (name == "odd-plus-minus" || name == "odd_plus_minus") return RemarkKind::odd_plus_minus;
    return std::nullopt;
}

std::string remark_kind_name(RemarkKind kind) {
    switch (kind) {
        case RemarkKind::unbalanced_plus: return "unbalanced-plus";
        case RemarkKind::even_plus_minus: return "even-plus-minus";
        case RemarkKind::odd_plus_minus: return "odd-plus-minus";
    }
    return "?";
}

Graph remark_graph(RemarkKind kind, int n) {
    switch (kind) {
        case RemarkKind::unbalanced_plus: {
            if (n < 6 || n % 2 != 0) throw parameter_error("unbalanced-plus: need even n >= 6");
            return complete_multipartite({n / 2 + 1, n / 2 - 1}, n, {{0, 1}});
        }
        case RemarkKind::even_plus_minus: {
            if (n < 6 || n % 2 != 0) throw parameter_error("even-plus-minus: need even n >= 6");
            // add e1 = {0,1} inside the first part, delete the crossing edge
            // {0, n/2} incident to e1
            return complete_multipartite({n / 2, n / 2}, n, {{0, 1}}, {{0, n / 2}});
        }
        case RemarkKind::odd_plus_minus: {
            if (n < 5 || n % 2 != 1) throw parameter_error("odd-plus-minus: need odd n >= 5");
            const int big = (n + 1) / 2;
            return complete_multipartite({big, n - big}, n, {{0, 1}}, {{0, big}});
        }
    }
    throw parameter_error("unknown remark kind");
}

std::optional<CaseTag> case_tag_from_name(const std::string& name) {
    if (name.size() == 2 && (name[0] == 'G' || name[0] == 'g') && name[1] >= '1' && name[1] <= '8')
        return static_cast<CaseTag>(name[1] - '1');
    return std::nullopt;
}

std::string case_tag_name(CaseTag tag) { return "G" + std::to_string(static_cast<int>(tag) + 1); }

namespace {

// Shared frame of the proof-case graphs: apex 0 over A = {1..na}, B independent,
// every B-vertex adjacent to A minus `excluded`.
Graph apex_frame(int n, int na, const EdgeList& a_edges, VertexSet excluded) {
    EdgeList edges;
    for (int u = 1; u <= na; ++u) edges.emplace_back(0, u);
    edges.insert(edges.end(), a_edges.begin(), a_edges.end());
    for (int w = na + 1; w < n; ++w)
        for (int u = 1; u <= na; ++u)
            if (!excluded.contains(u)) edges.emplace_back(w, u);
    return Graph::from_edges(n, edges);
}

long require_split(const CaseGraphId& id, const char* what, long expected) {
    if (!id.a || !id.b || id.c)
        throw parameter_error(std::string(what) + ": needs split parameters (s1, s2)");
    if (*id.a < 0 || *id.b < 0 || *id.a + *id.b != expected)
        throw parameter_error(std::string(what) + ": split must satisfy s1+s2 = " +
                              std::to_string(expected));
    return *id.a;
}

}  // namespace

Graph case_graph(const CaseGraphId& id, int n) {
    const bool need_params =
        id.tag == CaseTag::G1 || id.tag == CaseTag::G3 || id.tag == CaseTag::G7 ||
        id.tag == CaseTag::G8;
    if (!need_params && (id.a || id.b || id.c))
        throw parameter_error(case_tag_name(id.tag) + " takes no parameters");
    if (id.tag == CaseTag::G5 || id.tag == CaseTag::G6) {
        if (n != 8) throw parameter_error(case_tag_name(id.tag) + ": defined for n = 8 only");
    } else if (n < 8 || n % 2 != 0) {
        throw parameter_error(case_tag_name(id.tag) + ": need even n >= 8");
    }
    const int na = n / 2 + 1;

    switch (id.tag) {
        case CaseTag::G1: {
            long s1 = require_split(id, "G1", n / 2 - 3);
            EdgeList a = {{1, 2}, {2, 3}, {3, 4}};  // P4 = u0 u1 u2 u3
            int next = 5;
            for (long i = 0; i < s1; ++i) a.emplace_back(2, next++);
            while (next <= na) a.emplace_back(3, next++);
            return apex_frame(n, na, a, VertexSet::of({2, 3}));
        }
        case CaseTag::G2: {
            // star at u2 = 1 with u0 = 3 pendant on the leaf u1 = 2
            EdgeList a = {{1, 2}, {2, 3}};
            for (int leaf = 4; leaf <= na; ++leaf) a.emplace_back(1, leaf);
            return apex_frame(n, na, a, VertexSet::of({1, 2}));
        }
        case CaseTag::G3: {
            long s1 = require_split(id, "G3", n / 2 - 4);
            EdgeList a = {{1, 2}, {2, 3}, {3, 4}, {4, 5}};  // P5 = u0..u4
            int next = 6;
            for (long i = 0; i < s1; ++i) a.emplace_back(2, next++);
            while (next <= na) a.emplace_back(4, next++);
            return apex_frame(n, na, a, VertexSet::of({2, 4}));
        }
        case CaseTag::G4: {
            EdgeList a = {{1, 2}, {2, 3}, {3, 4}, {4, 5}};
            for (int extra = 6; extra <= na; ++extra) a.emplace_back(4, extra);
            return apex_frame(n, na, a, VertexSet::of({2, 4}));
        }
        case CaseTag::G5:
        case CaseTag::G6: {
            // A = {1..5}: C4 = 1-3-2-4-1 (1,2 and 3,4 are the opposite pairs), 5 isolated
            EdgeList a = {{1, 3}, {3, 2}, {2, 4}, {4, 1}};
            EdgeList edges;
            for (int u = 1; u <= 5; ++u) edges.emplace_back(0, u);
            edges.insert(edges.end(), a.begin(), a.end());
            VertexSet ex6 = VertexSet::of({1, 2});
            VertexSet ex7 = id.tag == CaseTag::G5 ? VertexSet::of({1, 2}) : VertexSet::of({3, 4});
            for (int u = 1; u <= 5; ++u) {
                if (!ex6.contains(u)) edges.emplace_back(6, u);
                if (!ex7.contains(u)) edges.emplace_back(7, u);
            }
            return Graph::from_edges(8, edges);
        }
        case CaseTag::G7:
        case CaseTag::G8: {
            if (!id.a || !id.b || !id.c)
                throw parameter_error(case_tag_name(id.tag) + ": needs (a, b, c)");
            long a = *id.a, b = *id.b, c = *id.c;
            if (a < 2 || b < 0 || c < 0 || a + b + c != n / 2 - 1 || 2 * a + b != n / 2)
                throw parameter_error(case_tag_name(id.tag) +
                                      ": need a+b+c = n/2-1, 2a+b = n/2, a >= 2");
            EdgeList edges_a;
            int next = 3;
            for (long i = 0; i < a; ++i, ++next) {
                edges_a.emplace_back(1, next);
                edges_a.emplace_back(2, next);
            }
            long on_u1 = (id.tag == CaseTag::G8) ? b : (b + 1) / 2;
            for (long i = 0; i < b; ++i, ++next) edges_a.emplace_back(i < on_u1 ? 1 : 2, next);
            // remaining c vertices of A stay isolated
            return apex_frame(n, na, edges_a, VertexSet::of({1, 2}));
        }
    }
    throw parameter_error("unknown case tag");
}

Graph claim10_graph(bool even, int n) {
    if (even && (n % 2 != 0 || n < 10)) throw parameter_error("claim10: need even n >= 10");
    if (!even && (n % 2 != 1 || n < 9)) throw parameter_error("claim10: need odd n >= 9");
    const int t = even ? n / 2 : (n - 1) / 2;
    const int na = t + 2;  // star K_{1,t} at u0 = 1, leaves 2..t+1, isolated t+2
    EdgeList edges;
    for (int u = 1; u <= na; ++u) edges.emplace_back(0, u);
    for (int leaf = 2; leaf <= t + 1; ++leaf) edges.emplace_back(1, leaf);
    for (int w = na + 1; w < n; ++w)
        for (int u = 2; u <= na; ++u) edges.emplace_back(w, u);
    return Graph::from_edges(n, edges);
}

long long min_added_edge_copies(int n, int r, const Graph& f) {
    if (r < 2) throw parameter_error("min_added_edge_copies: need r >= 2");
    Graph t = turan(n, r);
    long long best = std::numeric_limits<long long>::max();
    bool any = false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (t.has_edge(u, v)) continue;  // non-edges are exactly the intra-part pairs
            auto edges = t.edges();
            edges.emplace_back(u, v);
            best = std::min(best, count_copies(Graph::from_edges(n, edges), f));
            any = true;
        }
    if (!any) throw parameter_error("min_added_edge_copies: T_{n,r} has no intra-part non-edge");
    return best;
}

}  // namespace ser
