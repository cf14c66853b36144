#include "spectral_er/graph.hpp"

#include "spectral_er/enumerate.hpp"
#include "spectral_er/errors.hpp"
#include "spectral_er/spectral.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace ser;

namespace {

Graph triangle() { return Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}); }

Graph random_graph(int n, std::mt19937& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1u) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph::from_edges(g.vertex_count(), edges);
}

// Independent triangle count: trace(A^3)/6 with small integer matrices.
long long triangles_by_trace(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = g.has_edge(i, j) ? 1 : 0;
    auto mul = [&](const auto& x, const auto& y) {
        std::vector<std::vector<long long>> z(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (x[i][k])
                    for (int j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
        return z;
    };
    auto a3 = mul(mul(a, a), a);
    long long tr = 0;
    for (int i = 0; i < n; ++i) tr += a3[i][i];
    return tr / 6;
}

}  // namespace

TEST_CASE("make_graph basics") {
    Graph k3 = triangle();
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(count_triangles(k3) == 1);

    Graph empty2 = Graph::from_edges(2, {});
    CHECK(empty2.edge_count() == 0);

    // duplicate edges collapse
    Graph dup = Graph::from_edges(4, {{0, 1}, {0, 1}});
    CHECK(dup == Graph::from_edges(4, {{0, 1}}));

    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), parameter_error);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 5}}), parameter_error);
    CHECK_THROWS_AS(Graph::from_edges(0, {}), parameter_error);
    CHECK_THROWS_AS(Graph::from_edges(65, {}), parameter_error);
}

TEST_CASE("graph6 round trip and reference encodings") {
    CHECK(to_graph6(triangle()) == "Bw");
    CHECK(to_graph6(Graph::from_edges(1, {})) == "@");
    CHECK(from_graph6("Bw") == triangle());

    std::mt19937 rng(7);
    for (int round = 0; round < 10000; ++round) {
        int n = 1 + static_cast<int>(rng() % 64);
        Graph g = random_graph(n, rng);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
    // the long header kicks in at n = 63
    Graph g63 = random_graph(63, rng);
    CHECK(to_graph6(g63)[0] == 126);
    CHECK(from_graph6(to_graph6(g63)) == g63);
    Graph g64 = random_graph(64, rng);
    CHECK(from_graph6(to_graph6(g64)) == g64);
}

TEST_CASE("graph6 parse errors carry byte offsets") {
    CHECK_THROWS_AS(from_graph6(""), parse_error);
    CHECK_THROWS_AS(from_graph6("B"), parse_error);      // truncated body
    CHECK_THROWS_AS(from_graph6("Bww"), parse_error);    // trailing bytes
    CHECK_THROWS_AS(from_graph6("B\x1f"), parse_error);  // byte below 63
    CHECK_THROWS_AS(from_graph6("?"), parse_error);      // zero vertices
    try {
        from_graph6("Bww");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset == 2);
    }
}

TEST_CASE("triangle count equals trace(A^3)/6 on every class up to n=7") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : graph_classes(n)) CHECK(count_triangles(g) == triangles_by_trace(g));
}

TEST_CASE("copy counting") {
    Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(count_copies(k4, triangle()) == 4);
    CHECK(count_copies(c5, c5) == 1);

    // K_{3,3} plus an edge inside a part holds 6 five-cycles
    Graph k33e = Graph::from_edges(
        6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {0, 1}});
    CHECK(count_copies(k33e, c5) == 6);

    CHECK_THROWS_AS(count_copies(k4, Graph::from_edges(9, {{0, 1}})), parameter_error);
    CHECK_THROWS_AS(count_copies(k4, Graph::from_edges(4, {{0, 1}, {2, 3}})), parameter_error);

    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : graph_classes(n))
            CHECK(count_copies(g, triangle()) == count_triangles(g));
}

TEST_CASE("canonical form is invariant under relabeling") {
    Graph p4a = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    Graph p4b = Graph::from_edges(4, {{2, 0}, {0, 3}, {3, 1}});  // P4 relabeled 2-0-3-1
    CHECK(canonical_form(p4a) == canonical_form(p4b));

    Graph k3_k1 = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(canonical_form(k3_k1) != canonical_form(p4a));

    std::mt19937 rng(123);
    Graph g = random_graph(8, rng);
    auto base = canonical_form(g);
    std::vector<int> perm{0, 1, 2, 3, 4, 5, 6, 7};
    for (int round = 0; round < 1000; ++round) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(relabel(g, perm)) == base);
    }
}

TEST_CASE("canonical form is stable under 100 relabelings of every 5-vertex class") {
    std::mt19937 rng(5);
    std::vector<int> perm{0, 1, 2, 3, 4};
    for (const Graph& g : graph_classes(5)) {
        auto base = canonical_form(g);
        for (int round = 0; round < 100; ++round) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_form(relabel(g, perm)) == base);
        }
    }
}

TEST_CASE("rotation raises the spectral radius on valid Perron instances") {
    // light version of the exhaustive acceptance property
    std::mt19937 rng(99);
    int done = 0;
    while (done < 200) {
        int n = 4 + static_cast<int>(rng() % 9);
        Graph g = random_graph(n, rng);
        if (!is_connected(g)) continue;
        SpectralResult perron = spectral_radius(g, 1e-12);
        int vi = static_cast<int>(rng() % n), vj = static_cast<int>(rng() % n);
        if (vi == vj) continue;
        if (perron.vector[vi] < perron.vector[vj]) std::swap(vi, vj);
        std::uint64_t movable = g.neighbors(vj) & ~(g.neighbors(vi) | (std::uint64_t(1) << vi));
        if (!movable) continue;
        VertexSet s;
        s.add(__builtin_ctzll(movable));
        Graph rotated = rotate_edges(g, vi, vj, s);
        CHECK(rotated.edge_count() == g.edge_count());
        CHECK(spectral_radius(rotated, 1e-12).lo > perron.hi);
        ++done;
    }
}

TEST_CASE("canonical form separates all 11 classes at n=4") {
    // bucket all 64 labeled graphs on 4 vertices by canonical form
    std::map<std::vector<std::uint8_t>, int> buckets;
    std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int mask = 0; mask < 64; ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (int b = 0; b < 6; ++b)
            if (mask >> b & 1) edges.push_back(pairs[b]);
        ++buckets[canonical_form(Graph::from_edges(4, edges))];
    }
    CHECK(buckets.size() == 11);
}

TEST_CASE("rotation moves a neighborhood subset") {
    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    Graph star = rotate_edges(p4, 1, 2, VertexSet::of({3}));
    CHECK(star == Graph::from_edges(4, {{0, 1}, {1, 2}, {1, 3}}));
    CHECK(star.edge_count() == p4.edge_count());

    // a Lemma 2.2 instance: the golden ratio moves up to sqrt(3)
    CHECK(spectral_radius(p4, 1e-10).lambda == doctest::Approx(1.6180339887).epsilon(1e-8));
    CHECK(spectral_radius(star, 1e-10).lambda == doctest::Approx(1.7320508076).epsilon(1e-8));

    CHECK_THROWS_AS(rotate_edges(p4, 1, 2, VertexSet{}), parameter_error);
    CHECK_THROWS_AS(rotate_edges(p4, 1, 2, VertexSet::of({0})), parameter_error);  // not in N(2)
    CHECK_THROWS_AS(rotate_edges(p4, 3, 1, VertexSet::of({2})), parameter_error);  // 2 in N(3)
    CHECK_THROWS_AS(rotate_edges(p4, 1, 1, VertexSet::of({0})), parameter_error);
}

TEST_CASE("components") {
    Graph k3_k1 = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(components(k3_k1).size() == 2);
    CHECK(!is_connected(k3_k1));
    Graph p5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(is_connected(p5));
    CHECK(components(Graph::from_edges(4, {})).size() == 4);
}

TEST_CASE("automorphism group orders") {
    CHECK(aut_order(triangle()) == 6);
    CHECK(aut_order(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}})) == 2);   // P4
    CHECK(aut_order(Graph::from_edges(5, {})) == 120);
    CHECK(aut_order(Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})) == 10);  // C5
    Graph petersen = Graph::from_edges(
        10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},   // outer C5
             {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},   // inner pentagram
             {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});  // spokes
    CHECK(aut_order(petersen) == 120);
}

TEST_CASE("canonical orbits match known vertex orbits") {
    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CanonicalForm c = canonicalize(p4);
    CHECK(c.orbit[0] == c.orbit[3]);  // ends
    CHECK(c.orbit[1] == c.orbit[2]);  // middles
    CHECK(c.orbit[0] != c.orbit[1]);

    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CanonicalForm cc = canonicalize(c5);
    for (int v = 1; v < 5; ++v) CHECK(cc.orbit[v] == cc.orbit[0]);
}
