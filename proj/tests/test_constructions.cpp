#include "spectral_er/constructions.hpp"

#include "spectral_er/errors.hpp"
#include "spectral_er/spectral.hpp"

#include <doctest.h>

using namespace ser;

namespace {
Graph pattern_k3() { return Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}); }
Graph pattern_c5() {
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}
}  // namespace

TEST_CASE("Turan graphs") {
    CHECK(canonical_form(turan(4, 2)) ==
          canonical_form(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})));  // C4
    CHECK(turan(5, 2).edge_count() == 6);
    Graph t73 = turan(7, 3);
    CHECK(t73.edge_count() == 16);  // parts 3,2,2

    CHECK_THROWS_AS(turan(4, 0), parameter_error);
    CHECK_THROWS_AS(turan(4, 5), parameter_error);

    // e(T_{n,r}) = sum over part pairs of n_i * n_j
    for (int n = 1; n <= 30; ++n)
        for (int r = 1; r <= 5 && r <= n; ++r) {
            std::vector<int> sizes(r, n / r);
            for (int i = 0; i < n % r; ++i) ++sizes[i];
            long expect = 0;
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j) expect += long(sizes[i]) * sizes[j];
            CHECK(turan(n, r).edge_count() == expect);
        }
}

TEST_CASE("Turan plus star") {
    Graph diamond = turan_plus_star(4, 2, 1);
    CHECK(count_triangles(diamond) == 2);
    CHECK(diamond.edge_count() == 5);

    Graph t923 = turan_plus_star(9, 2, 3);
    CHECK(count_triangles(t923) == 12);  // each star edge with each opposite vertex

    CHECK(turan_plus_star(6, 3, 1).edge_count() == 13);

    CHECK_THROWS_AS(turan_plus_star(4, 2, 2), parameter_error);  // star too big for the part
    CHECK_THROWS_AS(turan_plus_star(6, 2, 0), parameter_error);

    for (int n = 4; n <= 20; ++n)
        for (int q = 1; q < (n + 1) / 2; ++q)
            CHECK(count_triangles(turan_plus_star(n, 2, q)) ==
                  static_cast<long long>(q) * (n / 2));
}

TEST_CASE("k_plus") {
    CHECK(count_triangles(k_plus(4)) == 2);
    CHECK(count_triangles(k_plus(5)) == 2);
    CHECK(count_triangles(k_plus(8)) == 4);
    CHECK(k_plus(4) == turan_plus_star(4, 2, 1));
    CHECK_THROWS_AS(k_plus(2), parameter_error);
    for (int n = 3; n <= 20; ++n) CHECK(count_triangles(k_plus(n)) == n / 2);
}

TEST_CASE("remark graphs: lambda above T_{n,2}, one triangle short") {
    CHECK(count_triangles(remark_graph(RemarkKind::unbalanced_plus, 8)) == 3);
    CHECK(count_triangles(remark_graph(RemarkKind::odd_plus_minus, 5)) == 1);

    // f2(n/2) = 1-n < 0 puts lambda above n/2 = 3 at n = 6
    CHECK(spectral_radius(remark_graph(RemarkKind::even_plus_minus, 6), 1e-10).lo > 3.0);

    CHECK_THROWS_AS(remark_graph(RemarkKind::unbalanced_plus, 7), parameter_error);
    CHECK_THROWS_AS(remark_graph(RemarkKind::odd_plus_minus, 6), parameter_error);
    CHECK_THROWS_AS(remark_graph(RemarkKind::even_plus_minus, 4), parameter_error);

    for (int n = 5; n <= 20; ++n) {
        std::vector<RemarkKind> kinds;
        if (n % 2 == 0 && n >= 6) {
            kinds = {RemarkKind::unbalanced_plus, RemarkKind::even_plus_minus};
        } else if (n % 2 == 1) {
            kinds = {RemarkKind::odd_plus_minus};
        }
        double t_lambda = spectral_radius(turan(n, 2), 1e-10).hi;
        for (RemarkKind k : kinds) {
            Graph g = remark_graph(k, n);
            CHECK(count_triangles(g) == n / 2 - 1);
            CHECK(spectral_radius(g, 1e-10).lo > t_lambda);
        }
    }
}

TEST_CASE("case graphs") {
    // G5/G6 at n=8 carry the reported eigenvalues
    double l5 = spectral_radius(case_graph({CaseTag::G5, {}, {}, {}}, 8), 1e-10).lambda;
    double l6 = spectral_radius(case_graph({CaseTag::G6, {}, {}, {}}, 8), 1e-10).lambda;
    CHECK(l5 == doctest::Approx(3.934).epsilon(3e-4));
    CHECK(l6 == doctest::Approx(3.884).epsilon(3e-4));

    // G2 reconstruction vs its degree-6 polynomial
    double lg2 = spectral_radius(case_graph({CaseTag::G2, {}, {}, {}}, 10), 1e-10).lambda;
    CHECK(lg2 == doctest::Approx(largest_real_root(poly_family(PolyFamily::g2, 10), 1e-10))
                     .epsilon(1e-8));
    // G4 likewise
    double lg4 = spectral_radius(case_graph({CaseTag::G4, {}, {}, {}}, 12), 1e-10).lambda;
    CHECK(lg4 == doctest::Approx(largest_real_root(poly_family(PolyFamily::g4, 12), 1e-10))
                     .epsilon(1e-8));

    // structural sanity for the parametrized tags
    Graph g1 = case_graph({CaseTag::G1, 1, 0, {}}, 8);
    CHECK(g1.vertex_count() == 8);
    CHECK(count_triangles(g1) == 4);  // t* = e(A) = n/2
    Graph g8 = case_graph({CaseTag::G8, 2, 1, 1}, 10);
    CHECK(count_triangles(g8) == 5);
    Graph g7 = case_graph({CaseTag::G7, 2, 1, 1}, 10);
    CHECK(g7.edge_count() == g8.edge_count());

    CHECK_THROWS_AS(case_graph({CaseTag::G1, {}, {}, {}}, 8), parameter_error);  // split missing
    CHECK_THROWS_AS(case_graph({CaseTag::G1, 2, 0, {}}, 8), parameter_error);    // s1+s2 wrong
    CHECK_THROWS_AS(case_graph({CaseTag::G2, 1, 0, {}}, 8), parameter_error);    // no params
    CHECK_THROWS_AS(case_graph({CaseTag::G8, 1, 3, 0}, 10), parameter_error);    // a < 2
    CHECK_THROWS_AS(case_graph({CaseTag::G5, {}, {}, {}}, 10), parameter_error); // n != 8
    CHECK_THROWS_AS(case_graph({CaseTag::G4, {}, {}, {}}, 9), parameter_error);  // odd n
}

TEST_CASE("claim 10 graphs") {
    Graph even10 = claim10_graph(true, 10);
    CHECK(count_triangles(even10) == 5);
    double le = spectral_radius(even10, 1e-10).lambda;
    CHECK(le == doctest::Approx(largest_real_root(poly_family(PolyFamily::p1, 10), 1e-10))
                    .epsilon(1e-8));
    double lo = spectral_radius(claim10_graph(false, 9), 1e-10).lambda;
    CHECK(lo == doctest::Approx(largest_real_root(poly_family(PolyFamily::p2, 9), 1e-10))
                    .epsilon(1e-8));

    CHECK_THROWS_AS(claim10_graph(true, 9), parameter_error);
    CHECK_THROWS_AS(claim10_graph(false, 10), parameter_error);
    CHECK_THROWS_AS(claim10_graph(true, 8), parameter_error);
}

TEST_CASE("minimum copies over added edges") {
    CHECK(min_added_edge_copies(8, 2, pattern_k3()) == 4);
    CHECK(min_added_edge_copies(6, 2, pattern_c5()) == 6);
    CHECK(min_added_edge_copies(4, 2, pattern_k3()) == 2);
    CHECK_THROWS_AS(min_added_edge_copies(6, 1, pattern_k3()), parameter_error);
    CHECK_THROWS_AS(min_added_edge_copies(2, 2, pattern_k3()), parameter_error);  // no non-edge
}
