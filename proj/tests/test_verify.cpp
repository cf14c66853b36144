#include "spectral_er/verify.hpp"

#include "spectral_er/errors.hpp"

#include <doctest.h>

using namespace ser;

namespace {
Graph pattern_k3() { return Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}); }

bool contains_isomorph(const std::vector<std::string>& g6s, const Graph& g) {
    auto canon = canonical_form(g);
    for (const std::string& s : g6s)
        if (canonical_form(from_graph6(s)) == canon) return true;
    return false;
}
}  // namespace

TEST_CASE("spectral Erdos-Rademacher at small n") {
    VerificationReport r3 = verify_spectral_er(3);
    CHECK(r3.pass());
    CHECK(r3.qualifying == 1);  // K3 only
    CHECK(r3.extremal.size() == 1);
    CHECK(contains_isomorph(r3.extremal, k_plus(3)));

    VerificationReport r4 = verify_spectral_er(4);
    CHECK(r4.pass());
    CHECK(r4.qualifying == 2);  // diamond and K4
    CHECK(r4.extremal.size() == 1);
    CHECK(contains_isomorph(r4.extremal, k_plus(4)));

    CHECK(verify_spectral_er(6).pass());
    CHECK_THROWS_AS(verify_spectral_er(2), parameter_error);
}

TEST_CASE("edge version at small n") {
    for (int n = 3; n <= 7; ++n) {
        VerificationReport rep = verify_edge_er(n);
        CHECK(rep.pass());
    }
}

TEST_CASE("Ning-Zhai spectral bound with the T_{n,2} exemption") {
    for (int n = 4; n <= 7; ++n) CHECK(verify_nz(n).pass());
    // the unbalanced near-miss family attains the bound with equality at n=8
    VerificationReport r8 = verify_nz(8);
    CHECK(r8.pass());
    CHECK(contains_isomorph(r8.extremal, remark_graph(RemarkKind::unbalanced_plus, 8)));
}

TEST_CASE("Lovasz-Simonovits supersaturation") {
    CHECK(verify_lovasz_simonovits(6, 2).pass());
    CHECK(verify_lovasz_simonovits(7, 3).pass());
    CHECK_THROWS_AS(verify_lovasz_simonovits(6, 3), parameter_error);  // q = n/2 rejected
}

TEST_CASE("conjecture exploration agrees with the proven triangle case") {
    VerificationReport conj = verify_conjecture(6, 2, 1, pattern_k3());
    VerificationReport er = verify_spectral_er(6);
    CHECK(conj.below_threshold.empty());
    CHECK(conj.qualifying == er.qualifying);
    CHECK(conj.extremal == er.extremal);
    CHECK(conj.unique_minimizer.value_or(false));
    CHECK(conj.pass());  // report-only: violations stay empty
}

TEST_CASE("near-miss search finds the remark families") {
    VerificationReport r5 = search_near_misses(5);
    CHECK(contains_isomorph(r5.extremal, remark_graph(RemarkKind::odd_plus_minus, 5)));
    VerificationReport r6 = search_near_misses(6);
    CHECK(contains_isomorph(r6.extremal, remark_graph(RemarkKind::unbalanced_plus, 6)));
    CHECK(contains_isomorph(r6.extremal, remark_graph(RemarkKind::even_plus_minus, 6)));
    // T_{n,2} itself is not strictly above the threshold
    CHECK(!contains_isomorph(r6.extremal, turan(6, 2)));
}

TEST_CASE("sqrt(m) checks") {
    for (int n = 4; n <= 7; ++n) CHECK(verify_sqrt_m(n).pass());
}

TEST_CASE("signless Laplacian checks") {
    VerificationReport r6 = verify_signless(6);
    CHECK(r6.pass());
    // the star K_{1,5} attains q = m+1
    Graph star = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    CHECK(contains_isomorph(r6.extremal, star));
}

TEST_CASE("Bollobas-Nikiforov bounds hold on all classes") {
    for (int n = 3; n <= 7; ++n) CHECK(verify_bn_bounds(n).pass());
}

TEST_CASE("reports are deterministic across worker counts") {
    VerifyOptions serial;
    serial.workers = 1;
    VerifyOptions wide;
    wide.workers = 3;
    CHECK(verify_spectral_er(6, serial).to_json(false).dump() ==
          verify_spectral_er(6, wide).to_json(false).dump());
    CHECK(search_near_misses(6, serial).to_json(false).dump() ==
          search_near_misses(6, wide).to_json(false).dump());
}

TEST_CASE("report json matches the published schema") {
    CHECK(report_json_valid(verify_spectral_er(5).to_json()));
    CHECK(report_json_valid(verify_edge_er(5).to_json()));
    CHECK(report_json_valid(verify_lovasz_simonovits(6, 2).to_json()));
    CHECK(report_json_valid(verify_conjecture(5, 2, 1, pattern_k3()).to_json()));
    CHECK(report_json_valid(search_near_misses(5).to_json()));
    CHECK(!report_json_valid(nlohmann::json::array()));
    CHECK(!report_json_valid(nlohmann::json{{"check", 1}}));
}

TEST_CASE("threshold ties resolve exactly") {
    // k_plus(8) sits exactly on its own threshold: the numeric enclosures
    // overlap and the exact route must report equality
    Graph kp = k_plus(8);
    LambdaThreshold thr = adjacency_threshold(kp);
    SpectralResult r = spectral_radius(kp, 1e-10);
    CHECK(compare_lambda(kp, r, thr) == Cmp::equal);
    CHECK(compare_lambda(turan(8, 1), r, thr) == Cmp::below);   // empty graph
    CHECK(compare_lambda(turan(8, 8), spectral_radius(turan(8, 8), 1e-10), thr) ==
          Cmp::above);  // K8
    // T_{8,2} against its own threshold, through a different labeling
    Graph t82 = turan(8, 2);
    Graph relabeled = from_graph6(to_graph6(t82));
    CHECK(compare_lambda(relabeled, spectral_radius(relabeled, 1e-10),
                         adjacency_threshold(t82)) == Cmp::equal);
}

TEST_CASE("complete bipartite recognition") {
    CHECK(is_complete_bipartite_plus_isolated(turan(6, 2)));
    CHECK(is_complete_bipartite_plus_isolated(
        Graph::from_edges(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}})));  // K22 + isolated
    CHECK(is_complete_bipartite_plus_isolated(Graph::from_edges(2, {{0, 1}})));
    CHECK(!is_complete_bipartite_plus_isolated(k_plus(4)));
    CHECK(!is_complete_bipartite_plus_isolated(Graph::from_edges(3, {})));
    CHECK(!is_complete_bipartite_plus_isolated(
        Graph::from_edges(4, {{0, 1}, {2, 3}})));  // two components with edges
}
