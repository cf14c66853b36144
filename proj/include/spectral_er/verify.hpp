#pragma once

#include "spectral_er/constructions.hpp"
#include "spectral_er/enumerate.hpp"
#include "spectral_er/graph.hpp"
#include "spectral_er/polynomial.hpp"
#include "spectral_er/spectral.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ser {

struct VerifyOptions {
    double tol = 1e-10;
    int workers = 0;  // 0 = available parallelism
};

struct Certificate {
    std::string graph6;
    double lambda_lo = 0.0;
    double lambda_hi = 0.0;
    long long triangles = 0;
    int edges = 0;
    std::optional<int> q;  // failing q for the Lovasz-Simonovits sweep

    nlohmann::json to_json() const;
};

// Outcome of one exhaustive check. Violations empty <=> verdict pass.
struct VerificationReport {
    std::string check;
    nlohmann::json params;
    long long scanned = 0;
    long long qualifying = 0;
    std::vector<Certificate> violations;
    std::vector<std::string> extremal;  // graph6 certificates of equality cases
    long long elapsed_ms = 0;

    // conjecture exploration extras (absent from the JSON unless set)
    std::vector<Certificate> below_threshold;
    std::optional<bool> unique_minimizer;
    std::optional<long long> min_copies;

    bool pass() const { return violations.empty(); }
    int exit_code() const { return pass() ? 0 : 1; }
    nlohmann::json to_json(bool include_elapsed = true) const;
};

// True iff j matches the published report schema (required keys and types).
bool report_json_valid(const nlohmann::json& j);

// lambda(G) >= lambda(K+_{ceil(n/2),floor(n/2)}) forces >= floor(n/2) triangles,
// equality exactly at k_plus(n). 3 <= n <= 10.
VerificationReport verify_spectral_er(int n, const VerifyOptions& opt = {});

// m >= floor(n^2/4)+1 forces >= floor(n/2) triangles; m >= floor(n^2/4) forces
// >= floor(n/2)-1 unless T_{n,2}.
VerificationReport verify_edge_er(int n, const VerifyOptions& opt = {});

// lambda(G) >= lambda(T_{n,2}) forces >= floor(n/2)-1 triangles unless T_{n,2}.
VerificationReport verify_nz(int n, const VerifyOptions& opt = {});

// m >= floor(n^2/4)+q forces >= q*floor(n/2) triangles, for q = 1..q_max < n/2.
VerificationReport verify_lovasz_simonovits(int n, int q_max, const VerifyOptions& opt = {});

// Exploratory: qualifying classes (lambda >= lambda(T_{n,r,q})) with fewer than
// q*c(n,F) copies of f, and whether T_{n,r,q} uniquely minimizes the copy count.
VerificationReport verify_conjecture(int n, int r, int q, const Graph& f,
                                     const VerifyOptions& opt = {});

// Classes with lambda strictly above lambda(T_{n,2}) and exactly floor(n/2)-1
// triangles; found graphs are listed as extremal certificates.
VerificationReport search_near_misses(int n, const VerifyOptions& opt = {});

// Triangle-free classes satisfy lambda <= sqrt(m); classes with lambda >= sqrt(m)
// have >= floor((sqrt(m)-1)/2) triangles unless complete bipartite + isolated.
VerificationReport verify_sqrt_m(int n, const VerifyOptions& opt = {});

// Triangle-free classes satisfy q(G) <= n; all classes with m >= 4 satisfy
// q(G) <= m+1 (stars attain it).
VerificationReport verify_signless(int n, const VerifyOptions& opt = {});

// Bollobas-Nikiforov: t >= lambda(lambda^2-m)/3 and t >= (n^2/12)(lambda-n/2)
// for every class.
VerificationReport verify_bn_bounds(int n, const VerifyOptions& opt = {});

// G = complete bipartite graph plus possibly isolated vertices?
bool is_complete_bipartite_plus_isolated(const Graph& g);

// Certified-then-exact comparison of lambda(g) against an algebraic threshold.
enum class Cmp { below, equal, above };
struct LambdaThreshold {
    AlgebraicNumber root;
    double lo = 0.0, hi = 0.0;
};
LambdaThreshold adjacency_threshold(const Graph& reference);
Cmp compare_lambda(const Graph& g, const SpectralResult& r, const LambdaThreshold& thr);

}  // namespace ser
