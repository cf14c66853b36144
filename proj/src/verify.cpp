#include "spectral_er/verify.hpp"

#include "spectral_er/errors.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <thread>

namespace ser {

namespace {

int resolve_workers(const VerifyOptions& opt) {
    if (opt.workers > 0) return opt.workers;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Run fn over every class on n vertices passing the filter. fn may be called
// concurrently; result collections must be guarded by the caller.
void for_each_class(int n, const EnumerationFilter& filter, int workers,
                    const std::function<void(const Graph&)>& fn) {
    if (n <= 9) {
        const std::vector<Graph>& classes = graph_classes(n, workers);
        if (workers <= 1) {
            for (const Graph& g : classes)
                if (filter.admits(g)) fn(g);
            return;
        }
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= classes.size()) return;
                if (filter.admits(classes[i])) fn(classes[i]);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
        return;
    }
    if (n != 10) throw parameter_error("verification sweeps cover n <= 10");
    const std::vector<Graph>& parents = graph_classes(9, workers);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= parents.size()) return;
            for (const Graph& child : augment_children(parents[i], filter.max_edges))
                if (filter.admits(child)) fn(child);
        }
    };
    std::vector<std::thread> pool;
    int w = std::max(workers, 1);
    for (int i = 0; i < w; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

Certificate make_certificate(const Graph& g, const SpectralResult& r,
                             std::optional<int> q = std::nullopt) {
    Certificate c;
    c.graph6 = to_graph6(g);
    c.lambda_lo = r.lo;
    c.lambda_hi = r.hi;
    c.triangles = count_triangles(g);
    c.edges = g.edge_count();
    c.q = q;
    return c;
}

void sort_certificates(std::vector<Certificate>& cs) {
    std::sort(cs.begin(), cs.end(), [](const Certificate& a, const Certificate& b) {
        return std::tie(a.graph6, a.q) < std::tie(b.graph6, b.q);
    });
}

void finish(VerificationReport& rep, const Timer& t) {
    sort_certificates(rep.violations);
    sort_certificates(rep.below_threshold);
    std::sort(rep.extremal.begin(), rep.extremal.end());
    rep.elapsed_ms = t.ms();
}

double outward_lo(const Rational& x) {
    return std::nextafter(x.convert_to<double>(), -std::numeric_limits<double>::infinity());
}
double outward_hi(const Rational& x) {
    return std::nextafter(x.convert_to<double>(), std::numeric_limits<double>::infinity());
}

}  // namespace

LambdaThreshold adjacency_threshold(const Graph& reference) {
    LambdaThreshold t;
    t.root = isolate_largest_real_root(adjacency_char_poly(reference));
    t.root.refine(Rational(1, 1000000000000LL));
    t.lo = outward_lo(t.root.lo);
    t.hi = outward_hi(t.root.hi);
    return t;
}

Cmp compare_lambda(const Graph& g, const SpectralResult& r, const LambdaThreshold& thr) {
    // generous fuzz: anything close to the threshold goes to the exact route
    if (r.lo > thr.hi + 1e-9) return Cmp::above;
    if (r.hi < thr.lo - 1e-9) return Cmp::below;
    AlgebraicNumber lam = isolate_largest_real_root(adjacency_char_poly(g));
    int c = compare(lam, thr.root);
    return c < 0 ? Cmp::below : (c == 0 ? Cmp::equal : Cmp::above);
}

bool is_complete_bipartite_plus_isolated(const Graph& g) {
    const int n = g.vertex_count();
    std::uint64_t support = 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > 0) support |= std::uint64_t(1) << v;
    if (!support) return false;  // no edges at all
    // 2-color the support by BFS from its lowest vertex; then demand all
    // cross pairs adjacent and no intra-side edges
    int s0 = __builtin_ctzll(support);
    std::uint64_t side_a = std::uint64_t(1) << s0, side_b = 0, frontier = side_a;
    bool in_a = true;
    while (frontier) {
        std::uint64_t nxt = 0;
        std::uint64_t b = frontier;
        while (b) {
            int v = __builtin_ctzll(b);
            b &= b - 1;
            nxt |= g.neighbors(v);
        }
        nxt &= ~(side_a | side_b);
        if (in_a) side_b |= nxt;
        else side_a |= nxt;
        in_a = !in_a;
        frontier = nxt;
    }
    if ((side_a | side_b) != support) return false;  // support not connected
    for (int v = 0; v < n; ++v) {
        std::uint64_t expect =
            ((side_a >> v) & 1u) ? side_b : (((side_b >> v) & 1u) ? side_a : 0);
        if (g.neighbors(v) != expect) return false;
    }
    return true;
}

// --- report plumbing -------------------------------------------------------

nlohmann::json Certificate::to_json() const {
    nlohmann::json j{{"graph6", graph6},
                     {"lambda", {lambda_lo, lambda_hi}},
                     {"t", triangles},
                     {"m", edges}};
    if (q) j["q"] = *q;
    return j;
}

nlohmann::json VerificationReport::to_json(bool include_elapsed) const {
    nlohmann::json j;
    j["check"] = check;
    j["params"] = params;
    j["scanned"] = scanned;
    j["qualifying"] = qualifying;
    j["violations"] = nlohmann::json::array();
    for (const auto& v : violations) j["violations"].push_back(v.to_json());
    j["extremal"] = extremal;
    if (include_elapsed) j["elapsed_ms"] = elapsed_ms;
    if (!below_threshold.empty() || unique_minimizer) {
        j["below_threshold"] = nlohmann::json::array();
        for (const auto& v : below_threshold) j["below_threshold"].push_back(v.to_json());
    }
    if (unique_minimizer) j["unique_minimizer"] = *unique_minimizer;
    if (min_copies) j["min_copies"] = *min_copies;
    return j;
}

bool report_json_valid(const nlohmann::json& j) {
    if (!j.is_object()) return false;
    if (!j.contains("check") || !j["check"].is_string()) return false;
    if (!j.contains("params") || !j["params"].is_object()) return false;
    for (const char* key : {"scanned", "qualifying"})
        if (!j.contains(key) || !j[key].is_number_integer()) return false;
    if (!j.contains("violations") || !j["violations"].is_array()) return false;
    for (const auto& v : j["violations"]) {
        if (!v.is_object() || !v.contains("graph6") || !v["graph6"].is_string()) return false;
        if (!v.contains("lambda") || !v["lambda"].is_array() || v["lambda"].size() != 2)
            return false;
        if (!v.contains("t") || !v["t"].is_number_integer()) return false;
        if (!v.contains("m") || !v["m"].is_number_integer()) return false;
    }
    if (!j.contains("extremal") || !j["extremal"].is_array()) return false;
    for (const auto& e : j["extremal"])
        if (!e.is_string()) return false;
    if (j.contains("elapsed_ms") && !j["elapsed_ms"].is_number()) return false;
    return true;
}

// --- checks ----------------------------------------------------------------

VerificationReport verify_spectral_er(int n, const VerifyOptions& opt) {
    if (n < 3 || n > 10) throw parameter_error("verify_spectral_er: need 3 <= n <= 10");
    Timer timer;
    VerificationReport rep;
    rep.check = "spectral-er";
    rep.params = {{"n", n}};
    const Graph extremal_graph = k_plus(n);
    const LambdaThreshold thr = adjacency_threshold(extremal_graph);
    const long long target = n / 2;

    EnumerationFilter filter;
    filter.min_lambda_hint = thr.lo;
    std::mutex mu;
    bool extremal_has_kplus = false;
    const auto kplus_canon = canonical_form(extremal_graph);

    for_each_class(n, filter, resolve_workers(opt), [&](const Graph& g) {
        SpectralResult r = spectral_radius(g, opt.tol);
        const bool qualifies = compare_lambda(g, r, thr) != Cmp::below;
        const long long t = qualifies ? count_triangles(g) : 0;
        const bool is_kplus = qualifies && t == target && canonical_form(g) == kplus_canon;
        std::scoped_lock lock(mu);
        ++rep.scanned;
        if (!qualifies) return;
        ++rep.qualifying;
        if (t < target) {
            rep.violations.push_back(make_certificate(g, r));
        } else if (t == target) {
            if (is_kplus) extremal_has_kplus = true;
            else rep.violations.push_back(make_certificate(g, r));  // uniqueness violation
            rep.extremal.push_back(to_graph6(g));
        }
    });
    if (!extremal_has_kplus) {
        SpectralResult r = spectral_radius(extremal_graph, opt.tol);
        rep.violations.push_back(make_certificate(extremal_graph, r));
    }
    finish(rep, timer);
    return rep;
}

VerificationReport verify_edge_er(int n, const VerifyOptions& opt) {
    if (n < 3 || n > 10) throw parameter_error("verify_edge_er: need 3 <= n <= 10");
    Timer timer;
    VerificationReport rep;
    rep.check = "edge-er";
    rep.params = {{"n", n}};
    const int floor_q = n * n / 4;
    const auto tn2_canon = canonical_form(turan(n, 2));
    EnumerationFilter filter;
    filter.min_edges = floor_q;
    std::mutex mu;
    for_each_class(n, filter, resolve_workers(opt), [&](const Graph& g) {
        const int m = g.edge_count();
        const long long t = count_triangles(g);
        std::scoped_lock lock(mu);
        ++rep.scanned;
        ++rep.qualifying;
        if (m >= floor_q + 1) {
            if (t < n / 2) {
                rep.violations.push_back(make_certificate(g, spectral_radius(g, opt.tol)));
            } else if (t == n / 2) {
                rep.extremal.push_back(to_graph6(g));
            }
        } else {  // m == floor_q
            if (t < n / 2 - 1 && canonical_form(g) != tn2_canon)
                rep.violations.push_back(make_certificate(g, spectral_radius(g, opt.tol)));
        }
    });
    finish(rep, timer);
    return rep;
}

VerificationReport verify_nz(int n, const VerifyOptions& opt) {
    if (n < 3 || n > 10) throw parameter_error("verify_nz: need 3 <= n <= 10");
    Timer timer;
    VerificationReport rep;
    rep.check = "nz";
    rep.params = {{"n", n}};
    const Graph tn2 = turan(n, 2);
    const LambdaThreshold thr = adjacency_threshold(tn2);
    const auto tn2_canon = canonical_form(tn2);
    const long long target = n / 2 - 1;
    EnumerationFilter filter;
    filter.min_lambda_hint = thr.lo;
    std::mutex mu;
    for_each_class(n, filter, resolve_workers(opt), [&](const Graph& g) {
        SpectralResult r = spectral_radius(g, opt.tol);
        const bool qualifies = compare_lambda(g, r, thr) != Cmp::below;
        const long long t = qualifies ? count_triangles(g) : 0;
        const bool exempt = qualifies && t < target && canonical_form(g) == tn2_canon;
        std::scoped_lock lock(mu);
        ++rep.scanned;
        if (!qualifies) return;
        ++rep.qualifying;
        if (t >= target) {
            if (t == target) rep.extremal.push_back(to_graph6(g));
            return;
        }
        if (exempt) return;  // the exempted graph T_{n,2}
        rep.violations.push_back(make_certificate(g, r));
    });
    finish(rep, timer);
    return rep;
}

VerificationReport verify_lovasz_simonovits(int n, int q_max, const VerifyOptions& opt) {
    if (n < 3 || n > 10) throw parameter_error("verify_lovasz_simonovits: need 3 <= n <= 10");
    if (q_max < 1 || 2 * q_max >= n)
        throw parameter_error("verify_lovasz_simonovits: the condition q < n/2 is necessary");
    Timer timer;
    VerificationReport rep;
    rep.check = "lovasz-simonovits";
    rep.params = {{"n", n}, {"q_max", q_max}};
    const int floor_q = n * n / 4;
    EnumerationFilter filter;
    filter.min_edges = floor_q + 1;
    std::mutex mu;
    for_each_class(n, filter, resolve_workers(opt), [&](const Graph& g) {
        const int m = g.edge_count();
        const long long t = count_triangles(g);
        std::scoped_lock lock(mu);
        ++rep.scanned;
        ++rep.qualifying;
        for (int q = 1; q <= q_max; ++q) {
            if (m >= floor_q + q && t < static_cast<long long>(q) * (n / 2)) {
                rep.violations.push_back(make_certificate(g, spectral_radius(g, opt.tol), q));
                break;
            }
        }
    });
    finish(rep, timer);
    return rep;
}

VerificationReport verify_conjecture(int n, int r, int q, const Graph& f,
                                     const VerifyOptions& opt) {
    if (n < 3 || n > 9) throw parameter_error("verify_conjecture: need 3 <= n <= 9");
    Timer timer;
    VerificationReport rep;
    rep.check = "conjecture";
    rep.params = {{"n", n}, {"r", r}, {"q", q}, {"f", to_graph6(f)}};
    const Graph reference = turan_plus_star(n, r, q);
    const LambdaThreshold thr = adjacency_threshold(reference);
    const long long target = static_cast<long long>(q) * min_added_edge_copies(n, r, f);
    rep.params["target"] = target;
    const auto ref_canon = canonical_form(reference);

    EnumerationFilter filter;
    filter.min_lambda_hint = thr.lo;
    std::mutex mu;
    long long min_seen = -1;
    std::vector<std::string> minimizers;
    bool min_is_reference = false;
    for_each_class(n, filter, resolve_workers(opt), [&](const Graph& g) {
        SpectralResult sr = spectral_radius(g, opt.tol);
        const bool qualifies = compare_lambda(g, sr, thr) != Cmp::below;
        const long long copies = qualifies ? count_copies(g, f) : 0;
        const bool is_ref = qualifies && canonical_form(g) == ref_canon;
        std::scoped_lock lock(mu);
        ++rep.scanned;
        if (!qualifies) return;
        ++rep.qualifying;
        if (copies < target) rep.below_threshold.push_back(make_certificate(g, sr));
        if (min_seen < 0 || copies < min_seen) {
            min_seen = copies;
            minimizers.clear();
            min_is_reference = false;
        }
        if (copies == min_seen) {
            minimizers.push_back(to_graph6(g));
            if (is_ref) min_is_reference = true;
        }
    });
    rep.min_copies = min_seen;
    rep.unique_minimizer = (minimizers.size() == 1 && min_is_reference);
    rep.extremal = std::move(minimizers);
    finish(rep, timer);
    return rep;
}

VerificationReport search_near_misses(int n, const VerifyOptions& opt) {
    if (n < 4 || n > 10) throw parameter_error("search_near_misses: need 4 <= n <= 10");
    Timer timer;
    VerificationReport rep;
    rep.check = "near-misses";
    rep.params = {{"n", n}};
    const LambdaThreshold thr = adjacency_threshold(turan(n, 2));
    const long long target = n / 2 - 1;
    EnumerationFilter filter;
    filter.min_lambda_hint = thr.lo;
    std::mutex mu;
    for_each_class(n, filter, resolve_workers(opt), [&](const Graph& g) {
        SpectralResult r = spectral_radius(g, opt.tol);
        const bool strict = compare_lambda(g, r, thr) == Cmp::above;
        const long long t = strict ? count_triangles(g) : 0;
        std::scoped_lock lock(mu);
        ++rep.scanned;
        if (!strict) return;
        ++rep.qualifying;
        if (t == target) rep.extremal.push_back(to_graph6(g));
    });
    finish(rep, timer);
    return rep;
}

VerificationReport verify_sqrt_m(int n, const VerifyOptions& opt) {
    if (n < 3 || n > 9) throw parameter_error("verify_sqrt_m: need 3 <= n <= 9");
    Timer timer;
    VerificationReport rep;
    rep.check = "sqrt-m";
    rep.params = {{"n", n}};
    // sqrt(m) thresholds (largest root of x^2 - m), one per possible edge count
    const int max_m = n * (n - 1) / 2;
    std::vector<LambdaThreshold> sqrt_thr(max_m + 1);
    for (int m = 0; m <= max_m; ++m) {
        sqrt_thr[m].root = isolate_largest_real_root(Polynomial({Rational(-m), 0, 1}));
        sqrt_thr[m].root.refine(Rational(1, 1000000000000LL));
        sqrt_thr[m].lo = outward_lo(sqrt_thr[m].root.lo);
        sqrt_thr[m].hi = outward_hi(sqrt_thr[m].root.hi);
    }
    std::mutex mu;
    for_each_class(n, EnumerationFilter{}, resolve_workers(opt), [&](const Graph& g) {
        const int m = g.edge_count();
        const long long t = count_triangles(g);
        SpectralResult r = spectral_radius(g, opt.tol);
        const Cmp cmp = compare_lambda(g, r, sqrt_thr[m]);
        // floor((sqrt(m)-1)/2) with exact integer arithmetic
        const long long isqrt = static_cast<long long>(std::floor(std::sqrt((double)m)));
        const long long target = m > 0 ? (isqrt - 1) / 2 : 0;
        const bool exempt = is_complete_bipartite_plus_isolated(g);
        std::scoped_lock lock(mu);
        ++rep.scanned;
        if (t == 0 && cmp == Cmp::above) {
            rep.violations.push_back(make_certificate(g, r));  // triangle-free, lambda > sqrt(m)
            return;
        }
        if (cmp == Cmp::below) return;
        ++rep.qualifying;  // lambda >= sqrt(m)
        if (t >= target) {
            if (t == target && !exempt) rep.extremal.push_back(to_graph6(g));
            return;
        }
        if (exempt) return;
        rep.violations.push_back(make_certificate(g, r));
    });
    finish(rep, timer);
    return rep;
}

VerificationReport verify_signless(int n, const VerifyOptions& opt) {
    if (n < 3 || n > 9) throw parameter_error("verify_signless: need 3 <= n <= 9");
    Timer timer;
    VerificationReport rep;
    rep.check = "signless";
    rep.params = {{"n", n}};
    std::mutex mu;
    for_each_class(n, EnumerationFilter{}, resolve_workers(opt), [&](const Graph& g) {
        const int m = g.edge_count();
        const long long t = count_triangles(g);
        SpectralResult r = signless_laplacian_radius(g, opt.tol);
        // exact comparison of q(G) against an integer bound when intervals overlap
        auto exceeds = [&](long long bound) -> bool {
            if (r.hi < static_cast<double>(bound) - 1e-6) return false;
            if (r.lo > static_cast<double>(bound) + 1e-6) return true;
            AlgebraicNumber qa = isolate_largest_real_root(signless_char_poly(g));
            AlgebraicNumber exact{Polynomial(), Rational(bound), Rational(bound)};
            return compare(qa, exact) > 0;
        };
        bool viol_n = (t == 0) && exceeds(n);
        bool viol_m1 = (m >= 4) && exceeds(m + 1);
        bool star_equality = false;
        if (m >= 4 && !viol_m1) {
            // record equality q(G) = m+1 achievers
            if (r.hi >= m + 1 - 1e-6) {
                AlgebraicNumber qa = isolate_largest_real_root(signless_char_poly(g));
                AlgebraicNumber exact{Polynomial(), Rational(m + 1), Rational(m + 1)};
                star_equality = compare(qa, exact) == 0;
            }
        }
        std::scoped_lock lock(mu);
        ++rep.scanned;
        if (t == 0) ++rep.qualifying;
        if (viol_n || viol_m1) rep.violations.push_back(make_certificate(g, r));
        else if (star_equality) rep.extremal.push_back(to_graph6(g));
    });
    finish(rep, timer);
    return rep;
}

VerificationReport verify_bn_bounds(int n, const VerifyOptions& opt) {
    if (n < 3 || n > 9) throw parameter_error("verify_bn_bounds: need 3 <= n <= 9");
    Timer timer;
    VerificationReport rep;
    rep.check = "bn-bounds";
    rep.params = {{"n", n}};
    std::mutex mu;
    const Rational n2_12 = Rational(Int(n) * Int(n), 12);
    const Rational n_half = Rational(n, 2);
    for_each_class(n, EnumerationFilter{}, resolve_workers(opt), [&](const Graph& g) {
        const int m = g.edge_count();
        const long long t = count_triangles(g);
        SpectralResult r = spectral_radius(g, opt.tol);
        // bound_a = lambda(lambda^2 - m)/3: on [lo,hi] the max sits at an endpoint
        auto ba = [&](double x) { return x * (x * x - m) / 3.0; };
        double ba_hi = std::max(ba(r.lo), ba(r.hi));
        double bb_hi = n * n / 12.0 * (r.hi - n / 2.0);
        bool ok_a = static_cast<double>(t) >= ba_hi + 1e-6;
        bool ok_b = static_cast<double>(t) >= bb_hi + 1e-6;
        if (!ok_a || !ok_b) {
            // exact: t >= bound <=> p(lambda) <= 0 for the matching polynomial
            AlgebraicNumber lam = isolate_largest_real_root(adjacency_char_poly(g));
            if (!ok_a) {
                Polynomial pa({Rational(-3) * t, Rational(-m), 0, 1});
                ok_a = sign_at(pa, lam) <= 0;
            }
            if (!ok_b) {
                Polynomial pb({-n2_12 * n_half - t, n2_12});
                ok_b = sign_at(pb, lam) <= 0;
            }
        }
        std::scoped_lock lock(mu);
        ++rep.scanned;
        ++rep.qualifying;
        if (!ok_a || !ok_b) rep.violations.push_back(make_certificate(g, r));
    });
    finish(rep, timer);
    return rep;
}

}  // namespace ser
