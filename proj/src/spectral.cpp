#include "spectral_er/spectral.hpp"

#include "spectral_er/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ser {

namespace {

// Power iteration on (M + I) restricted to one component, with Rayleigh lower
// and Collatz-Wielandt upper bounds for certification. matvec must write M*x.
template <typename MatVec>
SpectralResult power_iterate(int n, const std::vector<int>& verts, MatVec&& matvec,
                             const SpectralOptions& opt) {
    SpectralResult res;
    res.vector.assign(n, 0.0);
    if (verts.size() == 1) {
        // single vertex: eigenvalue is the diagonal entry (0 for A, degree for Q)
        std::vector<double> x(n, 0.0), y(n, 0.0);
        x[verts[0]] = 1.0;
        matvec(x, y);
        res.lambda = res.lo = res.hi = y[verts[0]];
        res.vector[verts[0]] = 1.0;
        return res;
    }

    std::vector<double> x(n, 0.0), y(n, 0.0);
    // deterministic positive start: all ones plus a tiny seeded perturbation
    unsigned state = opt.seed * 2654435761u + 1u;
    for (int v : verts) {
        state = state * 1664525u + 1013904223u;
        x[v] = 1.0 + 1e-6 * ((state >> 8) & 0xffff) / 65536.0;
    }
    auto normalize = [&](std::vector<double>& z) {
        double s = 0.0;
        for (int v : verts) s += z[v] * z[v];
        s = std::sqrt(s);
        for (int v : verts) z[v] /= s;
    };
    normalize(x);

    double theta = 0.0, cw_hi = std::numeric_limits<double>::infinity(), cw_lo = 0.0;
    double resid = std::numeric_limits<double>::infinity();
    long it = 0;
    long next_check = 1;
    bool converged = false;
    while (it < opt.max_iterations) {
        matvec(x, y);  // y = M x
        ++it;
        if (it >= next_check) {
            // Rayleigh quotient and Collatz-Wielandt enclosure from the
            // positive iterate; checked at 1,2,4,...,64 then every 64 steps
            next_check = std::min(next_check * 2, next_check + 64);
            theta = 0.0;
            for (int v : verts) theta += x[v] * y[v];  // x is unit
            cw_hi = 0.0;
            cw_lo = std::numeric_limits<double>::infinity();
            resid = 0.0;
            for (int v : verts) {
                double ratio = y[v] / x[v];
                cw_hi = std::max(cw_hi, ratio);
                cw_lo = std::min(cw_lo, ratio);
                resid = std::max(resid, std::abs(y[v] - theta * x[v]));
            }
            if (cw_hi - std::max(theta, cw_lo) <= opt.tol && resid <= opt.tol) {
                converged = true;
                break;
            }
        }
        // shifted step x <- normalize(x + y) keeps the iterate positive and
        // breaks the +/-lambda symmetry of bipartite components
        for (int v : verts) x[v] += y[v];
        normalize(x);
    }
    res.residual = resid;
    res.iterations = it;
    res.lo = std::max(theta, cw_lo);
    res.hi = cw_hi;
    res.lambda = std::clamp(theta, res.lo, res.hi);
    for (int v : verts) res.vector[v] = x[v];
    if (!converged) throw convergence_error(res.lambda, res.residual, it);
    return res;
}

SpectralResult radius_impl(const Graph& g, const SpectralOptions& opt, bool signless) {
    if (g.vertex_count() < 1) throw parameter_error("spectral radius of an empty graph");
    if (!(opt.tol > 0)) throw parameter_error("tolerance must be positive");
    const int n = g.vertex_count();
    SpectralResult best;
    best.lambda = -1.0;
    long total_it = 0;
    double lo_max = 0.0, hi_max = 0.0;
    for (const VertexSet& comp : components(g)) {
        std::vector<int> verts = comp.to_vector();
        auto matvec = [&](const std::vector<double>& x, std::vector<double>& y) {
            for (int v : verts) {
                double acc = signless ? g.degree(v) * x[v] : 0.0;
                std::uint64_t nb = g.neighbors(v);
                while (nb) {
                    int u = __builtin_ctzll(nb);
                    nb &= nb - 1;
                    acc += x[u];
                }
                y[v] = acc;
            }
        };
        SpectralResult r = power_iterate(n, verts, matvec, opt);
        total_it += r.iterations;
        lo_max = std::max(lo_max, r.lo);
        hi_max = std::max(hi_max, r.hi);
        if (r.lambda > best.lambda) best = r;
    }
    best.iterations = total_it;
    // the radius of the whole graph is the max over components
    best.lo = lo_max;
    best.hi = hi_max;
    return best;
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol) {
    SpectralOptions opt;
    opt.tol = tol;
    return spectral_radius(g, opt);
}

SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opt) {
    return radius_impl(g, opt, false);
}

SpectralResult signless_laplacian_radius(const Graph& g, double tol) {
    SpectralOptions opt;
    opt.tol = tol;
    return signless_laplacian_radius(g, opt);
}

SpectralResult signless_laplacian_radius(const Graph& g, const SpectralOptions& opt) {
    return radius_impl(g, opt, true);
}

// --- quotient machinery --------------------------------------------------

SmallMatrix::SmallMatrix(int dim) : dim_(dim) {
    if (dim < 1 || dim > max_dim)
        throw parameter_error("matrix dimension must be in [1,16], got " + std::to_string(dim));
    a_.assign(static_cast<std::size_t>(dim) * dim, Rational(0));
}

EquitablePartition::EquitablePartition(const Graph& g, std::vector<VertexSet> cells)
    : cells_(std::move(cells)) {
    const std::uint64_t all = g.vertex_mask();
    std::uint64_t seen = 0;
    for (const auto& c : cells_) {
        if (c.bits & ~all) throw parameter_error("partition cell contains out-of-range vertices");
        if (c.bits & seen) throw parameter_error("partition cells are not disjoint");
        seen |= c.bits;
    }
    if (seen != all) throw parameter_error("partition does not cover all vertices");
    for (int i = 0; i < cell_count(); ++i) {
        int ref = -1;
        std::vector<int> refdeg(cell_count());
        std::vector<int> members = cells_[i].to_vector();
        for (int v : members) {
            if (ref < 0) {
                ref = v;
                for (int j = 0; j < cell_count(); ++j)
                    refdeg[j] = __builtin_popcountll(g.neighbors(v) & cells_[j].bits);
                continue;
            }
            for (int j = 0; j < cell_count(); ++j) {
                int d = __builtin_popcountll(g.neighbors(v) & cells_[j].bits);
                if (d != refdeg[j]) throw not_equitable_error(i, ref, v, j);
            }
        }
    }
}

SmallMatrix quotient_matrix(const Graph& g, const EquitablePartition& p) {
    const int k = p.cell_count();
    SmallMatrix m(k);
    for (int i = 0; i < k; ++i) {
        if (p.cells()[i].empty()) continue;  // zero row by convention
        int v = __builtin_ctzll(p.cells()[i].bits);
        for (int j = 0; j < k; ++j)
            m.at(i, j) = __builtin_popcountll(g.neighbors(v) & p.cells()[j].bits);
    }
    return m;
}

Polynomial char_poly(const SmallMatrix& m) {
    const int d = m.dim();
    // Faddeev-LeVerrier: M_0 = I, c_d = 1;
    // c_{d-k} = -tr(A M_{k-1})/k, M_k = A M_{k-1} + c_{d-k} I
    std::vector<Rational> coeffs(d + 1, Rational(0));
    coeffs[d] = 1;
    std::vector<Rational> mk(static_cast<std::size_t>(d) * d, Rational(0));
    for (int i = 0; i < d; ++i) mk[i * d + i] = 1;
    std::vector<Rational> am(static_cast<std::size_t>(d) * d);
    for (int k = 1; k <= d; ++k) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Rational acc(0);
                for (int t = 0; t < d; ++t) acc += m.at(i, t) * mk[t * d + j];
                am[i * d + j] = acc;
            }
        Rational tr(0);
        for (int i = 0; i < d; ++i) tr += am[i * d + i];
        Rational ck = -tr / k;
        coeffs[d - k] = ck;
        mk = am;
        for (int i = 0; i < d; ++i) mk[i * d + i] += ck;
    }
    return Polynomial(std::move(coeffs));
}

namespace {

Polynomial dense_char_poly(const Graph& g, bool signless) {
    const int n = g.vertex_count();
    // same recursion as above, over the integer adjacency (or D+A) matrix
    std::vector<Rational> a(static_cast<std::size_t>(n) * n, Rational(0));
    for (int i = 0; i < n; ++i) {
        if (signless) a[i * n + i] = g.degree(i);
        std::uint64_t nb = g.neighbors(i);
        while (nb) {
            int j = __builtin_ctzll(nb);
            nb &= nb - 1;
            a[i * n + j] = 1;
        }
    }
    std::vector<Rational> coeffs(n + 1, Rational(0));
    coeffs[n] = 1;
    std::vector<Rational> mk(static_cast<std::size_t>(n) * n, Rational(0));
    for (int i = 0; i < n; ++i) mk[i * n + i] = 1;
    std::vector<Rational> am(static_cast<std::size_t>(n) * n);
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational acc(0);
                for (int t = 0; t < n; ++t)
                    if (a[i * n + t] != 0) acc += a[i * n + t] * mk[t * n + j];
                am[i * n + j] = acc;
            }
        Rational tr(0);
        for (int i = 0; i < n; ++i) tr += am[i * n + i];
        Rational ck = -tr / k;
        coeffs[n - k] = ck;
        mk = am;
        for (int i = 0; i < n; ++i) mk[i * n + i] += ck;
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace

Polynomial adjacency_char_poly(const Graph& g) { return dense_char_poly(g, false); }
Polynomial signless_char_poly(const Graph& g) { return dense_char_poly(g, true); }

// --- polynomial families --------------------------------------------------

std::optional<PolyFamily> poly_family_from_name(const std::string& name) {
    if (name == "f") return PolyFamily::f;
    if (name == "g") return PolyFamily::g;
    if (name == "f1") return PolyFamily::f1;
    if (name == "f2") return PolyFamily::f2;
    if (name == "f3") return PolyFamily::f3;
    if (name == "g2") return PolyFamily::g2;
    if (name == "g4") return PolyFamily::g4;
    if (name == "g8") return PolyFamily::g8;
    if (name == "p1") return PolyFamily::p1;
    if (name == "p2") return PolyFamily::p2;
    return std::nullopt;
}

std::string poly_family_name(PolyFamily fam) {
    switch (fam) {
        case PolyFamily::f: return "f";
        case PolyFamily::g: return "g";
        case PolyFamily::f1: return "f1";
        case PolyFamily::f2: return "f2";
        case PolyFamily::f3: return "f3";
        case PolyFamily::g2: return "g2";
        case PolyFamily::g4: return "g4";
        case PolyFamily::g8: return "g8";
        case PolyFamily::p1: return "p1";
        case PolyFamily::p2: return "p2";
    }
    return "?";
}

Polynomial poly_family(PolyFamily fam, long n, std::optional<Abc> abc) {
    const bool even = (n % 2 == 0);
    auto need = [&](bool even_required, long min_n) {
        if (n < min_n)
            throw parameter_error(poly_family_name(fam) + ": n must be at least " +
                                  std::to_string(min_n));
        if (even != even_required)
            throw parameter_error(poly_family_name(fam) + ": n must be " +
                                  (even_required ? "even" : "odd"));
    };
    if (fam != PolyFamily::g8 && abc)
        throw parameter_error("(a,b,c) parameters are only accepted by g8");
    const Rational N(n);
    const Rational N2 = N * N;
    switch (fam) {
        case PolyFamily::f:
            need(true, 4);
            return Polynomial({N2 / 4 - N, -N2 / 4, -1, 1});
        case PolyFamily::g:
            need(false, 3);
            return Polynomial({N2 / 4 - N + Rational(3, 4), (1 - N2) / 4, -1, 1});
        case PolyFamily::f1:
            need(true, 6);
            return Polynomial({N2 / 4 - N + 1, 1 - N2 / 4, -1, 1});
        case PolyFamily::f2:
            need(true, 6);
            return Polynomial({1 + N2 / 2 - 2 * N, -(N - 2), -N2 / 4, 0, 1});
        case PolyFamily::f3:
            need(false, 5);
            return Polynomial({N2 / 2 - 2 * N + Rational(3, 2), -(N - 3), -(N2 - 1) / 4, 0, 1});
        case PolyFamily::g2:
            need(true, 8);
            return Polynomial({-(N - 4) * (N - 4), 2 * N - 8, 5 * N2 / 4 - 7 * N + 8, -N,
                               -(N2 / 4 - N / 2 + 3), 0, 1});
        case PolyFamily::g4:
            need(true, 8);
            return Polynomial({0, -(3 * N2 / 2 - 14 * N + 31), 3 * N - 16, 5 * N2 / 4 - 7 * N + 5,
                               -N, -(N2 / 4 - N / 2 + 3), 0, 1});
        case PolyFamily::g8: {
            need(true, 8);
            if (!abc) throw parameter_error("g8 requires (a,b,c)");
            const Rational A(abc->a), B(abc->b), C(abc->c);
            if (A + B + C != N / 2 - 1 || 2 * A + B != N / 2 || abc->a < 2 || abc->b < 0 ||
                abc->c < 0)
                throw parameter_error("g8: need a+b+c = n/2-1, 2a+b = n/2, a >= 2");
            return Polynomial({0,
                               2 * A * B + 2 * B * C + A * B * C - A * B / 2 * N - B * C / 2 * N -
                                   A * B * C / 2 * N,
                               2 * A * B,
                               (A + B + C) * N + A * B / 2 * N + A * C * N + B * C / 2 * N - 3 * B -
                                   4 * C - 2 * A * C - B * C - 4 * A,
                               -(4 * A + 2 * B), -((A + B + C) / 2 * N + A + 2 - C), 0, 1});
        }
        case PolyFamily::p1:
            need(true, 10);
            return Polynomial({0, N2 / 2 - 2 * N - 3, -N, 1 - N2 / 4, 0, 1});
        case PolyFamily::p2:
            need(false, 9);
            return Polynomial({0, N2 / 2 - 2 * N - Rational(1, 2), 1 - N, (1 - N2) / 4, 0, 1});
    }
    throw parameter_error("unknown polynomial family");
}

bool lemma21_checks(long n) {
    if (n < 4) throw parameter_error("lemma21_checks requires n >= 4");
    Polynomial p = poly_family(n % 2 == 0 ? PolyFamily::f : PolyFamily::g, n);
    Rational k = Rational(Int(n) * Int(n) / 4) + 2;  // floor(n^2/4) + 2
    return sign_at_sqrt(p, k) < 0;
}

TriangleBounds bn_triangle_bounds(const Graph& g, double tol) {
    SpectralResult r = spectral_radius(g, tol);
    const double lam = r.lambda;
    const double m = g.edge_count();
    const double n = g.vertex_count();
    return {lam * (lam * lam - m) / 3.0, n * n / 12.0 * (lam - n / 2.0)};
}

double rayleigh_lower_bound(const Graph& g) {
    if (g.vertex_count() < 1) throw parameter_error("empty graph");
    return 2.0 * g.edge_count() / g.vertex_count();
}

}  // namespace ser
