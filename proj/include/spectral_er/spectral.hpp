#pragma once

#include "spectral_er/graph.hpp"
#include "spectral_er/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ser {

// Eigenvalue estimate with a certified enclosure. `lo` is a Rayleigh-quotient
// lower bound and `hi` a Collatz-Wielandt upper bound, so the true spectral
// radius always lies in [lo, hi].
struct SpectralResult {
    double lambda = 0.0;
    std::vector<double> vector;  // entrywise nonnegative unit eigenvector estimate
    double residual = 0.0;       // bound on ||A*vector - lambda*vector||_inf
    long iterations = 0;
    double lo = 0.0;
    double hi = 0.0;
};

struct SpectralOptions {
    double tol = 1e-10;
    long max_iterations = 1'000'000;
    unsigned seed = 0x5eed;  // start-vector perturbation seed
};

// Adjacency spectral radius; max over components for disconnected graphs.
SpectralResult spectral_radius(const Graph& g, double tol);
SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opt);

// Largest eigenvalue of the signless Laplacian Q = D + A.
SpectralResult signless_laplacian_radius(const Graph& g, double tol);
SpectralResult signless_laplacian_radius(const Graph& g, const SpectralOptions& opt);

// Square rational matrix of dimension <= 16 (quotient matrices and friends).
class SmallMatrix {
public:
    static constexpr int max_dim = 16;
    explicit SmallMatrix(int dim);
    int dim() const { return dim_; }
    Rational& at(int i, int j) { return a_[i * dim_ + j]; }
    const Rational& at(int i, int j) const { return a_[i * dim_ + j]; }
    bool operator==(const SmallMatrix&) const = default;

private:
    int dim_;
    std::vector<Rational> a_;
};

// Ordered vertex partition with verified constant cross-cell degrees.
class EquitablePartition {
public:
    // Throws not_equitable_error (with a witness) unless every vertex of cell i
    // has the same number of neighbors in cell j, for all i, j. Cells must
    // cover all vertices disjointly; empty cells are allowed.
    EquitablePartition(const Graph& g, std::vector<VertexSet> cells);
    const std::vector<VertexSet>& cells() const { return cells_; }
    int cell_count() const { return static_cast<int>(cells_.size()); }

private:
    std::vector<VertexSet> cells_;
};

// Entry (i,j) = number of cell-j neighbors of any cell-i vertex (0 for empty cells).
SmallMatrix quotient_matrix(const Graph& g, const EquitablePartition& p);

// Exact characteristic polynomial det(xI - M) via the Faddeev-LeVerrier recursion.
Polynomial char_poly(const SmallMatrix& m);

// Exact characteristic polynomials of A and Q = D + A (graph order <= 16 is not
// required here; any n up to 64 works but cost grows as n^4).
Polynomial adjacency_char_poly(const Graph& g);
Polynomial signless_char_poly(const Graph& g);

enum class PolyFamily { f, g, f1, f2, f3, g2, g4, g8, p1, p2 };

std::optional<PolyFamily> poly_family_from_name(const std::string& name);
std::string poly_family_name(PolyFamily fam);

struct Abc {
    long a, b, c;
};

// The named polynomial families with exact rational coefficients.
// Parity: f, f1, f2, g2, g4, g8, p1 need even n; g, f3, p2 need odd n.
// abc is required exactly for g8.
Polynomial poly_family(PolyFamily fam, long n, std::optional<Abc> abc = std::nullopt);

// True iff family(sqrt(floor(n^2/4) + 2)) < 0, evaluated exactly, which
// certifies lambda(K+)^2 > floor(n^2/4) + 2.
bool lemma21_checks(long n);

// Triangle supersaturation bounds from the certified spectral radius:
// lambda*(lambda^2 - m)/3 and (n^2/12)*(lambda - n/2).
struct TriangleBounds {
    double bound_a;
    double bound_b;
};
TriangleBounds bn_triangle_bounds(const Graph& g, double tol = 1e-10);

// 2m/n, always a lower bound on the spectral radius.
double rayleigh_lower_bound(const Graph& g);

}  // namespace ser
