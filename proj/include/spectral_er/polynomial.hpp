#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace ser {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& x) { return x.sign(); }

// Univariate polynomial with exact rational coefficients, ascending degree.
class Polynomial {
public:
    Polynomial() = default;  // zero polynomial
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Polynomial monomial(int degree, Rational coeff = Rational(1));

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational(0);
    }
    const Rational& leading() const { return c_.back(); }

    Rational operator()(const Rational& x) const;
    double eval_double(double x) const;

    Polynomial derivative() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }

    // Euclidean division; returns {quotient, remainder}.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

    // Scale so the leading coefficient is 1 (no-op on zero).
    Polynomial monic() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

Polynomial poly_gcd(Polynomial a, Polynomial b);

// p with repeated roots collapsed: p / gcd(p, p').
Polynomial square_free_part(const Polynomial& p);

// 1 + max_i |c_i / c_d|; every real root lies in (-bound, bound).
Rational cauchy_root_bound(const Polynomial& p);

// Number of distinct real roots of p in the half-open interval (a, b].
int count_roots_in(const Polynomial& p, const Rational& a, const Rational& b);
// Number of distinct real roots strictly above a.
int count_roots_above(const Polynomial& p, const Rational& a);

// A real algebraic number: the unique root of `poly` (square-free) in (lo, hi],
// or an exact rational when lo == hi.
struct AlgebraicNumber {
    Polynomial poly;
    Rational lo, hi;
    bool is_exact() const { return lo == hi; }
    double approx() const;
    // Shrink the enclosure below `width`.
    void refine(const Rational& width);
};

// Largest real root of p as an exact enclosure; throws parameter_error when p is
// constant, std::domain_error when p has no real root.
AlgebraicNumber isolate_largest_real_root(const Polynomial& p);

// Largest real root within tol, Sturm isolation + bisection with exact sign tests.
// Per contract the root must lie in [0, cauchy bound].
double largest_real_root(const Polynomial& p, double tol);

// Sign of p at the algebraic number r: -1, 0, +1, decided exactly.
int sign_at(const Polynomial& p, AlgebraicNumber r);

// Three-way comparison of two algebraic numbers, decided exactly.
int compare(AlgebraicNumber a, AlgebraicNumber b);

// Value of p at sqrt(k) written as alpha*sqrt(k) + beta; returns its exact sign.
int sign_at_sqrt(const Polynomial& p, const Rational& k);

}  // namespace ser
