#include "spectral_er/polynomial.hpp"

#include "spectral_er/errors.hpp"

#include <doctest.h>

using namespace ser;

namespace {
Polynomial from_ints(std::initializer_list<long long> cs) {
    std::vector<Rational> v;
    for (long long c : cs) v.emplace_back(c);
    return Polynomial(std::move(v));
}
}  // namespace

TEST_CASE("polynomial arithmetic is exact") {
    Polynomial p = from_ints({1, 2, 1});   // (x+1)^2
    Polynomial q = from_ints({-1, 1});     // x - 1
    CHECK((p * q).coeffs() == from_ints({-1, -1, 1, 1}).coeffs());
    CHECK(p(Rational(3)) == 16);
    CHECK(p.derivative().coeffs() == from_ints({2, 2}).coeffs());

    auto [quo, rem] = Polynomial::divmod(p * q + from_ints({5}), q);
    CHECK(quo == p);
    CHECK(rem == from_ints({5}));
}

TEST_CASE("gcd and square-free part") {
    Polynomial double_root = from_ints({1, -2, 1});  // (x-1)^2
    CHECK(square_free_part(double_root) == from_ints({-1, 1}));
    Polynomial a = from_ints({-1, 0, 1});  // x^2-1
    Polynomial b = from_ints({-1, 1});     // x-1
    CHECK(poly_gcd(a, b) == b.monic());
}

TEST_CASE("root counting over half-open intervals") {
    Polynomial p = from_ints({-4, 0, 1});  // roots -2, 2
    CHECK(count_roots_in(p, Rational(0), Rational(3)) == 1);
    CHECK(count_roots_in(p, Rational(-3), Rational(3)) == 2);
    CHECK(count_roots_in(p, Rational(2), Rational(3)) == 0);  // (2,3] excludes the root at 2
    CHECK(count_roots_in(p, Rational(1), Rational(2)) == 1);  // (1,2] includes it
    CHECK(count_roots_above(p, Rational(0)) == 1);
    CHECK(count_roots_above(p, Rational(-5)) == 2);
}

TEST_CASE("largest real root") {
    CHECK(largest_real_root(from_ints({-4, 0, 1}), 1e-12) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(largest_real_root(from_ints({1, -2, 1}), 1e-12) == doctest::Approx(1.0).epsilon(1e-10));
    // largest real root of x^3 (triple root at 0)
    CHECK(largest_real_root(from_ints({0, 0, 0, 1}), 1e-12) == doctest::Approx(0.0));
    CHECK_THROWS_AS(largest_real_root(from_ints({7}), 1e-10), parameter_error);
    // x^2 + 1 has no real roots
    CHECK_THROWS_AS(largest_real_root(from_ints({1, 0, 1}), 1e-10), std::domain_error);
}

TEST_CASE("frozen roots of the cubic families") {
    // f(x) = x^3 - x^2 - 16x + 8 has largest root 4.29295...; f(4.29) < 0 < f(4.30)
    Polynomial f8 = from_ints({8, -16, -1, 1});
    CHECK(sign_of(f8(Rational(429, 100))) < 0);
    CHECK(sign_of(f8(Rational(430, 100))) > 0);
    CHECK(largest_real_root(f8, 1e-10) == doctest::Approx(4.2929513807).epsilon(1e-8));
    // g(x) = x^3 - x^2 - 6x + 2 (odd family at n=5)
    Polynomial g5 = from_ints({2, -6, -1, 1});
    CHECK(largest_real_root(g5, 1e-10) == doctest::Approx(2.8557725066).epsilon(1e-8));
}

TEST_CASE("sign certification across the reported root") {
    Polynomial f8 = from_ints({8, -16, -1, 1});
    double tol = 1e-9;
    double root = largest_real_root(f8, tol);
    CHECK(sign_of(f8(Rational(root) - Rational(tol) * 2)) < 0);
    CHECK(sign_of(f8(Rational(root) + Rational(tol) * 2)) > 0);
}

TEST_CASE("algebraic number comparison") {
    AlgebraicNumber sqrt2 = isolate_largest_real_root(from_ints({-2, 0, 1}));
    AlgebraicNumber sqrt3 = isolate_largest_real_root(from_ints({-3, 0, 1}));
    CHECK(compare(sqrt2, sqrt3) < 0);
    CHECK(compare(sqrt3, sqrt2) > 0);
    // same number through two different polynomials
    AlgebraicNumber sqrt3_again = isolate_largest_real_root(from_ints({-9, 0, 0, 0, 1}));
    CHECK(compare(sqrt3, sqrt3_again) == 0);
    // exact rational endpoints
    AlgebraicNumber three{Polynomial(), Rational(3), Rational(3)};
    CHECK(compare(sqrt3, three) < 0);
    CHECK(compare(three, sqrt2) > 0);

    CHECK(sign_at(from_ints({-2, 0, 1}), sqrt2) == 0);
    CHECK(sign_at(from_ints({-1, 1}), sqrt2) > 0);   // sqrt2 - 1 > 0
    CHECK(sign_at(from_ints({2, -1}), sqrt2) > 0);   // 2 - sqrt2 > 0
}

TEST_CASE("the same eigenvalue through two polynomial routes compares equal") {
    // largest root of the degree-3 quotient cubic vs the degree-8 adjacency
    // characteristic polynomial: the same algebraic number
    Polynomial cubic = from_ints({8, -16, -1, 1});
    // (x^3 - x^2 - 16x + 8) * (x^2 + 3) has the same largest real root
    Polynomial lifted = cubic * from_ints({3, 0, 1});
    AlgebraicNumber a = isolate_largest_real_root(cubic);
    AlgebraicNumber b = isolate_largest_real_root(lifted);
    CHECK(compare(a, b) == 0);
    // and a nearby but distinct root separates
    Polynomial shifted = from_ints({7, -16, -1, 1});
    CHECK(compare(isolate_largest_real_root(shifted), a) != 0);
}

TEST_CASE("evaluation at sqrt(k) with exact signs") {
    // x^2 - k vanishes at sqrt(k)
    CHECK(sign_at_sqrt(from_ints({-7, 0, 1}), Rational(7)) == 0);
    // f(sqrt(18)) = sqrt(72) - 10 < 0 for the n=8 cubic
    CHECK(sign_at_sqrt(from_ints({8, -16, -1, 1}), Rational(18)) < 0);
    // x - 1 at sqrt(4) = 2 - 1 > 0
    CHECK(sign_at_sqrt(from_ints({-1, 1}), Rational(4)) > 0);
    CHECK(sign_at_sqrt(from_ints({5, 1}), Rational(2)) > 0);
    CHECK(sign_at_sqrt(from_ints({-5, -1}), Rational(2)) < 0);
}
