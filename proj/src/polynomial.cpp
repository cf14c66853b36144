#include "spectral_er/polynomial.hpp"

#include "spectral_er/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ser {

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::monomial(int degree, Rational coeff) {
    std::vector<Rational> c(degree + 1, Rational(0));
    c[degree] = std::move(coeff);
    return Polynomial(std::move(c));
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Polynomial::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->convert_to<double>();
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial(), a};
    std::vector<Rational> quo(a.degree() - db + 1, Rational(0));
    for (int k = a.degree(); k >= db; --k) {
        if (rem[k] == 0) continue;
        Rational q = rem[k] / b.c_[db];
        quo[k - db] = q;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.c_[j];
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Polynomial r(*this);
    Rational inv = Rational(1) / c_.back();
    for (auto& c : r.c_) c *= inv;
    return r;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        if (c_[k] == 0) continue;
        Rational c = c_[k];
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        if (c < 0) c = -c;
        first = false;
        if (k == 0 || c != 1) os << c;
        if (k > 0) {
            if (c != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = Polynomial::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial square_free_part(const Polynomial& p) {
    if (p.degree() <= 1) return p.monic();
    Polynomial g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p.monic();
    return Polynomial::divmod(p, g).first.monic();
}

Rational cauchy_root_bound(const Polynomial& p) {
    if (p.degree() < 1) return Rational(1);
    Rational m(0);
    const Rational& lead = p.leading();
    for (int k = 0; k < p.degree(); ++k) {
        Rational r = abs(p.coeff(k) / lead);
        if (r > m) m = r;
    }
    return m + 1;
}

namespace {

// Sturm chain of the square-free part; variation counting per Sturm's theorem.
struct Sturm {
    std::vector<Polynomial> seq;

    explicit Sturm(const Polynomial& p) {
        Polynomial p0 = square_free_part(p);
        if (p0.degree() < 1) return;
        seq.push_back(p0);
        seq.push_back(p0.derivative());
        while (seq.back().degree() >= 1) {
            Polynomial r = Polynomial::divmod(seq[seq.size() - 2], seq.back()).second;
            if (r.is_zero()) break;
            seq.push_back(-r);
        }
    }

    int variations_at(const Rational& x) const {
        int v = 0, prev = 0;
        for (const auto& q : seq) {
            int s = sign_of(q(x));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    }

    int variations_at_pos_inf() const {
        int v = 0, prev = 0;
        for (const auto& q : seq) {
            int s = sign_of(q.leading());
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    }
};

}  // namespace

int count_roots_in(const Polynomial& p, const Rational& a, const Rational& b) {
    if (p.degree() < 1) return 0;
    if (!(a < b)) return 0;
    Sturm s(p);
    return s.variations_at(a) - s.variations_at(b);
}

int count_roots_above(const Polynomial& p, const Rational& a) {
    if (p.degree() < 1) return 0;
    Sturm s(p);
    return s.variations_at(a) - s.variations_at_pos_inf();
}

double AlgebraicNumber::approx() const {
    return ((lo + hi) / 2).convert_to<double>();
}

void AlgebraicNumber::refine(const Rational& width) {
    while (!is_exact() && hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        int s = sign_of(poly(mid));
        if (s == 0) {
            lo = hi = mid;
            return;
        }
        // root is in (lo, hi]; keep the half that still contains it
        if (count_roots_in(poly, mid, hi) >= 1) lo = mid;
        else hi = mid;
    }
}

AlgebraicNumber isolate_largest_real_root(const Polynomial& p) {
    if (p.degree() < 1) throw parameter_error("largest_real_root: polynomial is constant");
    Polynomial ps = square_free_part(p);
    Rational bound = cauchy_root_bound(ps);
    Rational lo = -bound, hi = bound;
    if (count_roots_in(ps, lo, hi) == 0) throw std::domain_error("polynomial has no real root");
    // shrink from below keeping the top root inside (lo, hi]
    while (count_roots_in(ps, lo, hi) > 1 || sign_of(ps(lo)) == 0) {
        Rational mid = (lo + hi) / 2;
        if (sign_of(ps(mid)) == 0) {
            if (count_roots_in(ps, mid, hi) == 0) return {ps, mid, mid};
            lo = mid;
            continue;
        }
        if (count_roots_in(ps, mid, hi) >= 1) lo = mid;
        else hi = mid;
    }
    return {ps, lo, hi};
}

double largest_real_root(const Polynomial& p, double tol) {
    if (!(tol > 0)) throw parameter_error("largest_real_root: tol must be positive");
    AlgebraicNumber r = isolate_largest_real_root(p);
    if (r.hi < 0) throw std::domain_error("no real root in [0, root bound]");
    Rational w(tol);
    r.refine(w / 2);
    return r.approx();
}

int sign_at(const Polynomial& p, AlgebraicNumber r) {
    if (p.is_zero()) return 0;
    if (r.is_exact()) return sign_of(p(r.lo));
    Polynomial g = poly_gcd(p, r.poly);
    if (g.degree() >= 1 && count_roots_in(g, r.lo, r.hi) > 0) return 0;
    // p(r) != 0: shrink the enclosure until p is sign-constant over it
    while (sign_of(p(r.lo)) == 0 || sign_of(p(r.hi)) == 0 || count_roots_in(p, r.lo, r.hi) > 0) {
        Rational mid = (r.lo + r.hi) / 2;
        if (sign_of(r.poly(mid)) == 0) return sign_of(p(mid));
        if (count_roots_in(r.poly, mid, r.hi) >= 1) r.lo = mid;
        else r.hi = mid;
    }
    return sign_of(p(r.lo));
}

int compare(AlgebraicNumber a, AlgebraicNumber b) {
    if (a.is_exact() && b.is_exact()) return a.lo < b.lo ? -1 : (a.lo == b.lo ? 0 : 1);
    if (a.is_exact()) return -sign_at(Polynomial({-a.lo, Rational(1)}), b);
    if (b.is_exact()) return sign_at(Polynomial({-b.lo, Rational(1)}), a);
    // equality test once: a == b iff gcd(a.poly, b.poly) has a root in the overlap
    Polynomial g = poly_gcd(a.poly, b.poly);
    if (g.degree() >= 1) {
        Rational lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
        if (lo < hi && count_roots_in(g, lo, hi) > 0) return 0;
    }
    while (!(a.hi < b.lo || b.hi < a.lo)) {
        if (a.is_exact()) return -sign_at(Polynomial({-a.lo, Rational(1)}), b);
        if (b.is_exact()) return sign_at(Polynomial({-b.lo, Rational(1)}), a);
        AlgebraicNumber& t = (a.hi - a.lo >= b.hi - b.lo) ? a : b;
        Rational mid = (t.lo + t.hi) / 2;
        if (sign_of(t.poly(mid)) == 0) {
            t.lo = t.hi = mid;
            continue;
        }
        if (count_roots_in(t.poly, mid, t.hi) >= 1) t.lo = mid;
        else t.hi = mid;
    }
    return a.hi < b.lo ? -1 : 1;
}

int sign_at_sqrt(const Polynomial& p, const Rational& k) {
    if (k < 0) throw parameter_error("sign_at_sqrt: negative radicand");
    // Horner over Q(sqrt(k)): value = alpha*sqrt(k) + beta
    Rational alpha(0), beta(0);
    for (int i = p.degree(); i >= 0; --i) {
        // (alpha*s + beta) * s = beta*s + alpha*k
        Rational na = beta, nb = alpha * k;
        alpha = na;
        beta = nb + p.coeff(i);
    }
    if (alpha == 0) return sign_of(beta);
    if (beta == 0) return sign_of(alpha);
    if (alpha > 0 && beta > 0) return 1;
    if (alpha < 0 && beta < 0) return -1;
    // compare alpha^2 * k against beta^2; sign follows the larger magnitude side
    Rational l = alpha * alpha * k, r = beta * beta;
    if (l == r) return 0;
    if (alpha > 0) return l > r ? 1 : -1;
    return l > r ? -1 : 1;
}

}  // namespace ser
