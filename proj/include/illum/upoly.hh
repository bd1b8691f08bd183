#ifndef ILLUM_UPOLY_HH
#define ILLUM_UPOLY_HH

// Dense univariate polynomials over the rationals, plus the primitive
// integer form used for fast exact sign evaluation at rational arguments
// (homogeneous Horner over the integers — no rational arithmetic in the
// inner loop of root isolation).

#include "illum/interval.hh"
#include "illum/point.hh"
#include "illum/polynomial.hh"
#include "illum/rational.hh"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace illum {

class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly zero() { return UPoly(); }
    static UPoly constant(Rational v) { return UPoly({std::move(v)}); }
    static UPoly monomial(Rational coeff, size_t k) {
        std::vector<Rational> c(k + 1, Rational(0));
        c[k] = std::move(coeff);
        return UPoly(std::move(c));
    }
    // a + b*t
    static UPoly linear(Rational a, Rational b) { return UPoly({std::move(a), std::move(b)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& leading() const {
        if (is_zero()) throw std::logic_error("UPoly: leading of zero");
        return c_.back();
    }
    Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return UPoly(std::move(c));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return UPoly(std::move(c));
    }
    UPoly operator-() const {
        std::vector<Rational> c(c_);
        for (auto& v : c) v = -v;
        return UPoly(std::move(c));
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return UPoly(std::move(c));
    }
    UPoly scaled(const Rational& s) const {
        if (s.is_zero()) return UPoly();
        std::vector<Rational> c(c_);
        for (auto& v : c) v *= s;
        return UPoly(std::move(c));
    }
    UPoly pow(unsigned e) const {
        UPoly r = constant(Rational(1)), base = *this;
        while (e > 0) {
            if (e & 1u) r = r * base;
            e >>= 1u;
            if (e > 0) base = base * base;
        }
        return r;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<Rational> c(c_.size() - 1, Rational(0));
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return UPoly(std::move(c));
    }

    Rational eval(const Rational& x) const {
        Rational r(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }
    RatInterval eval_box(const RatInterval& x) const {
        RatInterval r{Rational(0)};
        for (size_t i = c_.size(); i-- > 0;) r = r * x + RatInterval(c_[i]);
        return r;
    }

    // Field division with remainder: *this = q*d + r, deg r < deg d.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        if (d.is_zero()) throw std::domain_error("UPoly: division by zero");
        UPoly r = *this;
        std::vector<Rational> q(std::max(degree() - d.degree() + 1, 0), Rational(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            size_t k = static_cast<size_t>(r.degree() - d.degree());
            Rational f = r.leading() / d.leading();
            q[k] = f;
            // r -= f * t^k * d, dropping the (now zero) leading coefficient.
            for (size_t i = 0; i < d.c_.size(); ++i) r.c_[k + i] -= f * d.c_[i];
            r.trim();
        }
        return {UPoly(std::move(q)), r};
    }

    // Positive rational content; primitive part preserves signs.
    Rational content() const {
        if (is_zero()) return Rational(1);
        mpz_class l(1);
        for (const auto& v : c_)
            if (!v.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
        mpz_class g(0);
        for (const auto& v : c_) {
            if (v.is_zero()) continue;
            mpz_class scaled = v.num() * (l / v.den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
        }
        return Rational(g, l);
    }
    UPoly primitive() const { return is_zero() ? *this : scaled(content().inv()); }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = c_.size(); i-- > 0;) {
            const Rational& v = c_[i];
            if (v.is_zero()) continue;
            if (out.empty()) {
                if (v.sign() < 0) out += "-";
            } else {
                out += v.sign() < 0 ? " - " : " + ";
            }
            Rational mag = v.abs();
            if (!mag.is_one() || i == 0) out += mag.str();
            if (i > 0) {
                if (!mag.is_one()) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_; // c_[i] is the coefficient of t^i
};

inline UPoly upoly_gcd(UPoly a, UPoly b) {
    // Euclid with primitive normalization at each step to keep coefficient
    // sizes tame; result is primitive with positive leading coefficient.
    if (a.is_zero()) std::swap(a, b);
    while (!b.is_zero()) {
        UPoly r = a.divmod(b).second.primitive();
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    a = a.primitive();
    if (a.leading().sign() < 0) a = -a;
    return a;
}

inline UPoly squarefree_part(const UPoly& p) {
    if (p.degree() <= 1) return p;
    UPoly g = upoly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    auto [q, r] = p.divmod(g);
    if (!r.is_zero()) throw std::logic_error("UPoly: gcd does not divide");
    return q;
}

// Primitive integer image of a rational polynomial, sign-preserving, for
// exact sign queries without rational arithmetic.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(const UPoly& p) {
        if (p.is_zero()) return;
        UPoly prim = p.primitive();
        z_.reserve(prim.coeffs().size());
        for (const auto& v : prim.coeffs()) {
            if (!v.is_integer()) throw std::logic_error("ZPoly: primitive part not integral");
            z_.push_back(v.num());
        }
    }

    bool is_zero() const { return z_.empty(); }
    int degree() const { return static_cast<int>(z_.size()) - 1; }

    // sign of p(num/den), den > 0: homogeneous Horner over the integers.
    int sign_at(const mpz_class& num, const mpz_class& den) const {
        if (z_.empty()) return 0;
        mpz_class acc = z_.back(), dp = 1;
        for (size_t i = z_.size() - 1; i-- > 0;) {
            dp *= den;
            acc = acc * num + z_[i] * dp;
        }
        return sgn(acc);
    }
    int sign_at(const Rational& x) const { return sign_at(x.num(), x.den()); }

private:
    std::vector<mpz_class> z_;
};

// --- Bridges between MultiPoly and UPoly -----------------------------------

// Requires p to involve only variable `var`.
inline UPoly to_upoly(const MultiPoly& p, int var) {
    std::vector<Rational> c(static_cast<size_t>(std::max(p.degree_in(var), 0)) + 1, Rational(0));
    for (const auto& t : p.terms()) {
        if (t.mono.degree() != t.mono.exp(var))
            throw std::logic_error("to_upoly: polynomial is not univariate in the variable");
        c[t.mono.exp(var)] += t.coeff;
    }
    return UPoly(std::move(c));
}

inline MultiPoly from_upoly(const UPoly& p, const ContextPtr& ctx, int var) {
    std::vector<Term> terms;
    for (size_t i = 0; i < p.coeffs().size(); ++i)
        if (!p.coeff(i).is_zero())
            terms.push_back({Monomial::var(var, static_cast<uint32_t>(i)), p.coeff(i)});
    return MultiPoly::from_terms(ctx, std::move(terms));
}

// p restricted to the parametrized line A + a*(B - A), as a polynomial in a.
inline UPoly restrict_to_line(const MultiPoly& p, const Point& A, const Point& B) {
    if (A.dim() != p.context()->arity() || B.dim() != p.context()->arity())
        throw std::logic_error("restrict_to_line: dimension mismatch");
    std::vector<std::vector<UPoly>> powers(static_cast<size_t>(A.dim()));
    auto power = [&](int v, uint32_t e) -> const UPoly& {
        auto& cache = powers[static_cast<size_t>(v)];
        if (cache.empty()) {
            cache.push_back(UPoly::constant(Rational(1)));
            cache.push_back(UPoly::linear(A[v], B[v] - A[v]));
        }
        while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
        return cache[e];
    };
    UPoly sum;
    for (const auto& t : p.terms()) {
        UPoly v = UPoly::constant(t.coeff);
        for (int i = 0; i < p.context()->arity(); ++i) {
            uint32_t e = t.mono.exp(i);
            if (e > 0) v = v * power(i, e);
        }
        sum = sum + v;
    }
    return sum;
}

} // namespace illum

#endif // ILLUM_UPOLY_HH
