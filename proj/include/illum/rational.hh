#ifndef ILLUM_RATIONAL_HH
#define ILLUM_RATIONAL_HH

// Exact rational arithmetic, a thin value wrapper around GMP's mpq_class.
// Everything in the library that touches coordinates or coefficients goes
// through this type; no floating point enters any decision procedure.

#include <gmpxx.h>

#include <cmath>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace illum {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& z) : v_(z) {}
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) {}

    // Accepts "12", "-7", "3/4", "-3/4". Whitespace is not consumed.
    static std::optional<Rational> parse(std::string_view text);
    static Rational from_double(double d);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational neg() const { return Rational(mpq_class(-v_)); }
    Rational inv() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }
    Rational pow(unsigned long e) const {
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
        mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
        return Rational(r);
    }

    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }
    mpz_class ceil() const {
        mpz_class q;
        mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    double to_double() const { return v_.get_d(); }

    // "n" when integral, else "n/d"; exact round trip with parse().
    std::string str() const;

    // Exact fixed-point decimal with `digits` fractional digits, rounded to
    // nearest (ties away from zero). Deterministic; used by the writers.
    std::string decimal(int digits) const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return neg(); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    static Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
    static Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

    // 2^-e, the canonical tolerance shape used throughout.
    static Rational pow2(long e) {
        mpq_class r;
        if (e >= 0) {
            mpz_ui_pow_ui(r.get_num_mpz_t(), 2, static_cast<unsigned long>(e));
        } else {
            r = 1;
            mpz_ui_pow_ui(r.get_den_mpz_t(), 2, static_cast<unsigned long>(-e));
        }
        return Rational(r);
    }

private:
    mpq_class v_;
};

inline std::optional<Rational> Rational::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            if (auto dot = s.find('.'); dot != std::string::npos) {
                // Decimal literal: exact value num/10^k.
                std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
                if (ip.empty() || ip == "+" || ip == "-") ip += "0";
                if (!is_int(ip) || fp.empty()) return std::nullopt;
                for (char c : fp)
                    if (c < '0' || c > '9') return std::nullopt;
                mpz_class scale;
                mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
                mpz_class whole(ip), frac(fp);
                mpz_class num = ::abs(whole) * scale + frac;
                if (!ip.empty() && ip[0] == '-') num = -num;
                return Rational(num, scale);
            }
            if (!is_int(s)) return std::nullopt;
            return Rational(mpz_class(s));
        }
        std::string n = s.substr(0, slash), d = s.substr(slash + 1);
        if (!is_int(n) || !is_int(d)) return std::nullopt;
        mpz_class dz(d);
        if (dz == 0) return std::nullopt;
        return Rational(mpz_class(n), dz);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

inline std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

inline std::string Rational::decimal(int digits) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    // round(|v| * scale) with ties away from zero: floor((2*n*scale + d) / (2*d))
    mpz_class n = ::abs(v_.get_num()), d = v_.get_den();
    mpz_class scaled;
    mpz_fdiv_q(scaled.get_mpz_t(), mpz_class(2 * n * scale + d).get_mpz_t(),
               mpz_class(2 * d).get_mpz_t());
    mpz_class ip = scaled / scale, fp = scaled % scale;
    std::string out;
    if (sign() < 0 && scaled != 0) out += "-";
    out += ip.get_str();
    if (digits > 0) {
        std::string f = fp.get_str();
        out += "." + std::string(static_cast<size_t>(digits) - f.size(), '0') + f;
    }
    return out;
}

// Simplest rational strictly between lo and hi: smallest denominator, and
// smallest magnitude among same-denominator candidates. Classic
// continued-fraction descent.
inline Rational simplest_in_open(const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw std::domain_error("simplest_in_open: empty interval");
    if (lo.sign() < 0 && hi.sign() > 0) return Rational(0);
    if (hi.sign() <= 0) return simplest_in_open(hi.neg(), lo.neg()).neg();
    // 0 <= lo < hi
    const Rational fl(lo.floor());
    const Rational next = fl + Rational(1);
    if (hi > next) return next;
    Rational a = lo - fl, b = hi - fl;  // inside [0, 1]
    if (a.is_zero()) {
        // smallest q with 1/q < b
        const Rational q = Rational(b.inv().floor()) + Rational(1);
        return fl + q.inv();
    }
    return fl + simplest_in_open(b.inv(), a.inv()).inv();
}

// Exact rational value of a finite double (binary expansion).
inline Rational Rational::from_double(double d) {
    if (!std::isfinite(d)) throw std::domain_error("Rational::from_double: non-finite");
    return Rational(mpq_class(d));
}

// Closest rational to v with denominator <= max_den (ties toward the
// earlier convergent, as in the classic bounded continued-fraction scheme).
inline Rational limit_denominator(const Rational& v, const mpz_class& max_den) {
    if (max_den < 1) throw std::domain_error("limit_denominator: bound must be >= 1");
    if (v.den() <= max_den) return v;
    // Bounded continued-fraction: track the last two convergents p/q.
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    mpz_class n = v.num(), d = v.den();
    for (;;) {
        mpz_class a = n / d;  // floor for positive d; n may be negative
        if (n < 0 && n % d != 0) a -= 1;
        mpz_class q2 = q0 + a * q1;
        if (q2 > max_den) break;
        mpz_class p2 = p0 + a * p1;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        mpz_class r = n - a * d;
        if (r == 0) break;
        n = d;
        d = r;
    }
    mpz_class k = (max_den - q0) / q1;
    const Rational bound1 = Rational(p0 + k * p1, q0 + k * q1);
    const Rational bound2 = Rational(p1, q1);
    const Rational d1 = (bound1 - v).abs(), d2 = (bound2 - v).abs();
    return d2 <= d1 ? bound2 : bound1;
}

} // namespace illum

#endif // ILLUM_RATIONAL_HH
