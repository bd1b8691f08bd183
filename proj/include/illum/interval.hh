#ifndef ILLUM_INTERVAL_HH
#define ILLUM_INTERVAL_HH

// Closed intervals with exact rational endpoints. Interval evaluation is the
// workhorse for certified sign decisions at algebraic points: refine the
// point's isolating box until the polynomial's interval value excludes zero
// (or a symbolic gcd test has already shown the value is exactly zero).

#include "illum/rational.hh"

#include <stdexcept>
#include <string>

namespace illum {

struct RatInterval {
    Rational lo, hi;

    RatInterval() = default;
    RatInterval(Rational point) : lo(point), hi(point) {}
    RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::logic_error("RatInterval: lo > hi");
    }

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / Rational(2); }
    bool is_point() const { return lo == hi; }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool intersects(const RatInterval& o) const { return lo <= o.hi && o.lo <= hi; }

    // Certain sign: -1 / +1 when the whole interval is on one side of zero,
    // 0 when the interval straddles (sign undecided at this width).
    int sign() const {
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
        return 0;
    }

    std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }

    friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
        return RatInterval(a.lo + b.lo, a.hi + b.hi);
    }
    friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
        return RatInterval(a.lo - b.hi, a.hi - b.lo);
    }
    friend RatInterval operator-(const RatInterval& a) {
        return RatInterval(-a.hi, -a.lo);
    }
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
        Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        Rational lo = Rational::min(Rational::min(p1, p2), Rational::min(p3, p4));
        Rational hi = Rational::max(Rational::max(p1, p2), Rational::max(p3, p4));
        return RatInterval(lo, hi);
    }
    friend RatInterval operator*(const Rational& c, const RatInterval& a) {
        return RatInterval(c) * a;
    }

    // Exact range of x^e over the interval (monotonicity analysis, not
    // repeated interval multiplication, so even powers stay tight).
    RatInterval pow(unsigned e) const {
        if (e == 0) return RatInterval(Rational(1));
        Rational pl = lo.pow(e), ph = hi.pow(e);
        if (e % 2 == 1) return RatInterval(pl, ph);
        if (lo.sign() >= 0) return RatInterval(pl, ph);
        if (hi.sign() <= 0) return RatInterval(ph, pl);
        return RatInterval(Rational(0), Rational::max(pl, ph));
    }

    // Hull of the two intervals (smallest interval containing both).
    static RatInterval hull(const RatInterval& a, const RatInterval& b) {
        return RatInterval(Rational::min(a.lo, b.lo), Rational::max(a.hi, b.hi));
    }
};

} // namespace illum

#endif // ILLUM_INTERVAL_HH
