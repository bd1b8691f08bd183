#ifndef ILLUM_REALROOTS_HH
#define ILLUM_REALROOTS_HH

// Exact real-root isolation for univariate rational polynomials via Sturm
// sequences. Counting convention: with end-point zeros dropped from the sign
// sequences, V(lo) − V(hi) is the number of distinct real roots in the
// half-open interval (lo, hi]. Isolation bisects from a Cauchy bound;
// mid-point hits are reported as exact rational roots.

#include "illum/rational.hh"
#include "illum/upoly.hh"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace illum {

struct IsolatingInterval {
    Rational lo, hi;
    std::optional<Rational> exact; // set when the root is known exactly

    IsolatingInterval() = default;
    IsolatingInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}
    static IsolatingInterval exactly(Rational v) {
        IsolatingInterval iv(v, v);
        iv.exact = std::move(v);
        return iv;
    }

    bool is_exact() const { return exact.has_value(); }
    Rational width() const { return hi - lo; }
    Rational mid() const { return is_exact() ? *exact : (lo + hi) / Rational(2); }
    RatInterval box() const { return RatInterval(lo, hi); }
    std::string str() const {
        return is_exact() ? exact->str() : "(" + lo.str() + ", " + hi.str() + ")";
    }
};

class SturmChain {
public:
    explicit SturmChain(const UPoly& p) {
        if (p.is_zero()) throw std::domain_error("SturmChain: zero polynomial");
        squarefree_ = squarefree_part(p).primitive();
        UPoly f0 = squarefree_, f1 = f0.derivative();
        rational_chain_.push_back(f0);
        while (!f1.is_zero()) {
            rational_chain_.push_back(f1);
            UPoly r = -(f0.divmod(f1).second);
            f0 = std::move(f1);
            f1 = r.primitive(); // positive scaling preserves the sign sequence
        }
        for (const auto& f : rational_chain_) chain_.emplace_back(f);
    }

    const UPoly& squarefree() const { return squarefree_; }

    int variations_at(const Rational& x) const {
        int v = 0, prev = 0;
        for (const auto& f : chain_) {
            int s = f.sign_at(x);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    }

    // Number of distinct real roots in (lo, hi].
    int count_halfopen(const Rational& lo, const Rational& hi) const {
        if (lo >= hi) return 0;
        return variations_at(lo) - variations_at(hi);
    }

    int sign_at(const Rational& x) const { return chain_.front().sign_at(x); }

    // 1 + max |c_i / c_d|: every real root has absolute value below this.
    Rational cauchy_bound() const {
        Rational m(0);
        const auto& c = squarefree_.coeffs();
        Rational lead = squarefree_.leading().abs();
        for (size_t i = 0; i + 1 < c.size(); ++i) m = Rational::max(m, c[i].abs() / lead);
        return m + Rational(1);
    }

    // All real roots, ascending. Exact rationals are recognized when a
    // bisection midpoint (or an original endpoint) hits the root.
    std::vector<IsolatingInterval> isolate() const {
        Rational b = cauchy_bound();
        return isolate_in(-b, b);
    }

    // Roots in (lo, hi], ascending.
    std::vector<IsolatingInterval> isolate_in(const Rational& lo, const Rational& hi) const {
        std::vector<IsolatingInterval> out;
        if (lo >= hi) return out;
        bisect(lo, variations_at(lo), hi, variations_at(hi), out);
        return out;
    }

    // Shrink below `width` (no-op for exact roots). The interval must
    // isolate exactly one root, as produced by isolate().
    void refine(IsolatingInterval& iv, const Rational& width) const {
        while (!iv.is_exact() && iv.width() > width) refine_step(iv);
    }
    void refine_step(IsolatingInterval& iv) const {
        if (iv.is_exact()) return;
        Rational m = iv.mid();
        if (sign_at(m) == 0) {
            iv = IsolatingInterval::exactly(m);
            return;
        }
        if (count_halfopen(iv.lo, m) >= 1)
            iv.hi = m;
        else
            iv.lo = m;
    }

private:
    void bisect(const Rational& lo, int vlo, const Rational& hi, int vhi,
                std::vector<IsolatingInterval>& out) const {
        int n = vlo - vhi;
        if (n <= 0) return;
        if (n == 1) {
            if (sign_at(hi) == 0) {
                out.push_back(IsolatingInterval::exactly(hi));
                return;
            }
            // One midpoint probe: it often lands exactly on dyadic roots and
            // otherwise halves the interval for free.
            Rational m = (lo + hi) / Rational(2);
            if (sign_at(m) == 0)
                out.push_back(IsolatingInterval::exactly(m));
            else if (count_halfopen(lo, m) >= 1)
                out.push_back(IsolatingInterval(lo, m));
            else
                out.push_back(IsolatingInterval(m, hi));
            return;
        }
        Rational m = (lo + hi) / Rational(2);
        int vm = variations_at(m);
        bisect(lo, vlo, m, vm, out);
        bisect(m, vm, hi, vhi, out);
    }

    UPoly squarefree_;
    std::vector<UPoly> rational_chain_;
    std::vector<ZPoly> chain_;
};

inline std::vector<IsolatingInterval> isolate_roots(const UPoly& p) {
    if (p.is_zero()) throw std::domain_error("isolate_roots: zero polynomial");
    if (p.degree() == 0) return {};
    return SturmChain(p).isolate();
}

} // namespace illum

#endif // ILLUM_REALROOTS_HH
