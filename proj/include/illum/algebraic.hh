#ifndef ILLUM_ALGEBRAIC_HH
#define ILLUM_ALGEBRAIC_HH

// Real algebraic numbers represented as (squarefree defining polynomial,
// isolating interval), with exact sign evaluation and comparison. The gcd
// zero-test settles "is the value exactly zero" symbolically; interval
// refinement settles every nonzero sign in finitely many steps.

#include "illum/realroots.hh"

#include <memory>
#include <stdexcept>
#include <vector>

namespace illum {

class RealRoot {
public:
    RealRoot() : RealRoot(nullptr, IsolatingInterval::exactly(Rational(0))) {}
    // A root isolated by `chain` in `iv` (exact rationals need no chain).
    RealRoot(std::shared_ptr<const SturmChain> chain, IsolatingInterval iv)
        : chain_(std::move(chain)), iv_(std::move(iv)) {
        if (!iv_.is_exact() && !chain_)
            throw std::logic_error("RealRoot: non-exact root needs a chain");
    }
    static RealRoot rational(Rational v) {
        return RealRoot(nullptr, IsolatingInterval::exactly(std::move(v)));
    }

    bool is_rational() const { return iv_.is_exact(); }
    const Rational& value() const {
        if (!is_rational()) throw std::logic_error("RealRoot: not rational");
        return *iv_.exact;
    }
    const IsolatingInterval& interval() const { return iv_; }
    RatInterval box() const { return iv_.box(); }
    double to_double() const { return iv_.mid().to_double(); }

    void refine_to(const Rational& width) const {
        if (!iv_.is_exact() && chain_) chain_->refine(iv_, width);
    }
    void refine_step() const {
        if (!iv_.is_exact() && chain_) chain_->refine_step(iv_);
    }

    // Exact sign of q at this number.
    int sign_of(const UPoly& q) const {
        if (q.is_zero()) return 0;
        if (is_rational()) return q.eval(value()).sign();
        // Zero test: the root kills q iff it is a root of gcd(p, q).
        UPoly g = upoly_gcd(chain_->squarefree(), q);
        if (g.degree() > 0) {
            SturmChain gw(g);
            if (gw.count_halfopen(iv_.lo, iv_.hi) > 0) return 0;
        }
        // Nonzero: refine until the interval evaluation decides.
        IsolatingInterval working = iv_;
        for (int step = 0; step < 4096; ++step) {
            int s = q.eval_box(working.box()).sign();
            if (s != 0) return s;
            if (working.is_exact()) return q.eval(*working.exact).sign();
            chain_->refine_step(working);
        }
        throw std::logic_error("RealRoot: sign refinement did not converge");
    }

    // Total order. Equal roots of different defining polynomials are
    // recognized via the gcd of the defining polynomials.
    int compare(const RealRoot& o) const {
        if (is_rational() && o.is_rational())
            return value() < o.value() ? -1 : (value() == o.value() ? 0 : 1);
        if (is_rational()) return -o.compare(*this);
        if (o.is_rational()) {
            // Equal iff the rational is the one root of our polynomial
            // inside our interval; otherwise refine until it falls outside.
            const Rational& v = o.value();
            if (chain_->sign_at(v) == 0 && iv_.lo < v && v < iv_.hi) return 0;
            IsolatingInterval working = iv_;
            // The root lives strictly inside (lo, hi), so boundary contact
            // already decides the order.
            for (;;) {
                if (working.is_exact())
                    return *working.exact < v ? -1 : (*working.exact == v ? 0 : 1);
                if (v <= working.lo) return 1;
                if (v >= working.hi) return -1;
                chain_->refine_step(working);
            }
        }
        // Both algebraic: detect shared roots symbolically first.
        UPoly g = upoly_gcd(chain_->squarefree(), o.chain_->squarefree());
        if (g.degree() > 0) {
            Rational lo = Rational::max(iv_.lo, o.iv_.lo);
            Rational hi = Rational::min(iv_.hi, o.iv_.hi);
            if (lo < hi) {
                SturmChain gw(g);
                if (gw.count_halfopen(lo, hi) > 0) return 0;
            }
        }
        // Distinct roots strictly inside their intervals: touching closures
        // already decide the order (openness supplies the strict inequality).
        IsolatingInterval a = iv_, b = o.iv_;
        for (int step = 0; step < 8192; ++step) {
            if (a.is_exact() && b.is_exact())
                return *a.exact < *b.exact ? -1 : (*a.exact == *b.exact ? 0 : 1);
            if (a.hi <= b.lo) return -1;
            if (b.hi <= a.lo) return 1;
            chain_->refine_step(a);
            o.chain_->refine_step(b);
        }
        throw std::logic_error("RealRoot: comparison did not converge");
    }

    bool operator<(const RealRoot& o) const { return compare(o) < 0; }
    bool operator==(const RealRoot& o) const { return compare(o) == 0; }

    std::string str() const { return iv_.str(); }

private:
    std::shared_ptr<const SturmChain> chain_;
    mutable IsolatingInterval iv_; // refinement only narrows; value is fixed
};

// All real roots of p as RealRoot values, ascending.
inline std::vector<RealRoot> real_roots_of(const UPoly& p) {
    std::vector<RealRoot> out;
    if (p.is_zero() || p.degree() == 0) return out;
    auto chain = std::make_shared<const SturmChain>(p);
    for (auto& iv : chain->isolate()) out.emplace_back(chain, iv);
    return out;
}

// Sorted union with duplicates (equal numbers from different polynomials)
// removed.
inline std::vector<RealRoot> merge_roots(std::vector<RealRoot> roots) {
    std::sort(roots.begin(), roots.end(),
              [](const RealRoot& a, const RealRoot& b) { return a.compare(b) < 0; });
    std::vector<RealRoot> out;
    for (auto& r : roots) {
        if (!out.empty() && out.back().compare(r) == 0) continue;
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace illum

#endif // ILLUM_ALGEBRAIC_HH
