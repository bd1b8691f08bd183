#ifndef ILLUM_POLYNOMIAL_HH
#define ILLUM_POLYNOMIAL_HH

// Sparse multivariate polynomials over the rationals. Terms are kept sorted
// in descending grevlex over the polynomial's Context, with no zero terms,
// so equality is structural and printing is canonical by construction.

#include "illum/context.hh"
#include "illum/interval.hh"
#include "illum/monomial.hh"
#include "illum/rational.hh"

#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace illum {

struct Term {
    Monomial mono;
    Rational coeff;
};

// Descending-grevlex comparator for term accumulation maps.
struct GrevlexGreater {
    int n;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return cmp_grevlex_range(a, b, 0, n) > 0;
    }
};

class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static MultiPoly zero(ContextPtr ctx) { return MultiPoly(std::move(ctx)); }
    static MultiPoly constant(ContextPtr ctx, Rational c) {
        MultiPoly p(std::move(ctx));
        if (!c.is_zero()) p.terms_.push_back({Monomial::one(), std::move(c)});
        return p;
    }
    static MultiPoly variable(ContextPtr ctx, int i) {
        if (i < 0 || i >= ctx->arity()) throw std::logic_error("MultiPoly: variable index");
        MultiPoly p(std::move(ctx));
        p.terms_.push_back({Monomial::var(i), Rational(1)});
        return p;
    }
    static MultiPoly variable(const ContextPtr& ctx, std::string_view name) {
        auto i = ctx->index(name);
        if (!i) throw std::logic_error("MultiPoly: unknown variable " + std::string(name));
        return variable(ctx, *i);
    }
    // Terms in any order, possibly with duplicates/zeros; normalized here.
    static MultiPoly from_terms(ContextPtr ctx, std::vector<Term> terms);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].mono.is_one(); }

    // Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
        return d;
    }
    int degree_in(int var) const {
        int d = is_zero() ? -1 : 0;
        for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.exp(var)));
        return d;
    }

    // Leading data under the storage order (grevlex descending).
    const Term& leading_term() const {
        if (is_zero()) throw std::logic_error("MultiPoly: leading term of zero");
        return terms_[0];
    }
    const Rational& leading_coeff() const { return leading_term().coeff; }

    Rational coeff_of(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.mono == m) return t.coeff;
        return Rational(0);
    }
    Rational constant_coeff() const { return coeff_of(Monomial::one()); }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merged(a, b, false); }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merged(a, b, true); }
    MultiPoly operator-() const {
        MultiPoly r(ctx_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) { *this = *this + o; return *this; }
    MultiPoly& operator-=(const MultiPoly& o) { *this = *this - o; return *this; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }

    MultiPoly scaled(const Rational& c) const {
        if (c.is_zero()) return MultiPoly(ctx_);
        MultiPoly r(ctx_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
        return r;
    }
    MultiPoly term_scaled(const Rational& c, const Monomial& m) const {
        if (c.is_zero()) return MultiPoly(ctx_);
        MultiPoly r(ctx_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono.mul(m), t.coeff * c});
        return r;
    }

    MultiPoly pow(unsigned e) const {
        MultiPoly r = constant(ctx_, Rational(1));
        MultiPoly base = *this;
        while (e > 0) {
            if (e & 1u) r = r * base;
            e >>= 1u;
            if (e > 0) base = base * base;
        }
        return r;
    }

    MultiPoly derivative(int var) const {
        MultiPoly r(ctx_);
        for (const auto& t : terms_) {
            uint32_t e = t.mono.exp(var);
            if (e == 0) continue;
            Monomial m = t.mono;
            m.set_exp(var, e - 1);
            r.terms_.push_back({m, t.coeff * Rational(static_cast<long>(e))});
        }
        // Term order is preserved by lowering one exponent? Not in general:
        // re-normalize to stay canonical.
        return from_terms(ctx_, std::move(r.terms_));
    }
    std::vector<MultiPoly> gradient() const {
        std::vector<MultiPoly> g;
        for (int i = 0; i < ctx_->arity(); ++i) g.push_back(derivative(i));
        return g;
    }

    Rational evaluate(const std::vector<Rational>& point) const;
    RatInterval evaluate_box(const std::vector<RatInterval>& box) const;

    // Image under var_i -> args[i]; args live in `target`. Powers of the
    // arguments are cached, so repeated exponents cost one multiply each.
    MultiPoly compose(const std::vector<MultiPoly>& args, const ContextPtr& target) const;

    // Partial evaluation of a single variable at a rational value.
    MultiPoly substitute(int var, const Rational& value) const;
    MultiPoly substitute(int var, const MultiPoly& value) const;

    // Coefficients of powers of `var`: result[k] is the coefficient of
    // var^k, a polynomial in the same context not involving var.
    std::vector<MultiPoly> coeffs_in(int var) const;

    bool is_homogeneous() const {
        if (terms_.size() <= 1) return true;
        for (const auto& t : terms_)
            if (t.mono.degree() != terms_[0].mono.degree()) return false;
        return true;
    }
    MultiPoly homogeneous_part(uint32_t k) const {
        MultiPoly r(ctx_);
        for (const auto& t : terms_)
            if (t.mono.degree() == k) r.terms_.push_back({t.mono, t.coeff});
        return r;
    }
    MultiPoly top_part() const {
        int d = degree();
        return d < 0 ? *this : homogeneous_part(static_cast<uint32_t>(d));
    }

    // p(x1..xn) -> w^d * p(x1/w .. xn/w) in the context extended by "w".
    MultiPoly homogenize(const ContextPtr& target) const;
    // Inverse: set the LAST variable of the current context to 1, mapping
    // into `target` (the context without it).
    MultiPoly dehomogenize(const ContextPtr& target) const;

    // Project into the context lacking variable `var` (which must not occur).
    MultiPoly without_var(int var, const ContextPtr& target) const {
        if (degree_in(var) > 0) throw std::logic_error("without_var: variable occurs");
        if (target->arity() != ctx_->arity() - 1)
            throw std::logic_error("without_var: target arity");
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            Monomial m;
            for (int i = 0, j = 0; i < ctx_->arity(); ++i) {
                if (i == var) continue;
                m.set_exp(j++, t.mono.exp(i));
            }
            out.push_back({m, t.coeff});
        }
        return from_terms(target, std::move(out));
    }

    // Positive rational c such that (*this)/c has coprime integer
    // coefficients; content of 0 is 1.
    Rational content() const;
    // Divide by content: sign of every coefficient is preserved.
    MultiPoly primitive_sign_preserving() const { return scaled(content().inv()); }
    // Primitive AND leading coefficient positive: the canonical form used
    // for comparisons up to nonzero scalar.
    MultiPoly canonical() const {
        MultiPoly p = primitive_sign_preserving();
        if (!p.is_zero() && p.leading_coeff().sign() < 0) p = -p;
        return p;
    }

    // Componentwise minimum exponent over all terms.
    Monomial monomial_content() const {
        if (is_zero()) return Monomial::one();
        Monomial m = terms_[0].mono;
        for (const auto& t : terms_) m = m.gcd(t.mono);
        return m;
    }
    MultiPoly divided_by_monomial(const Monomial& m) const {
        MultiPoly r(ctx_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono.div(m), t.coeff});
        return r;
    }

    // Exact multivariate division: nullopt when `d` does not divide.
    std::optional<MultiPoly> try_divide(const MultiPoly& d) const;

    // Canonical text form: terms in descending grevlex, coefficients as
    // num or num/den, variables in context order, "^1" and a "1*" coefficient
    // omitted. Examples: "2*x^2 - x*y + 3*y^2 - 6*x - 4*y", "0", "-5/2".
    std::string str() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (!same_context(a.ctx_, b.ctx_)) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        for (size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
                return false;
        return true;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

private:
    static void require_same(const MultiPoly& a, const MultiPoly& b) {
        if (!a.ctx_ || !b.ctx_ || !same_context(a.ctx_, b.ctx_))
            throw std::logic_error("MultiPoly: context mismatch");
    }
    static MultiPoly merged(const MultiPoly& a, const MultiPoly& b, bool subtract);
    // Adopt a vector already in descending grevlex with no zeros/duplicates.
    void adopt_sorted(std::vector<Term> terms) { terms_ = std::move(terms); }

    ContextPtr ctx_;
    std::vector<Term> terms_;
};

inline MultiPoly MultiPoly::from_terms(ContextPtr ctx, std::vector<Term> terms) {
    std::map<Monomial, Rational, GrevlexGreater> acc(GrevlexGreater{ctx->arity()});
    for (auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        auto [it, fresh] = acc.try_emplace(t.mono, t.coeff);
        if (!fresh) {
            it->second += t.coeff;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
    MultiPoly p(std::move(ctx));
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) p.terms_.push_back({m, std::move(c)});
    return p;
}

inline MultiPoly MultiPoly::merged(const MultiPoly& a, const MultiPoly& b, bool subtract) {
    require_same(a, b);
    MonomialOrder ord = MonomialOrder::grevlex(a.ctx_->arity());
    MultiPoly r(a.ctx_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        int c = ord.compare(a.terms_[i].mono, b.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (c < 0) {
            const Term& t = b.terms_[j++];
            r.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
        } else {
            Rational s = subtract ? a.terms_[i].coeff - b.terms_[j].coeff
                                  : a.terms_[i].coeff + b.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) {
        const Term& t = b.terms_[j];
        r.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
    }
    return r;
}

inline MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly::require_same(a, b);
    const ContextPtr& ctx = a.context();
    if (a.is_zero() || b.is_zero()) return MultiPoly::zero(ctx);
    std::map<Monomial, Rational, GrevlexGreater> acc(GrevlexGreater{ctx->arity()});
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) {
            Monomial m = ta.mono.mul(tb.mono);
            Rational c = ta.coeff * tb.coeff;
            auto [it, fresh] = acc.try_emplace(std::move(m), c);
            if (!fresh) it->second += c;
        }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) out.push_back({m, std::move(c)});
    MultiPoly r(ctx);
    // Already sorted and deduplicated; adopt directly.
    r.adopt_sorted(std::move(out));
    return r;
}

inline Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != ctx_->arity())
        throw std::logic_error("MultiPoly: evaluate dimension mismatch");
    std::vector<std::vector<Rational>> powers(point.size());
    auto power = [&](int v, uint32_t e) -> const Rational& {
        auto& cache = powers[static_cast<size_t>(v)];
        if (cache.empty()) cache.push_back(Rational(1));
        while (cache.size() <= e) cache.push_back(cache.back() * point[static_cast<size_t>(v)]);
        return cache[e];
    };
    Rational sum(0);
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (int i = 0; i < ctx_->arity(); ++i) {
            uint32_t e = t.mono.exp(i);
            if (e > 0) v *= power(i, e);
        }
        sum += v;
    }
    return sum;
}

inline RatInterval MultiPoly::evaluate_box(const std::vector<RatInterval>& box) const {
    if (static_cast<int>(box.size()) != ctx_->arity())
        throw std::logic_error("MultiPoly: evaluate dimension mismatch");
    RatInterval sum{Rational(0)};
    for (const auto& t : terms_) {
        RatInterval v{t.coeff};
        for (int i = 0; i < ctx_->arity(); ++i) {
            uint32_t e = t.mono.exp(i);
            if (e > 0) v = v * box[static_cast<size_t>(i)].pow(e);
        }
        sum = sum + v;
    }
    return sum;
}

inline MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& args,
                                    const ContextPtr& target) const {
    if (static_cast<int>(args.size()) != ctx_->arity())
        throw std::logic_error("MultiPoly: compose arity mismatch");
    for (const auto& a : args)
        if (!same_context(a.context(), target))
            throw std::logic_error("MultiPoly: compose argument context");
    std::vector<std::vector<MultiPoly>> powers(args.size());
    auto power = [&](int v, uint32_t e) -> const MultiPoly& {
        auto& cache = powers[static_cast<size_t>(v)];
        if (cache.empty()) cache.push_back(MultiPoly::constant(target, Rational(1)));
        while (cache.size() <= e) cache.push_back(cache.back() * args[static_cast<size_t>(v)]);
        return cache[e];
    };
    MultiPoly sum(target);
    for (const auto& t : terms_) {
        MultiPoly v = MultiPoly::constant(target, t.coeff);
        for (int i = 0; i < ctx_->arity(); ++i) {
            uint32_t e = t.mono.exp(i);
            if (e > 0) v = v * power(i, e);
        }
        sum += v;
    }
    return sum;
}

inline MultiPoly MultiPoly::substitute(int var, const Rational& value) const {
    std::vector<Rational> powers{Rational(1)};
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        uint32_t e = t.mono.exp(var);
        while (powers.size() <= e) powers.push_back(powers.back() * value);
        Monomial m = t.mono;
        m.set_exp(var, 0);
        out.push_back({m, t.coeff * powers[e]});
    }
    return from_terms(ctx_, std::move(out));
}

inline MultiPoly MultiPoly::substitute(int var, const MultiPoly& value) const {
    if (!same_context(value.context(), ctx_))
        throw std::logic_error("MultiPoly: substitute context mismatch");
    std::vector<MultiPoly> args;
    for (int i = 0; i < ctx_->arity(); ++i)
        args.push_back(i == var ? value : MultiPoly::variable(ctx_, i));
    return compose(args, ctx_);
}

inline std::vector<MultiPoly> MultiPoly::coeffs_in(int var) const {
    int d = degree_in(var);
    std::vector<MultiPoly> out(static_cast<size_t>(std::max(d, 0)) + 1, MultiPoly(ctx_));
    std::vector<std::vector<Term>> buckets(out.size());
    for (const auto& t : terms_) {
        uint32_t e = t.mono.exp(var);
        Monomial m = t.mono;
        m.set_exp(var, 0);
        buckets[e].push_back({m, t.coeff});
    }
    for (size_t k = 0; k < out.size(); ++k) out[k] = from_terms(ctx_, std::move(buckets[k]));
    return out;
}

inline MultiPoly MultiPoly::homogenize(const ContextPtr& target) const {
    if (target->arity() != ctx_->arity() + 1)
        throw std::logic_error("MultiPoly: homogenize target arity");
    if (is_zero()) return MultiPoly(target);
    int d = degree();
    int w = ctx_->arity();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m = t.mono;
        m.set_exp(w, static_cast<uint32_t>(d) - t.mono.degree());
        out.push_back({m, t.coeff});
    }
    return from_terms(target, std::move(out));
}

inline MultiPoly MultiPoly::dehomogenize(const ContextPtr& target) const {
    if (target->arity() != ctx_->arity() - 1)
        throw std::logic_error("MultiPoly: dehomogenize target arity");
    int w = ctx_->arity() - 1;
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m = t.mono;
        m.set_exp(w, 0);
        out.push_back({m, t.coeff});
    }
    return from_terms(target, std::move(out));
}

inline Rational MultiPoly::content() const {
    if (is_zero()) return Rational(1);
    mpz_class l(1);
    for (const auto& t : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.den().get_mpz_t());
    mpz_class g(0);
    for (const auto& t : terms_) {
        mpz_class scaled = t.coeff.num() * (l / t.coeff.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
    }
    return Rational(g, l);
}

inline std::optional<MultiPoly> MultiPoly::try_divide(const MultiPoly& d) const {
    require_same(*this, d);
    if (d.is_zero()) throw std::domain_error("MultiPoly: division by zero");
    MultiPoly q(ctx_), r = *this;
    while (!r.is_zero()) {
        const Term& lr = r.leading_term();
        const Term& ld = d.leading_term();
        if (!ld.mono.divides(lr.mono)) return std::nullopt;
        Rational c = lr.coeff / ld.coeff;
        Monomial m = lr.mono.div(ld.mono);
        MultiPoly t(ctx_);
        t.terms_.push_back({m, c});
        q += t;
        r -= d.term_scaled(c, m);
    }
    return q;
}

inline std::string MultiPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t k = 0; k < terms_.size(); ++k) {
        const Term& t = terms_[k];
        Rational mag = t.coeff.abs();
        if (k == 0) {
            if (t.coeff.sign() < 0) out += "-";
        } else {
            out += t.coeff.sign() < 0 ? " - " : " + ";
        }
        bool wrote_coeff = false;
        if (!mag.is_one() || t.mono.is_one()) {
            out += mag.str();
            wrote_coeff = true;
        }
        for (int i = 0; i < ctx_->arity(); ++i) {
            uint32_t e = t.mono.exp(i);
            if (e == 0) continue;
            if (wrote_coeff) out += "*";
            out += ctx_->name(i);
            if (e >= 2) out += "^" + std::to_string(e);
            wrote_coeff = true;
        }
    }
    return out;
}

} // namespace illum

#endif // ILLUM_POLYNOMIAL_HH
