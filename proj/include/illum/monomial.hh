#ifndef ILLUM_MONOMIAL_HH
#define ILLUM_MONOMIAL_HH

// Power products over at most kMaxVars variables, with the three monomial
// orders the library needs: lex, graded reverse lex, and the block
// elimination order used by eliminate() (grevlex on the leading block, ties
// broken by grevlex on the tail block).

#include "illum/context.hh"

#include <array>
#include <cstdint>
#include <stdexcept>

namespace illum {

class Monomial {
public:
    Monomial() = default;

    static Monomial one() { return Monomial(); }
    static Monomial var(int i, uint32_t e = 1) {
        Monomial m;
        m.set_exp(i, e);
        return m;
    }

    uint32_t exp(int i) const { return e_[check(i)]; }
    void set_exp(int i, uint32_t e) {
        int k = check(i);
        deg_ = deg_ - e_[k] + e;
        e_[k] = e;
    }
    uint32_t degree() const { return deg_; }
    uint32_t degree_range(int lo, int hi) const {
        uint32_t d = 0;
        for (int i = lo; i < hi; ++i) d += e_[i];
        return d;
    }
    bool is_one() const { return deg_ == 0; }

    Monomial mul(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e_[i] = e_[i] + o.e_[i];
        r.deg_ = deg_ + o.deg_;
        return r;
    }
    bool divides(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }
    // this / o; caller must ensure o.divides(*this).
    Monomial div(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            if (o.e_[i] > e_[i]) throw std::logic_error("Monomial: inexact division");
            r.e_[i] = e_[i] - o.e_[i];
        }
        r.deg_ = deg_ - o.deg_;
        return r;
    }
    Monomial lcm(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e_[i] = e_[i] > o.e_[i] ? e_[i] : o.e_[i];
            r.deg_ += r.e_[i];
        }
        return r;
    }
    Monomial gcd(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e_[i] = e_[i] < o.e_[i] ? e_[i] : o.e_[i];
            r.deg_ += r.e_[i];
        }
        return r;
    }
    bool coprime_with(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e_[i] > 0 && o.e_[i] > 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    static int check(int i) {
        if (i < 0 || i >= kMaxVars) throw std::logic_error("Monomial: variable index");
        return i;
    }
    std::array<uint32_t, kMaxVars> e_{};
    uint32_t deg_ = 0;
};

// Grevlex comparison restricted to variables [lo, hi): -1 if a < b, 0 if
// equal on the range, +1 if a > b. Ties in total degree break by the last
// differing exponent: smaller there means greater.
inline int cmp_grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    uint32_t da = a.degree_range(lo, hi), db = b.degree_range(lo, hi);
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i) {
        uint32_t ea = a.exp(i), eb = b.exp(i);
        if (ea != eb) return ea > eb ? -1 : 1;
    }
    return 0;
}

class MonomialOrder {
public:
    enum class Kind { Lex, Grevlex, Block };

    static MonomialOrder lex(int n) { return MonomialOrder(Kind::Lex, n, 0); }
    static MonomialOrder grevlex(int n) { return MonomialOrder(Kind::Grevlex, n, 0); }
    // Elimination order for the FIRST `head` variables of the context:
    // compare the head block grevlex, break ties grevlex on the tail.
    static MonomialOrder block_elim(int n, int head) {
        if (head <= 0 || head >= n) throw std::logic_error("MonomialOrder: bad block");
        return MonomialOrder(Kind::Block, n, head);
    }

    Kind kind() const { return kind_; }
    int arity() const { return n_; }
    int head() const { return head_; }

    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
        case Kind::Lex:
            for (int i = 0; i < n_; ++i) {
                uint32_t ea = a.exp(i), eb = b.exp(i);
                if (ea != eb) return ea < eb ? -1 : 1;
            }
            return 0;
        case Kind::Grevlex:
            return cmp_grevlex_range(a, b, 0, n_);
        case Kind::Block: {
            int c = cmp_grevlex_range(a, b, 0, head_);
            if (c != 0) return c;
            return cmp_grevlex_range(a, b, head_, n_);
        }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

private:
    MonomialOrder(Kind k, int n, int head) : kind_(k), n_(n), head_(head) {
        if (n <= 0 || n > kMaxVars) throw std::logic_error("MonomialOrder: arity");
    }
    Kind kind_;
    int n_;
    int head_;
};

} // namespace illum

#endif // ILLUM_MONOMIAL_HH
