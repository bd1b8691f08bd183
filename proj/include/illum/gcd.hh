#ifndef ILLUM_GCD_HH
#define ILLUM_GCD_HH

// Multivariate gcd (primitive pseudo-remainder sequences), squarefree parts,
// and exact polynomial square roots. These support extraneous-factor cleanup
// after elimination and the squarefree normalization of cones and pencils.

#include "illum/polynomial.hh"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace illum {

// Pseudo-remainder of p by q with respect to variable v:
// lc_v(q)^k * p ≡ prem (mod q) for some 0 <= k <= deg_v p - deg_v q + 1.
inline MultiPoly prem(const MultiPoly& p, const MultiPoly& q, int v) {
    int dq = q.degree_in(v);
    if (dq < 0) throw std::domain_error("prem: zero divisor");
    MultiPoly lead_q = q.coeffs_in(v)[static_cast<size_t>(dq)];
    MultiPoly r = p;
    MultiPoly vpoly = MultiPoly::variable(p.context(), v);
    while (!r.is_zero() && r.degree_in(v) >= dq) {
        int dr = r.degree_in(v);
        MultiPoly lead_r = r.coeffs_in(v)[static_cast<size_t>(dr)];
        // r <- lc(q)*r - lc(r)*v^(dr-dq)*q removes the degree-dr term.
        r = lead_q * r - lead_r * vpoly.pow(static_cast<unsigned>(dr - dq)) * q;
        if (!r.is_zero() && r.degree_in(v) >= dr)
            throw std::logic_error("prem: degree did not drop");
    }
    return r;
}

inline MultiPoly multipoly_gcd(const MultiPoly& a, const MultiPoly& b);

// gcd of the v-coefficients of p (a polynomial not involving v).
inline MultiPoly content_in(const MultiPoly& p, int v) {
    MultiPoly c = MultiPoly::zero(p.context());
    for (const auto& coeff : p.coeffs_in(v)) {
        if (coeff.is_zero()) continue;
        c = multipoly_gcd(c, coeff);
        if (c.is_constant() && !c.is_zero()) break;
    }
    if (c.is_zero()) return MultiPoly::constant(p.context(), Rational(1));
    return c;
}

inline MultiPoly primitive_in(const MultiPoly& p, int v) {
    MultiPoly c = content_in(p, v);
    auto q = p.try_divide(c);
    if (!q) throw std::logic_error("primitive_in: content does not divide");
    return *q;
}

// Canonical gcd (primitive, positive leading coefficient). gcd(0, b) = |b|.
inline MultiPoly multipoly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b.canonical();
    if (b.is_zero()) return a.canonical();
    if (a.is_constant() || b.is_constant())
        return MultiPoly::constant(a.context(), Rational(1));
    int v = -1;
    for (int i = a.context()->arity() - 1; i >= 0; --i)
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
            v = i;
            break;
        }
    if (a.degree_in(v) == 0) return multipoly_gcd(content_in(b, v), a).canonical();
    if (b.degree_in(v) == 0) return multipoly_gcd(content_in(a, v), b).canonical();

    MultiPoly ca = content_in(a, v), cb = content_in(b, v);
    MultiPoly c = multipoly_gcd(ca, cb);
    MultiPoly A = *a.try_divide(ca), B = *b.try_divide(cb);
    if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
    while (true) {
        MultiPoly r = prem(A, B, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) return c.canonical(); // primitive parts coprime in v
        A = std::move(B);
        B = primitive_in(r.canonical(), v);
    }
    return (c * primitive_in(B, v)).canonical();
}

// Squarefree part: repeated factors removed, one variable at a time. After
// the v-pass, every factor involving v has multiplicity one; later passes
// only touch repeated factors free of the earlier variables.
inline MultiPoly squarefree_part_multi(const MultiPoly& p) {
    if (p.is_zero() || p.is_constant()) return p.canonical();
    MultiPoly r = p.canonical();
    for (int v = 0; v < p.context()->arity(); ++v) {
        if (r.degree_in(v) <= 0) continue;
        MultiPoly g = multipoly_gcd(r, r.derivative(v));
        if (g.is_constant()) continue;
        auto q = r.try_divide(g);
        if (!q) throw std::logic_error("squarefree_part_multi: gcd does not divide");
        r = q->canonical();
    }
    return r;
}

// Exact square root of a perfect-square polynomial, nullopt otherwise.
inline std::optional<MultiPoly> try_sqrt(const MultiPoly& p) {
    const ContextPtr& ctx = p.context();
    if (p.is_zero()) return p;
    if (p.is_constant()) {
        Rational c = p.constant_coeff();
        if (c.sign() < 0) return std::nullopt;
        mpz_class sn, sd;
        if (!mpz_perfect_square_p(c.num().get_mpz_t()) ||
            !mpz_perfect_square_p(c.den().get_mpz_t()))
            return std::nullopt;
        mpz_sqrt(sn.get_mpz_t(), c.num().get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), c.den().get_mpz_t());
        return MultiPoly::constant(ctx, Rational(sn, sd));
    }
    int v = -1;
    for (int i = 0; i < ctx->arity(); ++i)
        if (p.degree_in(i) > 0) {
            v = i;
            break;
        }
    int d = p.degree_in(v);
    if (d % 2 != 0) return std::nullopt;
    int m = d / 2;
    std::vector<MultiPoly> pc = p.coeffs_in(v);
    auto top = try_sqrt(pc[static_cast<size_t>(d)]);
    if (!top) return std::nullopt;
    std::vector<MultiPoly> g(static_cast<size_t>(m) + 1, MultiPoly::zero(ctx));
    g[static_cast<size_t>(m)] = *top;
    MultiPoly twice_top = top->scaled(Rational(2));
    // Coefficient of v^(m+j) in g^2 is 2*g_m*g_j + sum of middle products.
    for (int j = m - 1; j >= 0; --j) {
        MultiPoly rhs = pc[static_cast<size_t>(m + j)];
        // Collect sum_{i+k = m+j, j < i,k < m} g_i g_k exactly once per pair.
        MultiPoly mid = MultiPoly::zero(ctx);
        for (int i = j + 1; i < m; ++i) {
            int k = m + j - i;
            if (k <= j || k >= m || k < i) continue;
            MultiPoly prod = g[static_cast<size_t>(i)] * g[static_cast<size_t>(k)];
            mid += (i == k) ? prod : prod.scaled(Rational(2));
        }
        auto q = (rhs - mid).try_divide(twice_top);
        if (!q) return std::nullopt;
        g[static_cast<size_t>(j)] = *q;
    }
    MultiPoly root = MultiPoly::zero(ctx);
    MultiPoly vp = MultiPoly::variable(ctx, v);
    for (int j = 0; j <= m; ++j) root += g[static_cast<size_t>(j)] * vp.pow(static_cast<unsigned>(j));
    if (root * root != p) return std::nullopt;
    return root;
}

} // namespace illum

#endif // ILLUM_GCD_HH
