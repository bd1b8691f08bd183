#ifndef ILLUM_RESULTANT_HH
#define ILLUM_RESULTANT_HH

// Sylvester resultants with fraction-free (Bareiss) determinant evaluation.
// All divisions in the Bareiss sweep are exact by the minor identity, so the
// computation stays in the polynomial ring with no fraction buildup.

#include "illum/polynomial.hh"

#include <stdexcept>
#include <vector>

namespace illum {

// (dp+dq) x (dp+dq) Sylvester matrix of p and q with respect to variable v;
// entries are polynomials free of v.
inline std::vector<std::vector<MultiPoly>> sylvester_matrix(const MultiPoly& p,
                                                            const MultiPoly& q, int v) {
    int dp = p.degree_in(v), dq = q.degree_in(v);
    if (dp <= 0 && dq <= 0)
        throw std::domain_error("sylvester_matrix: neither input involves the variable");
    if (dp < 0 || dq < 0) throw std::domain_error("sylvester_matrix: zero input");
    const ContextPtr& ctx = p.context();
    std::vector<MultiPoly> pc = p.coeffs_in(v), qc = q.coeffs_in(v);
    int n = dp + dq;
    std::vector<std::vector<MultiPoly>> m(static_cast<size_t>(n),
                                          std::vector<MultiPoly>(static_cast<size_t>(n),
                                                                 MultiPoly::zero(ctx)));
    // dq rows of p's coefficients (descending), then dp rows of q's.
    for (int r = 0; r < dq; ++r)
        for (int k = 0; k <= dp; ++k) m[static_cast<size_t>(r)][static_cast<size_t>(r + k)] =
            pc[static_cast<size_t>(dp - k)];
    for (int r = 0; r < dp; ++r)
        for (int k = 0; k <= dq; ++k)
            m[static_cast<size_t>(dq + r)][static_cast<size_t>(r + k)] =
                qc[static_cast<size_t>(dq - k)];
    return m;
}

// Determinant by Bareiss elimination with row pivoting; exact divisions.
inline MultiPoly det_bareiss(std::vector<std::vector<MultiPoly>> m) {
    size_t n = m.size();
    if (n == 0) throw std::domain_error("det_bareiss: empty matrix");
    const ContextPtr& ctx = m[0][0].context();
    MultiPoly prev = MultiPoly::constant(ctx, Rational(1));
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return MultiPoly::zero(ctx);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                MultiPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = num.try_divide(prev);
                if (!q) throw std::logic_error("det_bareiss: inexact division");
                m[i][j] = std::move(*q);
            }
            m[i][k] = MultiPoly::zero(ctx);
        }
        prev = m[k][k];
    }
    MultiPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

// Res_v(p, q). Zero iff p and q share a factor of positive v-degree (or a
// common root for fixed values of the remaining variables).
inline MultiPoly sylvester_resultant(const MultiPoly& p, const MultiPoly& q, int v) {
    int dp = p.degree_in(v), dq = q.degree_in(v);
    if (dp < 0 || dq < 0) return MultiPoly::zero(p.context());
    if (dp == 0 && dq == 0)
        throw std::domain_error("sylvester_resultant: neither input involves the variable");
    // Degenerate convention: Res(p, q) = p^deg q when q is free of v.
    if (dp == 0) return p.pow(static_cast<unsigned>(dq));
    if (dq == 0) return q.pow(static_cast<unsigned>(dp));
    return det_bareiss(sylvester_matrix(p, q, v));
}

} // namespace illum

#endif // ILLUM_RESULTANT_HH
