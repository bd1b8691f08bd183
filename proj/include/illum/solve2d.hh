#pragma once

// Certified real solving of 2x2 polynomial systems over the rationals.
//
// Candidate solutions are built from resultant projections onto each axis;
// every candidate box is then either rejected by exact interval arithmetic,
// decided exactly (as soon as a coordinate is rational), or certified to
// contain a unique regular solution by a Krawczyk interval-Newton
// contraction.  Candidates that resist certification within the refinement
// budget are kept with a `singular` flag when the Jacobian cannot be
// bounded away from rank deficiency on the box.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "illum/algebraic.hh"
#include "illum/interval.hh"
#include "illum/polynomial.hh"
#include "illum/resultant.hh"
#include "illum/upoly.hh"

namespace illum {

// Raised when the two input curves share a positive-dimensional component,
// so their intersection is not a finite point set.
class SharedComponentError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// One candidate or certified solution of {p = 0, q = 0}.
struct PlanarBox {
    RealRoot x;  // abscissa as a real algebraic number
    RealRoot y;  // ordinate as a real algebraic number
    RatInterval box_x{Rational(0), Rational(0)};
    RatInterval box_y{Rational(0), Rational(0)};
    bool certified = false;  // solution verified (exactly or by contraction)
    bool singular = false;   // Jacobian vanishes (or cannot be excluded)

    bool exact() const { return x.is_rational() && y.is_rational(); }
};

namespace detail {

struct IVec2 {
    RatInterval a, b;
};

struct IMat2 {
    RatInterval m00, m01, m10, m11;
};

inline IVec2 mat_vec(const IMat2& m, const IVec2& v) {
    return {m.m00 * v.a + m.m01 * v.b, m.m10 * v.a + m.m11 * v.b};
}

inline RatInterval point_iv(const Rational& v) { return RatInterval(v, v); }

}  // namespace detail

// All real solutions of p(x, y) = q(x, y) = 0 for bivariate p, q.
//
// The refinement budget bounds the number of bisection/contraction rounds
// spent on any single candidate before it is flagged instead of certified.
inline std::vector<PlanarBox> solve_system_2d(const MultiPoly& p, const MultiPoly& q,
                                              int refine_budget = 64) {
    const auto& ctx = p.context();
    if (ctx->arity() != 2 || !ctx->same_as(*q.context()))
        throw std::logic_error("solve_system_2d: expects two bivariate polynomials");
    if (p.is_zero() || q.is_zero())
        throw SharedComponentError("solve_system_2d: zero polynomial in system");

    // Axis projections.  A vanishing resultant means a common factor, i.e.
    // infinitely many intersection points.
    const MultiPoly res_x = sylvester_resultant(p, q, 1);  // eliminate y -> poly in x
    const MultiPoly res_y = sylvester_resultant(p, q, 0);  // eliminate x -> poly in y
    if (res_x.is_zero() || res_y.is_zero())
        throw SharedComponentError("solve_system_2d: curves share a component");

    std::vector<RealRoot> xs = res_x.degree_in(0) == 0
                                   ? std::vector<RealRoot>{}
                                   : real_roots_of(to_upoly(res_x, 0));
    std::vector<RealRoot> ys = res_y.degree_in(1) == 0
                                   ? std::vector<RealRoot>{}
                                   : real_roots_of(to_upoly(res_y, 1));
    if (xs.empty() || ys.empty()) return {};

    const MultiPoly px = p.derivative(0), py = p.derivative(1);
    const MultiPoly qx = q.derivative(0), qy = q.derivative(1);
    const MultiPoly jac_det = px * qy - py * qx;

    std::vector<PlanarBox> out;

    // Exact decision once a coordinate is rational: substitute it, test the
    // other coordinate against the restricted system, then read the Jacobian
    // sign off the restricted determinant.
    const auto decide_exact = [&](const RealRoot& x, const RealRoot& y) -> std::optional<PlanarBox> {
        if (x.is_rational() && y.is_rational()) {
            std::vector<Rational> pt{x.value(), y.value()};
            if (!p.evaluate(pt).is_zero() || !q.evaluate(pt).is_zero()) return std::nullopt;
            PlanarBox sol{x, y, detail::point_iv(pt[0]), detail::point_iv(pt[1]),
                          true, jac_det.evaluate(pt).is_zero()};
            return sol;
        }
        const bool x_rat = x.is_rational();
        const Rational v = x_rat ? x.value() : y.value();
        const int sub_var = x_rat ? 0 : 1;
        const int free_var = x_rat ? 1 : 0;
        RealRoot other = x_rat ? y : x;
        const UPoly rp = to_upoly(p.substitute(sub_var, v), free_var);
        const UPoly rq = to_upoly(q.substitute(sub_var, v), free_var);
        if (other.sign_of(rp) != 0 || other.sign_of(rq) != 0) return std::nullopt;
        const UPoly rdet = to_upoly(jac_det.substitute(sub_var, v), free_var);
        PlanarBox sol;
        sol.x = x;
        sol.y = y;
        sol.box_x = x.box();
        sol.box_y = y.box();
        sol.certified = true;
        sol.singular = other.sign_of(rdet) == 0;
        return sol;
    };

    for (const auto& xr : xs) {
        for (const auto& yr : ys) {
            RealRoot x = xr, y = yr;

            // Fast interval rejection before anything heavier.
            bool rejected = false;
            if (!x.is_rational() || !y.is_rational()) {
                for (int k = 10; k <= 30 && !rejected; k += 10) {
                    const Rational w = Rational::pow2(-k);
                    x.refine_to(w);
                    y.refine_to(w);
                    std::vector<RatInterval> B{x.box(), y.box()};
                    if (!p.evaluate_box(B).contains_zero() ||
                        !q.evaluate_box(B).contains_zero())
                        rejected = true;
                }
            }
            if (rejected) continue;

            bool certified = false, excluded = false, decided = false;
            for (int round = 0; round < refine_budget; ++round) {
                if (x.is_rational() || y.is_rational()) {
                    if (auto sol = decide_exact(x, y)) out.push_back(std::move(*sol));
                    decided = true;
                    break;
                }
                detail::IVec2 B{x.box(), y.box()};
                const Rational mx = B.a.mid(), my = B.b.mid();
                const std::vector<Rational> m{mx, my};
                std::vector<RatInterval> Bv{B.a, B.b};

                if (!p.evaluate_box(Bv).contains_zero() ||
                    !q.evaluate_box(Bv).contains_zero()) {
                    excluded = true;
                    break;
                }

                // Exact midpoint Jacobian; skip the contraction when it is
                // singular and simply shrink the box instead.
                const Rational a = px.evaluate(m), b = py.evaluate(m);
                const Rational c = qx.evaluate(m), d = qy.evaluate(m);
                const Rational det = a * d - b * c;
                if (!det.is_zero()) {
                    // Y = inverse of the midpoint Jacobian.
                    const Rational inv = det.inv();
                    detail::IMat2 Y{detail::point_iv(d * inv), detail::point_iv(-b * inv),
                                    detail::point_iv(-c * inv), detail::point_iv(a * inv)};
                    detail::IMat2 J{px.evaluate_box(Bv), py.evaluate_box(Bv),
                                    qx.evaluate_box(Bv), qy.evaluate_box(Bv)};
                    // E = I - Y * J(B)
                    detail::IMat2 E{
                        detail::point_iv(Rational(1)) - (Y.m00 * J.m00 + Y.m01 * J.m10),
                        detail::point_iv(Rational(0)) - (Y.m00 * J.m01 + Y.m01 * J.m11),
                        detail::point_iv(Rational(0)) - (Y.m10 * J.m00 + Y.m11 * J.m10),
                        detail::point_iv(Rational(1)) - (Y.m10 * J.m01 + Y.m11 * J.m11)};
                    detail::IVec2 Bm{B.a - mx, B.b - my};
                    const detail::IVec2 YF = detail::mat_vec(
                        Y, {detail::point_iv(p.evaluate(m)), detail::point_iv(q.evaluate(m))});
                    const detail::IVec2 EB = detail::mat_vec(E, Bm);
                    const RatInterval Kx = (detail::point_iv(mx) - YF.a) + EB.a;
                    const RatInterval Ky = (detail::point_iv(my) - YF.b) + EB.b;

                    if (!Kx.intersects(B.a) || !Ky.intersects(B.b)) {
                        excluded = true;
                        break;
                    }
                    if (Kx.lo > B.a.lo && Kx.hi < B.a.hi && Ky.lo > B.b.lo &&
                        Ky.hi < B.b.hi) {
                        certified = true;
                        break;
                    }
                }
                x.refine_step();
                y.refine_step();
            }
            if (excluded || decided) continue;

            PlanarBox sol{x, y, x.box(), y.box(), certified, false};
            if (!certified) {
                // Certification failed: keep the candidate, and record
                // whether a rank-deficient Jacobian is consistent with the
                // box (the usual reason Krawczyk cannot contract).
                std::vector<RatInterval> Bv{x.box(), y.box()};
                sol.singular = jac_det.evaluate_box(Bv).contains_zero();
            }
            out.push_back(std::move(sol));
        }
    }
    return out;
}

}  // namespace illum
