#pragma once

// Polar geometry of an implicit surface with respect to a point light:
// first polars, tangent cones and pencils, exact shadow rays, and the
// four-way region classification used by the renderer.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "illum/algebraic.hh"
#include "illum/context.hh"
#include "illum/gcd.hh"
#include "illum/groebner.hh"
#include "illum/interval.hh"
#include "illum/point.hh"
#include "illum/polynomial.hh"
#include "illum/resultant.hh"
#include "illum/solve2d.hh"
#include "illum/upoly.hh"

namespace illum {

// How a visible surface point relates to the light.
enum class RegionLabel { Illuminated, SelfShaded, PolarSeparated, Boundary };

inline const char* label_name(RegionLabel l) {
    switch (l) {
        case RegionLabel::Illuminated: return "Illuminated";
        case RegionLabel::SelfShaded: return "SelfShaded";
        case RegionLabel::PolarSeparated: return "PolarSeparated";
        case RegionLabel::Boundary: return "Boundary";
    }
    return "?";
}

enum class ConeBackend { Auto, Groebner, Resultant };

struct GeometryOptions {
    // Shadow rays ignore the final 2^-shadow_eps_exp fraction of the segment
    // before the surface point itself (which always lies on the surface).
    int shadow_eps_exp = 40;
    // Interval subdivision budget for certifying one shadow ray.
    int shadow_budget = 1024;
    ConeBackend cone_backend = ConeBackend::Auto;
    BuchbergerOptions gb{};
};

class GeometryError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// The light position makes the polar construction collapse identically.
class DegeneratePolarError : public GeometryError {
  public:
    using GeometryError::GeometryError;
};

// ---------------------------------------------------------------------------
// First polar
// ---------------------------------------------------------------------------

// Polar of sigma with respect to L: homogenize, contract the gradient with
// the homogenized light, then return to affine coordinates.  The result is
// normalized to coprime integer coefficients with its sign preserved, so
// sign comparisons against sigma remain meaningful.
inline MultiPoly first_polar(const MultiPoly& sigma, const Point& L) {
    const ContextPtr& ctx = sigma.context();
    if (ctx->arity() != L.dim())
        throw std::logic_error("first_polar: light dimension mismatch");
    if (sigma.is_zero() || sigma.degree() == 0)
        throw GeometryError("first_polar: surface polynomial is constant");
    const ContextPtr hctx = Context::homogenized(ctx);
    const MultiPoly hs = sigma.homogenize(hctx);
    MultiPoly acc = MultiPoly::zero(hctx);
    for (int i = 0; i < ctx->arity(); ++i) acc += hs.derivative(i).scaled(L[i]);
    acc += hs.derivative(ctx->arity());  // homogenizing coordinate has weight 1
    const MultiPoly polar = acc.dehomogenize(ctx).primitive_sign_preserving();
    if (polar.is_zero())
        throw DegeneratePolarError("first_polar: polar vanishes identically for light " +
                                   L.str());
    return polar;
}

// Side of the surface the light sits on: the sign of sigma at L.
inline int polar_side(const MultiPoly& sigma, const Point& L) {
    return sigma.evaluate(L.c).sign();
}

// ---------------------------------------------------------------------------
// Surface points
// ---------------------------------------------------------------------------

// A point of evaluation on a curve or surface: either exact rational
// coordinates, or the exact algebraic point origin + t*(target - origin)
// for an isolated parameter root t.
class SurfacePoint {
  public:
    SurfacePoint() = default;  // empty rational placeholder
    static SurfacePoint at(Point p) {
        SurfacePoint s;
        s.origin_ = std::move(p);
        s.rational_ = true;
        return s;
    }
    static SurfacePoint on_ray(Point origin, Point target, RealRoot t) {
        if (origin.dim() != target.dim())
            throw std::logic_error("SurfacePoint: ray dimension mismatch");
        SurfacePoint s;
        if (t.is_rational()) {
            const Rational& v = t.value();
            s.origin_ = origin + (target - origin).scaled(v);
            s.rational_ = true;
            return s;
        }
        s.origin_ = std::move(origin);
        s.target_ = std::move(target);
        s.t_ = std::move(t);
        s.rational_ = false;
        return s;
    }

    bool is_rational() const { return rational_; }
    int dim() const { return origin_.dim(); }
    const Point& rational_point() const {
        if (!rational_) throw std::logic_error("SurfacePoint: not rational");
        return origin_;
    }
    const Point& ray_origin() const { return origin_; }
    const Point& ray_target() const { return target_; }
    const RealRoot& ray_t() const { return t_; }

    // Exact sign of p at this point.
    int sign_of(const MultiPoly& p) const {
        if (rational_) return p.evaluate(origin_.c).sign();
        return t_.sign_of(restrict_to_line(p, origin_, target_));
    }

    // Coordinate enclosure with every side at most `width` wide.
    std::vector<RatInterval> box(const Rational& width) const {
        std::vector<RatInterval> out;
        if (rational_) {
            for (const auto& v : origin_.c) out.emplace_back(v, v);
            return out;
        }
        Rational span(0);
        for (int i = 0; i < dim(); ++i)
            span = Rational::max(span, (target_[i] - origin_[i]).abs());
        if (span.is_zero()) span = Rational(1);
        t_.refine_to(width / span);
        const RatInterval tb = t_.box();
        for (int i = 0; i < dim(); ++i) {
            const RatInterval d = tb * (target_[i] - origin_[i]);
            out.emplace_back(origin_[i] + d.lo, origin_[i] + d.hi);
        }
        return out;
    }

    // Midpoint of a small enclosure; handy for plotting.
    Point approx(const Rational& width) const {
        if (rational_) return origin_;
        auto b = box(width);
        Point p;
        for (const auto& iv : b) p.c.push_back(iv.mid());
        return p;
    }

  private:
    Point origin_, target_;
    RealRoot t_;
    bool rational_ = true;
};

// ---------------------------------------------------------------------------
// Shadow rays
// ---------------------------------------------------------------------------

enum class ShadowOutcome { Unblocked, Blocked, Grazing };

// Does the open light segment from L to X meet the blocker surface?  X is
// expected to lie on a surface itself, so a blocker root at the far end of
// the segment is discounted.  Rational points are decided exactly by a Sturm
// count; algebraic points are decided by certified interval subdivision and
// fall back to Grazing when the budget runs out.
inline ShadowOutcome shadow_test(const MultiPoly& blockers, const Point& L,
                                 const SurfacePoint& X, const GeometryOptions& opt = {}) {
    if (X.is_rational()) {
        const UPoly u = restrict_to_line(blockers, L, X.rational_point());
        if (u.is_zero()) return ShadowOutcome::Grazing;  // segment inside the surface
        SturmChain ch(u);
        long k = ch.count_halfopen(Rational(0), Rational(1));
        if (ch.sign_at(Rational(1)) == 0) --k;  // the surface point itself
        return k > 0 ? ShadowOutcome::Blocked : ShadowOutcome::Unblocked;
    }

    // X = A + t*(B - A): restrict the blockers to the moving segment,
    // h(s, t) = blockers(L + s*(A + t*(B - A) - L)), and certify the absence
    // or presence of a root s in (0, 1 - eps) uniformly over the t-box.
    const Point& A = X.ray_origin();
    const Point& B = X.ray_target();
    const ContextPtr cst = Context::of({"s", "t"});
    const MultiPoly sv = MultiPoly::variable(cst, 0), tv = MultiPoly::variable(cst, 1);
    std::vector<MultiPoly> args;
    for (int i = 0; i < X.dim(); ++i)
        args.push_back(MultiPoly::constant(cst, L[i]) +
                       sv.scaled(A[i] - L[i]) + (sv * tv).scaled(B[i] - A[i]));
    MultiPoly h = blockers.compose(args, cst);
    if (h.is_zero()) return ShadowOutcome::Grazing;
    {
        // A light sitting on a blocker makes s divide h; that root is the
        // light itself, not an occluder, so remove it exactly.
        Monomial mc = h.monomial_content();
        if (mc.exp(0) > 0) {
            Monomial strip = Monomial::var(0, mc.exp(0));
            h = h.divided_by_monomial(strip);
        }
    }
    const MultiPoly hs = h.derivative(0), ht = h.derivative(1);

    const Rational eps = Rational::pow2(-opt.shadow_eps_exp);
    const Rational s_hi = Rational(1) - eps;
    const RealRoot& t = X.ray_t();

    // When X itself lies on the blocker locus (the usual case: the surface
    // carrying X is one of the blockers), h(1, t*) = 0 exactly, and interval
    // coverage near s = 1 would have to fight that corner zero at arbitrary
    // depth.  Detect the situation once, exactly.
    const bool target_on_blockers = t.sign_of(to_upoly(h.substitute(0, Rational(1)), 1)) == 0;

    for (int round = 0; round < 6; ++round) {
        t.refine_to(Rational::pow2(-(20 + 10 * round)));
        const RatInterval tb = t.box();
        const Rational tm = tb.mid();

        // Tight range enclosure: naive evaluation intersected with the
        // first-order mean-value form around the box center (the naive form
        // alone loses far too much to term-wise dependency).
        const auto hval = [&](const RatInterval& seg) -> RatInterval {
            const RatInterval naive = h.evaluate_box({seg, tb});
            if (naive.sign() != 0) return naive;
            const Rational sm = seg.mid();
            const Rational hm = h.evaluate({sm, tm});
            const RatInterval mv = RatInterval(hm, hm) +
                                   hs.evaluate_box({seg, tb}) * (seg - sm) +
                                   ht.evaluate_box({seg, tb}) * (tb - tm);
            return RatInterval(Rational::max(naive.lo, mv.lo), Rational::min(naive.hi, mv.hi));
        };

        // Pass 1: try to certify "root present" with a sign-change bracket at
        // rational s values strictly inside (0, 1-eps).  This is cheap (a few
        // dozen point evaluations) and settles blocked points immediately, so
        // it runs before the far more expensive coverage pass.
        {
            const int n = 64;
            int prev_sign = 0;
            for (int i = 1; i < n; ++i) {
                const Rational si = s_hi * Rational(i, n);
                const int sgn = hval(RatInterval(si, si)).sign();
                if (sgn == 0) { prev_sign = 0; continue; }
                if (prev_sign != 0 && sgn != prev_sign) return ShadowOutcome::Blocked;
                prev_sign = sgn;
            }
        }

        // Tail certificate: if h_s keeps a fixed sign on [1-w, 1] x tb, then
        // h(., t*) is strictly monotone there; with h(1, t*) = 0 its only
        // zero on the tail is s = 1 (the target), so no occluder root lives
        // in [1-w, 1) and the coverage pass may stop at 1 - w.
        Rational cover_hi = s_hi;
        if (target_on_blockers) {
            for (int e = 4; e <= 40; e += e < 10 ? 6 : 10) {
                const Rational w = Rational::pow2(-e);
                const RatInterval tail(Rational(1) - w, Rational(1));
                if (hs.evaluate_box({tail, tb}).sign() != 0) {
                    cover_hi = Rational(1) - w;
                    break;
                }
            }
        }

        // Pass 2: try to certify "no root" by covering (0, cover_hi] with
        // sign-definite sub-segments.
        std::vector<RatInterval> stack{RatInterval(Rational(0), cover_hi)};
        bool undecided = false;
        int splits = 0;
        while (!stack.empty()) {
            RatInterval seg = stack.back();
            stack.pop_back();
            if (hval(seg).sign() != 0) continue;  // bounded away from zero
            if (splits >= opt.shadow_budget) {
                undecided = true;
                stack.clear();
                break;
            }
            ++splits;
            // Push the right half first so the left half is processed next.
            // Segments far from s = 1 certify cheaply; the expensive dive near
            // the target point then gets whatever budget remains.
            const Rational m = seg.mid();
            stack.emplace_back(m, seg.hi);
            stack.emplace_back(seg.lo, m);
        }
        if (!undecided) return ShadowOutcome::Unblocked;
    }
    return ShadowOutcome::Grazing;
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

// Precomputed data for labeling many points of one surface against one light.
struct Classifier {
    MultiPoly sigma;     // surface carrying the point
    MultiPoly polar;     // first polar of sigma
    MultiPoly blockers;  // occluders for the shadow ray (>= sigma)
    Point light;
    int side;  // sign of sigma at the light
    GeometryOptions opt;

    Classifier(MultiPoly sigma_, MultiPoly blockers_, Point light_, GeometryOptions opt_ = {})
        : sigma(std::move(sigma_)),
          polar(first_polar(sigma, light_)),
          blockers(std::move(blockers_)),
          light(std::move(light_)),
          side(polar_side(sigma, light)),
          opt(std::move(opt_)) {}

    RegionLabel classify(const SurfacePoint& X) const {
        const int sl = X.sign_of(polar);
        if (sl == 0) return RegionLabel::Boundary;
        // When the light is off the surface, a polar sign opposite to the
        // light's side means the tangent plane at X separates X from L.
        if (side != 0 && sl == -side) return RegionLabel::PolarSeparated;
        switch (shadow_test(blockers, light, X, opt)) {
            case ShadowOutcome::Unblocked: return RegionLabel::Illuminated;
            case ShadowOutcome::Blocked: return RegionLabel::SelfShaded;
            case ShadowOutcome::Grazing: return RegionLabel::Boundary;
        }
        return RegionLabel::Boundary;
    }
};

inline RegionLabel classify_point(const MultiPoly& sigma, const Point& L,
                                  const SurfacePoint& X, const GeometryOptions& opt = {}) {
    return Classifier(sigma, sigma, L, opt).classify(X);
}

// ---------------------------------------------------------------------------
// Tangent cone
// ---------------------------------------------------------------------------

namespace detail {

// sigma(L + u) in the same context (the variables become offsets from L).
inline MultiPoly shift_to(const MultiPoly& sigma, const Point& L) {
    const ContextPtr& ctx = sigma.context();
    std::vector<MultiPoly> args;
    for (int i = 0; i < ctx->arity(); ++i)
        args.push_back(MultiPoly::variable(ctx, i) + MultiPoly::constant(ctx, L[i]));
    return sigma.compose(args, ctx);
}

inline MultiPoly shift_back(const MultiPoly& p, const Point& L) {
    const ContextPtr& ctx = p.context();
    std::vector<MultiPoly> args;
    for (int i = 0; i < ctx->arity(); ++i)
        args.push_back(MultiPoly::variable(ctx, i) - MultiPoly::constant(ctx, L[i]));
    return p.compose(args, ctx);
}

inline MultiPoly cone_resultant(const MultiPoly& sigma, const MultiPoly& polar,
                                const Point& L) {
    const ContextPtr& ctx = sigma.context();
    const int n = ctx->arity();
    const int d = sigma.degree();
    const MultiPoly sh = shift_to(sigma, L);

    // Along the line L + s*u the surface reads G(s) = sum_k H_k(u) s^k with
    // H_k the homogeneous parts of the shifted surface.  Work with the
    // reversed polynomial F(b) = b^d G(1/b): its leading b-coefficient is
    // the constant sigma(L), which keeps the Sylvester elimination stable.
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::string(ctx->name(i)));
    names.push_back("b");
    const ContextPtr cb = Context::of(names);
    std::vector<MultiPoly> lift;
    for (int i = 0; i < n; ++i) lift.push_back(MultiPoly::variable(cb, i));
    MultiPoly F = MultiPoly::zero(cb);
    const MultiPoly bv = MultiPoly::variable(cb, n);
    for (int k = 0; k <= d; ++k)
        F += sh.homogeneous_part(k).compose(lift, cb) * bv.pow(static_cast<unsigned long>(d - k));
    const MultiPoly Fb = F.derivative(n);
    // A double root of G in some direction u is a double root of F there.
    MultiPoly R = sylvester_resultant(F, Fb, n).without_var(n, ctx);
    if (R.is_zero())
        throw GeometryError("tangent_cone: discriminant vanishes identically "
                            "(surface has a repeated component)");

    // Scrub structural factors that do not bound the visual contour:
    // coordinate powers, the shared top form of surface and polar (directions
    // toward infinity), repeated factors, and finally perfect squares.
    R = R.divided_by_monomial(R.monomial_content());
    MultiPoly J = squarefree_part_multi(multipoly_gcd(sigma.top_part(), polar.top_part()));
    if (!J.is_constant()) {
        for (;;) {
            const MultiPoly g = multipoly_gcd(R, J);
            if (g.is_constant()) break;
            auto q = R.try_divide(g);
            if (!q) break;
            R = *q;
        }
    }
    for (;;) {
        auto s = try_sqrt(R.canonical());
        if (!s) break;
        R = *s;
    }
    R = squarefree_part_multi(R);
    return shift_back(R, L).canonical();
}

inline MultiPoly cone_groebner(const MultiPoly& sigma, const MultiPoly& polar,
                               const Point& L, const BuchbergerOptions& gb) {
    const ContextPtr& ctx = sigma.context();
    const int n = ctx->arity();
    const ContextPtr inc = n == 3 ? Context::cone_space() : Context::cone_plane();

    std::vector<MultiPoly> q_args;
    for (int i = 0; i < n; ++i) q_args.push_back(MultiPoly::variable(inc, n + i));
    const MultiPoly av = MultiPoly::variable(inc, 2 * n);

    std::vector<MultiPoly> gens;
    gens.push_back(sigma.compose(q_args, inc));  // contact point on the surface
    gens.push_back(polar.compose(q_args, inc));  // ... and on the polar
    for (int i = 0; i < n; ++i) {
        // x_i = a*L_i + (1-a)*q_i: the sample point sits on the line L-Q.
        const MultiPoly xi = MultiPoly::variable(inc, i);
        gens.push_back(av.scaled(L[i]) + q_args[i] - av * q_args[i] - xi);
    }

    std::vector<std::string> drop;
    for (int i = 0; i < n; ++i) drop.push_back(std::string(inc->name(n + i)));
    drop.push_back(std::string(inc->name(2 * n)));

    std::vector<MultiPoly> basis = eliminate(gens, drop, gb);
    if (basis.empty())
        throw GeometryError("tangent_cone: elimination ideal is trivial (no proper cone)");
    const MultiPoly* best = nullptr;
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        if (g.is_constant())
            throw GeometryError("tangent_cone: elimination ideal is the unit ideal");
        if (!best || g.degree() < best->degree() ||
            (g.degree() == best->degree() && g.term_count() < best->term_count()))
            best = &g;
    }
    if (!best) throw GeometryError("tangent_cone: elimination ideal is trivial (no proper cone)");
    return best->canonical();
}

}  // namespace detail

// Polynomial cutting out the cone of tangent lines through L (the union of
// lines meeting the surface doubly at a contact point visible from L).
// `backend_used`, when given, receives the backend that produced the result.
inline MultiPoly tangent_cone(const MultiPoly& sigma, const Point& L,
                              const GeometryOptions& opt = {},
                              ConeBackend* backend_used = nullptr) {
    const ContextPtr& ctx = sigma.context();
    if (ctx->arity() != L.dim())
        throw std::logic_error("tangent_cone: light dimension mismatch");
    const MultiPoly polar = first_polar(sigma, L);
    const auto record = [&](ConeBackend b) {
        if (backend_used) *backend_used = b;
    };
    switch (opt.cone_backend) {
        case ConeBackend::Resultant:
            record(ConeBackend::Resultant);
            return detail::cone_resultant(sigma, polar, L);
        case ConeBackend::Groebner:
            record(ConeBackend::Groebner);
            return detail::cone_groebner(sigma, polar, L, opt.gb);
        case ConeBackend::Auto:
            try {
                MultiPoly theta = detail::cone_groebner(sigma, polar, L, opt.gb);
                record(ConeBackend::Groebner);
                return theta;
            } catch (const ResourceExhausted&) {
                record(ConeBackend::Resultant);
                return detail::cone_resultant(sigma, polar, L);
            }
    }
    throw std::logic_error("tangent_cone: bad backend");
}

// ---------------------------------------------------------------------------
// Tangent pencil (plane case)
// ---------------------------------------------------------------------------

struct TangentPencil {
    MultiPoly pencil;               // vanishes on the union of tangent lines through L
    std::vector<PlanarBox> points;  // certified contact points (and curve singularities)
};

inline TangentPencil tangent_pencil_2d(const MultiPoly& gamma, const Point& L,
                                       const GeometryOptions& opt = {},
                                       ConeBackend* backend_used = nullptr) {
    if (gamma.context()->arity() != 2)
        throw std::logic_error("tangent_pencil_2d: expects a plane curve");
    const MultiPoly polar = first_polar(gamma, L);
    TangentPencil out{tangent_cone(gamma, L, opt, backend_used), solve_system_2d(gamma, polar)};
    return out;
}

}  // namespace illum
