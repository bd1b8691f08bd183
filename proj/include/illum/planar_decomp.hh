#pragma once

// Decomposition of a plane algebraic curve into x-delineable arcs, plus
// region labeling of every arc against a light source.
//
// The abscissa axis is cut at every critical value (vertical tangents,
// singularities, leading-coefficient collapses, and crossings with a set of
// auxiliary curves such as the polar and the tangent pencil).  Over each open
// interval between cuts the curve consists of finitely many disjoint smooth
// branches ordered by height, each of which carries a single region label;
// one certified sample point per branch decides it.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "illum/algebraic.hh"
#include "illum/gcd.hh"
#include "illum/geometry.hh"
#include "illum/interval.hh"
#include "illum/polynomial.hh"
#include "illum/resultant.hh"
#include "illum/upoly.hh"

namespace illum {

// One smooth branch of the curve over one open cell.
struct CurveArc {
    int cell = 0;    // index into CurveDecomposition::cells
    int branch = 0;  // height index within the fiber, from below
    Rational sample_x;
    SurfacePoint sample;  // exact point on the branch above sample_x
    RegionLabel label = RegionLabel::Boundary;
};

// One open interval between consecutive critical abscissas (clipped to the
// window), together with its sample fiber.
struct DecompCell {
    RatInterval span{Rational(0), Rational(0)};  // safe x-range inside the cell
    Rational sample_x;
    int fiber_size = 0;
};

struct CurveDecomposition {
    std::vector<RealRoot> criticals;      // ascending, within the window
    std::vector<DecompCell> cells;
    std::vector<CurveArc> arcs;
    std::vector<Rational> vertical_lines;  // x = c components (rational c)
};

// Cell structure of a curve without any labeling: the squarefree curve with
// vertical components split off, its in-window criticals, and the open
// x-spans between them.  Sufficient to plot the curve or to drive labeling.
struct CurveSkeleton {
    MultiPoly curve;  // squarefree, y-content removed; may be constant
    std::vector<RealRoot> criticals;
    std::vector<RatInterval> spans;
    std::vector<Rational> vertical_lines;
    RatInterval window{Rational(0), Rational(0)};
};

namespace detail {

// Univariate projection Res_y(p, q) as a polynomial in x, with any common
// factor of p and q divided out of q first (a shared component contributes
// no isolated crossings).
inline std::optional<UPoly> crossing_projection(const MultiPoly& p, MultiPoly q) {
    const MultiPoly g = multipoly_gcd(p, q);
    if (!g.is_constant()) {
        auto r = q.try_divide(g);
        if (!r) return std::nullopt;
        q = *r;
    }
    if (q.is_constant()) return std::nullopt;
    MultiPoly res = sylvester_resultant(p, q, 1);
    if (res.is_zero()) return std::nullopt;
    if (res.degree_in(0) == 0) return std::nullopt;
    return to_upoly(res, 0);
}

}  // namespace detail

// Fiber of the curve over a rational abscissa: the ascending real roots of
// gamma(x0, y) in y.
inline std::vector<RealRoot> fiber_roots(const MultiPoly& gamma, const Rational& x0) {
    const MultiPoly restricted = gamma.substitute(0, x0);
    if (restricted.is_zero())
        throw GeometryError("fiber_roots: vertical line inside the curve");
    if (restricted.degree_in(1) == 0) return {};
    return real_roots_of(to_upoly(restricted, 1));
}

// Critical abscissas and the open cells between them.  With no window the
// extent is fitted around all criticals (plus a margin), so every bounded
// feature of the curve is covered.
inline CurveSkeleton curve_skeleton(const MultiPoly& gamma_in,
                                    const std::vector<MultiPoly>& aux = {},
                                    std::optional<RatInterval> window_x = std::nullopt,
                                    int gap_refine_exp = 20) {
    const ContextPtr& ctx = gamma_in.context();
    if (ctx->arity() != 2) throw std::logic_error("curve_skeleton: expects a plane curve");
    if (gamma_in.is_zero() || gamma_in.degree() == 0)
        throw GeometryError("curve_skeleton: curve polynomial is constant");

    CurveSkeleton out;

    // Separate vertical-line components (the y-content) and reduce to a
    // squarefree curve: neither changes the point set to draw or label.
    MultiPoly gamma = squarefree_part_multi(gamma_in).canonical();
    const MultiPoly ycontent = content_in(gamma, 1);
    if (!ycontent.is_constant()) {
        const UPoly vert = to_upoly(ycontent, 0);
        for (const auto& r : real_roots_of(vert)) {
            if (!r.is_rational())
                throw GeometryError(
                    "curve_skeleton: vertical component at a non-rational abscissa");
            out.vertical_lines.push_back(r.value());
        }
        auto q = gamma.try_divide(ycontent);
        if (!q) throw GeometryError("curve_skeleton: content division failed");
        gamma = q->canonical();
    }
    out.curve = gamma;
    if (gamma.degree_in(1) == 0) {
        out.window = window_x.value_or(RatInterval(Rational(-4), Rational(4)));
        return out;  // only vertical lines
    }

    // Critical abscissas: discriminant locus, leading-coefficient locus,
    // and crossings with every auxiliary curve.
    std::vector<RealRoot> crits;
    const auto add_roots = [&crits](const UPoly& u) {
        if (u.is_zero() || u.degree() == 0) return;
        for (auto& r : real_roots_of(u)) crits.push_back(std::move(r));
    };
    {
        const MultiPoly gy = gamma.derivative(1);
        const MultiPoly disc = sylvester_resultant(gamma, gy, 1);
        if (disc.is_zero())
            throw GeometryError("curve_skeleton: discriminant vanishes identically");
        if (disc.degree_in(0) > 0) add_roots(to_upoly(disc, 0));

        const auto lead = gamma.coeffs_in(1);
        const MultiPoly& lc = lead.back();
        if (lc.degree_in(0) > 0) add_roots(to_upoly(lc, 0));

        for (const auto& a : aux) {
            if (a.is_zero() || a.is_constant()) continue;
            if (auto proj = detail::crossing_projection(gamma, a)) add_roots(*proj);
        }
        for (const auto& v : out.vertical_lines) crits.push_back(RealRoot::rational(v));
    }
    crits = merge_roots(std::move(crits));

    if (!window_x) {
        // Fit the window around every critical abscissa.
        Rational lo(-4), hi(4);
        if (!crits.empty()) {
            lo = crits.front().box().lo;
            hi = crits.back().box().hi;
            const Rational pad = Rational::max((hi - lo) / Rational(4), Rational(2));
            lo -= pad;
            hi += pad;
        }
        window_x = RatInterval(lo, hi);
    }
    out.window = *window_x;

    // Keep criticals inside the window and pin down disjoint enclosures.
    const Rational gap_w = Rational::pow2(-gap_refine_exp);
    std::vector<RealRoot> inside;
    const RealRoot wlo = RealRoot::rational(window_x->lo), whi = RealRoot::rational(window_x->hi);
    for (auto& c : crits) {
        if (c.compare(wlo) < 0 || c.compare(whi) > 0) continue;
        c.refine_to(gap_w);
        inside.push_back(std::move(c));
    }
    for (size_t i = 0; i + 1 < inside.size(); ++i) {
        // Enclosures of consecutive criticals must not overlap.
        while (inside[i].box().hi > inside[i + 1].box().lo) {
            inside[i].refine_step();
            inside[i + 1].refine_step();
        }
    }
    out.criticals = std::move(inside);

    // One open span per gap, including the window margins.
    for (size_t i = 0; i <= out.criticals.size(); ++i) {
        const Rational lo = i == 0 ? window_x->lo : out.criticals[i - 1].box().hi;
        const Rational hi = i == out.criticals.size() ? window_x->hi : out.criticals[i].box().lo;
        if (!(lo < hi)) continue;
        out.spans.emplace_back(lo, hi);
    }
    return out;
}

// Cut the window into delineable cells and label one sample point per branch.
//
// `aux` lists extra curves whose crossings must also become cell boundaries
// (pass the polar and the tangent pencil so labels are constant on arcs).
inline CurveDecomposition decompose_curve(const MultiPoly& gamma_in, const Classifier& cls,
                                          const std::vector<MultiPoly>& aux,
                                          std::optional<RatInterval> window_x = std::nullopt,
                                          int gap_refine_exp = 20) {
    CurveSkeleton sk = curve_skeleton(gamma_in, aux, window_x, gap_refine_exp);

    CurveDecomposition out;
    out.criticals = std::move(sk.criticals);
    out.vertical_lines = std::move(sk.vertical_lines);
    if (sk.curve.degree_in(1) == 0) return out;  // only vertical lines

    for (const auto& span : sk.spans) {
        DecompCell cell;
        cell.span = span;
        cell.sample_x = simplest_in_open(span.lo, span.hi);

        auto fiber = fiber_roots(sk.curve, cell.sample_x);
        cell.fiber_size = static_cast<int>(fiber.size());
        const int cell_idx = static_cast<int>(out.cells.size());
        for (size_t j = 0; j < fiber.size(); ++j) {
            CurveArc arc;
            arc.cell = cell_idx;
            arc.branch = static_cast<int>(j);
            arc.sample_x = cell.sample_x;
            arc.sample = SurfacePoint::on_ray(Point::xy(cell.sample_x, Rational(0)),
                                              Point::xy(cell.sample_x, Rational(1)),
                                              fiber[j]);
            arc.label = cls.classify(arc.sample);
            out.arcs.push_back(std::move(arc));
        }
        out.cells.push_back(std::move(cell));
    }
    return out;
}

}  // namespace illum
