#ifndef ILLUM_RENDER_HH
#define ILLUM_RENDER_HH

// Renderers and reports.
//
//   render_2d  — SVG plot of every curve arc colored by region label, plus
//                the polar curve, the tangent lines through the light, and
//                the light itself.
//   render_3d  — ray-cast PPM (P6) image: exact first hit per pixel, exact
//                label for surface hits, exact segment test for receiver
//                plane shadows.
//   build_report — line-oriented `key = value` summary carrying every
//                computed polynomial in canonical text form.
//
// Everything emitted is byte-deterministic for a fixed scene and config:
// rationals are printed by exact decimal rounding, work is scheduled so
// results are assembled in a thread-count-independent order, and no
// iteration touches an unordered container.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "illum/planar_decomp.hh"
#include "illum/scene.hh"
#include "illum/threads.hh"

namespace illum {

struct RgbColor {
    std::uint8_t r = 0, g = 0, b = 0;

    std::string hex() const {
        static const char* digits = "0123456789ABCDEF";
        std::string s = "#";
        for (std::uint8_t v : {r, g, b}) {
            s += digits[v >> 4];
            s += digits[v & 15];
        }
        return s;
    }
};

struct RenderConfig {
    int width = 480, height = 360;
    int samples_per_arc = 33;
    int threads = 0;  // 0: ILLUM_THREADS env var, else hardware concurrency
    GeometryOptions geometry{};

    // The fixed label catalog.
    RgbColor illuminated{0x00, 0x00, 0xFF};
    RgbColor self_shaded{0xFF, 0x00, 0x00};
    RgbColor polar_separated{0x00, 0x00, 0x00};
    RgbColor boundary{0xFF, 0x00, 0xFF};
    RgbColor polar_curve{0x00, 0xFF, 0x00};
    RgbColor pencil{0x8B, 0x45, 0x13};
    RgbColor light{0xFF, 0xA5, 0x00};
    RgbColor background{0xFF, 0xFF, 0xFF};
    RgbColor plane_lit{0xC8, 0xC8, 0xC8};
    RgbColor plane_shadow{0x50, 0x50, 0x50};

    const RgbColor& label_color(RegionLabel l) const {
        switch (l) {
            case RegionLabel::Illuminated: return illuminated;
            case RegionLabel::SelfShaded: return self_shaded;
            case RegionLabel::PolarSeparated: return polar_separated;
            case RegionLabel::Boundary: return boundary;
        }
        return boundary;
    }

    void validate() const {
        if (width < 16 || height < 16)
            throw SceneError("render size must be at least 16x16 pixels");
        if (samples_per_arc < 2) throw SceneError("samples-per-arc must be at least 2");
    }
};

namespace detail {

// ---------------------------------------------------------------------------
// Shared 2-D helpers
// ---------------------------------------------------------------------------

struct WorldBox {
    Rational xlo, ylo, xhi, yhi;
    Rational width() const { return xhi - xlo; }
    Rational height() const { return yhi - ylo; }
};

inline std::string dec(const Rational& v) { return v.decimal(5); }

// World coordinates with the y axis flipped for SVG.
inline std::string svg_xy(const Rational& x, const Rational& y) {
    return dec(x) + "," + dec(-y);
}

// Intersection of the line through A and B with the box, as two endpoints;
// nullopt when the line misses the box.
inline std::optional<std::pair<Point, Point>> clip_line(const Point& A, const Point& B,
                                                        const WorldBox& box) {
    const Point d = B - A;
    if (d.is_zero()) return std::nullopt;
    // Liang-Barsky in exact arithmetic over the whole line (t unbounded).
    bool bounded = false;
    Rational tlo, thi;
    const Rational los[2] = {box.xlo, box.ylo}, his[2] = {box.xhi, box.yhi};
    for (int k = 0; k < 2; ++k) {
        if (d[k].sign() == 0) {
            if (A[k] < los[k] || A[k] > his[k]) return std::nullopt;
            continue;
        }
        Rational t0 = (los[k] - A[k]) / d[k], t1 = (his[k] - A[k]) / d[k];
        if (t0 > t1) std::swap(t0, t1);
        if (!bounded) {
            tlo = t0;
            thi = t1;
            bounded = true;
        } else {
            tlo = Rational::max(tlo, t0);
            thi = Rational::min(thi, t1);
        }
    }
    if (!bounded || !(tlo < thi)) return std::nullopt;
    return std::make_pair(A + d.scaled(tlo), A + d.scaled(thi));
}

// Sample abscissas strictly inside a span.
inline std::vector<Rational> span_samples(const RatInterval& span, int count) {
    std::vector<Rational> xs;
    const Rational w = span.hi - span.lo;
    for (int i = 0; i < count; ++i)
        xs.push_back(span.lo + w * Rational(2 * i + 1, 2 * count));
    return xs;
}

// Polylines of every branch of a (label-free) curve skeleton over its cells.
inline std::vector<std::vector<std::pair<Rational, Rational>>> sample_branches(
    const CurveSkeleton& sk, int samples, const Rational& y_resolution) {
    std::vector<std::vector<std::pair<Rational, Rational>>> lines;
    if (sk.curve.degree_in(1) == 0) return lines;
    for (const auto& span : sk.spans) {
        std::vector<std::vector<std::pair<Rational, Rational>>> per_branch;
        for (const Rational& x : span_samples(span, samples)) {
            auto fiber = fiber_roots(sk.curve, x);
            if (per_branch.empty()) per_branch.resize(fiber.size());
            const size_t n = std::min(per_branch.size(), fiber.size());
            for (size_t j = 0; j < n; ++j) {
                fiber[j].refine_to(y_resolution);
                per_branch[j].emplace_back(x, fiber[j].box().mid());
            }
        }
        for (auto& line : per_branch)
            if (line.size() >= 2) lines.push_back(std::move(line));
    }
    return lines;
}

struct Job2D {
    SurfaceJob surface;
    Classifier classifier;
    TangentPencil pencil;
    CurveDecomposition decomp;

    Job2D(SurfaceJob s, const Point& L, const GeometryOptions& opt,
          const std::optional<RatInterval>& window)
        : surface(std::move(s)),
          classifier(surface.sigma, surface.blockers, L, opt),
          pencil(tangent_pencil_2d(surface.sigma, L, opt)),
          decomp(decompose_curve(surface.sigma, classifier,
                                 {classifier.polar, pencil.pencil}, window)) {}
};

inline std::vector<Job2D> build_jobs_2d(const Scene& sc, const GeometryOptions& opt) {
    std::optional<RatInterval> window;
    if (sc.bbox) window = RatInterval((*sc.bbox)[0], (*sc.bbox)[2]);
    std::vector<Job2D> jobs;
    for (auto& job : order_surfaces(sc).jobs)
        jobs.emplace_back(std::move(job), sc.light, opt, window);
    return jobs;
}

// View box: the bbox directive when present, otherwise a fit around the
// decomposition (cell spans for x, branch samples and criticals for y) and
// the light.
inline WorldBox fit_view(const Scene& sc, const std::vector<Job2D>& jobs) {
    if (sc.bbox) {
        const auto& b = *sc.bbox;
        return WorldBox{b[0], b[1], b[2], b[3]};
    }
    bool any_x = false, any_y = false;
    WorldBox w{Rational(0), Rational(0), Rational(0), Rational(0)};
    auto include_x = [&](const Rational& x) {
        if (!any_x) {
            w.xlo = w.xhi = x;
            any_x = true;
            return;
        }
        w.xlo = Rational::min(w.xlo, x);
        w.xhi = Rational::max(w.xhi, x);
    };
    auto include_y = [&](const Rational& y) {
        if (!any_y) {
            w.ylo = w.yhi = y;
            any_y = true;
            return;
        }
        w.ylo = Rational::min(w.ylo, y);
        w.yhi = Rational::max(w.yhi, y);
    };
    const Rational coarse = Rational::pow2(-8);
    for (const auto& job : jobs) {
        for (const auto& cell : job.decomp.cells) {
            include_x(cell.span.lo);
            include_x(cell.span.hi);
        }
        for (const auto& arc : job.decomp.arcs) {
            const RealRoot& y = arc.sample.ray_t();
            y.refine_to(coarse);
            include_y(y.box().mid());
        }
        for (const auto& v : job.decomp.vertical_lines) include_x(v);
    }
    include_x(sc.light[0]);
    include_y(sc.light[1]);
    if (!any_x || !any_y) return WorldBox{Rational(-4), Rational(-4), Rational(4), Rational(4)};
    const Rational padx = Rational::max(w.width() / Rational(8), Rational(1));
    const Rational pady = Rational::max(w.height() / Rational(8), Rational(1));
    return WorldBox{w.xlo - padx, w.ylo - pady, w.xhi + padx, w.yhi + pady};
}

} // namespace detail

// ---------------------------------------------------------------------------
// 2-D SVG renderer
// ---------------------------------------------------------------------------

inline std::string render_2d(const Scene& sc, const RenderConfig& cfg = {}) {
    cfg.validate();
    if (sc.dimension != 2) throw SceneError("render_2d requires a 2-D scene");

    std::vector<detail::Job2D> jobs = detail::build_jobs_2d(sc, cfg.geometry);
    const detail::WorldBox view = detail::fit_view(sc, jobs);
    const Rational half_pixel_y = view.height() / Rational(2 * cfg.height);
    const Rational stroke = view.width() * Rational(3, 2 * cfg.width);
    const Rational dot_r = view.width() * Rational(4, cfg.width);

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(cfg.width) + "\" height=\"" + std::to_string(cfg.height) +
           "\" viewBox=\"" + detail::dec(view.xlo) + " " + detail::dec(-view.yhi) + " " +
           detail::dec(view.width()) + " " + detail::dec(view.height()) + "\">\n";
    svg += "<rect x=\"" + detail::dec(view.xlo) + "\" y=\"" + detail::dec(-view.yhi) +
           "\" width=\"" + detail::dec(view.width()) + "\" height=\"" +
           detail::dec(view.height()) + "\" fill=\"" + cfg.background.hex() + "\"/>\n";

    auto polyline = [&](const std::vector<std::pair<Rational, Rational>>& pts,
                        const RgbColor& color, const Rational& width) {
        if (pts.size() < 2) return;
        svg += "<polyline fill=\"none\" stroke=\"" + color.hex() + "\" stroke-width=\"" +
               detail::dec(width) + "\" stroke-linecap=\"round\" points=\"";
        for (size_t i = 0; i < pts.size(); ++i) {
            if (i) svg += " ";
            svg += detail::svg_xy(pts[i].first, pts[i].second);
        }
        svg += "\"/>\n";
    };
    auto line = [&](const Point& a, const Point& b, const RgbColor& color,
                    const Rational& width) {
        svg += "<line stroke=\"" + color.hex() + "\" stroke-width=\"" + detail::dec(width) +
               "\" x1=\"" + detail::dec(a[0]) + "\" y1=\"" + detail::dec(-a[1]) + "\" x2=\"" +
               detail::dec(b[0]) + "\" y2=\"" + detail::dec(-b[1]) + "\"/>\n";
    };

    // Polar curves (green, thin) under everything else.
    const RatInterval wx(view.xlo, view.xhi);
    for (const auto& job : jobs) {
        CurveSkeleton psk = curve_skeleton(job.classifier.polar, {}, wx);
        for (const auto& pl :
             detail::sample_branches(psk, cfg.samples_per_arc, half_pixel_y))
            polyline(pl, cfg.polar_curve, stroke);
        for (const auto& vx : psk.vertical_lines)
            if (view.xlo <= vx && vx <= view.xhi)
                line(Point::xy(vx, view.ylo), Point::xy(vx, view.yhi), cfg.polar_curve,
                     stroke);
    }

    // Tangent lines through the light (brown).
    for (const auto& job : jobs) {
        for (auto pt : job.pencil.points) {
            pt.x.refine_to(Rational::pow2(-12));
            pt.y.refine_to(Rational::pow2(-12));
            const Point P = Point::xy(pt.x.box().mid(), pt.y.box().mid());
            if (P == sc.light) continue;
            if (auto seg = detail::clip_line(sc.light, P, view))
                line(seg->first, seg->second, cfg.pencil, stroke);
        }
    }

    // Labeled arcs.  Polylines are sampled cell by cell so each fiber
    // isolation is shared by every branch above the same abscissa.
    for (const auto& job : jobs) {
        std::vector<std::vector<std::pair<Rational, Rational>>> pts(job.decomp.arcs.size());
        // Arc index lookup: arcs are emitted cell-major in branch order.
        std::vector<size_t> cell_first(job.decomp.cells.size(), 0);
        for (size_t a = 0; a < job.decomp.arcs.size(); ++a) {
            const auto& arc = job.decomp.arcs[a];
            const size_t c = static_cast<size_t>(arc.cell);
            if (arc.branch == 0) cell_first[c] = a;
        }
        const MultiPoly gamma = squarefree_part_multi(job.surface.sigma).canonical();
        MultiPoly reduced = gamma;
        {
            const MultiPoly yc = content_in(reduced, 1);
            if (!yc.is_constant())
                if (auto q = reduced.try_divide(yc)) reduced = q->canonical();
        }
        for (size_t c = 0; c < job.decomp.cells.size(); ++c) {
            const auto& cell = job.decomp.cells[c];
            if (cell.fiber_size == 0) continue;
            for (const Rational& x : detail::span_samples(cell.span, cfg.samples_per_arc)) {
                auto fiber = fiber_roots(reduced, x);
                const size_t n =
                    std::min(fiber.size(), static_cast<size_t>(cell.fiber_size));
                for (size_t j = 0; j < n; ++j) {
                    fiber[j].refine_to(half_pixel_y);
                    pts[cell_first[c] + j].emplace_back(x, fiber[j].box().mid());
                }
            }
        }
        for (size_t a = 0; a < job.decomp.arcs.size(); ++a)
            polyline(pts[a], cfg.label_color(job.decomp.arcs[a].label),
                     stroke * Rational(2));

        // Vertical-line components: piecewise classification along the line.
        for (const auto& vx : job.decomp.vertical_lines) {
            if (vx < view.xlo || vx > view.xhi) continue;
            const int n = cfg.samples_per_arc;
            const Rational step = view.height() / Rational(n);
            for (int k = 0; k < n; ++k) {
                const Rational y0 = view.ylo + step * Rational(k);
                const Rational ym = y0 + step / Rational(2);
                const RegionLabel lab =
                    job.classifier.classify(SurfacePoint::at(Point::xy(vx, ym)));
                line(Point::xy(vx, y0), Point::xy(vx, y0 + step), cfg.label_color(lab),
                     stroke * Rational(2));
            }
        }
    }

    // The light.
    svg += "<circle cx=\"" + detail::dec(sc.light[0]) + "\" cy=\"" +
           detail::dec(-sc.light[1]) + "\" r=\"" + detail::dec(dot_r) + "\" fill=\"" +
           cfg.light.hex() + "\"/>\n";
    svg += "</svg>\n";
    return svg;
}

// ---------------------------------------------------------------------------
// 3-D PPM renderer
// ---------------------------------------------------------------------------

namespace detail {

struct CameraBasis {
    Point eye, forward, right, up;  // forward/right/up: rational unit-ish axes
    Rational tan_half, aspect;
};

inline Point rationalized_unit(const Point& v) {
    const double n = std::sqrt(v.dot(v).to_double());
    if (n == 0.0) throw SceneError("camera: degenerate axis");
    const mpz_class max_den(1000000);
    std::vector<Rational> c;
    for (int i = 0; i < 3; ++i)
        c.push_back(limit_denominator(Rational::from_double(v[i].to_double() / n), max_den));
    return Point(std::move(c));
}

inline CameraBasis camera_basis(const Camera& cam, int width, int height) {
    const Point fwd = cam.lookat - cam.eye;
    const Point side = Point::cross(fwd, cam.up);
    if (side.is_zero()) throw SceneError("camera up vector is parallel to the view direction");
    CameraBasis b;
    b.eye = cam.eye;
    b.forward = rationalized_unit(fwd);
    b.right = rationalized_unit(side);
    b.up = rationalized_unit(Point::cross(side, fwd));
    const double half_rad = cam.fov_deg.to_double() * 3.14159265358979323846 / 360.0;
    b.tan_half = limit_denominator(Rational::from_double(std::tan(half_rad)),
                                   mpz_class(1000000));
    b.aspect = Rational(width, height);
    return b;
}

} // namespace detail

inline std::string render_3d(const Scene& sc, const RenderConfig& cfg = {}) {
    cfg.validate();
    if (sc.dimension != 3) throw SceneError("render_3d requires a 3-D scene");
    if (!sc.camera) throw SceneError("render_3d requires a camera directive");

    const detail::CameraBasis cam = detail::camera_basis(*sc.camera, cfg.width, cfg.height);
    const EvalPlan plan = order_surfaces(sc);
    std::vector<Classifier> classifiers;
    classifiers.reserve(plan.jobs.size());
    for (const auto& job : plan.jobs)
        classifiers.emplace_back(job.sigma, job.blockers, sc.light, cfg.geometry);
    const MultiPoly product = product_polynomial(sc);

    const int W = cfg.width, H = cfg.height;
    std::vector<std::string> rows(static_cast<size_t>(H));
    const RealRoot zero_t = RealRoot::rational(Rational(0));

    parallel_for_jobs(H, resolve_thread_count(cfg.threads), [&](int py) {
        std::string& row = rows[static_cast<size_t>(py)];
        row.resize(static_cast<size_t>(W) * 3);
        for (int px = 0; px < W; ++px) {
            const Rational u =
                cam.tan_half * cam.aspect * (Rational(2 * px + 1, W) - Rational(1));
            const Rational v = cam.tan_half * (Rational(1) - Rational(2 * py + 1, H));
            const Point dir = cam.forward + cam.right.scaled(u) + cam.up.scaled(v);
            const Point target = cam.eye + dir;

            // Nearest positive hit across surfaces and planes, exactly.
            std::optional<RealRoot> best_t;
            int best_job = -1, best_plane = -1;
            for (size_t j = 0; j < plan.jobs.size(); ++j) {
                const UPoly restricted =
                    restrict_to_line(plan.jobs[j].sigma, cam.eye, target);
                if (restricted.is_zero()) continue;  // eye ray inside the surface
                for (auto& root : real_roots_of(restricted)) {
                    if (root.compare(zero_t) <= 0) continue;
                    if (!best_t || root.compare(*best_t) < 0) {
                        best_t = std::move(root);
                        best_job = static_cast<int>(j);
                        best_plane = -1;
                    }
                    break;  // roots ascend: the first positive one is nearest
                }
            }
            for (size_t p = 0; p < sc.planes.size(); ++p) {
                const UPoly restricted =
                    restrict_to_line(sc.planes[p].poly, cam.eye, target);
                if (restricted.degree() != 1) continue;  // parallel ray or on plane
                const Rational root = -restricted.coeff(0) / restricted.coeff(1);
                if (root.sign() <= 0) continue;
                RealRoot rr = RealRoot::rational(root);
                if (!best_t || rr.compare(*best_t) < 0) {
                    best_t = std::move(rr);
                    best_job = -1;
                    best_plane = static_cast<int>(p);
                }
            }

            RgbColor color = cfg.background;
            if (best_job >= 0) {
                const SurfacePoint hit = SurfacePoint::on_ray(cam.eye, target, *best_t);
                color = cfg.label_color(classifiers[static_cast<size_t>(best_job)].classify(hit));
            } else if (best_plane >= 0) {
                const Point P = cam.eye + dir.scaled(best_t->value());
                switch (shadow_test(product, sc.light, SurfacePoint::at(P), cfg.geometry)) {
                    case ShadowOutcome::Blocked: color = cfg.plane_shadow; break;
                    case ShadowOutcome::Unblocked: color = cfg.plane_lit; break;
                    case ShadowOutcome::Grazing: color = cfg.boundary; break;
                }
            }
            row[static_cast<size_t>(px) * 3 + 0] = static_cast<char>(color.r);
            row[static_cast<size_t>(px) * 3 + 1] = static_cast<char>(color.g);
            row[static_cast<size_t>(px) * 3 + 2] = static_cast<char>(color.b);
        }
    });

    std::string out = "P6\n" + std::to_string(W) + " " + std::to_string(H) + "\n255\n";
    for (const auto& row : rows) out += row;
    return out;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct ReportResult {
    std::string text;
    std::vector<std::pair<std::string, long>> timings_ms;  // side channel
    bool complete = true;  // false when an elimination guard fired
};

// Line-oriented `key = value` document.  Timing figures are returned on the
// side (never inside the text) so the report bytes stay run-deterministic.
inline ReportResult build_report(const Scene& sc, const RenderConfig& cfg = {}) {
    using clock = std::chrono::steady_clock;
    ReportResult out;
    std::string& t = out.text;
    const auto timed = [&](const std::string& key, auto&& fn) {
        const auto start = clock::now();
        fn();
        out.timings_ms.emplace_back(
            key, std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start)
                     .count());
    };

    t += "scene.dim = " + std::to_string(sc.dimension) + "\n";
    std::string light;
    for (int i = 0; i < sc.light.dim(); ++i)
        light += (i ? " " : "") + sc.light[i].str();
    t += "scene.light = " + light + "\n";
    t += "scene.surface_count = " + std::to_string(sc.surfaces.size()) + "\n";
    if (sc.dimension == 3)
        t += "scene.plane_count = " + std::to_string(sc.planes.size()) + "\n";
    for (const auto& s : sc.surfaces) {
        t += "surface." + s.name + ".polynomial = " + s.poly.str() + "\n";
        t += "surface." + s.name + ".degree = " + std::to_string(s.poly.degree()) + "\n";
    }

    const EvalPlan plan = order_surfaces(sc);
    t += "scene.plan = " + std::string(plan.ordered ? "ordered" : "product") + "\n";
    for (const auto& job : plan.jobs) {
        const std::string pre = "job." + job.name + ".";
        t += pre + "sigma = " + job.sigma.str() + "\n";
        t += pre + "sigma.degree = " + std::to_string(job.sigma.degree()) + "\n";

        MultiPoly polar;
        timed(pre + "polar", [&] { polar = first_polar(job.sigma, sc.light); });
        t += pre + "polar = " + polar.str() + "\n";
        t += pre + "polar.degree = " + std::to_string(polar.degree()) + "\n";
        t += pre + "polar.side = " + std::to_string(polar_side(job.sigma, sc.light)) + "\n";

        const std::string kind = sc.dimension == 2 ? "pencil" : "cone";
        std::optional<MultiPoly> aux_pencil;
        try {
            ConeBackend used = ConeBackend::Auto;
            if (sc.dimension == 2) {
                TangentPencil pencil;
                timed(pre + "pencil",
                      [&] { pencil = tangent_pencil_2d(job.sigma, sc.light, cfg.geometry, &used); });
                t += pre + "pencil = " + pencil.pencil.str() + "\n";
                t += pre + "pencil.degree = " + std::to_string(pencil.pencil.degree()) + "\n";
                t += pre + "pencil.terms = " + std::to_string(pencil.pencil.term_count()) + "\n";
                int certified = 0, singular = 0;
                for (const auto& p : pencil.points) {
                    certified += p.certified ? 1 : 0;
                    singular += p.singular ? 1 : 0;
                }
                t += pre + "pencil.points = " + std::to_string(pencil.points.size()) + "\n";
                t += pre + "pencil.points.certified = " + std::to_string(certified) + "\n";
                t += pre + "pencil.points.singular = " + std::to_string(singular) + "\n";
                aux_pencil = std::move(pencil.pencil);
            } else {
                MultiPoly theta;
                timed(pre + "cone",
                      [&] { theta = tangent_cone(job.sigma, sc.light, cfg.geometry, &used); });
                t += pre + "cone = " + theta.str() + "\n";
                t += pre + "cone.degree = " + std::to_string(theta.degree()) + "\n";
                t += pre + "cone.terms = " + std::to_string(theta.term_count()) + "\n";
            }
            t += pre + kind + ".backend = " +
                 (used == ConeBackend::Groebner ? "groebner" : "resultant") + "\n";
        } catch (const ResourceExhausted& e) {
            t += pre + kind + ".error = resource guard exhausted\n";
            out.complete = false;
            continue;
        }

        if (sc.dimension == 2 && aux_pencil) {
            Classifier cls(job.sigma, job.blockers, sc.light, cfg.geometry);
            std::optional<RatInterval> window;
            if (sc.bbox) window = RatInterval((*sc.bbox)[0], (*sc.bbox)[2]);
            CurveDecomposition dec;
            timed(pre + "decompose", [&] {
                dec = decompose_curve(job.sigma, cls, {cls.polar, *aux_pencil}, window);
            });
            t += pre + "criticals = " + std::to_string(dec.criticals.size()) + "\n";
            t += pre + "cells = " + std::to_string(dec.cells.size()) + "\n";
            t += pre + "arcs = " + std::to_string(dec.arcs.size()) + "\n";
            int counts[4] = {0, 0, 0, 0};
            for (const auto& arc : dec.arcs) ++counts[static_cast<int>(arc.label)];
            for (int k = 0; k < 4; ++k)
                t += pre + "arcs." + label_name(static_cast<RegionLabel>(k)) + " = " +
                     std::to_string(counts[k]) + "\n";
            for (size_t a = 0; a < dec.arcs.size(); ++a) {
                const auto& arc = dec.arcs[a];
                t += pre + "arc." + std::to_string(a) + " = cell " +
                     std::to_string(arc.cell) + ", branch " + std::to_string(arc.branch) +
                     ", x " + arc.sample_x.str() + ", label " + label_name(arc.label) + "\n";
            }
        }
    }
    return out;
}

} // namespace illum

#endif // ILLUM_RENDER_HH
