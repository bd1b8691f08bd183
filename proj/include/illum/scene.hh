#ifndef ILLUM_SCENE_HH
#define ILLUM_SCENE_HH

// Scene model and file format.
//
// A scene is a line-oriented UTF-8 text file ('#' starts a comment):
//
//     dim 3
//     surface S1: x^2 + y^2 + z^4*(z - 1)
//     surface S2: (x - 4)^2 + y^2 + (z + 1)^2 - 5
//     plane P1: z + 3/2
//     light 1 0 2
//     order S1 S2                                  # optional, closer first
//     camera eye -6 -6 4  lookat 0 0 0  up 0 0 1  fov 40
//     bbox -6 -6 6 6                               # optional, 2-D view box
//
// 2-D scenes use `dim 2`, variables x,y, and carry no plane or camera
// directives.  Scalars accept integers, fractions a/b, and decimal literals
// (converted exactly); camera scalars are additionally rounded to
// denominator <= 10^6 so the whole ray pipeline stays rational.

#include <array>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "illum/expr.hh"
#include "illum/geometry.hh"
#include "illum/point.hh"
#include "illum/threads.hh"

namespace illum {

// Invariant violations (as opposed to syntax errors, which are ParseError).
class SceneError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct NamedSurface {
    std::string name;
    MultiPoly poly;
};

struct Camera {
    Point eye, lookat, up;
    Rational fov_deg;
};

struct Scene {
    int dimension = 0;
    std::vector<NamedSurface> surfaces;
    std::vector<NamedSurface> planes;  // receivers; 3-D only, degree exactly 1
    Point light;
    std::vector<int> order;  // optional: surface indices, closer-to-light first
    std::optional<Camera> camera;
    std::optional<std::array<Rational, 4>> bbox;  // xmin ymin xmax ymax (2-D)
    ContextPtr ctx;

    const NamedSurface* find_surface(const std::string& name) const {
        for (const auto& s : surfaces)
            if (s.name == name) return &s;
        return nullptr;
    }
};

// Expanded canonical product of all surface polynomials (planes excluded).
inline MultiPoly product_polynomial(const Scene& sc) {
    if (sc.surfaces.empty()) throw SceneError("scene has no surfaces");
    MultiPoly p = sc.surfaces[0].poly;
    for (size_t i = 1; i < sc.surfaces.size(); ++i) p *= sc.surfaces[i].poly;
    return p.canonical();
}

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline Rational scene_scalar(const std::string& tok, int line) {
    if (auto v = Rational::parse(tok)) return *v;
    throw ParseError("expected a number, got '" + tok + "'", line, 1);
}

// The light must not be a singular point of the product surface: at L either
// the polynomial or some partial derivative is nonzero.
inline void check_light_regular(const Scene& sc) {
    const MultiPoly sigma = product_polynomial(sc);
    std::vector<Rational> at;
    for (int i = 0; i < sc.dimension; ++i) at.push_back(sc.light[i]);
    if (sigma.evaluate(at).sign() != 0) return;
    for (const auto& d : sigma.gradient())
        if (d.evaluate(at).sign() != 0) return;
    throw SceneError("light " + sc.light.str() +
                     " is a singular point of the product surface");
}

inline void validate_scene(Scene& sc) {
    if (sc.dimension == 0) throw SceneError("missing 'dim' directive");
    if (sc.surfaces.empty()) throw SceneError("scene declares no surfaces");
    if (sc.light.dim() == 0) throw SceneError("missing 'light' directive");
    if (sc.light.dim() != sc.dimension)
        throw SceneError("light has " + std::to_string(sc.light.dim()) +
                         " coordinates in a " + std::to_string(sc.dimension) + "-D scene");
    for (const auto& p : sc.planes)
        if (p.poly.degree() != 1)
            throw SceneError("plane " + p.name + " must have degree exactly 1");
    if (sc.camera) {
        const Camera& cam = *sc.camera;
        if (cam.eye == cam.lookat) throw SceneError("camera eye equals look-at point");
        if (!(cam.fov_deg > Rational(0)) || !(cam.fov_deg < Rational(180)))
            throw SceneError("camera fov must lie in (0, 180)");
        const Point fwd = cam.lookat - cam.eye;
        const Point side = Point::cross(fwd, cam.up);
        if (side.is_zero()) throw SceneError("camera up vector is parallel to the view direction");
    }
    if (sc.bbox) {
        const auto& b = *sc.bbox;
        if (!(b[0] < b[2]) || !(b[1] < b[3]))
            throw SceneError("bbox must satisfy xmin < xmax and ymin < ymax");
    }
    check_light_regular(sc);
}

} // namespace detail

inline Scene parse_scene(std::istream& in) {
    Scene sc;
    bool saw_order = false;
    std::string raw;
    int lineno = 0;
    auto need_dim = [&](const char* what) {
        if (sc.dimension == 0)
            throw ParseError(std::string("'") + what + "' before 'dim'", lineno, 1);
    };
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto tokens = detail::split_tokens(line);
        if (tokens.empty()) continue;
        const std::string& head = tokens[0];

        if (head == "dim") {
            if (sc.dimension != 0) throw ParseError("duplicate 'dim' directive", lineno, 1);
            if (tokens.size() != 2 || (tokens[1] != "2" && tokens[1] != "3"))
                throw ParseError("usage: dim 2|3", lineno, 1);
            sc.dimension = tokens[1] == "2" ? 2 : 3;
            sc.ctx = Context::coords(sc.dimension);
        } else if (head == "surface" || head == "plane") {
            need_dim(head.c_str());
            const bool is_plane = head == "plane";
            if (is_plane && sc.dimension != 3)
                throw ParseError("'plane' requires a 3-D scene", lineno, 1);
            auto colon = line.find(':');
            if (tokens.size() < 2 || colon == std::string::npos)
                throw ParseError("usage: " + head + " NAME: expression", lineno, 1);
            std::string name = tokens[1];
            if (!name.empty() && name.back() == ':') name.pop_back();
            if (name.empty()) throw ParseError("missing " + head + " name", lineno, 1);
            for (const auto& s : sc.surfaces)
                if (s.name == name) throw ParseError("duplicate name '" + name + "'", lineno, 1);
            for (const auto& p : sc.planes)
                if (p.name == name) throw ParseError("duplicate name '" + name + "'", lineno, 1);
            MultiPoly poly = parse_polynomial(line.substr(colon + 1), sc.ctx, lineno);
            if (poly.is_zero())
                throw ParseError(head + " " + name + " is the zero polynomial", lineno, 1);
            (is_plane ? sc.planes : sc.surfaces).push_back({std::move(name), poly.canonical()});
        } else if (head == "light") {
            need_dim("light");
            if (static_cast<int>(tokens.size()) != sc.dimension + 1)
                throw ParseError("light needs " + std::to_string(sc.dimension) + " coordinates",
                                 lineno, 1);
            std::vector<Rational> c;
            for (size_t i = 1; i < tokens.size(); ++i)
                c.push_back(detail::scene_scalar(tokens[i], lineno));
            sc.light = sc.dimension == 2 ? Point::xy(c[0], c[1]) : Point::xyz(c[0], c[1], c[2]);
        } else if (head == "order") {
            need_dim("order");
            if (saw_order) throw ParseError("duplicate 'order' directive", lineno, 1);
            saw_order = true;
            std::vector<int> order;
            for (size_t i = 1; i < tokens.size(); ++i) {
                int idx = -1;
                for (size_t j = 0; j < sc.surfaces.size(); ++j)
                    if (sc.surfaces[j].name == tokens[i]) idx = static_cast<int>(j);
                if (idx < 0)
                    throw SceneError("order names unknown surface '" + tokens[i] + "'");
                for (int seen : order)
                    if (seen == idx)
                        throw SceneError("order lists surface '" + tokens[i] + "' twice");
                order.push_back(idx);
            }
            if (order.size() != sc.surfaces.size())
                throw SceneError("order must list every surface exactly once");
            sc.order = std::move(order);
        } else if (head == "camera") {
            need_dim("camera");
            if (sc.dimension != 3) throw ParseError("'camera' requires a 3-D scene", lineno, 1);
            if (tokens.size() != 15 || tokens[1] != "eye" || tokens[5] != "lookat" ||
                tokens[9] != "up" || tokens[13] != "fov")
                throw ParseError("usage: camera eye X Y Z lookat X Y Z up X Y Z fov F", lineno, 1);
            std::vector<Rational> v;
            for (size_t i : {2, 3, 4, 6, 7, 8, 10, 11, 12})
                v.push_back(detail::scene_scalar(tokens[i], lineno));
            Camera cam{Point::xyz(v[0], v[1], v[2]), Point::xyz(v[3], v[4], v[5]),
                       Point::xyz(v[6], v[7], v[8]),
                       detail::scene_scalar(tokens[14], lineno)};
            // Exactness guard: every camera scalar is rounded to den <= 10^6.
            const mpz_class max_den(1000000);
            for (int k = 0; k < 3; ++k) {
                cam.eye[k] = limit_denominator(cam.eye[k], max_den);
                cam.lookat[k] = limit_denominator(cam.lookat[k], max_den);
                cam.up[k] = limit_denominator(cam.up[k], max_den);
            }
            cam.fov_deg = limit_denominator(cam.fov_deg, max_den);
            sc.camera = std::move(cam);
        } else if (head == "bbox") {
            need_dim("bbox");
            if (sc.dimension != 2) throw ParseError("'bbox' applies to 2-D scenes", lineno, 1);
            if (tokens.size() != 5)
                throw ParseError("usage: bbox xmin ymin xmax ymax", lineno, 1);
            std::array<Rational, 4> b;
            for (int i = 0; i < 4; ++i)
                b[static_cast<size_t>(i)] =
                    detail::scene_scalar(tokens[static_cast<size_t>(i) + 1], lineno);
            sc.bbox = b;
        } else {
            throw ParseError("unknown directive '" + head + "'", lineno, 1);
        }
    }
    detail::validate_scene(sc);
    return sc;
}

inline Scene parse_scene_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SceneError("cannot open scene file: " + path);
    return parse_scene(in);
}

// ---------------------------------------------------------------------------
// Evaluation plan
// ---------------------------------------------------------------------------

// One classification task: points of `sigma` labeled against light, polar of
// sigma, and the given blocker set.
struct SurfaceJob {
    std::string name;
    MultiPoly sigma;
    MultiPoly blockers;
};

struct EvalPlan {
    bool ordered = false;
    std::vector<SurfaceJob> jobs;
};

// With a declared closer-to-light order, each surface self-shades
// independently and receives cast shadows only from strictly closer
// surfaces; without one, everything runs on the single product surface.
inline EvalPlan order_surfaces(const Scene& sc) {
    EvalPlan plan;
    if (sc.order.empty()) {
        const MultiPoly prod = product_polynomial(sc);
        const std::string name = sc.surfaces.size() == 1 ? sc.surfaces[0].name : "product";
        plan.jobs.push_back({name, prod, prod});
        return plan;
    }
    plan.ordered = true;
    MultiPoly closer;  // product of surfaces declared so far
    for (size_t k = 0; k < sc.order.size(); ++k) {
        const NamedSurface& s = sc.surfaces[static_cast<size_t>(sc.order[k])];
        MultiPoly blockers = k == 0 ? s.poly : (closer * s.poly).canonical();
        plan.jobs.push_back({s.name, s.poly, std::move(blockers)});
        closer = k == 0 ? s.poly : (closer * s.poly).canonical();
    }
    return plan;
}

// ---------------------------------------------------------------------------
// Shadows cast on receiver planes
// ---------------------------------------------------------------------------

// Rational parametrization P(u, v) = origin + u*u_dir + v*v_dir of a plane.
struct PlaneFrame {
    Point origin, u_dir, v_dir;

    Point at(const Rational& u, const Rational& v) const {
        return origin + u_dir.scaled(u) + v_dir.scaled(v);
    }
};

struct ShadowRegion {
    std::string plane_name;
    PlaneFrame frame;
    // Condition polynomials in the plane chart (u, v): the pullbacks of the
    // product surface and, when supplied, of the tangent cone.  Their sign
    // vector delimits the shadow.
    MultiPoly surface_pullback;
    std::optional<MultiPoly> cone_pullback;
    // Exact grid of segment tests over [-extent, extent]^2.
    int grid_n = 0;
    Rational extent;
    std::vector<std::uint8_t> shaded;  // grid_n * grid_n, row-major by v then u
    // Boundary hairlines from midpoint marching squares, in (u, v).
    std::vector<std::array<Rational, 4>> boundary_segments;

    bool shaded_at(int i, int j) const {
        return shaded[static_cast<size_t>(j) * static_cast<size_t>(grid_n) +
                      static_cast<size_t>(i)] != 0;
    }
};

namespace detail {

// Pick a coordinate with a nonzero plane coefficient (preferring z, then y)
// and solve for it: gives an exact rational chart of the plane.
inline PlaneFrame plane_frame(const MultiPoly& plane) {
    std::vector<Rational> zero(3, Rational(0));
    const Rational d = plane.evaluate(zero);
    std::array<Rational, 3> co;
    for (int i = 0; i < 3; ++i) {
        std::vector<Rational> e(3, Rational(0));
        e[static_cast<size_t>(i)] = Rational(1);
        co[static_cast<size_t>(i)] = plane.evaluate(e) - d;
    }
    int pivot = -1;
    for (int i = 2; i >= 0; --i)
        if (co[static_cast<size_t>(i)].sign() != 0) { pivot = i; break; }
    if (pivot < 0) throw SceneError("degenerate plane (no linear part)");
    const int a1 = pivot == 0 ? 1 : 0, a2 = pivot == 2 ? 1 : 2;
    std::array<Rational, 3> o{Rational(0), Rational(0), Rational(0)},
        u{Rational(0), Rational(0), Rational(0)}, v{Rational(0), Rational(0), Rational(0)};
    const Rational& cp = co[static_cast<size_t>(pivot)];
    o[static_cast<size_t>(pivot)] = -d / cp;
    u[static_cast<size_t>(a1)] = Rational(1);
    u[static_cast<size_t>(pivot)] = -co[static_cast<size_t>(a1)] / cp;
    v[static_cast<size_t>(a2)] = Rational(1);
    v[static_cast<size_t>(pivot)] = -co[static_cast<size_t>(a2)] / cp;
    return PlaneFrame{Point::xyz(o[0], o[1], o[2]), Point::xyz(u[0], u[1], u[2]),
                      Point::xyz(v[0], v[1], v[2])};
}

inline MultiPoly pullback_to_frame(const MultiPoly& p, const PlaneFrame& f,
                                   const ContextPtr& cuv) {
    const MultiPoly uv = MultiPoly::variable(cuv, 0), vv = MultiPoly::variable(cuv, 1);
    std::vector<MultiPoly> args;
    for (int i = 0; i < 3; ++i)
        args.push_back(MultiPoly::constant(cuv, f.origin[i]) + uv.scaled(f.u_dir[i]) +
                       vv.scaled(f.v_dir[i]));
    return p.compose(args, cuv);
}

} // namespace detail

// Exact shadow of the product surface on one receiver plane: every grid
// point is decided by the rational segment test (blocked iff some occluder
// root lies strictly between light and point).  `theta`, when given, is the
// tangent cone of the product surface; its pullback is reported alongside
// the surface pullback as the region's boundary conditions.
inline ShadowRegion shadow_on_plane(const Scene& sc, const std::string& plane_name,
                                    const std::optional<MultiPoly>& theta = std::nullopt,
                                    int grid_n = 50, Rational extent = Rational(8),
                                    int threads = 0) {
    if (sc.dimension != 3) throw SceneError("shadow_on_plane requires a 3-D scene");
    const NamedSurface* plane = nullptr;
    for (const auto& p : sc.planes)
        if (p.name == plane_name) plane = &p;
    if (!plane) throw SceneError("unknown plane '" + plane_name + "'");
    if (grid_n < 2) throw SceneError("shadow grid needs at least 2 points per side");

    ShadowRegion region;
    region.plane_name = plane_name;
    region.frame = detail::plane_frame(plane->poly);
    region.grid_n = grid_n;
    region.extent = extent;

    {
        std::vector<Rational> at;
        for (int i = 0; i < 3; ++i) at.push_back(sc.light[i]);
        if (plane->poly.evaluate(at).sign() == 0)
            throw SceneError("plane " + plane_name + " passes through the light");
    }

    static const ContextPtr cuv = Context::of({"u", "v"});
    const MultiPoly sigma = product_polynomial(sc);
    region.surface_pullback = detail::pullback_to_frame(sigma, region.frame, cuv).canonical();
    if (theta)
        region.cone_pullback = detail::pullback_to_frame(*theta, region.frame, cuv).canonical();

    const Rational step = (extent + extent) / Rational(grid_n - 1);
    auto coord = [&](int k) { return -extent + step * Rational(k); };
    region.shaded.assign(static_cast<size_t>(grid_n) * static_cast<size_t>(grid_n), 0);
    parallel_for_jobs(grid_n, resolve_thread_count(threads), [&](int j) {
        for (int i = 0; i < grid_n; ++i) {
            const Point p = region.frame.at(coord(i), coord(j));
            const bool hit = shadow_test(sigma, sc.light, SurfacePoint::at(p)) ==
                             ShadowOutcome::Blocked;
            region.shaded[static_cast<size_t>(j) * static_cast<size_t>(grid_n) +
                          static_cast<size_t>(i)] = hit ? 1 : 0;
        }
    });

    // Midpoint marching squares: one hairline per boundary cell edge pair.
    const Rational half = step / Rational(2);
    for (int j = 0; j + 1 < grid_n; ++j) {
        for (int i = 0; i + 1 < grid_n; ++i) {
            const bool s00 = region.shaded_at(i, j), s10 = region.shaded_at(i + 1, j);
            const bool s01 = region.shaded_at(i, j + 1), s11 = region.shaded_at(i + 1, j + 1);
            const int mask = (s00 ? 1 : 0) | (s10 ? 2 : 0) | (s11 ? 4 : 0) | (s01 ? 8 : 0);
            if (mask == 0 || mask == 15) continue;
            const Rational xm = coord(i) + half, ym = coord(j) + half;
            const Rational x0 = coord(i), x1 = coord(i + 1), y0 = coord(j), y1 = coord(j + 1);
            auto emit = [&](Rational ax, Rational ay, Rational bx, Rational by) {
                region.boundary_segments.push_back(
                    {std::move(ax), std::move(ay), std::move(bx), std::move(by)});
            };
            switch (mask) {
                case 1: case 14: emit(x0, ym, xm, y0); break;
                case 2: case 13: emit(xm, y0, x1, ym); break;
                case 4: case 11: emit(x1, ym, xm, y1); break;
                case 8: case 7:  emit(xm, y1, x0, ym); break;
                case 3: case 12: emit(x0, ym, x1, ym); break;
                case 6: case 9:  emit(xm, y0, xm, y1); break;
                case 5:  emit(x0, ym, xm, y0); emit(x1, ym, xm, y1); break;
                case 10: emit(xm, y0, x1, ym); emit(xm, y1, x0, ym); break;
                default: break;
            }
        }
    }
    return region;
}

} // namespace illum

#endif // ILLUM_SCENE_HH
