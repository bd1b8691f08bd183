#ifndef ILLUM_POINT_HH
#define ILLUM_POINT_HH

// Rational points in 2-D or 3-D ambient space.

#include "illum/rational.hh"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace illum {

struct Point {
    std::vector<Rational> c;

    Point() = default;
    Point(std::initializer_list<Rational> v) : c(v) {}
    explicit Point(std::vector<Rational> v) : c(std::move(v)) {}
    static Point xy(Rational x, Rational y) { return Point{std::move(x), std::move(y)}; }
    static Point xyz(Rational x, Rational y, Rational z) {
        return Point{std::move(x), std::move(y), std::move(z)};
    }

    int dim() const { return static_cast<int>(c.size()); }
    const Rational& operator[](int i) const { return c.at(static_cast<size_t>(i)); }
    Rational& operator[](int i) { return c.at(static_cast<size_t>(i)); }

    friend Point operator+(const Point& a, const Point& b) {
        require_dim(a, b);
        Point r;
        for (int i = 0; i < a.dim(); ++i) r.c.push_back(a[i] + b[i]);
        return r;
    }
    friend Point operator-(const Point& a, const Point& b) {
        require_dim(a, b);
        Point r;
        for (int i = 0; i < a.dim(); ++i) r.c.push_back(a[i] - b[i]);
        return r;
    }
    Point scaled(const Rational& s) const {
        Point r;
        for (const auto& v : c) r.c.push_back(v * s);
        return r;
    }
    friend bool operator==(const Point& a, const Point& b) { return a.c == b.c; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

    Rational dot(const Point& o) const {
        require_dim(*this, o);
        Rational s(0);
        for (int i = 0; i < dim(); ++i) s += c[static_cast<size_t>(i)] * o[i];
        return s;
    }

    bool is_zero() const {
        for (const auto& v : c)
            if (v.sign() != 0) return false;
        return true;
    }

    static Point cross(const Point& a, const Point& b) {
        if (a.dim() != 3 || b.dim() != 3) throw std::logic_error("Point::cross: needs 3-D");
        return Point::xyz(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                          a[0] * b[1] - a[1] * b[0]);
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += ", ";
            s += c[i].str();
        }
        return s + ")";
    }

private:
    static void require_dim(const Point& a, const Point& b) {
        if (a.dim() != b.dim()) throw std::logic_error("Point: dimension mismatch");
    }
};

} // namespace illum

#endif // ILLUM_POINT_HH
