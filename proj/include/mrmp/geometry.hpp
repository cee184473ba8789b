#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace mrmp {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
};

inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

// Axis-aligned rectangle, closed on all sides.
struct Rect {
    double xmin = 0.0;
    double ymin = 0.0;
    double xmax = 0.0;
    double ymax = 0.0;

    Rect() = default;
    Rect(double x0, double y0, double x1, double y1)
        : xmin(x0), ymin(y0), xmax(x1), ymax(y1) {}

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    double area() const { return width() * height(); }
    Vec2 center() const { return {0.5 * (xmin + xmax), 0.5 * (ymin + ymax)}; }

    bool contains(const Vec2& p) const {
        return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
    }

    bool intersects(const Rect& o) const {
        return xmin <= o.xmax && o.xmin <= xmax && ymin <= o.ymax && o.ymin <= ymax;
    }

    // Euclidean distance from p to the (closed) rectangle; 0 if p is inside.
    double distance_to(const Vec2& p) const {
        double dx = std::max({xmin - p.x, 0.0, p.x - xmax});
        double dy = std::max({ymin - p.y, 0.0, p.y - ymax});
        return std::hypot(dx, dy);
    }
};

// Intersection of two rectangles; empty (zero-area) result possible.
Rect intersect(const Rect& a, const Rect& b);

// Exact union area of a set of rectangles (coordinate compression).
// Handles overlapping rectangles.
double union_area(const std::vector<Rect>& rects);

// Normalize an angle to (-pi, pi].
double normalize_angle(double theta);

// A planar robot configuration. theta is meaningful only for kinodynamic
// robots and is kept normalized to (-pi, pi].
struct Config {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;

    Config() = default;
    Config(double x_, double y_, double theta_ = 0.0)
        : x(x_), y(y_), theta(normalize_angle(theta_)) {}

    Vec2 position() const { return {x, y}; }
};

enum class RobotKind { Geometric, Unicycle };

struct RobotModel {
    double radius = 0.5;
    RobotKind kind = RobotKind::Geometric;
    double v_max = 1.0;      // unicycle only
    double omega_max = 1.0;  // unicycle only
};

struct Environment {
    Rect bounds;
    std::vector<Rect> obstacles;
    std::string name;

    Environment() = default;
    Environment(Rect b, std::vector<Rect> obs, std::string n = "")
        : bounds(b), obstacles(std::move(obs)), name(std::move(n)) {}
};

// True iff the disc of the given radius centered at p lies strictly inside
// bounds and strictly clear of every obstacle. Contact at distance exactly
// equal to the radius counts as a collision.
bool disc_free(const Environment& env, const Config& p, double radius);

// True iff disc_free holds at interpolated points from a to b spaced at most
// `step` apart, endpoints included.
bool segment_free(const Environment& env, const Config& a, const Config& b,
                  double radius, double step);

}  // namespace mrmp
