#include "mrmp/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace mrmp {

Rect intersect(const Rect& a, const Rect& b) {
    Rect r;
    r.xmin = std::max(a.xmin, b.xmin);
    r.ymin = std::max(a.ymin, b.ymin);
    r.xmax = std::min(a.xmax, b.xmax);
    r.ymax = std::min(a.ymax, b.ymax);
    if (r.xmax < r.xmin) r.xmax = r.xmin;
    if (r.ymax < r.ymin) r.ymax = r.ymin;
    return r;
}

double union_area(const std::vector<Rect>& rects) {
    std::vector<double> xs, ys;
    xs.reserve(rects.size() * 2);
    ys.reserve(rects.size() * 2);
    for (const Rect& r : rects) {
        if (r.width() <= 0.0 || r.height() <= 0.0) continue;
        xs.push_back(r.xmin);
        xs.push_back(r.xmax);
        ys.push_back(r.ymin);
        ys.push_back(r.ymax);
    }
    if (xs.empty()) return 0.0;
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    double total = 0.0;
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
        for (size_t j = 0; j + 1 < ys.size(); ++j) {
            const double cx = 0.5 * (xs[i] + xs[i + 1]);
            const double cy = 0.5 * (ys[j] + ys[j + 1]);
            for (const Rect& r : rects) {
                if (cx > r.xmin && cx < r.xmax && cy > r.ymin && cy < r.ymax) {
                    total += (xs[i + 1] - xs[i]) * (ys[j + 1] - ys[j]);
                    break;
                }
            }
        }
    }
    return total;
}

double normalize_angle(double theta) {
    if (theta > -M_PI && theta <= M_PI) return theta;
    double t = std::fmod(theta, 2.0 * M_PI);
    if (t <= -M_PI) t += 2.0 * M_PI;
    if (t > M_PI) t -= 2.0 * M_PI;
    return t;
}

bool disc_free(const Environment& env, const Config& p, double radius) {
    if (radius <= 0.0) throw std::invalid_argument("disc_free: radius must be positive");
    const Rect& b = env.bounds;
    if (p.x - radius <= b.xmin || p.x + radius >= b.xmax ||
        p.y - radius <= b.ymin || p.y + radius >= b.ymax) {
        return false;
    }
    const Vec2 c = p.position();
    for (const Rect& o : env.obstacles) {
        if (o.distance_to(c) <= radius) return false;
    }
    return true;
}

bool segment_free(const Environment& env, const Config& a, const Config& b,
                  double radius, double step) {
    if (step <= 0.0) throw std::invalid_argument("segment_free: step must be positive");
    const double len = distance(a.position(), b.position());
    const int n = std::max(1, static_cast<int>(std::ceil(len / step)));
    for (int i = 0; i <= n; ++i) {
        const double s = static_cast<double>(i) / n;
        Config q(a.x + s * (b.x - a.x), a.y + s * (b.y - a.y));
        if (!disc_free(env, q, radius)) return false;
    }
    return true;
}

}  // namespace mrmp
