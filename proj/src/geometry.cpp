#include "voxline/geometry.hpp"

#include <cmath>
#include <limits>

namespace voxline {

double segment_length(const Segment& seg) {
    const Point3 d = seg.end - seg.start;
    return std::sqrt(d.x * d.x + d.y * d.y + d.z * d.z);
}

namespace {

std::int32_t round_component(double c) {
    if (!std::isfinite(c)) {
        throw std::range_error("round_point: non-finite coordinate");
    }
    // llround rounds halfway cases away from zero regardless of the
    // floating-point environment, which is exactly the tie rule we want.
    const long long r = std::llround(c);
    if (r < std::numeric_limits<std::int32_t>::min() ||
        r > std::numeric_limits<std::int32_t>::max()) {
        throw std::range_error("round_point: coordinate " + std::to_string(c) +
                               " outside the 32-bit lattice");
    }
    return static_cast<std::int32_t>(r);
}

}  // namespace

Voxel round_point(const Point3& p) {
    return {round_component(p.x), round_component(p.y), round_component(p.z)};
}

double point_line_distance(const Point3& p, const Segment& seg) {
    const double len = segment_length(seg);
    if (len == 0.0) {
        throw std::invalid_argument(
            "point_line_distance: zero-length segment defines no line");
    }
    const Point3 d = seg.end - seg.start;
    const Point3 v = p - seg.start;
    const double cx = v.y * d.z - v.z * d.y;
    const double cy = v.z * d.x - v.x * d.z;
    const double cz = v.x * d.y - v.y * d.x;
    return std::sqrt(cx * cx + cy * cy + cz * cz) / len;
}

}  // namespace voxline
