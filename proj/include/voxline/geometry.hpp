#pragma once

// Core geometric primitives shared by every voxelizer: continuous points,
// lattice voxels, segments, the rounding rule, and point-to-line distance.
// All functions here are pure and safe to call concurrently.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace voxline {

// Continuous 3D coordinate in voxel-grid units (one unit = one voxel edge).
struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend bool operator==(const Point3&, const Point3&) = default;
};

// Integer lattice index of a voxel. Components are kept within the signed
// 32-bit range so voxel grids stay addressable with common GPU index types.
struct Voxel {
    std::int32_t x = 0;
    std::int32_t y = 0;
    std::int32_t z = 0;

    friend bool operator==(const Voxel&, const Voxel&) = default;
    friend auto operator<=>(const Voxel&, const Voxel&) = default;
};

// Directed line segment from start (S) to end (E). Zero length is legal.
struct Segment {
    Point3 start;
    Point3 end;

    friend bool operator==(const Segment&, const Segment&) = default;
};

inline bool finite(const Point3& p) {
    return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

// Euclidean length of the segment; 0 exactly iff start == end.
double segment_length(const Segment& seg);

// Nearest-integer voxel for a continuous point. Halfway cases (fractional
// part exactly 0.5) round away from zero, so voxelization is symmetric under
// point reflection through the origin. Throws std::range_error if a
// component is non-finite or falls outside the signed 32-bit lattice.
Voxel round_point(const Point3& p);

// Perpendicular distance from p to the infinite line through seg's
// endpoints: |(p - S) x (E - S)| / |E - S|. Throws std::invalid_argument
// for zero-length segments (no line is defined).
double point_line_distance(const Point3& p, const Segment& seg);

// True when two voxels differ by at most 1 in every coordinate and are not
// the same voxel (26-connectivity, the adjacency used throughout).
inline bool voxels_adjacent(const Voxel& a, const Voxel& b) {
    if (a == b) return false;
    return std::abs(a.x - b.x) <= 1 && std::abs(a.y - b.y) <= 1 &&
           std::abs(a.z - b.z) <= 1;
}

inline Point3 operator-(const Point3& a, const Point3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}

inline Point3 operator+(const Point3& a, const Point3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}

inline std::string to_string(const Voxel& v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + "," +
           std::to_string(v.z) + ")";
}

inline std::string to_string(const Point3& p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + "," +
           std::to_string(p.z) + ")";
}

}  // namespace voxline
