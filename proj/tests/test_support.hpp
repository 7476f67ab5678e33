#pragma once

// Shared test utilities: deterministic segment corpora and the VoxelChain
// invariant checks reused by the unit, property, and acceptance suites.
// Checkers return an empty string on success and a description of the first
// violation otherwise, so failures carry the offending data.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>

#include "voxline/bench.hpp"
#include "voxline/geometry.hpp"
#include "voxline/parametric.hpp"

namespace testsupport {

inline voxline::Point3 random_point(voxline::SplitMix64& rng, double lo,
                                    double hi) {
    return {rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi)};
}

inline voxline::Segment random_segment(voxline::SplitMix64& rng, double lo,
                                       double hi) {
    return {random_point(rng, lo, hi), random_point(rng, lo, hi)};
}

// Segment with Euclidean length log-uniform in [1, max_length], arbitrary
// direction, start near the origin. Exercises the long-chain paths that the
// [-50, 50]^3 corpus cannot reach.
inline voxline::Segment random_long_segment(voxline::SplitMix64& rng,
                                            double max_length) {
    const voxline::Point3 start = random_point(rng, -50.0, 50.0);
    const double len = std::exp(rng.uniform(0.0, std::log(max_length)));
    // Uniform direction on the sphere (Marsaglia).
    double ux, uy, uz;
    for (;;) {
        const double u = rng.uniform(-1.0, 1.0);
        const double v = rng.uniform(-1.0, 1.0);
        const double s = u * u + v * v;
        if (s >= 1.0 || s == 0.0) continue;
        const double f = 2.0 * std::sqrt(1.0 - s);
        ux = u * f;
        uy = v * f;
        uz = 1.0 - 2.0 * s;
        break;
    }
    return {start,
            {start.x + ux * len, start.y + uy * len, start.z + uz * len}};
}

inline std::string describe(const voxline::Segment& seg) {
    std::ostringstream os;
    os.precision(17);
    os << "start=(" << seg.start.x << "," << seg.start.y << "," << seg.start.z
       << ") end=(" << seg.end.x << "," << seg.end.y << "," << seg.end.z
       << ")";
    return os.str();
}

constexpr double kDistanceBound = 0.86602540378443871 + 1e-9;  // sqrt(3)/2

// Which producer's length contract a chain is held to. Both methods share
// the lower bound (a 26-connected monotone chain needs max-axis-span + 1
// voxels), but the upper bounds differ: the parametric sampler emits at most
// step_count + 1 voxels, while the greedy walk only guarantees termination
// within span_x + span_y + span_z + 1 voxels and can exceed step_count + 1
// on near-diagonal segments where locally optimal stall steps stack up.
enum class ChainKind { parametric, walk };

// Checks every VoxelChain invariant: non-empty, endpoint pinning, no
// consecutive duplicates, 26-connectivity, per-axis monotonicity, length
// bounds (per the producer's contract), and the distance bound of each
// voxel center to the line.
inline std::string check_chain(const voxline::VoxelChain& chain,
                               ChainKind kind) {
    using voxline::to_string;
    const voxline::Segment& seg = chain.source;
    std::ostringstream err;
    err.precision(17);

    if (chain.voxels.empty()) {
        return "empty chain for " + describe(seg);
    }
    const voxline::Voxel vs = voxline::round_point(seg.start);
    const voxline::Voxel ve = voxline::round_point(seg.end);
    if (chain.voxels.front() != vs) {
        err << "first voxel " << to_string(chain.voxels.front()) << " != "
            << to_string(vs) << " for " << describe(seg);
        return err.str();
    }
    if (chain.voxels.back() != ve) {
        err << "last voxel " << to_string(chain.voxels.back()) << " != "
            << to_string(ve) << " for " << describe(seg);
        return err.str();
    }

    const voxline::Point3 d = seg.end - seg.start;
    const int dir[3] = {d.x > 0 ? 1 : (d.x < 0 ? -1 : 0),
                        d.y > 0 ? 1 : (d.y < 0 ? -1 : 0),
                        d.z > 0 ? 1 : (d.z < 0 ? -1 : 0)};
    for (std::size_t i = 1; i < chain.voxels.size(); ++i) {
        const voxline::Voxel& prev = chain.voxels[i - 1];
        const voxline::Voxel& cur = chain.voxels[i];
        if (cur == prev) {
            err << "consecutive duplicate " << to_string(cur) << " at index "
                << i << " for " << describe(seg);
            return err.str();
        }
        if (!voxline::voxels_adjacent(prev, cur)) {
            err << "voxels " << to_string(prev) << " -> " << to_string(cur)
                << " at index " << i << " not 26-adjacent for "
                << describe(seg);
            return err.str();
        }
        const int delta[3] = {cur.x - prev.x, cur.y - prev.y, cur.z - prev.z};
        for (int axis = 0; axis < 3; ++axis) {
            if ((dir[axis] >= 0 && delta[axis] < 0) ||
                (dir[axis] <= 0 && delta[axis] > 0)) {
                err << "axis " << axis << " not monotone at index " << i
                    << " for " << describe(seg);
                return err.str();
            }
        }
    }

    const auto [min_len, para_max] = voxline::chain_length_bounds(seg);
    const std::int64_t span_sum = std::llabs(static_cast<std::int64_t>(ve.x) -
                                             static_cast<std::int64_t>(vs.x)) +
                                  std::llabs(static_cast<std::int64_t>(ve.y) -
                                             static_cast<std::int64_t>(vs.y)) +
                                  std::llabs(static_cast<std::int64_t>(ve.z) -
                                             static_cast<std::int64_t>(vs.z));
    const std::int64_t max_len =
        kind == ChainKind::parametric ? para_max : span_sum + 1;
    const auto len = static_cast<std::int64_t>(chain.voxels.size());
    if (len < min_len || len > max_len) {
        err << "length " << len << " outside [" << min_len << ", " << max_len
            << "] for " << describe(seg);
        return err.str();
    }

    if (voxline::segment_length(seg) > 0.0) {
        for (const voxline::Voxel& v : chain.voxels) {
            const voxline::Point3 center{static_cast<double>(v.x),
                                         static_cast<double>(v.y),
                                         static_cast<double>(v.z)};
            const double dist = voxline::point_line_distance(center, seg);
            if (dist > kDistanceBound) {
                err << "voxel " << to_string(v) << " at distance " << dist
                    << " > sqrt(3)/2 from the line of " << describe(seg);
                return err.str();
            }
        }
    }
    return "";
}

// Interior two-neighbor property: every interior voxel is 26-adjacent to
// exactly its predecessor and successor. For a monotone chain with distinct
// consecutive voxels, two voxels more than 3 indices apart advance some axis
// at least twice (three axes, pigeonhole) and cannot be adjacent, so only
// the |i - j| <= 3 window needs scanning. check_chain establishes the
// monotonicity this argument needs.
inline std::string check_two_neighbor(const voxline::VoxelChain& chain) {
    using voxline::to_string;
    const std::size_t n = chain.voxels.size();
    for (std::size_t i = 0; i < n; ++i) {
        int adjacent = 0;
        const std::size_t lo = i >= 3 ? i - 3 : 0;
        const std::size_t hi = std::min(n - 1, i + 3);
        for (std::size_t j = lo; j <= hi; ++j) {
            if (j != i &&
                voxline::voxels_adjacent(chain.voxels[i], chain.voxels[j])) {
                ++adjacent;
            }
        }
        const bool interior = (i > 0 && i + 1 < n);
        const int expected = interior ? 2 : (n > 1 ? 1 : 0);
        if (adjacent != expected) {
            std::ostringstream err;
            err << "voxel " << to_string(chain.voxels[i]) << " at index " << i
                << " has " << adjacent << " adjacent chain members (expected "
                << expected << ") for " << describe(chain.source);
            return err.str();
        }
    }
    return "";
}

}  // namespace testsupport
