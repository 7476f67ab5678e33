#include "voxline/parametric.hpp"

#include <algorithm>
#include <cmath>

namespace voxline {

ParametricPlan make_plan(const Segment& seg) {
    const Voxel vs = round_point(seg.start);
    const Voxel ve = round_point(seg.end);
    if (vs == ve) {
        return {0, {0.0, 0.0, 0.0}};
    }
    const Point3 d = seg.end - seg.start;
    const double len = segment_length(seg);
    std::int64_t n = static_cast<std::int64_t>(std::floor(len));
    // Raise N to the largest axis extent so |W| <= 1 per component;
    // otherwise nearly axis-aligned segments (e.g. length 2.999 along x)
    // would sample with a step over one voxel and break 26-connectivity.
    const double extent =
        std::max({std::abs(d.x), std::abs(d.y), std::abs(d.z)});
    n = std::max(n, static_cast<std::int64_t>(std::ceil(extent)));
    n = std::max<std::int64_t>(n, 1);
    const double nd = static_cast<double>(n);
    return {n, {d.x / nd, d.y / nd, d.z / nd}};
}

VoxelChain voxelize_parametric(const Segment& seg) {
    const ParametricPlan plan = make_plan(seg);
    VoxelChain chain;
    chain.source = seg;
    chain.voxels.reserve(static_cast<std::size_t>(plan.step_count) + 1);
    for (std::int64_t k = 0; k <= plan.step_count; ++k) {
        const Voxel v = round_point(parametric_sample(seg, plan, k));
        if (chain.voxels.empty() || chain.voxels.back() != v) {
            chain.voxels.push_back(v);
        }
    }
    return chain;
}

std::pair<std::int64_t, std::int64_t> chain_length_bounds(const Segment& seg) {
    const Voxel vs = round_point(seg.start);
    const Voxel ve = round_point(seg.end);
    const std::int64_t span =
        std::max({std::abs(static_cast<std::int64_t>(ve.x) - vs.x),
                  std::abs(static_cast<std::int64_t>(ve.y) - vs.y),
                  std::abs(static_cast<std::int64_t>(ve.z) - vs.z)});
    return {span + 1, make_plan(seg).step_count + 1};
}

}  // namespace voxline
