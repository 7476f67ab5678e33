#pragma once

// Parametric segment voxelizer: sample G_k = S + W*k at N+1 evenly spaced
// parameter values, round each sample to its nearest voxel, and drop
// consecutive duplicates. N is the floor of the Euclidean length, raised
// when needed so every step vector component stays within one voxel.

#include <cstdint>
#include <utility>
#include <vector>

#include "voxline/geometry.hpp"

namespace voxline {

// Precomputed sampling plan for one segment.
struct ParametricPlan {
    std::int64_t step_count = 0;  // N; 0 iff both endpoints round to one voxel
    Point3 step_vector;           // W = (E - S) / N; (0,0,0) when N == 0
};

// Ordered voxel approximation of one segment. Consecutive voxels are
// distinct and 26-adjacent; each axis is monotone; the first and last
// voxels are the rounded endpoints.
struct VoxelChain {
    std::vector<Voxel> voxels;
    Segment source;
};

// Builds the sampling plan. N = floor(|E - S|), raised to the ceiling of
// the largest axis extent so that |W| <= 1 per component (nearly
// axis-aligned segments with fractional length would otherwise skip
// voxels), and clamped to >= 1 whenever the rounded endpoints differ.
// N = 0 with W = (0,0,0) when both endpoints round to the same voxel.
ParametricPlan make_plan(const Segment& seg);

// Sample point G_k for 0 <= k <= N. The final sample (k == N) is the end
// point itself rather than S + W*N, which reproduces it only to ~1e-13;
// this pins the chain's last voxel to round_point(E) exactly and keeps the
// sequential and batch paths bit-identical. Shared by both.
inline Point3 parametric_sample(const Segment& seg, const ParametricPlan& plan,
                                std::int64_t k) {
    if (k >= plan.step_count) return seg.end;
    const double t = static_cast<double>(k);
    return {seg.start.x + plan.step_vector.x * t,
            seg.start.y + plan.step_vector.y * t,
            seg.start.z + plan.step_vector.z * t};
}

// Full parametric voxelization of one segment.
VoxelChain voxelize_parametric(const Segment& seg);

// Inclusive bounds on the chain length of any voxelization of seg:
// min = largest axis span of the rounded endpoints + 1 (the length of a
// minimal 26-connected chain), max = step_count + 1 (sample count).
std::pair<std::int64_t, std::int64_t> chain_length_bounds(const Segment& seg);

}  // namespace voxline
