#pragma once

// Data-parallel batch voxelization modeled after a GPU kernel launch: a
// preprocessing pass computes per-segment plans and output offsets, a flat
// work-item space of size N_P x (N_max + 1) is evaluated by a worker pool
// (items with k beyond their segment's step count are redundant and write
// nothing), and an assemble pass builds the per-segment chains. Results
// are bit-identical to sequential voxelization for every partitioning.

#include <cstdint>
#include <optional>
#include <vector>

#include "voxline/geometry.hpp"
#include "voxline/parametric.hpp"

namespace voxline {

// Per-segment entry of a batch plan.
struct SegmentPlan {
    std::int64_t step_count = 0;    // N_i
    Point3 step_vector;             // W_i
    std::int64_t output_offset = 0; // first slot of this segment's N_i+1 samples
};

// Preprocessed batch: shared inputs for every work item.
struct BatchPlan {
    std::vector<Segment> segments;          // N_P entries
    std::vector<SegmentPlan> per_segment;   // parallel to segments
    std::int64_t max_steps = 0;             // N_max = max over step_count
    std::int64_t total_voxel_capacity = 0;  // sum of (N_i + 1)
};

// How the work-item space is split across host threads: contiguous ranges
// of group_size segments are handed to worker_count workers from a shared
// cursor (the CPU analog of launching N_P/N_TH blocks of N_TH threads).
struct PartitionConfig {
    int group_size = 64;   // N_TH; >= 64 keeps two-warp-sized groups
    int worker_count = 1;
};

struct BatchTiming {
    std::int64_t preprocess_ns = 0;
    std::int64_t kernel_ns = 0;
    std::int64_t assemble_ns = 0;
};

struct BatchResult {
    std::vector<VoxelChain> chains;  // one per input segment, input order
    std::int64_t total_voxels = 0;   // sum of chain lengths after dedup
    BatchTiming timing;
};

struct ItemCount {
    std::int64_t live = 0;       // sum of (N_i + 1)
    std::int64_t redundant = 0;  // N_P * (N_max + 1) - live
};

// Computes each segment's plan, the global maximum step count, and
// contiguous output offsets (prefix sums of N_i + 1). Throws
// std::invalid_argument on an empty segment list.
BatchPlan batch_preprocess(const std::vector<Segment>& segments);

// The kernel body: pure function of (plan, segment_index, k). Returns
// nothing for redundant items (k > N_i); otherwise the rounded sample
// G_k of segment i. Throws std::out_of_range for indices outside
// [0, N_P) x [0, N_max].
std::optional<Voxel> kernel_work_item(const BatchPlan& plan,
                                      std::int64_t segment_index,
                                      std::int64_t k);

// Evaluates every live work item exactly once across the worker pool,
// writing rounded samples into a preallocated buffer at the plan's
// offsets, then assembles per-segment chains (consecutive-duplicate
// removal happens here, not in the kernel). The chains are bit-identical
// to mapping voxelize_parametric over the segments for every
// (group_size, worker_count). preprocess_ns in the returned timing is 0
// because the plan was built by the caller; see run_batch.
BatchResult batch_voxelize(const BatchPlan& plan, const PartitionConfig& cfg);

// Convenience wrapper used by the CLI and the bench harness: times
// batch_preprocess and fills all three timing phases.
BatchResult run_batch(const std::vector<Segment>& segments,
                      const PartitionConfig& cfg);

// Live/redundant work-item accounting for the N_P x (N_max + 1) grid.
ItemCount effective_item_count(const BatchPlan& plan);

}  // namespace voxline
