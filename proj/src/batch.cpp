#include "voxline/batch.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace voxline {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ns_between(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(b - a).count();
}

// Runs fn(segment_index) for every segment, pulling contiguous ranges of
// group_size segments from a shared cursor across worker_count threads.
// The first exception thrown by any worker is rethrown on the caller.
template <typename Fn>
void parallel_over_segments(std::int64_t segment_count, const PartitionConfig& cfg,
                            Fn&& fn) {
    std::atomic<std::int64_t> cursor{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&]() {
        try {
            for (;;) {
                const std::int64_t group = cursor.fetch_add(1);
                const std::int64_t base =
                    group * static_cast<std::int64_t>(cfg.group_size);
                if (base >= segment_count) return;
                const std::int64_t stop =
                    std::min(base + cfg.group_size, segment_count);
                for (std::int64_t i = base; i < stop; ++i) fn(i);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };

    {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(cfg.worker_count));
        for (int t = 0; t < cfg.worker_count; ++t) pool.emplace_back(worker);
    }
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

BatchPlan batch_preprocess(const std::vector<Segment>& segments) {
    if (segments.empty()) {
        throw std::invalid_argument("batch_preprocess: empty segment list");
    }
    BatchPlan plan;
    plan.segments = segments;
    plan.per_segment.reserve(segments.size());
    std::int64_t offset = 0;
    for (const Segment& seg : segments) {
        const ParametricPlan p = make_plan(seg);
        plan.per_segment.push_back({p.step_count, p.step_vector, offset});
        plan.max_steps = std::max(plan.max_steps, p.step_count);
        offset += p.step_count + 1;
    }
    plan.total_voxel_capacity = offset;
    return plan;
}

std::optional<Voxel> kernel_work_item(const BatchPlan& plan,
                                      std::int64_t segment_index,
                                      std::int64_t k) {
    const auto count = static_cast<std::int64_t>(plan.segments.size());
    if (segment_index < 0 || segment_index >= count || k < 0 ||
        k > plan.max_steps) {
        throw std::out_of_range("kernel_work_item: item index outside the " +
                                std::to_string(count) + " x " +
                                std::to_string(plan.max_steps + 1) + " grid");
    }
    const SegmentPlan& sp = plan.per_segment[static_cast<std::size_t>(segment_index)];
    if (k > sp.step_count) return std::nullopt;  // redundant item: no output
    const ParametricPlan p{sp.step_count, sp.step_vector};
    return round_point(
        parametric_sample(plan.segments[static_cast<std::size_t>(segment_index)], p, k));
}

BatchResult batch_voxelize(const BatchPlan& plan, const PartitionConfig& cfg) {
    if (cfg.group_size < 1 || cfg.worker_count < 1) {
        throw std::invalid_argument(
            "batch_voxelize: group_size and worker_count must be >= 1");
    }
    const auto segment_count = static_cast<std::int64_t>(plan.segments.size());
    if (segment_count == 0 ||
        plan.per_segment.size() != plan.segments.size()) {
        throw std::logic_error("batch_voxelize: malformed plan");
    }
    const SegmentPlan& last = plan.per_segment.back();
    if (last.output_offset + last.step_count + 1 != plan.total_voxel_capacity) {
        throw std::logic_error("batch_voxelize: plan capacity mismatch");
    }

    BatchResult result;
    std::vector<Voxel> buffer(static_cast<std::size_t>(plan.total_voxel_capacity));

    // Kernel phase: every (segment, k) item of the flat N_P x (N_max + 1)
    // space is visited; items past a segment's own step count are redundant
    // and write nothing. Writes land in disjoint precomputed ranges, so the
    // buffer contents are independent of scheduling.
    const auto kernel_start = Clock::now();
    parallel_over_segments(segment_count, cfg, [&](std::int64_t i) {
        const Segment& seg = plan.segments[static_cast<std::size_t>(i)];
        const SegmentPlan& sp = plan.per_segment[static_cast<std::size_t>(i)];
        const ParametricPlan p{sp.step_count, sp.step_vector};
        Voxel* out = buffer.data() + sp.output_offset;
        for (std::int64_t k = 0; k <= plan.max_steps; ++k) {
            if (k > sp.step_count) continue;  // redundant item guard
            out[k] = round_point(parametric_sample(seg, p, k));
        }
    });
    const auto kernel_end = Clock::now();
    result.timing.kernel_ns = ns_between(kernel_start, kernel_end);

    // Assemble phase: per-segment consecutive-duplicate removal into the
    // final chains (the kernel stays branch-minimal; dedup needs neighbor
    // knowledge, so it happens here).
    result.chains.resize(plan.segments.size());
    const auto assemble_start = Clock::now();
    parallel_over_segments(segment_count, cfg, [&](std::int64_t i) {
        const SegmentPlan& sp = plan.per_segment[static_cast<std::size_t>(i)];
        VoxelChain& chain = result.chains[static_cast<std::size_t>(i)];
        chain.source = plan.segments[static_cast<std::size_t>(i)];
        chain.voxels.reserve(static_cast<std::size_t>(sp.step_count) + 1);
        const Voxel* in = buffer.data() + sp.output_offset;
        for (std::int64_t k = 0; k <= sp.step_count; ++k) {
            if (chain.voxels.empty() || chain.voxels.back() != in[k]) {
                chain.voxels.push_back(in[k]);
            }
        }
    });
    const auto assemble_end = Clock::now();
    result.timing.assemble_ns = ns_between(assemble_start, assemble_end);

    for (const VoxelChain& chain : result.chains) {
        result.total_voxels += static_cast<std::int64_t>(chain.voxels.size());
    }
    return result;
}

BatchResult run_batch(const std::vector<Segment>& segments,
                      const PartitionConfig& cfg) {
    const auto pre_start = Clock::now();
    const BatchPlan plan = batch_preprocess(segments);
    const auto pre_end = Clock::now();
    BatchResult result = batch_voxelize(plan, cfg);
    result.timing.preprocess_ns = ns_between(pre_start, pre_end);
    return result;
}

ItemCount effective_item_count(const BatchPlan& plan) {
    ItemCount count;
    count.live = plan.total_voxel_capacity;
    count.redundant =
        static_cast<std::int64_t>(plan.segments.size()) * (plan.max_steps + 1) -
        count.live;
    return count;
}

}  // namespace voxline
