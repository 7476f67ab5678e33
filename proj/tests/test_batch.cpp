#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "test_support.hpp"
#include "voxline/batch.hpp"
#include "voxline/bench.hpp"

using voxline::BatchPlan;
using voxline::BatchResult;
using voxline::PartitionConfig;
using voxline::Segment;
using voxline::SplitMix64;
using voxline::Voxel;

namespace {

// Mixed-length deterministic batch shared by the scheduling tests.
std::vector<Segment> mixed_batch(int count, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Segment> segments;
    segments.reserve(count);
    for (int i = 0; i < count; ++i) {
        segments.push_back(i % 3 == 0
                               ? testsupport::random_long_segment(rng, 500.0)
                               : testsupport::random_segment(rng, -50.0, 50.0));
    }
    return segments;
}

}  // namespace

TEST_CASE("batch_preprocess: plans, offsets, and capacity") {
    const BatchPlan plan =
        voxline::batch_preprocess({{{0, 0, 0}, {5, 0, 0}}, {{0, 0, 0}, {3, 3, 3}}});
    REQUIRE(plan.per_segment.size() == 2);
    CHECK(plan.per_segment[0].step_count == 5);
    CHECK(plan.per_segment[1].step_count == 5);
    CHECK(plan.max_steps == 5);
    CHECK(plan.per_segment[0].output_offset == 0);
    CHECK(plan.per_segment[1].output_offset == 6);
    CHECK(plan.total_voxel_capacity == 12);
}

TEST_CASE("batch_preprocess: empty batch is rejected") {
    CHECK_THROWS_AS(voxline::batch_preprocess({}), std::invalid_argument);
}

TEST_CASE("batch_preprocess: uniform replication") {
    const std::vector<Segment> segments(1024, Segment{{0, 0, 0}, {5, 0, 0}});
    const BatchPlan plan = voxline::batch_preprocess(segments);
    CHECK(plan.max_steps == 5);
    CHECK(plan.total_voxel_capacity == 6144);
}

TEST_CASE("kernel_work_item: live and redundant items") {
    const BatchPlan plan =
        voxline::batch_preprocess({{{0, 0, 0}, {5, 0, 0}}, {{0, 0, 0}, {2, 1, 0}}});
    // Segment 1 has N=2 and W=(1, 0.5, 0): G_2 = (2, 1, 0).
    CHECK(voxline::kernel_work_item(plan, 1, 2) == Voxel{2, 1, 0});
    // k=5 exceeds N_1=2: redundant, no output.
    CHECK_FALSE(voxline::kernel_work_item(plan, 1, 5).has_value());
    CHECK(voxline::kernel_work_item(plan, 0, 0) == Voxel{0, 0, 0});
}

TEST_CASE("kernel_work_item: indices outside the grid are rejected") {
    const BatchPlan plan = voxline::batch_preprocess({{{0, 0, 0}, {5, 0, 0}}});
    CHECK_THROWS_AS(voxline::kernel_work_item(plan, 1, 0), std::out_of_range);
    CHECK_THROWS_AS(voxline::kernel_work_item(plan, -1, 0), std::out_of_range);
    CHECK_THROWS_AS(voxline::kernel_work_item(plan, 0, 6), std::out_of_range);
    CHECK_THROWS_AS(voxline::kernel_work_item(plan, 0, -1), std::out_of_range);
}

TEST_CASE("kernel_work_item: pure function of plan and indices") {
    const BatchPlan plan = voxline::batch_preprocess(mixed_batch(16, 401));
    for (std::int64_t i = 0; i < 16; ++i) {
        for (std::int64_t k = 0; k <= plan.max_steps; k += 7) {
            CHECK(voxline::kernel_work_item(plan, i, k) ==
                  voxline::kernel_work_item(plan, i, k));
        }
    }
}

TEST_CASE("batch_voxelize: single segment equals the sequential voxelizer") {
    const Segment seg{{0, 0, 0}, {5, 0, 0}};
    const BatchResult result =
        voxline::batch_voxelize(voxline::batch_preprocess({seg}), {4, 2});
    REQUIRE(result.chains.size() == 1);
    CHECK(result.chains[0].voxels == voxline::voxelize_parametric(seg).voxels);
}

TEST_CASE("batch_voxelize: redundant items leak nothing into short chains") {
    // N_max = 5 comes from the long segment; the short one has N = 2 and must
    // still produce exactly its 3 voxels.
    const BatchPlan plan =
        voxline::batch_preprocess({{{0, 0, 0}, {5, 0, 0}}, {{0, 0, 0}, {2, 1, 0}}});
    const BatchResult result = voxline::batch_voxelize(plan, {64, 1});
    CHECK(result.chains[1].voxels ==
          std::vector<Voxel>{{0, 0, 0}, {1, 1, 0}, {2, 1, 0}});
}

TEST_CASE("batch_voxelize: identical output for every partitioning") {
    const std::vector<Segment> segments = mixed_batch(300, 402);
    const BatchPlan plan = voxline::batch_preprocess(segments);

    std::vector<std::vector<Voxel>> sequential;
    sequential.reserve(segments.size());
    for (const Segment& seg : segments) {
        sequential.push_back(voxline::voxelize_parametric(seg).voxels);
    }

    for (const int group_size : {1, 8, 64, 256}) {
        for (const int workers : {1, 2, 4, 8}) {
            const BatchResult result =
                voxline::batch_voxelize(plan, {group_size, workers});
            REQUIRE(result.chains.size() == segments.size());
            for (std::size_t i = 0; i < segments.size(); ++i) {
                INFO("group_size=" << group_size << " workers=" << workers
                                   << " segment=" << i);
                CHECK(result.chains[i].voxels == sequential[i]);
            }
        }
    }
}

TEST_CASE("batch_voxelize: conservation of voxels and work items") {
    const std::vector<Segment> segments = mixed_batch(128, 403);
    const BatchPlan plan = voxline::batch_preprocess(segments);
    const BatchResult result = voxline::batch_voxelize(plan, {32, 4});

    std::int64_t total = 0;
    for (const voxline::VoxelChain& chain : result.chains) {
        total += static_cast<std::int64_t>(chain.voxels.size());
    }
    CHECK(result.total_voxels == total);

    const voxline::ItemCount items = voxline::effective_item_count(plan);
    CHECK(items.live + items.redundant ==
          static_cast<std::int64_t>(segments.size()) * (plan.max_steps + 1));
    CHECK(items.live == plan.total_voxel_capacity);
}

TEST_CASE("effective_item_count: known values") {
    {
        // N = [5, 2]: live = 9, redundant = 3.
        const BatchPlan plan = voxline::batch_preprocess(
            {{{0, 0, 0}, {5, 0, 0}}, {{0, 0, 0}, {2, 1, 0}}});
        const voxline::ItemCount items = voxline::effective_item_count(plan);
        CHECK(items.live == 9);
        CHECK(items.redundant == 3);
    }
    {
        // Uniform lengths: no redundancy.
        const BatchPlan plan = voxline::batch_preprocess(
            std::vector<Segment>(8, Segment{{0, 0, 0}, {5, 0, 0}}));
        CHECK(voxline::effective_item_count(plan).redundant == 0);
    }
    {
        const BatchPlan plan =
            voxline::batch_preprocess({{{0, 0, 0}, {3, 3, 3}}});
        CHECK(voxline::effective_item_count(plan).redundant == 0);
    }
}

TEST_CASE("batch_voxelize: configuration validation") {
    const BatchPlan plan = voxline::batch_preprocess({{{0, 0, 0}, {5, 0, 0}}});
    CHECK_THROWS_AS(voxline::batch_voxelize(plan, {0, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(voxline::batch_voxelize(plan, {64, 0}),
                    std::invalid_argument);
}

TEST_CASE("batch_voxelize: worker exceptions reach the caller") {
    // The second segment's samples overflow the 32-bit lattice inside the
    // kernel; the error must surface even from a pooled worker thread.
    const std::vector<Segment> segments{{{0, 0, 0}, {5, 0, 0}},
                                        {{0, 0, 0}, {3e9, 0, 0}}};
    CHECK_THROWS_AS(voxline::run_batch(segments, {1, 2}), std::range_error);
}

TEST_CASE("run_batch: fills all three timing phases") {
    const BatchResult result =
        voxline::run_batch(mixed_batch(64, 404), {16, 2});
    CHECK(result.timing.preprocess_ns >= 0);
    CHECK(result.timing.kernel_ns >= 0);
    CHECK(result.timing.assemble_ns >= 0);
    CHECK(result.total_voxels > 0);
    // batch_voxelize alone cannot know the preprocess cost.
    const BatchResult direct = voxline::batch_voxelize(
        voxline::batch_preprocess(mixed_batch(64, 404)), {16, 2});
    CHECK(direct.timing.preprocess_ns == 0);
}
