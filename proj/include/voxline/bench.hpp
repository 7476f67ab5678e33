#pragma once

// Benchmark harness: deterministic workload generation, the three
// experiment scenarios (single segment, fixed-length batch, arbitrary
// batch), median-of-repetitions timing, the MVps throughput metric, and
// CSV/JSON report emission.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "voxline/batch.hpp"
#include "voxline/geometry.hpp"

namespace voxline {

// splitmix64: tiny, seedable, identical output on every platform (the
// standard library distributions are not cross-implementation stable).
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) from the top 53 bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

enum class ScenarioKind { single_segment, fixed_batch, arbitrary_batch };

struct Scenario {
    ScenarioKind kind = ScenarioKind::single_segment;
    std::vector<std::int64_t> lengths;     // parameter points (single / fixed)
    std::int64_t segment_count = 1024;     // N_P (fixed / arbitrary)
    std::int64_t total_voxels_target = 0;  // arbitrary only
    std::uint64_t seed = 1;
    int repetitions = 5;
    int warmup = 2;
};

struct BenchRecord {
    std::string scenario;       // scenario label
    std::int64_t parameter = 0; // length (single/fixed) or total target
    std::string method;         // "sequential" or "batch"
    int workers = 1;
    int group_size = 1;
    double median_ms = 0.0;
    std::int64_t total_voxels = 0;
    double mvps = 0.0;
};

// Deterministic segment whose make_plan step count equals target_voxels:
// the direction is drawn uniformly on the sphere and the end point placed
// at distance target_voxels + 0.5. Directions whose dominant axis would
// push the step count to target + 1 are redrawn from the same stream, so
// the guarantee is exact. Deterministic per (target, seed).
Segment gen_segment_of_length(std::int64_t target_voxels, std::uint64_t seed);

// segment_count segments with log-uniform lengths in [1, 2 * mean],
// rescaled and then adjusted so the step counts sum to exactly
// total_voxels_target. Throws std::invalid_argument when the target is
// smaller than the segment count (each segment needs length >= 1).
std::vector<Segment> gen_arbitrary_batch(std::int64_t total_voxels_target,
                                         std::int64_t segment_count,
                                         std::uint64_t seed);

// Runs one scenario: for every parameter point, `warmup` unmeasured runs
// followed by `repetitions` measured runs on a monotonic clock, recording
// the median. The sequential method voxelizes one segment per call; the
// batch method goes through run_batch with cfg. Emits one record per
// (parameter, method).
std::vector<BenchRecord> run_scenario(const Scenario& s,
                                      const PartitionConfig& cfg);

// Throughput in mega-voxels per second: total / (ms / 1000) / 1e6.
// Throws std::invalid_argument when elapsed_ms <= 0.
double compute_mvps(std::int64_t total_voxels, double elapsed_ms);

// Report emission. The CSV column set is fixed; the JSON document carries
// the same records plus generation metadata (seed, scale, distribution).
extern const char* const kReportCsvHeader;

void write_report_csv(std::ostream& out, const std::vector<BenchRecord>& records);

void write_report_json(std::ostream& out, const std::vector<BenchRecord>& records,
                       const Scenario& s, const PartitionConfig& cfg,
                       double scale);

// Human-readable table of the records (stdout companion of the reports).
void print_report_table(std::ostream& out, const std::vector<BenchRecord>& records);

// Desk-scale scenario defaults; `scale` multiplies every parameter point
// (lengths, arbitrary total) with a floor of 1.
Scenario default_scenario(ScenarioKind kind, std::uint64_t seed, int repetitions,
                          int warmup, double scale);

}  // namespace voxline
