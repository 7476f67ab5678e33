// voxline: segment voxelization toolkit CLI.
//
//   voxline voxelize --start x,y,z --end x,y,z --method parametric|walk
//                    --out PATH [--format xyz|vox3]
//   voxline batch    --input segments.csv --out PATH [--format xyz|vox3]
//                    [--workers T] [--group-size G]
//   voxline bench    --scenario single|fixed-batch|arbitrary [--seed N]
//                    [--reps R] [--warmup W] [--scale F] [--report csv]
//                    [--report-json json] [--workers T] [--group-size G]
//
// Exit codes: 0 success, 2 malformed input or flags, 3 I/O failure.

#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "voxline/batch.hpp"
#include "voxline/bench.hpp"
#include "voxline/formats.hpp"
#include "voxline/parametric.hpp"
#include "voxline/walk.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitIoFailure = 3;

// Thrown for problems with output files, which exit 3 rather than 2.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

voxline::Point3 to_point(const std::vector<double>& xyz) {
    const voxline::Point3 p{xyz[0], xyz[1], xyz[2]};
    if (!voxline::finite(p)) {
        throw std::invalid_argument("coordinates must be finite");
    }
    return p;
}

void write_output_file(const std::string& path, const std::string& format,
                       const std::vector<std::vector<voxline::Voxel>>& chains,
                       bool multi) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open output file: " + path);
    }
    if (format == "xyz") {
        if (multi) {
            voxline::write_xyz_multi(out, chains);
        } else {
            voxline::write_xyz(out, chains.front());
        }
    } else {
        if (multi) {
            voxline::write_vox3_multi(out, chains);
        } else {
            voxline::write_vox3(out, chains.front());
        }
    }
    out.flush();
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

int default_workers() {
    return std::max(1u, std::thread::hardware_concurrency());
}

struct VoxelizeArgs {
    std::vector<double> start;
    std::vector<double> end;
    std::string method = "parametric";
    std::string out;
    std::string format = "xyz";
};

int cmd_voxelize(const VoxelizeArgs& args) {
    const voxline::Segment seg{to_point(args.start), to_point(args.end)};
    const voxline::VoxelChain chain = args.method == "walk"
                                          ? voxline::voxelize_walk(seg)
                                          : voxline::voxelize_parametric(seg);
    write_output_file(args.out, args.format, {chain.voxels}, false);
    return kExitOk;
}

struct BatchArgs {
    std::string input;
    std::string out;
    std::string format = "xyz";
    int workers = default_workers();
    int group_size = 64;
};

int cmd_batch(const BatchArgs& args) {
    std::ifstream in(args.input);
    if (!in) {
        throw std::invalid_argument("cannot read input file: " + args.input);
    }
    const std::vector<voxline::Segment> segments = voxline::read_segments_csv(in);
    if (segments.empty()) {
        throw std::invalid_argument("input contains no segments: " + args.input);
    }

    const voxline::PartitionConfig cfg{args.group_size, args.workers};
    const voxline::BatchResult result = voxline::run_batch(segments, cfg);

    std::vector<std::vector<voxline::Voxel>> chains;
    chains.reserve(result.chains.size());
    for (const voxline::VoxelChain& chain : result.chains) {
        chains.push_back(chain.voxels);
    }
    write_output_file(args.out, args.format, chains, true);

    std::fprintf(stderr,
                 "batch: %zu segments, %lld voxels | preprocess %.3f ms, "
                 "kernel %.3f ms, assemble %.3f ms\n",
                 segments.size(), static_cast<long long>(result.total_voxels),
                 result.timing.preprocess_ns / 1e6,
                 result.timing.kernel_ns / 1e6,
                 result.timing.assemble_ns / 1e6);
    return kExitOk;
}

struct BenchArgs {
    std::string scenario;
    std::uint64_t seed = 1;
    int reps = 5;
    int warmup = 2;
    double scale = 1.0;
    std::string report_csv;
    std::string report_json;
    int workers = default_workers();
    int group_size = 64;
};

int cmd_bench(const BenchArgs& args) {
    voxline::ScenarioKind kind;
    if (args.scenario == "single") {
        kind = voxline::ScenarioKind::single_segment;
    } else if (args.scenario == "fixed-batch") {
        kind = voxline::ScenarioKind::fixed_batch;
    } else if (args.scenario == "arbitrary") {
        kind = voxline::ScenarioKind::arbitrary_batch;
    } else {
        throw std::invalid_argument("unknown scenario: " + args.scenario);
    }

    const voxline::Scenario scenario = voxline::default_scenario(
        kind, args.seed, args.reps, args.warmup, args.scale);
    const voxline::PartitionConfig cfg{args.group_size, args.workers};
    const std::vector<voxline::BenchRecord> records =
        voxline::run_scenario(scenario, cfg);

    voxline::print_report_table(std::cout, records);

    if (!args.report_csv.empty()) {
        std::ofstream out(args.report_csv);
        if (!out) throw IoError("cannot open report file: " + args.report_csv);
        voxline::write_report_csv(out, records);
        out.flush();
        if (!out) throw IoError("write failed: " + args.report_csv);
    }
    if (!args.report_json.empty()) {
        std::ofstream out(args.report_json);
        if (!out) throw IoError("cannot open report file: " + args.report_json);
        voxline::write_report_json(out, records, scenario, cfg, args.scale);
        out.flush();
        if (!out) throw IoError("write failed: " + args.report_json);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"3D line-segment voxelization toolkit"};
    app.require_subcommand(1);

    VoxelizeArgs vox;
    CLI::App* voxelize = app.add_subcommand("voxelize", "Voxelize one segment");
    voxelize->add_option("--start", vox.start, "Segment start as x,y,z")
        ->required()->delimiter(',')->expected(3);
    voxelize->add_option("--end", vox.end, "Segment end as x,y,z")
        ->required()->delimiter(',')->expected(3);
    voxelize->add_option("--method", vox.method, "Voxelizer to use")
        ->check(CLI::IsMember({"parametric", "walk"}));
    voxelize->add_option("--out", vox.out, "Output path")->required();
    voxelize->add_option("--format", vox.format, "Output format")
        ->check(CLI::IsMember({"xyz", "vox3"}));

    BatchArgs bat;
    CLI::App* batch = app.add_subcommand("batch", "Voxelize a CSV of segments");
    batch->add_option("--input", bat.input, "CSV with sx,sy,sz,ex,ey,ez lines")
        ->required();
    batch->add_option("--out", bat.out, "Output path")->required();
    batch->add_option("--format", bat.format, "Output format")
        ->check(CLI::IsMember({"xyz", "vox3"}));
    batch->add_option("--workers", bat.workers, "Worker thread count")
        ->check(CLI::PositiveNumber);
    batch->add_option("--group-size", bat.group_size, "Segments per work group")
        ->check(CLI::PositiveNumber);

    BenchArgs ben;
    CLI::App* bench = app.add_subcommand("bench", "Run a benchmark scenario");
    bench->add_option("--scenario", ben.scenario,
                      "single | fixed-batch | arbitrary")->required();
    bench->add_option("--seed", ben.seed, "Workload seed");
    bench->add_option("--reps", ben.reps, "Measured repetitions")
        ->check(CLI::PositiveNumber);
    bench->add_option("--warmup", ben.warmup, "Unmeasured warmup runs")
        ->check(CLI::NonNegativeNumber);
    bench->add_option("--scale", ben.scale, "Parameter-point scale factor")
        ->check(CLI::PositiveNumber);
    bench->add_option("--report", ben.report_csv, "CSV report path");
    bench->add_option("--report-json", ben.report_json, "JSON report path");
    bench->add_option("--workers", ben.workers, "Worker thread count")
        ->check(CLI::PositiveNumber);
    bench->add_option("--group-size", ben.group_size, "Segments per work group")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // help text, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (voxelize->parsed()) return cmd_voxelize(vox);
        if (batch->parsed()) return cmd_batch(bat);
        return cmd_bench(ben);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::range_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitIoFailure;
    }
}
