// Python bindings for the voxelization core. Points are (x, y, z) float
// triples, voxels are (x, y, z) int triples, segments are (start, end)
// pairs of point triples; chains come back as lists of voxel tuples.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "voxline/batch.hpp"
#include "voxline/bench.hpp"
#include "voxline/geometry.hpp"
#include "voxline/parametric.hpp"
#include "voxline/walk.hpp"

namespace py = pybind11;

namespace {

using PyPoint = std::array<double, 3>;
using PyVoxel = std::tuple<int, int, int>;
using PySegment = std::pair<PyPoint, PyPoint>;

voxline::Point3 to_point(const PyPoint& p) { return {p[0], p[1], p[2]}; }

voxline::Segment to_segment(const PySegment& s) {
    return {to_point(s.first), to_point(s.second)};
}

PyVoxel from_voxel(const voxline::Voxel& v) { return {v.x, v.y, v.z}; }

std::vector<PyVoxel> from_chain(const voxline::VoxelChain& chain) {
    std::vector<PyVoxel> out;
    out.reserve(chain.voxels.size());
    for (const voxline::Voxel& v : chain.voxels) out.push_back(from_voxel(v));
    return out;
}

voxline::VoxelChain to_chain(const std::vector<PyVoxel>& voxels,
                             const PySegment& segment) {
    voxline::VoxelChain chain;
    chain.source = to_segment(segment);
    chain.voxels.reserve(voxels.size());
    for (const PyVoxel& v : voxels) {
        chain.voxels.push_back(
            {std::get<0>(v), std::get<1>(v), std::get<2>(v)});
    }
    return chain;
}

py::dict timing_dict(const voxline::BatchTiming& t) {
    py::dict d;
    d["preprocess_ns"] = t.preprocess_ns;
    d["kernel_ns"] = t.kernel_ns;
    d["assemble_ns"] = t.assemble_ns;
    return d;
}

py::dict result_dict(const voxline::BatchResult& result) {
    py::list chains;
    for (const voxline::VoxelChain& chain : result.chains) {
        chains.append(from_chain(chain));
    }
    py::dict d;
    d["chains"] = chains;
    d["total_voxels"] = result.total_voxels;
    d["timing"] = timing_dict(result.timing);
    return d;
}

}  // namespace

PYBIND11_MODULE(_voxline, m) {
    m.doc() = "3D line-segment voxelization toolkit";

    // --- geometry ---
    m.def("segment_length",
          [](const PyPoint& s, const PyPoint& e) {
              return voxline::segment_length({to_point(s), to_point(e)});
          },
          py::arg("start"), py::arg("end"),
          "Euclidean length of the segment");
    m.def("round_point",
          [](const PyPoint& p) {
              return from_voxel(voxline::round_point(to_point(p)));
          },
          py::arg("point"),
          "Nearest voxel; halfway cases round away from zero");
    m.def("point_line_distance",
          [](const PyPoint& p, const PyPoint& s, const PyPoint& e) {
              return voxline::point_line_distance(to_point(p),
                                                  {to_point(s), to_point(e)});
          },
          py::arg("point"), py::arg("start"), py::arg("end"),
          "Distance from a point to the infinite line through start/end");

    // --- parametric voxelizer ---
    m.def("make_plan",
          [](const PyPoint& s, const PyPoint& e) {
              const voxline::ParametricPlan plan =
                  voxline::make_plan({to_point(s), to_point(e)});
              return std::make_tuple(plan.step_count,
                                     PyPoint{plan.step_vector.x,
                                             plan.step_vector.y,
                                             plan.step_vector.z});
          },
          py::arg("start"), py::arg("end"),
          "Step count N and step vector W for a segment");
    m.def("voxelize_parametric",
          [](const PyPoint& s, const PyPoint& e) {
              return from_chain(
                  voxline::voxelize_parametric({to_point(s), to_point(e)}));
          },
          py::arg("start"), py::arg("end"),
          "Sample-and-round voxel chain of the segment");
    m.def("chain_length_bounds",
          [](const PyPoint& s, const PyPoint& e) {
              return voxline::chain_length_bounds({to_point(s), to_point(e)});
          },
          py::arg("start"), py::arg("end"),
          "Inclusive (min, max) chain length for the segment");

    // --- reference walk ---
    m.def("candidate_voxels",
          [](const PyVoxel& current, const PyPoint& s, const PyPoint& e) {
              const voxline::CandidateSet set = voxline::candidate_voxels(
                  {std::get<0>(current), std::get<1>(current),
                   std::get<2>(current)},
                  {to_point(s), to_point(e)});
              std::vector<PyVoxel> out;
              out.reserve(set.candidates.size());
              for (const voxline::Voxel& v : set.candidates) {
                  out.push_back(from_voxel(v));
              }
              return out;
          },
          py::arg("current"), py::arg("start"), py::arg("end"),
          "Octant-directed neighbor candidates of a voxel");
    m.def("voxelize_walk",
          [](const PyPoint& s, const PyPoint& e) {
              return from_chain(
                  voxline::voxelize_walk({to_point(s), to_point(e)}));
          },
          py::arg("start"), py::arg("end"),
          "Candidate-walk voxel chain of the segment (reference oracle)");
    m.def("chains_equivalent",
          [](const std::vector<PyVoxel>& a, const std::vector<PyVoxel>& b,
             const PySegment& segment, double eps) {
              const voxline::EquivalenceReport report = voxline::chains_equivalent(
                  to_chain(a, segment), to_chain(b, segment), eps);
              py::list diffs;
              for (const voxline::ChainDiff& d : report.diffs) {
                  py::dict entry;
                  entry["index"] = d.index;
                  entry["a"] = d.a ? py::cast(from_voxel(*d.a)) : py::none();
                  entry["b"] = d.b ? py::cast(from_voxel(*d.b)) : py::none();
                  entry["dist_a"] = d.dist_a;
                  entry["dist_b"] = d.dist_b;
                  entry["tie"] = d.tie;
                  diffs.append(entry);
              }
              py::dict out;
              out["identical"] = report.identical;
              out["acceptable"] = report.acceptable;
              out["diffs"] = diffs;
              return out;
          },
          py::arg("chain_a"), py::arg("chain_b"), py::arg("segment"),
          py::arg("eps") = 1e-9,
          "Position-by-position chain comparison with distance-tie tolerance");

    // --- batch engine ---
    py::class_<voxline::BatchPlan>(m, "BatchPlan")
        .def_property_readonly("max_steps",
                               [](const voxline::BatchPlan& p) { return p.max_steps; })
        .def_property_readonly(
            "total_voxel_capacity",
            [](const voxline::BatchPlan& p) { return p.total_voxel_capacity; })
        .def_property_readonly("step_counts",
                               [](const voxline::BatchPlan& p) {
                                   std::vector<std::int64_t> out;
                                   out.reserve(p.per_segment.size());
                                   for (const auto& sp : p.per_segment) {
                                       out.push_back(sp.step_count);
                                   }
                                   return out;
                               })
        .def_property_readonly("output_offsets",
                               [](const voxline::BatchPlan& p) {
                                   std::vector<std::int64_t> out;
                                   out.reserve(p.per_segment.size());
                                   for (const auto& sp : p.per_segment) {
                                       out.push_back(sp.output_offset);
                                   }
                                   return out;
                               })
        .def("__len__",
             [](const voxline::BatchPlan& p) { return p.segments.size(); });

    m.def("batch_preprocess",
          [](const std::vector<PySegment>& segments) {
              std::vector<voxline::Segment> native;
              native.reserve(segments.size());
              for (const PySegment& s : segments) native.push_back(to_segment(s));
              return voxline::batch_preprocess(native);
          },
          py::arg("segments"),
          "Per-segment plans, N_max, and output offsets for a batch");
    m.def("kernel_work_item",
          [](const voxline::BatchPlan& plan, std::int64_t i, std::int64_t k)
              -> std::optional<PyVoxel> {
              const std::optional<voxline::Voxel> v =
                  voxline::kernel_work_item(plan, i, k);
              if (!v) return std::nullopt;
              return from_voxel(*v);
          },
          py::arg("plan"), py::arg("segment_index"), py::arg("k"),
          "One work item; None when the item is redundant");
    m.def("batch_voxelize",
          [](const voxline::BatchPlan& plan, int workers, int group_size) {
              return result_dict(
                  voxline::batch_voxelize(plan, {group_size, workers}));
          },
          py::arg("plan"), py::arg("workers") = 1, py::arg("group_size") = 64,
          "Run the batch kernel + assemble over a worker pool");
    m.def("run_batch",
          [](const std::vector<PySegment>& segments, int workers,
             int group_size) {
              std::vector<voxline::Segment> native;
              native.reserve(segments.size());
              for (const PySegment& s : segments) native.push_back(to_segment(s));
              return result_dict(
                  voxline::run_batch(native, {group_size, workers}));
          },
          py::arg("segments"), py::arg("workers") = 1, py::arg("group_size") = 64,
          "Preprocess + batch-voxelize a segment list");
    m.def("effective_item_count",
          [](const voxline::BatchPlan& plan) {
              const voxline::ItemCount c = voxline::effective_item_count(plan);
              return std::make_pair(c.live, c.redundant);
          },
          py::arg("plan"), "(live, redundant) work items of the batch grid");

    // --- bench harness ---
    m.def("gen_segment_of_length",
          [](std::int64_t target, std::uint64_t seed) -> PySegment {
              const voxline::Segment seg =
                  voxline::gen_segment_of_length(target, seed);
              return {{seg.start.x, seg.start.y, seg.start.z},
                      {seg.end.x, seg.end.y, seg.end.z}};
          },
          py::arg("target_voxels"), py::arg("seed"),
          "Deterministic segment with exactly the requested step count");
    m.def("gen_arbitrary_batch",
          [](std::int64_t total, std::int64_t count, std::uint64_t seed) {
              std::vector<PySegment> out;
              for (const voxline::Segment& seg :
                   voxline::gen_arbitrary_batch(total, count, seed)) {
                  out.push_back({{seg.start.x, seg.start.y, seg.start.z},
                                 {seg.end.x, seg.end.y, seg.end.z}});
              }
              return out;
          },
          py::arg("total_voxels_target"), py::arg("segment_count"),
          py::arg("seed"),
          "Deterministic batch whose step counts sum to the target");
    m.def("compute_mvps", &voxline::compute_mvps, py::arg("total_voxels"),
          py::arg("elapsed_ms"), "Throughput in mega-voxels per second");
}
