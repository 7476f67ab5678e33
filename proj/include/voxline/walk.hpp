#pragma once

// Reference voxelizer: a candidate walk that steps voxel by voxel from the
// rounded start to the rounded end, choosing among up to seven
// octant-directed neighbors the one nearest the line. Independent of the
// parametric sampler; used as the correctness oracle.

#include <cstddef>
#include <optional>
#include <vector>

#include "voxline/geometry.hpp"
#include "voxline/parametric.hpp"

namespace voxline {

// The neighbors of `origin` reachable by one step whose nonzero axis
// deltas all match the sign of the segment direction. 7 candidates for a
// fully 3D direction, 3 when one direction component is zero, 1 when two
// are zero.
struct CandidateSet {
    Voxel origin;
    std::vector<Voxel> candidates;
};

// Enumerates the candidate set for the direction E - S. Throws
// std::invalid_argument when current is already the rounded end voxel
// (no step remains to choose).
CandidateSet candidate_voxels(const Voxel& current, const Segment& seg);

// One decision record of the walk, for verifying local optimality: the
// voxel appended at this step and every candidate it beat.
struct WalkStep {
    Voxel chosen;
    std::vector<Voxel> rejected;
};

// Walks from round_point(S) to round_point(E). Each step appends the
// candidate with minimum point_line_distance, ties broken by maximal
// projection onto (E - S) and then lexicographically. Two refinements make
// the greedy rule well-defined on all inputs:
//  - candidates never step an axis past the end voxel's coordinate
//    (monotone steps cannot recover from an overshoot, so the raw greedy
//    rule would diverge on lines that drift near a lattice plane);
//  - when the appended voxel is adjacent to the voxel before the current
//    tip, the tip is first removed: it was a skippable corner, and the
//    decomposition requires interior voxels to have exactly two adjacent
//    chain members.
// The result satisfies every VoxelChain invariant, including the interior
// two-neighbor property. Terminates within span_x + span_y + span_z + 1
// steps; exceeding that guard throws std::logic_error (implementation bug).
// `trace`, when non-null, receives one WalkStep per executed step.
VoxelChain voxelize_walk(const Segment& seg,
                         std::vector<WalkStep>* trace = nullptr);

// One differing position between two chains being compared.
struct ChainDiff {
    std::size_t index = 0;
    std::optional<Voxel> a;    // voxel of chain a at index, if present
    std::optional<Voxel> b;    // voxel of chain b at index, if present
    double dist_a = 0.0;       // distance of a's voxel to the line (NaN if absent)
    double dist_b = 0.0;       // distance of b's voxel to the line (NaN if absent)
    bool tie = false;          // |dist_a - dist_b| <= eps with both present
};

struct EquivalenceReport {
    bool identical = false;    // chains equal voxel for voxel
    bool acceptable = false;   // every differing position is a distance tie
    std::vector<ChainDiff> diffs;
};

// Compares two chains for the same segment position by position. The
// chains are acceptable-equivalent when every differing index holds two
// voxels whose line distances agree within eps (and the lengths match).
// Throws std::invalid_argument when the chains voxelize different segments.
EquivalenceReport chains_equivalent(const VoxelChain& a, const VoxelChain& b,
                                    double eps);

}  // namespace voxline
