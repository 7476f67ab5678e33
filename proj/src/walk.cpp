#include "voxline/walk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

namespace voxline {

namespace {

inline Point3 center(const Voxel& v) {
    return {static_cast<double>(v.x), static_cast<double>(v.y),
            static_cast<double>(v.z)};
}

inline int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

// Squared cross-product magnitude of (p - S) with the direction; ordering
// candidates by this is ordering by point_line_distance without the
// common positive divisor and the sqrt.
inline double cross_sq(const Point3& p, const Point3& s, const Point3& d) {
    const double vx = p.x - s.x, vy = p.y - s.y, vz = p.z - s.z;
    const double cx = vy * d.z - vz * d.y;
    const double cy = vz * d.x - vx * d.z;
    const double cz = vx * d.y - vy * d.x;
    return cx * cx + cy * cy + cz * cz;
}

// Enumerates the up-to-7 one-step neighbors for per-axis step options
// sx/sy/sz (each 0 or +-1; 0 means the axis does not advance).
void enumerate_steps(const Voxel& cur, int sx, int sy, int sz,
                     std::vector<Voxel>& out) {
    out.clear();
    const int xs[2] = {0, sx}, ys[2] = {0, sy}, zs[2] = {0, sz};
    for (int ix = 0; ix < (sx ? 2 : 1); ++ix) {
        for (int iy = 0; iy < (sy ? 2 : 1); ++iy) {
            for (int iz = 0; iz < (sz ? 2 : 1); ++iz) {
                if (xs[ix] == 0 && ys[iy] == 0 && zs[iz] == 0) continue;
                out.push_back(
                    {cur.x + xs[ix], cur.y + ys[iy], cur.z + zs[iz]});
            }
        }
    }
}

}  // namespace

CandidateSet candidate_voxels(const Voxel& current, const Segment& seg) {
    if (current == round_point(seg.end)) {
        throw std::invalid_argument(
            "candidate_voxels: current voxel is already the end voxel");
    }
    const Point3 d = seg.end - seg.start;
    CandidateSet set;
    set.origin = current;
    enumerate_steps(current, sign_of(d.x), sign_of(d.y), sign_of(d.z),
                    set.candidates);
    return set;
}

VoxelChain voxelize_walk(const Segment& seg, std::vector<WalkStep>* trace) {
    VoxelChain chain;
    chain.source = seg;

    const Voxel start = round_point(seg.start);
    const Voxel end = round_point(seg.end);
    chain.voxels.push_back(start);
    if (start == end) return chain;

    const Point3 d = seg.end - seg.start;
    const std::int64_t guard =
        std::abs(static_cast<std::int64_t>(end.x) - start.x) +
        std::abs(static_cast<std::int64_t>(end.y) - start.y) +
        std::abs(static_cast<std::int64_t>(end.z) - start.z) + 1;

    Voxel cur = start;
    std::vector<Voxel> cands;
    cands.reserve(7);
    for (std::int64_t step = 0; cur != end; ++step) {
        if (step >= guard) {
            throw std::logic_error("voxelize_walk: termination guard exceeded");
        }
        // Candidates step each axis toward the end voxel and never past it:
        // steps are monotone, so crossing an end coordinate would make the
        // end unreachable.
        enumerate_steps(cur, sign_of(static_cast<double>(end.x) - cur.x),
                        sign_of(static_cast<double>(end.y) - cur.y),
                        sign_of(static_cast<double>(end.z) - cur.z), cands);

        Voxel best = cands.front();
        double best_dist = cross_sq(center(best), seg.start, d);
        double best_proj = (best.x - cur.x) * d.x + (best.y - cur.y) * d.y +
                           (best.z - cur.z) * d.z;
        for (std::size_t i = 1; i < cands.size(); ++i) {
            const Voxel& c = cands[i];
            const double dist = cross_sq(center(c), seg.start, d);
            const double proj = (c.x - cur.x) * d.x + (c.y - cur.y) * d.y +
                                (c.z - cur.z) * d.z;
            // Nearest to the line first; then the candidate advancing
            // furthest along the direction; then lexicographic (x, y, z).
            const bool better =
                dist < best_dist ||
                (dist == best_dist &&
                 (proj > best_proj ||
                  (proj == best_proj &&
                   std::tie(c.x, c.y, c.z) < std::tie(best.x, best.y, best.z))));
            if (better) {
                best = c;
                best_dist = dist;
                best_proj = proj;
            }
        }

        if (trace) {
            WalkStep ws;
            ws.chosen = best;
            for (const Voxel& c : cands) {
                if (c != best) ws.rejected.push_back(c);
            }
            trace->push_back(std::move(ws));
        }

        // The new voxel adjacent to the one before the tip means the tip is
        // a skippable corner; interior voxels must have exactly two
        // adjacent chain members, so drop it. Monotonicity keeps every
        // earlier voxel non-adjacent once the immediate predecessor is.
        while (chain.voxels.size() >= 2 &&
               voxels_adjacent(best, chain.voxels[chain.voxels.size() - 2])) {
            chain.voxels.pop_back();
        }
        chain.voxels.push_back(best);
        cur = best;
    }
    return chain;
}

EquivalenceReport chains_equivalent(const VoxelChain& a, const VoxelChain& b,
                                    double eps) {
    if (!(a.source == b.source)) {
        throw std::invalid_argument(
            "chains_equivalent: chains voxelize different segments");
    }
    EquivalenceReport report;
    report.identical = (a.voxels == b.voxels);
    if (report.identical) {
        report.acceptable = true;
        return report;
    }

    const bool has_line = segment_length(a.source) > 0.0;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    auto dist = [&](const Voxel& v) {
        return has_line ? point_line_distance(center(v), a.source) : nan;
    };

    const std::size_t na = a.voxels.size(), nb = b.voxels.size();
    bool all_ties = true;
    for (std::size_t i = 0; i < std::max(na, nb); ++i) {
        const bool in_a = i < na, in_b = i < nb;
        if (in_a && in_b && a.voxels[i] == b.voxels[i]) continue;
        ChainDiff diff;
        diff.index = i;
        diff.dist_a = diff.dist_b = nan;
        if (in_a) {
            diff.a = a.voxels[i];
            diff.dist_a = dist(a.voxels[i]);
        }
        if (in_b) {
            diff.b = b.voxels[i];
            diff.dist_b = dist(b.voxels[i]);
        }
        diff.tie = in_a && in_b && has_line &&
                   std::abs(diff.dist_a - diff.dist_b) <= eps;
        all_ties = all_ties && diff.tie;
        report.diffs.push_back(diff);
    }
    report.acceptable = (na == nb) && all_ties;
    return report;
}

}  // namespace voxline
