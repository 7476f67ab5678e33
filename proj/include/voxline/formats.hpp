#pragma once

// On-disk formats: CSV segment lists in, xyz text and VOX3 binary voxel
// chains out. VOX3 is little-endian with a fixed 16-byte header:
//   bytes 0-3   magic "VOX3"
//   bytes 4-7   u32 version (1 = plain voxel list, 2 = multi-segment)
//   bytes 8-15  u64 count of 12-byte voxel records that follow the header
//               (and, in version 2, the segment table)
// Version 2 inserts after the header: u64 segment_count followed by one
// u64 voxel count per segment; the voxel records then run concatenated in
// segment order. Each voxel record is three little-endian i32 (x, y, z).

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "voxline/geometry.hpp"

namespace voxline {

// --- segment input ---------------------------------------------------------

// Parses a CSV of segments: six finite decimal fields per line
// (sx,sy,sz,ex,ey,ez); lines starting with '#' and blank lines are
// ignored. Throws std::invalid_argument naming the 1-based line number on
// any malformed line.
std::vector<Segment> read_segments_csv(std::istream& in);

// --- xyz text output -------------------------------------------------------

// One "x y z\n" line per voxel, in chain order.
void write_xyz(std::ostream& out, const std::vector<Voxel>& voxels);

// Concatenated chains with a "# segment i" comment line before each.
void write_xyz_multi(std::ostream& out,
                     const std::vector<std::vector<Voxel>>& chains);

// Parses xyz text back (comment lines skipped); used by tests.
std::vector<Voxel> read_xyz(std::istream& in);

// --- VOX3 binary -----------------------------------------------------------

void write_vox3(std::ostream& out, const std::vector<Voxel>& voxels);

void write_vox3_multi(std::ostream& out,
                      const std::vector<std::vector<Voxel>>& chains);

// Reads either version; a version-1 file yields one chain. Throws
// std::invalid_argument on bad magic/version/truncation.
std::vector<std::vector<Voxel>> read_vox3(std::istream& in);

// Flattened voxel list of either version, in file order.
std::vector<Voxel> read_vox3_flat(std::istream& in);

}  // namespace voxline
