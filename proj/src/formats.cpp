#include "voxline/formats.hpp"

#include <array>
#include <cctype>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>

namespace voxline {

namespace {

constexpr char kMagic[4] = {'V', 'O', 'X', '3'};

// Little-endian fixed-width writers/readers. The host is assumed
// little-endian (x86/ARM in practice); the byte-level layout is what the
// tests pin down.
template <typename T>
void write_le(std::ostream& out, T value) {
    std::array<unsigned char, sizeof(T)> bytes;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
        bytes[i] = static_cast<unsigned char>(
            (static_cast<std::uint64_t>(value) >> (8 * i)) & 0xff);
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

template <typename T>
T read_le(std::istream& in) {
    std::array<unsigned char, sizeof(T)> bytes;
    in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
    if (!in) throw std::invalid_argument("vox3: truncated file");
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
        value |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
    }
    return static_cast<T>(value);
}

void write_header(std::ostream& out, std::uint32_t version, std::uint64_t count) {
    out.write(kMagic, sizeof(kMagic));
    write_le<std::uint32_t>(out, version);
    write_le<std::uint64_t>(out, count);
}

std::uint32_t read_header(std::istream& in, std::uint64_t& count) {
    char magic[4];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
        throw std::invalid_argument("vox3: bad magic (not a VOX3 file)");
    }
    const auto version = read_le<std::uint32_t>(in);
    if (version != 1 && version != 2) {
        throw std::invalid_argument("vox3: unsupported version " +
                                    std::to_string(version));
    }
    count = read_le<std::uint64_t>(in);
    return version;
}

void write_records(std::ostream& out, const std::vector<Voxel>& voxels) {
    for (const Voxel& v : voxels) {
        write_le<std::int32_t>(out, v.x);
        write_le<std::int32_t>(out, v.y);
        write_le<std::int32_t>(out, v.z);
    }
}

std::vector<Voxel> read_records(std::istream& in, std::uint64_t count) {
    std::vector<Voxel> voxels;
    voxels.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        Voxel v;
        v.x = read_le<std::int32_t>(in);
        v.y = read_le<std::int32_t>(in);
        v.z = read_le<std::int32_t>(in);
        voxels.push_back(v);
    }
    return voxels;
}

bool blank(const std::string& line) {
    for (const char c : line) {
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

std::vector<Segment> read_segments_csv(std::istream& in) {
    std::vector<Segment> segments;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line) || line[0] == '#') continue;
        std::array<double, 6> fields{};
        std::size_t n = 0;
        std::stringstream ss(line);
        std::string cell;
        bool bad = false;
        while (std::getline(ss, cell, ',')) {
            if (n >= fields.size()) {
                bad = true;
                break;
            }
            try {
                std::size_t used = 0;
                fields[n] = std::stod(cell, &used);
                while (used < cell.size() &&
                       std::isspace(static_cast<unsigned char>(cell[used]))) {
                    ++used;
                }
                if (used != cell.size() || !std::isfinite(fields[n])) bad = true;
            } catch (const std::exception&) {
                bad = true;
            }
            if (bad) break;
            ++n;
        }
        if (bad || n != fields.size()) {
            throw std::invalid_argument(
                "segments csv: line " + std::to_string(line_no) +
                ": expected 6 finite decimal fields (sx,sy,sz,ex,ey,ez)");
        }
        segments.push_back({{fields[0], fields[1], fields[2]},
                            {fields[3], fields[4], fields[5]}});
    }
    return segments;
}

void write_xyz(std::ostream& out, const std::vector<Voxel>& voxels) {
    for (const Voxel& v : voxels) {
        out << v.x << ' ' << v.y << ' ' << v.z << '\n';
    }
}

void write_xyz_multi(std::ostream& out,
                     const std::vector<std::vector<Voxel>>& chains) {
    for (std::size_t i = 0; i < chains.size(); ++i) {
        out << "# segment " << i << '\n';
        write_xyz(out, chains[i]);
    }
}

std::vector<Voxel> read_xyz(std::istream& in) {
    std::vector<Voxel> voxels;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line) || line[0] == '#') continue;
        Voxel v;
        long long x, y, z;
        std::stringstream ss(line);
        if (!(ss >> x >> y >> z)) {
            throw std::invalid_argument("xyz: line " + std::to_string(line_no) +
                                        ": expected three integers");
        }
        v.x = static_cast<std::int32_t>(x);
        v.y = static_cast<std::int32_t>(y);
        v.z = static_cast<std::int32_t>(z);
        voxels.push_back(v);
    }
    return voxels;
}

void write_vox3(std::ostream& out, const std::vector<Voxel>& voxels) {
    write_header(out, 1, voxels.size());
    write_records(out, voxels);
}

void write_vox3_multi(std::ostream& out,
                      const std::vector<std::vector<Voxel>>& chains) {
    std::uint64_t total = 0;
    for (const auto& chain : chains) total += chain.size();
    write_header(out, 2, total);
    write_le<std::uint64_t>(out, chains.size());
    for (const auto& chain : chains) {
        write_le<std::uint64_t>(out, chain.size());
    }
    for (const auto& chain : chains) write_records(out, chain);
}

std::vector<std::vector<Voxel>> read_vox3(std::istream& in) {
    std::uint64_t total = 0;
    const std::uint32_t version = read_header(in, total);
    std::vector<std::vector<Voxel>> chains;
    if (version == 1) {
        chains.push_back(read_records(in, total));
        return chains;
    }
    const auto segment_count = read_le<std::uint64_t>(in);
    std::vector<std::uint64_t> counts;
    counts.reserve(segment_count);
    std::uint64_t sum = 0;
    for (std::uint64_t i = 0; i < segment_count; ++i) {
        counts.push_back(read_le<std::uint64_t>(in));
        sum += counts.back();
    }
    if (sum != total) {
        throw std::invalid_argument(
            "vox3: segment counts disagree with the header total");
    }
    chains.reserve(segment_count);
    for (const std::uint64_t count : counts) {
        chains.push_back(read_records(in, count));
    }
    return chains;
}

std::vector<Voxel> read_vox3_flat(std::istream& in) {
    std::vector<Voxel> flat;
    for (const auto& chain : read_vox3(in)) {
        flat.insert(flat.end(), chain.begin(), chain.end());
    }
    return flat;
}

}  // namespace voxline
