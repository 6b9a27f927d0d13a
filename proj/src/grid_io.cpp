#include "tropsand/grid_io.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace tropsand {

namespace {

constexpr std::array<char, 4> kMagic{'T', 'S', 'P', 'L'};

template <typename T>
void put(std::ostream& out, T value, int width = sizeof(T)) {
    auto raw = static_cast<std::uint64_t>(static_cast<std::int64_t>(value));
    if constexpr (std::is_unsigned_v<T>) raw = static_cast<std::uint64_t>(value);
    for (int b = 0; b < width; ++b) out.put(static_cast<char>((raw >> (8 * b)) & 0xFF));
}

std::uint64_t get_raw(std::istream& in, int width) {
    std::uint64_t raw = 0;
    for (int b = 0; b < width; ++b) {
        const int c = in.get();
        if (c == std::char_traits<char>::eof()) throw GridFormatError("truncated grid file");
        raw |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * b);
    }
    return raw;
}

std::int64_t get_signed(std::istream& in, int width) {
    const auto raw = get_raw(in, width);
    if (width == 8) return static_cast<std::int64_t>(raw);
    const auto sign_bit = std::uint64_t{1} << (8 * width - 1);
    if (raw & sign_bit) return static_cast<std::int64_t>(raw | ~((sign_bit << 1) - 1));
    return static_cast<std::int64_t>(raw);
}

int value_width(std::span<const std::int64_t> values) {
    std::int64_t lo = 0, hi = 0;
    for (auto v : values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (lo >= std::numeric_limits<std::int8_t>::min() && hi <= std::numeric_limits<std::int8_t>::max()) return 1;
    if (lo >= std::numeric_limits<std::int16_t>::min() && hi <= std::numeric_limits<std::int16_t>::max()) return 2;
    if (lo >= std::numeric_limits<std::int32_t>::min() && hi <= std::numeric_limits<std::int32_t>::max()) return 4;
    return 8;
}

}  // namespace

void write_grid(std::ostream& out, const ScaledDomain& domain, GridKind kind, std::span<const std::int64_t> values) {
    if (values.size() != domain.size()) throw GridFormatError("value count does not match the domain");
    const int width = value_width(values);
    out.write(kMagic.data(), kMagic.size());
    put<std::uint16_t>(out, kGridVersion);
    put<std::uint8_t>(out, static_cast<std::uint8_t>(kind));
    put<std::uint8_t>(out, static_cast<std::uint8_t>(width));
    put<std::uint32_t>(out, static_cast<std::uint32_t>(domain.scale()));
    const auto& vertices = domain.polygon().vertices();
    put<std::uint32_t>(out, static_cast<std::uint32_t>(vertices.size()));
    for (auto v : vertices) {
        put<std::int32_t>(out, static_cast<std::int32_t>(v.x));
        put<std::int32_t>(out, static_cast<std::int32_t>(v.y));
    }
    put<std::uint32_t>(out, static_cast<std::uint32_t>(domain.rows().size()));
    for (const auto& row : domain.rows()) {
        put<std::int32_t>(out, static_cast<std::int32_t>(row.y));
        put<std::int32_t>(out, static_cast<std::int32_t>(row.x_min));
        put<std::int32_t>(out, static_cast<std::int32_t>(row.x_max));
    }
    for (auto v : values) put<std::int64_t>(out, v, width);
    if (!out) throw GridIoError("write failed");
}

void write_grid(std::ostream& out, const SandState& state) {
    write_grid(out, state.domain(), GridKind::Heights, state.values());
}

void write_grid(std::ostream& out, const Odometer& odometer) {
    write_grid(out, odometer.domain(), GridKind::Odometer, odometer.values());
}

GridFile read_grid(std::istream& in) {
    std::array<char, 4> magic{};
    in.read(magic.data(), magic.size());
    if (!in || magic != kMagic) throw GridFormatError("not a TSPL grid file");
    const auto version = static_cast<std::uint16_t>(get_raw(in, 2));
    if (version != kGridVersion) throw GridFormatError("unsupported grid version " + std::to_string(version));
    const auto kind = static_cast<std::uint8_t>(get_raw(in, 1));
    if (kind > 1) throw GridFormatError("unknown grid kind");
    const auto width = static_cast<int>(get_raw(in, 1));
    if (width != 1 && width != 2 && width != 4 && width != 8) throw GridFormatError("bad value width");
    const auto scale = static_cast<std::int64_t>(get_raw(in, 4));
    const auto vertex_count = get_raw(in, 4);
    if (vertex_count < 3 || vertex_count > 1'000'000) throw GridFormatError("bad vertex count");
    std::vector<LatticePoint> vertices;
    for (std::uint64_t i = 0; i < vertex_count; ++i) {
        const auto x = get_signed(in, 4);
        const auto y = get_signed(in, 4);
        vertices.push_back({x, y});
    }
    GridFile file;
    try {
        file.domain = make_domain(validate_polygon(vertices), scale);
    } catch (const LatticeError& e) {
        throw GridFormatError(std::string("grid header describes an invalid domain: ") + e.what());
    }
    if (file.domain->polygon().vertices() != vertices) throw GridFormatError("polygon vertices are not counterclockwise");
    const auto row_count = get_raw(in, 4);
    if (row_count != file.domain->rows().size()) throw GridFormatError("row count does not match the polygon");
    for (const auto& row : file.domain->rows()) {
        const RowInterval stored{get_signed(in, 4), get_signed(in, 4), get_signed(in, 4)};
        if (!(stored == row)) throw GridFormatError("row intervals do not match the polygon");
    }
    file.kind = static_cast<GridKind>(kind);
    file.values.resize(file.domain->size());
    for (auto& v : file.values) v = get_signed(in, width);
    if (in.peek() != std::char_traits<char>::eof()) throw GridFormatError("trailing bytes after payload");
    return file;
}

void write_grid_file(const std::string& path, const SandState& state) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw GridIoError("cannot open " + path);
    write_grid(out, state);
}

void write_grid_file(const std::string& path, const Odometer& odometer) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw GridIoError("cannot open " + path);
    write_grid(out, odometer);
}

GridFile read_grid_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GridIoError("cannot open " + path);
    return read_grid(in);
}

void write_csv(std::ostream& out, const ScaledDomain& domain, std::span<const std::int64_t> values) {
    if (values.size() != domain.size()) throw GridFormatError("value count does not match the domain");
    out << "x,y,value\n";
    domain.for_each_site([&](std::size_t i, LatticePoint v) { out << v.x << ',' << v.y << ',' << values[i] << '\n'; });
}

std::vector<std::int64_t> read_csv(std::istream& in, const ScaledDomain& domain) {
    std::string line;
    if (!std::getline(in, line) || line != "x,y,value") throw GridFormatError("missing CSV header");
    std::vector<std::int64_t> values(domain.size(), 0);
    std::vector<bool> seen(domain.size(), false);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::int64_t x = 0, y = 0, value = 0;
        char c1 = 0, c2 = 0;
        if (!(row >> x >> c1 >> y >> c2 >> value) || c1 != ',' || c2 != ',')
            throw GridFormatError("malformed CSV row '" + line + "'");
        auto i = domain.find({x, y});
        if (!i) throw GridFormatError("CSV row outside the domain: '" + line + "'");
        if (seen[*i]) throw GridFormatError("duplicate CSV row: '" + line + "'");
        seen[*i] = true;
        values[*i] = value;
    }
    for (bool s : seen)
        if (!s) throw GridFormatError("CSV does not cover every site");
    return values;
}

}  // namespace tropsand
