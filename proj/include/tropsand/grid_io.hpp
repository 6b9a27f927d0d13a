#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropsand/sand_state.hpp"

namespace tropsand {

class GridFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The file could not be opened or written.
class GridIoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class GridKind : std::uint8_t { Heights = 0, Odometer = 1 };

/// Contents of a binary grid file.
struct GridFile {
    DomainPtr domain;
    GridKind kind = GridKind::Heights;
    std::vector<std::int64_t> values;

    SandState as_state() const { return SandState(domain, values); }
    Odometer as_odometer() const { return Odometer(domain, values); }
};

/// Binary layout, all integers little-endian:
///   "TSPL" | u16 version | u8 kind | u8 value width (1, 2, 4 or 8) | u32 N
///   | u32 vertex count | (i32 x, i32 y) per polygon vertex
///   | u32 row count | (i32 y, i32 x_min, i32 x_max) per row
///   | one signed value of the given width per site, row-major.
inline constexpr std::uint16_t kGridVersion = 1;

void write_grid(std::ostream& out, const ScaledDomain& domain, GridKind kind, std::span<const std::int64_t> values);
void write_grid(std::ostream& out, const SandState& state);
void write_grid(std::ostream& out, const Odometer& odometer);
GridFile read_grid(std::istream& in);

void write_grid_file(const std::string& path, const SandState& state);
void write_grid_file(const std::string& path, const Odometer& odometer);
GridFile read_grid_file(const std::string& path);

/// "x,y,value" rows in site order, with a header line.
void write_csv(std::ostream& out, const ScaledDomain& domain, std::span<const std::int64_t> values);
std::vector<std::int64_t> read_csv(std::istream& in, const ScaledDomain& domain);

}  // namespace tropsand
