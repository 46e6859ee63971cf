#pragma once

#include <filesystem>
#include <span>
#include <vector>

namespace cpnets {

/// Raw little-endian float64 streams, independent of host byte order.
void write_f64_file(const std::filesystem::path& path, std::span<const double> values);
std::vector<double> read_f64_file(const std::filesystem::path& path);

}  // namespace cpnets
