#ifndef PLAP_IO_HPP
#define PLAP_IO_HPP

#include <filesystem>
#include <string>

#include "plap/grid_function.hpp"

namespace plap {

/// Shortest decimal string that round-trips the double exactly.
std::string double_to_string(double v);

/// Write-temp-then-rename so readers never observe partial files.
void atomic_write(const std::filesystem::path& path, const std::string& content);

/// CSV with one row per vertex: index coordinates then the value, in
/// row-major vertex order, full round-trip precision.
std::string grid_to_csv(const GridFunction& u);
void write_grid_csv(const std::filesystem::path& path, const GridFunction& u);
GridFunction read_grid_csv(const std::filesystem::path& path, DomainPtr domain);

}  // namespace plap

#endif
